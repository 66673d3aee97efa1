#include "ppk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "ppk/errors.hpp"
#include "ppk/parallel.hpp"
#include "ppk/theta.hpp"

namespace ppk {

Natural legendre(Natural n, unsigned p) {
  Natural s = 0;
  while (n > 0) {
    n /= p;
    s += n;
  }
  return s;
}

ValuationTriple valuation(Natural n, Natural t, unsigned p) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  if (t > n) throw UsageError("valuation needs t <= n");
  ValuationTriple v;
  // Borrows when subtracting t from n: indices k >= 1 with n mod p^k < t mod p^k.
  Natural pk = 1;
  Natural top = n;
  while (top > 0) {
    top /= p;
    pk *= p;
    if (n % pk < t % pk) ++v.by_borrows;
  }
  v.by_digit_sums = (digit_sum(n - t, p) + digit_sum(t, p) - digit_sum(n, p)) / (p - 1);
  v.by_factorials = static_cast<unsigned>(legendre(n, p) - legendre(t, p) - legendre(n - t, p));
  return v;
}

std::vector<std::uint64_t> row_counts_bruteforce(unsigned p, Natural n) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  std::vector<std::uint64_t> h;
  const unsigned sn = digit_sum(n, p);
  for (Natural t = 0; t <= n; ++t) {
    const unsigned j = (digit_sum(n - t, p) + digit_sum(t, p) - sn) / (p - 1);
    if (j >= h.size()) h.resize(j + 1);
    ++h[j];
  }
  return h;
}

namespace {

std::optional<RowMismatch> check_row(unsigned p, Natural n, const std::vector<BlockPolynomial>& P) {
  const auto brute = row_counts_bruteforce(p, n);
  const RowPolynomial T = T_poly(n, p);
  const std::size_t len = std::max(brute.size(), T.coeffs.size());
  for (std::size_t j = 0; j < len; ++j) {
    const std::uint64_t b = j < brute.size() ? brute[j] : 0;
    if (b != T.coeff(j))
      return RowMismatch{n, static_cast<unsigned>(j), "T_poly", Rational(b), Rational(T.coeff(j))};
  }
  const Rational theta0(T.coeff(0));
  for (std::size_t j = 0; j < brute.size(); ++j) {
    if (j >= P.size()) throw UsageError("verify_rows: missing P_" + std::to_string(j));
    const Rational got = evaluate_P(P[j], n) * theta0;
    if (got != Rational(brute[j])) return RowMismatch{n, static_cast<unsigned>(j), "P_j", Rational(brute[j]), got};
  }
  return std::nullopt;
}

unsigned max_row_degree(unsigned p, Natural n_max) {
  // deg T_n <= number of base-p digits of n, minus one
  unsigned d = 0;
  for (Natural m = n_max > 0 ? n_max - 1 : 0; m >= p; m /= p) ++d;
  return d;
}

}  // namespace

RowScanReport verify_rows_with(unsigned p, Natural n_max, const std::vector<BlockPolynomial>& P, bool parallel) {
  RowScanReport rep;
  rep.p = p;
  rep.n_max = n_max;
  rep.max_degree = P.empty() ? 0 : static_cast<unsigned>(P.size() - 1);
  std::vector<std::optional<RowMismatch>> found(n_max);
  auto body = [&](std::size_t n) { found[n] = check_row(p, n, P); };
  if (parallel) {
    parallel_for(n_max, body);
  } else {
    for (Natural n = 0; n < n_max; ++n) body(n);
  }
  rep.rows_checked = n_max;
  for (auto& f : found)
    if (f) {
      rep.first_failure = std::move(f);
      break;
    }
  return rep;
}

RowScanReport verify_rows(unsigned p, Natural n_max) {
  std::vector<BlockPolynomial> P;
  for (unsigned j = 0; j <= max_row_degree(p, n_max); ++j) P.push_back(build_Pj(p, j));
  return verify_rows_with(p, n_max, P, true);
}

RowScanReport verify_rows_serial(unsigned p, Natural n_max) {
  std::vector<BlockPolynomial> P;
  for (unsigned j = 0; j <= max_row_degree(p, n_max); ++j) P.push_back(build_Pj_serial(p, j));
  return verify_rows_with(p, n_max, P, false);
}

std::string RowScanReport::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["p"] = p;
  doc["n_max"] = n_max;
  doc["rows_checked"] = rows_checked;
  doc["max_degree"] = max_degree;
  doc["pass"] = ok();
  if (first_failure) {
    doc["counterexample"] = {{"n", first_failure->n},
                             {"j", first_failure->j},
                             {"source", first_failure->source},
                             {"expected", first_failure->expected.str()},
                             {"actual", first_failure->actual.str()}};
  } else {
    doc["counterexample"] = nullptr;
  }
  return doc.dump(indent);
}

namespace {

inline unsigned nu2_column(Natural m, Natural t) {
  return static_cast<unsigned>(std::popcount(m) + std::popcount(t) - std::popcount(m + t));
}

}  // namespace

std::vector<Natural> column_histogram_serial(Natural t, unsigned j_max, Natural m_max) {
  std::vector<Natural> h(j_max + 1);
  for (Natural m = 0; m < m_max; ++m) {
    const unsigned j = nu2_column(m, t);
    if (j <= j_max) ++h[j];
  }
  return h;
}

std::vector<Natural> column_histogram(Natural t, unsigned j_max, Natural m_max) {
  const int workers = current_jobs();
  std::vector<std::vector<Natural>> parts(workers, std::vector<Natural>(j_max + 1));
  const long long count = static_cast<long long>(m_max);
#pragma omp parallel for schedule(static) num_threads(workers)
  for (long long m = 0; m < count; ++m) {
    const unsigned j = nu2_column(static_cast<Natural>(m), t);
    if (j <= j_max) ++parts[omp_get_thread_num()][j];
  }
  std::vector<Natural> h(j_max + 1);
  for (const auto& part : parts)
    for (unsigned j = 0; j <= j_max; ++j) h[j] += part[j];
  return h;
}

ColumnDensityEstimate column_density_estimate(Natural t, unsigned j, Natural m_max) {
  if (m_max == 0) throw UsageError("column_density_estimate needs m_max >= 1");
  ColumnDensityEstimate e;
  e.t = t;
  e.j = j;
  e.m_max = m_max;
  e.count = column_histogram(t, j, m_max)[j];
  e.estimate = Rational(e.count) / Rational(m_max);
  return e;
}

Rational column_prediction(const BlockPolynomial& Pj, Natural t) {
  if (Pj.p != 2) throw UsageError("column densities are implemented for p = 2");
  const Word tw = expand(t, 2);
  const Rational base = pow(Rational(2), -static_cast<long>(std::popcount(t)));
  return base * evaluate_P_with(Pj, [&](const Word& w) { return factor_count(tw, complement(w)); });
}

namespace {

ColumnCheckReport run_columns(Natural t_lo, Natural t_hi, unsigned j_max, Natural m_max, double tolerance) {
  if (m_max == 0) throw UsageError("column check needs m_max >= 1");
  ColumnCheckReport rep;
  rep.t_max = t_hi;
  rep.j_max = j_max;
  rep.m_max = m_max;
  rep.tolerance = tolerance;
  std::vector<BlockPolynomial> P;
  for (unsigned j = 0; j <= j_max; ++j) P.push_back(build_Pj(2, j));
  for (Natural t = t_lo; t <= t_hi; ++t) {
    const auto h = column_histogram(t, j_max, m_max);
    for (unsigned j = 0; j <= j_max; ++j) {
      ColumnCheckRow row;
      row.t = t;
      row.j = j;
      row.estimate = static_cast<double>(h[j]) / static_cast<double>(m_max);
      row.prediction = column_prediction(P[j], t);
      row.deviation = std::abs(row.estimate - row.prediction.to_double());
      rep.max_deviation = std::max(rep.max_deviation, row.deviation);
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace

ColumnCheckReport column_check(Natural t, unsigned j_max, Natural m_max, double tolerance) {
  return run_columns(t, t, j_max, m_max, tolerance);
}

ColumnCheckReport column_check_range(Natural t_max, unsigned j_max, Natural m_max, double tolerance) {
  return run_columns(0, t_max, j_max, m_max, tolerance);
}

std::string ColumnCheckReport::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["t_max"] = t_max;
  doc["j_max"] = j_max;
  doc["m_max"] = m_max;
  doc["tolerance"] = tolerance;
  doc["max_deviation"] = max_deviation;
  doc["pass"] = ok();
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    rows_json.push_back({{"t", r.t},
                         {"j", r.j},
                         {"estimate", r.estimate},
                         {"prediction", r.prediction.str()},
                         {"deviation", r.deviation},
                         {"pass", r.deviation < tolerance}});
  doc["rows"] = std::move(rows_json);
  return doc.dump(indent);
}

}  // namespace ppk
