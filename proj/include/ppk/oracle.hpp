#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppk/rational.hpp"
#include "ppk/synth.hpp"
#include "ppk/words.hpp"

namespace ppk {

/// nu_p(C(n, t)) computed by three independent routes.
struct ValuationTriple {
  unsigned by_borrows = 0;
  unsigned by_digit_sums = 0;
  unsigned by_factorials = 0;

  bool agree() const { return by_borrows == by_digit_sums && by_digit_sums == by_factorials; }
};

/// UsageError if t > n.
ValuationTriple valuation(Natural n, Natural t, unsigned p);

/// nu_p(n!) = sum_{i>=1} floor(n / p^i)
Natural legendre(Natural n, unsigned p);

/// Histogram of nu_p(C(n, t)) over t = 0..n, trailing zeros trimmed.
std::vector<std::uint64_t> row_counts_bruteforce(unsigned p, Natural n);

struct RowMismatch {
  Natural n = 0;
  unsigned j = 0;
  std::string source;  ///< "T_poly" or "P_j"
  Rational expected;
  Rational actual;
};

struct RowScanReport {
  unsigned p = 2;
  Natural n_max = 0;
  Natural rows_checked = 0;
  unsigned max_degree = 0;
  std::optional<RowMismatch> first_failure;

  bool ok() const { return !first_failure.has_value(); }
  std::string to_json(int indent = 2) const;
};

/// For n < n_max: brute-force row counts against T_poly coefficients and
/// against evaluate_P(P_j, n) * theta_p(0, n) for every j <= deg T_n.
RowScanReport verify_rows(unsigned p, Natural n_max);
RowScanReport verify_rows_serial(unsigned p, Natural n_max);

/// Row check against a supplied list of P_0..P_d.
RowScanReport verify_rows_with(unsigned p, Natural n_max, const std::vector<BlockPolynomial>& P, bool parallel);

struct ColumnDensityEstimate {
  Natural t = 0;
  unsigned j = 0;
  Natural m_max = 0;
  Natural count = 0;
  Rational estimate;
};

/// |{m < m_max : nu_2(C(m+t, m)) = j}| / m_max
ColumnDensityEstimate column_density_estimate(Natural t, unsigned j, Natural m_max);

/// Counts of nu_2(C(m+t, m)) = j for j <= j_max over m < m_max.
std::vector<Natural> column_histogram(Natural t, unsigned j_max, Natural m_max);
std::vector<Natural> column_histogram_serial(Natural t, unsigned j_max, Natural m_max);

struct ColumnCheckRow {
  Natural t = 0;
  unsigned j = 0;
  double estimate = 0;
  Rational prediction;
  double deviation = 0;
};

struct ColumnCheckReport {
  Natural t_max = 0;
  unsigned j_max = 0;
  Natural m_max = 0;
  double tolerance = 5e-3;
  std::vector<ColumnCheckRow> rows;
  double max_deviation = 0;

  bool ok() const { return max_deviation < tolerance; }
  std::string to_json(int indent = 2) const;
};

/// Prediction 2^{-|t|_1} * P_j(|t|_{complement(w)}) for the density of
/// nu_2(C(m+t, m)) = j.
Rational column_prediction(const BlockPolynomial& Pj, Natural t);

/// Checks a single t.
ColumnCheckReport column_check(Natural t, unsigned j_max, Natural m_max, double tolerance = 5e-3);
/// Checks every t in [0, t_max].
ColumnCheckReport column_check_range(Natural t_max, unsigned j_max, Natural m_max, double tolerance = 5e-3);

}  // namespace ppk
