#include "ppk/theta.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <iomanip>

#include "ppk/errors.hpp"

namespace ppk {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

// a*f + b*x^s*g
Coeffs combine(std::uint64_t a, const Coeffs& f, std::uint64_t b, unsigned s, const Coeffs& g) {
  Coeffs out(std::max(f.size(), g.size() + s), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += a * f[i];
  if (b)
    for (std::size_t i = 0; i < g.size(); ++i) out[i + s] += b * g[i];
  trim(out);
  return out;
}

// (T_n, T_{n-1}) for n >= 1 by descending through the digits of n.
std::pair<Coeffs, Coeffs> row_pair(Natural n, unsigned p) {
  if (n < p) return {Coeffs{n + 1}, Coeffs{n}};
  const Natural m = n / p;
  const unsigned a = static_cast<unsigned>(n % p);
  auto [tm, tm1] = row_pair(m, p);
  const unsigned shift = p_valuation(m, p) + 1;
  Coeffs tn = combine(a + 1, tm, p - a - 1, shift, tm1);
  Coeffs tn1;
  if (a >= 1) {
    tn1 = combine(a, tm, p - a, shift, tm1);
  } else {
    // n - 1 = p(m-1) + (p-1)
    tn1 = combine(p, tm1, 0, 0, {});
  }
  return {std::move(tn), std::move(tn1)};
}

class RowCache {
 public:
  static RowCache& instance() {
    static RowCache cache;
    return cache;
  }

  RowPolynomial get(Natural n, unsigned p) {
    const Key key{p, n};
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    RowPolynomial r{n, p, n == 0 ? Coeffs{1} : row_pair(n, p).first};
    std::unique_lock lock(mu_);
    if (map_.size() < kMaxEntries) map_.emplace(key, r);
    return r;
  }

 private:
  using Key = std::pair<unsigned, Natural>;
  static constexpr std::size_t kMaxEntries = 1u << 16;
  std::shared_mutex mu_;
  std::map<Key, RowPolynomial> map_;
};

}  // namespace

PolyQ RowPolynomial::to_polyq() const {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.emplace_back(static_cast<unsigned long>(c));
  return PolyQ(std::move(v));
}

std::string RowPolynomial::str() const { return to_polyq().str(); }

RowPolynomial T_poly(Natural n, unsigned p) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  return RowCache::instance().get(n, p);
}

std::uint64_t theta(unsigned p, unsigned j, Natural n) { return T_poly(n, p).coeff(j); }

PolyQ Tbar(Natural n, unsigned p) {
  const RowPolynomial t = T_poly(n, p);
  return t.to_polyq().scaled(Rational(1) / Rational(static_cast<unsigned long>(t.coeffs[0])));
}

PolyQ Tbar(const Word& w) { return Tbar(value(w), w.base()); }

std::uint64_t psi(unsigned p, long long j, long long n) {
  if (j < 0 || n < 0) return 0;
  const unsigned v = p_valuation(static_cast<Natural>(n) + 1, p);
  if (static_cast<unsigned long long>(j) < v) return 0;
  return theta(p, static_cast<unsigned>(j - v), static_cast<Natural>(n));
}

TildeTable::TildeTable(unsigned p, unsigned k_max, Natural n_max)
    : p_(p), k_max_(k_max), n_max_(n_max), t_(k_max + 1, std::vector<std::uint64_t>(n_max + 1, 0)) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  t_[0][0] = 1;
  for (Natural big = 1; big <= n_max; ++big) {
    const Natural n = big / p;
    const unsigned a = static_cast<unsigned>(big % p);
    for (unsigned k = 0; k <= k_max; ++k) {
      // Source values always have smaller n, so they are already filled.
      std::uint64_t v = (a + 1) * at(static_cast<long long>(k) - a, static_cast<long long>(n));
      v += (p - a - 1) * at(static_cast<long long>(k) - p - a, static_cast<long long>(n) - 1);
      t_[k][big] = v;
    }
  }
}

std::uint64_t TildeTable::at(long long k, long long n) const {
  if (k < 0 || n < 0) return 0;
  if (k > static_cast<long long>(k_max_) || n > static_cast<long long>(n_max_))
    throw UsageError("tilde table index out of range");
  return t_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

std::uint64_t tilde_theta(unsigned p, long long k, long long n) {
  if (k < 0 || n < 0) return 0;
  return TildeTable(p, static_cast<unsigned>(k), static_cast<Natural>(n)).at(k, n);
}

std::vector<std::vector<std::uint64_t>> tilde_product_gf(unsigned p, unsigned x_order, unsigned z_order) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  std::vector<std::vector<std::uint64_t>> acc(x_order + 1, std::vector<std::uint64_t>(z_order + 1, 0));
  acc[0][0] = 1;
  for (Natural step = 1; step <= z_order; step *= p) {
    for (int twice = 0; twice < 2; ++twice) {
      std::vector<std::vector<std::uint64_t>> next(x_order + 1, std::vector<std::uint64_t>(z_order + 1, 0));
      for (unsigned k = 0; k <= x_order; ++k)
        for (unsigned n = 0; n <= z_order; ++n) {
          if (!acc[k][n]) continue;
          for (unsigned d = 0; d < p; ++d) {
            const Natural nn = n + d * step;
            if (k + d > x_order || nn > z_order) break;
            next[k + d][nn] += acc[k][n];
          }
        }
      acc = std::move(next);
    }
  }
  return acc;
}

std::string format_tilde_table(const std::vector<std::vector<std::uint64_t>>& rows) {
  std::ostringstream os;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  os << "  k\\n |";
  for (std::size_t n = 0; n < cols; ++n) os << std::setw(4) << n;
  os << "\n";
  os << std::string(7 + 4 * cols, '-') << "\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::string line;
    std::ostringstream row;
    row << std::setw(5) << k << " |";
    for (auto v : rows[k]) {
      if (v)
        row << std::setw(4) << v;
      else
        row << "    ";
    }
    line = row.str();
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

}  // namespace ppk
