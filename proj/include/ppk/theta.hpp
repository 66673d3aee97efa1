#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppk/poly.hpp"
#include "ppk/words.hpp"

namespace ppk {

/// T_n(x) = sum_j theta_p(j, n) x^j with its (nonnegative integer) coefficients.
struct RowPolynomial {
  Natural n = 0;
  unsigned p = 2;
  std::vector<std::uint64_t> coeffs;  ///< index = j, no trailing zeros

  unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
  std::uint64_t coeff(std::size_t j) const { return j < coeffs.size() ? coeffs[j] : 0; }
  PolyQ to_polyq() const;
  /// "2 + x + 2x^2 + 4x^3"
  std::string str() const;
};

/// Row generating polynomial via the digit recurrence; results are cached.
RowPolynomial T_poly(Natural n, unsigned p);

std::uint64_t theta(unsigned p, unsigned j, Natural n);

/// T_n divided by its constant term.
PolyQ Tbar(Natural n, unsigned p);
PolyQ Tbar(const Word& w);

/// psi_p(j, n); zero for negative arguments.
std::uint64_t psi(unsigned p, long long j, long long n);

/// theta-tilde values for 0 <= k <= k_max, 0 <= n <= n_max, computed by the
/// nu-free recurrence. Indexed [k][n].
class TildeTable {
 public:
  TildeTable(unsigned p, unsigned k_max, Natural n_max);
  unsigned p() const { return p_; }
  unsigned k_max() const { return k_max_; }
  Natural n_max() const { return n_max_; }
  std::uint64_t at(long long k, long long n) const;
  const std::vector<std::vector<std::uint64_t>>& rows() const { return t_; }

 private:
  unsigned p_;
  unsigned k_max_;
  Natural n_max_;
  std::vector<std::vector<std::uint64_t>> t_;
};

std::uint64_t tilde_theta(unsigned p, long long k, long long n);

/// Coefficients [x^k z^n] of prod_{i>=0} (1 + x z^{p^i} + ... + x^{p-1} z^{(p-1)p^i})^2,
/// for k <= x_order and n <= z_order. Indexed [k][n].
std::vector<std::vector<std::uint64_t>> tilde_product_gf(unsigned p, unsigned x_order, unsigned z_order);

/// Table layout with rows k and columns n, blank cells for zeros.
std::string format_tilde_table(const std::vector<std::vector<std::uint64_t>>& rows);

}  // namespace ppk
