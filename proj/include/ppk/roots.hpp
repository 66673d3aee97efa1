#pragma once

#include <complex>
#include <vector>

#include "ppk/poly.hpp"

namespace ppk {

using Complex = std::complex<long double>;

struct RootOptions {
  long double tolerance = 1e-12L;  ///< relative step size at convergence
  int max_iterations = 2000;
};

/// All complex roots of a polynomial with simple roots by Aberth iteration.
/// Coefficients are given lowest degree first; NumericError on failure.
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, const RootOptions& opt = {});

struct RootWithMultiplicity {
  Complex root;
  unsigned multiplicity;
};

/// Roots of f with multiplicities: exact square-free split, then Aberth on
/// each square-free factor.
std::vector<RootWithMultiplicity> roots_with_multiplicity(const PolyQ& f, const RootOptions& opt = {});

/// Distinct real roots of f in the half-open interval (a, b], by a Sturm
/// sequence in exact arithmetic.
unsigned sturm_count(const PolyQ& f, const Rational& a, const Rational& b);

/// Distinct roots of f on |x| = 1, exactly. A root on the circle is also a
/// root of the reversed polynomial, so the count runs on gcd(f, f*) mapped
/// through y = x + 1/x onto real roots in [-2, 2].
unsigned unit_circle_root_count(const PolyQ& f);

}  // namespace ppk
