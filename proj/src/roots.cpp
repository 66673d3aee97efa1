#include "ppk/roots.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ppk/errors.hpp"

namespace ppk {

namespace {

std::pair<Complex, Complex> horner_with_derivative(const std::vector<Complex>& c, Complex z) {
  Complex value = c.back();
  Complex deriv = 0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + c[k];
  }
  return {value, deriv};
}

}  // namespace

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, const RootOptions& opt) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t n = c.size() - 1;
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;
  if (n == 1) return {-c[0]};

  // Cauchy bound for the starting circle.
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius = std::min<long double>(1 + radius, 1e6L);
  long double lower = std::pow(std::abs(c[0]), 1.0L / n);
  long double start = std::max<long double>(lower, 1e-3L);
  start = std::min(start, radius);
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double angle = 2 * std::numbers::pi_v<long double> * i / n + 0.4L;
    z[i] = std::polar(start, angle);
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      auto [value, deriv] = horner_with_derivative(c, z[i]);
      if (value == Complex(0)) {
        done[i] = true;
        continue;
      }
      const Complex ratio = value / deriv;
      Complex repulsion = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) repulsion += Complex(1) / (z[i] - z[k]);
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[i] -= step;
      if (std::abs(step) <= opt.tolerance * std::max<long double>(1, std::abs(z[i])))
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done) {
      // A couple of Newton polishing steps at extended precision.
      for (auto& r : z)
        for (int k = 0; k < 2; ++k) {
          auto [v, d] = horner_with_derivative(c, r);
          if (d != Complex(0)) r -= v / d;
        }
      return z;
    }
  }
  std::ostringstream os;
  os << "Aberth iteration did not converge after " << opt.max_iterations << " iterations (degree " << n
     << "); current estimates:";
  for (auto& r : z) os << " " << r;
  throw NumericError(os.str());
}

std::vector<RootWithMultiplicity> roots_with_multiplicity(const PolyQ& f, const RootOptions& opt) {
  std::vector<RootWithMultiplicity> out;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    std::vector<Complex> c;
    for (const auto& q : factor.coeffs()) c.emplace_back(q.to_long_double(), 0);
    for (const Complex& r : aberth_roots(c, opt)) out.push_back({r, mult});
  }
  return out;
}

}  // namespace ppk

namespace ppk {

namespace {

int sign_at(const PolyQ& f, const Rational& x) { return f.eval(x).sign(); }

unsigned sign_changes(const std::vector<PolyQ>& seq, const Rational& x) {
  unsigned changes = 0;
  int last = 0;
  for (const auto& g : seq) {
    const int s = sign_at(g, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

PolyQ reversed(const PolyQ& f) {
  std::vector<Rational> c(f.coeffs().rbegin(), f.coeffs().rend());
  return PolyQ(std::move(c));
}

}  // namespace

unsigned sturm_count(const PolyQ& f, const Rational& a, const Rational& b) {
  if (f.degree() <= 0) return 0;
  std::vector<PolyQ> seq{f, f.derivative()};
  while (seq.back().degree() > 0) {
    PolyQ r = PolyQ::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(PolyQ({Rational(0)}) - r);
  }
  const unsigned va = sign_changes(seq, a);
  const unsigned vb = sign_changes(seq, b);
  return va > vb ? va - vb : 0;
}

unsigned unit_circle_root_count(const PolyQ& f) {
  if (f.degree() <= 0) return 0;
  PolyQ g = f;
  // Roots at 0 never lie on the circle.
  std::size_t low = 0;
  while (g.coeff(low).is_zero()) ++low;
  if (low > 0) g = PolyQ(std::vector<Rational>(g.coeffs().begin() + static_cast<long>(low), g.coeffs().end()));
  PolyQ h = gcd(g, reversed(g));
  if (h.degree() <= 0) return 0;
  h = PolyQ::divmod(h, gcd(h, h.derivative())).first.monic();

  unsigned count = 0;
  for (long s : {1L, -1L}) {
    const PolyQ lin({Rational(-s), Rational(1)});
    if (h.eval(Rational(s)).is_zero()) {
      h = PolyQ::divmod(h, lin).first;
      ++count;
    }
  }
  if (h.degree() <= 0) return count;
  if (h.degree() % 2 != 0 || !(reversed(h).monic() == h.monic())) throw NumericError("reciprocal part is not palindromic");

  // h(x) = x^m R(x + 1/x), with x^k + x^{-k} = V_k(y), V_{k+1} = y V_k - V_{k-1}.
  const std::size_t m = static_cast<std::size_t>(h.degree()) / 2;
  const PolyQ y({Rational(0), Rational(1)});
  PolyQ v_prev({Rational(2)});
  PolyQ v = y;
  PolyQ R({h.coeff(m)});
  for (std::size_t k = 1; k <= m; ++k) {
    R += v.scaled(h.coeff(m + k));
    PolyQ next = y * v - v_prev;
    v_prev = std::move(v);
    v = std::move(next);
  }
  // R(2) != 0 and R(-2) != 0 since x = 1 and x = -1 were removed.
  return count + 2 * sturm_count(R, Rational(-2), Rational(2));
}

}  // namespace ppk
