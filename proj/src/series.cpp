#include "ppk/series.hpp"

#include "ppk/errors.hpp"

namespace ppk {

namespace {

void require_same_order(const SeriesQ& a, const SeriesQ& b) {
  if (a.order() != b.order())
    throw UsageError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
}

}  // namespace

SeriesQ::SeriesQ(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

SeriesQ SeriesQ::from_poly(const PolyQ& p, std::size_t order) {
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 0; k <= order && static_cast<int>(k) <= p.degree(); ++k) v[k] = p.coeffs()[k];
  return SeriesQ(std::move(v), order);
}

SeriesQ SeriesQ::one(std::size_t order) {
  SeriesQ s(order);
  s.c_[0] = 1;
  return s;
}

bool SeriesQ::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

SeriesQ& SeriesQ::operator+=(const SeriesQ& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

SeriesQ& SeriesQ::operator-=(const SeriesQ& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
  require_same_order(a, b);
  const std::size_t n = a.c_.size();
  SeriesQ out(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

SeriesQ SeriesQ::scaled(const Rational& s) const {
  SeriesQ out = *this;
  for (auto& x : out.c_) x *= s;
  return out;
}

std::string SeriesQ::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ", ";
    s += "\"" + c_[k].str() + "\"";
  }
  return s + "]";
}

SeriesQ series_arith(const SeriesQ& a, const SeriesQ& b, SeriesOp op) {
  return op == SeriesOp::add ? a + b : a * b;
}

SeriesQ series_div(const SeriesQ& a, const SeriesQ& b) {
  require_same_order(a, b);
  if (b[0].is_zero()) throw DivisionError("series division by a non-unit");
  const std::size_t n = a.order() + 1;
  const Rational inv0 = Rational(1) / b[0];
  SeriesQ q(a.order());
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = a[k];
    for (std::size_t i = 1; i <= k; ++i)
      if (!b[i].is_zero()) acc -= q[k - i] * b[i];
    q[k] = acc * inv0;
  }
  return q;
}

SeriesQ series_log(const SeriesQ& f) {
  if (f[0] != Rational(1)) throw DomainError("series_log needs constant term 1, got " + f[0].str());
  const std::size_t order = f.order();
  // log f = integral of f'/f; f' is only known to order-1.
  SeriesQ deriv(order);
  for (std::size_t k = 1; k <= order; ++k) deriv[k - 1] = f[k] * Rational(static_cast<long>(k));
  SeriesQ ratio = series_div(deriv, f);
  SeriesQ out(order);
  for (std::size_t k = 1; k <= order; ++k) out[k] = ratio[k - 1] / Rational(static_cast<long>(k));
  return out;
}

SeriesQ series_exp(const SeriesQ& g) {
  if (!g[0].is_zero()) throw DomainError("series_exp needs constant term 0, got " + g[0].str());
  const std::size_t order = g.order();
  SeriesQ out = SeriesQ::one(order);
  SeriesQ term = SeriesQ::one(order);
  // g^k vanishes below x^k, so k <= order suffices.
  for (std::size_t k = 1; k <= order; ++k) {
    term = (term * g).scaled(Rational(1) / Rational(static_cast<long>(k)));
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

SeriesQ series_pow(const SeriesQ& f, unsigned k) {
  SeriesQ out = SeriesQ::one(f.order());
  SeriesQ base = f;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

}  // namespace ppk
