#include "ppk/poly.hpp"

#include <sstream>

#include "ppk/errors.hpp"

namespace ppk {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return PolyQ(std::move(d));
}

PolyQ PolyQ::scaled(const Rational& s) const {
  if (s.is_zero()) return {};
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading());
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(v));
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw DivisionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ{}, a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational inv_lead = Rational(1) / b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + b.c_.size() - 1] * inv_lead;
    if (q.is_zero()) continue;
    for (std::size_t i = 0; i < b.c_.size(); ++i) rem[k + i] -= q * b.c_[i];
    quo[k] = std::move(q);
  }
  rem.resize(b.c_.size() - 1);
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

std::string PolyQ::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.str();
      continue;
    }
    if (mag != Rational(1)) {
      if (mag.is_integer())
        os << mag.str();
      else
        os << mag.str() << "*";
    }
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = PolyQ::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<std::pair<PolyQ, unsigned>> squarefree_decomposition(const PolyQ& f) {
  std::vector<std::pair<PolyQ, unsigned>> out;
  if (f.degree() <= 0) return out;
  PolyQ fp = f.derivative();
  PolyQ a = gcd(f, fp);
  PolyQ b = PolyQ::divmod(f, a).first;
  PolyQ c = PolyQ::divmod(fp, a).first;
  PolyQ d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    PolyQ g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = PolyQ::divmod(b, g).first;
    c = PolyQ::divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace ppk
