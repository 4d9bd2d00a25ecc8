#include "charasym/laurent.hpp"

#include <vector>

namespace charasym {

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Rational& c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

long LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw ArgumentError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw ArgumentError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Rational LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(long exponent, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial r = constant(1), base = *this;
  while (n) {
    if (n & 1U) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::apply_diagonal(const std::function<Rational(long)>& w) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e, c * w(e));
  return r;
}

LaurentPolynomial LaurentPolynomial::apply_euler(unsigned p) const {
  if (p == 0) return *this;
  return apply_diagonal([p](long m) {
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), Integer(m).get_mpz_t(), p);
    return Rational(v);
  });
}

void divide_dense_by_x_minus_one(std::vector<Integer>& c, unsigned n) {
  // Q(x)(x-1) = R(x) gives Q_k = -(R_0 + ... + R_k); the top partial sum must vanish.
  for (unsigned pass = 0; pass < n; ++pass) {
    if (c.size() < 2) throw InvariantViolation("polynomial not divisible by (x-1)");
    Integer acc = 0;
    for (size_t k = 0; k + 1 < c.size(); ++k) {
      acc += c[k];
      c[k] = -acc;
    }
    acc += c.back();
    if (acc != 0) throw InvariantViolation("polynomial not divisible by (x-1)");
    c.pop_back();
  }
}

LaurentPolynomial LaurentPolynomial::divided_by_x_minus_one(unsigned n) const {
  if (n == 0 || terms_.empty()) return *this;
  Integer den = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const long lo = min_exponent(), hi = max_exponent();
  std::vector<Integer> dense(static_cast<size_t>(hi - lo + 1));
  for (const auto& [e, c] : terms_) dense[static_cast<size_t>(e - lo)] = c.get_num() * (den / c.get_den());
  divide_dense_by_x_minus_one(dense, n);
  LaurentPolynomial r;
  for (size_t k = 0; k < dense.size(); ++k) {
    if (dense[k] == 0) continue;
    Rational v(dense[k], den);
    v.canonicalize();
    r.terms_.emplace_hint(r.terms_.end(), lo + static_cast<long>(k), v);
  }
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.get_str() + ")x^" + std::to_string(it->first);
  }
  return s;
}

Real LaurentPolynomial::magnitude_sum(const Complex& x) const {
  Real ax = abs(x);
  Real total(0L, x.precision());
  for (const auto& [e, c] : terms_) total += abs(Real(c, x.precision())) * charasym::pow(ax, e);
  return total;
}

}  // namespace charasym
