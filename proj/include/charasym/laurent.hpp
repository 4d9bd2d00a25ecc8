#pragma once

#include <functional>
#include <map>
#include <string>

#include "charasym/errors.hpp"
#include "charasym/numeric.hpp"

namespace charasym {

// Exact Laurent polynomial: exponent -> nonzero rational coefficient.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(long exponent, const Rational& c = Rational(1));
  static LaurentPolynomial constant(const Rational& c) { return monomial(0, c); }

  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }
  long min_exponent() const;
  long max_exponent() const;
  Rational coefficient(long exponent) const;

  void add_term(long exponent, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  LaurentPolynomial shifted(long k) const;  // times x^k
  LaurentPolynomial pow(unsigned n) const;
  // coefficient of x^m multiplied by w(m); realizes any operator diagonal on monomials
  LaurentPolynomial apply_diagonal(const std::function<Rational(long)>& w) const;
  // (x d/dx)^p
  LaurentPolynomial apply_euler(unsigned p) const;
  // Exact quotient by (x-1)^n; throws InvariantViolation when not divisible.
  LaurentPolynomial divided_by_x_minus_one(unsigned n) const;

  std::string to_string() const;

  // Horner evaluation; x must be invertible when negative exponents occur.
  template <class T>
  T evaluate(const T& x) const;

  // Sum |c_m| |x|^m, used to gauge cancellation in approximate evaluation.
  Real magnitude_sum(const Complex& x) const;

 private:
  std::map<long, Rational> terms_;
};

template <class T>
T LaurentPolynomial::evaluate(const T& x) const {
  if (terms_.empty()) return lift<T>(0L, x);
  const long lo = min_exponent();
  T acc = lift<T>(0L, x);
  long prev = max_exponent();
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) acc = acc * ipow(x, prev - it->first);
    acc += lift<T>(it->second, x);
    prev = it->first;
    first = false;
  }
  acc = acc * ipow(x, prev - lo);
  if (lo != 0) acc = acc * ipow(x, lo);
  return acc;
}

// Divide a dense integer coefficient vector (ascending exponents) by (x-1)^n
// in place using n passes of running sums. Throws when not divisible.
void divide_dense_by_x_minus_one(std::vector<Integer>& coeffs, unsigned n);

}  // namespace charasym
