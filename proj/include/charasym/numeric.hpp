#pragma once

// Scalar kinds used throughout the library:
//   Rational   exact (GMP mpq)
//   Real       MPFR float carrying its own precision
//   Complex    pair of Reals
//   Jet<T>     first-order dual number over any of the above
//
// Arithmetic between approximate values runs at the larger of the operand
// precisions, so nothing is silently downgraded.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace charasym {

using Integer = mpz_class;
using Rational = mpq_class;

// Thread-local default precision in bits. Initialized from the environment
// variable CHARASYM_PRECISION when present, otherwise 128.
int default_precision();
void set_default_precision(int bits);

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

// Canonicalized a/b (the gmpxx two-argument constructor does not reduce).
Rational ratio(const Integer& a, const Integer& b);

Rational rational_from_string(const std::string& s);  // "3", "-1/2", "0.25"
std::string to_string(const Rational& r);
Rational rational_pow(const Rational& base, long exponent);
Integer factorial(unsigned long n);

class Real {
 public:
  Real();
  Real(double v, int precision_bits = 0);
  Real(long v, int precision_bits = 0);
  Real(int v, int precision_bits = 0) : Real(static_cast<long>(v), precision_bits) {}
  Real(const Rational& v, int precision_bits = 0);
  Real(const Integer& v, int precision_bits = 0);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_string(const std::string& s, int precision_bits = 0);
  static Real pi(int precision_bits = 0);

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  Real with_precision(int bits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent2() const;  // binary exponent, LONG_MIN for zero
  std::string to_string(int digits = 0) const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real expm1(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);

class Complex {
 public:
  Complex() = default;
  Complex(const Real& re) : re_(re), im_(0L, re.precision()) {}
  Complex(const Real& re, const Real& im);
  Complex(const Rational& re, int precision_bits = 0);
  Complex(double re, double im = 0.0, int precision_bits = 0);
  Complex(long re) : Complex(Real(re)) {}
  Complex(int re) : Complex(Real(static_cast<long>(re))) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  int precision() const;
  Complex with_precision(int bits) const;

  static Complex i(int precision_bits = 0);
  static Complex polar(const Real& r, const Real& theta);
  static Complex expi_pi(const Rational& fraction, int precision_bits = 0);  // e^{i*pi*fraction}

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  std::string to_string(int digits = 0) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return Complex(-re_, -im_); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

 private:
  Real re_, im_;
};

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, long n);

// First-order jet a + b*eps with eps^2 = 0.
template <class T>
struct Jet {
  T val{};
  T der{};

  Jet() = default;
  Jet(const T& v) : val(v), der(v - v) {}
  Jet(const T& v, const T& d) : val(v), der(d) {}

  Jet& operator+=(const Jet& o) { val += o.val; der += o.der; return *this; }
  Jet& operator-=(const Jet& o) { val -= o.val; der -= o.der; return *this; }
  Jet& operator*=(const Jet& o) {
    T d = val * o.der + der * o.val;
    val *= o.val;
    der = std::move(d);
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    T v = val / o.val;
    der = (der - v * o.der) / o.val;
    val = std::move(v);
    return *this;
  }
  Jet operator-() const { return Jet(-val, -der); }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend bool operator==(const Jet& a, const Jet& b) { return a.val == b.val && a.der == b.der; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
};

template <class T>
Jet<T> exp(const Jet<T>& x) {
  T e = exp(x.val);
  return Jet<T>(e, e * x.der);
}
template <class T>
Jet<T> log(const Jet<T>& x) {
  return Jet<T>(log(x.val), x.der / x.val);
}

// ---- uniform access used by the generic algorithms ----------------------

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational lift(const Rational& r, const Rational&) { return r; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static int precision(const Rational&) { return 0; }
};

template <>
struct ScalarTraits<Real> {
  static Real lift(const Rational& r, const Real& like) { return Real(r, like.precision()); }
  static bool is_zero(const Real& x) { return x.is_zero(); }
  static int precision(const Real& x) { return x.precision(); }
};

template <>
struct ScalarTraits<Complex> {
  static Complex lift(const Rational& r, const Complex& like) { return Complex(r, like.precision()); }
  static bool is_zero(const Complex& x) { return x.is_zero(); }
  static int precision(const Complex& x) { return x.precision(); }
};

template <class T>
struct ScalarTraits<Jet<T>> {
  static Jet<T> lift(const Rational& r, const Jet<T>& like) {
    return Jet<T>(ScalarTraits<T>::lift(r, like.val));
  }
  static bool is_zero(const Jet<T>& x) { return ScalarTraits<T>::is_zero(x.val) && ScalarTraits<T>::is_zero(x.der); }
  static int precision(const Jet<T>& x) { return ScalarTraits<T>::precision(x.val); }
};

template <class T>
T lift(const Rational& r, const T& like) {
  return ScalarTraits<T>::lift(r, like);
}
template <class T>
T lift(long v, const T& like) {
  return ScalarTraits<T>::lift(Rational(v), like);
}
template <class T>
bool is_zero_scalar(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

// Integer power with negative exponents allowed (x must be invertible then).
template <class T>
T ipow(const T& x, long n) {
  T one = lift<T>(1L, x);
  if (n == 0) return one;
  bool inv = n < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  T result = one, base = x;
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return inv ? one / result : result;
}

// Conversions to Complex for reporting and mixed pipelines.
Complex to_complex(const Rational& r, int precision_bits = 0);
inline Complex to_complex(const Complex& z, int = 0) { return z; }
inline Complex to_complex(const Real& x, int = 0) { return Complex(x); }

// A pivot size used by elimination; larger is better, zero means unusable.
Real pivot_size(const Complex& z);
Real pivot_size(const Rational& r);
template <class T>
Real pivot_size(const Jet<T>& z) {
  return pivot_size(z.val);
}

}  // namespace charasym
