#include "charasym/numeric.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <memory>

#include "charasym/errors.hpp"

namespace charasym {

namespace {

int initial_precision() {
  if (const char* env = std::getenv("CHARASYM_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 53 && v <= (1L << 20)) return static_cast<int>(v);
  }
  return 128;
}

thread_local int g_precision = initial_precision();

int resolve(int bits) { return bits > 0 ? bits : g_precision; }

}  // namespace

int default_precision() { return g_precision; }

void set_default_precision(int bits) {
  if (bits < 53) throw ArgumentError("precision must be at least 53 bits");
  g_precision = bits;
}

PrecisionScope::PrecisionScope(int bits) : saved_(g_precision) { set_default_precision(bits); }
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Rational ratio(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("zero denominator");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw ArgumentError("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos) {
    bool neg = s[0] == '-';
    std::string digits = s.substr(neg ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot), frac = digits.substr(dot + 1);
    if (whole.empty()) whole = "0";
    Integer num, den = 1;
    if (num.set_str(whole + frac, 10) != 0) throw ArgumentError("bad decimal literal: " + text);
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw ArgumentError("bad rational literal: " + text);
  if (r.get_den() == 0) throw ArgumentError("zero denominator in literal: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (sgn(base) == 0) {
    if (exponent < 0) throw DomainError("zero raised to a negative power");
    return Rational(0);
  }
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(d, n) : Rational(n, d);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// ---- Real ---------------------------------------------------------------

Real::Real() {
  mpfr_init2(v_, g_precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, int bits) {
  mpfr_init2(v_, resolve(bits));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(long v, int bits) {
  mpfr_init2(v_, resolve(bits));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& v, int bits) {
  mpfr_init2(v_, resolve(bits));
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& v, int bits) {
  mpfr_init2(v_, resolve(bits));
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_string(const std::string& s, int bits) {
  Real r(0L, bits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    // mpfr returns nonzero for inexact as well; reject only unparsable input
    Real check(0L, bits);
    char* end = nullptr;
    mpfr_strtofr(check.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (end == s.c_str() || *end != '\0') throw ArgumentError("bad real literal: " + s);
  }
  return r;
}

Real Real::pi(int bits) {
  Real r(0L, bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::with_precision(int bits) const {
  Real r(0L, bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::exponent2() const {
  if (mpfr_zero_p(v_)) return LONG_MIN;
  return mpfr_get_exp(v_);
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Rg", digits, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

namespace {
inline mpfr_prec_t joint(const Real& a, const Real& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}
}  // namespace

Real& Real::operator+=(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(0L, static_cast<int>(joint(a, b)));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(0L, static_cast<int>(joint(a, b)));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(0L, static_cast<int>(joint(a, b)));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(0L, static_cast<int>(joint(a, b)));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

#define CHARASYM_UNARY(name, fn)              \
  Real name(const Real& x) {                  \
    Real r(0L, x.precision());                \
    fn(r.raw(), x.raw(), MPFR_RNDN);          \
    return r;                                 \
  }
CHARASYM_UNARY(sqrt, mpfr_sqrt)
CHARASYM_UNARY(exp, mpfr_exp)
CHARASYM_UNARY(log, mpfr_log)
CHARASYM_UNARY(log1p, mpfr_log1p)
CHARASYM_UNARY(expm1, mpfr_expm1)
CHARASYM_UNARY(sin, mpfr_sin)
CHARASYM_UNARY(cos, mpfr_cos)
CHARASYM_UNARY(abs, mpfr_abs)
#undef CHARASYM_UNARY

Real floor(const Real& x) {
  Real r(0L, x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(0L, static_cast<int>(joint(y, x)));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(0L, x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

// ---- Complex ------------------------------------------------------------

Complex::Complex(const Real& re, const Real& im) : re_(re), im_(im) {
  int p = std::max(re.precision(), im.precision());
  if (re_.precision() < p) re_ = re_.with_precision(p);
  if (im_.precision() < p) im_ = im_.with_precision(p);
}

Complex::Complex(const Rational& re, int bits) : re_(re, resolve(bits)), im_(0L, resolve(bits)) {}

Complex::Complex(double re, double im, int bits) : re_(re, resolve(bits)), im_(im, resolve(bits)) {}

int Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

Complex Complex::with_precision(int bits) const { return Complex(re_.with_precision(bits), im_.with_precision(bits)); }

Complex Complex::i(int bits) { return Complex(Real(0L, resolve(bits)), Real(1L, resolve(bits))); }

Complex Complex::polar(const Real& r, const Real& theta) { return Complex(r * cos(theta), r * sin(theta)); }

Complex Complex::expi_pi(const Rational& fraction, int bits) {
  Real theta = Real::pi(resolve(bits)) * Real(fraction, resolve(bits));
  return Complex(cos(theta), sin(theta));
}

std::string Complex::to_string(int digits) const {
  if (im_.is_zero()) return re_.to_string(digits);
  std::string im = im_.to_string(digits);
  if (im[0] == '-') return re_.to_string(digits) + im + "i";
  return re_.to_string(digits) + "+" + im + "i";
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  Real i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  // Smith's scaling keeps the intermediate magnitudes bounded.
  if (o.is_zero()) {
    Real nan(0L, precision());
    mpfr_set_nan(nan.raw());
    re_ = nan;
    im_ = nan;
    return *this;
  }
  if (abs(o.re_) >= abs(o.im_)) {
    Real t = o.im_ / o.re_;
    Real d = o.re_ + o.im_ * t;
    Real r = (re_ + im_ * t) / d;
    Real i = (im_ - re_ * t) / d;
    re_ = std::move(r);
    im_ = std::move(i);
  } else {
    Real t = o.re_ / o.im_;
    Real d = o.re_ * t + o.im_;
    Real r = (re_ * t + im_) / d;
    Real i = (im_ * t - re_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
  }
  return *this;
}

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }
Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }
Real abs(const Complex& z) {
  Real r(0L, z.precision());
  mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
  return r;
}
Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  return Complex(m * cos(z.im()), m * sin(z.im()));
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("logarithm of zero");
  return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  Real m = sqrt(abs(z));
  Real half_arg = arg(z) / Real(2L, z.precision());
  return Complex(m * cos(half_arg), m * sin(half_arg));
}

Complex pow(const Complex& z, long n) { return ipow(z, n); }

Complex to_complex(const Rational& r, int bits) { return Complex(r, bits); }

Real pivot_size(const Complex& z) { return abs(z.re()) + abs(z.im()); }

Real pivot_size(const Rational& r) { return Real(Rational(abs(r)), 64); }

}  // namespace charasym
