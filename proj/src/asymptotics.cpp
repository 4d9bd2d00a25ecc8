#include "charasym/asymptotics.hpp"

#include <algorithm>
#include <sstream>

#include "charasym/errors.hpp"
#include "charasym/residue.hpp"

namespace charasym {

namespace {

Integer floor_rational(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Complex cx(const Rational& r, int bits) { return Complex(r, bits); }

Complex xlogx_minus_x(const Complex& u) { return u * log(u) - u; }

bool is_real_axis(const Complex& w) { return w.im().is_zero(); }

}  // namespace

Profile::Profile(std::vector<std::pair<Rational, Rational>> breakpoints) : points_(std::move(breakpoints)) {
  if (points_.size() < 2) throw ArgumentError("a profile needs at least two breakpoints");
  if (points_.front().first != 0 || points_.back().first != 1) throw ArgumentError("profile breakpoints must span [0, 1]");
  for (size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].first <= points_[i - 1].first) throw ArgumentError("profile breakpoints must increase");
    if (points_[i].second > points_[i - 1].second) throw ArgumentError("profile must be weakly decreasing");
  }
}

Profile Profile::zero() { return Profile({{0, 0}, {1, 0}}); }
Profile Profile::linear(const Rational& alpha) {
  if (alpha < 0) throw ArgumentError("linear profile needs alpha >= 0");
  return Profile({{0, alpha}, {1, 0}});
}
Profile Profile::halfstair() { return Profile({{0, ratio(1, 2)}, {1, 0}}); }
Profile Profile::loop() { return Profile({{0, ratio(1, 4)}, {1, ratio(-1, 4)}}); }

Profile Profile::parse(const std::string& spec) {
  if (spec == "zero") return zero();
  if (spec == "halfstair") return halfstair();
  if (spec == "loop") return loop();
  if (spec.rfind("linear:", 0) == 0) return linear(rational_from_string(spec.substr(7)));
  std::vector<std::pair<Rational, Rational>> pts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ArgumentError("profile breakpoint must be t:f, got '" + item + "'");
    pts.emplace_back(rational_from_string(item.substr(0, colon)), rational_from_string(item.substr(colon + 1)));
  }
  return Profile(std::move(pts));
}

Rational Profile::value(const Rational& t) const {
  if (t < 0 || t > 1) throw ArgumentError("profile argument outside [0, 1]");
  for (size_t i = 1; i < points_.size(); ++i) {
    const auto& [t0, f0] = points_[i - 1];
    const auto& [t1, f1] = points_[i];
    if (t <= t1) return f0 + (f1 - f0) * (t - t0) / (t1 - t0);
  }
  return points_.back().second;
}

Rational Profile::integral(const Rational& upto) const {
  if (upto < 0 || upto > 1) throw ArgumentError("integration bound outside [0, 1]");
  Rational acc = 0;
  for (size_t i = 1; i < points_.size(); ++i) {
    const auto& [t0, f0] = points_[i - 1];
    const auto& [t1, f1] = points_[i];
    if (upto <= t0) break;
    Rational u = upto < t1 ? upto : t1;
    Rational fu = f0 + (f1 - f0) * (u - t0) / (t1 - t0);
    acc += (u - t0) * (f0 + fu) / 2;
  }
  return acc;
}

Rational Profile::mean() const { return integral(1); }

Rational Profile::fluctuation() const {
  Rational sq = 0, tf = 0;
  for (size_t i = 1; i < points_.size(); ++i) {
    const auto& [t0, f0] = points_[i - 1];
    const auto& [t1, f1] = points_[i];
    Rational d = t1 - t0, tm = (t0 + t1) / 2, fm = (f0 + f1) / 2;
    sq += d * (f0 * f0 + f0 * f1 + f1 * f1) / 3;
    tf += d * (t0 * f0 + 4 * tm * fm + t1 * f1) / 6;  // Simpson is exact on quadratics
  }
  Rational e = mean();
  return sq - e * e + e - 2 * tf;
}

std::pair<Rational, Rational> Profile::support() const {
  Rational lo = points_[0].second + 1, hi = lo;
  for (const auto& [t, f] : points_) {
    Rational g = f + 1 - t;
    if (g < lo) lo = g;
    if (g > hi) hi = g;
  }
  return {lo, hi};
}

std::string Profile::to_string() const {
  std::string s;
  for (const auto& [t, f] : points_) {
    if (!s.empty()) s += ";";
    s += charasym::to_string(t) + ":" + charasym::to_string(f);
  }
  return s;
}

Complex profile_F(const Profile& f, const Complex& w, int order) {
  if (order < 0 || order > 3) throw ArgumentError("F derivative order must be 0..3");
  const int bits = w.precision();
  const auto& pts = f.breakpoints();
  Complex acc(0L);
  acc = acc.with_precision(bits);
  for (size_t i = 1; i < pts.size(); ++i) {
    const auto& [t0, f0] = pts[i - 1];
    const auto& [t1, f1] = pts[i];
    Complex u0 = w - cx(f0 + 1 - t0, bits);
    Complex u1 = w - cx(f1 + 1 - t1, bits);
    if (u0.is_zero() || u1.is_zero() ||
        (is_real_axis(w) && (u0.re().sign() != u1.re().sign())))
      throw BranchError("w = " + w.to_string(20) + " lies in the support of the profile");
    Rational slope = (f1 - f0) / (t1 - t0);
    Rational one_minus = 1 - slope;
    if (sgn(one_minus) == 0) {
      Complex d = cx(t1 - t0, bits);
      switch (order) {
        case 0: acc += d * log(u0); break;
        case 1: acc += d / u0; break;
        case 2: acc -= d / (u0 * u0); break;
        default: acc += d * Complex(2L) / (u0 * u0 * u0); break;
      }
      continue;
    }
    Complex c = cx(1 / one_minus, bits);
    switch (order) {
      case 0: acc += c * (xlogx_minus_x(u1) - xlogx_minus_x(u0)); break;
      case 1: acc += c * (log(u1) - log(u0)); break;
      case 2: acc += c * (Complex(1L) / u1 - Complex(1L) / u0); break;
      default: acc += c * (Complex(1L) / (u0 * u0) - Complex(1L) / (u1 * u1)); break;
    }
  }
  return acc;
}

namespace {

Real real_F1(const Profile& f, const Real& w) { return profile_F(f, Complex(w), 1).re(); }

Complex newton(const Profile& f, const Complex& y, Complex w, int max_iter, bool& ok) {
  const int bits = y.precision();
  Real tol = pow(Real(2L, bits), -(bits - 8));
  ok = false;
  for (int it = 0; it < max_iter; ++it) {
    Complex r = profile_F(f, w, 1) - y;
    Complex step = r / profile_F(f, w, 2);
    w -= step;
    if (abs(step) <= tol * (Real(1L, bits) + abs(w))) {
      ok = true;
      return w;
    }
  }
  return w;
}

Real real_critical_point(const Profile& f, const Real& y) {
  const int bits = y.precision();
  auto [lo, hi] = f.support();
  Real a, b;  // F'(a) - y and F'(b) - y have opposite signs
  if (y.sign() > 0) {
    Real edge(hi, bits);
    Real d(1L, bits);
    while (real_F1(f, edge + d) > y) d *= Real(2L, bits);
    b = edge + d;
    Real e = d;
    while (real_F1(f, edge + e) < y) {
      e /= Real(2L, bits);
      if (e.exponent2() < -bits) throw ConvergenceError("critical point too close to the support edge");
    }
    a = edge + e;
  } else {
    Real edge(lo, bits);
    Real d(1L, bits);
    while (real_F1(f, edge - d) < y) d *= Real(2L, bits);
    b = edge - d;
    Real e = d;
    while (real_F1(f, edge - e) > y) {
      e /= Real(2L, bits);
      if (e.exponent2() < -bits) throw ConvergenceError("critical point too close to the support edge");
    }
    a = edge - e;
  }
  // F' is decreasing on each real branch
  for (int it = 0; it < 60; ++it) {
    Real m = (a + b) / Real(2L, bits);
    Real v = real_F1(f, m) - y;
    bool same_as_a = (real_F1(f, a) - y).sign() == v.sign();
    (same_as_a ? a : b) = m;
  }
  bool ok = false;
  Complex w = newton(f, Complex(y), Complex((a + b) / Real(2L, bits)), 100, ok);
  if (!ok) throw ConvergenceError("Newton iteration for the real critical point did not converge");
  return w.re();
}

}  // namespace

Complex critical_point(const Profile& f, const Complex& y) {
  if (y.is_zero()) throw DomainError("y = 0 has no critical point");
  const int bits = y.precision();
  if (y.im().is_zero()) return Complex(real_critical_point(f, y.re()));
  Real start = y.re().is_zero() ? abs(y) : y.re();
  Complex w(real_critical_point(f, start));
  Complex y0(start);
  // continuation along the segment from y0 to y, halving the step on failure
  Real done(0L, bits), step(ratio(1, 32), bits);
  const Real one(1L, bits);
  while (done < one) {
    Real next = done + step;
    if (next > one) next = one;
    Complex yt = y0 + (y - y0) * Complex(next);
    bool ok = false;
    Complex cand = newton(f, yt, w, 60, ok);
    if (!ok || !cand.is_finite()) {
      step /= Real(2L, bits);
      if (step.exponent2() < -40) throw ConvergenceError("continuation of the critical point to y = " + y.to_string(20) + " failed");
      continue;
    }
    w = cand;
    done = next;
  }
  return w;
}

Complex reduce_imaginary(const Complex& z) {
  const int bits = z.precision();
  Real two_pi = Real::pi(bits) * Real(2L, bits);
  Real k = floor(z.im() / two_pi + Real(0.5, bits));
  Real im = z.im() - k * two_pi;
  if (im <= -Real::pi(bits)) im += two_pi;
  return Complex(z.re(), im);
}

Complex first_order_limit(const Profile& f, const Complex& y) {
  Complex w0 = critical_point(f, y);
  Complex one(1L);
  Complex v = y * w0 - profile_F(f, w0, 0) - one - log(exp(y) - one);
  return reduce_imaginary(v);
}

Complex q_factor(const Profile& f, const Signature& lambda, const Complex& w) {
  const long n = lambda.size();
  if (n == 0) throw ArgumentError("empty signature");
  const int bits = w.precision();
  Complex acc(0L);
  acc = acc.with_precision(bits);
  for (long j = 1; j <= n; ++j) {
    Rational t = ratio(j, n);
    Rational fj = f.value(t);
    Rational num = fj - ratio(lambda[static_cast<int>(j - 1)], n);
    if (sgn(num) == 0) continue;
    Complex den = w - cx(fj + 1 - t, bits);
    if (den.is_zero()) throw DomainError("w hits a profile node");
    Complex arg = Complex(1L) + cx(num, bits) / den;
    if (arg.is_zero()) throw DomainError("w hits a signature node");
    acc += log(arg);
  }
  return acc;
}

Complex second_order_log_prediction(const Profile& f, const Signature& lambda, const Complex& y) {
  const long n = lambda.size();
  const int bits = y.precision();
  Complex w0 = critical_point(f, y);
  Complex f2 = profile_F(f, w0, 2);
  if (f2.is_zero()) throw DegeneracyError("F''(w_0) = 0: degenerate saddle");
  const auto& pts = f.breakpoints();
  Complex one(1L);
  Complex ratio_arg = -(w0 - cx(pts.front().second, bits) - one) / (f2 * (w0 - cx(pts.back().second, bits)));
  Complex nn(Real(n, bits));
  return reduce_imaginary(log(ratio_arg) * Complex(Real(0.5, bits)) - q_factor(f, lambda, w0) + nn * (y * w0 - profile_F(f, w0, 0)) - nn -
         Complex(Real(n - 1, bits)) * log(exp(y) - one));
}

Complex second_order_prediction(const Profile& f, const Signature& lambda, const Complex& y) {
  return exp(second_order_log_prediction(f, lambda, y));
}

GueRegime gue_regime(const Profile& f, const Complex& h, long n) {
  if (n < 1) throw ArgumentError("N must be positive");
  const int bits = h.precision();
  GueRegime g{f.mean(), f.fluctuation(), Complex(0L)};
  Complex e = cx(g.mean, bits), s = cx(g.fluctuation, bits);
  Complex rootn(sqrt(Real(n, bits)));
  g.prediction = exp(rootn * e * h + s * h * h * Complex(Real(0.5, bits)));
  return g;
}

Signature SignatureFamily::operator()(long n) const {
  if (n < 1) throw ArgumentError("N must be positive");
  std::vector<long> parts(static_cast<size_t>(n));
  if (rule == RoundingRule::Floor) {
    for (long i = 1; i <= n; ++i) parts[static_cast<size_t>(i - 1)] = floor_rational(profile.value(ratio(i, n)) * n).get_si();
  } else {
    Rational n2 = Rational(n) * n;
    Integer prev = 0;
    for (long i = 1; i <= n; ++i) {
      Integer cur = floor_rational(n2 * profile.integral(ratio(i, n)) + ratio(1, 2));
      parts[static_cast<size_t>(i - 1)] = Integer(cur - prev).get_si();
      prev = cur;
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<long>());
  return Signature(parts);
}

Rational r_one(const Signature& lambda, const Profile& f) {
  const long n = lambda.size();
  Rational acc = 0;
  for (long j = 1; j <= n; ++j) acc += abs(ratio(lambda[static_cast<int>(j - 1)], n) - f.value(ratio(j, n)));
  return acc;
}

Rational r_infinity(const Signature& lambda, const Profile& f) {
  const long n = lambda.size();
  Rational m = 0;
  for (long j = 1; j <= n; ++j) {
    Rational d = abs(ratio(lambda[static_cast<int>(j - 1)], n) - f.value(ratio(j, n)));
    if (d > m) m = d;
  }
  return m;
}

Complex log_normalized_schur(const Signature& lambda, const Complex& x, const Complex& ref_log, int target_bits) {
  Complex v = residue_eval_adaptive(Family::Schur1, lambda, FamilyParams{}, x, target_bits);
  if (v.is_zero()) throw DomainError("normalized Schur value vanishes; logarithm undefined");
  Complex l = log(v);
  const int bits = l.precision();
  Real two_pi = Real::pi(bits) * Real(2L, bits);
  Real k = floor((ref_log.im() - l.im()) / two_pi + Real(0.5, bits));
  return Complex(l.re(), l.im() + k * two_pi);
}

}  // namespace charasym
