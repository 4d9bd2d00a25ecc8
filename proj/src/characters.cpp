#include "charasym/characters.hpp"

#include <algorithm>
#include <numeric>

#include "charasym/errors.hpp"
#include "charasym/linalg.hpp"
#include "charasym/symfunc.hpp"

namespace charasym {

namespace {

Rational sum_of(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

void check_sequence(const std::vector<Rational>& v, const char* name) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) < 0) throw ArgumentError(std::string(name) + " must be nonnegative");
    if (i > 0 && v[i] > v[i - 1]) throw ArgumentError(std::string(name) + " must be weakly decreasing");
  }
}

Complex cx(const Rational& r, int bits) { return Complex(r, bits); }

// Partition from the positive (sign = +1) or negated negative parts.
std::vector<long> diagram(const Signature& lambda, int sign) {
  std::vector<long> rows;
  for (long v : lambda.parts())
    if (sign * v > 0) rows.push_back(sign * v);
  std::sort(rows.rbegin(), rows.rend());
  return rows;
}

FrobeniusPair frobenius_of_rows(const std::vector<long>& rows) {
  FrobeniusPair f;
  for (size_t i = 0; i < rows.size(); ++i) {
    long idx = static_cast<long>(i) + 1;
    if (rows[i] < idx) break;
    long col = 0;  // mu'_i: rows of length >= i
    for (long r : rows)
      if (r >= idx) ++col;
    f.p.push_back(Rational(rows[i] - idx) + ratio(1, 2));
    f.q.push_back(Rational(col - idx) + ratio(1, 2));
    ++f.d;
  }
  return f;
}

}  // namespace

Rational VoiculescuParam::gamma_plus() const { return delta_plus - sum_of(alpha_plus) - sum_of(beta_plus); }
Rational VoiculescuParam::gamma_minus() const { return delta_minus - sum_of(alpha_minus) - sum_of(beta_minus); }

void VoiculescuParam::validate() const {
  check_sequence(alpha_plus, "alpha+");
  check_sequence(alpha_minus, "alpha-");
  check_sequence(beta_plus, "beta+");
  check_sequence(beta_minus, "beta-");
  if (sgn(gamma_plus()) < 0 || sgn(gamma_minus()) < 0) throw ArgumentError("sum of alpha and beta exceeds delta");
  Rational b1 = (beta_plus.empty() ? Rational(0) : beta_plus[0]) + (beta_minus.empty() ? Rational(0) : beta_minus[0]);
  if (b1 > 1) throw ArgumentError("beta_1^+ + beta_1^- must not exceed 1");
}

FrobeniusPair frobenius_coords(const Signature& partition) {
  if (!partition.nonnegative()) throw ArgumentError("partition parts must be nonnegative");
  return frobenius_of_rows(diagram(partition, 1));
}

VoiculescuParam voiculescu_from_signature(const Signature& lambda) {
  const long n = lambda.size();
  if (n == 0) throw ArgumentError("empty signature");
  VoiculescuParam w;
  auto plus = frobenius_of_rows(diagram(lambda, 1));
  auto minus = frobenius_of_rows(diagram(lambda, -1));
  for (const auto& p : plus.p) w.alpha_plus.push_back(p / n);
  for (const auto& q : plus.q) w.beta_plus.push_back(q / n);
  for (const auto& p : minus.p) w.alpha_minus.push_back(p / n);
  for (const auto& q : minus.q) w.beta_minus.push_back(q / n);
  for (long v : lambda.parts()) (v > 0 ? w.delta_plus : w.delta_minus) += ratio(std::abs(v), n);
  return w;
}

Complex voiculescu_phi(const VoiculescuParam& omega, const Complex& x) {
  omega.validate();
  if (x.is_zero()) throw DomainError("x must be nonzero");
  const int bits = x.precision();
  const Complex one(Real(1L, bits));
  const Complex u = x - one, v = one / x - one;
  Complex acc = exp(cx(omega.gamma_plus(), bits) * u + cx(omega.gamma_minus(), bits) * v);
  auto factor = [&](const std::vector<Rational>& a, const std::vector<Rational>& b, const Complex& t) {
    for (const auto& bi : b) acc *= one + cx(bi, bits) * t;
    for (const auto& ai : a) {
      Complex den = one - cx(ai, bits) * t;
      if (den.is_zero()) throw PoleError("x sits on a pole 1 + 1/alpha");
      acc /= den;
    }
  };
  factor(omega.alpha_plus, omega.beta_plus, u);
  factor(omega.alpha_minus, omega.beta_minus, v);
  return acc;
}

template <class T>
T phi_finite_N(const Signature& lambda, const T& w) {
  const long n = lambda.size();
  if (n == 0) throw ArgumentError("empty signature");
  auto plus = frobenius_of_rows(diagram(lambda, 1));
  auto minus = frobenius_of_rows(diagram(lambda, -1));
  T acc = lift<T>(1L, w);
  const Rational half = ratio(1, 2);
  auto mul = [&](const Rational& num, const Rational& den) {
    T d = w + lift<T>(den / n, w);
    if (is_zero_scalar(d)) throw PoleError("w hits a pole of Phi_N");
    acc = acc * (w + lift<T>(num / n, w)) / d;
  };
  for (long i = 0; i < plus.d; ++i) mul(half - plus.p[static_cast<size_t>(i)], half + plus.q[static_cast<size_t>(i)]);
  for (long i = 0; i < minus.d; ++i)
    mul(half + Rational(n) + minus.p[static_cast<size_t>(i)], half + Rational(n) - minus.q[static_cast<size_t>(i)]);
  return acc;
}

template Rational phi_finite_N<Rational>(const Signature&, const Rational&);
template Complex phi_finite_N<Complex>(const Signature&, const Complex&);

Signature voiculescu_family_signature(VoiculescuFamily family, int n) {
  if (n < 1) throw ArgumentError("N must be positive");
  std::vector<long> parts(static_cast<size_t>(n), 0);
  switch (family) {
    case VoiculescuFamily::Alpha:
      parts[0] = n / 2;
      break;
    case VoiculescuFamily::Beta:
      for (int i = 0; i < n / 2; ++i) parts[static_cast<size_t>(i)] = 1;
      break;
    case VoiculescuFamily::Gamma: {
      long s = 0;
      while ((s + 1) * (s + 1) <= n) ++s;
      for (long i = 0; i < s; ++i) parts[static_cast<size_t>(i)] = s;
      // leftover N - s^2 <= 2s boxes in at most two extra rows, so |lambda| = N
      long rest = n - s * s;
      for (long i = s; rest > 0 && i < n; ++i) {
        parts[static_cast<size_t>(i)] = std::min(rest, s);
        rest -= parts[static_cast<size_t>(i)];
      }
      break;
    }
  }
  return Signature(parts);
}

VoiculescuParam voiculescu_family_limit(VoiculescuFamily family) {
  VoiculescuParam w;
  switch (family) {
    case VoiculescuFamily::Alpha:
      w.alpha_plus = {ratio(1, 2)};
      w.delta_plus = ratio(1, 2);
      break;
    case VoiculescuFamily::Beta:
      w.beta_plus = {ratio(1, 2)};
      w.delta_plus = ratio(1, 2);
      break;
    case VoiculescuFamily::Gamma:
      w.delta_plus = 1;
      break;
  }
  return w;
}

LimitSequence::LimitSequence(std::vector<long> prefix) : prefix_(std::move(prefix)) {
  if (prefix_.empty()) prefix_.push_back(0);
  for (size_t i = 1; i < prefix_.size(); ++i)
    if (prefix_[i] < prefix_[i - 1]) throw ArgumentError("nu must be weakly increasing");
}

long LimitSequence::operator()(long j) const {
  if (j < 1) throw ArgumentError("nu is indexed from 1");
  const size_t i = static_cast<size_t>(j - 1);
  return i < prefix_.size() ? prefix_[i] : prefix_.back();
}

Signature LimitSequence::signature(int n) const {
  std::vector<long> parts(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) parts[static_cast<size_t>(n - j)] = (*this)(j);
  return Signature(parts);
}

Complex q_pochhammer_inf(const Complex& a, const Rational& q, Real* bound) {
  if (sgn(q) <= 0 || q >= 1) throw ArgumentError("q must lie in (0, 1)");
  const int bits = a.precision();
  const Complex one(Real(1L, bits));
  const Real eps = pow(Real(2L, bits), -static_cast<long>(bits));
  const Complex cq = cx(q, bits);
  Complex acc = one, term = a;
  while (abs(term) >= eps) {
    acc *= one - term;
    term *= cq;
  }
  // |prod_{i>=m}(1 - t_i) - 1| <= exp(sum |t_i|) - 1 <= 2 |t_m| / (1 - q) while that is small
  if (bound) *bound = Real(2L, bits) * abs(term) / (Real(1L, bits) - Real(q, bits));
  return acc;
}

namespace {

// Exponents e_j = nu_j + j - 1 (strictly increasing).
long exponent(const LimitSequence& nu, long j) { return nu(j) + j - 1; }

// One term x^{e_k} / prod_{j != k} (1 - q^{e_j - e_k}).
Complex residue_term(const LimitSequence& nu, long k, const Complex& x, const Rational& q) {
  const int bits = x.precision();
  const Complex one(Real(1L, bits));
  const long ek = exponent(nu, k);
  const long len = static_cast<long>(nu.prefix().size());
  Complex den = one;
  for (long j = 1; j < k; ++j) den *= one - cx(rational_pow(q, exponent(nu, j) - ek), bits);
  const long m = std::max(len, k);
  for (long j = k + 1; j <= m; ++j) den *= one - cx(rational_pow(q, exponent(nu, j) - ek), bits);
  den *= q_pochhammer_inf(cx(rational_pow(q, exponent(nu, m + 1) - ek), bits), q);
  return ipow(x, ek) / den;
}

}  // namespace

FnuResult fnu_sum(const LimitSequence& nu, const Complex& x, long truncation, const Rational& q) {
  if (sgn(q) <= 0 || q >= 1) throw ArgumentError("q must lie in (0, 1)");
  if (x.is_zero()) throw DomainError("x must be nonzero");
  const long len = static_cast<long>(nu.prefix().size());
  if (truncation < len) throw ArgumentError("truncation must cover the nontrivial prefix of nu");
  const int bits = x.precision();
  FnuResult r;
  r.sum = Complex(Real(0L, bits));
  for (long k = 1; k <= truncation; ++k) r.sum += residue_term(nu, k, x, q);
  r.terms = truncation;
  // Omitted terms: |term_k| <= |x|^{e_k} q^{sum_{j<k}(e_k - e_j)} / (q;q)_inf^2.
  const Real qq(q, bits), ax = abs(x);
  const Real qpoch = abs(q_pochhammer_inf(Complex(qq), q));
  const Real scale = Real(1L, bits) / (qpoch * qpoch);
  Real tail(0L, bits), prev(0L, bits);
  const Real eps = pow(Real(2L, bits), -static_cast<long>(bits));
  for (long k = truncation + 1;; ++k) {
    const long ek = exponent(nu, k);
    long gap = 0;
    for (long j = 1; j < k; ++j) gap += ek - exponent(nu, j);
    Real b = pow(ax, ek) * pow(qq, gap) * scale;
    tail += b;
    // the exponent of q grows quadratically, so once terms halve they keep shrinking faster
    if (k > truncation + 1 && b < prev / Real(2L, bits) && b <= eps * tail) break;
    if (k > truncation + 100000) throw TruncationError("tail bound does not settle");
    prev = b;
  }
  r.tail_bound = tail;
  r.value = r.sum;
  return r;
}

FnuResult fnu(const LimitSequence& nu, const Complex& x, long truncation, const Rational& q, const Real& tolerance) {
  FnuResult r = fnu_sum(nu, x, truncation, q);
  const int bits = x.precision();
  Complex den = q_pochhammer_inf(x * cx(q, bits), q);
  if (den.is_zero()) throw PoleError("x = q^-i is a pole of the prefactor");
  Complex pre = q_pochhammer_inf(cx(q, bits), q) / den;
  r.value = pre * r.sum;
  r.tail_bound = r.tail_bound * abs(pre);
  if (r.tail_bound > tolerance * max(abs(r.value), Real(1L, bits)))
    throw TruncationError("tail bound " + r.tail_bound.to_string(6) + " above tolerance; increase truncation");
  return r;
}

Complex fnu_multivar(const LimitSequence& nu, const std::vector<Complex>& xs, const Rational& q, long truncation) {
  const long k = static_cast<long>(xs.size());
  if (k == 0) throw ArgumentError("at least one variable is required");
  const int bits = xs[0].precision();
  const Complex one(Real(1L, bits));
  for (long i = 0; i < k; ++i) {
    if (xs[static_cast<size_t>(i)].is_zero()) throw DomainError("x must be nonzero");
    for (long j = i + 1; j < k; ++j)
      if (xs[static_cast<size_t>(i)] == xs[static_cast<size_t>(j)]) throw DegeneracyError("variables must be distinct");
  }
  const Complex cq = cx(q, bits), qk1 = cx(rational_pow(q, k - 1), bits);
  const Complex qpoch = q_pochhammer_inf(cq, q);
  const Complex step = cx(1 / q - 1, bits);
  Matrix<Complex> a(static_cast<size_t>(k), std::vector<Complex>(static_cast<size_t>(k)));
  for (long i = 0; i < k; ++i) {
    // G(x q^{-r}) for r = 0..k-1, then repeated differences give D^r G(x)
    std::vector<Complex> vals;
    for (long r = 0; r < k; ++r)
      vals.push_back(qpoch * fnu_sum(nu, xs[static_cast<size_t>(i)] * qk1 * cx(rational_pow(q, -r), bits), truncation, q).sum);
    for (long j = 0; j < k; ++j) {
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = vals[0];
      for (size_t r = 0; r + 1 < vals.size(); ++r) vals[r] = (vals[r + 1] - vals[r]) / step;
      vals.pop_back();
    }
  }
  Complex det = determinant(std::move(a));
  Complex den = one;
  for (long i = 0; i < k; ++i) {
    for (long j = i + 1; j < k; ++j) den *= xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)];
    den *= q_pochhammer_inf(xs[static_cast<size_t>(i)] * qk1 * cq, q);
  }
  if (den.is_zero()) throw PoleError("some x_i q^{k-1} is a pole q^-m");
  const long c2 = k * (k - 1) / 2, c3 = k * (k - 1) * (k - 2) / 6;
  return det / den * cx(rational_pow(q, -2 * c3 - 2 * c2) * rational_pow(1 - q, c2), bits);
}

Rational q_character_ratio(const Signature& lambda, const std::vector<Rational>& xs, const Rational& q) {
  const int n = lambda.size();
  const int k = static_cast<int>(xs.size());
  if (k == 0 || k > n) throw ArgumentError("need 1..N variables");
  if (sgn(q) == 0) throw ArgumentError("q must be nonzero");
  std::vector<Rational> top = xs, bottom;
  for (int i = k; i < n; ++i) top.push_back(rational_pow(q, -i));
  for (int i = 0; i < n; ++i) bottom.push_back(rational_pow(q, -i));
  return schur_at_nodes(lambda, top) / schur_at_nodes(lambda, bottom);
}

}  // namespace charasym
