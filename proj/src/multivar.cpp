#include "charasym/multivar.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <memory>

#include "charasym/errors.hpp"
#include "charasym/linalg.hpp"
#include "charasym/symfunc.hpp"

namespace charasym {

namespace {

std::vector<long> delta(long n) {
  std::vector<long> d(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) d[static_cast<size_t>(i)] = n - 1 - i;
  return d;
}

// c_N = A_delta(theta) / (prod beta(delta_i) prod_{i<j} (alpha(delta_i) - alpha(delta_j)))
std::function<Rational(long)> c_from_delta(std::function<Rational(long)> alpha, std::function<Rational(long)> beta,
                                           std::function<Rational(long)> a_delta) {
  auto memo = std::make_shared<std::map<long, Rational>>();
  return [alpha, beta, a_delta, memo](long n) -> Rational {
    if (n <= 0) return Rational(1);
    auto it = memo->find(n);
    if (it != memo->end()) return it->second;
    auto d = delta(n);
    Rational den = 1;
    for (size_t i = 0; i < d.size(); ++i) {
      den *= beta(d[i]);
      for (size_t j = i + 1; j < d.size(); ++j) den *= alpha(d[i]) - alpha(d[j]);
    }
    Rational c = a_delta(n) / den;
    memo->emplace(n, c);
    return c;
  };
}

Rational chebyshev_u_half(const Rational& t, long m) {  // U_m(t/2)
  Rational p0 = 1, p1 = t;
  if (m == 0) return p0;
  for (long i = 1; i < m; ++i) {
    Rational p2 = t * p1 - p0;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

template <class T>
void require_distinct(const std::vector<T>& xs) {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (is_zero_scalar(T(xs[i] - xs[j]))) throw DegeneracyError("repeated variables make the Vandermonde vanish");
}

template <class T>
T vandermonde(const std::vector<T>& xs) {
  T v = lift<T>(1L, xs[0]);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] - xs[j];
  return v;
}

// prod (x_i - 1/x_i) prod_{i<j} (x_i + 1/x_i - x_j - 1/x_j)
template <class T>
T sp_weyl_denominator(const std::vector<T>& xs) {
  T one = lift<T>(1L, xs[0]);
  T v = one;
  for (size_t i = 0; i < xs.size(); ++i) {
    v *= xs[i] - one / xs[i];
    for (size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] + one / xs[i] - xs[j] - one / xs[j];
  }
  return v;
}

long binom2(long k) { return k * (k - 1) / 2; }

// The Jacobi operator (x^2 - 1) d^2/dx^2 + ((a+b+2) x + a - b) d/dx on a polynomial.
LaurentPolynomial jacobi_operator(const LaurentPolynomial& p, const Rational& a, const Rational& b) {
  LaurentPolynomial r;
  for (const auto& [n, c] : p.terms()) {
    r.add_term(n, c * (Rational(n * (n - 1)) + (a + b + 2) * n));
    r.add_term(n - 1, c * (a - b) * n);
    r.add_term(n - 2, -c * Rational(n * (n - 1)));
  }
  return r;
}

template <class T>
T det_of_operator_powers(const LaurentPolynomial& u, const std::vector<T>& xs,
                         const std::function<LaurentPolynomial(const LaurentPolynomial&)>& op) {
  const size_t k = xs.size();
  Matrix<T> m(k, std::vector<T>(k, lift<T>(0L, xs[0])));
  LaurentPolynomial cur = u;
  for (size_t j = 0; j < k; ++j) {
    if (j > 0) cur = op(cur);
    for (size_t i = 0; i < k; ++i) m[i][j] = cur.evaluate(xs[i]);
  }
  return determinant(std::move(m));
}

std::vector<long> strict(const Signature& lambda) {
  const long n = lambda.size();
  std::vector<long> mu(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) mu[static_cast<size_t>(i)] = lambda[static_cast<int>(i)] + n - 1 - i;
  return mu;
}

// sum_i (x^{m_i} - x^{-m_i}) / d_i with m_i = mu_i + 1 and the given weights
LaurentPolynomial odd_laurent(const std::vector<long>& mu, const std::vector<Rational>& d) {
  LaurentPolynomial p;
  for (size_t i = 0; i < mu.size(); ++i) {
    p.add_term(mu[i] + 1, 1 / d[i]);
    p.add_term(-mu[i] - 1, -1 / d[i]);
  }
  return p;
}

template <class T>
T schur_1_formula(const Signature& lambda, const std::vector<T>& xs) {
  const long n = lambda.size(), k = static_cast<long>(xs.size());
  LaurentPolynomial u = schur_laurent(lambda) * Rational(factorial(static_cast<unsigned long>(n - 1)));
  T d = det_of_operator_powers<T>(u, xs, [](const LaurentPolynomial& p) { return p.apply_euler(1); });
  T one = lift<T>(1L, xs[0]);
  T pref = one;
  Rational c = 1;
  for (long i = 1; i <= k; ++i) c *= ratio(factorial(static_cast<unsigned long>(n - i)), factorial(static_cast<unsigned long>(n - 1)));
  for (const auto& x : xs) {
    T xm1 = x - one;
    if (is_zero_scalar(xm1)) throw PoleError("x = 1 is excluded");
    pref *= ipow(xm1, n - k);
  }
  return lift<T>(c, xs[0]) * d / (pref * vandermonde(xs));
}

template <class T>
T schur_q_formula(const Signature& lambda, const std::vector<T>& xs, const Rational& q) {
  const long n = lambda.size(), k = static_cast<long>(xs.size());
  auto mu = strict(lambda);
  LaurentPolynomial u;
  for (size_t i = 0; i < mu.size(); ++i) {
    Rational d = 1;
    for (size_t j = 0; j < mu.size(); ++j)
      if (j != i) d *= rational_pow(q, mu[i]) - rational_pow(q, mu[j]);
    u.add_term(mu[i], 1 / d);
  }
  u *= rational_pow(q, binom2(n - 1)) * rational_pow(q - 1, n - 1);
  T d = det_of_operator_powers<T>(u, xs, [q](const LaurentPolynomial& p) {
    return p.apply_diagonal([q](long m) -> Rational { return q_integer(m, q); });
  });
  // exponent binom(k+1,3) - (N-1) binom(k,2)
  long e = (k + 1) * k * (k - 1) / 6 - (n - 1) * binom2(k);
  Rational c = rational_pow(q, e);
  for (long i = 1; i <= k; ++i) c *= q_factorial(n - i, q);
  T one = lift<T>(1L, xs[0]);
  T den = one;
  for (const auto& x : xs)
    for (long j = 1; j <= n - k; ++j) {
      T f = x - lift<T>(rational_pow(q, j - 1), x);
      if (is_zero_scalar(f)) throw PoleError("x = q^j is excluded");
      den *= f;
    }
  return lift<T>(c, xs[0]) * d / (den * vandermonde(xs));
}

template <class T>
T symplectic_1_formula(const Signature& lambda, const std::vector<T>& xs) {
  const long n = lambda.size(), k = static_cast<long>(xs.size());
  auto mu = strict(lambda);
  std::vector<Rational> dd(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) {
    const long m = mu[i] + 1;
    Rational d = 2 * m;
    for (size_t j = 0; j < mu.size(); ++j)
      if (j != i) d *= Rational(m * m - (mu[j] + 1) * (mu[j] + 1));
    dd[i] = d;
  }
  LaurentPolynomial u = odd_laurent(mu, dd) * Rational(n % 2 == 1 ? 1 : -1);
  T d = det_of_operator_powers<T>(u, xs, [](const LaurentPolynomial& p) { return p.apply_euler(2); });
  // Delta^1_s(x_1..x_k, 1^{N-k}) = D(x) prod (x_i-1)^{2(N-k)}/x_i^{N-k} prod_{i<j<=N-k}(i^2-j^2) 2^{N-k} (N-k)!
  auto tail = [](long r) -> Rational {
    Rational c = rational_pow(Rational(2), r) * Rational(factorial(static_cast<unsigned long>(r)));
    for (long i = 1; i <= r; ++i)
      for (long j = i + 1; j <= r; ++j) c *= Rational(i * i - j * j);
    return c;
  };
  T one = lift<T>(1L, xs[0]);
  T ds = sp_weyl_denominator(xs);
  for (const auto& x : xs) {
    if (is_zero_scalar(T(x - one)) || is_zero_scalar(T(x + one))) throw PoleError("x = +-1 is excluded");
    ds *= ipow(T(x - one), 2 * (n - k)) / ipow(x, n - k);
  }
  ds *= lift<T>(tail(n - k), xs[0]);
  Rational sign = binom2(k) % 2 ? Rational(-1) : Rational(1);
  return lift<T>(tail(n) * sign, xs[0]) * d / ds;
}

template <class T>
T symplectic_q_formula(const Signature& lambda, const std::vector<T>& xs, const Rational& q) {
  const long n = lambda.size(), k = static_cast<long>(xs.size());
  auto mu = strict(lambda);
  std::vector<Rational> phi(mu.size()), dd(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) phi[i] = rational_pow(q, mu[i] + 1) + rational_pow(q, -mu[i] - 1);
  for (size_t i = 0; i < mu.size(); ++i) {
    Rational d = rational_pow(q, mu[i] + 1) - rational_pow(q, -mu[i] - 1);
    for (size_t j = 0; j < mu.size(); ++j)
      if (j != i) d *= phi[i] - phi[j];
    dd[i] = d;
  }
  std::vector<Rational> head, full;
  for (long i = 1; i <= n; ++i) {
    full.push_back(rational_pow(q, i));
    if (i < n) head.push_back(rational_pow(q, i));
  }
  Rational kconst = symplectic_q_constant(n, q) / sp_weyl_denominator(full);
  if (!head.empty()) kconst *= sp_weyl_denominator(head);
  for (long i = 1; i < n; ++i) kconst *= -rational_pow(q, -i);
  LaurentPolynomial u = odd_laurent(mu, dd) * kconst;
  Rational qm1sq = (q - 1) * (q - 1);
  T d = det_of_operator_powers<T>(u, xs, [q, qm1sq](const LaurentPolynomial& p) {
    return p.apply_diagonal([q, qm1sq](long m) -> Rational { return (rational_pow(q, m) + rational_pow(q, -m) - 2) / qm1sq; });
  });
  std::vector<T> pts = xs;
  for (long i = 1; i <= n - k; ++i) pts.push_back(lift<T>(rational_pow(q, i), xs[0]));
  T den = sp_weyl_denominator(pts);
  if (is_zero_scalar(den)) throw PoleError("x collides with a specialization point or with +-1");
  Rational c = sp_weyl_denominator(full) * rational_pow(q - 1, k * k - k) * (binom2(k) % 2 ? Rational(-1) : Rational(1));
  return lift<T>(c, xs[0]) * d / den;
}

template <class T>
T jacobi_formula(const Signature& lambda, const std::vector<T>& zs, const Rational& a, const Rational& b) {
  const long n = lambda.size(), k = static_cast<long>(zs.size());
  if (a <= -1 || b <= -1) throw ArgumentError("Jacobi parameters must exceed -1");
  auto mu = strict(lambda);
  const Rational s = a + b + 1;
  // Q(x) = J(x) (2(x-1))^{N-1} = 2^{N-1} K_N R(x)
  LaurentPolynomial r;
  for (size_t i = 0; i < mu.size(); ++i) {
    Rational d = 1;
    for (size_t j = 0; j < mu.size(); ++j)
      if (j != i) d *= Rational(mu[i] - mu[j]) * (mu[i] + mu[j] + s);
    auto p = jacobi_polynomial(mu[i], a, b);
    Rational lead = 1;  // (a+1)_m / m!
    for (long t = 1; t <= mu[i]; ++t) lead *= (a + t) / t;
    for (size_t e = 0; e < p.size(); ++e) r.add_term(static_cast<long>(e), p[e] / (lead * d));
  }
  Rational kn = rational_pow(Rational(2), 2 * (n - 1)) * Rational(factorial(static_cast<unsigned long>(n - 1)));
  for (long i = 1; i <= n - 1; ++i) kn *= a + i;
  r *= kn;
  std::vector<T> xs;
  T one = lift<T>(1L, zs[0]);
  for (const auto& z : zs) {
    if (is_zero_scalar(z)) throw DomainError("z = 0 is excluded");
    xs.push_back((z + one / z) / lift<T>(2L, z));
  }
  require_distinct(xs);
  T d = det_of_operator_powers<T>(r, xs, [a, b](const LaurentPolynomial& p) { return jacobi_operator(p, a, b); });
  // prod_{m=N-k+1}^{N} G(m)/G(N), G(m) = Gamma(m+a) (m-1)! 2^m
  Rational g = 1;
  for (long m = n - k + 1; m <= n; ++m)
    for (long i = m; i <= n - 1; ++i) g /= (i + a) * i * 2;
  T den = lift<T>(rational_pow(Rational(2), binom2(k)), zs[0]);
  std::vector<T> twice;
  for (const auto& x : xs) {
    T xm1 = x - one;
    if (is_zero_scalar(xm1)) throw PoleError("z = 1 is excluded");
    den *= ipow(T(lift<T>(2L, x) * xm1), n - k);
    twice.push_back(lift<T>(2L, x) * x);
  }
  den *= vandermonde(twice);
  return lift<T>(g, zs[0]) * d / den;
}

}  // namespace

DeterminantalClassSpec schur_class(const Rational& q) {
  if (sgn(q) <= 0) throw ArgumentError("q must be positive");
  DeterminantalClassSpec s;
  s.theta = [q](long i) { return rational_pow(q, i - 1); };
  s.g = [](const Rational& x, long m) { return rational_pow(x, m); };
  if (q == 1) {
    s.alpha = [](long m) { return Rational(m); };
  } else {
    s.alpha = [q](long m) -> Rational { return (rational_pow(q, m) - 1) / (q - 1); };
    s.apply_T = [q](const std::function<Rational(const Rational&)>& f, const Rational& x) -> Rational {
      return (f(q * x) - f(x)) / (q - 1);
    };
  }
  s.beta = [](long) { return Rational(1); };
  s.c = c_from_delta(s.alpha, s.beta, [](long) { return Rational(1); });
  return s;
}

DeterminantalClassSpec symplectic_class(const Rational& q) {
  if (sgn(q) <= 0 || q == 1) throw ArgumentError("q must be positive and different from 1");
  DeterminantalClassSpec s;
  s.theta = [q](long i) { return rational_pow(q, i); };
  s.g = [](const Rational& x, long m) -> Rational { return rational_pow(x, m + 1) - rational_pow(x, -m - 1); };
  Rational qm1 = q - 1;
  s.alpha = [q, qm1](long m) -> Rational { return (rational_pow(q, m + 1) + rational_pow(q, -m - 1) - 2) / (qm1 * qm1); };
  s.beta = [q, qm1](long m) -> Rational { return (rational_pow(q, m + 1) - rational_pow(q, -m - 1)) / qm1; };
  s.apply_T = [q, qm1](const std::function<Rational(const Rational&)>& f, const Rational& x) -> Rational {
    return (f(q * x) + f(x / q) - 2 * f(x)) / (qm1 * qm1);
  };
  auto g = s.g;
  s.c = c_from_delta(s.alpha, s.beta, [q, g](long n) -> Rational {
    auto d = delta(n);
    Matrix<Rational> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    std::vector<Rational> th;
    for (long i = 0; i < n; ++i) {
      th.push_back(rational_pow(q, i + 1));
      for (long j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = g(th.back(), d[static_cast<size_t>(j)]);
    }
    return determinant(std::move(m)) / vandermonde(th);
  });
  return s;
}

DeterminantalClassSpec symplectic_t_class() {
  DeterminantalClassSpec s;
  s.theta = [](long) { return Rational(2); };
  s.g = [](const Rational& t, long m) { return chebyshev_u_half(t, m); };
  s.alpha = [](long m) { return Rational((m + 1) * (m + 1)); };
  s.beta = [](long m) { return Rational(m + 1); };
  s.c = c_from_delta(s.alpha, s.beta, [](long) { return Rational(1); });
  return s;
}

DeterminantalClassSpec jacobi_class(const Rational& a, const Rational& b) {
  if (a <= -1 || b <= -1) throw ArgumentError("Jacobi parameters must exceed -1");
  DeterminantalClassSpec s;
  s.theta = [](long) { return Rational(1); };
  auto cache = std::make_shared<std::map<long, std::vector<Rational>>>();
  auto poly = [a, b, cache](long m) -> const std::vector<Rational>& {
    auto it = cache->find(m);
    if (it == cache->end()) it = cache->emplace(m, jacobi_polynomial(m, a, b)).first;
    return it->second;
  };
  s.g = [poly](const Rational& x, long m) {
    const auto& p = poly(m);
    Rational acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
  };
  s.alpha = [a, b](long m) -> Rational { return Rational(m) * (m + a + b + 1); };
  s.beta = [a](long m) {
    Rational r = 1;
    for (long t = 1; t <= m; ++t) r *= (a + t) / t;
    return r;
  };
  s.c = c_from_delta(s.alpha, s.beta, [poly](long n) -> Rational {
    std::vector<std::vector<Rational>> polys;
    for (long j = n - 1; j >= 0; --j) polys.push_back(poly(j));
    return polynomial_family_at_nodes(polys, std::vector<Rational>(static_cast<size_t>(n), Rational(1)));
  });
  return s;
}

Rational eigen_defect(const DeterminantalClassSpec& spec, const std::vector<Rational>& xs, const std::vector<long>& ms) {
  if (!spec.apply_T) throw ArgumentError("this class has no pointwise operator");
  Rational worst = 0;
  for (long m : ms)
    for (const auto& x : xs) {
      auto f = [&spec, m](const Rational& y) { return spec.g(y, m); };
      Rational d = abs(spec.apply_T(f, x) - spec.alpha(m) * spec.g(x, m));
      if (d > worst) worst = d;
    }
  return worst;
}

Rational generic_multivar(const DeterminantalClassSpec& spec, const StrictSignature& mu, const std::vector<Rational>& xs) {
  const long n = mu.size(), k = static_cast<long>(xs.size());
  if (k == 0 || k > n) throw ArgumentError("need 1..N variables");
  require_distinct(xs);
  for (const auto& x : xs)
    for (long j = 1; j <= n - k; ++j)
      if (x == spec.theta(j)) throw PoleError("a variable coincides with a specialization point");
  std::vector<Rational> al(static_cast<size_t>(n)), w(static_cast<size_t>(n));
  for (long l = 0; l < n; ++l) al[static_cast<size_t>(l)] = spec.alpha(mu[static_cast<int>(l)]);
  for (long l = 0; l < n; ++l) {
    Rational d = spec.beta(mu[static_cast<int>(l)]);
    for (long j = 0; j < n; ++j)
      if (j != l) d *= al[static_cast<size_t>(l)] - al[static_cast<size_t>(j)];
    if (sgn(d) == 0) throw DegeneracyError("eigenvalues of T must be distinct on the signature");
    w[static_cast<size_t>(l)] = 1 / d;
  }
  // column b holds T^b applied to the eigen-expansion sum_l w_l g(.; mu_l)
  Matrix<Rational> m(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(k)));
  for (long a = 0; a < k; ++a) {
    std::vector<Rational> gv(static_cast<size_t>(n));
    for (long l = 0; l < n; ++l) gv[static_cast<size_t>(l)] = w[static_cast<size_t>(l)] * spec.g(xs[static_cast<size_t>(a)], mu[static_cast<int>(l)]);
    for (long b = 0; b < k; ++b) {
      Rational acc = 0;
      for (long l = 0; l < n; ++l) {
        acc += gv[static_cast<size_t>(l)];
        gv[static_cast<size_t>(l)] *= al[static_cast<size_t>(l)];
      }
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc;
    }
  }
  Rational den = vandermonde(xs);
  for (const auto& x : xs)
    for (long j = 1; j <= n - k; ++j) den *= x - spec.theta(j);
  return spec.c(n - k) / spec.c(n) * determinant(std::move(m)) / den;
}

template <class T>
T multivar_det_eval(Family family, const Signature& lambda, const std::vector<T>& xs, const FamilyParams& params) {
  const long n = lambda.size(), k = static_cast<long>(xs.size());
  if (n == 0) throw ArgumentError("empty signature");
  if (k == 0 || k > n) throw ArgumentError("need 1..N variables");
  for (const auto& x : xs)
    if (is_zero_scalar(x)) throw DomainError("zero variable is excluded");
  if (family != Family::Jacobi) require_distinct(xs);
  switch (family) {
    case Family::Schur1:
      return schur_1_formula(lambda, xs);
    case Family::SchurQ:
      if (params.q <= 0 || params.q == 1) throw ArgumentError("q must be positive and different from 1");
      return schur_q_formula(lambda, xs, params.q);
    case Family::Symplectic1:
      if (!lambda.nonnegative()) throw ArgumentError("symplectic signature must be nonnegative");
      return symplectic_1_formula(lambda, xs);
    case Family::SymplecticQ:
      if (!lambda.nonnegative()) throw ArgumentError("symplectic signature must be nonnegative");
      if (params.q <= 0 || params.q == 1) throw ArgumentError("q must be positive and different from 1");
      return symplectic_q_formula(lambda, xs, params.q);
    case Family::Jacobi:
      if (!lambda.nonnegative()) throw ArgumentError("Jacobi signature must be nonnegative");
      return jacobi_formula(lambda, xs, params.a, params.b);
  }
  throw ArgumentError("unknown family");
}

template Rational multivar_det_eval<Rational>(Family, const Signature&, const std::vector<Rational>&, const FamilyParams&);
template Complex multivar_det_eval<Complex>(Family, const Signature&, const std::vector<Complex>&, const FamilyParams&);

Complex multivar_eval_adaptive(Family family, const Signature& lambda, const std::vector<Complex>& xs,
                               const FamilyParams& params, int target_bits, int max_bits) {
  if (xs.empty()) throw ArgumentError("need 1..N variables");
  const int target = target_bits > 0 ? target_bits : default_precision();
  auto at = [&](int bits) {
    std::vector<Complex> ys;
    for (const auto& x : xs) ys.push_back(x.with_precision(bits));
    return multivar_det_eval(family, lambda, ys, params);
  };
  int p = target + 64;
  for (const auto& x : xs) p = std::max(p, x.precision());
  Complex prev = at(p);
  while (true) {
    p *= 2;
    if (p > max_bits) throw PrecisionError("multivariate evaluation still unstable at " + std::to_string(max_bits) + " bits");
    Complex cur = at(p);
    Real diff = abs(cur - prev), scale = abs(cur);
    if (diff <= scale / pow(Real(2L, p), target) || (scale.is_zero() && diff.is_zero())) return cur.with_precision(target);
    prev = std::move(cur);
  }
}

PtlPolynomial ptl_poly(long j, long l, long n) {
  if (!(0 <= l && l < j && j <= n)) throw ArgumentError("ptl_poly needs 0 <= l < j <= N");
  LaurentPolynomial base = (LaurentPolynomial::monomial(1) - LaurentPolynomial::constant(1)).pow(static_cast<unsigned>(n - 1));
  LaurentPolynomial p = base.apply_euler(static_cast<unsigned>(j - 1 - l)).divided_by_x_minus_one(static_cast<unsigned>(n - j + l));
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j - 1), static_cast<unsigned long>(l));
  Rational c = Rational(binom) * rational_pow(Rational(n), l) *
               ratio(factorial(static_cast<unsigned long>(n - j)), factorial(static_cast<unsigned long>(n - 1)));
  p *= c;
  PtlPolynomial out;
  out.j = j;
  out.l = l;
  out.n = n;
  const long deg = j - l - 1;
  out.coefficients.assign(static_cast<size_t>(deg + 1), Rational(0));
  for (const auto& [e, v] : p.terms()) {
    if (e < 0 || e > deg) throw InvariantViolation("ptl polynomial has an unexpected degree");
    out.coefficients[static_cast<size_t>(e)] = v;
  }
  return out;
}

template <class T>
T multivar_expansion(const Signature& lambda, const std::vector<T>& xs) {
  const long n = lambda.size(), k = static_cast<long>(xs.size());
  if (k == 0 || k > n) throw ArgumentError("need 1..N variables");
  require_distinct(xs);
  T one = lift<T>(1L, xs[0]);
  for (const auto& x : xs)
    if (is_zero_scalar(x) || is_zero_scalar(T(x - one))) throw DomainError("x in {0, 1} is excluded");
  LaurentPolynomial s = schur_univariate(lambda);
  std::vector<LaurentPolynomial> ds{s};
  for (long l = 1; l < k; ++l) ds.push_back(ds.back().apply_euler(1));
  std::vector<std::vector<PtlPolynomial>> ptl(static_cast<size_t>(k + 1));
  for (long j = 1; j <= k; ++j)
    for (long l = 0; l < j; ++l) ptl[static_cast<size_t>(j)].push_back(ptl_poly(j, l, n));
  Matrix<T> m(static_cast<size_t>(k), std::vector<T>(static_cast<size_t>(k), lift<T>(0L, xs[0])));
  for (long i = 0; i < k; ++i) {
    const T& x = xs[static_cast<size_t>(i)];
    for (long j = 1; j <= k; ++j) {
      T acc = lift<T>(0L, x);
      for (long l = 0; l < j; ++l) {
        T term = ds[static_cast<size_t>(l)].evaluate(x) / lift<T>(rational_pow(Rational(n), l), x);
        term *= ptl[static_cast<size_t>(j)][static_cast<size_t>(l)].evaluate(x);
        term *= ipow<T>(x - one, l + k - j);
        acc += term;
      }
      m[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = acc;
    }
  }
  T d = determinant(std::move(m));
  return d / vandermonde(xs);
}

template Rational multivar_expansion<Rational>(const Signature&, const std::vector<Rational>&);
template Complex multivar_expansion<Complex>(const Signature&, const std::vector<Complex>&);

}  // namespace charasym
