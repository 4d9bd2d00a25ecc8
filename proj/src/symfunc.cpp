#include "charasym/symfunc.hpp"

#include <functional>
#include <map>

namespace charasym {

namespace {

void branch_children(const std::vector<long>& kappa, size_t i, std::vector<long>& mu,
                     std::vector<std::vector<long>>& out) {
  if (i + 1 == kappa.size()) {
    out.push_back(mu);
    return;
  }
  for (long v = kappa[i + 1]; v <= kappa[i]; ++v) {
    mu[i] = v;
    branch_children(kappa, i + 1, mu, out);
  }
}

long sum(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

}  // namespace

Rational schur_branching(const Signature& lambda, const std::vector<Rational>& xs) {
  const int n = lambda.size();
  if (static_cast<int>(xs.size()) != n) throw ArgumentError("schur_branching: need exactly N variables");
  if (n == 0) return Rational(1);
  if (!lambda.nonnegative())
    for (const auto& x : xs)
      if (sgn(x) == 0) throw DomainError("schur_branching: zero variable with a negative part");
  // level[k] memoizes s_kappa(x_1..x_k) for kappa of length k
  std::vector<std::map<std::vector<long>, Rational>> memo(static_cast<size_t>(n + 1));
  std::function<Rational(const std::vector<long>&)> eval = [&](const std::vector<long>& kappa) -> Rational {
    const size_t k = kappa.size();
    if (k == 1) return rational_pow(xs[0], kappa[0]);
    auto& table = memo[k];
    auto it = table.find(kappa);
    if (it != table.end()) return it->second;
    std::vector<std::vector<long>> children;
    std::vector<long> mu(k - 1);
    branch_children(kappa, 0, mu, children);
    Rational total = 0;
    const long w = sum(kappa);
    for (const auto& c : children) total += rational_pow(xs[k - 1], w - sum(c)) * eval(c);
    table.emplace(kappa, total);
    return total;
  };
  return eval(lambda.parts());
}

Rational confluent_ratio(CharFamily family, const Signature& lambda,
                         const std::vector<PointWithMultiplicity<Rational>>& points) {
  std::vector<Rational> nodes = expand_points(points);
  if (static_cast<int>(nodes.size()) != lambda.size())
    throw ArgumentError("confluent_ratio: multiplicities must sum to N");
  if (family == CharFamily::Schur) return schur_at_nodes(lambda, nodes);
  return symplectic_at_nodes(lambda, nodes);
}

Rational weyl_dim(const Signature& lambda, const Rational& q) {
  if (sgn(q) == 0) throw ArgumentError("weyl_dim: q must be nonzero");
  const int n = lambda.size();
  std::vector<long> mu(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) mu[static_cast<size_t>(i)] = lambda[i] + n - 1 - i;
  Rational r = 1;
  const bool q1 = q == 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (q1) {
        r *= ratio(mu[static_cast<size_t>(i)] - mu[static_cast<size_t>(j)], j - i);
      } else {
        Rational den = rational_pow(q, n - 1 - i) - rational_pow(q, n - 1 - j);
        if (sgn(den) == 0) throw DomainError("weyl_dim: q makes the principal specialization degenerate");
        r *= (rational_pow(q, mu[static_cast<size_t>(i)]) - rational_pow(q, mu[static_cast<size_t>(j)])) / den;
      }
    }
  return r;
}

namespace {

// prod (y_i - 1/y_i) prod_{i<j} (y_i + 1/y_i - y_j - 1/y_j)
Rational sp_denominator(const std::vector<Rational>& y) {
  Rational r = 1;
  for (size_t i = 0; i < y.size(); ++i) {
    r *= y[i] - 1 / y[i];
    for (size_t j = i + 1; j < y.size(); ++j) r *= y[i] + 1 / y[i] - y[j] - 1 / y[j];
  }
  return r;
}

}  // namespace

Rational symplectic_dim(const Signature& lambda, const Rational& q) {
  if (!lambda.nonnegative()) throw ArgumentError("symplectic_dim: signature must be nonnegative");
  if (sgn(q) == 0) throw ArgumentError("symplectic_dim: q must be nonzero");
  const int n = lambda.size();
  std::vector<long> l(static_cast<size_t>(n)), rho(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    l[static_cast<size_t>(i)] = lambda[i] + n - i;
    rho[static_cast<size_t>(i)] = n - i;
  }
  if (q == 1) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) {
      r *= ratio(l[static_cast<size_t>(i)], rho[static_cast<size_t>(i)]);
      for (int j = i + 1; j < n; ++j) {
        long a = l[static_cast<size_t>(i)], b = l[static_cast<size_t>(j)];
        long c = rho[static_cast<size_t>(i)], d = rho[static_cast<size_t>(j)];
        r *= ratio(a * a - b * b, c * c - d * d);
      }
    }
    return r;
  }
  std::vector<Rational> num(static_cast<size_t>(n)), den(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    num[static_cast<size_t>(i)] = rational_pow(q, l[static_cast<size_t>(i)]);
    den[static_cast<size_t>(i)] = rational_pow(q, rho[static_cast<size_t>(i)]);
  }
  Rational d = sp_denominator(den);
  if (sgn(d) == 0) throw DomainError("symplectic_dim: q makes the principal specialization degenerate");
  return sp_denominator(num) / d;
}

std::vector<Rational> fill_values(CharFamily family, int count, const Rational& q) {
  std::vector<Rational> v;
  v.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) v.push_back(family == CharFamily::Schur ? rational_pow(q, i) : rational_pow(q, i + 1));
  return v;
}

std::vector<Rational> jacobi_polynomial(long m, const Rational& a, const Rational& b) {
  if (m < 0) throw ArgumentError("jacobi_polynomial: negative degree");
  // sum_k (-m)_k (m+a+b+1)_k / ((a+1)_k k!) ((1-x)/2)^k, scaled by (a+1)_m/m!
  Rational lead = 1;
  for (long i = 1; i <= m; ++i) lead *= (a + i) / i;
  std::vector<Rational> coeffs(static_cast<size_t>(m + 1), Rational(0));
  Rational term = lead;
  // (1-x)^k / 2^k expanded binomially
  for (long k = 0; k <= m; ++k) {
    if (k > 0) term *= Rational(-(m - k + 1)) * (m + a + b + k) / ((a + k) * k * 2);
    Integer binom = 1;
    for (long j = 0; j <= k; ++j) {
      Rational c = term * binom;
      coeffs[static_cast<size_t>(j)] += (j % 2 ? Rational(-c) : c);
      binom = binom * (k - j) / (j + 1);
    }
  }
  return coeffs;
}

Signature symplectic_signature_embed(const Signature& lambda) {
  if (!lambda.nonnegative()) throw ArgumentError("symplectic_signature_embed: negative part");
  const int n = lambda.size();
  std::vector<long> nu(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    nu[static_cast<size_t>(i)] = lambda[i] + 1;
    nu[static_cast<size_t>(2 * n - 1 - i)] = -lambda[i];
  }
  return Signature(std::move(nu));
}

}  // namespace charasym
