#pragma once

#include <algorithm>
#include <vector>

#include "charasym/errors.hpp"
#include "charasym/linalg.hpp"
#include "charasym/numeric.hpp"
#include "charasym/signature.hpp"

namespace charasym {

enum class CharFamily { Schur, Symplectic };

template <class T>
struct PointWithMultiplicity {
  T point;
  unsigned multiplicity = 1;
};

// s_lambda(xs) by iterated branching over interlacing signatures.
Rational schur_branching(const Signature& lambda, const std::vector<Rational>& xs);

// Expand points with multiplicities into a node list (point repeated).
template <class T>
std::vector<T> expand_points(const std::vector<PointWithMultiplicity<T>>& points) {
  std::vector<T> nodes;
  for (const auto& p : points) {
    if (p.multiplicity == 0) throw ArgumentError("point multiplicity must be positive");
    for (unsigned m = 0; m < p.multiplicity; ++m) nodes.push_back(p.point);
  }
  return nodes;
}

// Bialternant ratio at a node list that may repeat. Row i of both
// determinants is the divided difference over nodes 1..i, which is the
// confluent (derivative-row) scheme up to row operations shared by the
// numerator and denominator. For the monomial basis the divided difference
// of x^m is the complete homogeneous polynomial h_{m-i+1}(x_1..x_i), so the
// denominator is anti-triangular with unit entries.
template <class T>
T schur_at_nodes(const Signature& lambda, const std::vector<T>& nodes) {
  const int n = lambda.size();
  if (static_cast<int>(nodes.size()) != n) throw ArgumentError("node count must equal signature length");
  if (n == 0) throw ArgumentError("empty signature");
  const long shift = lambda[n - 1];
  if (shift < 0)
    for (const auto& x : nodes)
      if (is_zero_scalar(x)) throw DomainError("zero specialization with a negative signature part");
  const long top = lambda[0] - shift + n - 1;
  // h[r] holds h_r(x_1..x_i) after processing node i.
  std::vector<T> h(static_cast<size_t>(top + 1), lift<T>(0L, nodes[0]));
  h[0] = lift<T>(1L, nodes[0]);
  Matrix<T> a(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n), lift<T>(0L, nodes[0])));
  for (int i = 0; i < n; ++i) {
    for (long r = 1; r <= top; ++r) h[static_cast<size_t>(r)] += nodes[static_cast<size_t>(i)] * h[static_cast<size_t>(r - 1)];
    for (int j = 0; j < n; ++j) {
      long r = lambda[j] - shift + n - 1 - j - i;
      if (r >= 0) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = h[static_cast<size_t>(r)];
    }
  }
  T d = determinant(std::move(a));
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
  if (shift != 0) {
    T prod = lift<T>(1L, nodes[0]);
    for (const auto& x : nodes) prod *= x;
    d *= ipow(prod, shift);
  }
  return d;
}

// Symplectic character chi_lambda at nodes x_i, lambda nonnegative. Uses the
// variable t = x + 1/x, in which the ratio g(x;m)/(x - 1/x) is the Chebyshev
// polynomial P_m(t) = U_m(t/2) (P_0 = 1, P_1 = t, P_{m+1} = t P_m - P_{m-1}).
template <class T>
T symplectic_at_t_nodes(const Signature& lambda, const std::vector<T>& tnodes) {
  const int n = lambda.size();
  if (static_cast<int>(tnodes.size()) != n) throw ArgumentError("node count must equal signature length");
  if (n == 0) throw ArgumentError("empty signature");
  if (!lambda.nonnegative()) throw ArgumentError("symplectic signature must be nonnegative");
  const long top = lambda[0] + n - 1;
  const T zero = lift<T>(0L, tnodes[0]);
  // dd[m][r]: divided difference of P_m over nodes 1..r+1.
  std::vector<std::vector<T>> dd(static_cast<size_t>(top + 1), std::vector<T>(static_cast<size_t>(n), zero));
  for (long m = 0; m <= top; ++m) {
    for (int r = 0; r < n; ++r) {
      T v = zero;
      if (m == 0) {
        if (r == 0) v = lift<T>(1L, zero);
      } else {
        v = tnodes[static_cast<size_t>(r)] * dd[static_cast<size_t>(m - 1)][static_cast<size_t>(r)];
        if (r > 0) v += dd[static_cast<size_t>(m - 1)][static_cast<size_t>(r - 1)];
        if (m >= 2) v -= dd[static_cast<size_t>(m - 2)][static_cast<size_t>(r)];
      }
      dd[static_cast<size_t>(m)][static_cast<size_t>(r)] = v;
    }
  }
  Matrix<T> a(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n), zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = dd[static_cast<size_t>(lambda[j] + n - 1 - j)][static_cast<size_t>(i)];
  T d = determinant(std::move(a));
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

template <class T>
T symplectic_at_nodes(const Signature& lambda, const std::vector<T>& nodes) {
  std::vector<T> t;
  t.reserve(nodes.size());
  for (const auto& x : nodes) {
    if (is_zero_scalar(x)) throw DomainError("zero specialization for a symplectic character");
    t.push_back(x + lift<T>(1L, x) / x);
  }
  return symplectic_at_t_nodes(lambda, t);
}

// Monomial coefficients (ascending) of the Jacobi polynomial
// p_m(x;a,b) = (a+1)_m/m! * 2F1(-m, m+a+b+1; a+1; (1-x)/2).
std::vector<Rational> jacobi_polynomial(long m, const Rational& a, const Rational& b);

// det[p_{mu_j}(x_i)] / Delta(x) at a node list that may repeat, for an
// arbitrary family of polynomials given by monomial coefficients.
template <class T>
T polynomial_family_at_nodes(const std::vector<std::vector<Rational>>& polys, const std::vector<T>& nodes) {
  const size_t n = nodes.size();
  if (polys.size() != n) throw ArgumentError("polynomial count must equal node count");
  if (n == 0) throw ArgumentError("empty node list");
  size_t top = 0;
  for (const auto& p : polys) top = std::max(top, p.size());
  const T zero = lift<T>(0L, nodes[0]);
  std::vector<T> h(top + 1, zero);
  h[0] = lift<T>(1L, zero);
  Matrix<T> a(n, std::vector<T>(n, zero));
  for (size_t i = 0; i < n; ++i) {
    for (size_t r = 1; r <= top; ++r) h[r] += nodes[i] * h[r - 1];
    for (size_t j = 0; j < n; ++j) {
      T v = zero;
      for (size_t m = i; m < polys[j].size(); ++m)
        if (sgn(polys[j][m]) != 0) v += lift<T>(polys[j][m], zero) * h[m - i];
      a[i][j] = v;
    }
  }
  T d = determinant(std::move(a));
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

// Normalized multivariate Jacobi value J_lambda(z_1..z_k; N, a, b). The
// arguments are already in the variable x = (z + 1/z)/2; remaining nodes sit at 1.
template <class T>
T jacobi_normalized(const Signature& lambda, const std::vector<T>& xs, const Rational& a, const Rational& b) {
  const int n = lambda.size();
  if (!lambda.nonnegative()) throw ArgumentError("Jacobi signature must be nonnegative");
  if (xs.empty() || static_cast<int>(xs.size()) > n) throw ArgumentError("need 1..N variables");
  std::vector<std::vector<Rational>> polys;
  for (int j = 0; j < n; ++j) polys.push_back(jacobi_polynomial(lambda[j] + n - 1 - j, a, b));
  std::vector<T> nodes = xs;
  std::vector<Rational> ones(static_cast<size_t>(n), Rational(1));
  while (static_cast<int>(nodes.size()) < n) nodes.push_back(lift<T>(1L, xs[0]));
  return polynomial_family_at_nodes(polys, nodes) / lift<T>(polynomial_family_at_nodes(polys, ones), xs[0]);
}

// Confluent bialternant ratio over rational points with multiplicities.
Rational confluent_ratio(CharFamily family, const Signature& lambda,
                         const std::vector<PointWithMultiplicity<Rational>>& points);

// s_lambda(1^N) when q == 1, else s_lambda(1, q, ..., q^{N-1}).
Rational weyl_dim(const Signature& lambda, const Rational& q = Rational(1));

// chi_lambda(1^N) when q == 1, else chi_lambda(q, ..., q^N).
Rational symplectic_dim(const Signature& lambda, const Rational& q = Rational(1));

// Filled-in specialization values for the remaining N - k variables.
std::vector<Rational> fill_values(CharFamily family, int count, const Rational& q);

// Normalized character S_lambda(xs; N, q) or its symplectic analogue.
template <class T>
T normalized_character(CharFamily family, const Signature& lambda, const std::vector<T>& xs, const Rational& q = Rational(1)) {
  const int n = lambda.size();
  if (xs.empty()) throw ArgumentError("at least one variable is required");
  if (static_cast<int>(xs.size()) > n) throw ArgumentError("more variables than the signature length");
  std::vector<T> nodes = xs;
  for (const auto& v : fill_values(family, n - static_cast<int>(xs.size()), q)) nodes.push_back(lift<T>(v, xs[0]));
  if (family == CharFamily::Schur) return schur_at_nodes(lambda, nodes) / lift<T>(weyl_dim(lambda, q), xs[0]);
  return symplectic_at_nodes(lambda, nodes) / lift<T>(symplectic_dim(lambda, q), xs[0]);
}

// nu in GT_{2N}: nu_i = lambda_i + 1 for i <= N, nu_i = -lambda_{2N-i+1} otherwise.
Signature symplectic_signature_embed(const Signature& lambda);

}  // namespace charasym
