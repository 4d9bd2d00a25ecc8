#include "charasym/linalg.hpp"

#include <utility>

#include "charasym/errors.hpp"

namespace charasym {

Integer determinant(Matrix<Integer> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1];
  return sign > 0 ? d : Integer(-d);
}

Rational determinant(Matrix<Rational> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Matrix<Integer> im(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (size_t j = 0; j < n; ++j) im[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
    scale *= l;
  }
  Rational r(determinant(std::move(im)), scale);
  r.canonicalize();
  return r;
}

namespace {

template <class T>
T eliminate(Matrix<T> m, bool& singular_pivot) {
  const size_t n = m.size();
  singular_pivot = false;
  if (n == 0) return T(1L);
  T det = lift<T>(1L, m[0][0]);
  for (size_t k = 0; k < n; ++k) {
    size_t best = k;
    Real best_size = pivot_size(m[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      Real s = pivot_size(m[i][k]);
      if (s > best_size) {
        best_size = s;
        best = i;
      }
    }
    if (best_size.is_zero()) {
      singular_pivot = true;
      return lift<T>(0L, m[0][0]);
    }
    if (best != k) {
      std::swap(m[k], m[best]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (is_zero_scalar(m[i][k])) continue;
      T f = m[i][k] / m[k][k];
      for (size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

template <class B>
Jet<B> jet_determinant(Matrix<Jet<B>> m) {
  const size_t n = m.size();
  if (n == 0) return Jet<B>(B(1L));
  bool singular = false;
  Jet<B> d = eliminate(m, singular);
  if (!singular) return d;
  // Value matrix is singular: d(det) = sum over columns of det with that
  // column replaced by its derivative (Jacobi's formula).
  Matrix<B> a(n, std::vector<B>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j].val;
  B base = determinant(a);
  B der = lift<B>(0L, base);
  for (size_t j = 0; j < n; ++j) {
    Matrix<B> c = a;
    for (size_t i = 0; i < n; ++i) c[i][j] = m[i][j].der;
    der += determinant(std::move(c));
  }
  return Jet<B>(base, der);
}

}  // namespace

Complex determinant(Matrix<Complex> m) {
  bool singular = false;
  Complex d = eliminate(std::move(m), singular);
  return d;
}

Jet<Rational> determinant(Matrix<Jet<Rational>> m) { return jet_determinant(std::move(m)); }
Jet<Complex> determinant(Matrix<Jet<Complex>> m) { return jet_determinant(std::move(m)); }

std::vector<Complex> solve(Matrix<Complex> m, std::vector<Complex> rhs) {
  const size_t n = m.size();
  for (size_t k = 0; k < n; ++k) {
    size_t best = k;
    for (size_t i = k + 1; i < n; ++i)
      if (pivot_size(m[i][k]) > pivot_size(m[best][k])) best = i;
    if (pivot_size(m[best][k]).is_zero()) throw DegeneracyError("singular linear system");
    std::swap(m[k], m[best]);
    std::swap(rhs[k], rhs[best]);
    for (size_t i = k + 1; i < n; ++i) {
      Complex f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Complex> x(n);
  for (size_t k = n; k-- > 0;) {
    Complex s = rhs[k];
    for (size_t j = k + 1; j < n; ++j) s -= m[k][j] * x[j];
    x[k] = s / m[k][k];
  }
  return x;
}

}  // namespace charasym
