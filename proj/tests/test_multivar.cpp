#include "doctest.h"

#include "charasym/multivar.hpp"
#include "charasym/symfunc.hpp"

using namespace charasym;

namespace {
Rational q(long a, long b = 1) { return ratio(a, b); }

const std::vector<Rational>& pool() {
  static const std::vector<Rational> p{q(7, 3), q(-3), q(5, 7), q(5, 2)};
  return p;
}

std::vector<Rational> first(size_t k) { return std::vector<Rational>(pool().begin(), pool().begin() + static_cast<long>(k)); }

Rational jacobi_x(const Rational& z) { return (z + 1 / z) / 2; }

// The generic class ratio uses the plain Vandermonde; the symplectic
// character divides by the symplectic Weyl denominator instead.
Rational sp_den(const std::vector<Rational>& xs) {
  Rational v = 1;
  for (size_t i = 0; i < xs.size(); ++i) {
    v *= xs[i] - 1 / xs[i];
    for (size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] + 1 / xs[i] - xs[j] - 1 / xs[j];
  }
  return v;
}

Rational plain_den(const std::vector<Rational>& xs) {
  Rational v = 1;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] - xs[j];
  return v;
}

Rational symplectic_conversion(const std::vector<Rational>& xs, long n, const Rational& qq) {
  std::vector<Rational> th, mixed = xs;
  for (long i = 1; i <= n; ++i) th.push_back(rational_pow(qq, i));
  for (long i = 1; i <= n - static_cast<long>(xs.size()); ++i) mixed.push_back(th[static_cast<size_t>(i - 1)]);
  return plain_den(mixed) / plain_den(th) * sp_den(th) / sp_den(mixed);
}
}  // namespace

TEST_CASE("schur determinant formulas match the bialternant") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_signatures(n, -2, 2))
      for (int k = 1; k <= std::min(n, 3); ++k) {
        auto xs = first(static_cast<size_t>(k));
        CAPTURE(lam.to_string());
        CAPTURE(k);
        Rational ref = normalized_character(CharFamily::Schur, lam, xs);
        REQUIRE(multivar_det_eval(Family::Schur1, lam, xs, {}) == ref);
        REQUIRE(multivar_expansion(lam, xs) == ref);
        REQUIRE(generic_multivar(schur_class(1), StrictSignature::from(lam), xs) == ref);
        for (Rational qq : {q(1, 2), q(3)}) {
          FamilyParams p;
          p.q = qq;
          Rational refq = normalized_character(CharFamily::Schur, lam, xs, qq);
          REQUIRE(multivar_det_eval(Family::SchurQ, lam, xs, p) == refq);
          REQUIRE(generic_multivar(schur_class(qq), StrictSignature::from(lam), xs) == refq);
        }
      }
}

TEST_CASE("symplectic determinant formulas match the bialternant") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_signatures(n, 0, n <= 3 ? 3 : 2))
      for (int k = 1; k <= std::min(n, 3); ++k) {
        auto xs = first(static_cast<size_t>(k));
        CAPTURE(lam.to_string());
        CAPTURE(k);
        Rational ref = normalized_character(CharFamily::Symplectic, lam, xs);
        REQUIRE(multivar_det_eval(Family::Symplectic1, lam, xs, {}) == ref);
        std::vector<Rational> ts;
        for (const auto& x : xs) ts.push_back(x + 1 / x);
        REQUIRE(generic_multivar(symplectic_t_class(), StrictSignature::from(lam), ts) == ref);
        for (Rational qq : {q(1, 2), q(3)}) {
          FamilyParams p;
          p.q = qq;
          Rational refq = normalized_character(CharFamily::Symplectic, lam, xs, qq);
          REQUIRE(multivar_det_eval(Family::SymplecticQ, lam, xs, p) == refq);
          REQUIRE(generic_multivar(symplectic_class(qq), StrictSignature::from(lam), xs) * symplectic_conversion(xs, n, qq) == refq);
        }
      }
}

TEST_CASE("jacobi determinant formula matches the bialternant") {
  const std::vector<std::pair<Rational, Rational>> ab{{q(0), q(0)}, {q(1, 2), q(1, 2)}, {q(2), q(-1, 3)}, {q(-1, 2), q(3, 2)}};
  for (const auto& [a, b] : ab)
    for (int n = 1; n <= 4; ++n)
      for (const auto& lam : all_signatures(n, 0, n <= 3 ? 3 : 2))
        for (int k = 1; k <= std::min(n, 3); ++k) {
          auto zs = first(static_cast<size_t>(k));
          std::vector<Rational> xs;
          for (const auto& z : zs) xs.push_back(jacobi_x(z));
          CAPTURE(lam.to_string());
          CAPTURE(k);
          Rational ref = jacobi_normalized(lam, xs, a, b);
          FamilyParams p;
          p.a = a;
          p.b = b;
          REQUIRE(multivar_det_eval(Family::Jacobi, lam, zs, p) == ref);
          REQUIRE(generic_multivar(jacobi_class(a, b), StrictSignature::from(lam), xs) == ref);
        }
}

TEST_CASE("eigenfunction conditions") {
  std::vector<Rational> xs{q(2), q(-5, 3), q(7, 11)};
  std::vector<long> ms{0, 1, 2, 5};
  CHECK(eigen_defect(schur_class(q(1, 2)), xs, ms) == 0);
  CHECK(eigen_defect(symplectic_class(q(3)), xs, ms) == 0);
  CHECK_THROWS_AS(eigen_defect(schur_class(1), xs, ms), ArgumentError);
}

TEST_CASE("ptl polynomials") {
  for (long n = 2; n <= 6; ++n) {
    CHECK(ptl_poly(1, 0, n).coefficients == std::vector<Rational>{q(1)});
    CHECK(ptl_poly(2, 1, n).coefficients == std::vector<Rational>{q(n, n - 1)});
    // x d/dx (x-1)^{N-1} = (N-1) x (x-1)^{N-2}
    CHECK(ptl_poly(2, 0, n).coefficients == std::vector<Rational>{q(0), q(1)});
  }
  auto p = ptl_poly(3, 0, 5);
  CHECK(p.degree() == 2);
  CHECK(ptl_poly(3, 1, 5).degree() == 1);
  CHECK_THROWS_AS(ptl_poly(2, 2, 5), ArgumentError);
  CHECK_THROWS_AS(ptl_poly(6, 0, 5), ArgumentError);
}

TEST_CASE("near-confluent values approach the multiplicity evaluation") {
  Signature lam({3, 1, 0, 0});
  Rational exact = confluent_ratio(CharFamily::Schur, lam, {{q(2), 2}, {q(1), 2}}) / weyl_dim(lam);
  Rational eps = q(1, 1000000);
  Rational near = multivar_det_eval(Family::Schur1, lam, std::vector<Rational>{q(2), q(2) + eps}, {});
  CHECK(abs(near - exact) < q(1, 10000));
}

TEST_CASE("complex evaluation agrees with rational evaluation") {
  Signature lam({2, 1, 0});
  std::vector<Rational> xs{q(7, 3), q(-3)};
  std::vector<Complex> cx;
  for (const auto& x : xs) cx.push_back(to_complex(x));
  for (Family f : {Family::Schur1, Family::Symplectic1, Family::Jacobi}) {
    Rational r = multivar_det_eval(f, lam, xs, {});
    Complex c = multivar_det_eval(f, lam, cx, {});
    CHECK(abs(c - to_complex(r)) < Real(1e-25) * (1 + abs(to_complex(r))));
  }
  Rational r = multivar_expansion(lam, xs);
  CHECK(abs(multivar_expansion(lam, cx) - to_complex(r)) < Real(1e-25) * (1 + abs(to_complex(r))));
}

TEST_CASE("domain errors") {
  Signature lam({2, 1, 0});
  CHECK_THROWS_AS(multivar_det_eval(Family::Schur1, lam, std::vector<Rational>{q(2), q(2)}, {}), DegeneracyError);
  CHECK_THROWS_AS(multivar_det_eval(Family::Schur1, lam, std::vector<Rational>{q(1), q(2)}, {}), PoleError);
  CHECK_THROWS_AS(multivar_det_eval(Family::Schur1, lam, std::vector<Rational>{q(2), q(3), q(4), q(5)}, {}), ArgumentError);
}
