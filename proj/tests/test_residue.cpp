#include "doctest.h"

#include "charasym/residue.hpp"
#include "charasym/symfunc.hpp"

using namespace charasym;

namespace {
Rational q(long a, long b = 1) { return ratio(a, b); }

Rational schur_oracle(const Signature& lam, const Rational& x, const Rational& qq) {
  std::vector<Rational> xs{x};
  for (int i = 0; i + 1 < lam.size(); ++i) xs.push_back(rational_pow(qq, i));
  return schur_branching(lam, xs) / weyl_dim(lam, qq);
}
}  // namespace

TEST_CASE("schur laurent form") {
  auto p = schur_laurent(Signature({1, 0}));
  CHECK(p.coefficient(2) == q(1, 2));
  CHECK(p.coefficient(0) == q(-1, 2));
  CHECK(p.support_size() == 2);
  auto z = schur_laurent(Signature({0, 0, 0}));
  CHECK(z.coefficient(2) == q(1, 2));
  CHECK(z.coefficient(1) == -1);
  CHECK(z.coefficient(0) == q(1, 2));
  auto shifted = schur_laurent(Signature({4, 2, 2}));
  auto base = schur_laurent(Signature({2, 0, 0}));
  CHECK(shifted == base.shifted(2));
  CHECK(schur_univariate(Signature({1, 0})) == LaurentPolynomial::monomial(1, q(1, 2)) + LaurentPolynomial::constant(q(1, 2)));
  CHECK(schur_univariate(Signature({0, 0, 0, 0})) == LaurentPolynomial::constant(1));
}

TEST_CASE("residue sums reproduce the branching oracle") {
  CHECK(residue_eval(Family::Schur1, Signature({1, 0}), {}, q(2)) == q(3, 2));
  CHECK(residue_eval(Family::SchurQ, Signature({1, 0}), {q(1, 2)}, q(3)) == q(8, 3));
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_signatures(n, -3, 3))
      for (Rational x : {q(2), q(3), q(1, 2), q(-2)}) {
        REQUIRE(residue_eval(Family::Schur1, lam, {}, x) == schur_oracle(lam, x, 1));
        for (Rational qq : {q(1, 2), q(2, 3)}) {
          if (x == q(1, 2)) continue;  // a pole of the q prefactor
          FamilyParams p;
          p.q = qq;
          REQUIRE(residue_eval(Family::SchurQ, lam, p, x) == schur_oracle(lam, x, qq));
        }
      }
  CHECK_THROWS_AS(residue_eval(Family::Schur1, Signature({1, 0}), {}, q(1)), DomainError);
  CHECK_THROWS_AS(residue_eval(Family::SchurQ, Signature({1, 0, 0}), {q(1, 2)}, q(1, 2)), DomainError);
}

TEST_CASE("symplectic residue sums") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : all_signatures(n, 0, 3))
      for (Rational x : {q(7, 3), q(-3), q(5, 7), q(5, 2)}) {
        Rational direct = normalized_character(CharFamily::Symplectic, lam, std::vector<Rational>{x});
        REQUIRE(residue_eval(Family::Symplectic1, lam, {}, x) == direct);
        Signature nu = symplectic_signature_embed(lam);
        REQUIRE(residue_eval(Family::Symplectic1, lam, {}, x) == Rational(2) / (x + 1) * residue_eval(Family::Schur1, nu, {}, x));
        for (Rational qq : {q(1, 2), q(2, 3), q(3)}) {
          FamilyParams p;
          p.q = qq;
          REQUIRE(residue_eval(Family::SymplecticQ, lam, p, x) ==
                  normalized_character(CharFamily::Symplectic, lam, std::vector<Rational>{x}, qq));
        }
      }
}

TEST_CASE("jacobi residue sum against the bialternant") {
  for (auto ab : {std::pair{q(0), q(0)}, std::pair{q(1, 2), q(1, 2)}, std::pair{q(1, 3), q(-1, 2)}, std::pair{q(2), q(5, 4)}})
    for (int n = 1; n <= 3; ++n)
      for (const auto& lam : all_signatures(n, 0, 3))
        for (Rational z : {q(2), q(-3), q(1, 3)}) {
          FamilyParams p;
          p.a = ab.first;
          p.b = ab.second;
          Rational x = (z + 1 / z) / 2;
          REQUIRE(residue_eval(Family::Jacobi, lam, p, z) == jacobi_normalized(lam, std::vector<Rational>{x}, p.a, p.b));
        }
}

TEST_CASE("jacobi at a = b = 1/2 is the normalized symplectic character") {
  FamilyParams p;
  p.a = q(1, 2);
  p.b = q(1, 2);
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : all_signatures(n, 0, 3))
      for (Rational z : {q(2), q(-3, 2), q(1, 5)})
        REQUIRE(residue_eval(Family::Jacobi, lam, p, z) ==
                normalized_character(CharFamily::Symplectic, lam, std::vector<Rational>{z}));
}

TEST_CASE("terminating hypergeometric sum") {
  // 2F1(-2, 3; 1; x) = 1 - 6x + 6x^2
  CHECK(hyp2f1_terminating(2, q(3), q(1), q(1, 2)) == q(-1, 2));
  CHECK(hyp2f1_terminating(0, q(3), q(1), q(7)) == 1);
}

TEST_CASE("contour quadrature matches residues") {
  PrecisionScope scope(128);
  auto r = contour_quadrature(Signature({1, 0}), Complex(2.0), default_contour(Signature({1, 0})));
  CHECK(abs(r.value - Complex(1.5)).to_double() < 1e-10);
  auto z = contour_quadrature(Signature({0, 0, 0, 0}), Complex(3.0), default_contour(Signature({0, 0, 0, 0})));
  CHECK(abs(z.value - Complex(1.0)).to_double() < 1e-10);
  Signature lam({3, 1, 1, 0, -2});
  Complex x(Real(0.5), Real(1.25));
  auto c = contour_quadrature(lam, x, default_contour(lam));
  Complex exact = residue_eval(Family::Schur1, lam, {}, x);
  CHECK((abs(c.value - exact) / abs(exact)).to_double() < 1e-10);
  RectContour bad = default_contour(Signature({1, 0}));
  bad.left = Real(0L);
  CHECK_THROWS_AS(contour_quadrature(Signature({1, 0}), Complex(2.0), bad), QuadratureError);
  bad.left = Real(1.5);
  CHECK_THROWS_AS(contour_quadrature(Signature({1, 0}), Complex(2.0), bad), PreconditionError);
}
