#include "doctest.h"

#include "charasym/symfunc.hpp"

using namespace charasym;

namespace {
Rational q(long a, long b = 1) { return ratio(a, b); }
}  // namespace

TEST_CASE("branching oracle small cases") {
  CHECK(schur_branching(Signature({1, 0}), {q(2), q(3)}) == 5);
  CHECK(schur_branching(Signature({2, 1}), {q(2), q(3)}) == 30);
  CHECK(schur_branching(Signature({0, 0, 0}), {q(7), q(1, 3), q(-2)}) == 1);
  CHECK_THROWS_AS(schur_branching(Signature({1, 0}), {q(2)}), ArgumentError);
  CHECK_THROWS_AS(schur_branching(Signature({0, -1}), {q(0), q(2)}), DomainError);
}

TEST_CASE("branching is symmetric and homogeneous") {
  Signature lam({3, 1, -1});
  std::vector<Rational> xs{q(2), q(-1, 3), q(5, 2)};
  Rational v = schur_branching(lam, xs);
  CHECK(schur_branching(lam, {xs[2], xs[0], xs[1]}) == v);
  Rational c(3, 2);
  CHECK(schur_branching(lam, {c * xs[0], c * xs[1], c * xs[2]}) == rational_pow(c, lam.weight()) * v);
}

TEST_CASE("confluent ratio agrees with branching on distinct points") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_signatures(n, -3, 3)) {
      std::vector<Rational> xs;
      std::vector<PointWithMultiplicity<Rational>> pts;
      for (int i = 0; i < n; ++i) {
        xs.push_back(q(i + 2, 2 * i + 3) * (i % 2 ? -1 : 1));
        pts.push_back({xs.back(), 1});
      }
      REQUIRE(confluent_ratio(CharFamily::Schur, lam, pts) == schur_branching(lam, xs));
    }
}

TEST_CASE("confluent ratio at repeated points") {
  CHECK(confluent_ratio(CharFamily::Schur, Signature({1, 0}), {{q(5), 1}, {q(1), 1}}) == 6);
  CHECK(confluent_ratio(CharFamily::Schur, Signature({2, 1, 0}), {{q(1), 3}}) == 8);
  CHECK(confluent_ratio(CharFamily::Symplectic, Signature({1, 0}), {{q(1), 2}}) == 4);
  CHECK(confluent_ratio(CharFamily::Schur, Signature({2, 1, 0}), {{q(2), 2}, {q(3), 1}}) ==
        schur_branching(Signature({2, 1, 0}), {q(2), q(2), q(3)}));
}

TEST_CASE("weyl dimension") {
  CHECK(weyl_dim(Signature({2, 1, 0})) == 8);
  CHECK(weyl_dim(Signature({0, 0, 0, 0})) == 1);
  CHECK(weyl_dim(Signature({1, 0}), q(1, 2)) == q(3, 2));
  CHECK(weyl_dim(Signature({1, 0}), q(5)) == 6);
  CHECK_THROWS_AS(weyl_dim(Signature({1, 0}), q(0)), ArgumentError);
  CHECK(weyl_dim(Signature({2, 0, -1}), q(2, 3)) ==
        schur_branching(Signature({2, 0, -1}), {q(1), q(2, 3), q(4, 9)}));
  CHECK(symplectic_dim(Signature({1, 0})) == 4);
  CHECK(symplectic_dim(Signature({2, 1, 0})) ==
        confluent_ratio(CharFamily::Symplectic, Signature({2, 1, 0}), {{q(1), 3}}));
  CHECK(symplectic_dim(Signature({2, 1}), q(1, 2)) ==
        symplectic_at_nodes(Signature({2, 1}), std::vector<Rational>{q(1, 2), q(1, 4)}));
}

TEST_CASE("normalized characters") {
  CHECK(normalized_character(CharFamily::Schur, Signature({1, 0}), std::vector<Rational>{q(3)}) == 2);
  CHECK(normalized_character(CharFamily::Schur, Signature({3, 1, 0}), std::vector<Rational>{q(1), q(1)}) == 1);
  CHECK(normalized_character(CharFamily::Symplectic, Signature({1, 0}), std::vector<Rational>{q(1)}) == 1);
  CHECK(normalized_character(CharFamily::Symplectic, Signature({2, 0}), std::vector<Rational>{q(1, 4)}, q(1, 2)) == 1);
  CHECK(normalized_character(CharFamily::Schur, Signature({2, 0, 0}), std::vector<Rational>{q(1, 9)}, q(1, 3)) == 1);
}

TEST_CASE("symplectic character is invariant under inversion") {
  Signature lam({3, 1, 0});
  auto a = symplectic_at_nodes(lam, std::vector<Rational>{q(2), q(-3, 5), q(7)});
  auto b = symplectic_at_nodes(lam, std::vector<Rational>{q(1, 2), q(-3, 5), q(1, 7)});
  CHECK(a == b);
}

TEST_CASE("symplectic embedding into a signature of double length") {
  CHECK(symplectic_signature_embed(Signature({1, 0})) == Signature({2, 1, 0, -1}));
  CHECK(symplectic_signature_embed(Signature({0, 0, 0})) == Signature({1, 1, 1, 0, 0, 0}));
  CHECK_THROWS_AS(symplectic_signature_embed(Signature({1, -1})), ArgumentError);
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : all_signatures(n, 0, 3)) {
      Signature nu = symplectic_signature_embed(lam);
      for (Rational x : {q(2), q(-5, 3), q(1, 7)}) {
        Rational lhs = normalized_character(CharFamily::Symplectic, lam, std::vector<Rational>{x});
        Rational rhs = Rational(2) / (x + 1) * normalized_character(CharFamily::Schur, nu, std::vector<Rational>{x});
        REQUIRE(lhs == rhs);
        Rational qq(1, 2);
        Rational lhs_q = normalized_character(CharFamily::Symplectic, lam, std::vector<Rational>{x}, qq);
        Rational rhs_q = (1 + rational_pow(qq, n)) / (x + 1) *
                         normalized_character(CharFamily::Schur, nu, std::vector<Rational>{x * rational_pow(qq, n - 1)}, qq);
        REQUIRE(lhs_q == rhs_q);
      }
    }
}
