#include "doctest.h"

#include "charasym/asymptotics.hpp"
#include "charasym/characters.hpp"
#include "charasym/residue.hpp"

using namespace charasym;

namespace {
Rational q(long a, long b = 1) { return ratio(a, b); }
Real tiny(int exp10) { return pow(Real(10L), -exp10); }
}  // namespace

TEST_CASE("frobenius coordinates") {
  auto f = frobenius_coords(Signature({3, 1}));
  CHECK(f.d == 1);
  CHECK(f.p == std::vector<Rational>{q(5, 2)});
  CHECK(f.q == std::vector<Rational>{q(3, 2)});
  CHECK(frobenius_coords(Signature({0, 0})).d == 0);
  auto one = frobenius_coords(Signature({1}));
  CHECK(one.p == std::vector<Rational>{q(1, 2)});
  CHECK(one.q == std::vector<Rational>{q(1, 2)});
  for (const auto& lam : all_signatures(4, 0, 4)) {
    auto fr = frobenius_coords(lam);
    Rational s = 0;
    for (long i = 0; i < fr.d; ++i) s += fr.p[static_cast<size_t>(i)] + fr.q[static_cast<size_t>(i)];
    CHECK(s == lam.weight());
  }
  CHECK_THROWS_AS(frobenius_coords(Signature({2, -1})), ArgumentError);
}

TEST_CASE("voiculescu product") {
  VoiculescuParam zero;
  for (double x : {0.3, 1.7, -2.0}) CHECK(abs(voiculescu_phi(zero, Complex(x)) - Complex(1L)) < tiny(30));
  Complex x(q(3, 2));
  VoiculescuParam a;
  a.alpha_plus = {q(1, 2)};
  a.delta_plus = q(1, 2);
  CHECK(abs(voiculescu_phi(a, x) - Complex(1L) / (Complex(1L) - (x - Complex(1L)) / Complex(2L))) < tiny(30));
  VoiculescuParam b;
  b.beta_plus = {q(1, 2)};
  b.delta_plus = q(1, 2);
  CHECK(abs(voiculescu_phi(b, x) - (Complex(1L) + (x - Complex(1L)) / Complex(2L))) < tiny(30));
  VoiculescuParam bad;
  bad.beta_plus = {q(3, 4)};
  bad.beta_minus = {q(1, 2)};
  bad.delta_plus = bad.delta_minus = 1;
  CHECK_THROWS_AS(voiculescu_phi(bad, x), ArgumentError);
  a.delta_plus = q(1, 4);
  CHECK_THROWS_AS(voiculescu_phi(a, x), ArgumentError);
}

TEST_CASE("finite-N Phi against the product identity and Q") {
  PrecisionScope scope(128);
  CHECK(phi_finite_N(Signature::zero(5), q(7, 3)) == 1);
  // lambda = (1, 0, ..., 0): one Frobenius pair (1/2, 1/2)
  for (long n : {3, 6}) {
    std::vector<long> parts(static_cast<size_t>(n), 0);
    parts[0] = 1;
    Rational w = q(5, 2);
    CHECK(phi_finite_N(Signature(parts), w) == w / (w + q(1, n)));
  }
  const std::vector<Rational> ws{q(7, 3), q(-11, 2), q(3, 17), q(40, 3), q(-1, 9)};
  for (const auto& lam : {Signature({4, 2, 2, 0, -1, -3, -3}), Signature({5, 1, 0}), Signature({-1, -2, -2, -6})})
    for (const auto& w : ws) {
      const long n = lam.size();
      Rational prod = 1;
      for (long j = 1; j <= n; ++j) prod *= (Rational(n) * w + j - lam[static_cast<int>(j - 1)]) / (Rational(n) * w + j);
      CHECK(phi_finite_N(lam, w) == prod);
      Complex viaq = exp(q_factor(Profile::zero(), lam, Complex(w + 1)));
      CHECK(abs(viaq - to_complex(prod)) < tiny(30));
    }
}

TEST_CASE("Voiculescu families converge") {
  PrecisionScope scope(128);
  const std::vector<Complex> xs{Complex(q(9, 10)), Complex(q(11, 10)), Complex::expi_pi(q(1, 3)),
                                Complex::expi_pi(q(-3, 4)), Complex(0.95, 0.2)};
  for (auto fam : {VoiculescuFamily::Alpha, VoiculescuFamily::Beta, VoiculescuFamily::Gamma}) {
    auto lim = voiculescu_family_limit(fam);
    for (const auto& x : xs) {
      double prev = 1e9;
      for (int n : {50, 100, 200}) {
        Complex s = residue_eval_adaptive(Family::Schur1, voiculescu_family_signature(fam, n), {}, x);
        double e = abs(s - voiculescu_phi(lim, x)).to_double();
        CHECK((e < prev || e < 1e-25));
        prev = e;
      }
      CHECK(prev < 0.02);
    }
  }
}

TEST_CASE("family parameters approach the limit") {
  auto w = voiculescu_from_signature(voiculescu_family_signature(VoiculescuFamily::Alpha, 400));
  REQUIRE(w.alpha_plus.size() == 1);
  CHECK(w.alpha_plus[0] == q(399, 800));
  CHECK(w.beta_plus[0] == q(1, 800));
  auto g = voiculescu_family_signature(VoiculescuFamily::Gamma, 50);
  CHECK(g.weight() == 50);
  CHECK(g[0] == 7);
  auto mixed = voiculescu_from_signature(Signature({2, 0, -1}));
  CHECK(mixed.delta_plus == q(2, 3));
  CHECK(mixed.delta_minus == q(1, 3));
  CHECK(mixed.gamma_plus() == 0);
}

TEST_CASE("q-Pochhammer") {
  PrecisionScope scope(128);
  Real bound;
  Complex v = q_pochhammer_inf(Complex(q(1, 2)), q(1, 2), &bound);
  // (1/2; 1/2)_inf
  CHECK(abs(v - Complex(0.28878809508660242128)) < Real(1e-15));
  CHECK(bound < tiny(35));
  CHECK_THROWS_AS(q_pochhammer_inf(Complex(1L), q(3, 2)), ArgumentError);
}

TEST_CASE("F_nu limits match finite-N q-ratios") {
  PrecisionScope scope(128);
  const Rational qq = q(1, 2);
  for (const auto& pre : std::vector<std::vector<long>>{{0}, {0, 1, 1, 3}, {-1, 0, 2}}) {
    LimitSequence nu(pre);
    Signature lam = nu.signature(40);
    for (const auto& x : {q(1, 3), q(5, 2), q(-3), q(7, 8)}) {
      auto r = fnu(nu, Complex(x), 40, qq);
      Rational exact = q_character_ratio(lam, {x}, qq);
      CHECK(abs(r.value - to_complex(exact)) < Real(1e-8));
      // doubling the truncation moves the value by less than the bound
      auto r2 = fnu(nu, Complex(x), 80, qq);
      CHECK(abs(r2.value - r.value) <= r.tail_bound + tiny(30));
    }
    // vanishing at x = q^-i, i >= 1
    for (long i = 1; i <= 4; ++i) {
      auto s = fnu_sum(nu, Complex(rational_pow(qq, -i)), 40, qq);
      CHECK(abs(s.sum) <= s.tail_bound + tiny(25) * (Real(1L) + abs(s.sum)));
      CHECK_THROWS_AS(fnu(nu, Complex(rational_pow(qq, -i)), 40, qq), PoleError);
    }
  }
  CHECK(abs(fnu(LimitSequence({0}), Complex(2.5), 30, qq).value - Complex(1L)) < tiny(30));
  CHECK_THROWS_AS(LimitSequence({2, 1}), ArgumentError);
  CHECK_THROWS_AS(fnu(LimitSequence({0, 1, 2}), Complex(1L), 2, qq), ArgumentError);
  CHECK_THROWS_AS(fnu(LimitSequence({0}), Complex(1e6), 3, qq), TruncationError);
}

TEST_CASE("multivariate F_nu") {
  PrecisionScope scope(128);
  for (const Rational& qq : {q(1, 2), q(1, 3)})
    for (const auto& pre : std::vector<std::vector<long>>{{0}, {0, 1, 1, 3}, {-1, 0, 2}}) {
      LimitSequence nu(pre);
      Signature lam = nu.signature(40);
      const std::vector<Rational> xs{q(2, 7), q(-7, 4), q(3, 2)};
      CHECK(abs(fnu_multivar(nu, {Complex(xs[0])}, qq, 40) - fnu(nu, Complex(xs[0]), 40, qq).value) < tiny(30));
      for (size_t k = 2; k <= 3; ++k) {
        std::vector<Rational> sub(xs.begin(), xs.begin() + static_cast<long>(k));
        std::vector<Complex> cs;
        for (const auto& x : sub) cs.push_back(Complex(x));
        Rational exact = q_character_ratio(lam, sub, qq);
        CHECK(abs(fnu_multivar(nu, cs, qq, 40) - to_complex(exact)) < Real(1e-8));
      }
      Complex ab = fnu_multivar(nu, {Complex(xs[0]), Complex(xs[1])}, qq, 40);
      Complex ba = fnu_multivar(nu, {Complex(xs[1]), Complex(xs[0])}, qq, 40);
      CHECK(abs(ab - ba) < tiny(28));
    }
  CHECK_THROWS_AS(fnu_multivar(LimitSequence({0}), {Complex(2L), Complex(2L)}, q(1, 2), 20), DegeneracyError);
}
