#include "doctest.h"

#include <cmath>

#include "charasym/asymptotics.hpp"
#include "charasym/multivar.hpp"
#include "charasym/residue.hpp"

using namespace charasym;

namespace {
Rational q(long a, long b = 1) { return ratio(a, b); }
Real R(double v) { return Real(v); }
Complex C(double re, double im = 0) { return Complex(re, im); }
Real err(const Complex& a, const Complex& b) { return abs(a - b); }
Real tiny(int exp10) { return pow(Real(10L), -exp10); }

std::vector<Profile> sample_profiles() {
  return {Profile::zero(), Profile::linear(q(3, 2)), Profile::loop(),
          Profile({{q(0), q(1)}, {q(1, 3), q(1, 2)}, {q(1), q(-1, 5)}})};
}
}  // namespace

TEST_CASE("F closed forms") {
  Profile z = Profile::zero();
  Complex two(2L);
  CHECK(err(profile_F(z, two), C(2 * std::log(2.0) - 1)) < R(1e-15));
  CHECK(err(profile_F(z, two), two * log(two) - Complex(1L)) < tiny(35));
  for (double w : {3.0, -2.0, 1.5, -0.25}) {
    Complex cw(w);
    CHECK(err(profile_F(z, cw, 1), -log(Complex(1L) - Complex(1L) / cw)) < tiny(35));
  }
  const Rational alpha = q(3, 2);
  Complex w(5L), a{Real(alpha)};
  Complex one(1L);
  Complex expected = (w * log(w) - (w - a - one) * log(w - a - one)) / (a + one) - one;
  CHECK(err(profile_F(Profile::linear(alpha), w, 0), expected) < tiny(35));
  Profile loop = Profile::loop();
  Complex w3(3L), c54{Real(q(5, 4))}, c14{Real(q(1, 4))};
  Complex loop_f = (Complex(-6L) + (Complex(5L) - Complex(4L) * w3) * log(w3 - c54) + (one + Complex(4L) * w3) * log(w3 + c14)) / Complex(6L);
  CHECK(err(profile_F(loop, w3, 0), loop_f) < tiny(35));
  CHECK(err(profile_F(loop, w3, 2), -one / ((w3 + c14) * (w3 - c54))) < tiny(35));
  CHECK(err(profile_F(loop, w3, 1), Complex(Real(q(-2, 3))) * (log(w3 - c54) - log(w3 + c14))) < tiny(35));
  CHECK_THROWS_AS(profile_F(z, C(0.5), 0), BranchError);
  CHECK_THROWS_AS(profile_F(z, C(1.0), 1), BranchError);
  CHECK_THROWS_AS(profile_F(z, two, 4), ArgumentError);
}

TEST_CASE("F derivatives agree with finite differences") {
  PrecisionScope scope(128);
  Complex h(Real(1e-12), Real(0L));
  for (const auto& f : sample_profiles()) {
    auto [lo, hi] = f.support();
    int count = 0;
    for (int i = 0; i < 10; ++i) {
      for (bool above : {true, false}) {
        double d = 0.1 + 0.37 * i;
        Real base = above ? Real(hi) + Real(d) : Real(lo) - Real(d);
        Complex w = i % 3 == 0 ? Complex(base, Real(0.3 * i)) : Complex(base);
        for (int order = 0; order < 3; ++order) {
          Complex fd = (profile_F(f, w + h, order) - profile_F(f, w - h, order)) / (h + h);
          Complex exact = profile_F(f, w, order + 1);
          CHECK(abs(fd - exact) < Real(1e-20) * (Real(1L) + abs(exact)));
        }
        ++count;
      }
    }
    CHECK(count == 20);
  }
}

TEST_CASE("profiles and closed-form moments") {
  CHECK(Profile::halfstair().mean() == q(1, 4));
  CHECK(Profile::halfstair().fluctuation() == q(5, 48));
  CHECK(Profile::zero().mean() == 0);
  CHECK(Profile::zero().fluctuation() == 0);
  // linear(alpha): E = alpha/2, S = alpha^2/3 - alpha^2/4 + alpha/6
  CHECK(Profile::linear(q(2)).fluctuation() == q(4, 3) - 1 + q(1, 3));
  CHECK(Profile::loop().support() == std::make_pair(q(-1, 4), q(5, 4)));
  CHECK(Profile::parse("halfstair").mean() == q(1, 4));
  CHECK(Profile::parse("linear:3/2").value(q(1, 3)) == 1);
  CHECK(Profile::parse("0:1;1/2:1/2;1:0").integral(q(1, 2)) == q(3, 8));
  CHECK_THROWS_AS(Profile({{q(0), q(0)}, {q(1), q(1)}}), ArgumentError);
  CHECK_THROWS_AS(Profile::parse("0:1;1/2"), ArgumentError);
  auto g = gue_regime(Profile::halfstair(), C(0), 100);
  CHECK(g.mean == q(1, 4));
  CHECK(g.fluctuation == q(5, 48));
  CHECK(err(g.prediction, C(1)) < tiny(30));
  CHECK(err(gue_regime(Profile::zero(), C(0.7), 100).prediction, C(1)) < tiny(30));
}

TEST_CASE("critical points") {
  PrecisionScope scope(128);
  Profile z = Profile::zero();
  Complex y{log(Real(2L))};
  CHECK(err(critical_point(z, y), Complex(2L)) < tiny(30));
  for (double yy : {0.3, 1.0, 2.5, -0.4, -2.0}) {
    Complex cy(yy);
    Complex ey = exp(cy);
    for (const auto& [alpha, f] : {std::pair{q(0), Profile::zero()}, std::pair{q(3, 2), Profile::linear(q(3, 2))}}) {
      Complex a1{Real(alpha + 1)};
      Complex expected = a1 / (Complex(1L) - exp(-cy * a1));
      Complex w0 = critical_point(f, cy);
      CHECK(err(w0, expected) < tiny(30));
      CHECK(abs(profile_F(f, w0, 1) - cy) < tiny(30));
      auto [lo, hi] = f.support();
      if (yy > 0) CHECK(w0.re() > Real(hi));
      if (yy < 0) CHECK(w0.re() < Real(lo));
    }
    Complex e32 = exp(cy * C(1.5));
    Complex loop_expected = (Complex(1L) + Complex(5L) * e32) / (Complex(4L) * (e32 - Complex(1L)));
    CHECK(err(critical_point(Profile::loop(), cy), loop_expected) < tiny(30));
    (void)ey;
  }
  for (const auto& f : sample_profiles())
    for (Complex cy : {C(0.5, 0.5), C(0, 1), C(-1, 0.25), C(0.2, -1)}) {
      Complex w0 = critical_point(f, cy);
      CHECK(abs(profile_F(f, w0, 1) - cy) < tiny(30));
    }
  CHECK_THROWS_AS(critical_point(z, C(0)), DomainError);
}

TEST_CASE("first order limit") {
  PrecisionScope scope(128);
  for (double yy : {0.1, 0.5, 1.0, 2.0, 3.5, -0.1, -0.5, -1.0, -2.0, -3.5})
    CHECK(abs(first_order_limit(Profile::zero(), C(yy))) < tiny(25));
  // against ln S / N on the half-staircase family
  SignatureFamily fam{Profile::halfstair(), RoundingRule::Cumulative};
  for (double yy : {0.5, -0.5}) {
    Complex y(yy);
    Complex limit = first_order_limit(fam.profile, y);
    std::vector<double> errs;
    for (long n : {64, 128, 256}) {
      Complex ls = log_normalized_schur(fam(n), exp(y), limit * Complex(Real(n)));
      errs.push_back(abs(ls / Complex(Real(n)) - limit).to_double());
    }
    CHECK(errs[1] < errs[0]);
    CHECK(errs[2] < errs[1]);
    CHECK(errs[2] * 256 < 2 * errs[0] * 64);  // C/N behaviour
  }
}

TEST_CASE("Q factor") {
  PrecisionScope scope(128);
  for (long n : {5, 12}) {
    std::vector<long> parts;
    for (long i = 1; i <= n; ++i) parts.push_back(n - i);
    CHECK(q_factor(Profile::linear(1), Signature(parts), C(3.5)).is_zero());
  }
  Signature lam({3, 1, 1, 0});
  Real prev(1e9);
  for (double w : {10.0, 100.0, 1000.0, 10000.0}) {
    Real v = abs(q_factor(Profile::halfstair(), lam, C(w)));
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < Real(1e-3));
}

TEST_CASE("second order prediction") {
  PrecisionScope scope(128);
  // Both of these have lambda = N f on the nose, so the prediction is exact.
  for (long n : {16, 32, 64, 128}) {
    Complex p = second_order_prediction(Profile::zero(), Signature::zero(static_cast<int>(n)), C(0.5));
    CHECK(abs(p - C(1)) < tiny(30));
  }
  for (long n : {32, 64, 128}) {
    std::vector<long> parts;
    for (long i = 1; i <= n; ++i) parts.push_back(n - i);
    Signature lam(parts);
    Complex lp = second_order_log_prediction(Profile::linear(1), lam, C(0.5));
    Complex exact = log_normalized_schur(lam, exp(C(0.5)), lp);
    CHECK(abs(exact - lp) < tiny(30));
  }
  // lambda = (1, ..., 1) against f = 0: S = x, carried entirely by the Q correction
  for (long n : {16, 64}) {
    Complex lp = second_order_log_prediction(Profile::zero(), Signature(std::vector<long>(static_cast<size_t>(n), 1)), C(0.5));
    CHECK(abs(lp - C(0.5)) < Real(2.0 / n));
  }
  // staircase signature of the loop model, 2L = 64 and 2L = 128
  for (long l : {32, 64}) {
    std::vector<long> nu;
    for (long i = 1; i <= 2 * l; ++i) nu.push_back(static_cast<long>(std::floor((l - i) / 2.0)) + 1);
    Signature sig(nu);
    Complex y(0.25);
    Complex lp = second_order_log_prediction(Profile::loop(), sig, y);
    Complex exact = log_normalized_schur(sig, exp(y), lp);
    double rel = abs(exp(exact - lp) - C(1)).to_double();
    CHECK(rel < (l == 32 ? 0.05 : 0.03));
  }
}

TEST_CASE("signature families") {
  const Profile f = Profile::halfstair();
  for (long n : {10, 33, 100}) {
    Signature c = SignatureFamily{f, RoundingRule::Cumulative}(n);
    Signature fl = SignatureFamily{f, RoundingRule::Floor}(n);
    CHECK(c.size() == n);
    CHECK(r_infinity(c, f) <= q(1, n));
    CHECK(r_one(fl, f) <= 1);
    CHECK(r_one(c, f) <= 1);
    // total size tracks N^2 E(f) to within rounding
    CHECK(abs(Rational(c.weight()) - Rational(n * n) * f.mean()) <= q(1, 2));
  }
  CHECK(SignatureFamily{Profile::zero(), RoundingRule::Floor}(4) == Signature::zero(4));
}

TEST_CASE("GUE regime ladder") {
  PrecisionScope scope(256);
  SignatureFamily fam{Profile::halfstair(), RoundingRule::Cumulative};
  for (Complex h : {C(0.5), C(-0.5), C(1), C(0, 1), C(1, -1)}) {
    double prev = 1e9;
    for (long n : {16, 32, 64, 128}) {
      auto g = gue_regime(fam.profile, h, n);
      Complex ref = log(g.prediction);
      Complex x = exp(h / Complex(sqrt(Real(n))));
      double e = abs(log_normalized_schur(fam(n), x, ref) - ref).to_double();
      CHECK(e < prev);
      prev = e;
    }
    CHECK(prev < 0.02);
  }
}

TEST_CASE("multiplicativity of the logarithm") {
  SignatureFamily fam{Profile::halfstair(), RoundingRule::Cumulative};
  PrecisionScope scope(128);
  const Rational x1 = 2, x2 = 3;
  Complex psi = first_order_limit(fam.profile, Complex(log(Real(x1)))) + first_order_limit(fam.profile, Complex(log(Real(x2))));
  double prev = 1e9;
  for (long n : {8, 16, 32}) {
    Rational v = multivar_det_eval(Family::Schur1, fam(n), std::vector<Rational>{x1, x2}, {});
    REQUIRE(v > 0);
    double e = std::abs((log(Real(v)) / Real(n)).to_double() - psi.re().to_double());
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("two-variable GUE regime factorizes") {
  PrecisionScope scope(128);
  SignatureFamily fam{Profile::halfstair(), RoundingRule::Cumulative};
  double prev = 1e9;
  for (long n : {16, 32, 64}) {
    Complex rn(sqrt(Real(n)));
    Complex x1 = exp(C(0.5) / rn), x2 = exp(C(-1.0 / 3) / rn);
    Signature lam = fam(n);
    Complex joint = multivar_eval_adaptive(Family::Schur1, lam, {x1, x2}, {});
    Complex s1 = residue_eval_adaptive(Family::Schur1, lam, {}, x1);
    Complex s2 = residue_eval_adaptive(Family::Schur1, lam, {}, x2);
    double e = abs(joint / (s1 * s2) - C(1)).to_double();
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev < 0.05);
}
