#include "doctest.h"

#include <cmath>
#include <functional>
#include <map>

#include "charasym/symfunc.hpp"
#include "charasym/tilings.hpp"

using namespace charasym;

namespace {

Real tiny(int exp10) { return pow(Real(10L), -exp10); }

// Brute-force count of patterns from mu up to lambda by walking rows downward.
Integer count_by_dp(const Signature& mu, const Signature& lambda) {
  std::map<Signature, Integer> layer{{lambda, 1}};
  for (int len = lambda.size() - 1; len >= mu.size() && len >= 1; --len) {
    std::map<Signature, Integer> next;
    for (const auto& [kappa, c] : layer)
      for (const auto& m : interlacing_below(kappa)) next[m] += c;
    layer = std::move(next);
  }
  if (mu.size() == lambda.size()) return mu == lambda ? 1 : 0;
  auto it = layer.find(mu);
  return it == layer.end() ? Integer(0) : it->second;
}

// Pearson statistic of observed row counts against the exact law.
double chi_square(const std::vector<std::pair<Signature, Rational>>& law, const std::map<Signature, long>& seen, long total) {
  double chi = 0;
  for (const auto& [eta, p] : law) {
    const double e = p.get_d() * static_cast<double>(total);
    auto it = seen.find(eta);
    const double o = it == seen.end() ? 0.0 : static_cast<double>(it->second);
    chi += (o - e) * (o - e) / e;
  }
  return chi;
}

}  // namespace

TEST_CASE("gt_count") {
  CHECK(gt_count(Signature(std::vector<long>{}), Signature({1, 0})) == 2);
  CHECK(gt_count(Signature(std::vector<long>{}), Signature({2, 1, 0})) == 8);
  CHECK(gt_count(Signature({1}), Signature({1, 0})) == 1);
  CHECK(gt_count(Signature({0}), Signature({1, 0})) == 1);
  CHECK(gt_count(Signature({2}), Signature({2, 1, 0})) == 2);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : all_signatures(n, -1, 3)) {
      Integer total = 0;
      for (long v = lam[n - 1]; v <= lam[0]; ++v) total += gt_count(Signature({v}), lam);
      CHECK(Rational(total) == weyl_dim(lam));
    }
  for (const auto& lam : all_signatures(4, 0, 3))
    for (const auto& mu : all_signatures(2, 0, 3)) CHECK(gt_count(mu, lam) == count_by_dp(mu, lam));
  CHECK(gt_count(Signature({5, 0}), Signature({4, 2, 0})) == 0);
  CHECK_THROWS_AS(gt_count(Signature({1, 1, 1}), Signature({1, 1})), ArgumentError);
}

TEST_CASE("interlacing rows") {
  auto rows = interlacing_below(Signature({2, 1, 0}));
  CHECK(rows.size() == 4);
  for (const auto& m : rows) CHECK(interlaces(m, Signature({2, 1, 0})));
  CHECK(interlacing_below(Signature({3, 3, 3})).size() == 1);
  CHECK_THROWS_AS(interlacing_below(Signature({40, 20, 0}), 100), CapacityError);
  CHECK_THROWS_AS(interlacing_below(Signature({1})), ArgumentError);
}

TEST_CASE("row law sums to one and matches weyl dimensions") {
  for (const auto& lam : {Signature({2, 1, 0}), Signature({3, 1, 1, 0}), Signature({2, 0, -1, -1, -2})})
    for (int k = 1; k <= lam.size(); ++k) {
      Rational s = 0;
      for (const auto& [eta, p] : row_law(lam, k)) {
        CHECK(sgn(p) > 0);
        s += p;
      }
      CHECK(s == 1);
    }
  // (2,1,0): first row 0, 1, 2 in 2, 4, 2 of the 8 patterns
  auto law = row_law(Signature({2, 1, 0}), 1);
  REQUIRE(law.size() == 3);
  CHECK(law[0].second == ratio(2, 8));
  CHECK(law[1].second == ratio(4, 8));
  CHECK(law[2].second == ratio(2, 8));
}

TEST_CASE("exact sampler reproduces the row law") {
  const long count = 20000;
  for (const auto& lam : {Signature({2, 1, 0}), Signature({2, 2, 1, 0})}) {
    auto batch = sample_tiling(lam, count, 11);
    REQUIRE(batch.patterns.size() == static_cast<size_t>(count));
    for (const auto& p : batch.patterns) p.validate();
    for (int k = 1; k < lam.size(); ++k) {
      std::map<Signature, long> seen;
      for (const auto& p : batch.patterns) ++seen[p.rows[static_cast<size_t>(k - 1)]];
      auto law = row_law(lam, k);
      // 99.9% quantile of chi^2 with up to 10 degrees of freedom is below 30
      CHECK(law.size() <= 11);
      CHECK(chi_square(law, seen, count) < 30.0);
    }
  }
}

TEST_CASE("full pattern is uniform on a small polygon") {
  const Signature lam({2, 1, 0});
  const long count = 16000;
  std::map<GTPattern, long> seen;
  for (const auto& p : sample_tiling(lam, count, 5).patterns) ++seen[p];
  CHECK(seen.size() == 8);
  double chi = 0;
  for (const auto& [p, c] : seen) chi += std::pow(static_cast<double>(c) - count / 8.0, 2) / (count / 8.0);
  CHECK(chi < 24.3);  // 99.9% quantile, 7 degrees of freedom
}

TEST_CASE("mcmc agrees with the exact sampler") {
  const Signature lam({3, 2, 2, 0});
  SamplerOptions opt;
  opt.method = SamplerMethod::Mcmc;
  opt.thin = 8;
  auto batch = sample_tiling(lam, 20000, 3, opt);
  CHECK(batch.burn_in == 1600);
  for (const auto& p : batch.patterns) p.validate();
  for (int k = 1; k <= 2; ++k) {
    std::map<Signature, long> seen;
    for (const auto& p : batch.patterns) ++seen[p.rows[static_cast<size_t>(k - 1)]];
    // thinned chain samples are nearly independent; allow a looser bound
    CHECK(chi_square(row_law(lam, k), seen, 20000) < 45.0);
  }
}

TEST_CASE("frozen polygon") {
  const Signature lam({4, 4, 4});
  for (auto method : {SamplerMethod::Exact, SamplerMethod::Mcmc}) {
    SamplerOptions opt;
    opt.method = method;
    for (const auto& p : sample_tiling(lam, 5, 1, opt).patterns) {
      CHECK(p.rows[0] == Signature({4}));
      CHECK(p.rows[1] == Signature({4, 4}));
    }
  }
  GTPattern bad;
  bad.rows = {Signature({3}), Signature({2, 1})};
  CHECK_THROWS_AS(bad.validate(), InvariantViolation);
}

TEST_CASE("sample_row matches the law") {
  const Signature lam({3, 1, 1, 0, -1});
  auto draws = sample_row(lam, 2, 20000, 9);
  std::map<Signature, long> seen;
  for (const auto& e : draws) ++seen[e];
  auto law = row_law(lam, 2);
  // one parameter per cell: quantile loose enough for up to ~20 cells
  CHECK(chi_square(law, seen, 20000) < 3.0 * static_cast<double>(law.size()) + 20.0);
}

TEST_CASE("Bessel function") {
  PrecisionScope scope(128);
  for (double x : {0.3, -1.2})
    for (double y : {2.0, -0.5}) CHECK(abs(bessel_B({Complex(x)}, {Complex(y)}) - exp(Complex(x * y))) < tiny(30));
  // symmetric in the two argument sets
  std::vector<Complex> a{Complex(0.4), Complex(-0.7)}, b{Complex(1.5), Complex(0.2)};
  CHECK(abs(bessel_B(a, b) - bessel_B(b, a)) < tiny(30));
  CHECK_THROWS_AS(bessel_B({Complex(1L), Complex(1L)}, b), DegeneracyError);
}

TEST_CASE("Bessel moment generating identity") {
  PrecisionScope scope(128);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : all_signatures(n, 0, 3)) {
      if (n >= 4 && lam[0] < 2) continue;  // keep the loop short
      for (int k = 1; k <= std::min(2, n); ++k) {
        std::vector<Complex> xs{Complex(0.3)};
        if (k == 2) xs.push_back(Complex(-0.45));
        auto m = bessel_mgf(lam, xs);
        CHECK(abs(m.lhs - m.rhs) < tiny(25) * (Real(1L) + abs(m.rhs)));
      }
    }
}

TEST_CASE("GUE targets") {
  std::vector<double> m;
  std::vector<std::vector<double>> c;
  gue_targets(1, m, c);
  CHECK(m[0] == 0.0);
  CHECK(c[0][0] == 1.0);
  gue_targets(2, m, c);
  const double pi = std::acos(-1.0);
  CHECK(m[0] == doctest::Approx(2 / std::sqrt(pi)));
  // trace variance is 2
  CHECK(c[0][0] + c[1][1] + 2 * c[0][1] == doctest::Approx(2.0));
  CHECK_THROWS_AS(gue_targets(3, m, c), ArgumentError);
}

TEST_CASE("GUE corners report") {
  SignatureFamily fam{Profile::halfstair(), RoundingRule::Cumulative};
  auto rep = gue_corners_test(fam, 12, 1, 4000, 2, {{0.5}});
  REQUIRE(rep.mgf.size() == 1);
  // sampled moments agree with the exact law at this N
  CHECK(std::abs(rep.mean[0] - rep.exact_mean[0]) < 4 * rep.mean_error[0]);
  CHECK(std::abs(rep.covariance[0][0] - rep.exact_covariance[0][0]) < 4 * rep.covariance_error[0][0]);
  CHECK(std::abs(rep.mgf[0].empirical - rep.mgf[0].finite_n) < 4 * rep.mgf[0].standard_error);
  CHECK(rep.exact_covariance[0][0] == doctest::Approx(1.0).epsilon(0.15));
  auto rep2 = gue_corners_test(fam, 12, 2, 4000, 2);
  CHECK(rep2.exact_mean[0] == doctest::Approx(-rep2.exact_mean[1]));
  CHECK(rep2.exact_mean[0] > 1.0);
  CHECK_THROWS_AS(gue_corners_test(SignatureFamily{Profile::zero(), RoundingRule::Cumulative}, 10, 1, 100, 1),
                  DegeneracyError);
  CHECK_THROWS_AS(gue_corners_test(fam, 10, 3, 100, 1), ArgumentError);
}
