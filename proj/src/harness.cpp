#include "charasym/harness.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <sstream>

#include "charasym/asm.hpp"
#include "charasym/asymptotics.hpp"
#include "charasym/characters.hpp"
#include "charasym/errors.hpp"
#include "charasym/loop.hpp"
#include "charasym/multivar.hpp"
#include "charasym/residue.hpp"
#include "charasym/symfunc.hpp"
#include "charasym/tilings.hpp"

namespace charasym {

using json = nlohmann::ordered_json;

std::string library_version() { return "0.1.0"; }

std::string command_name(Command c) {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::AsmCount: return "asm count";
    case Command::AsymptGue: return "asympt gue";
    case Command::Suite: return "suite";
  }
  return "?";
}

namespace {

Rational q_of(long a, long b = 1) { return ratio(a, b); }
Real tiny(int exp10) { return pow(Real(10L), -exp10); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

std::vector<Rational> x_grid() {
  return {q_of(3), q_of(-2), q_of(7, 3), q_of(5, 4), q_of(-1, 3), q_of(1, 5)};
}

// criterion 1: residue sums and operator determinants against iterated branching
CheckResult oracle_equivalence() {
  CheckResult r;
  r.name = "oracle equivalence (exact)";
  const std::vector<Rational> grid = x_grid();
  const std::vector<std::vector<Rational>> tuples{{q_of(3), q_of(-2)}, {q_of(7, 3), q_of(1, 5)}, {q_of(3), q_of(-2), q_of(5, 4)},
                                                  {q_of(-1, 3), q_of(7, 3), q_of(1, 5)}};
  long cases = 0, mismatches = 0;
  std::string first_bad;
  auto record = [&](bool ok, const std::string& what) {
    ++cases;
    if (!ok && mismatches++ == 0) first_bad = what;
  };
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : all_signatures(n, -2, 3))
      for (const Rational& qq : {Rational(1), q_of(1, 2)}) {
        const Family fam = qq == 1 ? Family::Schur1 : Family::SchurQ;
        FamilyParams p;
        p.q = qq;
        const Rational dim = weyl_dim(lam, qq);
        auto oracle = [&](const std::vector<Rational>& xs) -> Rational {
          std::vector<Rational> all = xs;
          for (const auto& v : fill_values(CharFamily::Schur, n - static_cast<int>(xs.size()), qq)) all.push_back(v);
          return schur_branching(lam, all) / dim;
        };
        for (const auto& x : grid) {
          const Rational ref = oracle({x});
          const std::string tag = family_name(fam) + " " + lam.to_string() + " x=" + to_string(x);
          record(residue_eval(fam, lam, p, x) == ref, "residue " + tag);
          record(multivar_det_eval(fam, lam, std::vector<Rational>{x}, p) == ref, "determinant " + tag);
        }
        for (const auto& xs : tuples) {
          if (static_cast<int>(xs.size()) > n) continue;
          record(multivar_det_eval(fam, lam, xs, p) == oracle(xs), "determinant " + family_name(fam) + " " + lam.to_string());
        }
      }
  r.pass = mismatches == 0;
  r.summary = std::to_string(cases) + " exact comparisons, " + std::to_string(mismatches) + " mismatches";
  if (!r.pass) r.summary += "; first: " + first_bad;
  r.data = {{"comparisons", cases}, {"mismatches", mismatches}, {"max_N", 5}, {"parts", {-2, 3}}, {"max_k", 3}};
  return r;
}

// criterion 2: symplectic characters through Schur characters of the doubled signature
CheckResult symplectic_schur() {
  CheckResult r;
  r.name = "symplectic/Schur identity (exact)";
  const std::vector<Rational> xs{q_of(2), q_of(-5, 3), q_of(1, 7), q_of(3), q_of(-2), q_of(5, 2), q_of(1, 3), q_of(-7, 4), q_of(9, 5), q_of(4)};
  const Rational qq = q_of(1, 2);
  long cases = 0, mismatches = 0;
  std::string first_bad;
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_signatures(n, 0, 3)) {
      const Signature nu = symplectic_signature_embed(lam);
      for (const auto& x : xs) {
        const std::vector<Rational> one{x};
        const Rational lhs = normalized_character(CharFamily::Symplectic, lam, one);
        const Rational rhs = Rational(2) / (x + 1) * normalized_character(CharFamily::Schur, nu, one);
        const Rational lhs_q = normalized_character(CharFamily::Symplectic, lam, one, qq);
        const Rational rhs_q = (1 + rational_pow(qq, n)) / (x + 1) *
                               normalized_character(CharFamily::Schur, nu, std::vector<Rational>{x * rational_pow(qq, n - 1)}, qq);
        for (bool ok : {lhs == rhs, lhs_q == rhs_q}) {
          ++cases;
          if (!ok && mismatches++ == 0) first_bad = lam.to_string() + " x=" + to_string(x);
        }
      }
    }
  r.pass = mismatches == 0;
  r.summary = std::to_string(cases) + " exact comparisons at q=1 and q=1/2, " + std::to_string(mismatches) + " mismatches";
  if (!r.pass) r.summary += "; first: " + first_bad;
  r.data = {{"comparisons", cases}, {"mismatches", mismatches}, {"q", "1/2"}};
  return r;
}

// criterion 3: tanh-sinh quadrature of the contour integral against the residue sum
CheckResult contour_check() {
  CheckResult r;
  r.name = "contour quadrature";
  PrecisionScope scope(128);
  const double tol = 1e-8;
  const std::vector<std::pair<Signature, Complex>> cases{
      {Signature({1, 0}), Complex(2.0)},
      {Signature({0, 0, 0, 0}), Complex(3.0)},
      {Signature({3, 1, 1, 0, -2}), Complex(0.5, 1.25)},
      {Signature({2, 2, 1, 0, 0, 0}), Complex(-1.5, 0.5)},
      {Signature({4, 3, 3, 1, 0, 0, -1}), Complex(1.1, -0.3)},
      {Signature({5, 3, 2, 2, 1, 1, 0, 0}), Complex(0.8, 0.6)},
      {Signature({3, 3, 2, 2, 1, 1, 0, 0, -1}), Complex(-0.7, -0.9)},
      {Signature({4, 2, 2, 1, 1, 0, 0, 0, -1, -2}), Complex(1.3, 0.4)}};
  double worst = 0;
  for (const auto& [lam, x] : cases) {
    const Complex exact = residue_eval(Family::Schur1, lam, {}, x);
    const auto quad = contour_quadrature(lam, x, default_contour(lam));
    const double rel = (abs(quad.value - exact) / abs(exact)).to_double();
    worst = std::max(worst, rel);
    r.ladder.push_back({"contour " + lam.to_string(), lam.size(), 0, abs(quad.value).to_double(), abs(exact).to_double(), rel});
  }
  r.pass = worst <= tol;
  r.summary = std::to_string(cases.size()) + " cases up to N=10, worst relative error " + fmt(worst) + " (tol " + fmt(tol) + ")";
  r.data = {{"cases", cases.size()}, {"worst_relative_error", worst}, {"tolerance", tol}};
  return r;
}

// criterion 4: GUE regime ladder for the half-staircase family
CheckResult gue_regime_ladder() {
  CheckResult r;
  r.name = "GUE regime ladder";
  PrecisionScope scope(256);
  const double tol = 0.02;
  const SignatureFamily fam{Profile::halfstair(), RoundingRule::Cumulative};
  const bool closed = fam.profile.mean() == q_of(1, 4) && fam.profile.fluctuation() == q_of(5, 48);
  bool decreasing = true;
  double worst_top = 0;
  json per_h = json::array();
  for (const auto& [label, h] : std::vector<std::pair<std::string, Complex>>{
           {"1/2", Complex(0.5)}, {"-1/2", Complex(-0.5)}, {"1", Complex(1.0)}, {"i", Complex(0.0, 1.0)}}) {
    std::vector<double> errs;
    for (long n : {64, 128, 256, 512}) {
      const auto g = gue_regime(fam.profile, h, n);
      const Complex ref = log(g.prediction);
      const Complex x = exp(h / Complex(sqrt(Real(n))));
      const Complex ls = log_normalized_schur(fam(n), x, ref);
      errs.push_back(abs(ls - ref).to_double());
      r.ladder.push_back({"h=" + label, n, h.re().to_double() + h.im().to_double(), abs(ls).to_double(), abs(ref).to_double(), errs.back()});
    }
    decreasing = decreasing && strictly_decreasing(errs);
    worst_top = std::max(worst_top, errs.back());
    per_h.push_back({{"h", label}, {"errors", errs}});
  }
  r.pass = closed && decreasing && worst_top <= tol;
  r.summary = std::string("E=1/4, S=5/48 ") + (closed ? "exact" : "WRONG") + "; ladder " + (decreasing ? "decreasing" : "not decreasing") +
              "; worst error at N=512 " + fmt(worst_top) + " (tol " + fmt(tol) + ")";
  r.data = {{"E", to_string(fam.profile.mean())}, {"S", to_string(fam.profile.fluctuation())}, {"ladder", per_h}, {"tolerance", tol}};
  return r;
}

// criterion 5: the first-order limit vanishes identically for f = 0
CheckResult zero_profile_identity() {
  CheckResult r;
  r.name = "zero-profile identity";
  PrecisionScope scope(128);
  const double tol = 1e-25;
  double worst = 0;
  for (double y : {0.1, 0.5, 1.0, 2.0, 3.5, -0.1, -0.5, -1.0, -2.0, -3.5}) {
    const double v = abs(first_order_limit(Profile::zero(), Complex(y))).to_double();
    worst = std::max(worst, v);
    r.ladder.push_back({"f=0", 0, y, v, 0, v});
  }
  r.pass = worst <= tol;
  r.summary = "10 values of y, worst |value| " + fmt(worst) + " (tol " + fmt(tol) + ")";
  r.data = {{"worst", worst}, {"tolerance", tol}};
  return r;
}

// criterion 6: moment generating identity for rows of uniform tilings
CheckResult tiling_mgf() {
  CheckResult r;
  r.name = "tiling MGF identity";
  PrecisionScope scope(128);
  const double tol = 1e-25;
  double worst = 0;
  long cases = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : all_signatures(n, 0, 3))
      for (int k = 1; k <= std::min(2, n); ++k) {
        std::vector<Complex> xs{Complex(0.3)};
        if (k == 2) xs.push_back(Complex(-0.45));
        const auto m = bessel_mgf(lam, xs);
        worst = std::max(worst, (abs(m.lhs - m.rhs) / (Real(1L) + abs(m.rhs))).to_double());
        ++cases;
      }
  r.pass = worst <= tol;
  r.summary = std::to_string(cases) + " cases, worst relative gap " + fmt(worst) + " (tol " + fmt(tol) + ")";
  r.data = {{"cases", cases}, {"worst", worst}, {"tolerance", tol}};
  return r;
}

json matrix_json(const std::vector<std::vector<double>>& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

// criterion 7: GUE corners statistics from exact samples at N = 30
CheckResult gue_corners(uint64_t seed) {
  CheckResult r;
  r.name = "GUE corners";
  const double sigmas = 3;
  const long n = 30, samples = 20000;
  const SignatureFamily fam{Profile::halfstair(), RoundingRule::Cumulative};
  bool all = true;
  std::ostringstream line;
  json per_k = json::array();
  for (int k : {1, 2}) {
    std::vector<std::vector<double>> grid = k == 1 ? std::vector<std::vector<double>>{{-0.5}, {0.5}, {1.0}}
                                                   : std::vector<std::vector<double>>{{0.5, -0.25}, {-0.5, 0.75}};
    const auto rep = gue_corners_test(fam, n, k, samples, seed + static_cast<uint64_t>(k), grid);
    const bool ok = rep.within(sigmas);
    all = all && ok;
    // worst deviation in units of the standard error, against GUE and against the exact law at N
    double z_gue = 0, z_exact = 0;
    for (size_t i = 0; i < rep.mean.size(); ++i) {
      z_gue = std::max(z_gue, std::abs(rep.mean[i] - rep.target_mean[i]) / rep.mean_error[i]);
      z_exact = std::max(z_exact, std::abs(rep.mean[i] - rep.exact_mean[i]) / rep.mean_error[i]);
      for (size_t j = 0; j < rep.mean.size(); ++j) {
        z_gue = std::max(z_gue, std::abs(rep.covariance[i][j] - rep.target_covariance[i][j]) / rep.covariance_error[i][j]);
        z_exact = std::max(z_exact, std::abs(rep.covariance[i][j] - rep.exact_covariance[i][j]) / rep.covariance_error[i][j]);
      }
    }
    json mgf = json::array();
    for (const auto& p : rep.mgf) {
      z_gue = std::max(z_gue, std::abs(p.empirical - p.target) / p.standard_error);
      z_exact = std::max(z_exact, std::abs(p.empirical - p.finite_n) / p.standard_error);
      mgf.push_back({{"x", p.x}, {"empirical", p.empirical}, {"standard_error", p.standard_error}, {"finite_n", p.finite_n}, {"target", p.target}});
      r.ladder.push_back({"mgf k=" + std::to_string(k), n, p.x[0], p.empirical, p.target, std::abs(p.empirical - p.target)});
    }
    for (size_t i = 0; i < rep.mean.size(); ++i)
      r.ladder.push_back({"mean k=" + std::to_string(k), n, static_cast<double>(i + 1), rep.mean[i], rep.target_mean[i],
                          std::abs(rep.mean[i] - rep.target_mean[i])});
    line << " k=" << k << ": var " << fmt(rep.covariance[0][0]) << " (exact N=30 " << fmt(rep.exact_covariance[0][0]) << ", GUE "
         << fmt(rep.target_covariance[0][0]) << ")";
    if (k == 2)
      line << " mean " << fmt(rep.mean[0]) << " (exact " << fmt(rep.exact_mean[0]) << ", GUE " << fmt(rep.target_mean[0]) << ") cov "
           << fmt(rep.covariance[0][1]) << " (exact " << fmt(rep.exact_covariance[0][1]) << ", GUE " << fmt(rep.target_covariance[0][1]) << ")";
    line << " max z vs GUE " << fmt(z_gue) << ", vs exact " << fmt(z_exact) << ";";
    per_k.push_back({{"k", k},
                     {"within", ok},
                     {"mean", rep.mean},
                     {"mean_error", rep.mean_error},
                     {"target_mean", rep.target_mean},
                     {"exact_mean", rep.exact_mean},
                     {"covariance", matrix_json(rep.covariance)},
                     {"covariance_error", matrix_json(rep.covariance_error)},
                     {"target_covariance", matrix_json(rep.target_covariance)},
                     {"exact_covariance", matrix_json(rep.exact_covariance)},
                     {"max_z_gue", z_gue},
                     {"max_z_exact", z_exact},
                     {"mgf", mgf}});
  }
  r.pass = all;
  r.summary = "N=30, 20000 samples, " + fmt(sigmas) + " sigma;" + line.str();
  r.data = {{"N", n}, {"samples", samples}, {"seed", seed}, {"sigmas", sigmas}, {"per_k", per_k}};
  return r;
}

// criterion 8: ASM counts and the partition-function identities
CheckResult asm_identities() {
  CheckResult r;
  r.name = "ASM counts and identities";
  PrecisionScope scope(128);
  const long expected[] = {1, 2, 7, 42, 429};
  bool counts = true;
  json cnt = json::array();
  for (int n = 1; n <= 5; ++n) {
    const long e = static_cast<long>(asm_enumerate(n).size());
    const long t = Integer(asm_count_transfer(n)).get_si();
    counts = counts && e == expected[n - 1] && t == expected[n - 1];
    cnt.push_back({{"n", n}, {"enumerated", e}, {"transfer", t}});
  }
  const auto& conv = asm_convention();
  const Complex q = asm_q();
  double worst = 0;
  std::string failure;
  try {
    for (int n = 2; n <= 4; ++n) {
      std::vector<Complex> us, vs;
      for (int i = 0; i < n; ++i) {
        us.push_back(Complex(1.1 + 0.21 * i, -0.04 * i));
        vs.push_back(Complex(0.85 - 0.09 * i, 0.03 * i));
      }
      const auto pf = partition_function(n, us, vs, q);
      worst = std::max(worst, (abs(pf.direct - pf.okada * conv.apply(us, vs)) / abs(pf.direct)).to_double());
      for (int i = 1; i <= n; ++i) {
        const auto row = asm_observable(n, {i}, {}, {Complex(0.9, 0.2)}, {});
        const auto col = asm_observable(n, {}, {i}, {}, {Complex(1.25, -0.1)});
        worst = std::max(worst, (abs(row.lhs - row.rhs) / abs(row.rhs)).to_double());
        worst = std::max(worst, (abs(col.lhs - col.rhs) / abs(col.rhs)).to_double());
      }
    }
    const auto mixed = asm_observable(4, {1, 3}, {2}, {Complex(1.2, 0.1), Complex(0.9)}, {Complex(0.8, 0.05)});
    worst = std::max(worst, (abs(mixed.lhs - mixed.rhs) / abs(mixed.rhs)).to_double());
  } catch (const IdentityViolation& e) {
    failure = e.what();
  }
  const double tol = 1e-20;
  r.pass = counts && failure.empty() && worst <= tol;
  r.summary = std::string("counts 1,2,7,42,429 ") + (counts ? "match" : "MISMATCH") + " (enumeration and transfer); convention u^" +
              std::to_string(conv.u_exponent) + " v^" + std::to_string(conv.v_exponent) + " fitted at n=1; n=2..4 worst relative gap " +
              fmt(worst) + " (tol " + fmt(tol) + ")" + (failure.empty() ? "" : "; " + failure);
  r.data = {{"counts", cnt},
            {"convention", {{"u_exponent", conv.u_exponent}, {"v_exponent", conv.v_exponent}, {"constant", conv.constant.to_string(20)}}},
            {"worst_relative_gap", worst},
            {"tolerance", tol}};
  return r;
}

// criterion 9: characteristic function of the a-vertex count on the staircase ladder
CheckResult asm_gaussian() {
  CheckResult r;
  r.name = "ASM Gaussian fluctuations";
  const double tol = 0.02, var_tol = 0.02;
  const std::vector<double> s_grid{0.25, 0.5, 1.0};
  const auto rep = asm_gaussian_check({64, 128, 256, 512}, s_grid);
  json vars = json::array();
  double worst_var = 0;
  for (const auto& p : rep.points) {
    const double mod = abs(p.observable).to_double();
    r.ladder.push_back({"asm", p.n, p.s, mod, std::exp(-3 * p.s * p.s / 16), p.error});
    if (p.n == 512) {
      // variance read off ln|E e^{isX}| = -var s^2/2
      const double var = -2 * std::log(mod) / (p.s * p.s);
      worst_var = std::max(worst_var, std::abs(var - 0.375));
      vars.push_back({{"s", p.s}, {"variance", var}});
    }
  }
  r.pass = rep.decreasing && rep.final_max <= tol && worst_var <= var_tol;
  r.summary = std::string("ladder ") + (rep.decreasing ? "decreasing" : "not decreasing") + "; worst error at n=512 " + fmt(rep.final_max) +
              " (tol " + fmt(tol) + "); variance off 3/8 by at most " + fmt(worst_var) + " (tol " + fmt(var_tol) + ")";
  r.data = {{"final_max", rep.final_max}, {"decreasing", rep.decreasing}, {"variance", vars}, {"tolerance", tol}};
  return r;
}

// criterion 10: dense loop currents
CheckResult dense_loop() {
  CheckResult r;
  r.name = "dense loop currents";
  PrecisionScope scope(128);
  const std::vector<int> widths{8, 12, 16, 20, 24};
  const Complex z(2L);
  const std::vector<std::pair<Complex, Complex>> boundaries{
      {Complex(1L), Complex(1L)}, {Complex(2L), Complex(ratio(3, 2))}, {Complex(1.2, 0.3), Complex(2.5)}};
  bool x_decreasing = true;
  std::vector<Complex> last;
  std::vector<double> last_err;
  for (size_t b = 0; b < boundaries.size(); ++b) {
    std::vector<double> errs;
    Complex lx;
    for (int L : widths) {
      LoopParams p = LoopParams::homogeneous(L);
      p.zeta1 = boundaries[b].first;
      p.zeta2 = boundaries[b].second;
      lx = current_x(p, z) * Complex(L);
      const Complex pred = loop_asymptotics(z, L).x_pred * Complex(L);
      errs.push_back(abs(lx - pred).to_double());
      r.ladder.push_back({"X boundary " + std::to_string(b), L, 2, lx.im().to_double(), pred.im().to_double(), errs.back()});
    }
    x_decreasing = x_decreasing && strictly_decreasing(errs);
    last.push_back(lx);
    last_err.push_back(errs.back());
  }
  bool independent = true;
  double spread = 0;
  for (size_t i = 0; i < last.size(); ++i)
    for (size_t j = i + 1; j < last.size(); ++j) {
      const double d = abs(last[i] - last[j]).to_double();
      spread = std::max(spread, d);
      independent = independent && d <= last_err[i] + last_err[j];
    }
  const double y_target = std::sqrt(3.0) / 2;
  double y_rel = 0;
  for (int L : {8, 16, 24}) {
    const double ly = (current_y(LoopParams::homogeneous(L)) * Complex(L)).re().to_double();
    y_rel = std::abs(ly - y_target) / y_target;
    r.ladder.push_back({"Y homogeneous", L, 0, ly, y_target, std::abs(ly - y_target)});
  }
  double parity_rel = 0;
  for (double y : {0.25, 0.5}) {
    const Complex g = loop_parity_gap(Complex(y));
    for (int L : widths) {
      const Complex got = loop_parity_log_ratio(L, Complex(y));
      const Complex pred = Complex(2L) * g / Complex(L % 2 == 0 ? L : -L);
      const double rel = abs(got / pred - Complex(1L)).to_double();
      r.ladder.push_back({"parity", L, y, got.re().to_double(), pred.re().to_double(), rel});
      if (L == 24) parity_rel = std::max(parity_rel, rel);
    }
  }
  const double rel_tol = 0.10;
  r.pass = x_decreasing && independent && y_rel <= rel_tol && parity_rel <= rel_tol;
  r.summary = std::string("L*X(2) error ") + (x_decreasing ? "decreasing" : "not decreasing") + " (at L=24: " + fmt(last_err[0]) + ", " +
              fmt(last_err[1]) + ", " + fmt(last_err[2]) + "), boundary spread " + fmt(spread) + (independent ? " within" : " OUTSIDE") +
              " measured error; L*Y off sqrt(3)/2 by " + fmt(100 * y_rel) + "%; parity gap off by " + fmt(100 * parity_rel) + "% (tol 10%)";
  r.data = {{"x_errors_at_24", last_err}, {"boundary_spread", spread}, {"y_relative_error", y_rel}, {"parity_relative_error", parity_rel}};
  return r;
}

// criterion 11: limits of characters of U(N)
CheckResult character_limits() {
  CheckResult r;
  r.name = "character limits";
  PrecisionScope scope(128);
  const std::vector<Complex> xs{Complex(q_of(9, 10)), Complex(q_of(11, 10)), Complex::expi_pi(q_of(1, 3)), Complex::expi_pi(q_of(-3, 4)),
                                Complex(0.95, 0.2)};
  const double floor_ = 1e-25;
  bool families_ok = true;
  double worst_top = 0;
  const char* names[] = {"alpha", "beta", "gamma"};
  int fi = 0;
  for (auto fam : {VoiculescuFamily::Alpha, VoiculescuFamily::Beta, VoiculescuFamily::Gamma}) {
    const auto lim = voiculescu_family_limit(fam);
    for (size_t xi = 0; xi < xs.size(); ++xi) {
      double prev = 1e300;
      for (int n : {50, 100, 200, 400}) {
        const Complex s = residue_eval_adaptive(Family::Schur1, voiculescu_family_signature(fam, n), {}, xs[xi]);
        const Complex phi = voiculescu_phi(lim, xs[xi]);
        const double e = abs(s - phi).to_double();
        // the beta family is exact for even N, so its errors sit at the noise floor
        families_ok = families_ok && (e < prev || e < floor_);
        prev = e;
        r.ladder.push_back({std::string(names[fi]) + " x" + std::to_string(xi), n, 0, abs(s).to_double(), abs(phi).to_double(), e});
      }
      worst_top = std::max(worst_top, prev);
    }
    ++fi;
  }
  const Rational qq = q_of(1, 2);
  const double fnu_tol = 1e-8;
  double fnu_worst = 0;
  bool vanishes = true;
  for (const auto& pre : std::vector<std::vector<long>>{{0}, {0, 1, 1, 3}, {-1, 0, 2}}) {
    const LimitSequence nu(pre);
    const Signature lam = nu.signature(40);
    for (const auto& x : {q_of(1, 3), q_of(5, 2), q_of(-3), q_of(7, 8)}) {
      const auto f = fnu(nu, Complex(x), 40, qq);
      fnu_worst = std::max(fnu_worst, abs(f.value - to_complex(q_character_ratio(lam, {x}, qq))).to_double());
    }
    for (long i = 1; i <= 4; ++i) {
      const auto s = fnu_sum(nu, Complex(rational_pow(qq, -i)), 40, qq);
      vanishes = vanishes && abs(s.sum) <= s.tail_bound + tiny(25) * (Real(1L) + abs(s.sum));
    }
  }
  r.pass = families_ok && fnu_worst <= fnu_tol && vanishes;
  r.summary = std::string("Voiculescu families ") + (families_ok ? "decreasing" : "NOT decreasing") + " (worst at N=400 " + fmt(worst_top) +
              "); F_nu vs q-ratios at N=40 worst " + fmt(fnu_worst) + " (tol " + fmt(fnu_tol) + "); zeros at q^-i " +
              (vanishes ? "within tail bound" : "NOT within tail bound");
  r.data = {{"worst_family_error_at_400", worst_top}, {"fnu_worst", fnu_worst}, {"fnu_tolerance", fnu_tol}, {"zeros_within_bound", vanishes}};
  return r;
}

const std::map<std::string, std::vector<int>>& suites() {
  static const std::map<std::string, std::vector<int>> m{{"oracles", {1, 2, 3}},  {"asymptotics", {4, 5}}, {"tilings", {6, 7}},
                                                         {"asm", {8, 9}},         {"loop", {10}},          {"characters", {11}}};
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracles", "asymptotics", "tilings", "asm", "loop", "characters"};
  return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw UsageError("unknown suite '" + suite + "'");
  return it->second;
}

CheckResult run_criterion(int id, uint64_t seed) {
  CheckResult r;
  switch (id) {
    case 1: r = oracle_equivalence(); break;
    case 2: r = symplectic_schur(); break;
    case 3: r = contour_check(); break;
    case 4: r = gue_regime_ladder(); break;
    case 5: r = zero_profile_identity(); break;
    case 6: r = tiling_mgf(); break;
    case 7: r = gue_corners(seed); break;
    case 8: r = asm_identities(); break;
    case 9: r = asm_gaussian(); break;
    case 10: r = dense_loop(); break;
    case 11: r = character_limits(); break;
    default: throw UsageError("criterion must be in 1..11");
  }
  r.criterion = id;
  return r;
}

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SuiteReport run_suite(const std::string& name, uint64_t seed) {
  SuiteReport rep;
  rep.name = name;
  for (int id : suite_criteria(name)) rep.checks.push_back(run_criterion(id, seed));
  return rep;
}

void RunConfig::validate() const {
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
  if (precision_bits != 0 && (precision_bits < 53 || precision_bits > 1 << 16)) throw UsageError("precision must be in [53, 65536] bits");
  switch (command) {
    case Command::Eval: {
      static const std::vector<std::string> fams{"schur", "schur_q", "symplectic", "symplectic_q", "jacobi"};
      if (std::find(fams.begin(), fams.end(), family) == fams.end()) throw UsageError("unknown family '" + family + "'");
      if (lambda.empty()) throw UsageError("--lambda is required");
      if (x.empty()) throw UsageError("--x is required");
      if (N < 0) throw UsageError("--N must be nonnegative");
      break;
    }
    case Command::AsmCount:
      if (n < 1) throw UsageError("--n must be positive");
      break;
    case Command::AsymptGue:
      if (N < 1) throw UsageError("--N must be positive");
      break;
    case Command::Suite:
      suite_criteria(suite);
      break;
  }
}

json RunConfig::to_json() const {
  json j;
  j["command"] = command_name(command);
  switch (command) {
    case Command::Eval:
      j["family"] = family;
      j["lambda"] = lambda;
      j["x"] = x;
      j["N"] = N;
      if (family.size() > 2 && family.substr(family.size() - 2) == "_q") j["q"] = q;
      if (family == "jacobi") {
        j["a"] = a;
        j["b"] = b;
      }
      break;
    case Command::AsmCount: j["n"] = n; break;
    case Command::AsymptGue:
      j["profile"] = profile;
      j["h"] = {h_re, h_im};
      j["N"] = N;
      break;
    case Command::Suite:
      j["suite"] = suite;
      j["seed"] = seed;
      break;
  }
  j["precision_bits"] = precision_bits != 0 ? precision_bits : default_precision();
  j["format"] = format;
  return j;
}

namespace {

Family family_of(const std::string& s) {
  if (s == "schur") return Family::Schur1;
  if (s == "schur_q") return Family::SchurQ;
  if (s == "symplectic") return Family::Symplectic1;
  if (s == "symplectic_q") return Family::SymplecticQ;
  return Family::Jacobi;
}

Rational parse_rational(const std::string& s, const char* what) {
  try {
    return rational_from_string(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot read ") + what + " '" + s + "' as a rational");
  }
}

RunOutput run_eval(const RunConfig& c) {
  Signature lam;
  try {
    lam = Signature::parse(c.lambda);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --lambda: ") + e.what());
  }
  if (c.N != 0) {
    if (c.N < lam.size()) throw UsageError("--lambda has more parts than --N");
    std::vector<long> parts = lam.parts();
    parts.resize(static_cast<size_t>(c.N), 0);
    lam = Signature(parts);
  }
  std::vector<Rational> xs;
  for (const auto& s : c.x) xs.push_back(parse_rational(s, "--x"));
  FamilyParams p;
  p.q = parse_rational(c.q, "--q");
  p.a = parse_rational(c.a, "--a");
  p.b = parse_rational(c.b, "--b");
  const Family fam = family_of(c.family);
  RunOutput out;
  const Rational v = xs.size() == 1 ? residue_eval(fam, lam, p, xs[0]) : multivar_det_eval(fam, lam, xs, p);
  out.result["value"] = to_string(v);
  out.result["method"] = xs.size() == 1 ? "residue" : "determinant";
  out.result["signature"] = lam.to_string();
  return out;
}

RunOutput run_asm_count(const RunConfig& c) {
  RunOutput out;
  const Integer t = asm_count_transfer(static_cast<int>(c.n));
  out.result["count"] = t.get_str();
  if (c.n <= kAsmEnumerationCap) out.result["enumerated"] = std::to_string(asm_enumerate(static_cast<int>(c.n)).size());
  return out;
}

RunOutput run_asympt_gue(const RunConfig& c) {
  const Profile f = Profile::parse(c.profile);
  const Complex h(c.h_re, c.h_im);
  const auto g = gue_regime(f, h, c.N);
  RunOutput out;
  out.result["E"] = to_string(g.mean);
  out.result["S"] = to_string(g.fluctuation);
  out.result["prediction"] = g.prediction.to_string(20);
  return out;
}

RunOutput run_suite_command(const RunConfig& c) {
  const SuiteReport rep = run_suite(c.suite, c.seed);
  RunOutput out;
  json checks = json::array();
  for (const auto& ch : rep.checks) {
    checks.push_back({{"criterion", ch.criterion}, {"name", ch.name}, {"pass", ch.pass}, {"summary", ch.summary}, {"data", ch.data}});
    for (auto row : ch.ladder) {
      row.series = std::to_string(ch.criterion) + ":" + row.series;
      out.ladder.push_back(row);
    }
  }
  out.result["suite"] = rep.name;
  out.result["pass"] = rep.passed();
  out.result["checks"] = checks;
  out.ok = rep.passed();
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

RunOutput run(const RunConfig& config) {
  config.validate();
  PrecisionScope scope(config.precision_bits != 0 ? config.precision_bits : default_precision());
  switch (config.command) {
    case Command::Eval: return run_eval(config);
    case Command::AsmCount: return run_asm_count(config);
    case Command::AsymptGue: return run_asympt_gue(config);
    case Command::Suite: return run_suite_command(config);
  }
  throw UsageError("unknown command");
}

std::string render(const RunConfig& config, const RunOutput& out) {
  json header;
  header["config"] = config.to_json();
  header["versions"] = {{"charasym", library_version()}, {"gmp", gmp_version}, {"mpfr", mpfr_get_version()}};
  if (config.format == "json") {
    json doc = header;
    for (auto it = out.result.begin(); it != out.result.end(); ++it) doc[it.key()] = it.value();
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# config: " << header["config"].dump() << "\n";
  os << "# versions: " << header["versions"].dump() << "\n";
  if (!out.ladder.empty()) {
    os << "series,size,param,value,reference,error\n";
    for (const auto& r : out.ladder)
      os << csv_field(r.series) << ',' << r.size << ',' << num(r.param) << ',' << num(r.value) << ',' << num(r.reference) << ','
         << num(r.error) << "\n";
  } else {
    os << "key,value\n";
    for (auto it = out.result.begin(); it != out.result.end(); ++it)
      os << csv_field(it.key()) << ',' << csv_field(it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
  }
  return os.str();
}

}  // namespace charasym
