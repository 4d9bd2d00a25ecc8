#include "charasym/tilings.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "charasym/errors.hpp"
#include "charasym/linalg.hpp"
#include "charasym/symfunc.hpp"

namespace charasym {

void GTPattern::validate() const {
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<int>(r + 1)) throw InvariantViolation("row " + std::to_string(r + 1) + " has the wrong length");
    if (r > 0 && !interlaces(rows[r - 1], rows[r])) throw InvariantViolation("rows " + std::to_string(r) + " and " + std::to_string(r + 1) + " do not interlace");
  }
}

std::string GTPattern::to_string() const {
  std::ostringstream out;
  for (size_t r = 0; r < rows.size(); ++r) out << (r ? " | " : "") << rows[r].to_string();
  return out.str();
}

namespace {

Integer h_ones(long m, long r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  if (m == 0) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + r - 1), static_cast<unsigned long>(r));
  return c;
}

Integer to_integer(const Rational& r) {
  if (r.get_den() != 1) throw InvariantViolation("expected an integer count");
  return r.get_num();
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(gmp_randinit_mt) { state_.seed(static_cast<unsigned long>(seed)); }
  Integer below(const Integer& n) { return state_.get_z_range(n); }
  long below(long n) { return Integer(state_.get_z_range(Integer(n))).get_si(); }

 private:
  gmp_randclass state_;
};

// Index into cumulative weights for a uniform integer draw u in [0, total).
size_t pick(const std::vector<Integer>& cumulative, const Integer& u) {
  return static_cast<size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
}

}  // namespace

Integer gt_count(const Signature& mu, const Signature& lambda) {
  const long big = lambda.size(), small = mu.size();
  if (big == 0) throw ArgumentError("empty top row");
  if (small > big) throw ArgumentError("mu is longer than lambda");
  if (small == big) return mu == lambda ? 1 : 0;
  const long shift = lambda[static_cast<int>(big - 1)];
  std::vector<long> l(static_cast<size_t>(big)), m(static_cast<size_t>(big), 0);
  for (long i = 0; i < big; ++i) l[static_cast<size_t>(i)] = lambda[static_cast<int>(i)] - shift;
  for (long i = 0; i < small; ++i) {
    m[static_cast<size_t>(i)] = mu[static_cast<int>(i)] - shift;
    if (m[static_cast<size_t>(i)] < 0) return 0;  // every entry of a pattern is >= lambda_K
  }
  Matrix<Integer> a(static_cast<size_t>(big), std::vector<Integer>(static_cast<size_t>(big)));
  for (long i = 0; i < big; ++i)
    for (long j = 0; j < big; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = h_ones(big - small, l[static_cast<size_t>(i)] - m[static_cast<size_t>(j)] - i + j);
  return determinant(std::move(a));
}

std::vector<Signature> interlacing_below(const Signature& kappa, long cap) {
  const int n = kappa.size();
  if (n < 2) throw ArgumentError("need a row of length at least 2");
  double total = 1;
  for (int i = 0; i + 1 < n; ++i) total *= static_cast<double>(kappa[i] - kappa[i + 1] + 1);
  if (total > static_cast<double>(cap))
    throw CapacityError("row " + kappa.to_string() + " has " + std::to_string(static_cast<long long>(total)) +
                        " interlacing rows, above the cap; use the mcmc sampler");
  std::vector<long> cur(static_cast<size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) cur[static_cast<size_t>(i)] = kappa[i + 1];
  std::vector<Signature> out;
  out.reserve(static_cast<size_t>(total));
  while (true) {
    out.emplace_back(cur);
    int i = n - 2;
    while (i >= 0 && cur[static_cast<size_t>(i)] == kappa[i]) {
      cur[static_cast<size_t>(i)] = kappa[i + 1];
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return out;
}

SampleBatch sample_tiling(const Signature& lambda, long count, uint64_t seed, const SamplerOptions& options) {
  const int n = lambda.size();
  if (n == 0) throw ArgumentError("empty signature");
  if (count < 0) throw ArgumentError("negative sample count");
  SampleBatch batch;
  batch.seed = seed;
  batch.method = options.method;
  Rng rng(seed);
  if (options.method == SamplerMethod::Exact) {
    struct Choices {
      std::vector<Signature> rows;
      std::vector<Integer> cumulative;
    };
    std::map<Signature, Choices> cache;
    for (long s = 0; s < count; ++s) {
      GTPattern p;
      p.rows.resize(static_cast<size_t>(n));
      p.rows[static_cast<size_t>(n - 1)] = lambda;
      for (int r = n - 1; r >= 1; --r) {
        const Signature& kappa = p.rows[static_cast<size_t>(r)];
        auto it = cache.find(kappa);
        if (it == cache.end()) {
          Choices c;
          c.rows = interlacing_below(kappa, options.candidate_cap);
          Integer acc = 0;
          for (const auto& mu : c.rows) {
            acc += to_integer(weyl_dim(mu));
            c.cumulative.push_back(acc);
          }
          it = cache.emplace(kappa, std::move(c)).first;
        }
        const Choices& c = it->second;
        p.rows[static_cast<size_t>(r - 1)] = c.rows[pick(c.cumulative, rng.below(c.cumulative.back()))];
      }
      batch.patterns.push_back(std::move(p));
    }
    return batch;
  }
  // Heat-bath Glauber dynamics: each entry is redrawn uniformly from the
  // interval its neighbours allow, which leaves the uniform measure invariant.
  const long burn = options.burn_in > 0 ? options.burn_in : 100L * n * n;
  const long thin = options.thin > 0 ? options.thin : n;
  batch.burn_in = burn;
  batch.thin = thin;
  std::vector<std::vector<long>> rows(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) rows[static_cast<size_t>(r)].assign(lambda.parts().begin(), lambda.parts().begin() + r + 1);
  auto sweep = [&]() {
    for (int r = 0; r + 1 < n; ++r) {
      const auto& up = rows[static_cast<size_t>(r + 1)];
      for (int i = 0; i <= r; ++i) {
        long hi = up[static_cast<size_t>(i)], lo = up[static_cast<size_t>(i + 1)];
        if (r > 0) {
          const auto& down = rows[static_cast<size_t>(r - 1)];
          if (i < r) lo = std::max(lo, down[static_cast<size_t>(i)]);
          if (i > 0) hi = std::min(hi, down[static_cast<size_t>(i - 1)]);
        }
        rows[static_cast<size_t>(r)][static_cast<size_t>(i)] = lo + rng.below(hi - lo + 1);
      }
    }
  };
  for (long s = 0; s < burn; ++s) sweep();
  for (long s = 0; s < count; ++s) {
    if (s > 0)
      for (long t = 0; t < thin; ++t) sweep();
    GTPattern p;
    for (const auto& row : rows) p.rows.emplace_back(row);
    batch.patterns.push_back(std::move(p));
  }
  return batch;
}

std::vector<std::pair<Signature, Rational>> row_law(const Signature& lambda, int k) {
  const int n = lambda.size();
  if (k < 1 || k > n) throw ArgumentError("row index must lie in 1..N");
  const Integer total = to_integer(weyl_dim(lambda));
  std::vector<std::pair<Signature, Rational>> law;
  std::vector<long> eta(static_cast<size_t>(k));
  // eta_i ranges over [lambda_{i+N-k}, lambda_i] and is weakly decreasing
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      Signature s(eta);
      Integer w = to_integer(weyl_dim(s)) * gt_count(s, lambda);
      if (w != 0) law.emplace_back(s, ratio(w, total));
      return;
    }
    long hi = lambda[i];
    if (i > 0) hi = std::min(hi, eta[static_cast<size_t>(i - 1)]);
    for (long v = lambda[i + n - k]; v <= hi; ++v) {
      eta[static_cast<size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return law;
}

std::vector<Signature> sample_row(const Signature& lambda, int k, long count, uint64_t seed) {
  auto law = row_law(lambda, k);
  const Integer total = to_integer(weyl_dim(lambda));
  std::vector<Integer> cumulative;
  Integer acc = 0;
  for (const auto& [eta, p] : law) {
    acc += to_integer(p * total);
    cumulative.push_back(acc);
  }
  if (acc != total) throw InvariantViolation("row law does not sum to one");
  Rng rng(seed);
  std::vector<Signature> out;
  out.reserve(static_cast<size_t>(count));
  for (long s = 0; s < count; ++s) out.push_back(law[pick(cumulative, rng.below(total))].first);
  return out;
}

Complex bessel_B(const std::vector<Complex>& xs, const std::vector<Complex>& ys) {
  const size_t k = xs.size();
  if (k == 0 || ys.size() != k) throw ArgumentError("x and y must have the same positive length");
  Matrix<Complex> a(k, std::vector<Complex>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) a[i][j] = exp(xs[i] * ys[j]);
  Complex den(Real(1L, xs[0].precision()));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      den *= (xs[i] - xs[j]) * (ys[i] - ys[j]);
      den /= Complex(static_cast<long>(j - i));
    }
  if (den.is_zero()) throw DegeneracyError("Bessel function needs distinct x and distinct y");
  return determinant(std::move(a)) / den;
}

MgfPair bessel_mgf(const Signature& lambda, const std::vector<Complex>& xs) {
  const int k = static_cast<int>(xs.size());
  if (to_integer(weyl_dim(lambda)) > 1000000) throw CapacityError("too many patterns for exact enumeration");
  const int bits = xs[0].precision();
  MgfPair out{Complex(Real(0L, bits)), Complex(Real(1L, bits))};
  for (const auto& [eta, p] : row_law(lambda, k)) {
    std::vector<Complex> ys;
    for (int i = 0; i < k; ++i) ys.emplace_back(Real(eta[i] + k - 1 - i, bits));
    out.lhs += Complex(p, bits) * bessel_B(xs, ys);
  }
  std::vector<Complex> ex;
  for (const auto& x : xs) ex.push_back(exp(x));
  out.rhs = normalized_character(CharFamily::Schur, lambda, ex);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) out.rhs *= (ex[static_cast<size_t>(i)] - ex[static_cast<size_t>(j)]) / (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)]);
  return out;
}

void gue_targets(int k, std::vector<double>& mean, std::vector<std::vector<double>>& covariance) {
  const double pi = std::acos(-1.0);
  if (k == 1) {
    mean = {0.0};
    covariance = {{1.0}};
    return;
  }
  if (k == 2) {
    // y1 + y2 ~ N(0, 2) and y1 - y2 = sqrt(2) chi_3, independent
    const double m = 2.0 / std::sqrt(pi);
    mean = {m, -m};
    const double v = 2.0 - 4.0 / pi, c = 4.0 / pi - 1.0;
    covariance = {{v, c}, {c, v}};
    return;
  }
  throw ArgumentError("GUE targets are tabulated for k = 1, 2");
}

namespace {

double bessel_double(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() == 1) return std::exp(x[0] * y[0]);
  const double num = std::exp(x[0] * y[0] + x[1] * y[1]) - std::exp(x[0] * y[1] + x[1] * y[0]);
  return num / ((x[0] - x[1]) * (y[0] - y[1]));
}

}  // namespace

bool GueReport::within(double sigmas) const {
  for (size_t i = 0; i < mean.size(); ++i) {
    if (std::abs(mean[i] - target_mean[i]) > sigmas * mean_error[i]) return false;
    for (size_t j = 0; j < mean.size(); ++j)
      if (std::abs(covariance[i][j] - target_covariance[i][j]) > sigmas * covariance_error[i][j]) return false;
  }
  for (const auto& p : mgf)
    if (std::abs(p.empirical - p.target) > sigmas * p.standard_error) return false;
  return true;
}

GueReport gue_corners_test(const SignatureFamily& family, long n, int k, long samples, uint64_t seed,
                           const std::vector<std::vector<double>>& mgf_grid) {
  if (k < 1 || k > 2) throw ArgumentError("k must be 1 or 2");
  if (samples < 2) throw ArgumentError("need at least two samples");
  GueReport rep;
  rep.n = n;
  rep.k = k;
  rep.samples = samples;
  rep.seed = seed;
  rep.mean_f = family.profile.mean();
  rep.fluctuation_f = family.profile.fluctuation();
  if (sgn(rep.fluctuation_f) <= 0) throw DegeneracyError("constant profile: S(f) = 0");
  const Signature lambda = family(n);
  const double center = Rational(Rational(n) * rep.mean_f).get_d();
  const double scale = std::sqrt(Rational(Rational(n) * rep.fluctuation_f).get_d());
  auto rescale = [&](const Signature& eta) {
    std::vector<double> z(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) z[static_cast<size_t>(i)] = (static_cast<double>(eta[i]) + (k - 1 - i) - 0.5 * (k - 1) - center) / scale;
    return z;
  };
  std::vector<std::vector<double>> zs;
  for (const auto& eta : sample_row(lambda, k, samples, seed)) zs.push_back(rescale(eta));
  const double ns = static_cast<double>(samples);
  rep.mean.assign(static_cast<size_t>(k), 0.0);
  for (const auto& z : zs)
    for (int i = 0; i < k; ++i) rep.mean[static_cast<size_t>(i)] += z[static_cast<size_t>(i)] / ns;
  rep.covariance.assign(static_cast<size_t>(k), std::vector<double>(static_cast<size_t>(k), 0.0));
  rep.covariance_error = rep.covariance;
  std::vector<std::vector<double>> fourth = rep.covariance;
  for (const auto& z : zs)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const double d = (z[static_cast<size_t>(i)] - rep.mean[static_cast<size_t>(i)]) * (z[static_cast<size_t>(j)] - rep.mean[static_cast<size_t>(j)]);
        rep.covariance[static_cast<size_t>(i)][static_cast<size_t>(j)] += d / (ns - 1);
        fourth[static_cast<size_t>(i)][static_cast<size_t>(j)] += d * d / ns;
      }
  rep.mean_error.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    rep.mean_error[static_cast<size_t>(i)] = std::sqrt(rep.covariance[static_cast<size_t>(i)][static_cast<size_t>(i)] / ns);
    for (int j = 0; j < k; ++j) {
      const double c = rep.covariance[static_cast<size_t>(i)][static_cast<size_t>(j)];
      rep.covariance_error[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::sqrt(std::max(fourth[static_cast<size_t>(i)][static_cast<size_t>(j)] - c * c, 0.0) / ns);
    }
  }
  gue_targets(k, rep.target_mean, rep.target_covariance);
  std::vector<std::pair<std::vector<double>, double>> law;
  for (const auto& [eta, p] : row_law(lambda, k)) law.emplace_back(rescale(eta), p.get_d());
  rep.exact_mean.assign(static_cast<size_t>(k), 0.0);
  rep.exact_covariance.assign(static_cast<size_t>(k), std::vector<double>(static_cast<size_t>(k), 0.0));
  for (const auto& [z, p] : law)
    for (int i = 0; i < k; ++i) {
      rep.exact_mean[static_cast<size_t>(i)] += p * z[static_cast<size_t>(i)];
      for (int j = 0; j < k; ++j) rep.exact_covariance[static_cast<size_t>(i)][static_cast<size_t>(j)] += p * z[static_cast<size_t>(i)] * z[static_cast<size_t>(j)];
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) rep.exact_covariance[static_cast<size_t>(i)][static_cast<size_t>(j)] -= rep.exact_mean[static_cast<size_t>(i)] * rep.exact_mean[static_cast<size_t>(j)];
  for (const auto& x : mgf_grid) {
    if (static_cast<int>(x.size()) != k) throw ArgumentError("mgf grid points must have k coordinates");
    MgfPoint pt;
    pt.x = x;
    double s1 = 0, s2 = 0;
    for (const auto& z : zs) {
      const double b = bessel_double(x, z);
      s1 += b;
      s2 += b * b;
    }
    pt.empirical = s1 / ns;
    pt.standard_error = std::sqrt(std::max(s2 / ns - pt.empirical * pt.empirical, 0.0) / ns);
    for (const auto& [z, p] : law) pt.finite_n += p * bessel_double(x, z);
    double sq = 0;
    for (double v : x) sq += v * v;
    pt.target = std::exp(0.5 * sq);
    rep.mgf.push_back(pt);
  }
  return rep;
}

}  // namespace charasym
