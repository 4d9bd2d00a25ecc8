#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "charasym/asymptotics.hpp"
#include "charasym/numeric.hpp"
#include "charasym/signature.hpp"

namespace charasym {

// Triangular array rows[k-1] in GT_k, rows[k-1] interlacing rows[k]; the top row is lambda.
// Equivalently a lozenge tiling of the polygon encoded by lambda: row k lists the
// positions of the horizontal lozenges on the k-th vertical line.
struct GTPattern {
  std::vector<Signature> rows;
  void validate() const;  // throws InvariantViolation
  std::string to_string() const;
  friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.rows == b.rows; }
  friend bool operator<(const GTPattern& a, const GTPattern& b) { return a.rows < b.rows; }
};

enum class SamplerMethod { Exact, Mcmc };

struct SamplerOptions {
  SamplerMethod method = SamplerMethod::Exact;
  long candidate_cap = 1000000;  // exact: largest interlacing set enumerated per row
  long burn_in = 0;              // mcmc sweeps before the first sample; 0 means 100 N^2
  long thin = 0;                 // mcmc sweeps between samples; 0 means N
};

struct SampleBatch {
  std::vector<GTPattern> patterns;
  uint64_t seed = 0;
  SamplerMethod method = SamplerMethod::Exact;
  long burn_in = 0, thin = 0;
};

// Number of interlacing chains from mu (length L) up to lambda (length K >= L);
// s_{lambda/mu}(1^{K-L}) through the skew Jacobi-Trudi determinant. An empty mu
// gives s_lambda(1^K).
Integer gt_count(const Signature& mu, const Signature& lambda);

// All mu in GT_{n-1} with mu interlacing kappa; CapacityError past cap.
std::vector<Signature> interlacing_below(const Signature& kappa, long cap = 1000000);

// Uniformly random GT patterns with top row lambda.
SampleBatch sample_tiling(const Signature& lambda, long count, uint64_t seed, const SamplerOptions& options = {});

// Exact law of the k-th row: Prob(eta) = s_eta(1^k) s_{lambda/eta}(1^{N-k}) / s_lambda(1^N).
std::vector<std::pair<Signature, Rational>> row_law(const Signature& lambda, int k);

// Independent draws from row_law (exact integer arithmetic for the weights).
std::vector<Signature> sample_row(const Signature& lambda, int k, long count, uint64_t seed);

// det[e^{x_i y_j}] / (Delta(x) Delta(y)) * prod_{i<j}(j - i).
Complex bessel_B(const std::vector<Complex>& xs, const std::vector<Complex>& ys);

struct MgfPair {
  Complex lhs;  // sum over eta of law(eta) B_k(x; eta + delta_k)
  Complex rhs;  // S_lambda(e^{x_1}, ..., e^{x_k}; N, 1) prod (e^{x_i} - e^{x_j})/(x_i - x_j)
};
MgfPair bessel_mgf(const Signature& lambda, const std::vector<Complex>& xs);

struct MgfPoint {
  std::vector<double> x;
  double empirical = 0, standard_error = 0;
  double finite_n = 0;  // exact expectation at this N
  double target = 0;    // exp(sum x^2 / 2)
};

struct GueReport {
  long n = 0;
  int k = 0;
  long samples = 0;
  uint64_t seed = 0;
  Rational mean_f, fluctuation_f;
  std::vector<double> mean, mean_error, target_mean;
  std::vector<std::vector<double>> covariance, covariance_error, target_covariance;
  // moments of the exact law at this N, for telling sampling noise from finite-size bias
  std::vector<double> exact_mean;
  std::vector<std::vector<double>> exact_covariance;
  std::vector<MgfPoint> mgf;
  // every mean, covariance and mgf entry within `sigmas` standard errors
  bool within(double sigmas) const;
};

// Rows k of uniformly random tilings for lambda = family(N), rescaled to
// (Upsilon + delta_k - (k-1)/2 - N E(f)) / sqrt(N S(f)) and compared with GUE_k.
// The centering of delta_k keeps the trace unchanged and the points distinct.
GueReport gue_corners_test(const SignatureFamily& family, long n, int k, long samples, uint64_t seed,
                           const std::vector<std::vector<double>>& mgf_grid = {});

// Mean vector and covariance of the ordered eigenvalues of GUE_k, normalized so
// that E B_k(x; GUE_k) = exp(sum x^2 / 2); k in {1, 2}.
void gue_targets(int k, std::vector<double>& mean, std::vector<std::vector<double>>& covariance);

}  // namespace charasym
