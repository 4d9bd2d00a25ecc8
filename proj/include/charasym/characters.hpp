#pragma once

#include <vector>

#include "charasym/numeric.hpp"
#include "charasym/signature.hpp"

namespace charasym {

// Point of the parameter space of extreme characters of U(infinity).
struct VoiculescuParam {
  std::vector<Rational> alpha_plus, alpha_minus, beta_plus, beta_minus;
  Rational delta_plus = 0, delta_minus = 0;

  Rational gamma_plus() const;
  Rational gamma_minus() const;
  void validate() const;  // throws ArgumentError
};

// Modified Frobenius coordinates p_i = mu_i - i + 1/2, q_i = mu'_i - i + 1/2.
struct FrobeniusPair {
  std::vector<Rational> p, q;
  long d = 0;
};
FrobeniusPair frobenius_coords(const Signature& partition);

// Finite-N parameters read off a signature: alpha = p/N, beta = q/N for the
// positive and negative diagrams, delta = |lambda^{+-}|/N. These converge to
// the limiting point along a Voiculescu family.
VoiculescuParam voiculescu_from_signature(const Signature& lambda);

// The extreme character on a single eigenvalue u = x:
// e^{gamma+ (u-1) + gamma- (1/u - 1)} prod (1 + beta+ (u-1))/(1 - alpha+ (u-1))
//                                     * (1 + beta- (1/u-1))/(1 - alpha- (1/u-1)).
Complex voiculescu_phi(const VoiculescuParam& omega, const Complex& x);

// Product over the Frobenius pairs of lambda^+ and lambda^-:
// prod (w + (1/2 - p+)/N)/(w + (1/2 + q+)/N) * prod (w + (1/2 + N + p-)/N)/(w + (1/2 + N - q-)/N).
// Equal to prod_j (Nw + j - lambda_j)/(Nw + j), i.e. exp(Q) at f = 0 evaluated at w + 1.
template <class T>
T phi_finite_N(const Signature& lambda, const T& w);
extern template Rational phi_finite_N<Rational>(const Signature&, const Rational&);
extern template Complex phi_finite_N<Complex>(const Signature&, const Complex&);

// Signature sequences with a single nonzero parameter in the limit:
//   Alpha  (floor(N/2), 0, ..., 0)        alpha+ = 1/2
//   Beta   (1^{floor(N/2)}, 0, ..., 0)    beta+  = 1/2
//   Gamma  floor(sqrt N) square plus the leftover boxes in extra rows,
//          |lambda| = N exactly           gamma+ = 1
enum class VoiculescuFamily { Alpha, Beta, Gamma };
Signature voiculescu_family_signature(VoiculescuFamily family, int n);
VoiculescuParam voiculescu_family_limit(VoiculescuFamily family);

// nu_1 <= nu_2 <= ... given by a prefix; the last entry repeats forever.
class LimitSequence {
 public:
  explicit LimitSequence(std::vector<long> prefix);
  long operator()(long j) const;  // nu_j, j >= 1
  const std::vector<long>& prefix() const { return prefix_; }
  // lambda of length n with lambda_{n-j+1} = nu_j
  Signature signature(int n) const;

 private:
  std::vector<long> prefix_;
};

struct FnuResult {
  Complex value;       // prefactor * sum
  Complex sum;         // residue sum alone; entire in x
  Real tail_bound;     // bound on |omitted terms of the sum|
  long terms = 0;
};

// (a; q)_infinity truncated once |a q^i| drops below 2^-precision, with the
// remaining factor bounded and folded into *bound (relative) when given.
Complex q_pochhammer_inf(const Complex& a, const Rational& q, Real* bound = nullptr);

// Limit of s_lambda(x, q^-1, ..., q^{1-N}) / s_lambda(1, q^-1, ..., q^{1-N})
// as lambda_{N-j+1} -> nu_j: (q;q)_inf/(qx;q)_inf times
// sum_k x^{e_k} / prod_{j != k}(1 - q^{e_j - e_k}), e_k = nu_k + k - 1, cut at
// k <= truncation. Throws TruncationError when the tail bound exceeds
// tolerance relative to |value|, and PoleError at x = q^-i, i >= 1, where the
// sum vanishes (fnu_sum still returns it).
FnuResult fnu(const LimitSequence& nu, const Complex& x, long truncation, const Rational& q,
              const Real& tolerance = Real(1e-30));
FnuResult fnu_sum(const LimitSequence& nu, const Complex& x, long truncation, const Rational& q);

// k-variable limit through the q-difference determinant
// q^{-2 C(k,3) - 2 C(k,2)} (1-q)^{C(k,2)} det[D^{j-1} G(x_i)] / (Delta(x) prod (x_i q^k; q)_inf),
// G(x) = (q;q)_inf sum(x q^{k-1}), D f(x) = (f(x/q) - f(x))/(1/q - 1).
Complex fnu_multivar(const LimitSequence& nu, const std::vector<Complex>& xs, const Rational& q, long truncation);

// Exact finite-N ratio s_lambda(xs, q^-k, ..., q^{1-N}) / s_lambda(1, q^-1, ..., q^{1-N}).
Rational q_character_ratio(const Signature& lambda, const std::vector<Rational>& xs, const Rational& q);

}  // namespace charasym
