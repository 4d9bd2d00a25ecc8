#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charasym/numeric.hpp"
#include "charasym/signature.hpp"

namespace charasym {

// Weakly decreasing piecewise-linear limit shape f on [0, 1].
class Profile {
 public:
  Profile() = default;
  // (t_i, f(t_i)) with 0 = t_0 < ... < t_m = 1
  explicit Profile(std::vector<std::pair<Rational, Rational>> breakpoints);

  static Profile zero();
  static Profile linear(const Rational& alpha);  // alpha (1 - t)
  static Profile halfstair();                    // (1 - t)/2
  static Profile loop();                         // 1/4 - t/2
  static Profile parse(const std::string& spec); // preset name, "linear:A", or "t:f;t:f;..."

  const std::vector<std::pair<Rational, Rational>>& breakpoints() const { return points_; }
  Rational value(const Rational& t) const;
  Rational integral(const Rational& upto) const;  // int_0^upto f
  Rational mean() const;                          // E(f)
  Rational fluctuation() const;                   // S(f)
  // Range of f(t) + 1 - t over [0, 1]; F is analytic off this interval.
  std::pair<Rational, Rational> support() const;
  std::string to_string() const;

 private:
  std::vector<std::pair<Rational, Rational>> points_;
};

// F(w; f) = int_0^1 ln(w - f(t) - 1 + t) dt and its w-derivatives, order 0..3.
// Principal logarithm; throws BranchError for real w inside the support.
Complex profile_F(const Profile& f, const Complex& w, int order = 0);

// Root of F'(w; f) = y. Real y: bracketing plus Newton on the real branch,
// w_0 above the support for y > 0 and below it for y < 0. Complex y: Newton
// continuation from a real starting value.
Complex critical_point(const Profile& f, const Complex& y);

// y w_0 - F(w_0) - 1 - ln(e^y - 1), imaginary part reduced to (-pi, pi].
Complex first_order_limit(const Profile& f, const Complex& y);

// sum_j ln(1 + (f(j/N) - lambda_j/N)/(w - f(j/N) - 1 + j/N)), N = len(lambda).
Complex q_factor(const Profile& f, const Signature& lambda, const Complex& w);

// Leading steepest-descent approximation of S_lambda(e^y; N, 1) with
// g(w_0) = exp(-Q(w_0)); with the sign of Q as defined above, exp(+Q) gives
// the reciprocal correction (S = x for lambda = (1, ..., 1), f = 0 settles it).
Complex second_order_log_prediction(const Profile& f, const Signature& lambda, const Complex& y);
Complex second_order_prediction(const Profile& f, const Signature& lambda, const Complex& y);

struct GueRegime {
  Rational mean;         // E(f)
  Rational fluctuation;  // S(f)
  Complex prediction;    // exp(sqrt(N) E h + S h^2 / 2)
};
GueRegime gue_regime(const Profile& f, const Complex& h, long n);

// Rules turning a profile into a signature of length N.
enum class RoundingRule {
  Floor,      // lambda_i = floor(N f(i/N)); R_1 grows like N
  Cumulative  // lambda_i = round(C_i) - round(C_{i-1}), C_i = N^2 int_0^{i/N} f; R_1 = O(1)
};

struct SignatureFamily {
  Profile profile;
  RoundingRule rule = RoundingRule::Cumulative;
  Signature operator()(long n) const;
};

Rational r_one(const Signature& lambda, const Profile& f);
Rational r_infinity(const Signature& lambda, const Profile& f);

// ln S_lambda(x; N, 1) through the adaptive-precision residue sum. The branch
// of the logarithm is chosen continuously against the reference value ref_log
// (the nearest branch to it), so callers comparing with an asymptotic log get
// a meaningful difference.
Complex log_normalized_schur(const Signature& lambda, const Complex& x, const Complex& ref_log, int target_bits = 0);

// Reduce the imaginary part into (-pi, pi].
Complex reduce_imaginary(const Complex& z);

}  // namespace charasym
