#pragma once

#include <functional>
#include <vector>

#include "charasym/laurent.hpp"
#include "charasym/numeric.hpp"
#include "charasym/residue.hpp"
#include "charasym/signature.hpp"

namespace charasym {

// Data of a class of determinantal symmetric functions
// A_mu(x) = det[g(x_i; mu_j)] / Delta(x).
struct DeterminantalClassSpec {
  std::function<Rational(long)> theta;             // theta_i, i = 1, 2, ...
  std::function<Rational(const Rational&, long)> g;  // g(x; m)
  std::function<Rational(long)> alpha;             // eigenvalue of T on g(.; m)
  std::function<Rational(long)> beta;
  std::function<Rational(long)> c;                 // c_N
  // T applied to a univariate function at a point; empty when T is a
  // differential operator that cannot act on black-box functions.
  std::function<Rational(const std::function<Rational(const Rational&)>&, const Rational&)> apply_T;
};

// Instances. The c_N are computed from the defining evaluation at mu = delta.
DeterminantalClassSpec schur_class(const Rational& q);       // theta_i = q^{i-1}; q = 1 allowed
DeterminantalClassSpec symplectic_class(const Rational& q);  // theta_i = q^i, q != 1
DeterminantalClassSpec symplectic_t_class();                 // variable t = x + 1/x, theta_i = 2
DeterminantalClassSpec jacobi_class(const Rational& a, const Rational& b);  // theta_i = 1

// Largest |T g - alpha g| over the supplied (x, m) pairs; zero when the
// eigenfunction condition holds. Requires apply_T.
Rational eigen_defect(const DeterminantalClassSpec& spec, const std::vector<Rational>& xs, const std::vector<long>& ms);

// A_mu(x_1..x_k, theta_1..theta_{N-k}) / A_mu(theta_1..theta_N) through the
// generic determinant of operator powers, with T^j realized on the
// eigen-expansion of the univariate normalized function.
Rational generic_multivar(const DeterminantalClassSpec& spec, const StrictSignature& mu, const std::vector<Rational>& xs);

// Family-specific multivariate formulas (operator determinants applied to
// products of single-variable normalized characters). For Jacobi the inputs
// are z_i and the result is J_lambda(z_1..z_k; N, a, b).
template <class T>
T multivar_det_eval(Family family, const Signature& lambda, const std::vector<T>& xs, const FamilyParams& params);

extern template Rational multivar_det_eval<Rational>(Family, const Signature&, const std::vector<Rational>&, const FamilyParams&);
extern template Complex multivar_det_eval<Complex>(Family, const Signature&, const std::vector<Complex>&, const FamilyParams&);

// Complex evaluation with the working precision doubled until two successive
// results agree to target_bits (default: the current default precision).
Complex multivar_eval_adaptive(Family family, const Signature& lambda, const std::vector<Complex>& xs,
                               const FamilyParams& params, int target_bits = 0, int max_bits = 1 << 17);

struct PtlPolynomial {
  long j = 0, l = 0, n = 0;
  std::vector<Rational> coefficients;  // ascending powers of x
  long degree() const { return static_cast<long>(coefficients.size()) - 1; }
  template <class T>
  T evaluate(const T& x) const {
    T acc = lift<T>(0L, x);
    for (size_t i = coefficients.size(); i-- > 0;) acc = acc * x + lift<T>(coefficients[i], x);
    return acc;
  }
};

PtlPolynomial ptl_poly(long j, long l, long n);

// The expansion of the multivariate normalized Schur function through
// x d/dx-derivatives of the single-variable one and the P_{j,l,N} polynomials.
template <class T>
T multivar_expansion(const Signature& lambda, const std::vector<T>& xs);

extern template Rational multivar_expansion<Rational>(const Signature&, const std::vector<Rational>&);
extern template Complex multivar_expansion<Complex>(const Signature&, const std::vector<Complex>&);

}  // namespace charasym
