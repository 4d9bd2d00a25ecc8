#pragma once

#include <string>
#include <vector>

#include "charasym/laurent.hpp"
#include "charasym/numeric.hpp"
#include "charasym/signature.hpp"

namespace charasym {

enum class Family { Schur1, SchurQ, Symplectic1, SymplecticQ, Jacobi };

Family parse_family(const std::string& name);  // schur_1, schur_q, ...
std::string family_name(Family f);

struct FamilyParams {
  Rational q = 1;  // q-families only
  Rational a = 0;  // Jacobi only
  Rational b = 0;
};

// sum_i x^{mu_i} / prod_{j != i} (mu_i - mu_j)
LaurentPolynomial schur_laurent(const Signature& lambda);

// S_lambda(x; N, 1) as an exact Laurent polynomial in x.
LaurentPolynomial schur_univariate(const Signature& lambda);

// Single-variable normalized character as the theorem's prefactor times the
// finite sum of residues at the designated poles. For Jacobi the argument is z
// and the residues are expressed through x = (z + 1/z)/2.
template <class T>
T residue_eval(Family family, const Signature& lambda, const FamilyParams& params, const T& x);

extern template Rational residue_eval<Rational>(Family, const Signature&, const FamilyParams&, const Rational&);
extern template Complex residue_eval<Complex>(Family, const Signature&, const FamilyParams&, const Complex&);

// Complex evaluation with working precision raised until two successive
// evaluations agree to target_bits (default: the current default precision).
// The residue sums cancel catastrophically near x = 1 for large N, so the
// working precision can reach thousands of bits. The input x is taken as an
// exact binary number. Throws PrecisionError past max_bits.
Complex residue_eval_adaptive(Family family, const Signature& lambda, const FamilyParams& params, const Complex& x,
                              int target_bits = 0, int max_bits = 1 << 17);

// The residue sum without the prefactor, i.e. the right side of the
// univariate specialization of the determinantal-class identity, together
// with the prefactor that turns it into the normalized value.
template <class T>
struct ResidueParts {
  T prefactor;
  T sum;
};
template <class T>
ResidueParts<T> residue_parts(Family family, const Signature& lambda, const FamilyParams& params, const T& x);

extern template ResidueParts<Rational> residue_parts<Rational>(Family, const Signature&, const FamilyParams&, const Rational&);
extern template ResidueParts<Complex> residue_parts<Complex>(Family, const Signature&, const FamilyParams&, const Complex&);

// Rational constant of the symplectic q prefactor (everything except the
// x-dependent Pochhammer and (x - 1/x) factors).
Rational symplectic_q_constant(long n, const Rational& q);

// [m]_q and [m]_q!
Rational q_integer(long m, const Rational& q);
Rational q_factorial(long m, const Rational& q);

// Terminating 2F1(-n, b; c; x).
template <class T>
T hyp2f1_terminating(long n, const Rational& b, const Rational& c, const T& x) {
  if (n < 0) throw ArgumentError("terminating 2F1 needs a nonpositive first parameter");
  T term = lift<T>(1L, x), total = term;
  for (long k = 0; k < n; ++k) {
    Rational r = Rational(k - n) * (b + k) / ((c + k) * (k + 1));
    term = term * lift<T>(r, x) * x;
    total += term;
  }
  return total;
}

struct RectContour {
  Real left, right;
  Real half_height;
  long samples_per_unit = 8;
};

RectContour default_contour(const Signature& lambda);

struct QuadratureResult {
  Complex value;
  Real error_estimate;  // relative, from successive refinements
  long evaluations = 0;
};

// Numeric check of the q = 1 Schur contour integral: tanh-sinh quadrature
// along each side of the rectangle, times the prefactor.
QuadratureResult contour_quadrature(const Signature& lambda, const Complex& x, const RectContour& contour,
                                    const Real& tolerance = Real(1e-12));

}  // namespace charasym
