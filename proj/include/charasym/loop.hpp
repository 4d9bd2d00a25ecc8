#pragma once

#include <vector>

#include "charasym/numeric.hpp"
#include "charasym/signature.hpp"

namespace charasym {

constexpr int kLoopWidthCap = 28;

// lambda^L with lambda_i = floor((L - i)/2).
Signature loop_staircase(int L);

struct LoopParams {
  Complex zeta1, zeta2;  // boundary parameters
  Complex v, w, q;       // only the vertical current uses these
  int L = 2;
  void validate() const;  // ArgumentError on zero scalars or L < 2
  // every spectral parameter 1, v = w = e^{-i pi/6}, q = e^{2 pi i/3}
  static LoopParams homogeneous(int L);
};

// chi_{lambda^L}(z_1^2, ..., z_L^2), unnormalized; repeated squares are fine.
// Precision doubles from precision_bits (default: current) until two passes
// agree to 64 bits; PrecisionError past 1024 bits.
Complex tau_eval(int L, const std::vector<Complex>& zs, int precision_bits = 0);

// chi_{lambda^L}(z_1^2, ..., z_k^2, 1^{L-k}) / chi_{lambda^L}(1^L), with the
// same precision control. The Jet version carries one directional derivative.
Complex tau_normalized(int L, const std::vector<Complex>& zs);
Jet<Complex> tau_normalized_jet(int L, const std::vector<Jet<Complex>>& zs);

// (-1)^L i sqrt(3)/2 ln[tau(L+1; zeta1, z) tau(L+1; zeta2, z) / (tau(L; z) tau(L+2; zeta1, zeta2, z))]
// with normalized taus. Principal log; BranchError when the ratio is real and <= 0.
Complex u_tilde(int L, const Complex& zeta1, const Complex& zeta2, const std::vector<Complex>& zs);

// z d/dz of u_tilde at z_j = z, every other z_i = 1.
Complex current_x(const LoopParams& p, const Complex& z);
// w d/dw of u_tilde_{L+2}(zeta1, zeta2; v/q, w) at w = v.
Complex current_y(const LoopParams& p);

// xi(x) = x d/dx ln h(x) = (3/2)(x^{3/2} + 1)/(x^{3/2} - 1), h(x) = (4/9) x^{-3/2} (x^{3/2} - 1)^2.
// Principal branch of x^{3/2}; DomainError for |arg x| >= 2 pi/3 or x^{3/2} = 1.
Complex loop_xi(const Complex& x);
Jet<Complex> loop_xi(const Jet<Complex>& x);
Complex loop_h(const Complex& x);

// sum_i xi(v_i) v_i d/dv_i Delta(xi(v)^2) / Delta(xi(v)^2), from the definition.
Complex loop_B(const std::vector<Complex>& vs);
// Same through x xi' = -(xi^2 - 9/4)/2: -(m-1) sum xi(v_i)^2 + (9/4) m(m-1)/2.
Complex loop_B_closed(const std::vector<Complex>& vs);

// (1/12)(e^{3y/2} - 1)^2 e^{-3y/2}
Complex loop_parity_gap(const Complex& y);
// ln[X(e^y; L+1)^2 / (X(e^y; L) X(e^y; L+2))] for the normalized univariate character.
Complex loop_parity_log_ratio(int L, const Complex& y);

struct LoopPrediction {
  Complex x_pred;      // i sqrt(3)/(4L) (z^3 - z^-3)
  Complex y_pred;      // same form with w = z
  Complex leading;     // 3e^{-9y/4}(e^y-1)/((e^{3y/2}-1)(e^y+1)) H^L, e^y = z^2
  Complex growth;      // H = (4/9)(e^{3y/2}-1)^2/(e^{y/2}(e^y-1)^2)
  Complex parity_term; // 2 gap (-1)^L / L
};
LoopPrediction loop_asymptotics(const Complex& z, int L);

}  // namespace charasym
