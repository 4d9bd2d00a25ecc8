#include "charasym/loop.hpp"

#include <functional>

#include "charasym/errors.hpp"
#include "charasym/symfunc.hpp"

namespace charasym {

Signature loop_staircase(int L) {
  if (L < 1) throw ArgumentError("width must be positive");
  std::vector<long> parts;
  for (int i = 1; i <= L; ++i) parts.push_back((L - i) / 2);
  return Signature(parts);
}

void LoopParams::validate() const {
  if (L < 2) throw ArgumentError("width must be at least 2");
  for (const Complex* c : {&zeta1, &zeta2, &v, &w, &q})
    if (c->is_zero()) throw ArgumentError("loop parameters must be nonzero");
}

LoopParams LoopParams::homogeneous(int L) {
  LoopParams p;
  p.L = L;
  p.zeta1 = p.zeta2 = Complex(1L);
  p.v = p.w = Complex::expi_pi(ratio(-1, 6));
  p.q = Complex::expi_pi(ratio(2, 3));
  return p;
}

namespace {

constexpr int kMaxBits = 1024;

void check_width(int L) {
  if (L < 1) throw ArgumentError("width must be positive");
  if (L > kLoopWidthCap + 4) throw CapacityError("loop width is capped at " + std::to_string(kLoopWidthCap));
}

Complex at_bits(const Complex& z, int bits) { return z.with_precision(bits); }
Jet<Complex> at_bits(const Jet<Complex>& z, int bits) { return Jet<Complex>(z.val.with_precision(bits), z.der.with_precision(bits)); }

bool agree(const Complex& a, const Complex& b) { return abs(a - b) <= abs(b) * pow(Real(2L), -64); }
bool agree(const Jet<Complex>& a, const Jet<Complex>& b) {
  // the derivative is judged against the value scale too, so a vanishing
  // derivative does not force endless doubling
  const Real scale = abs(b.val) + abs(b.der);
  return abs(a.val - b.val) <= scale * pow(Real(2L), -64) && abs(a.der - b.der) <= scale * pow(Real(2L), -64);
}

// Evaluate at doubling precision until two passes agree; inputs are taken as
// exact binary numbers at every precision.
template <class T>
T escalate(const std::function<T(int)>& eval, int start_bits) {
  int bits = std::max(start_bits > 0 ? start_bits : default_precision(), 64);
  T prev = eval(bits);
  while (bits < kMaxBits) {
    bits = std::min(2 * bits, kMaxBits);
    T cur = eval(bits);
    if (agree(prev, cur)) return cur;
    prev = std::move(cur);
  }
  throw PrecisionError("symplectic character did not stabilize below " + std::to_string(kMaxBits) + " bits");
}

template <class T>
T tau_normalized_impl(int L, const std::vector<T>& zs) {
  check_width(L);
  if (zs.empty()) throw ArgumentError("need at least one variable");
  if (static_cast<int>(zs.size()) > L) throw ArgumentError("more variables than the width");
  const Signature lam = loop_staircase(L);
  const int start = ScalarTraits<T>::precision(zs[0]);
  return escalate<T>(
      [&](int bits) {
        PrecisionScope scope(bits);
        std::vector<T> xs;
        for (const auto& z : zs) {
          T zb = at_bits(z, bits);
          xs.push_back(zb * zb);
        }
        return normalized_character(CharFamily::Symplectic, lam, xs);
      },
      start);
}

Complex unit_i() { return Complex::i(); }

Complex sign_factor(int L) {
  Complex c = unit_i() * sqrt(Real(3L)) / Complex(2L);
  return L % 2 == 0 ? c : -c;
}

// z d/dz ln of the tau ratio with the probe variables carried as jets.
Complex log_ratio_derivative(int L, const Complex& zeta1, const Complex& zeta2, const std::vector<Jet<Complex>>& zs) {
  auto with = [&](std::vector<Jet<Complex>> front) {
    front.insert(front.end(), zs.begin(), zs.end());
    return front;
  };
  const Jet<Complex> a = tau_normalized_jet(L + 1, with({Jet<Complex>(zeta1)}));
  const Jet<Complex> b = tau_normalized_jet(L + 1, with({Jet<Complex>(zeta2)}));
  const Jet<Complex> c = tau_normalized_jet(L, zs);
  const Jet<Complex> d = tau_normalized_jet(L + 2, with({Jet<Complex>(zeta1), Jet<Complex>(zeta2)}));
  return a.der / a.val + b.der / b.val - c.der / c.val - d.der / d.val;
}

}  // namespace

Complex tau_eval(int L, const std::vector<Complex>& zs, int precision_bits) {
  check_width(L);
  if (static_cast<int>(zs.size()) != L) throw ArgumentError("tau needs exactly L variables");
  const Signature lam = loop_staircase(L);
  return escalate<Complex>(
      [&](int bits) {
        PrecisionScope scope(bits);
        std::vector<Complex> xs;
        for (const auto& z : zs) {
          Complex zb = z.with_precision(bits);
          xs.push_back(zb * zb);
        }
        return symplectic_at_nodes(lam, xs);
      },
      precision_bits);
}

Complex tau_normalized(int L, const std::vector<Complex>& zs) { return tau_normalized_impl(L, zs); }
Jet<Complex> tau_normalized_jet(int L, const std::vector<Jet<Complex>>& zs) { return tau_normalized_impl(L, zs); }

Complex u_tilde(int L, const Complex& zeta1, const Complex& zeta2, const std::vector<Complex>& zs) {
  auto with = [&](std::vector<Complex> front) {
    front.insert(front.end(), zs.begin(), zs.end());
    return front;
  };
  const Complex r = tau_normalized(L + 1, with({zeta1})) * tau_normalized(L + 1, with({zeta2})) /
                    (tau_normalized(L, zs) * tau_normalized(L + 2, with({zeta1, zeta2})));
  if (r.im().is_zero() && r.re() <= Real(0L))
    throw BranchError("tau ratio " + r.to_string(12) + " lies on the branch cut of the logarithm");
  return sign_factor(L) * log(r);
}

Complex current_x(const LoopParams& p, const Complex& z) {
  p.validate();
  if (z.is_zero()) throw ArgumentError("probe variable must be nonzero");
  return sign_factor(p.L) * log_ratio_derivative(p.L, p.zeta1, p.zeta2, {Jet<Complex>(z, z)});
}

Complex current_y(const LoopParams& p) {
  p.validate();
  const Complex fixed = p.v / p.q;
  return sign_factor(p.L + 2) * log_ratio_derivative(p.L + 2, p.zeta1, p.zeta2, {Jet<Complex>(fixed), Jet<Complex>(p.v, p.v)});
}

namespace {

const Complex& value_of(const Complex& x) { return x; }
const Complex& value_of(const Jet<Complex>& x) { return x.val; }

template <class T>
T xi_impl(const T& x) {
  const Complex& v = value_of(x);
  if (v.is_zero()) throw DomainError("xi is singular at 0");
  // |arg x| < 2 pi/3 keeps x^{3/2} off the negative axis
  if (abs(arg(v)) >= Real::pi(v.precision()) * Real(2L) / Real(3L)) throw DomainError("x^{3/2} leaves the principal branch");
  const T s = exp(log(x) * lift<T>(ratio(3, 2), x));
  const T one = lift<T>(1L, x);
  if (abs(value_of(s) - Complex(1L)) < pow(Real(2L), 16 - v.precision())) throw DomainError("xi is singular where x^{3/2} = 1");
  return lift<T>(ratio(3, 2), x) * (s + one) / (s - one);
}

}  // namespace

Complex loop_xi(const Complex& x) { return xi_impl(x); }
Jet<Complex> loop_xi(const Jet<Complex>& x) { return xi_impl(x); }

Complex loop_h(const Complex& x) {
  loop_xi(x);  // same branch rules
  const Complex s = exp(log(x) * Complex(ratio(3, 2), x.precision()));
  return Complex(ratio(4, 9), x.precision()) * (s - Complex(1L)) * (s - Complex(1L)) / s;
}

Complex loop_B(const std::vector<Complex>& vs) {
  const size_t m = vs.size();
  if (m == 0) throw ArgumentError("B needs at least one variable");
  std::vector<Complex> xi(m);
  for (size_t i = 0; i < m; ++i) xi[i] = loop_xi(vs[i]);
  Complex total(0L);
  for (size_t i = 0; i < m; ++i) {
    // v_i d/dv_i of xi(v_i)^2 through a jet with direction v_i
    const Jet<Complex> x = loop_xi(Jet<Complex>(vs[i], vs[i]));
    const Complex dsq = Complex(2L) * x.val * x.der;
    // the Vandermonde's log-derivative is sum over j of d(xi_i^2)/(xi_i^2 - xi_j^2)
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const Complex gap = xi[i] * xi[i] - xi[j] * xi[j];
      if (gap.is_zero()) throw DegeneracyError("B needs distinct xi(v)^2");
      total += xi[i] * dsq / gap;
    }
  }
  return total;
}

Complex loop_B_closed(const std::vector<Complex>& vs) {
  const long m = static_cast<long>(vs.size());
  if (m == 0) throw ArgumentError("B needs at least one variable");
  Complex sum(0L);
  for (const auto& v : vs) {
    const Complex x = loop_xi(v);
    sum += x * x;
  }
  return -Complex(m - 1) * sum + Complex(ratio(9 * m * (m - 1), 8));
}

Complex loop_parity_gap(const Complex& y) {
  const Complex e = exp(y * Complex(ratio(3, 2)));
  return (e - Complex(1L)) * (e - Complex(1L)) / (Complex(12L) * e);
}

Complex loop_parity_log_ratio(int L, const Complex& y) {
  const std::vector<Complex> z{exp(y / Complex(2L))};  // tau takes z with x = z^2
  const Complex a = tau_normalized(L, z), b = tau_normalized(L + 1, z), c = tau_normalized(L + 2, z);
  return log(b * b / (a * c));
}

LoopPrediction loop_asymptotics(const Complex& z, int L) {
  if (L < 1) throw ArgumentError("width must be positive");
  const Complex x = z * z;
  loop_xi(x);  // branch and singularity checks
  LoopPrediction p;
  const Complex z3 = pow(z, 3);
  const Complex lead = Complex::i() * sqrt(Real(3L)) / Complex(4L * L);
  p.x_pred = lead * (z3 - Complex(1L) / z3);
  p.y_pred = p.x_pred;
  const Complex y = log(x);
  const Complex e1 = exp(y), e32 = exp(y * Complex(ratio(3, 2))), eh = exp(y / Complex(2L));
  p.growth = Complex(ratio(4, 9)) * (e32 - Complex(1L)) * (e32 - Complex(1L)) / (eh * (e1 - Complex(1L)) * (e1 - Complex(1L)));
  p.leading = Complex(3L) * exp(y * Complex(ratio(-9, 4))) * (e1 - Complex(1L)) / ((e32 - Complex(1L)) * (e1 + Complex(1L))) * pow(p.growth, L);
  p.parity_term = Complex(2L) * loop_parity_gap(y) / Complex(L % 2 == 0 ? L : -L);
  return p;
}

}  // namespace charasym
