#include "charasym/asm.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "charasym/errors.hpp"
#include "charasym/residue.hpp"
#include "charasym/symfunc.hpp"

namespace charasym {

void ASMatrix::validate() const {
  const int n = size();
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n) throw InvariantViolation("matrix is not square");
  auto check_line = [&](auto at, const std::string& what) {
    int sum = 0;
    for (int k = 0; k < n; ++k) {
      const int e = at(k);
      if (e < -1 || e > 1) throw InvariantViolation(what + ": entry outside {-1, 0, 1}");
      sum += e;
      // partial sums in {0, 1} is exactly the alternation condition when the total is 1
      if (sum < 0 || sum > 1) throw InvariantViolation(what + ": nonzero entries do not alternate");
    }
    if (sum != 1) throw InvariantViolation(what + ": sum is not 1");
  };
  for (int i = 0; i < n; ++i) {
    check_line([&](int k) { return entries[static_cast<size_t>(i)][static_cast<size_t>(k)]; }, "row " + std::to_string(i + 1));
    check_line([&](int k) { return entries[static_cast<size_t>(k)][static_cast<size_t>(i)]; }, "column " + std::to_string(i + 1));
  }
}

std::string ASMatrix::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < entries.size(); ++i) {
    out << (i ? ";" : "");
    for (size_t j = 0; j < entries[i].size(); ++j) out << (j ? "," : "") << entries[i][j];
  }
  return out.str();
}

void SixVertex::validate() const {
  if (static_cast<int>(horizontal.size()) != n || static_cast<int>(vertical.size()) != n + 1)
    throw InvariantViolation("edge arrays have the wrong shape");
  for (int i = 0; i < n; ++i) {
    if (horizontal[static_cast<size_t>(i)].front() != 0 || horizontal[static_cast<size_t>(i)].back() != 1)
      throw InvariantViolation("horizontal boundary arrows must point inwards");
    if (vertical.front()[static_cast<size_t>(i)] != 0 || vertical.back()[static_cast<size_t>(i)] != 1)
      throw InvariantViolation("vertical boundary arrows must point outwards");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int l = horizontal[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const int r = horizontal[static_cast<size_t>(i)][static_cast<size_t>(j + 1)];
      const int t = vertical[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const int b = vertical[static_cast<size_t>(i + 1)][static_cast<size_t>(j)];
      // in bit form the ice rule says the horizontal and vertical jumps agree
      if (r - l != b - t) throw InvariantViolation("ice rule fails at vertex (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    }
}

SixVertex to_six_vertex(const ASMatrix& m) {
  m.validate();
  const int n = m.size();
  SixVertex c;
  c.n = n;
  c.horizontal.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n + 1), 0));
  c.vertical.assign(static_cast<size_t>(n + 1), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int e = m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      c.horizontal[static_cast<size_t>(i)][static_cast<size_t>(j + 1)] = c.horizontal[static_cast<size_t>(i)][static_cast<size_t>(j)] + e;
      c.vertical[static_cast<size_t>(i + 1)][static_cast<size_t>(j)] = c.vertical[static_cast<size_t>(i)][static_cast<size_t>(j)] + e;
    }
  return c;
}

ASMatrix from_six_vertex(const SixVertex& c) {
  c.validate();
  ASMatrix m;
  m.entries.assign(static_cast<size_t>(c.n), std::vector<int>(static_cast<size_t>(c.n), 0));
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          c.horizontal[static_cast<size_t>(i)][static_cast<size_t>(j + 1)] - c.horizontal[static_cast<size_t>(i)][static_cast<size_t>(j)];
  m.validate();
  return m;
}

VertexType vertex_type(const SixVertex& c, int i, int j) {
  const int l = c.horizontal[static_cast<size_t>(i)][static_cast<size_t>(j)];
  const int r = c.horizontal[static_cast<size_t>(i)][static_cast<size_t>(j + 1)];
  const int t = c.vertical[static_cast<size_t>(i)][static_cast<size_t>(j)];
  if (l != r) return VertexType::C;
  return l == t ? VertexType::A : VertexType::B;
}

bool VertexStats::consistent() const {
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) {
    const auto u = static_cast<size_t>(k);
    if (a[u] + b[u] + c[u] != n || a_hat[u] + b_hat[u] + c_hat[u] != n) return false;
  }
  return true;
}

VertexStats vertex_stats(const ASMatrix& m) {
  const SixVertex c = to_six_vertex(m);
  const auto n = static_cast<size_t>(m.size());
  VertexStats s;
  s.a.assign(n, 0);
  s.b = s.c = s.a_hat = s.b_hat = s.c_hat = s.a;
  s.type.assign(n, std::vector<VertexType>(n, VertexType::A));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const VertexType t = vertex_type(c, static_cast<int>(i), static_cast<int>(j));
      s.type[i][j] = t;
      auto& row = t == VertexType::A ? s.a : t == VertexType::B ? s.b : s.c;
      auto& col = t == VertexType::A ? s.a_hat : t == VertexType::B ? s.b_hat : s.c_hat;
      ++row[i];
      ++col[j];
    }
  return s;
}

std::vector<ASMatrix> asm_enumerate(int n) {
  if (n < 1) throw ArgumentError("size must be positive");
  if (n > kAsmEnumerationCap)
    throw CapacityError("ASM enumeration is capped at n = " + std::to_string(kAsmEnumerationCap));
  std::vector<ASMatrix> out;
  ASMatrix cur;
  cur.entries.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  std::vector<int> column(static_cast<size_t>(n), 0);  // partial column sums
  // Fill cell (i, j) with the entries allowed by the running row and column
  // sums, in increasing order so the output is lexicographic.
  std::function<void(int, int, int)> fill = [&](int i, int j, int row_sum) {
    if (j == n) {
      if (row_sum != 1) return;
      if (i + 1 == n) {
        out.push_back(cur);
        return;
      }
      // a column still at 0 needs a later 1; too many of them is a dead end
      int open = 0;
      for (int v : column) open += 1 - v;
      if (open > n - i - 1) return;
      fill(i + 1, 0, 0);
      return;
    }
    auto& col = column[static_cast<size_t>(j)];
    for (int e = -1; e <= 1; ++e) {
      if (row_sum + e < 0 || row_sum + e > 1 || col + e < 0 || col + e > 1) continue;
      cur.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
      col += e;
      fill(i, j + 1, row_sum + e);
      col -= e;
    }
    cur.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
  };
  fill(0, 0, 0);
  return out;
}

Integer asm_count_transfer(int n) {
  if (n < 1) throw ArgumentError("size must be positive");
  if (n > 20) throw CapacityError("transfer count uses 2^n states");
  const unsigned full = (1u << n) - 1;
  std::vector<Integer> count(static_cast<size_t>(full) + 1, 0);
  count[0] = 1;
  for (int row = 0; row < n; ++row) {
    std::vector<Integer> next(count.size(), 0);
    for (unsigned s = 0; s <= full; ++s) {
      if (count[s] == 0) continue;
      for (unsigned t = 0; t <= full; ++t) {
        if (__builtin_popcount(t) != __builtin_popcount(s) + 1) continue;
        // row = t - s bitwise; its nonzero entries must read +1, -1, ..., +1
        int expect = 1;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
          const int e = static_cast<int>((t >> j) & 1u) - static_cast<int>((s >> j) & 1u);
          if (e == 0) continue;
          ok = e == expect;
          expect = -expect;
        }
        if (ok && expect == -1) next[t] += count[s];
      }
    }
    count = std::move(next);
  }
  return count[full];
}

Complex ConventionMonomial::apply(const std::vector<Complex>& us, const std::vector<Complex>& vs) const {
  Complex r = constant;
  for (const auto& u : us) r *= pow(u, u_exponent);
  for (const auto& v : vs) r *= pow(v, v_exponent);
  return r;
}

Complex asm_q() { return Complex::expi_pi(ratio(1, 3)); }

Signature asm_staircase(int n) {
  if (n < 1) throw ArgumentError("size must be positive");
  std::vector<long> parts;
  for (long k = n - 1; k >= 0; --k) {
    parts.push_back(k);
    parts.push_back(k);
  }
  return Signature(parts);
}

namespace {

Complex direct_sum(int n, const std::vector<Complex>& us, const std::vector<Complex>& vs, const Complex& q) {
  const Complex qi = Complex(1L) / q;
  Complex total(0L);
  for (const auto& m : asm_enumerate(n)) {
    const VertexStats s = vertex_stats(m);
    Complex w(1L);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Complex u2 = us[static_cast<size_t>(i)] * us[static_cast<size_t>(i)];
        const Complex v2 = vs[static_cast<size_t>(j)] * vs[static_cast<size_t>(j)];
        switch (s.type[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
          case VertexType::A: w *= qi * u2 - q * v2; break;
          case VertexType::B: w *= qi * v2 - q * u2; break;
          case VertexType::C: w *= (qi - q) * us[static_cast<size_t>(i)] * vs[static_cast<size_t>(j)]; break;
        }
      }
    total += w;
  }
  return total;
}

Complex okada_side(int n, const std::vector<Complex>& us, const std::vector<Complex>& vs, const Complex& q) {
  const Complex qi = Complex(1L) / q;
  std::vector<Complex> nodes;
  Complex pre = pow(qi - q, n);
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) pre = -pre;
  for (int i = 0; i < n; ++i) {
    nodes.push_back(us[static_cast<size_t>(i)] * us[static_cast<size_t>(i)]);
    pre /= us[static_cast<size_t>(i)] * vs[static_cast<size_t>(i)];
  }
  for (int i = 0; i < n; ++i) nodes.push_back(vs[static_cast<size_t>(i)] * vs[static_cast<size_t>(i)]);
  return pre * schur_at_nodes(asm_staircase(n), nodes);
}

// Exponents of a ratio r(u, v) known to be c u^a v^b, read off at u, v in {1, 2}.
ConventionMonomial fit_monomial() {
  PrecisionScope scope(std::max(default_precision(), 128));
  const Complex q = asm_q();
  auto ratio_at = [&](long u, long v) {
    std::vector<Complex> us{Complex(u)}, vs{Complex(v)};
    return direct_sum(1, us, vs, q) / okada_side(1, us, vs, q);
  };
  ConventionMonomial m;
  m.constant = ratio_at(1, 1);
  m.u_exponent = std::lround(std::log2((abs(ratio_at(2, 1) / m.constant)).to_double()));
  m.v_exponent = std::lround(std::log2((abs(ratio_at(1, 2) / m.constant)).to_double()));
  // a third point guards against a ratio that is not a monomial at all
  const Complex check = ratio_at(3, 5);
  const Complex want = m.apply({Complex(3L)}, {Complex(5L)});
  if (abs(check - want) > Real(1e-25) * abs(want)) throw IdentityViolation("n = 1 ratio is not a monomial in u, v");
  return m;
}

}  // namespace

const ConventionMonomial& asm_convention() {
  static const ConventionMonomial m = fit_monomial();
  return m;
}

PartitionResult partition_function(int n, const std::vector<Complex>& us, const std::vector<Complex>& vs,
                                   const Complex& q, const Real& tolerance) {
  if (n < 1) throw ArgumentError("size must be positive");
  if (n > 5) throw CapacityError("direct partition sum is capped at n = 5");
  if (static_cast<int>(us.size()) != n || static_cast<int>(vs.size()) != n) throw ArgumentError("need n values of u and of v");
  PartitionResult r;
  r.direct = direct_sum(n, us, vs, q);
  r.okada = okada_side(n, us, vs, q);
  r.convention = asm_convention();
  const Complex fixed = r.okada * r.convention.apply(us, vs);
  if (abs(r.direct - fixed) > tolerance * (abs(r.direct) + Real(1e-300)))
    throw IdentityViolation("partition function disagrees with the Schur form beyond the fitted monomial at n = " + std::to_string(n));
  return r;
}

ObservablePair asm_observable(int n, const std::vector<int>& rows, const std::vector<int>& cols,
                              const std::vector<Complex>& us, const std::vector<Complex>& vs) {
  if (n < 1 || n > 5) throw CapacityError("observable enumeration needs 1 <= n <= 5");
  if (rows.size() != us.size() || cols.size() != vs.size()) throw ArgumentError("one parameter per line");
  if (static_cast<int>(rows.size() + cols.size()) > 2 * n) throw ArgumentError("too many lines");
  for (int r : rows)
    if (r < 1 || r > n) throw ArgumentError("row index out of range");
  for (int c : cols)
    if (c < 1 || c > n) throw ArgumentError("column index out of range");
  const Complex q = asm_q();
  const Complex qi = Complex(1L) / q, d = qi - q, one(1L);
  ObservablePair out{Complex(0L), Complex(0L)};
  const auto all = asm_enumerate(n);
  for (const auto& m : all) {
    const VertexStats s = vertex_stats(m);
    Complex w(1L);
    for (size_t k = 0; k < rows.size(); ++k) {
      const auto i = static_cast<size_t>(rows[k] - 1);
      const Complex u2 = us[k] * us[k];
      w *= pow((qi * u2 - q) / d, s.a[i]) * pow((qi - q * u2) / d, s.b[i]) * pow(us[k], s.c[i]);
    }
    for (size_t l = 0; l < cols.size(); ++l) {
      const auto j = static_cast<size_t>(cols[l] - 1);
      const Complex v2 = vs[l] * vs[l];
      w *= pow((qi - q * v2) / d, s.a_hat[j]) * pow((qi * v2 - q) / d, s.b_hat[j]) * pow(vs[l], s.c_hat[j]);
    }
    for (size_t k = 0; k < rows.size(); ++k)
      for (size_t l = 0; l < cols.size(); ++l) {
        const auto t = s.type[static_cast<size_t>(rows[k] - 1)][static_cast<size_t>(cols[l] - 1)];
        const Complex u2 = us[k] * us[k], v2 = vs[l] * vs[l];
        if (t == VertexType::A) w *= (qi * u2 - q * v2) * d / ((qi * u2 - q) * (qi - q * v2));
        if (t == VertexType::B) w *= (qi * v2 - q * u2) * d / ((qi - q * u2) * (qi * v2 - q));
      }
    out.lhs += w;
  }
  out.lhs /= Complex(static_cast<long>(all.size()));
  std::vector<Complex> xs;
  for (const auto& u : us) xs.push_back(u * u);
  for (const auto& v : vs) xs.push_back(v * v);
  const auto& conv = asm_convention();
  Complex pre(1L);
  for (const auto& u : us) pre *= pow(u, conv.u_exponent - 1);
  for (const auto& v : vs) pre *= pow(v, conv.v_exponent - 1);
  out.rhs = xs.empty() ? one : pre * normalized_character(CharFamily::Schur, asm_staircase(n), xs);
  return out;
}

GaussianReport asm_gaussian_check(const std::vector<long>& n_ladder, const std::vector<double>& s_grid, int bits) {
  PrecisionScope scope(bits);
  const Complex q = asm_q();
  const Complex qi = Complex(1L) / q;
  const long ue = asm_convention().u_exponent;
  GaussianReport rep;
  std::map<double, double> last;
  for (size_t idx = 0; idx < n_ladder.size(); ++idx) {
    const long n = n_ladder[idx];
    if (n < 1 || n > 512) throw ArgumentError("ladder entries must lie in 1..512");
    const LaurentPolynomial s_poly = schur_univariate(asm_staircase(static_cast<int>(n)));
    const Real rn = sqrt(Real(n));
    for (double s : s_grid) {
      GaussianPoint p;
      p.n = n;
      p.s = s;
      if (s == 0) {
        p.observable = Complex(1L);
      } else {
        const Complex w = exp(Complex(Real(0L), Real(s) / rn));
        const Complex x = (w * qi + q) / (qi + q * w);  // u^2
        const Complex u = sqrt(x);
        p.y = log(x);
        const Complex value = s_poly.evaluate(x);
        const Real spread = s_poly.magnitude_sum(x);
        // more than bits - 64 bits lost means the sum cannot be trusted
        if (spread > abs(value) * pow(Real(2L), bits - 64))
          throw PrecisionError("staircase character cancels beyond the working precision");
        const Complex b = (qi - q * x) / (qi - q);
        // E[e^{z a/sqrt n} (u/B)^c] = u^{e-1} S / B^n, then center a at n/2
        p.observable = pow(u, ue - 1) * value / pow(b, n) * exp(Complex(Real(0L), -Real(s) * rn / Real(2L)));
      }
      p.error = std::abs((log(abs(p.observable)) + Real(3.0 * s * s / 16.0)).to_double());
      auto it = last.find(s);
      if (it != last.end() && s != 0 && !(p.error < it->second)) rep.decreasing = false;
      last[s] = p.error;
      rep.points.push_back(p);
    }
  }
  for (const auto& p : rep.points)
    if (!n_ladder.empty() && p.n == n_ladder.back()) rep.final_max = std::max(rep.final_max, p.error);
  return rep;
}

}  // namespace charasym
