#pragma once

#include <string>
#include <vector>

#include "charasym/numeric.hpp"
#include "charasym/signature.hpp"

namespace charasym {

struct ASMatrix {
  std::vector<std::vector<int>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  void validate() const;  // throws InvariantViolation
  std::string to_string() const;
  friend bool operator==(const ASMatrix& a, const ASMatrix& b) { return a.entries == b.entries; }
  friend bool operator<(const ASMatrix& a, const ASMatrix& b) { return a.entries < b.entries; }
};

// Six-vertex configuration with domain-wall boundary. Arrows are stored as
// bits: horizontal[i][j] is the edge left of vertex (i, j) (j = n is the right
// boundary), 0 pointing right and 1 pointing left; vertical[i][j] is the edge
// above vertex (i, j) (i = n is the bottom boundary), 0 up and 1 down.
// Boundary: left edges 0, right edges 1, top edges 0, bottom edges 1.
struct SixVertex {
  int n = 0;
  std::vector<std::vector<int>> horizontal, vertical;
  void validate() const;  // ice rule and boundary; throws InvariantViolation
  friend bool operator==(const SixVertex& a, const SixVertex& b) {
    return a.n == b.n && a.horizontal == b.horizontal && a.vertical == b.vertical;
  }
};

SixVertex to_six_vertex(const ASMatrix& m);
ASMatrix from_six_vertex(const SixVertex& c);

// a: the two arrows entering from the left and from above agree (both bits 0
// or both 1); b: they differ; c: the vertex carries a nonzero matrix entry.
enum class VertexType { A, B, C };
VertexType vertex_type(const SixVertex& c, int i, int j);

struct VertexStats {
  std::vector<int> a, b, c;            // per horizontal line i
  std::vector<int> a_hat, b_hat, c_hat;  // per vertical line j
  std::vector<std::vector<VertexType>> type;
  bool consistent() const;  // a + b + c = n on every line
};
VertexStats vertex_stats(const ASMatrix& m);

constexpr int kAsmEnumerationCap = 7;

// All ASMs of size n in lexicographic order; CapacityError past the cap.
std::vector<ASMatrix> asm_enumerate(int n);

// Row-by-row transfer count over column partial-sum states; an oracle for the
// enumeration that shares no code with it.
Integer asm_count_transfer(int n);

// direct == okada * constant * prod u_i^u_exponent v_j^v_exponent
struct ConventionMonomial {
  long u_exponent = 0, v_exponent = 0;
  Complex constant;
  Complex apply(const std::vector<Complex>& us, const std::vector<Complex>& vs) const;
};

// Fitted once from the single-configuration case n = 1 and then frozen.
const ConventionMonomial& asm_convention();

Complex asm_q();  // e^{i pi/3} at the current precision

struct PartitionResult {
  Complex direct;  // sum over ASMs of the product of vertex weights
  Complex okada;   // (-1)^{C(n,2)} (q^-1 - q)^n prod (u_i v_i)^-1 s_{lambda(n)}(u^2, v^2)
  ConventionMonomial convention;
};

// Weights a: q^-1 u_i^2 - q v_j^2, b: q^-1 v_j^2 - q u_i^2, c: (q^-1 - q) u_i v_j.
// Throws IdentityViolation when direct and okada * convention differ by more
// than tolerance relative to |direct|.
PartitionResult partition_function(int n, const std::vector<Complex>& us, const std::vector<Complex>& vs,
                                   const Complex& q, const Real& tolerance = Real(1e-20));

// lambda(n) = (n-1, n-1, n-2, n-2, ..., 0, 0) in GT_{2n}.
Signature asm_staircase(int n);

struct ObservablePair {
  Complex lhs, rhs;
};

// Expectation under the uniform ASM measure of the row, column and crossing
// factors attached to horizontal lines rows[k] (parameter us[k]) and vertical
// lines cols[l] (parameter vs[l]), against
// prod u_k^{e-1} prod v_l^{e-1} S_{lambda(n)}(u^2, v^2; 2n, 1), e the fitted exponent.
ObservablePair asm_observable(int n, const std::vector<int>& rows, const std::vector<int>& cols,
                              const std::vector<Complex>& us, const std::vector<Complex>& vs);

struct GaussianPoint {
  long n = 0;
  double s = 0;
  Complex y;            // 2y/sqrt(n) = log of the argument of S
  Complex observable;   // E exp(i s (a_i - n/2)/sqrt(n)) up to the vanishing c-line factor
  double error = 0;     // | ln|observable| + 3 s^2/16 |
};

struct GaussianReport {
  std::vector<GaussianPoint> points;
  bool decreasing = true;   // along the ladder for every s
  double final_max = 0;     // largest error at the last n
};

// Characteristic function of a_i through the staircase character at
// u^2 = e^{2y/sqrt n}, e^{z/sqrt n} = (q^-1 u^2 - q)/(q^-1 - q u^2), z = i s.
GaussianReport asm_gaussian_check(const std::vector<long>& n_ladder, const std::vector<double>& s_grid, int bits = 256);

}  // namespace charasym
