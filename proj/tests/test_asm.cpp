#include "doctest.h"

#include <set>

#include "charasym/asm.hpp"
#include "charasym/errors.hpp"

using namespace charasym;

namespace {
Real tiny(int exp10) { return pow(Real(10L), -exp10); }
}  // namespace

TEST_CASE("enumeration counts and invariants") {
  const long expected[] = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    auto all = asm_enumerate(n);
    CHECK(static_cast<long>(all.size()) == expected[n - 1]);
    CHECK(asm_count_transfer(n) == expected[n - 1]);
    std::set<ASMatrix> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (const auto& m : all) m.validate();
  }
  CHECK(asm_count_transfer(7) == 218348);
  auto one = asm_enumerate(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].entries == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(asm_enumerate(8), CapacityError);
  CHECK_THROWS_AS(asm_enumerate(0), ArgumentError);
}

TEST_CASE("invalid matrices are rejected") {
  ASMatrix m;
  m.entries = {{1, 0}, {1, 0}};
  CHECK_THROWS_AS(m.validate(), InvariantViolation);
  m.entries = {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}};
  m.validate();
  m.entries = {{0, 1, 0}, {1, 0, 0}, {-1, 1, 1}};
  CHECK_THROWS_AS(m.validate(), InvariantViolation);
}

TEST_CASE("six-vertex round trip and line counts") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& m : asm_enumerate(n)) {
      SixVertex c = to_six_vertex(m);
      c.validate();
      CHECK(from_six_vertex(c) == m);
      VertexStats s = vertex_stats(m);
      CHECK(s.consistent());
      for (int i = 0; i < n; ++i) {
        int nonzero = 0;
        for (int j = 0; j < n; ++j) nonzero += m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0;
        CHECK(s.c[static_cast<size_t>(i)] == nonzero);
        // the first line can hold only the single 1
        if (i == 0) CHECK(s.c[0] == 1);
      }
    }
  SixVertex bad = to_six_vertex(asm_enumerate(3)[2]);
  bad.horizontal[1][1] ^= 1;
  CHECK_THROWS_AS(bad.validate(), InvariantViolation);
}

TEST_CASE("partition function") {
  PrecisionScope scope(128);
  const Complex q = asm_q();
  const Complex qi = Complex(1L) / q;
  CHECK(abs(qi + q - Complex(1L)) < tiny(35));
  const auto& conv = asm_convention();
  CHECK(conv.u_exponent == 2);
  CHECK(conv.v_exponent == 2);
  CHECK(abs(conv.constant - Complex(1L)) < tiny(30));
  // n = 1: a single c vertex
  auto r1 = partition_function(1, {Complex(1.7)}, {Complex(0.6)}, q);
  CHECK(abs(r1.direct - (qi - q) * Complex(1.7) * Complex(0.6)) < tiny(30));
  for (int n = 2; n <= 4; ++n) {
    std::vector<Complex> us, vs;
    for (int i = 0; i < n; ++i) {
      us.push_back(Complex(1.1 + 0.21 * i, -0.04 * i));
      vs.push_back(Complex(0.85 - 0.09 * i, 0.03 * i));
    }
    auto r = partition_function(n, us, vs, q);
    CHECK(abs(r.direct - r.okada * conv.apply(us, vs)) < tiny(20) * abs(r.direct));
  }
  // homogeneous point: every vertex weighs q^-1 - q, the ratio is the constant
  for (int n = 1; n <= 4; ++n) {
    std::vector<Complex> ones(static_cast<size_t>(n), Complex(1L));
    auto r = partition_function(n, ones, ones, q);
    CHECK(abs(r.direct / r.okada - conv.constant) < tiny(25));
    CHECK(abs(r.direct - Complex(static_cast<long>(asm_enumerate(n).size())) * pow(qi - q, n * n)) < tiny(25));
  }
  CHECK_THROWS_AS(partition_function(6, {}, {}, q), CapacityError);
  // a generic q breaks the identity
  CHECK_THROWS_AS(partition_function(2, {Complex(1.3), Complex(0.7)}, {Complex(1.1), Complex(0.9)}, Complex::expi_pi(ratio(1, 4))),
                  IdentityViolation);
}

TEST_CASE("staircase signature") {
  CHECK(asm_staircase(3) == Signature({2, 2, 1, 1, 0, 0}));
  CHECK(asm_staircase(1) == Signature({0, 0}));
}

TEST_CASE("observables by enumeration") {
  PrecisionScope scope(128);
  auto trivial = asm_observable(2, {1}, {}, {Complex(1L)}, {});
  CHECK(abs(trivial.lhs - Complex(1L)) < tiny(30));
  CHECK(abs(trivial.rhs - Complex(1L)) < tiny(30));
  auto o = asm_observable(3, {1}, {}, {Complex(1.5)}, {});
  CHECK(abs(o.lhs - o.rhs) < tiny(20) * abs(o.rhs));
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i) {
      auto row = asm_observable(n, {i}, {}, {Complex(0.9, 0.2)}, {});
      CHECK(abs(row.lhs - row.rhs) < tiny(20) * abs(row.rhs));
      auto col = asm_observable(n, {}, {i}, {}, {Complex(1.25, -0.1)});
      CHECK(abs(col.lhs - col.rhs) < tiny(20) * abs(col.rhs));
    }
  // two rows and a column; the crossing factors enter through the double product
  auto mixed = asm_observable(4, {1, 3}, {2}, {Complex(1.2, 0.1), Complex(0.9)}, {Complex(0.8, 0.05)});
  CHECK(abs(mixed.lhs - mixed.rhs) < tiny(20) * abs(mixed.rhs));
  auto cross = asm_observable(3, {2}, {2}, {Complex(1.3)}, {Complex(0.7)});
  CHECK(abs(cross.lhs - cross.rhs) < tiny(20) * abs(cross.rhs));
  CHECK_THROWS_AS(asm_observable(3, {4}, {}, {Complex(1L)}, {}), ArgumentError);
  CHECK_THROWS_AS(asm_observable(6, {1}, {}, {Complex(1L)}, {}), CapacityError);
}

TEST_CASE("Gaussian fluctuations of a-vertex counts") {
  auto rep = asm_gaussian_check({64, 128, 256, 512}, {0.0, 0.25, 0.5, 1.0});
  CHECK(rep.points.size() == 16);
  CHECK(rep.decreasing);
  CHECK(rep.final_max <= 0.02);
  for (const auto& p : rep.points)
    if (p.s == 0) CHECK(p.error == 0.0);
  CHECK_THROWS_AS(asm_gaussian_check({1024}, {0.5}), ArgumentError);
}
