#pragma once

#include <vector>

#include "charasym/numeric.hpp"

namespace charasym {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Exact determinant: rows are scaled to integers, then fraction-free
// (Bareiss) elimination runs over GMP integers.
Rational determinant(Matrix<Rational> m);
Integer determinant(Matrix<Integer> m);

// Gaussian elimination with partial pivoting on |re|+|im|.
Complex determinant(Matrix<Complex> m);

// Jets: elimination on the value part; when a pivot value vanishes the
// derivative is recovered from Jacobi's formula by column replacement.
Jet<Rational> determinant(Matrix<Jet<Rational>> m);
Jet<Complex> determinant(Matrix<Jet<Complex>> m);

// Solve m x = rhs for Complex systems (partial pivoting).
std::vector<Complex> solve(Matrix<Complex> m, std::vector<Complex> rhs);

}  // namespace charasym
