#pragma once

// Dense exact linear algebra over Scalar.

#include <optional>
#include <vector>

#include "pdq/scalar.hpp"

namespace pdq {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& v);
Matrix transpose(const Matrix& a);
bool is_zero(const Vector& v);

struct Echelon {
  Matrix rows;              // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column per row
};

// Gauss-Jordan elimination; pivots are chosen by smallest Scalar complexity.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column (that entry set to 1).
std::vector<Vector> kernel(const Matrix& m, std::size_t cols);
// Some solution of m x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Scalar determinant(Matrix m);

}  // namespace pdq
