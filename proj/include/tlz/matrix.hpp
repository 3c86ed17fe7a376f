#pragma once

#include <optional>
#include <vector>

#include "tlz/tensor.hpp"

namespace tlz {

/// Dense rational matrix. Columns act on column vectors: (M v)_r = sum_c M[r][c] v_c,
/// so an operator matrix sends the j-th basis vector to its j-th column.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix scalar(int n, const Scalar& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c);
  const Scalar& at(int r, int c) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Matrix transpose() const;

  Vec<Scalar> col(int c) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

Vec<Scalar> mat_apply(const Matrix& m, const Vec<Scalar>& v);
Vec<PolyScalar> mat_apply(const Matrix& m, const Vec<PolyScalar>& v);

struct RrefResult {
  Matrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination over the rationals.
/// Deterministic pivoting: columns are scanned left to right and the first
/// row with a nonzero entry in the pivot column is used.
RrefResult rref(Matrix a);

/// Basis of the solution space of A x = 0. One vector per free column of the
/// RREF, produced in increasing free-column order, each normalised so its
/// first nonzero coordinate is 1.
std::vector<Vec<Scalar>> nullspace(const Matrix& a);

struct LinearSolution {
  bool feasible = false;
  Vec<Scalar> particular;                // free variables set to zero
  std::vector<Vec<Scalar>> homogeneous;  // nullspace basis as above
};

/// Solve A x = b exactly, reporting infeasibility instead of throwing.
LinearSolution solve_affine(const Matrix& a, const Vec<Scalar>& b);

/// Exact inverse via Gauss-Jordan; std::nullopt marks a singular input.
/// Non-square input is a ShapeError.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace tlz
