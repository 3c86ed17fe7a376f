#include "tlz/matrix.hpp"

namespace tlz {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw ShapeError("matrix dimensions must be positive");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar(0));
}

Matrix Matrix::identity(int n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(int n, const Scalar& c) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

Scalar& Matrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeError("matrix index out of range");
  return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c)];
}

const Scalar& Matrix::at(int r, int c) const {
  return const_cast<Matrix*>(this)->at(r, c);
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

Vec<Scalar> Matrix::col(int c) const {
  Vec<Scalar> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& av = a.at(r, k);
      if (av.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) {
        const Scalar& bv = b.at(k, c);
        if (!bv.is_zero()) out.at(r, c) += av * bv;
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, Matrix m) {
  for (auto& v : m.data_) v = c * v;
  return m;
}

namespace {

template <class K>
Vec<K> mat_apply_impl(const Matrix& m, const Vec<K>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw ShapeError("matrix-vector shape mismatch");
  Vec<K> out = zero_vec<K>(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Scalar& e = m.at(r, c);
      if (!e.is_zero()) out[static_cast<std::size_t>(r)] += e * v[static_cast<std::size_t>(c)];
    }
  }
  return out;
}

}  // namespace

Vec<Scalar> mat_apply(const Matrix& m, const Vec<Scalar>& v) { return mat_apply_impl(m, v); }
Vec<PolyScalar> mat_apply(const Matrix& m, const Vec<PolyScalar>& v) {
  return mat_apply_impl(m, v);
}

RrefResult rref(Matrix a) {
  RrefResult res;
  int rows = a.rows();
  int cols = a.cols();
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (!a.at(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) {
      for (int c = 0; c < cols; ++c) std::swap(a.at(found, c), a.at(pivot_row, c));
    }
    Scalar inv = inverse(a.at(pivot_row, col));
    for (int c = col; c < cols; ++c) a.at(pivot_row, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      Scalar factor = a.at(r, col);
      if (factor.is_zero()) continue;
      for (int c = col; c < cols; ++c) a.at(r, c) -= factor * a.at(pivot_row, c);
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  res.mat = std::move(a);
  return res;
}

namespace {

Vec<Scalar> normalise_leading(Vec<Scalar> v) {
  for (const auto& c : v) {
    if (!c.is_zero()) {
      Scalar inv = inverse(c);
      for (auto& x : v) x *= inv;
      break;
    }
  }
  return v;
}

std::vector<Vec<Scalar>> nullspace_of_rref(const RrefResult& r, int cols) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec<Scalar>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    Vec<Scalar> v = zero_vec<Scalar>(cols);
    v[static_cast<std::size_t>(free_col)] = Scalar(1);
    for (int p = 0; p < static_cast<int>(r.pivot_cols.size()); ++p) {
      v[static_cast<std::size_t>(r.pivot_cols[p])] = -r.mat.at(p, free_col);
    }
    basis.push_back(normalise_leading(std::move(v)));
  }
  return basis;
}

}  // namespace

std::vector<Vec<Scalar>> nullspace(const Matrix& a) {
  return nullspace_of_rref(rref(a), a.cols());
}

LinearSolution solve_affine(const Matrix& a, const Vec<Scalar>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw ShapeError("solve: rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[static_cast<std::size_t>(r)];
  }
  RrefResult red = rref(std::move(aug));
  LinearSolution sol;
  for (int c : red.pivot_cols) {
    if (c == a.cols()) return sol;  // pivot in the rhs column: inconsistent
  }
  sol.feasible = true;
  sol.particular = zero_vec<Scalar>(a.cols());
  for (int p = 0; p < static_cast<int>(red.pivot_cols.size()); ++p) {
    sol.particular[static_cast<std::size_t>(red.pivot_cols[p])] = red.mat.at(p, a.cols());
  }
  // The homogeneous part comes from the coefficient block alone.
  RrefResult coeff;
  coeff.pivot_cols = red.pivot_cols;
  coeff.rank = red.rank;
  coeff.mat = red.mat;
  sol.homogeneous = nullspace_of_rref(coeff, a.cols());
  return sol;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("inverse of non-square matrix");
  int n = a.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = Scalar(1);
  }
  RrefResult red = rref(std::move(aug));
  if (red.rank < n || red.pivot_cols[static_cast<std::size_t>(n) - 1] != n - 1) {
    return std::nullopt;
  }
  Matrix out(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out.at(r, c) = red.mat.at(r, n + c);
  }
  return out;
}

}  // namespace tlz
