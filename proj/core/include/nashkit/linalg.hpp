#pragma once

#include <nashkit/rational.hpp>

#include <cstddef>
#include <vector>

namespace nashkit {

// Small dense row-major matrix.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), S(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const S& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

using QMatrix = Matrix<Rational>;

int rank(QMatrix m);
Rational determinant(QMatrix m);
// Basis of the right kernel, one vector per free column.
std::vector<std::vector<Rational>> nullspace(QMatrix m);

}  // namespace nashkit
