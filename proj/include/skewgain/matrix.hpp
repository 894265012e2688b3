#ifndef SKEWGAIN_MATRIX_HPP
#define SKEWGAIN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "skewgain/error.hpp"

namespace skewgain {

// Dense row-major matrix over a field backend's carrier type.
template <class F>
class Matrix {
 public:
  using Field = F;
  using Value = typename F::value_type;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Value& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Value& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("BadParameters", "matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Value& a = (*this)(i, k);
        if (F::is_zero(a)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          out(i, j) += a * rhs(k, j);
        }
      }
    }
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw Error("BadParameters", "matrix difference shape mismatch");
    }
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  Value trace() const {
    if (rows_ != cols_) throw Error("NotSquare", "trace of a non-square matrix");
    Value t = F::zero();
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Value> data_;
};

// Entrywise comparison under the backend's equality (exact or tolerance).
template <class F>
bool matrices_equal(const Matrix<F>& a, const Matrix<F>& b,
                    double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!F::eq(a(i, j), b(i, j), tol)) return false;
    }
  }
  return true;
}

}  // namespace skewgain

#endif  // SKEWGAIN_MATRIX_HPP
