#ifndef TORSIONLAB_MATRIX_HPP
#define TORSIONLAB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "torsionlab/errors.hpp"
#include "torsionlab/scalar.hpp"

namespace torsionlab {

// Dense row-major matrix over a field K.  Dimensions are fixed at
// construction; zero-by-anything shapes are valid and show up routinely as
// empty boundary maps and empty homology bases.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, FieldTraits<K>::from_int(0)) {}
  Matrix(std::initializer_list<std::initializer_list<K>> grid) {
    rows_ = grid.size();
    cols_ = rows_ == 0 ? 0 : grid.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : grid) {
      if (row.size() != cols_) throw DimensionError("ragged initializer grid");
      for (const K& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldTraits<K>::from_int(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (K& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("product shape mismatch: " + a.shape_string() + " * " + b.shape_string());
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          K t = aik;
          t *= b(k, j);
          m(i, j) += t;
        }
      }
    return m;
  }
  friend Matrix operator*(const K& s, const Matrix& a) {
    Matrix m = a;
    for (K& x : m.data_) x *= s;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const K& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  Matrix col(std::size_t j) const {
    Matrix m(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, j);
    return m;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  // Columns of `a` followed by columns of `b`.
  static Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ && !a.empty() && !b.empty())
      throw DimensionError("hcat row mismatch");
    std::size_t rows = a.cols_ == 0 ? (b.cols_ == 0 ? std::max(a.rows_, b.rows_) : b.rows_) : a.rows_;
    if ((a.cols_ > 0 && a.rows_ != rows) || (b.cols_ > 0 && b.rows_ != rows))
      throw DimensionError("hcat row mismatch");
    Matrix m(rows, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }
  static Matrix vcat(const Matrix& a, const Matrix& b) {
    return hcat(a.transpose(), b.transpose()).transpose();
  }
  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
  }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("shape mismatch: " + shape_string() + " vs " + o.shape_string());
  }

  std::size_t rows_, cols_;
  std::vector<K> data_;
};

}  // namespace torsionlab

#endif  // TORSIONLAB_MATRIX_HPP
