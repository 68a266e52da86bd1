#ifndef HYPERZETA_MATRIX_HPP
#define HYPERZETA_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperzeta {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("IntMatrix: dimensions must be positive");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
  }
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

  Int trace() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMatrix m);

}  // namespace hyperzeta

#endif
