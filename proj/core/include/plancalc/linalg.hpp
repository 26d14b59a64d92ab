#pragma once

#include <vector>

#include "plancalc/scalar.hpp"

namespace plancalc {

using Vec = std::vector<Scalar>;

// Row-major dense matrix. Scalar instances carry their ring in every entry.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, const T& fill) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}
  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const std::vector<T>& data() const { return a_; }
  std::vector<T>& data() { return a_; }
  bool operator==(const DenseMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using Matrix = DenseMatrix<Scalar>;

template <class T>
DenseMatrix<T> matmul(const DenseMatrix<T>& a, const DenseMatrix<T>& b, const T& zero) {
  DenseMatrix<T> out(a.rows(), b.cols(), zero);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (x == zero) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix identity_matrix(int n, const Field& ring);
Matrix transpose(const Matrix& m);

// Incremental row echelon form over a field ring (number field or Q).
// Generic rings are handled as Q after refusing non-constant entries.
class Echelon {
 public:
  explicit Echelon(int dim, Field ring) : dim_(dim), ring_(std::move(ring)) {}
  // Reduces v against the stored rows; returns true and stores it if independent.
  bool add(Vec v);
  bool in_span(Vec v) const;
  // v minus its component along the stored rows; zero at every pivot.
  Vec residue(Vec v) const {
    reduce(v);
    return v;
  }
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& pivots() const { return piv_; }
  // Reduced rows, pivot entries 1 and zero in every other pivot column.
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  int dim_;
  Field ring_;
  std::vector<Vec> rows_;  // pivot entry normalized to 1
  std::vector<int> piv_;
  void reduce(Vec& v) const;
};

// Rank over the fraction field of the ring (fraction-free for generic scalars).
int rank(const std::vector<Vec>& rows, int cols, const Field& ring);
Scalar determinant(Matrix m);
// Inverse over a field ring; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
// Leading principal minors.
std::vector<Scalar> leading_minors(const Matrix& m);

}  // namespace plancalc
