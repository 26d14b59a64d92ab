#include "plancalc/linalg.hpp"

#include <stdexcept>

namespace plancalc {

Matrix identity_matrix(int n, const Field& ring) {
  Matrix m(n, n, Scalar::zero(ring));
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
  return m;
}

Matrix transpose(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.cols(), m.rows(), Scalar());
  Matrix t(m.cols(), m.rows(), Scalar::zero(m(0, 0).ring()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

void Echelon::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = piv_[r];
    if (v[p].is_zero()) continue;
    const Scalar f = v[p];
    const Vec& row = rows_[r];
    for (int j = p; j < dim_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
}

bool Echelon::add(Vec v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  int p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = v[p].inverse();
  for (int j = p; j < dim_; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  // Keep rows fully reduced so reduce() can run in insertion order.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar f = row[p];
    for (int j = p; j < dim_; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  piv_.push_back(p);
  return true;
}

bool Echelon::in_span(Vec v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {
// Fraction-free elimination; returns rank and leaves the last pivot in det.
int bareiss(std::vector<Vec>& a, int cols, Scalar* det) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 0;
  const Field ring = cols ? a[0][0].ring() : Field();
  Scalar prev = Scalar::one(ring);
  int r = 0;
  int sign = 1;
  for (int c = 0; c < cols && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      if (det) *det = Scalar::zero(ring);
      continue;
    }
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Scalar t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = t.exact_div(prev);
      }
      a[i][c] = Scalar::zero(ring);
    }
    prev = a[r][c];
    ++r;
  }
  if (det && r == n && n == cols) *det = sign < 0 ? -prev : prev;
  return r;
}
}  // namespace

int rank(const std::vector<Vec>& rows, int cols, const Field& ring) {
  if (ring) {
    Echelon e(cols, ring);
    for (const auto& v : rows) {
      e.add(v);
      if (e.rank() == cols) break;
    }
    return e.rank();
  }
  std::vector<Vec> a(rows);
  return bareiss(a, cols, nullptr);
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return Scalar(1);
  std::vector<Vec> a(n);
  for (int i = 0; i < n; ++i) a[i].assign(m.data().begin() + i * n, m.data().begin() + (i + 1) * n);
  Scalar det = Scalar::zero(m(0, 0).ring());
  if (bareiss(a, n, &det) < n) return Scalar::zero(m(0, 0).ring());
  return det;
}

Matrix inverse(const Matrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  if (n == 0) return m;
  const Field ring = m(0, 0).ring();
  std::vector<Vec> a(n, Vec(2 * n, Scalar::zero(ring)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = Scalar::one(ring);
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[c]);
    const Scalar inv = a[c][c].inverse();
    for (auto& x : a[c]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (int j = c; j < 2 * n; ++j)
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
    }
  }
  Matrix out(n, n, Scalar::zero(ring));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a[i][n + j];
  return out;
}

std::vector<Scalar> leading_minors(const Matrix& m) {
  std::vector<Scalar> out;
  for (int k = 1; k <= m.rows(); ++k) {
    Matrix sub(k, k, m(0, 0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = m(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

}  // namespace plancalc
