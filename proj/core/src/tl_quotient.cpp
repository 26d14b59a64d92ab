#include <cmath>

#include "plancalc/tl.hpp"

namespace plancalc {

namespace {

// Closed curves formed by two matchings glued along their boundary points.
int meander_loops(const Matching& x, const Matching& y) {
  const int n = static_cast<int>(x.size());
  std::vector<char> seen(n, 0);
  int loops = 0;
  for (int p = 0; p < n; ++p) {
    if (seen[p]) continue;
    ++loops;
    int q = p;
    do {
      seen[q] = 1;
      seen[x[q]] = 1;
      q = y[x[q]];
    } while (q != p);
  }
  return loops;
}

// Link states on k points: partner index, or -1 for a through strand.
void link_states(int k, int defects, std::vector<int>& cur, std::vector<int>& open, int free_defects,
                 std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == k) {
    if (open.empty() && free_defects == 0) out.push_back(cur);
    return;
  }
  const int left = k - i;
  if (static_cast<int>(open.size()) + free_defects > left) return;
  if (open.empty() && free_defects > 0) {
    cur.push_back(-1);
    link_states(k, defects, cur, open, free_defects - 1, out);
    cur.pop_back();
  }
  if (!open.empty()) {
    int a = open.back();
    open.pop_back();
    cur[a] = i;
    cur.push_back(a);
    link_states(k, defects, cur, open, free_defects, out);
    cur.pop_back();
    cur[a] = -2;
    open.push_back(a);
  }
  cur.push_back(-2);
  open.push_back(i);
  link_states(k, defects, cur, open, free_defects, out);
  open.pop_back();
  cur.pop_back();
}

// Cell form: -1 if a through strand of a meets another of a; else closed loops.
int cell_pairing(const std::vector<int>& a, const std::vector<int>& b) {
  const int k = static_cast<int>(a.size());
  std::vector<char> seen(k, 0);
  for (int p = 0; p < k; ++p) {
    if (a[p] != -1) continue;
    int q = p;
    for (;;) {
      seen[q] = 1;
      if (b[q] == -1) break;
      q = b[q];
      seen[q] = 1;
      if (a[q] == -1) return -1;
      q = a[q];
    }
  }
  int loops = 0;
  for (int p = 0; p < k; ++p) {
    if (seen[p]) continue;
    ++loops;
    int q = p;
    do {
      seen[q] = 1;
      seen[a[q]] = 1;
      q = b[a[q]];
    } while (q != p);
  }
  return loops;
}

}  // namespace

std::vector<int> cell_ranks(const TLAlgebra& tl, int k) {
  if (!tl.balanced()) throw std::invalid_argument("cell forms need delta_plus == delta_minus");
  std::vector<int> ranks;
  for (int j = k; j >= 0; j -= 2) {
    std::vector<std::vector<int>> states;
    std::vector<int> cur, open;
    link_states(k, j, cur, open, j, states);
    const int n = static_cast<int>(states.size());
    std::vector<Vec> rows(n, Vec(n, Scalar::zero(tl.ring())));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int l = cell_pairing(states[x], states[y]);
        if (l >= 0) rows[x][y] = tl.loop_factor(l, 0);
      }
    ranks.push_back(rank(rows, n, tl.ring()));
  }
  return ranks;
}

long long quotient_dimension(const TLAlgebra& tl, int k) {
  // Jones-Wenzl traces: D_0 = 1, D_1 = d, D_{j+1} = d D_j - D_{j-1}.
  const Scalar d = tl.delta_plus();
  std::vector<Scalar> D{Scalar::one(tl.ring()), d};
  while (static_cast<int>(D.size()) <= k) D.push_back(d * D.back() - D[D.size() - 2]);
  int jmax = k;
  for (int j = 0; j <= k; ++j)
    if (D[j].is_zero()) {
      jmax = j - 1;
      break;
    }
  auto r = cell_ranks(tl, k);
  long long dim = 0;
  for (std::size_t t = 0; t < r.size(); ++t) {
    const int j = k - 2 * static_cast<int>(t);
    if (j <= jmax) dim += static_cast<long long>(r[t]) * r[t];
  }
  return dim;
}

TLQuotient::TLQuotient(std::shared_ptr<const TLAlgebra> tl) : tl_(std::move(tl)) {
  if (!tl_->balanced()) throw std::invalid_argument("negligible quotient needs delta_plus == delta_minus");
  if (!tl_->ring()) throw std::invalid_argument("negligible quotient needs a specialized modulus");
}

std::shared_ptr<TLQuotient::Level> TLQuotient::level(int k) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = levels_.find(k);
    if (it != levels_.end()) return it->second;
  }
  const auto& dg = tl_->diagrams(k);
  const int n = static_cast<int>(dg.size());
  const long long r = quotient_dimension(*tl_, k);
  const double dv = tl_->delta_plus().to_double();
  // Greedy selection with an incremental Cholesky factor; the form is positive
  // semidefinite, so a vanishing Schur complement means dependence.
  std::vector<int> basis;
  std::vector<std::vector<double>> L;
  for (int d = 0; d < n && static_cast<long long>(basis.size()) < r; ++d) {
    const int m = static_cast<int>(basis.size());
    std::vector<double> y(m);
    for (int i = 0; i < m; ++i) {
      double g = std::pow(dv, meander_loops(dg[basis[i]], dg[d]));
      for (int t = 0; t < i; ++t) g -= L[i][t] * y[t];
      y[i] = g / L[i][i];
    }
    double s = std::pow(dv, k);
    for (double v : y) s -= v * v;
    if (s > 1e-9 * std::pow(std::max(dv, 1.0), k)) {
      y.push_back(std::sqrt(s));
      L.push_back(y);
      basis.push_back(d);
    }
  }
  auto lv = std::make_shared<Level>();
  lv->basis = basis;
  const int m = static_cast<int>(basis.size());
  lv->gram = Matrix(m, m, Scalar::zero(ring()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) lv->gram(i, j) = tl_->loop_factor(meander_loops(dg[basis[i]], dg[basis[j]]), 0);
  if (m != r) throw std::logic_error("quotient basis selection failed");
  std::lock_guard<std::mutex> lock(mu_);
  return levels_.emplace(k, lv).first->second;
}

std::shared_ptr<const Matrix> TLQuotient::inverse_of(int k) const {
  auto lv = level(k);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (lv->inverse) return lv->inverse;
  }
  // Throws when the selected block is singular, which would make the basis invalid.
  auto inv = std::make_shared<const Matrix>(inverse(lv->gram));
  std::lock_guard<std::mutex> lock(mu_);
  if (!lv->inverse) lv->inverse = inv;
  return lv->inverse;
}

int TLQuotient::dim(Color c) const { return static_cast<int>(level(c.k)->basis.size()); }
const std::vector<int>& TLQuotient::basis_diagrams(int k) const { return level(k)->basis; }
const Matrix& TLQuotient::basis_gram(int k) const { return level(k)->gram; }

std::string TLQuotient::basis_label(Color c, int i) const {
  return matching_str(tl_->diagrams(c.k)[basis_diagrams(c.k)[i]]);
}

Vec TLQuotient::pairing(const Matching& d) const {
  const int k = static_cast<int>(d.size()) / 2;
  const auto& dg = tl_->diagrams(k);
  const auto& b = basis_diagrams(k);
  Vec v;
  v.reserve(b.size());
  for (int i : b) v.push_back(tl_->loop_factor(meander_loops(dg[i], d), 0));
  return v;
}

Element TLQuotient::project(const Element& x) const {
  const int k = x.color.k;
  const auto& dg = tl_->diagrams(k);
  const int m = dim(x.color);
  Vec w(m, Scalar::zero(ring()));
  for (int d = 0; d < static_cast<int>(x.coeffs.size()); ++d) {
    if (x.coeffs[d].is_zero()) continue;
    Vec p = pairing(dg[d]);
    for (int i = 0; i < m; ++i) w[i] += x.coeffs[d] * p[i];
  }
  auto inv = inverse_of(k);
  Element out = zero(x.color);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!w[j].is_zero()) out.coeffs[i] += (*inv)(i, j) * w[j];
  return out;
}

Element TLQuotient::lift(const Element& x) const {
  Element out = tl_->zero(x.color);
  const auto& b = basis_diagrams(x.color.k);
  for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[b[i]] = x.coeffs[i];
  return out;
}

Element TLQuotient::act(const PlanarTangle& T, const std::vector<Element>& inputs) const {
  std::vector<Element> lifted;
  lifted.reserve(inputs.size());
  for (std::size_t d = 0; d < inputs.size(); ++d) {
    if (!(inputs[d].color == T.color(static_cast<int>(d) + 1)))
      throw std::invalid_argument("input " + std::to_string(d + 1) + " has the wrong colour");
    lifted.push_back(lift(inputs[d]));
  }
  return project(tl_->act(T, lifted));
}

Element TLQuotient::star(const Element& x) const { return project(tl_->star(lift(x))); }

Matrix TLQuotient::projection(int k) const {
  const auto& dg = tl_->diagrams(k);
  const int n = static_cast<int>(dg.size()), m = dim({k, 1});
  auto inv = inverse_of(k);
  Matrix P(m, n, Scalar::zero(ring()));
  for (int d = 0; d < n; ++d) {
    Vec p = pairing(dg[d]);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) P(i, d) += (*inv)(i, j) * p[j];
  }
  return P;
}

QuotientInfo negligible_quotient(const TLQuotient& Q, Color c) {
  return {c, Q.dim(c), Q.basis_diagrams(c.k), Q.projection(c.k)};
}

}  // namespace plancalc
