#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "affine_internal.hpp"
#include "json.hpp"
#include "plancalc/affine.hpp"
#include "plancalc/depth.hpp"

namespace plancalc {

namespace {

// Coordinates of classes at one level against a fixed list of representatives.
class LevelSolver {
 public:
  LevelSolver(std::shared_ptr<const Echelon> rel, const std::vector<Vec>& reps) : rel_(std::move(rel)) {
    const int D = rel_->dim();
    std::vector<char> piv(D, 0);
    for (int p : rel_->pivots()) piv[p] = 1;
    for (int j = 0; j < D; ++j)
      if (!piv[j]) free_.push_back(j);
    const int d = static_cast<int>(reps.size());
    if (static_cast<int>(free_.size()) != d) throw AffineError("representatives do not match the quotient dimension");
    if (d == 0) return;
    const Field ring = rel_->rows().empty() ? reps[0][0].ring() : rel_->rows()[0][0].ring();
    Matrix M(d, d, Scalar::zero(ring));
    for (int i = 0; i < d; ++i) {
      const Vec r = rel_->residue(reps[i]);
      for (int j = 0; j < d; ++j) M(i, j) = r[free_[j]];
    }
    try {
      inv_ = inverse(M);
    } catch (const std::domain_error&) {
      throw AffineError("representatives are dependent modulo the relations");
    }
  }

  // c with v = sum c_i reps[i] modulo the relations.
  Vec solve(const Vec& v) const {
    const int d = static_cast<int>(free_.size());
    const Vec r = rel_->residue(v);
    Vec c;
    for (int j = 0; j < d; ++j) {
      Scalar s = Scalar::zero(r[0].ring());
      for (int i = 0; i < d; ++i)
        if (!r[free_[i]].is_zero()) s += r[free_[i]] * inv_(i, j);
      c.push_back(s);
    }
    return c;
  }

 private:
  std::shared_ptr<const Echelon> rel_;
  std::vector<int> free_;
  Matrix inv_;
};

}  // namespace

LWAlgebra lw_algebra(const AffineCategory& A, Color c, bool products) {
  const PlanarAlgebra& P = A.algebra();
  LWAlgebra out;
  out.color = c;
  out.ring = P.ring();
  if (A.levels(c, c).empty()) throw AffineError("truncation too small to assemble any generator");
  const auto lv = detail::walk_levels(A, c, c, [&](int l) {
    auto E = A.lw_relations(c, l);
    return E->dim() - E->rank();
  });
  for (const auto& h : lv) out.level_dims.push_back(h.dim);
  if (lv.back().dim < 0) throw AffineError("lowest-weight space exceeds the budget at level " + std::to_string(lv.back().level));
  out.dim = lv.back().dim;
  out.stable = lv.size() >= 2 && lv[lv.size() - 2].dim == out.dim;
  // Lowest computed level from which the dimension no longer changes.
  std::size_t first = lv.size() - 1;
  while (first > 0 && lv[first - 1].dim == out.dim) --first;
  while (first < lv.size() && lv[first].source != "computed") ++first;
  if (first == lv.size()) throw AffineError("no computed level carries the stable dimension");
  out.level = lv[first].level;
  if (out.dim == 0) return out;

  const Color rc = affine_rep_color(c, c, out.level);
  auto rel = A.lw_relations(c, out.level);
  Echelon E = *rel;
  std::vector<Vec> reps;
  for (int i = 0; i < P.dim(rc) && static_cast<int>(out.basis.size()) < out.dim; ++i) {
    const Element b = P.basis(rc, i);
    Vec v = A.coords(b);
    if (E.add(v)) {
      out.basis.push_back(b);
      reps.push_back(std::move(v));
    }
  }
  const LevelSolver here(rel, reps);
  auto morph = [&](const Element& x) { return A.psi(out.level, c, c, x); };
  if (P.has_star())
    for (const auto& b : out.basis) out.star.push_back(here.solve(A.coords(A.star(morph(b)).rep)));
  if (!products) return out;
  const int l2 = 2 * out.level;
  if (!A.level_computable(c, c, l2)) return out;
  std::vector<Vec> raised;
  for (const auto& b : out.basis) raised.push_back(A.coords(A.level_raise(morph(b), l2).rep));
  const LevelSolver there(A.lw_relations(c, l2), raised);
  out.mult.assign(out.dim, std::vector<Vec>(out.dim));
  for (int i = 0; i < out.dim; ++i)
    for (int j = 0; j < out.dim; ++j)
      out.mult[i][j] = there.solve(A.coords(A.compose(morph(out.basis[i]), morph(out.basis[j])).rep));
  return out;
}

std::string LWAlgebra::to_json() const {
  nlohmann::json j{{"format", "plancalc/1"},
                   {"color", {color.k, color.eps > 0 ? "+" : "-"}},
                   {"level", level},
                   {"dim", dim},
                   {"stable", stable},
                   {"level_dims", level_dims}};
  nlohmann::json m = nlohmann::json::array();
  for (const auto& row : mult) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) {
      nlohmann::json e = nlohmann::json::array();
      for (const auto& s : v) e.push_back(s.to_string());
      r.push_back(e);
    }
    m.push_back(r);
  }
  j["structure_constants"] = m;
  return j.dump(2);
}

namespace {

using Consts = std::vector<std::vector<Vec>>;

std::vector<Vec> nullspace(const std::vector<Vec>& rows, int cols, const Field& ring) {
  Echelon E(cols, ring);
  for (const auto& r : rows) E.add(r);
  std::vector<char> piv(cols, 0);
  for (int p : E.pivots()) piv[p] = 1;
  std::vector<Vec> out;
  for (int f = 0; f < cols; ++f) {
    if (piv[f]) continue;
    Vec z(cols, Scalar::zero(ring));
    z[f] = Scalar::one(ring);
    for (std::size_t r = 0; r < E.rows().size(); ++r) z[E.pivots()[r]] = -E.rows()[r][f];
    out.push_back(std::move(z));
  }
  return out;
}

// Structure constants of A / span(ideal) on the non-pivot coordinates.
Consts quotient_consts(const Consts& m, const std::vector<Vec>& ideal, const Field& ring) {
  const int d = static_cast<int>(m.size());
  Echelon E(d, ring);
  for (const auto& v : ideal) E.add(v);
  std::vector<char> piv(d, 0);
  for (int p : E.pivots()) piv[p] = 1;
  std::vector<int> keep;
  for (int j = 0; j < d; ++j)
    if (!piv[j]) keep.push_back(j);
  const int q = static_cast<int>(keep.size());
  Consts out(q, std::vector<Vec>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec r = E.residue(m[keep[i]][keep[j]]);
      for (int t : keep) out[i][j].push_back(r[t]);
    }
  return out;
}

// Block sizes of a semisimple algebra: a generic central z acts on the block
// M_d by one eigenvalue with multiplicity d^2.
std::vector<int> semisimple_blocks(const Consts& m, const Field& ring) {
  const int d = static_cast<int>(m.size());
  if (d == 0) return {};
  std::vector<Vec> rows;
  for (int i = 0; i < d; ++i)
    for (int t = 0; t < d; ++t) {
      Vec r;
      for (int a = 0; a < d; ++a) r.push_back(m[a][i][t] - m[i][a][t]);
      rows.push_back(std::move(r));
    }
  const auto Z = nullspace(rows, d, ring);
  const int nz = static_cast<int>(Z.size());
  std::mt19937_64 rng(7);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<double> z(d, 0.0);
    for (const auto& v : Z) {
      const double w = static_cast<double>(rng() % 1000) / 97.0 + 1.0;
      for (int a = 0; a < d; ++a) z[a] += w * v[a].to_double();
    }
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(d, d);
    for (int a = 0; a < d; ++a)
      for (int j = 0; j < d; ++j)
        for (int t = 0; t < d; ++t) L(t, j) += z[a] * m[a][j][t].to_double();
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(L, false).eigenvalues();
    std::vector<std::complex<double>> centers;
    std::vector<int> mult;
    const double tol = 1e-6 * (1.0 + L.norm());
    for (int i = 0; i < ev.size(); ++i) {
      std::size_t c = 0;
      while (c < centers.size() && std::abs(centers[c] - ev[i]) > tol) ++c;
      if (c == centers.size()) {
        centers.push_back(ev[i]);
        mult.push_back(0);
      }
      ++mult[c];
    }
    if (static_cast<int>(centers.size()) != nz) continue;
    std::vector<int> blocks;
    bool ok = true;
    for (int k : mult) {
      const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(k))));
      ok = ok && s * s == k;
      blocks.push_back(s);
    }
    if (!ok) continue;
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  }
  throw AffineError("could not separate the central idempotents");
}

}  // namespace

IrrepReport decompose_irreps(const LWAlgebra& alg) {
  IrrepReport r;
  const int d = alg.dim;
  if (d == 0) {
    r.method = "zero algebra";
    return r;
  }
  if (static_cast<int>(alg.mult.size()) != d) throw AffineError("structure constants were not computed");
  // Radical: kernel of the trace form of the regular representation.
  std::vector<Vec> T(d, Vec(d, Scalar::zero(alg.ring)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          if (!alg.mult[i][a][b].is_zero() && !alg.mult[j][b][a].is_zero())
            T[i][j] += alg.mult[i][a][b] * alg.mult[j][b][a];
  const auto rad = nullspace(T, d, alg.ring);
  r.radical_dim = static_cast<int>(rad.size());
  const Consts semi = rad.empty() ? alg.mult : quotient_consts(alg.mult, rad, alg.ring);
  r.blocks = semisimple_blocks(semi, alg.ring);
  r.method = "exact centre and trace-form radical; eigenvalue multiplicities of a generic central element";
  return r;
}

WeightReport weight_and_bounds(const AffineCategory& A, int pmax, int pbound, int kmax_depth,
                               const std::function<long long(int)>& dim_of) {
  const PlanarAlgebra& P = A.algebra();
  WeightReport w;
  const DepthReport dr = compute_depth(P, kmax_depth);
  if (!dr.l_plus || !dr.l_minus) throw AffineError("depth exceeds bound " + std::to_string(kmax_depth));
  w.depth = std::max(*dr.l_plus, *dr.l_minus);
  w.s = *dr.s;

  w.lw_vanishes = true;
  for (int k = w.s + 1; k <= w.s + 2; ++k) {
    const LWAlgebra lw = lw_algebra(A, {k, 1}, false);
    w.lw_dims.push_back({k, lw.dim});
    w.lw_vanishes = w.lw_vanishes && lw.dim == 0 && lw.stable;
  }

  auto dimP = [&](int p) -> long long {
    if (dim_of) return dim_of(p);
    if (auto* q = dynamic_cast<const TLQuotient*>(&P)) return quotient_dimension(q->tl(), p);
    return P.dim({p, 1});
  };
  const long long dl = dimP(w.depth);
  for (int p = 0; p <= pbound; ++p)
    for (int k = 0; k <= w.s; ++k) {
      const HomReport h = A.hom_space_dim({k, 1}, {p, 1});
      BoundRow r;
      r.p = p;
      r.k = k;
      r.l = w.depth;
      r.dim = h.dim;
      r.stable = h.stable;
      r.bound = static_cast<long long>(k + w.depth) * dl * dimP(p);
      r.ok = h.dim >= 0 && h.dim <= r.bound;
      w.bounds.push_back(r);
    }

  for (int p = 0; p <= pmax; ++p) w.dims.push_back(dimP(p));
  // d_p^(1/p) < d_(p+1)^(1/(p+1))  <=>  d_p^(p+1) < d_(p+1)^p.
  w.root_increasing = true;
  for (int p = 1; p < pmax; ++p) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), mpz_class(std::to_string(w.dims[p])).get_mpz_t(), p + 1);
    mpz_pow_ui(b.get_mpz_t(), mpz_class(std::to_string(w.dims[p + 1])).get_mpz_t(), p);
    w.root_increasing = w.root_increasing && a < b;
  }
  w.root_bounded = false;
  w.delta_sq = "unknown";
  if (auto mod = P.declared_modulus()) {
    const Scalar d2 = mod->first * mod->second;
    w.delta_sq = d2.to_string();
    mpq_class q;
    if (d2.as_rational(q)) {
      w.delta_sq = q.get_str();
      w.root_bounded = true;
      mpq_class pw = 1;
      for (int p = 1; p <= pmax; ++p) {
        pw *= q;
        w.root_bounded = w.root_bounded && mpq_class(std::to_string(w.dims[p])) <= pw;
      }
    }
  }
  return w;
}

std::string WeightReport::to_json() const {
  nlohmann::json j{{"format", "plancalc/1"}, {"s", s},          {"depth", depth},
                   {"lw_vanishes", lw_vanishes}, {"dims", dims}, {"root_increasing", root_increasing},
                   {"root_bounded", root_bounded}, {"delta_squared", delta_sq}};
  nlohmann::json lw = nlohmann::json::array();
  for (auto [k, d] : lw_dims) lw.push_back({{"k", k}, {"dim", d}});
  j["lowest_weight"] = lw;
  nlohmann::json b = nlohmann::json::array();
  for (const auto& r : bounds)
    b.push_back({{"p", r.p}, {"k", r.k}, {"l", r.l}, {"dim", r.dim}, {"bound", r.bound}, {"stable", r.stable}, {"ok", r.ok}});
  j["bounds"] = b;
  return j.dump(2);
}

}  // namespace plancalc
