#include "plancalc/affine.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "affine_internal.hpp"
#include "plancalc/depth.hpp"
#include "plancalc/parallel.hpp"

namespace plancalc {

namespace {

using Str = std::pair<Dart, Dart>;

Dart ext(int p) { return {0, p}; }
Dart dsc(int d, int p) { return {d, p}; }

int flip(int eps, int times) { return (times % 2 == 0) ? eps : -eps; }

PlanarTangle build(Color e, std::vector<Color> in, std::vector<Str> s,
                   std::vector<RawPlacement> pl = {}) {
  RawTangle raw;
  raw.external = e;
  raw.internal = std::move(in);
  raw.strings = std::move(s);
  raw.placements = std::move(pl);
  return PlanarTangle::from_raw(raw);
}

std::string color_key(Color c) { return std::to_string(c.k) + (c.eps > 0 ? "+" : "-"); }

}  // namespace

bool affine_level_ok(Color outer, Color inner, int l) {
  return l >= 0 && ((l % 2 == 0) == (outer.eps == inner.eps));
}

Color affine_rep_color(Color outer, Color inner, int l) {
  if (!affine_level_ok(outer, inner, l))
    throw AffineError("level " + std::to_string(l) + " has the wrong parity for " + inner.str() +
                      " -> " + outer.str());
  return {outer.k + inner.k + l, outer.eps};
}

PlanarTangle raise_tangle(Color outer, Color inner, int l, int* loop_sign) {
  const Color c = affine_rep_color(outer, inner, l);
  const int m = outer.k, N = 2 * c.k, Np = N + 4;
  const Color out{c.k + 2, c.eps};
  if (N == 0) {
    // Two caps close a contractible loop around the cut in the outer region.
    if (loop_sign) *loop_sign = c.eps;
    return build(out, {c}, {{ext(0), ext(1)}, {ext(2), ext(3)}}, {{1, dsc(1, 0), RawFace::arc(0, 3)}});
  }
  if (loop_sign) *loop_sign = 0;
  auto straight = [&](int j) { return j < 2 * m ? j : j + 2; };
  std::vector<Str> s;
  s.push_back({ext(2 * m), ext(2 * m + 1)});
  s.push_back({ext(Np - 2), ext(straight(N - 1))});
  for (int j = 0; j + 1 < N; ++j) s.push_back({ext(straight(j)), dsc(1, j)});
  s.push_back({ext(Np - 1), dsc(1, N - 1)});
  return build(out, {c}, s);
}

PlanarTangle compose_tangle(Color outer, Color mid, Color inner, int la, int lb) {
  const Color cx = affine_rep_color(outer, mid, la);
  const Color cy = affine_rep_color(mid, inner, lb);
  const int m = outer.k, n = mid.k, p = inner.k;
  const int K = m + p + la + lb;
  const Color out{K, outer.eps};
  const int left0 = 2 * m + la + lb + 2 * p;  // first left point of the result
  std::vector<Str> s;
  for (int i = 0; i < 2 * m; ++i) s.push_back({ext(i), dsc(1, i)});
  for (int r = 0; r < la; ++r) s.push_back({ext(2 * m + r), dsc(1, 2 * m + r)});
  for (int j = 0; j < 2 * n; ++j) s.push_back({dsc(1, 2 * m + la + j), dsc(2, 2 * n - 1 - j)});
  for (int t = 0; t < la; ++t) s.push_back({ext(left0 + lb + t), dsc(1, 2 * m + la + 2 * n + t)});
  for (int r = 0; r < lb; ++r) s.push_back({ext(2 * m + la + r), dsc(2, 2 * n + r)});
  for (int j = 0; j < 2 * p; ++j) s.push_back({ext(2 * m + la + lb + j), dsc(2, 2 * n + lb + j)});
  for (int t = 0; t < lb; ++t) s.push_back({ext(left0 + t), dsc(2, 2 * n + lb + 2 * p + t)});
  std::vector<RawPlacement> pl;
  if (cx.k == 0 && cy.k == 0) {
    pl.push_back({1, dsc(1, 0), RawFace::arc(0, 0)});
    pl.push_back({2, dsc(2, 0), RawFace::arc(0, 0)});
  } else if (cx.k == 0) {
    pl.push_back({1, dsc(1, 0), RawFace::arc(0, 2 * K - 1)});
  } else if (cy.k == 0) {
    const int a = ((2 * m + la - 1) % (2 * cx.k) + 2 * cx.k) % (2 * cx.k);
    pl.push_back({2, dsc(2, 0), RawFace::arc(1, a)});
  }
  return build(out, {cx, cy}, s, pl);
}

PlanarTangle boundary_e_tangle(Color c, int p) {
  if (c.k < 2 || p < 0 || p + 1 >= 2 * c.k) throw AffineError("boundary projection out of range");
  std::vector<Str> s{{ext(p), ext(p + 1)}, {dsc(1, p), dsc(1, p + 1)}};
  for (int i = 0; i < 2 * c.k; ++i)
    if (i != p && i != p + 1) s.push_back({ext(i), dsc(1, i)});
  return build(c, {c}, s);
}

PlanarTangle insert_cap_tangle(Color out, int q) {
  if (out.k < 1 || q < 0 || q + 1 >= 2 * out.k) throw AffineError("cap insertion out of range");
  const Color in{out.k - 1, out.eps};
  std::vector<Str> s{{ext(q), ext(q + 1)}};
  for (int i = 0; i < 2 * out.k; ++i) {
    if (i < q) s.push_back({ext(i), dsc(1, i)});
    if (i > q + 1) s.push_back({ext(i), dsc(1, i - 2)});
  }
  std::vector<RawPlacement> pl;
  if (in.k == 0) pl.push_back({1, dsc(1, 0), RawFace::arc(0, q == 0 ? 1 : 0)});
  return build(out, {in}, s, pl);
}

PlanarTangle shift_tangle(Color in, int s) {
  const int N = 2 * in.k;
  if (N == 0) return identity_tangle(in);
  const int sh = ((s % N) + N) % N;
  std::vector<Str> str;
  for (int i = 0; i < N; ++i) str.push_back({ext(i), dsc(1, (i + sh) % N)});
  return build({in.k, flip(in.eps, sh)}, {in}, str);
}

// Cap joining inner points 2n-1 and 0 under the inner disc, as a new innermost
// wrap. Input: level l-1 from inner (n-1, -eps); output: level l from (n, eps).
static PlanarTangle wrap_cap_tangle(Color outer, Color inner, int l) {
  const Color c = affine_rep_color(outer, inner, l);
  const Color a = affine_rep_color(outer, {inner.k - 1, -inner.eps}, l - 1);
  const int m = outer.k, n = inner.k;
  std::vector<Str> s;
  s.push_back({ext(2 * m + l - 1), ext(2 * m + l)});
  s.push_back({ext(2 * m + l + 2 * n - 1), ext(2 * m + l + 2 * n)});
  for (int q = 0; q < 2 * a.k; ++q) {
    int t;
    if (q < 2 * m + l - 1) t = q;
    else if (q < 2 * m + l - 1 + 2 * n - 2) t = q + 2;
    else t = q + 4;
    s.push_back({ext(t), dsc(1, q)});
  }
  std::vector<RawPlacement> pl;
  if (a.k == 0) pl.push_back({1, dsc(1, 0), RawFace::arc(0, 2 * c.k - 1)});
  return build(c, {a}, s, pl);
}

std::string annular_code(Color outer, Color inner, int l, const Matching& x) {
  const Color c = affine_rep_color(outer, inner, l);
  const int m = outer.k, n = inner.k, N = 2 * c.k;
  if (static_cast<int>(x.size()) != N) throw AffineError("matching size does not match the colours");
  const int right0 = 2 * m, inner0 = 2 * m + l, left0 = 2 * m + l + 2 * n;
  auto boundary = [&](int q) { return q < right0 || (q >= inner0 && q < left0); };
  auto label = [&](int q) {
    return q < right0 ? "o" + std::to_string(q) : "i" + std::to_string(left0 - 1 - q);
  };
  // Follows x and the wraps from q; right-to-left under the disc counts +1.
  std::vector<char> seen(N, 0);
  auto walk = [&](int q, int& w) {
    for (;;) {
      seen[q] = 1;
      const int r = x[q];
      seen[r] = 1;
      if (boundary(r)) return r;
      if (r < inner0) {
        q = N - 1 - (r - right0);
        ++w;
      } else {
        q = right0 + (N - 1 - r);
        --w;
      }
      if (seen[q]) return -1;
    }
  };
  std::vector<std::string> strs;
  for (int q = 0; q < N; ++q) {
    if (!boundary(q) || seen[q]) continue;
    int w = 0;
    const int e = walk(q, w);
    strs.push_back(label(q) + "-" + label(e) + ":" + std::to_string(w));
  }
  int contractible = 0, essential = 0;
  for (int r = 0; r < l; ++r) {
    if (seen[right0 + r]) continue;
    int w = 0;
    // Enter at the left end of wrap r and close the cycle.
    int q = N - 1 - r;
    ++w;
    seen[right0 + r] = 1;
    walk(q, w);
    (w == 0 ? contractible : essential) += 1;
  }
  std::sort(strs.begin(), strs.end());
  std::ostringstream os;
  for (const auto& s : strs) os << s << ";";
  os << "c" << contractible << ";e" << essential;
  return os.str();
}

AffineCategory::AffineCategory(std::shared_ptr<const PlanarAlgebra> P, int truncation, int budget)
    : P_(std::move(P)), L_(truncation), budget_(budget) {
  if (!P_) throw std::invalid_argument("null planar algebra");
  if (L_ < 0) throw std::invalid_argument("negative truncation");
  quotient_ = dynamic_cast<const TLQuotient*>(P_.get());
}

static Vec pair_tl(const TLQuotient& Q, const Element& y) {
  const auto& dg = Q.tl().diagrams(y.color.k);
  Vec w(Q.dim(y.color), Scalar::zero(Q.ring()));
  for (std::size_t d = 0; d < y.coeffs.size(); ++d) {
    if (y.coeffs[d].is_zero()) continue;
    const Vec p = Q.pairing(dg[d]);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!p[i].is_zero()) w[i] += y.coeffs[d] * p[i];
  }
  return w;
}

Vec AffineCategory::coords(const Element& x) const {
  if (!quotient_) return x.coeffs;
  return pair_tl(*quotient_, quotient_->lift(x));
}

Vec AffineCategory::act_coords(const PlanarTangle& T, const std::vector<Element>& in) const {
  if (!quotient_) return P_->act(T, in).coeffs;
  std::vector<Element> lifted;
  for (const auto& x : in) lifted.push_back(quotient_->lift(x));
  return pair_tl(*quotient_, quotient_->tl().act(T, lifted));
}

AffineMorphism AffineCategory::psi(int l, Color outer, Color inner, const Element& x) const {
  const Color c = affine_rep_color(outer, inner, l);
  if (!(x.color == c)) throw AffineError("representative colour " + x.color.str() + ", expected " + c.str());
  return {outer, inner, l, x};
}

AffineMorphism AffineCategory::zero(Color outer, Color inner, int l) const {
  return {outer, inner, l, P_->zero(affine_rep_color(outer, inner, l))};
}

AffineMorphism AffineCategory::identity(Color c) const {
  const Color rc = affine_rep_color(c, c, 0);
  Matching mt(2 * rc.k);
  for (int i = 0; i < 2 * c.k; ++i) {
    mt[i] = 4 * c.k - 1 - i;
    mt[4 * c.k - 1 - i] = i;
  }
  return {c, c, 0, P_->act(matching_tangle(rc, mt), {})};
}

AffineMorphism AffineCategory::rotation(Color c) const {
  if (c.k == 0) throw AffineError("rotation needs k >= 1");
  const Color out{c.k, -c.eps};
  const Color rc = affine_rep_color(out, c, 1);
  const int k = c.k, N = 2 * rc.k;
  Matching mt(N);
  auto join = [&](int a, int b) { mt[a] = b, mt[b] = a; };
  for (int j = 0; j + 1 < 2 * k; ++j) join(j + 1, 4 * k - j);
  join(2 * k, 2 * k + 1);
  join(0, N - 1);
  return {out, c, 1, P_->act(matching_tangle(rc, mt), {})};
}

AffineMorphism AffineCategory::rotation_inverse(Color c) const {
  if (c.k == 0) throw AffineError("rotation needs k >= 1");
  const Color in{c.k, -c.eps};
  const Color rc = affine_rep_color(c, in, 1);
  const int k = c.k, N = 2 * rc.k;
  // Inner point j meets outer point j-1; inner 0 leaves on the left wrap and
  // returns on the right to outer 2k-1.
  Matching mt(N);
  auto join = [&](int a, int b) { mt[a] = b, mt[b] = a; };
  for (int j = 1; j < 2 * k; ++j) join(j - 1, 4 * k - j);
  join(2 * k - 1, 2 * k);
  join(4 * k, N - 1);
  return {c, in, 1, P_->act(matching_tangle(rc, mt), {})};
}

AffineMorphism AffineCategory::level_raise(const AffineMorphism& A, int l) const {
  if (l < A.level || (l - A.level) % 2 != 0)
    throw AffineError("cannot raise level " + std::to_string(A.level) + " to " + std::to_string(l));
  AffineMorphism out = A;
  while (out.level < l) {
    int sg = 0;
    const PlanarTangle T = raise_tangle(out.outer, out.inner, out.level, &sg);
    Element x = P_->act(T, {out.rep});
    if (sg != 0) {
      auto mod = P_->declared_modulus();
      if (!mod) throw AffineError("raising an empty representative needs a declared modulus");
      const Scalar& d = sg > 0 ? mod->first : mod->second;
      if (!d.invertible()) throw AffineError("raising an empty representative needs an invertible loop value");
      x = d.inverse() * x;
    }
    out.rep = std::move(x);
    out.level += 2;
  }
  return out;
}

AffineMorphism AffineCategory::compose(const AffineMorphism& A, const AffineMorphism& B) const {
  if (!(A.inner == B.outer))
    throw AffineError("cannot compose: " + A.inner.str() + " vs " + B.outer.str());
  const PlanarTangle T = compose_tangle(A.outer, A.inner, B.inner, A.level, B.level);
  return {A.outer, B.inner, A.level + B.level, P_->act(T, {A.rep, B.rep})};
}

AffineMorphism AffineCategory::star(const AffineMorphism& A) const {
  if (!P_->has_star()) throw AffineError(P_->name() + " has no star structure");
  const Element y = P_->star(A.rep);
  Element r = A.level == 0 ? y : P_->act(shift_tangle(y.color, A.level), {y});
  return psi(A.level, A.inner, A.outer, r);
}

AffineMorphism AffineCategory::add(const AffineMorphism& A, const AffineMorphism& B) const {
  if (!(A.outer == B.outer) || !(A.inner == B.inner)) throw AffineError("sum of different hom spaces");
  const int l = std::max(A.level, B.level);
  AffineMorphism a = level_raise(A, l), b = level_raise(B, l);
  a.rep = a.rep + b.rep;
  return a;
}

AffineMorphism AffineCategory::scale(const Scalar& s, const AffineMorphism& A) const {
  AffineMorphism out = A;
  out.rep = s * A.rep;
  return out;
}

bool AffineCategory::equal(const AffineMorphism& A, const AffineMorphism& B) const {
  if (!(A.outer == B.outer) || !(A.inner == B.inner)) return false;
  const int l = std::max(A.level, B.level);
  const Element d = level_raise(A, l).rep - level_raise(B, l).rep;
  if (is_zero(d)) return true;
  auto rel = relations(A.outer, A.inner, l);
  if (!rel) throw AffineError("level " + std::to_string(l) + " exceeds the budget");
  return rel->in_span(coords(d));
}

std::vector<int> AffineCategory::levels(Color outer, Color inner) const {
  std::vector<int> out;
  for (int l = affine_level_ok(outer, inner, 0) ? 0 : 1; l <= L_; l += 2) out.push_back(l);
  return out;
}

bool AffineCategory::level_computable(Color outer, Color inner, int l) const {
  const Color c = affine_rep_color(outer, inner, l);
  // A quotient level is built from every diagram; keep that affordable.
  if (quotient_ && catalan(c.k) > 4862) return false;
  const int d = P_->dim(c);
  return d >= 0 && d <= budget_;
}

bool AffineCategory::saturated(int l) const {
  if (l < 2) return false;
  // Fullness propagates upward, so only the first full level is searched.
  for (int k = 1; k <= l - 1; ++k) {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = sat_cache_.find(k);
      if (it != sat_cache_.end()) {
        if (it->second) return true;
        continue;
      }
    }
    bool ok;
    try {
      ok = ideal_is_full(*P_, k, 1).full() && ideal_is_full(*P_, k, -1).full();
    } catch (const std::domain_error&) {
      ok = false;
    }
    std::lock_guard<std::mutex> g(mu_);
    sat_cache_[k] = ok;
    if (ok) return true;
  }
  return false;
}

namespace {

// Rows t(b_i) for each basis element, computed in parallel and added in order.
void add_images(const PlanarAlgebra& P, Color in, Echelon& E, const std::function<Vec(const Element&)>& t) {
  const int D = P.dim(in);
  std::vector<Vec> rows(D);
  parallel_for(D, [&](int i) { rows[i] = t(P.basis(in, i)); });
  for (auto& r : rows) E.add(std::move(r));
}

}  // namespace

std::shared_ptr<const Echelon> AffineCategory::relations(Color outer, Color inner, int l) const {
  const Color c = affine_rep_color(outer, inner, l);
  const std::string key = "r" + color_key(outer) + color_key(inner) + std::to_string(l);
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = rel_cache_.find(key);
    if (it != rel_cache_.end()) return it->second;
  }
  if (!level_computable(outer, inner, l)) return nullptr;
  auto E = std::make_shared<Echelon>(P_->dim(c), P_->ring());
  const int m = outer.k, N = 2 * c.k;
  for (int r = 0; r + 1 < l; ++r) {
    const PlanarTangle right = boundary_e_tangle(c, 2 * m + r);
    const PlanarTangle left = boundary_e_tangle(c, N - 2 - r);
    add_images(*P_, c, *E, [&](const Element& b) {
      Vec v = act_coords(right, {b});
      const Vec w = act_coords(left, {b});
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
      return v;
    });
  }
  std::lock_guard<std::mutex> g(mu_);
  rel_cache_[key] = E;
  return E;
}

std::vector<Vec> AffineCategory::hat_generators(Color c, int l) const {
  if (c.k == 0) return {};
  const Color rc = affine_rep_color(c, c, l);
  const int m = c.k, n = c.k;
  std::vector<Vec> out;
  const Color below{rc.k - 1, rc.eps};
  for (int j = 0; j + 1 < 2 * n; ++j) {
    const PlanarTangle T = insert_cap_tangle(rc, 2 * m + l + 2 * n - 2 - j);
    const int D = P_->dim(below);
    std::vector<Vec> rows(D);
    parallel_for(D, [&](int i) { rows[i] = act_coords(T, {P_->basis(below, i)}); });
    for (auto& r : rows) out.push_back(std::move(r));
  }
  if (l >= 1) {
    const PlanarTangle T = wrap_cap_tangle(c, c, l);
    const Color a = T.color(1);
    const int D = P_->dim(a);
    std::vector<Vec> rows(D);
    parallel_for(D, [&](int i) { rows[i] = act_coords(T, {P_->basis(a, i)}); });
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

std::shared_ptr<const Echelon> AffineCategory::lw_relations(Color c, int l) const {
  const std::string key = "w" + color_key(c) + std::to_string(l);
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = rel_cache_.find(key);
    if (it != rel_cache_.end()) return it->second;
  }
  auto base = relations(c, c, l);
  if (!base) return nullptr;
  auto E = std::make_shared<Echelon>(*base);
  for (auto& v : hat_generators(c, l)) E->add(std::move(v));
  std::lock_guard<std::mutex> g(mu_);
  rel_cache_[key] = E;
  return E;
}

namespace detail {

std::vector<HomLevel> walk_levels(const AffineCategory& A, Color outer, Color inner,
                                  const std::function<int(int)>& computed) {
  std::vector<HomLevel> out;
  for (int l : A.levels(outer, inner)) {
    HomLevel h;
    h.level = l;
    h.space_dim = -1;
    if (A.level_computable(outer, inner, l)) {
      h.space_dim = A.algebra().dim(affine_rep_color(outer, inner, l));
      h.dim = computed(l);
      h.source = "computed";
    } else if (!out.empty() && out.back().dim >= 0 && A.saturated(l)) {
      h.dim = out.back().dim;
      h.source = "inherited";
    } else {
      h.dim = -1;
      h.source = "exceeds budget";
    }
    out.push_back(h);
    if (h.dim < 0) break;
  }
  return out;
}

}  // namespace detail

namespace {

void finish(HomReport& r) {
  const auto& lv = r.levels;
  r.dim = lv.empty() ? -1 : lv.back().dim;
  if (!lv.empty() && lv.back().level != r.truncation && lv.back().level + 1 != r.truncation) r.dim = -1;
  r.stable = r.dim >= 0 && lv.size() >= 2 && lv[lv.size() - 2].dim == r.dim;
}

}  // namespace

HomReport AffineCategory::hom_space_dim(Color outer, Color inner) const {
  HomReport r;
  r.outer = outer;
  r.inner = inner;
  r.truncation = L_;
  if (levels(outer, inner).empty()) throw AffineError("truncation too small to assemble any generator");
  r.levels = detail::walk_levels(*this, outer, inner, [&](int l) {
    return relations(outer, inner, l)->dim() - relations(outer, inner, l)->rank();
  });
  finish(r);
  return r;
}

static nlohmann::json levels_json(const std::vector<HomLevel>& lv) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& h : lv)
    a.push_back({{"level", h.level}, {"dim", h.dim}, {"space_dim", h.space_dim}, {"source", h.source}});
  return a;
}

std::string HomReport::to_json() const {
  nlohmann::json j{{"format", "plancalc/1"},
                   {"outer", {outer.k, outer.eps > 0 ? "+" : "-"}},
                   {"inner", {inner.k, inner.eps > 0 ? "+" : "-"}},
                   {"truncation", truncation},
                   {"dim", dim},
                   {"stable", stable},
                   {"levels", levels_json(levels)}};
  return j.dump(2);
}

}  // namespace plancalc
