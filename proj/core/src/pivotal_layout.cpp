#include <algorithm>
#include <numeric>
#include <sstream>
#include <iostream>
#include <cstdlib>

#include "json.hpp"
#include "plancalc/pivotal.hpp"
#include "tangle_internal.hpp"

namespace plancalc {

namespace {

// Remaining tangle above the sweep line. External points of U: top points
// 0..t-1, then the frontier listed right to left (frontier p is point t+m-1-p).
struct State {
  PlanarTangle U;
  int t = 0, m = 0;
  std::vector<int> orig;  // orig[d] = disc of the input tangle, d >= 1
};

enum class End { Frontier, Top, BoxTop, BoxBottom, Other };

struct Ctx {
  const State& s;
  int N;  // external points of U
  std::vector<int> lab;  // resolved region label per arc gid
  int nf;

  explicit Ctx(const State& st) : s(st), N(st.t + st.m), nf(st.U.num_faces()) {
    const PlanarTangle& U = s.U;
    lab.resize(U.total_arcs());
    for (int a = 0; a < U.total_arcs(); ++a) lab[a] = resolve(U.face_of_arc(a));
  }
  int region_id(Region r) const { return r.is_loop ? nf + r.id : resolve(r.id); }
  int resolve(int f) const {
    const PlanarTangle& U = s.U;
    for (;;) {
      const int c = U.face_component(f);
      if (U.component_outer_face(c) != f) return f;
      Region r = U.component_parent(c);
      if (r.is_loop) return nf + r.id;
      f = r.id;
    }
  }
  int ext_point(int p) const { return N - 1 - p; }
  int frontier_of(int extpt) const { return extpt >= s.t ? N - 1 - extpt : -1; }
  int gap_arc(int j) const { return N == 0 ? 0 : ((N - 1 - j) % N + N) % N; }
  int gap_gid(int j) const { return s.U.arc_id(0, gap_arc(j)); }
  int gap_face(int j) const { return s.U.face_of_arc(gap_gid(j)); }
  // point gid -> classification
  End kind(int pg) const {
    Dart d = s.U.point(pg);
    if (d.disc == 0) return d.pos < s.t ? End::Top : End::Frontier;
    return d.pos < s.U.color(d.disc).k ? End::BoxTop : End::BoxBottom;
  }
  int exit_point(int a) const {
    Dart d = s.U.arc(a);
    const int k = s.U.color(d.disc).k;
    const int p = d.disc == 0 ? d.pos : (d.pos + 1) % (2 * k);
    return s.U.point_id(d.disc, p);
  }
  // Arc whose traversal ends at point pg.
  int arc_exiting_at(int pg) const {
    Dart d = s.U.point(pg);
    const int k = s.U.color(d.disc).k;
    const int a = d.disc == 0 ? d.pos : (d.pos + 2 * k - 1) % (2 * k);
    return s.U.arc_id(d.disc, a);
  }
  bool face_has_children(int f) const {
    Region r{false, f};
    return !s.U.child_components(r).empty() || !s.U.child_loops(r).empty();
  }
};

// Description of the successor state before assembly.
struct Next {
  int m = 0;
  std::vector<int> keep;                    // U discs kept, in order
  std::vector<std::pair<Dart, Dart>> strings;  // U' numbering
  std::vector<int> ext_lab;                 // per U' external arc
  std::vector<std::pair<int, int>> loops;   // (outside, inside) labels
};

// External arc labels of U' from top arc labels and gap labels.
std::vector<int> ext_labels(int t, int m2, const std::vector<int>& arc_lab, const std::vector<int>& gaplab,
                            bool left_wins) {
  const int N2 = t + m2;
  std::vector<int> out(N2 == 0 ? 1 : N2, -1);
  for (int a = 0; a + 1 < t; ++a) out[a] = arc_lab[a];
  auto arc_of = [&](int j) { return N2 == 0 ? 0 : ((N2 - 1 - j) % N2 + N2) % N2; };
  if (left_wins) {
    for (int j = m2; j >= 0; --j) out[arc_of(j)] = gaplab[j];
  } else {
    for (int j = 0; j <= m2; ++j) out[arc_of(j)] = gaplab[j];
  }
  return out;
}

}  // namespace

namespace {

int compact_labels(std::vector<int>& labels, std::vector<std::pair<int, int>>& loops) {
  std::map<int, int> ids;
  auto get = [&](int x) {
    auto it = ids.find(x);
    if (it != ids.end()) return it->second;
    const int v = static_cast<int>(ids.size());
    ids.emplace(x, v);
    return v;
  };
  for (auto& x : labels) x = get(x);
  for (auto& [a, b] : loops) {
    a = get(a);
    b = get(b);
  }
  return static_cast<int>(ids.size());
}

// U' from a successor description; arc_lab gives labels of kept internal arcs.
PlanarTangle assemble_next(const Ctx& c, Next nx, const std::vector<int>& arc_lab) {
  const PlanarTangle& U = c.s.U;
  const int N2 = c.s.t + nx.m;
  Color ext{N2 / 2, U.external().eps};
  std::vector<Color> internal;
  std::vector<int> labels = nx.ext_lab;
  for (int d : nx.keep) {
    internal.push_back(U.color(d));
    for (int a = 0; a < U.narcs(d); ++a) labels.push_back(arc_lab[U.arc_id(d, a)]);
  }
  compact_labels(labels, nx.loops);
  return assemble_tangle(ext, internal, nx.strings, labels, nx.loops);
}

// Maps every U string through the point maps; `skip` marks point gids whose
// string is handled by the caller.
void map_strings(const Ctx& c, const std::vector<int>& fmap, const std::vector<int>& dmap,
                 const std::vector<char>& skip, int N2, std::vector<std::pair<Dart, Dart>>& out) {
  const PlanarTangle& U = c.s.U;
  auto conv = [&](int pg) {
    Dart d = U.point(pg);
    if (d.disc == 0) {
      if (d.pos < c.s.t) return d;
      return Dart{0, N2 - 1 - fmap[c.frontier_of(d.pos)]};
    }
    return Dart{dmap[d.disc], d.pos};
  };
  for (int x = 0; x < U.total_points(); ++x) {
    const int y = U.mate_id(x);
    if (x > y || skip[x] || skip[y]) continue;
    out.push_back({conv(x), conv(y)});
  }
}

std::vector<std::pair<int, int>> loop_labels(const Ctx& c, const std::vector<int>& parent_lab, int drop = -1) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < c.s.U.num_loops(); ++j)
    if (j != drop) out.push_back({parent_lab[j], c.nf + j});
  return out;
}

std::vector<int> loop_parents(const Ctx& c) {
  std::vector<int> out;
  for (int j = 0; j < c.s.U.num_loops(); ++j) out.push_back(c.region_id(c.s.U.loop_parent(j)));
  return out;
}

std::vector<int> identity_discs(const PlanarTangle& U, int drop, std::vector<int>& keep) {
  std::vector<int> dmap(U.num_discs(), -1);
  for (int d = 1; d < U.num_discs(); ++d) {
    if (d == drop) continue;
    keep.push_back(d);
    dmap[d] = static_cast<int>(keep.size());
  }
  return dmap;
}

// Slice tangle S with compose_at(S, 1, U') == U (box disc, if any, is disc 2).
struct SliceSpec {
  Slice::Kind kind;
  int pos;
  Color box;
};

PlanarTangle slice_tangle(const State& s, const SliceSpec& sp, int m2) {
  const int t = s.t, m = s.m, N = t + m, N2 = t + m2;
  const int eps = s.U.external().eps;
  int next = 0;
  std::vector<int> T(std::max(t - 1, 0)), G(m + 1);
  for (auto& x : T) x = next++;
  for (auto& x : G) x = next++;
  detail::UnionFind uf(2 * (N + m2) + 2 * sp.box.k + 8);
  if (t == 0) uf.unite(G[m], G[0]);
  if (sp.kind == Slice::Cap) uf.unite(G[sp.pos + 2], G[sp.pos]);
  auto arc_of = [](int NN, int j) { return NN == 0 ? 0 : ((NN - 1 - j) % NN + NN) % NN; };

  std::vector<int> lab0(N == 0 ? 1 : N), lab1(N2 == 0 ? 1 : N2);
  for (int a = 0; a + 1 < t; ++a) lab0[a] = lab1[a] = T[a];
  for (int j = m; j >= 0; --j) lab0[arc_of(N, j)] = G[j];
  std::vector<int> g2(m2 + 1);
  std::vector<std::pair<Dart, Dart>> strings;
  std::vector<int> lab2;
  std::vector<Color> internal{Color{N2 / 2, eps}};
  for (int c = 0; c < t; ++c) strings.push_back({{0, c}, {1, c}});
  auto ext = [&](int p) { return Dart{0, N - 1 - p}; };
  auto in1 = [&](int p) { return Dart{1, N2 - 1 - p}; };
  const int j = sp.pos;
  if (sp.kind == Slice::Cup) {
    const int z = next++;
    for (int q = 0; q <= m2; ++q) g2[q] = q < j ? G[q] : q == j ? G[j] : q == j + 1 ? z : q == j + 2 ? G[j] : G[q - 2];
    for (int p = 0; p < m; ++p) strings.push_back({ext(p), in1(p < j ? p : p + 2)});
    strings.push_back({in1(j), in1(j + 1)});
  } else if (sp.kind == Slice::Cap) {
    for (int q = 0; q <= m2; ++q) g2[q] = q <= j ? G[q] : G[q + 2];
    for (int p = 0; p < m; ++p)
      if (p != j && p != j + 1) strings.push_back({ext(p), in1(p < j ? p : p - 2)});
    strings.push_back({ext(j), ext(j + 1)});
  } else {
    const int k = sp.box.k;
    internal.push_back(sp.box);
    if (k == 0) {
      g2 = G;
      lab2 = {G[j]};
      for (int p = 0; p < m; ++p) strings.push_back({ext(p), in1(p)});
    } else {
      lab2.assign(2 * k, -1);
      std::vector<int> Y(k - 1);
      for (auto& x : Y) x = next++;
      for (int q = 0; q <= m2; ++q) g2[q] = (q > j && q < j + k) ? Y[q - j - 1] : G[q];
      lab2[2 * k - 1] = G[j];
      lab2[k - 1] = G[j + k];
      for (int c = 0; c + 1 < k; ++c) {
        lab2[2 * k - 2 - c] = G[j + c + 1];
        lab2[c] = Y[c];
      }
      for (int p = 0; p < m; ++p) {
        if (p >= j && p < j + k) strings.push_back({ext(p), Dart{2, 2 * k - 1 - (p - j)}});
        else strings.push_back({ext(p), in1(p)});
      }
      for (int c = 0; c < k; ++c) strings.push_back({Dart{2, c}, in1(j + c)});
    }
  }
  for (int q = m2; q >= 0; --q) lab1[arc_of(N2, q)] = g2[q];
  std::vector<int> labels = lab0;
  labels.insert(labels.end(), lab1.begin(), lab1.end());
  labels.insert(labels.end(), lab2.begin(), lab2.end());
  for (auto& x : labels) x = uf.find(x);
  std::vector<std::pair<int, int>> loops;
  compact_labels(labels, loops);
  return assemble_tangle(s.U.external(), internal, strings, labels, loops);
}

// Checks compose_at(S, 1, U') == U.
bool verify_step(const State& s, const SliceSpec& sp, const PlanarTangle& U2, const std::vector<int>& keep, int box_disc) {
  PlanarTangle S = slice_tangle(s, sp, U2.npoints(0) - s.t);
  PlanarTangle C = compose_at(S, 1, U2);
  if (box_disc > 0) {
    std::vector<int> sigma(s.U.num_internal());
    for (std::size_t x = 0; x < keep.size(); ++x) sigma[keep[x] - 1] = static_cast<int>(x) + 1;
    sigma[box_disc - 1] = static_cast<int>(keep.size()) + 1;
    C = relabel(C, sigma);
  }
  return C == s.U;
}

}  // namespace

namespace {

struct Mover {
  const Ctx& c;
  const State& s;
  const PlanarTangle& U;
  explicit Mover(const Ctx& ctx) : c(ctx), s(ctx.s), U(ctx.s.U) {}

  Dart conv(int pg, const std::vector<int>& fmap, const std::vector<int>& dmap, int N2) const {
    Dart d = U.point(pg);
    if (d.disc == 0) return d.pos < s.t ? d : Dart{0, N2 - 1 - fmap[c.frontier_of(d.pos)]};
    return Dart{dmap[d.disc], d.pos};
  }

  std::optional<State> finish(Next& nx, const std::vector<int>& arc_lab, const SliceSpec& sp, int box_disc) const {
    PlanarTangle U2;
    try {
      U2 = assemble_next(c, nx, arc_lab);
      if (!verify_step(s, sp, U2, nx.keep, box_disc)) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    State ns{U2, s.t, nx.m, {0}};
    for (int d : nx.keep) ns.orig.push_back(s.orig[d]);
    return ns;
  }

  std::vector<int> shift_map(int from, int by) const {
    std::vector<int> f(s.m);
    for (int p = 0; p < s.m; ++p) f[p] = p < from ? p : p + by;
    return f;
  }

  std::optional<State> box(int d, int i) const {
    const int k = U.color(d).k;
    Next nx;
    nx.m = s.m;
    std::vector<int> dmap = identity_discs(U, d, nx.keep);
    std::vector<int> fmap = shift_map(s.m, 0);
    std::vector<char> skip(U.total_points(), 0);
    const int N2 = s.t + s.m;
    for (int x = 0; x < k; ++x) {
      skip[U.point_id(0, c.ext_point(i + x))] = 1;
      skip[U.point_id(d, 2 * k - 1 - x)] = 1;
      skip[U.point_id(d, x)] = 1;
    }
    map_strings(c, fmap, dmap, skip, N2, nx.strings);
    for (int x = 0; x < k; ++x) {
      const int y = U.mate_id(U.point_id(d, x));
      Dart top{0, N2 - 1 - (i + x)};
      Dart yd = U.point(y);
      if (yd.disc == d) {
        if (yd.pos > x) nx.strings.push_back({top, Dart{0, N2 - 1 - (i + yd.pos)}});
      } else {
        nx.strings.push_back({conv(y, fmap, dmap, N2), top});
      }
    }
    std::vector<int> gaplab(s.m + 1);
    for (int q = 0; q <= s.m; ++q)
      gaplab[q] = (k > 0 && q > i && q < i + k) ? c.lab[U.arc_id(d, q - i - 1)] : c.lab[c.gap_gid(q)];
    nx.ext_lab = ext_labels(s.t, nx.m, c.lab, gaplab, true);
    nx.loops = loop_labels(c, loop_parents(c));
    return finish(nx, c.lab, {Slice::Box, i, U.color(d)}, d);
  }

  std::optional<State> cap(int i) const {
    Next nx;
    nx.m = s.m - 2;
    std::vector<int> dmap = identity_discs(U, -1, nx.keep);
    std::vector<int> fmap = shift_map(i, -2);
    std::vector<char> skip(U.total_points(), 0);
    skip[U.point_id(0, c.ext_point(i))] = skip[U.point_id(0, c.ext_point(i + 1))] = 1;
    map_strings(c, fmap, dmap, skip, s.t + nx.m, nx.strings);
    std::vector<int> gaplab(nx.m + 1);
    for (int q = 0; q <= nx.m; ++q) gaplab[q] = c.lab[c.gap_gid(q <= i ? q : q + 2)];
    nx.ext_lab = ext_labels(s.t, nx.m, c.lab, gaplab, true);
    nx.loops = loop_labels(c, loop_parents(c));
    return finish(nx, c.lab, {Slice::Cap, i, {}}, 0);
  }

  // New strands A (position j) and B (j+1); the string through u, v is cut with
  // u joined to B and v to A. u = -1 cuts loop `loop` instead.
  std::optional<State> cup(int j, int u, int loop, const std::vector<int>& arc_lab, int left, int inside,
                           int right, const std::vector<int>& lpar) const {
    Next nx;
    nx.m = s.m + 2;
    const int N2 = s.t + nx.m;
    std::vector<int> dmap = identity_discs(U, -1, nx.keep);
    std::vector<int> fmap = shift_map(j, 2);
    std::vector<char> skip(U.total_points(), 0);
    Dart A{0, N2 - 1 - j}, B{0, N2 - 2 - j};
    if (u >= 0) {
      const int v = U.mate_id(u);
      skip[u] = skip[v] = 1;
      map_strings(c, fmap, dmap, skip, N2, nx.strings);
      nx.strings.push_back({conv(v, fmap, dmap, N2), A});
      nx.strings.push_back({conv(u, fmap, dmap, N2), B});
    } else {
      map_strings(c, fmap, dmap, skip, N2, nx.strings);
      nx.strings.push_back({A, B});
    }
    std::vector<int> gaplab(nx.m + 1);
    for (int q = 0; q <= nx.m; ++q) {
      if (q < j) gaplab[q] = arc_lab[c.gap_gid(q)];
      else if (q == j) gaplab[q] = left;
      else if (q == j + 1) gaplab[q] = inside;
      else if (q == j + 2) gaplab[q] = right;
      else gaplab[q] = arc_lab[c.gap_gid(q - 2)];
    }
    nx.ext_lab = ext_labels(s.t, nx.m, arc_lab, gaplab, j == 0);
    nx.loops = loop_labels(c, lpar, u >= 0 ? -1 : loop);
    return finish(nx, arc_lab, {Slice::Cup, j, {}}, 0);
  }

  // Cut a string of the root boundary of the face at gap j.
  std::optional<State> cup_split(int j, int u, std::mt19937_64* rng) const {
    const int F = c.gap_face(j);
    std::vector<int> cyc = U.face_arcs(F);
    auto it = std::find(cyc.begin(), cyc.end(), c.gap_gid(j));
    std::rotate(cyc.begin(), it, cyc.end());
    const int r = static_cast<int>(cyc.size());
    int sidx = -1;
    for (int x = 0; x < r; ++x)
      if (U.color(U.arc(cyc[x]).disc).k > 0 && c.exit_point(cyc[x]) == u) sidx = x;
    if (sidx < 0) return std::nullopt;
    const int v = U.mate_id(u);
    std::vector<int> arc_lab = c.lab;
    const int newL = c.nf + U.num_loops(), newR = newL + 1;
    for (int x = 1; x < r; ++x) arc_lab[cyc[x]] = x <= sidx ? newR : newL;
    auto side = [&]() { return rng == nullptr || ((*rng)() & 1) ? newR : newL; };
    Region reg{false, F};
    for (int cc : U.child_components(reg)) {
      const int lb = side();
      for (int a : U.face_arcs(U.component_outer_face(cc))) arc_lab[a] = lb;
    }
    std::vector<int> lpar = loop_parents(c);
    for (int l : U.child_loops(reg)) lpar[l] = side();
    return cup(j, u, -1, arc_lab, newL, c.lab[c.arc_exiting_at(v)], newR, lpar);
  }

  // Cut a child component (through u on its outer face) or a child loop of the face at gap j.
  std::optional<State> cup_child(int j, int u, int loop) const {
    const int F = c.lab[c.gap_gid(j)];
    const int inside = u >= 0 ? c.lab[c.arc_exiting_at(U.mate_id(u))] : c.nf + loop;
    return cup(j, u, loop, c.lab, F, inside, F, loop_parents(c));
  }
};

}  // namespace

namespace {

std::vector<int> word_of(int eps, int m) {
  std::vector<int> w(m);
  for (int p = 0; p < m; ++p) w[p] = (p % 2 == 0 ? eps : -eps) < 0 ? 1 : -1;
  return w;
}

bool is_final(const Ctx& c) {
  const PlanarTangle& U = c.s.U;
  if (U.num_internal() > 0 || U.num_loops() > 0 || c.s.m != c.s.t) return false;
  for (int p = 0; p < c.s.m; ++p)
    if (U.mate_id(U.point_id(0, c.ext_point(p))) != U.point_id(0, p)) return false;
  return true;
}

struct Candidate {
  enum Kind { Box, Cap, Child, Split } kind;
  int a = 0, b = 0, c = -1;
  bool random_sides = true;
};

// Priority classes: boxes and caps, children of frontier faces, strings that
// need a minimum, box columns out of order, then any other cut.
std::vector<std::vector<Candidate>> candidates(const Ctx& c) {
  const State& s = c.s;
  const PlanarTangle& U = s.U;
  std::vector<std::vector<Candidate>> cls(6);
  auto frontier_at = [&](int pg) { return c.kind(pg) == End::Frontier ? c.frontier_of(U.point(pg).pos) : -1; };
  for (int d = 1; d < U.num_discs(); ++d) {
    const int k = U.color(d).k;
    if (k == 0) {
      const int reg = c.region_id(U.component_parent(U.component_of_disc(d)));
      for (int j = 0; j <= s.m; ++j)
        if (c.lab[c.gap_gid(j)] == reg) cls[0].push_back({Candidate::Box, d, j});
      continue;
    }
    const int i = frontier_at(U.mate_id(U.point_id(d, 2 * k - 1)));
    if (i < 0) continue;
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) {
      ok = frontier_at(U.mate_id(U.point_id(d, 2 * k - 1 - x))) == i + x;
      if (ok && x > 0) ok = !c.face_has_children(c.gap_face(i + x));
    }
    if (ok) cls[0].push_back({Candidate::Box, d, i});
  }
  for (int i = 0; i + 1 < s.m; ++i)
    if (frontier_at(U.mate_id(U.point_id(0, c.ext_point(i)))) == i + 1 && !c.face_has_children(c.gap_face(i + 1)))
      cls[1].push_back({Candidate::Cap, i});
  for (int j = 0; j <= s.m; ++j) {
    Region reg{false, c.gap_face(j)};
    for (int cc : U.child_components(reg)) {
      const int fo = U.component_outer_face(cc);
      if (U.color(U.component_discs(cc)[0]).k == 0 && U.component_discs(cc).size() == 1) continue;
      for (int a : U.face_arcs(fo)) cls[2].push_back({Candidate::Child, j, c.exit_point(a)});
    }
    for (int l : U.child_loops(reg)) cls[2].push_back({Candidate::Child, j, -1, l});
  }
  auto needs_min = [&](End x, End y) {
    auto low = [](End e) { return e == End::Top || e == End::BoxBottom; };
    return low(x) && low(y);
  };
  for (int j = 0; j <= s.m; ++j) {
    const int F = c.gap_face(j);
    for (int a : U.face_arcs(F)) {
      if (U.color(U.arc(a).disc).k == 0) continue;
      const int u = c.exit_point(a), v = U.mate_id(u);
      const End x = c.kind(u), y = c.kind(v);
      if (x == End::Frontier || y == End::Frontier) continue;
      cls[needs_min(x, y) ? 3 : 5].push_back({Candidate::Split, j, u});
    }
  }
  for (int d = 1; d < U.num_discs(); ++d) {
    const int k = U.color(d).k;
    for (int x = 1; x < k; ++x) {
      const int p = frontier_at(U.mate_id(U.point_id(d, 2 * k - x)));
      if (p < 0) continue;
      const int z = U.mate_id(U.point_id(d, 2 * k - 1 - x));
      if (frontier_at(z) == p + 1) continue;
      Candidate cd{Candidate::Split, p + 1, z};
      cd.random_sides = false;
      cls[4].push_back(cd);
    }
  }
  return cls;
}

std::optional<State> apply(const Ctx& c, const Candidate& cd, std::mt19937_64& rng, Slice& out) {
  Mover mv(c);
  switch (cd.kind) {
    case Candidate::Box:
      out = {Slice::Box, cd.b, c.s.orig[cd.a]};
      return mv.box(cd.a, cd.b);
    case Candidate::Cap:
      out = {Slice::Cap, cd.a, 0};
      return mv.cap(cd.a);
    case Candidate::Child:
      out = {Slice::Cup, cd.a, 0};
      return mv.cup_child(cd.a, cd.b, cd.c);
    case Candidate::Split:
      out = {Slice::Cup, cd.a, 0};
      return mv.cup_split(cd.a, cd.b, cd.random_sides ? &rng : nullptr);
  }
  return std::nullopt;
}

SlicePlan layout(const PlanarTangle& T, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int K = T.external().k;
  SlicePlan plan;
  plan.external = T.external();
  plan.internal = T.internal();
  State s{T, K, K, {}};
  s.orig.resize(T.num_discs());
  std::iota(s.orig.begin(), s.orig.end(), 0);
  plan.words.push_back(word_of(T.external().eps, K));
  const int limit = 64 + 16 * T.total_points();
  for (int step = 0;; ++step) {
    if (step > limit) throw std::runtime_error("layout did not finish");
    Ctx c(s);
    if (is_final(c)) break;
    auto cls = candidates(c);
    std::optional<State> next;
    Slice sl;
    for (auto& group : cls) {
      if (seed != 0) std::shuffle(group.begin(), group.end(), rng);
      for (const auto& cd : group) {
        next = apply(c, cd, rng, sl);
        if (next) break;
      }
      if (next) break;
    }
    if (!next) {
      if (std::getenv("PLANCALC_LAYOUT_DEBUG")) {
        std::cerr << "stuck t=" << s.t << " m=" << s.m << " U=" << tangle_to_json(s.U) << "\n";
        for (std::size_t g = 0; g < cls.size(); ++g) std::cerr << " class " << g << ": " << cls[g].size() << "\n";
      }
      throw std::runtime_error("layout stuck");
    }
    plan.slices.push_back(sl);
    s = std::move(*next);
    plan.words.push_back(word_of(T.external().eps, s.m));
  }
  return plan;
}

}  // namespace

int SlicePlan::max_width() const {
  std::size_t w = 0;
  for (const auto& x : words) w = std::max(w, x.size());
  return static_cast<int>(w);
}

std::string SlicePlan::to_json() const {
  nlohmann::json j;
  j["format"] = "plancalc/1";
  j["external"] = {{"k", external.k}, {"eps", external.eps > 0 ? "+" : "-"}};
  nlohmann::json in = nlohmann::json::array();
  for (const auto& c : internal) in.push_back({{"k", c.k}, {"eps", c.eps > 0 ? "+" : "-"}});
  j["internal"] = in;
  nlohmann::json sl = nlohmann::json::array();
  static const char* names[] = {"cup", "cap", "box"};
  for (const auto& x : slices) {
    nlohmann::json e = {{"kind", names[x.kind]}, {"pos", x.pos + 1}};
    if (x.kind == Slice::Box) e["disc"] = x.disc;
    sl.push_back(e);
  }
  j["slices"] = sl;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : words) {
    std::string str;
    for (int l : w) str += l > 0 ? "X " : "X* ";
    if (!str.empty()) str.pop_back();
    ws.push_back(str);
  }
  j["words"] = ws;
  return j.dump(2);
}

SlicePlan standard_form(const PlanarTangle& T, std::uint64_t seed) {
  std::string last;
  for (std::uint64_t attempt = 0; attempt < 6; ++attempt) {
    try {
      return layout(T, attempt == 0 ? seed : seed * 31 + attempt * 7919);
    } catch (const std::runtime_error& e) {
      last = e.what();
    }
  }
  throw std::runtime_error("standard_form: " + last);
}

}  // namespace plancalc
