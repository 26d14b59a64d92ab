#include <algorithm>
#include <deque>

#include "plancalc/tangle.hpp"
#include "tangle_internal.hpp"

namespace plancalc {

using detail::Skeleton;
using detail::UnionFind;

PlanarTangle assemble_tangle(const Color& ext, const std::vector<Color>& internal,
                             const std::vector<std::pair<Dart, Dart>>& strings, const std::vector<int>& arc_label,
                             const std::vector<std::pair<int, int>>& loop_sides) {
  Skeleton sk;
  std::vector<Color> cols{ext};
  cols.insert(cols.end(), internal.begin(), internal.end());
  sk.build(cols, strings);
  const int na = sk.aoff.back();
  if (static_cast<int>(arc_label.size()) != na) throw std::logic_error("arc label count mismatch");
  const int nf = static_cast<int>(sk.face_arcs.size());
  const int nc = static_cast<int>(sk.comp_discs.size());
  const int nl = static_cast<int>(loop_sides.size());
  int nr = 0;
  for (int x : arc_label) nr = std::max(nr, x + 1);
  for (auto [a, b] : loop_sides) nr = std::max({nr, a + 1, b + 1});

  std::vector<int> flabel(nf);
  for (int f = 0; f < nf; ++f) {
    flabel[f] = arc_label[sk.face_arcs[f][0]];
    for (int a : sk.face_arcs[f])
      if (arc_label[a] != flabel[f]) throw std::logic_error("one face carries two region labels");
  }
  // adjacency region -> (separator, face or loop side)
  std::vector<std::vector<std::pair<int, int>>> adj(nr);
  for (int f = 0; f < nf; ++f) adj[flabel[f]].push_back({sk.face_comp[f], f});
  for (int j = 0; j < nl; ++j) {
    adj[loop_sides[j].first].push_back({nc + j, 0});
    adj[loop_sides[j].second].push_back({nc + j, 1});
  }

  std::vector<int> rsign(nr, 0);
  std::vector<RawFace> rface(nr);
  std::vector<char> owned(nr, 0), seen(nc + nl, 0);
  std::vector<int> comp_outer(nc, -1), comp_parent(nc, -1), loop_parent(nl, -1);
  auto face_sign = [&](int f) {
    int a = sk.face_arcs[f][0];
    return detail::arc_sign_of(sk.colors[sk.arc_disc[a]], sk.arc_index[a]);
  };
  std::deque<int> queue;
  auto own = [&](int r, RawFace rf, int s) {
    if (owned[r]) throw std::logic_error("region labels are not planar");
    owned[r] = 1;
    rface[r] = rf;
    rsign[r] = s;
    queue.push_back(r);
  };
  const int root = sk.disc_comp[0];
  seen[root] = 1;
  for (int f : sk.comp_faces[root])
    own(flabel[f], RawFace::arc(sk.arc_disc[sk.face_arcs[f][0]], sk.arc_index[sk.face_arcs[f][0]]), face_sign(f));
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (auto [sep, side] : adj[r]) {
      if (seen[sep]) continue;
      seen[sep] = 1;
      if (sep < nc) {
        comp_parent[sep] = r;
        for (int f : sk.comp_faces[sep])
          if (flabel[f] == r && comp_outer[sep] < 0) comp_outer[sep] = f;
        for (int f : sk.comp_faces[sep]) {
          if (f == comp_outer[sep]) continue;
          int a = sk.face_arcs[f][0];
          own(flabel[f], RawFace::arc(sk.arc_disc[a], sk.arc_index[a]), face_sign(f));
        }
      } else {
        const int j = sep - nc;
        loop_parent[j] = r;
        int other = side == 0 ? loop_sides[j].second : loop_sides[j].first;
        own(other, RawFace::inside(j), -rsign[r]);
      }
    }
  }

  RawTangle raw;
  raw.external = ext;
  raw.internal = internal;
  raw.strings = strings;
  for (int j = 0; j < nl; ++j) {
    if (loop_parent[j] < 0) throw std::logic_error("loop not reachable from the root");
    raw.loops.push_back({rface[loop_parent[j]], rsign[loop_parent[j]] > 0});
  }
  for (int c = 0; c < nc; ++c) {
    if (c == root) continue;
    if (comp_parent[c] < 0) throw std::logic_error("component not reachable from the root");
    int a = sk.face_arcs[comp_outer[c]][0];
    raw.placements.push_back(
        {sk.comp_discs[c][0], Dart{sk.arc_disc[a], sk.arc_index[a]}, rface[comp_parent[c]]});
  }
  return PlanarTangle::from_raw(raw);
}

PlanarTangle compose_at(const PlanarTangle& T, int i, const PlanarTangle& S) {
  if (i < 1 || i > T.num_internal()) throw std::out_of_range("composition slot out of range");
  if (!(T.color(i) == S.external()))
    throw std::invalid_argument("colour mismatch at slot " + std::to_string(i) + ": " + T.color(i).str() +
                                " vs " + S.external().str());
  const int nT = T.num_internal(), nS = S.num_internal();
  const int k = T.color(i).k;

  // Result disc of each source disc; -1 for the glued pair.
  std::vector<int> tdisc(nT + 1), sdisc(nS + 1, -1);
  for (int d = 0; d <= nT; ++d) tdisc[d] = d < i ? d : (d == i ? -1 : d + nS - 1);
  for (int d = 1; d <= nS; ++d) sdisc[d] = i - 1 + d;
  std::vector<Color> internal;
  for (int d = 1; d < i; ++d) internal.push_back(T.color(d));
  for (int d = 1; d <= nS; ++d) internal.push_back(S.color(d));
  for (int d = i + 1; d <= nT; ++d) internal.push_back(T.color(d));

  // Chase strings across the erased boundary.
  std::vector<char> glued_seen(2 * k, 0);
  std::vector<std::pair<Dart, Dart>> strings;
  // side 0 = T, 1 = S; returns the far end as a result dart
  auto chase = [&](int side, Dart x) -> Dart {
    for (;;) {
      if (side == 0) {
        Dart y = T.mate(x);
        if (y.disc != i) return {tdisc[y.disc], y.pos};
        glued_seen[y.pos] = 1;
        side = 1;
        x = {0, y.pos};
      } else {
        Dart y = S.mate(x);
        if (y.disc != 0) return {sdisc[y.disc], y.pos};
        glued_seen[y.pos] = 1;
        side = 0;
        x = {i, y.pos};
      }
    }
  };
  for (int d = 0; d <= nT; ++d) {
    if (d == i) continue;
    for (int p = 0; p < T.npoints(d); ++p) {
      Dart a{tdisc[d], p};
      Dart b = chase(0, {d, p});
      if (a < b) strings.push_back({a, b});
    }
  }
  for (int d = 1; d <= nS; ++d)
    for (int p = 0; p < S.npoints(d); ++p) {
      Dart a{sdisc[d], p};
      Dart b = chase(1, {d, p});
      if (a < b) strings.push_back({a, b});
    }

  // Region atoms: T faces, T loop insides, S faces, S loop insides.
  const int fT = T.num_faces(), lT = T.num_loops(), fS = S.num_faces(), lS = S.num_loops();
  const int offS = fT + lT;
  UnionFind uf(offS + fS + lS);
  auto atomT = [&](Region r) { return r.is_loop ? fT + r.id : r.id; };
  auto atomS = [&](Region r) { return offS + (r.is_loop ? fS + r.id : r.id); };
  for (int c = 0; c < T.num_components(); ++c)
    if (T.component_outer_face(c) >= 0) uf.unite(T.component_outer_face(c), atomT(T.component_parent(c)));
  for (int c = 0; c < S.num_components(); ++c)
    if (S.component_outer_face(c) >= 0)
      uf.unite(offS + S.component_outer_face(c), atomS(S.component_parent(c)));
  for (int a = 0; a < T.narcs(i); ++a)
    uf.unite(T.face_of_arc(T.arc_id(i, a)), offS + S.face_of_arc(S.arc_id(0, a)));

  std::vector<std::pair<int, int>> loops;
  for (int j = 0; j < lT; ++j) loops.push_back({uf.find(atomT(T.loop_parent(j))), uf.find(fT + j)});
  for (int j = 0; j < lS; ++j) loops.push_back({uf.find(atomS(S.loop_parent(j))), uf.find(offS + fS + j)});
  for (int p = 0; p < 2 * k; ++p) {
    if (glued_seen[p]) continue;
    // closed curve through glued points
    int q = p;
    do {
      glued_seen[q] = 1;
      Dart s = S.mate({0, q});
      glued_seen[s.pos] = 1;
      q = T.mate({i, s.pos}).pos;
    } while (q != p);
    int left = T.face_of_arc(T.arc_id(i, (p + 2 * k - 1) % (2 * k)));
    int right = T.face_of_arc(T.arc_id(i, p));
    loops.push_back({uf.find(left), uf.find(right)});
  }

  std::vector<Color> cols{T.external()};
  cols.insert(cols.end(), internal.begin(), internal.end());
  std::vector<int> label;
  for (int d = 0; d < static_cast<int>(cols.size()); ++d) {
    const int na = detail::narcs_of(cols[d]);
    for (int a = 0; a < na; ++a) {
      int atom;
      if (d < i) atom = T.face_of_arc(T.arc_id(d, a));
      else if (d < i + nS) atom = offS + S.face_of_arc(S.arc_id(d - i + 1, a));
      else atom = T.face_of_arc(T.arc_id(d - nS + 1, a));
      label.push_back(uf.find(atom));
    }
  }
  // compact labels
  std::vector<int> ids(offS + fS + lS, -1);
  int next = 0;
  auto compact = [&](int x) {
    if (ids[x] < 0) ids[x] = next++;
    return ids[x];
  };
  for (auto& x : label) x = compact(x);
  for (auto& [a, b] : loops) {
    a = compact(a);
    b = compact(b);
  }
  return assemble_tangle(T.external(), internal, strings, label, loops);
}

}  // namespace plancalc
