#include "plancalc/tangle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tangle_internal.hpp"

namespace plancalc {

std::string Color::str() const { return "(" + std::to_string(k) + (eps > 0 ? ",+)" : ",-)"); }

namespace detail {

void Skeleton::build(std::vector<Color> cols, const std::vector<std::pair<Dart, Dart>>& strings) {
  colors = std::move(cols);
  const int nd = static_cast<int>(colors.size());
  poff.assign(nd + 1, 0);
  aoff.assign(nd + 1, 0);
  for (int d = 0; d < nd; ++d) {
    if (colors[d].k < 0) throw TangleError("colour", "negative k at disc " + std::to_string(d));
    if (colors[d].eps != 1 && colors[d].eps != -1) throw TangleError("colour", "sign must be + or -");
    poff[d + 1] = poff[d] + 2 * colors[d].k;
    aoff[d + 1] = aoff[d] + narcs_of(colors[d]);
  }
  const int np = poff[nd], na = aoff[nd];
  point_disc.resize(np);
  point_index.resize(np);
  arc_disc.resize(na);
  arc_index.resize(na);
  for (int d = 0; d < nd; ++d) {
    for (int p = 0; p < 2 * colors[d].k; ++p) {
      point_disc[poff[d] + p] = d;
      point_index[poff[d] + p] = p;
    }
    for (int i = 0; i < narcs_of(colors[d]); ++i) {
      arc_disc[aoff[d] + i] = d;
      arc_index[aoff[d] + i] = i;
    }
  }
  mate.assign(np, -1);
  auto gid = [&](const Dart& x) {
    if (x.disc < 0 || x.disc >= nd || x.pos < 0 || x.pos >= 2 * colors[x.disc].k)
      throw TangleError("dart out of range",
                        "dart [" + std::to_string(x.disc) + "," + std::to_string(x.pos + 1) + "]");
    return poff[x.disc] + x.pos;
  };
  for (const auto& [a, b] : strings) {
    int ga = gid(a), gb = gid(b);
    if (ga == gb || mate[ga] >= 0 || mate[gb] >= 0)
      throw TangleError("marked point unmatched", "a marked point is the end of more than one string");
    mate[ga] = gb;
    mate[gb] = ga;
  }
  for (int p = 0; p < np; ++p)
    if (mate[p] < 0)
      throw TangleError("marked point unmatched", "point [" + std::to_string(point_disc[p]) + "," +
                                                      std::to_string(point_index[p] + 1) + "] has no string");

  arc_face.assign(na, -1);
  face_arcs.clear();
  for (int a = 0; a < na; ++a) {
    if (arc_face[a] >= 0) continue;
    const int f = static_cast<int>(face_arcs.size());
    face_arcs.emplace_back();
    int x = a;
    do {
      if (arc_face[x] >= 0) throw TangleError("non-planarity", "face traversal is not a cycle");
      arc_face[x] = f;
      face_arcs[f].push_back(x);
      x = next_arc(x);
    } while (x != a);
  }

  UnionFind uf(nd);
  for (int p = 0; p < np; ++p) uf.unite(point_disc[p], point_disc[mate[p]]);
  disc_comp.assign(nd, -1);
  comp_discs.clear();
  for (int d = 0; d < nd; ++d) {
    int r = uf.find(d);
    if (disc_comp[r] < 0) {
      disc_comp[r] = static_cast<int>(comp_discs.size());
      comp_discs.emplace_back();
    }
    disc_comp[d] = disc_comp[r];
    comp_discs[disc_comp[d]].push_back(d);
  }
  comp_faces.assign(comp_discs.size(), {});
  face_comp.assign(face_arcs.size(), -1);
  for (int f = 0; f < static_cast<int>(face_arcs.size()); ++f) {
    face_comp[f] = disc_comp[arc_disc[face_arcs[f][0]]];
    comp_faces[face_comp[f]].push_back(f);
  }
  for (std::size_t c = 0; c < comp_discs.size(); ++c) {
    int v = static_cast<int>(comp_discs[c].size()), pts = 0;
    for (int d : comp_discs[c]) pts += 2 * colors[d].k;
    int e = pts / 2, f = static_cast<int>(comp_faces[c].size());
    if (v - e + f != 2)
      throw TangleError("non-planarity", "component of disc " + std::to_string(comp_discs[c][0]) +
                                             " has Euler characteristic " + std::to_string(v - e + f));
  }
}

int Skeleton::next_arc(int a) const {
  const int d = arc_disc[a], i = arc_index[a];
  const int k = colors[d].k;
  if (k == 0) return a;
  const int exitp = d == 0 ? i : (i + 1) % (2 * k);
  const int q = mate[poff[d] + exitp];
  const int d2 = point_disc[q], q2 = point_index[q];
  if (d2 != 0) return aoff[d2] + q2;
  const int k2 = colors[0].k;
  return aoff[0] + (q2 + 2 * k2 - 1) % (2 * k2);
}

}  // namespace detail

using detail::Skeleton;

Dart PlanarTangle::point(int gid) const {
  int d = static_cast<int>(std::upper_bound(poff_.begin(), poff_.end(), gid) - poff_.begin()) - 1;
  return {d, gid - poff_[d]};
}

Dart PlanarTangle::arc(int gid) const {
  int d = static_cast<int>(std::upper_bound(aoff_.begin(), aoff_.end(), gid) - aoff_.begin()) - 1;
  return {d, gid - aoff_[d]};
}

int PlanarTangle::arc_sign(int d, int i) const { return detail::arc_sign_of(colors_[d], i); }

int PlanarTangle::region_sign(Region r) const {
  if (!r.is_loop) return face_sign_[r.id];
  return -region_sign(loop_parent_[r.id]);
}

const std::vector<int>& PlanarTangle::child_components(Region r) const {
  return r.is_loop ? loop_child_comps_[r.id] : face_child_comps_[r.id];
}

const std::vector<int>& PlanarTangle::child_loops(Region r) const {
  return r.is_loop ? loop_child_loops_[r.id] : face_child_loops_[r.id];
}

PlanarTangle PlanarTangle::from_raw(const RawTangle& raw) {
  Skeleton sk;
  std::vector<Color> cols;
  cols.push_back(raw.external);
  cols.insert(cols.end(), raw.internal.begin(), raw.internal.end());
  sk.build(std::move(cols), raw.strings);

  PlanarTangle t{Tag{}};
  t.colors_ = sk.colors;
  t.poff_ = sk.poff;
  t.aoff_ = sk.aoff;
  t.mate_ = sk.mate;
  t.arc_face_ = sk.arc_face;
  t.face_arcs_ = sk.face_arcs;
  t.face_comp_ = sk.face_comp;
  t.disc_comp_ = sk.disc_comp;
  t.comp_discs_ = sk.comp_discs;
  t.comp_faces_ = sk.comp_faces;

  const int nf = t.num_faces();
  t.face_sign_.assign(nf, 0);
  for (int f = 0; f < nf; ++f) {
    for (int a : t.face_arcs_[f]) {
      int s = detail::arc_sign_of(sk.colors[sk.arc_disc[a]], sk.arc_index[a]);
      if (t.face_sign_[f] == 0) t.face_sign_[f] = s;
      else if (t.face_sign_[f] != s)
        throw TangleError("shading", "region adjacent to arc [" + std::to_string(sk.arc_disc[a]) + "," +
                                         std::to_string(sk.arc_index[a] + 1) + "] has inconsistent sign");
    }
  }

  const int nc = t.num_components();
  const int nl = static_cast<int>(raw.loops.size());
  auto resolve_raw = [&](const RawFace& rf) -> Region {
    if (rf.is_loop) {
      if (rf.loop < 0 || rf.loop >= nl) throw TangleError("nesting", "loop reference out of range");
      return {true, rf.loop};
    }
    if (rf.disc < 0 || rf.disc >= t.num_discs() || rf.pos < 0 || rf.pos >= t.narcs(rf.disc))
      throw TangleError("dart out of range", "face reference arc out of range");
    return {false, t.arc_face_[t.aoff_[rf.disc] + rf.pos]};
  };

  // Raw nesting; components may be placed in outer faces of other components.
  std::vector<Region> cparent(nc, Region{false, t.arc_face_[t.aoff_[0] + t.narcs(0) - 1]});
  t.comp_outer_.assign(nc, -1);
  std::vector<char> placed(nc, 0);
  for (const auto& pl : raw.placements) {
    if (pl.disc < 1 || pl.disc >= t.num_discs()) throw TangleError("nesting", "placement disc out of range");
    int c = t.disc_comp_[pl.disc];
    if (c == t.disc_comp_[0]) throw TangleError("nesting", "placement given for the root component");
    if (placed[c]) throw TangleError("nesting", "component placed twice");
    placed[c] = 1;
    if (pl.outer.disc < 0 || pl.outer.disc >= t.num_discs() || pl.outer.pos < 0 ||
        pl.outer.pos >= t.narcs(pl.outer.disc))
      throw TangleError("dart out of range", "outer arc out of range");
    int f = t.arc_face_[t.aoff_[pl.outer.disc] + pl.outer.pos];
    if (t.face_comp_[f] != c) throw TangleError("nesting", "outer arc not on the placed component");
    t.comp_outer_[c] = f;
    cparent[c] = resolve_raw(pl.face);
  }
  const int root = t.disc_comp_[0];
  for (int c = 0; c < nc; ++c) {
    if (c == root || placed[c]) continue;
    int d = t.comp_discs_[c][0];
    t.comp_outer_[c] = t.arc_face_[t.aoff_[d] + t.narcs(d) - 1];
  }
  std::vector<Region> lparent(nl);
  for (int j = 0; j < nl; ++j) lparent[j] = resolve_raw(raw.loops[j].face);

  // Owner of a region: ('c', comp) or ('l', loop).
  auto owner = [&](Region r) -> std::pair<char, int> {
    if (r.is_loop) return {'l', r.id};
    return {'c', t.face_comp_[r.id]};
  };
  // Lift references to outer faces up to the owning component's parent.
  auto normalize = [&](Region r) {
    for (int guard = 0;; ++guard) {
      if (guard > nc + 1) throw TangleError("nesting", "placement cycle");
      if (r.is_loop) return r;
      int c = t.face_comp_[r.id];
      if (c == root || t.comp_outer_[c] != r.id) return r;
      r = cparent[c];
    }
  };
  t.comp_parent_.assign(nc, Region{});
  for (int c = 0; c < nc; ++c)
    if (c != root) t.comp_parent_[c] = normalize(cparent[c]);
  t.loop_parent_.resize(nl);
  for (int j = 0; j < nl; ++j) t.loop_parent_[j] = normalize(lparent[j]);

  // Acyclicity of the nesting tree.
  for (int c = 0; c < nc; ++c) {
    if (c == root) continue;
    std::pair<char, int> node{'c', c};
    for (int guard = 0; !(node.first == 'c' && node.second == root); ++guard) {
      if (guard > nc + nl) throw TangleError("nesting", "nesting cycle");
      Region r = node.first == 'c' ? t.comp_parent_[node.second] : t.loop_parent_[node.second];
      node = owner(r);
    }
  }
  for (int j = 0; j < nl; ++j) {
    std::pair<char, int> node{'l', j};
    for (int guard = 0; !(node.first == 'c' && node.second == root); ++guard) {
      if (guard > nc + nl) throw TangleError("nesting", "nesting cycle");
      Region r = node.first == 'c' ? t.comp_parent_[node.second] : t.loop_parent_[node.second];
      node = owner(r);
    }
  }

  t.loop_cw_.resize(nl);
  for (int j = 0; j < nl; ++j) {
    bool want = t.region_sign(t.loop_parent_[j]) > 0;
    if (static_cast<bool>(raw.loops[j].cw) != want)
      throw TangleError("shading", "loop " + std::to_string(j + 1) + " orientation disagrees with its region");
    t.loop_cw_[j] = want;
  }
  for (int c = 0; c < nc; ++c) {
    if (c == root) continue;
    if (t.face_sign_[t.comp_outer_[c]] != t.region_sign(t.comp_parent_[c]))
      throw TangleError("shading", "component of disc " + std::to_string(t.comp_discs_[c][0]) +
                                       " sits in a region of the opposite sign");
  }

  t.face_child_comps_.assign(nf, {});
  t.face_child_loops_.assign(nf, {});
  t.loop_child_comps_.assign(nl, {});
  t.loop_child_loops_.assign(nl, {});
  for (int c = 0; c < nc; ++c) {
    if (c == root) continue;
    Region r = t.comp_parent_[c];
    (r.is_loop ? t.loop_child_comps_[r.id] : t.face_child_comps_[r.id]).push_back(c);
  }
  for (int j = 0; j < nl; ++j) {
    Region r = t.loop_parent_[j];
    (r.is_loop ? t.loop_child_loops_[r.id] : t.face_child_loops_[r.id]).push_back(j);
  }
  t.build_code();
  return t;
}

std::string PlanarTangle::region_code(Region r) const {
  std::vector<std::string> parts;
  for (int c : child_components(r)) parts.push_back(component_code(c));
  for (int j : child_loops(r)) parts.push_back(loop_code(j));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto& p : parts) out += p;
  return out;
}

std::string PlanarTangle::component_code(int c) const {
  std::string out = "C" + std::to_string(comp_discs_[c][0]);
  if (comp_outer_[c] >= 0) out += "o" + std::to_string(face_arcs_[comp_outer_[c]][0]);
  for (int f : comp_faces_[c]) {
    if (f == comp_outer_[c]) continue;
    std::string inner = region_code({false, f});
    if (!inner.empty()) out += "F" + std::to_string(face_arcs_[f][0]) + "[" + inner + "]";
  }
  return out + ";";
}

std::string PlanarTangle::loop_code(int j) const {
  return std::string("L") + (loop_cw_[j] ? "+" : "-") + "[" + region_code({true, j}) + "]";
}

void PlanarTangle::build_code() {
  std::ostringstream os;
  os << "P1|";
  for (const auto& c : colors_) os << c.k << (c.eps > 0 ? '+' : '-') << ',';
  os << '|';
  for (int p = 0; p < total_points(); ++p)
    if (mate_[p] > p) os << p << '-' << mate_[p] << ',';
  os << '|' << component_code(disc_comp_[0]);
  code_ = os.str();
}

std::string PlanarTangle::code_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code_.size() * 2);
  for (unsigned char ch : code_) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

RawTangle PlanarTangle::to_raw() const {
  RawTangle raw;
  raw.external = colors_[0];
  raw.internal = internal();
  for (int p = 0; p < total_points(); ++p)
    if (mate_[p] > p) raw.strings.emplace_back(point(p), point(mate_[p]));
  auto face_of = [&](Region r) {
    if (r.is_loop) return RawFace::inside(r.id);
    Dart a = arc(face_arcs_[r.id][0]);
    return RawFace::arc(a.disc, a.pos);
  };
  for (int j = 0; j < num_loops(); ++j) raw.loops.push_back({face_of(loop_parent_[j]), loop_cw_[j] != 0});
  for (int c = 0; c < num_components(); ++c) {
    if (c == disc_comp_[0]) continue;
    raw.placements.push_back({comp_discs_[c][0], arc(face_arcs_[comp_outer_[c]][0]), face_of(comp_parent_[c])});
  }
  return raw;
}

Validation validate(const RawTangle& raw) {
  try {
    PlanarTangle::from_raw(raw);
    return {};
  } catch (const TangleError& e) {
    return {false, e.clause, e.what()};
  }
}

Shading derive_shading(const RawTangle& raw) {
  // Colours are relaxed to '+' for internal discs; signs are re-derived per face.
  Skeleton sk;
  std::vector<Color> cols;
  cols.push_back(raw.external);
  for (auto c : raw.internal) cols.push_back({c.k, 1});
  sk.build(cols, raw.strings);
  const int nd = static_cast<int>(cols.size());
  const int nf = static_cast<int>(sk.face_arcs.size());
  std::vector<int> dsign(nd, 0), fsign(nf, 0);
  dsign[0] = raw.external.eps;
  // Relative sign of arc a given the disc sign s.
  auto asign = [&](int a, int s) { return detail::arc_sign_of({sk.colors[sk.arc_disc[a]].k, s}, sk.arc_index[a]); };
  bool changed = true;
  auto set_face = [&](int f, int s) {
    if (fsign[f] == 0) {
      fsign[f] = s;
      changed = true;
    } else if (fsign[f] != s) {
      throw TangleError("shading", "orientations induced by bounding strings disagree");
    }
  };
  auto propagate = [&]() {
    while (changed) {
      changed = false;
      for (int f = 0; f < nf; ++f)
        for (int a : sk.face_arcs[f]) {
          int d = sk.arc_disc[a];
          if (dsign[d] != 0) set_face(f, asign(a, dsign[d]));
          else if (fsign[f] != 0) {
            dsign[d] = asign(a, 1) == fsign[f] ? 1 : -1;
            changed = true;
          }
        }
    }
  };
  propagate();
  // Components not reached from the root take their sign from the placement.
  auto placement_sign = [&](int c) -> int {
    for (const auto& pl : raw.placements) {
      if (pl.disc < 1 || pl.disc >= nd || sk.disc_comp[pl.disc] != c) continue;
      if (pl.face.is_loop) return 0;
      int f = sk.arc_face[sk.aoff[pl.face.disc] + pl.face.pos];
      if (fsign[f] == 0) return 0;
      int outer = sk.arc_face[sk.aoff[pl.outer.disc] + pl.outer.pos];
      int d = sk.arc_disc[sk.face_arcs[outer][0]];
      return asign(sk.face_arcs[outer][0], 1) == fsign[f] ? d : -d;
    }
    return 0;
  };
  for (int round = 0; round < nd; ++round)
    for (std::size_t c = 0; c < sk.comp_discs.size(); ++c) {
      if (dsign[sk.comp_discs[c][0]] != 0) continue;
      int r = placement_sign(static_cast<int>(c));
      if (r == 0) continue;
      dsign[std::abs(r)] = r > 0 ? 1 : -1;
      changed = true;
      propagate();
    }
  for (int d = 1; d < nd; ++d)
    if (dsign[d] == 0) dsign[d] = raw.internal[d - 1].eps;
  changed = true;
  propagate();
  return {sk.arc_face, fsign, dsign};
}

PlanarTangle identity_tangle(Color c) {
  RawTangle raw;
  raw.external = c;
  raw.internal = {c};
  for (int p = 0; p < 2 * c.k; ++p) raw.strings.push_back({{0, p}, {1, p}});
  if (c.k == 0) raw.placements.push_back({1, {1, 0}, RawFace::arc(0, 0)});
  return PlanarTangle::from_raw(raw);
}

namespace {
RawFace map_face(const RawFace& f, const std::vector<Color>& cols, bool reflect, const std::vector<int>& dmap) {
  if (f.is_loop) return f;
  int d = dmap[f.disc];
  int pos = f.pos;
  int k = cols[f.disc].k;
  if (reflect && k > 0) pos = ((2 * k - 2 - pos) % (2 * k) + 2 * k) % (2 * k);
  return RawFace::arc(d, pos);
}
}  // namespace

PlanarTangle star(const PlanarTangle& T) {
  RawTangle raw = T.to_raw();
  std::vector<Color> cols{raw.external};
  cols.insert(cols.end(), raw.internal.begin(), raw.internal.end());
  std::vector<int> ident(cols.size());
  std::iota(ident.begin(), ident.end(), 0);
  auto refl = [&](Dart x) { return Dart{x.disc, 2 * cols[x.disc].k - 1 - x.pos}; };
  for (auto& [a, b] : raw.strings) {
    a = refl(a);
    b = refl(b);
  }
  for (auto& l : raw.loops) l.face = map_face(l.face, cols, true, ident);
  for (auto& pl : raw.placements) {
    RawFace o = map_face(RawFace::arc(pl.outer.disc, pl.outer.pos), cols, true, ident);
    pl.outer = {o.disc, o.pos};
    pl.face = map_face(pl.face, cols, true, ident);
  }
  return PlanarTangle::from_raw(raw);
}

PlanarTangle relabel(const PlanarTangle& T, const std::vector<int>& sigma) {
  const int n = T.num_internal();
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> seen(n + 1, 0);
  for (int s : sigma) {
    if (s < 1 || s > n || seen[s]) throw std::invalid_argument("not a permutation of the internal discs");
    seen[s] = 1;
  }
  // old disc sigma[j-1] becomes new disc j
  std::vector<int> dmap(n + 1, 0);
  for (int j = 1; j <= n; ++j) dmap[sigma[j - 1]] = j;
  RawTangle raw = T.to_raw();
  std::vector<Color> cols{raw.external};
  cols.insert(cols.end(), raw.internal.begin(), raw.internal.end());
  for (int j = 1; j <= n; ++j) raw.internal[j - 1] = cols[sigma[j - 1]];
  for (auto& [a, b] : raw.strings) {
    a.disc = dmap[a.disc];
    b.disc = dmap[b.disc];
  }
  for (auto& l : raw.loops) l.face = map_face(l.face, cols, false, dmap);
  for (auto& pl : raw.placements) {
    pl.disc = dmap[pl.disc];
    pl.outer.disc = dmap[pl.outer.disc];
    pl.face = map_face(pl.face, cols, false, dmap);
  }
  return PlanarTangle::from_raw(raw);
}

}  // namespace plancalc
