#pragma once

#include <numeric>
#include <vector>

#include "plancalc/tangle.hpp"

namespace plancalc::detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

inline int narcs_of(const Color& c) { return c.k == 0 ? 1 : 2 * c.k; }
inline int arc_sign_of(const Color& c, int i) {
  if (c.k == 0) return c.eps;
  return (i % 2 == 1) ? c.eps : -c.eps;
}

// Discs, strings and their faces, without nesting data.
struct Skeleton {
  std::vector<Color> colors;
  std::vector<int> poff, aoff;
  std::vector<int> mate;
  std::vector<int> arc_disc, arc_index;
  std::vector<int> point_disc, point_index;
  std::vector<int> arc_face;
  std::vector<std::vector<int>> face_arcs;
  std::vector<int> disc_comp;
  std::vector<std::vector<int>> comp_discs, comp_faces;
  std::vector<int> face_comp;

  // Throws TangleError for unmatched or out-of-range darts and Euler failures.
  // Faces are numbered by their minimum arc.
  void build(std::vector<Color> cols, const std::vector<std::pair<Dart, Dart>>& strings);
  int next_arc(int a) const;
};

}  // namespace plancalc::detail
