#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plancalc {

struct Color {
  int k = 0;
  int eps = 1;  // +1 or -1
  bool operator==(const Color&) const = default;
  std::string str() const;
};

// 0-based; disc 0 is the external disc.
struct Dart {
  int disc = 0;
  int pos = 0;
  bool operator==(const Dart&) const = default;
  auto operator<=>(const Dart&) const = default;
};

// Names the clause that failed: "marked point unmatched", "dart out of range",
// "shading", "colour", "non-planarity", "nesting".
struct TangleError : std::runtime_error {
  TangleError(std::string clause, const std::string& msg)
      : std::runtime_error(clause + ": " + msg), clause(std::move(clause)) {}
  std::string clause;
};

// Malformed JSON or a document that does not follow the wire schema.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A region reference in raw form: the face containing arc (disc, pos), or the
// inside of loop `loop`. Arc pos lies between points pos and pos+1.
struct RawFace {
  bool is_loop = false;
  int disc = 0;
  int pos = 0;
  int loop = 0;
  static RawFace arc(int d, int p) { return {false, d, p, 0}; }
  static RawFace inside(int j) { return {true, 0, 0, j}; }
};

struct RawLoop {
  RawFace face;
  bool cw = true;
};

// Nesting of a non-root component: `outer` is any arc of its outer face.
struct RawPlacement {
  int disc = 0;
  Dart outer;
  RawFace face;
};

struct RawTangle {
  Color external;
  std::vector<Color> internal;
  std::vector<std::pair<Dart, Dart>> strings;
  std::vector<RawLoop> loops;
  std::vector<RawPlacement> placements;
};

// Normalized region reference: face id of the tangle, or a loop inside.
struct Region {
  bool is_loop = false;
  int id = 0;
  bool operator==(const Region&) const = default;
  auto operator<=>(const Region&) const = default;
};

// Isotopy class of a shaded planar tangle, stored as a rooted combinatorial
// map per connected component plus a nesting tree of components and loops.
// Loops sit in a region of sign s and are clockwise iff s = +.
class PlanarTangle {
 public:
  PlanarTangle() : PlanarTangle(from_raw(RawTangle{})) {}
  // Validates and normalizes; throws TangleError.
  static PlanarTangle from_raw(const RawTangle& raw);
  RawTangle to_raw() const;

  const Color& external() const { return colors_[0]; }
  std::vector<Color> internal() const { return {colors_.begin() + 1, colors_.end()}; }
  int num_internal() const { return static_cast<int>(colors_.size()) - 1; }
  int num_discs() const { return static_cast<int>(colors_.size()); }
  const Color& color(int d) const { return colors_[d]; }
  int npoints(int d) const { return 2 * colors_[d].k; }
  int narcs(int d) const { return colors_[d].k == 0 ? 1 : 2 * colors_[d].k; }
  int total_points() const { return poff_.back(); }
  int total_arcs() const { return aoff_.back(); }

  int point_id(int d, int p) const { return poff_[d] + p; }
  Dart point(int gid) const;
  int arc_id(int d, int i) const { return aoff_[d] + i; }
  Dart arc(int gid) const;
  int mate_id(int gid) const { return mate_[gid]; }
  Dart mate(Dart x) const { return point(mate_[point_id(x.disc, x.pos)]); }
  int arc_sign(int d, int i) const;

  int num_faces() const { return static_cast<int>(face_arcs_.size()); }
  int face_of_arc(int gid) const { return arc_face_[gid]; }
  // Arcs in traversal order (face on the left), starting from the minimum.
  const std::vector<int>& face_arcs(int f) const { return face_arcs_[f]; }
  int face_sign(int f) const { return face_sign_[f]; }
  int face_component(int f) const { return face_comp_[f]; }

  int num_components() const { return static_cast<int>(comp_discs_.size()); }
  int component_of_disc(int d) const { return disc_comp_[d]; }
  const std::vector<int>& component_discs(int c) const { return comp_discs_[c]; }
  const std::vector<int>& component_faces(int c) const { return comp_faces_[c]; }
  int component_outer_face(int c) const { return comp_outer_[c]; }  // -1 for the root
  Region component_parent(int c) const { return comp_parent_[c]; }

  int num_loops() const { return static_cast<int>(loop_parent_.size()); }
  Region loop_parent(int j) const { return loop_parent_[j]; }
  bool loop_cw(int j) const { return loop_cw_[j]; }

  int region_sign(Region r) const;
  // Non-root components and loops whose parent is r.
  const std::vector<int>& child_components(Region r) const;
  const std::vector<int>& child_loops(Region r) const;

  const std::string& code() const { return code_; }
  std::string code_hex() const;
  bool operator==(const PlanarTangle& o) const { return code_ == o.code_; }
  bool operator!=(const PlanarTangle& o) const { return code_ != o.code_; }

 private:
  struct Tag {};
  explicit PlanarTangle(Tag) {}
  std::vector<Color> colors_;
  std::vector<int> poff_, aoff_;
  std::vector<int> mate_;
  std::vector<int> arc_face_;
  std::vector<std::vector<int>> face_arcs_;
  std::vector<int> face_sign_, face_comp_;
  std::vector<int> disc_comp_;
  std::vector<std::vector<int>> comp_discs_, comp_faces_;
  std::vector<int> comp_outer_;
  std::vector<Region> comp_parent_;
  std::vector<Region> loop_parent_;
  std::vector<char> loop_cw_;
  std::vector<std::vector<int>> face_child_comps_, face_child_loops_, loop_child_comps_, loop_child_loops_;
  std::string code_;

  void build_code();
  std::string region_code(Region r) const;
  std::string component_code(int c) const;
  std::string loop_code(int j) const;
  friend class TangleAssembler;
};

// Result of validate(): empty clause means ok.
struct Validation {
  bool ok = true;
  std::string clause;
  std::string message;
};
Validation validate(const RawTangle& raw);

// Per-face signs and per-disc signs derived from the strings alone.
struct Shading {
  std::vector<int> arc_face;
  std::vector<int> face_sign;
  std::vector<int> disc_sign;
};
// Infers disc signs from the strings and the external sign; throws on inconsistency.
Shading derive_shading(const RawTangle& raw);

PlanarTangle identity_tangle(Color c);
// Glue S into internal disc i (1-based) of T.
PlanarTangle compose_at(const PlanarTangle& T, int i, const PlanarTangle& S);
PlanarTangle star(const PlanarTangle& T);
// New disc j is old disc sigma[j-1] (1-based values).
PlanarTangle relabel(const PlanarTangle& T, const std::vector<int>& sigma);

// Builds a tangle from a disc/string skeleton plus a region label per arc and
// loops given by the labels of their two sides. Labels must describe a
// planar arrangement; nesting and loop orientation are inferred.
PlanarTangle assemble_tangle(const Color& ext, const std::vector<Color>& internal,
                             const std::vector<std::pair<Dart, Dart>>& strings, const std::vector<int>& arc_label,
                             const std::vector<std::pair<int, int>>& loop_sides);

std::string tangle_to_json(const PlanarTangle& T);
PlanarTangle tangle_from_json(const std::string& text);
RawTangle raw_from_json(const std::string& text);
std::string raw_to_json(const RawTangle& raw);

}  // namespace plancalc
