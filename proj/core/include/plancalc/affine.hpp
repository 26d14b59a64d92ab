#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "plancalc/planar_algebra.hpp"
#include "plancalc/tl.hpp"

namespace plancalc {

// psi^l(x) for x in P(m+n+l, eta). The representative rectangle has, clockwise
// from its marked corner: 2m outer points (left to right), l right-side wraps
// (top to bottom), 2n inner points (right to left), l left-side wraps (bottom
// to top). Right wrap r runs under the inner disc to left point N-1-r.
struct AffineMorphism {
  Color outer;  // (m, eta)
  Color inner;  // (n, eps)
  int level = 0;
  Element rep;
};

struct AffineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Colour of the representative: (m+n+l, eta). Throws AffineError when the
// parity of l does not match: l is even iff eta == eps.
Color affine_rep_color(Color outer, Color inner, int l);
bool affine_level_ok(Color outer, Color inner, int l);

// Templates; the internal discs carry the representatives.
// Level raise by 2 (a zig-zag of the last string). For m = n = l = 0 the
// template closes a contractible loop instead and carries `loop_sign`.
PlanarTangle raise_tangle(Color outer, Color inner, int l, int* loop_sign = nullptr);
// Disc 1: A's representative (outer -> mid at level la); disc 2: B's (mid -> inner at lb).
PlanarTangle compose_tangle(Color outer, Color mid, Color inner, int la, int lb);
// Jones projection on boundary points p, p+1 of a colour-c rectangle.
PlanarTangle boundary_e_tangle(Color c, int p);
// Inserts a cap at boundary points q, q+1: input colour (K-1, eps), output (K, eps).
PlanarTangle insert_cap_tangle(Color out, int q);
// Output point i meets input point (i + s) mod 2K.
PlanarTangle shift_tangle(Color in, int s);

// Isotopy class of a Temperley-Lieb affine diagram with fixed boundary: each
// string with its endpoints and signed winding around the inner disc, plus the
// numbers of contractible and non-contractible loops.
std::string annular_code(Color outer, Color inner, int l, const Matching& x);

struct HomLevel {
  int level = 0;
  int dim = 0;
  int space_dim = -1;    // dim P(m+n+l) for computed levels
  std::string source;    // "computed" or "inherited"
};

struct HomReport {
  Color outer, inner;
  int truncation = 0;
  int dim = 0;
  bool stable = false;
  std::vector<HomLevel> levels;
  std::string to_json() const;
};

class AffineCategory {
 public:
  // `budget` caps dim P(m+n+l) for levels computed directly.
  AffineCategory(std::shared_ptr<const PlanarAlgebra> P, int truncation, int budget = 128);

  const PlanarAlgebra& algebra() const { return *P_; }
  std::shared_ptr<const PlanarAlgebra> algebra_ptr() const { return P_; }
  int truncation() const { return L_; }
  int budget() const { return budget_; }

  AffineMorphism psi(int l, Color outer, Color inner, const Element& x) const;
  AffineMorphism identity(Color c) const;
  // R_(k,eps): (k,eps) -> (k,-eps); inner point j meets outer point j+1.
  AffineMorphism rotation(Color c) const;
  // Inverse of rotation(c): (k,-eps) -> (k,eps).
  AffineMorphism rotation_inverse(Color c) const;
  AffineMorphism zero(Color outer, Color inner, int l) const;

  AffineMorphism level_raise(const AffineMorphism& A, int l) const;
  AffineMorphism compose(const AffineMorphism& A, const AffineMorphism& B) const;
  AffineMorphism star(const AffineMorphism& A) const;
  AffineMorphism add(const AffineMorphism& A, const AffineMorphism& B) const;
  AffineMorphism scale(const Scalar& s, const AffineMorphism& A) const;

  // Equality in the hom space at the common level; throws AffineError when
  // that level exceeds the budget.
  bool equal(const AffineMorphism& A, const AffineMorphism& B) const;

  HomReport hom_space_dim(Color outer, Color inner) const;

  // Relation span at level l: E on right wraps minus E on left wraps.
  // nullptr when dim P(m+n+l) exceeds the budget.
  std::shared_ptr<const Echelon> relations(Color outer, Color inner, int l) const;
  // Same, plus the span of morphisms through weights below k (outer == inner colour).
  std::shared_ptr<const Echelon> lw_relations(Color c, int l) const;
  // Elements spanning the through-lower-weight subspace at level l.
  std::vector<Vec> hat_generators(Color c, int l) const;

  // Coordinates used by every rank computation: basis coordinates, or for a
  // trace-form quotient the pairings with its basis (G times the coordinates,
  // G invertible). Spans and ranks do not depend on the choice.
  Vec coords(const Element& x) const;
  Vec act_coords(const PlanarTangle& T, const std::vector<Element>& in) const;

  // Levels l <= L of the right parity, increasing.
  std::vector<int> levels(Color outer, Color inner) const;
  bool level_computable(Color outer, Color inner, int l) const;
  // P(l-1) is generated by its basic-construction ideal for both signs.
  bool saturated(int l) const;

 private:
  std::shared_ptr<const PlanarAlgebra> P_;
  const TLQuotient* quotient_ = nullptr;
  int L_;
  int budget_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const Echelon>> rel_cache_;
  mutable std::map<int, bool> sat_cache_;  // ideal fullness per k
};

// Lowest-weight algebra at (k,eps): hom((k,eps),(k,eps)) modulo morphisms
// through lower weights, at a level where the dimension is stable.
struct LWAlgebra {
  Color color;
  int level = 0;              // level of the basis representatives
  int dim = 0;
  bool stable = false;
  std::vector<int> level_dims;  // per admissible level up to L
  std::vector<Element> basis;   // representatives at `level`
  // mult[i][j] = coordinates of basis[i] * basis[j]; empty when not computed.
  std::vector<std::vector<Vec>> mult;
  std::vector<Vec> star;        // coordinates of star(basis[i])
  Field ring;
  std::string to_json() const;
};

// products = false skips the structure constants.
LWAlgebra lw_algebra(const AffineCategory& A, Color c, bool products = true);

struct IrrepReport {
  int radical_dim = 0;
  std::vector<int> blocks;  // matrix block sizes of the semisimple part
  std::string method;
};
// Artin-Wedderburn block sizes from the centre and the eigenvalue
// multiplicities of a generic central element acting on the algebra.
IrrepReport decompose_irreps(const LWAlgebra& alg);

struct BoundRow {
  int p = 0, k = 0, l = 0;
  int dim = 0;
  long long bound = 0;
  bool stable = false;
  bool ok = false;
};

struct WeightReport {
  int s = 0;
  int depth = 0;
  std::vector<std::pair<int, int>> lw_dims;  // (k, dim) for s < k <= s+2
  bool lw_vanishes = false;
  std::vector<BoundRow> bounds;
  std::vector<long long> dims;  // dim P(p,+) for p = 0..pmax
  bool root_increasing = false;
  bool root_bounded = false;    // dim P(p) <= (delta^2)^p
  std::string delta_sq;
  std::string to_json() const;
};

// Needs a finite depth. Bound rows cover p <= pbound and k <= s; the root
// sequence covers p <= pmax. `dim_of(p)` overrides P.dim for that sequence.
WeightReport weight_and_bounds(const AffineCategory& A, int pmax = 10, int pbound = 5, int kmax_depth = 6,
                               const std::function<long long(int)>& dim_of = {});

}  // namespace plancalc
