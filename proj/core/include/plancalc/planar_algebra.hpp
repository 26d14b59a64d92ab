#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plancalc/linalg.hpp"
#include "plancalc/tangle.hpp"

namespace plancalc {

enum class BuiltinKind {
  Multiplication,
  Inclusion,
  Unit,
  LeftCondExp,
  JonesProjection,
  Rotation,
  S,
  Sm,
  Wiggle,
  RightClosure,
  LeftClosure
};

// Colour conventions: multiplication (k,e),(k,e) -> (k,e) with disc 2 on top;
// inclusion (k,e) -> (k+1,e); jones_projection E_(k,e) in (k+1,e); rotation
// (k,e) -> (k,-e); S_m takes m discs (k,e) to (k+m-1,e) with disc 1 lowest;
// left_cond_exp (k,e) -> (k-1,-e); closures (k,e) -> (0,.).
PlanarTangle builtin_tangle(BuiltinKind kind, Color c, int m = 2);
BuiltinKind parse_builtin(const std::string& name);

// Coordinates in the basis of object_map(color).
struct Element {
  Color color;
  Vec coeffs;
  bool operator==(const Element& o) const { return color == o.color && coeffs == o.coeffs; }
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Scalar& s, const Element& a);
bool is_zero(const Element& x);

// Formal combination of tangles sharing one signature.
struct TangleLinComb {
  std::vector<std::pair<Scalar, PlanarTangle>> terms;
};

class PlanarAlgebra {
 public:
  virtual ~PlanarAlgebra() = default;
  virtual std::string name() const = 0;
  virtual Field ring() const = 0;
  virtual int dim(Color c) const = 0;
  // inputs[j] lives in object_map(T.color(j+1)).
  virtual Element act(const PlanarTangle& T, const std::vector<Element>& inputs) const = 0;
  virtual std::optional<std::pair<Scalar, Scalar>> declared_modulus() const { return std::nullopt; }
  virtual bool has_star() const { return false; }
  virtual Element star(const Element& x) const;
  virtual std::string basis_label(Color c, int i) const { return c.str() + "#" + std::to_string(i); }

  Element zero(Color c) const;
  Element basis(Color c, int i) const;
  bool connected() const { return dim({0, 1}) == 1 && dim({0, -1}) == 1; }
};

Element pa_action(const PlanarAlgebra& P, const TangleLinComb& T, const std::vector<Element>& inputs);
Element pa_mult(const PlanarAlgebra& P, const Element& x, const Element& y);
Element pa_include(const PlanarAlgebra& P, const Element& x);
Element pa_unit(const PlanarAlgebra& P, Color c);

struct RandomTangleOptions {
  Color external;
  int discs = 2;
  int max_k = 3;
  int max_width = 8;
  bool allow_loops = true;
  // When set, internal colours are taken from here in disc order where possible.
  std::vector<Color> internal;
};

// Random valid tangle built from a random sweep of caps, cups and boxes.
PlanarTangle random_tangle(std::mt19937_64& rng, const RandomTangleOptions& opt);

struct LawReport {
  struct Entry {
    std::string law;
    std::vector<std::string> witnesses;  // tangle codes, hex
    std::string expected, got;
  };
  int checked = 0;
  std::vector<Entry> failures;
  bool ok() const { return failures.empty(); }
  std::string to_json() const;
};

LawReport verify_multicat(const PlanarAlgebra& P, int samples, std::uint64_t seed, int max_k = 3);
std::optional<std::pair<Scalar, Scalar>> check_modulus(const PlanarAlgebra& P, int kmax,
                                                       std::uint64_t seed = 1);
LawReport check_spherical(const PlanarAlgebra& P, int kmax);
LawReport check_star(const PlanarAlgebra& P, int samples, std::uint64_t seed, int max_k = 3);

// Tangle T with a contractible loop added in the region containing external arc a.
PlanarTangle add_loop(const PlanarTangle& T, int ext_arc);

}  // namespace plancalc
