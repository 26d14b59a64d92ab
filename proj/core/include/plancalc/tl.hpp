#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "plancalc/planar_algebra.hpp"

namespace plancalc {

// mate[p] for each of the 2k boundary points, 0-based, clockwise from the
// point after the marked arc.
using Matching = std::vector<int>;

// Noncrossing perfect matchings; identity-like diagrams first.
std::vector<Matching> tl_basis(int k);
inline std::vector<Matching> tl_basis(Color c) { return tl_basis(c.k); }
// "[(1,4),(2,3)]", 1-based.
std::string matching_str(const Matching& m);
Matching parse_matching(const std::string& s);
PlanarTangle matching_tangle(Color c, const Matching& m);
std::uint64_t catalan(int k);

class TLAlgebra : public PlanarAlgebra {
 public:
  TLAlgebra(Scalar delta_plus, Scalar delta_minus);

  std::string name() const override;
  Field ring() const override { return dp_.ring(); }
  int dim(Color c) const override;
  Element act(const PlanarTangle& T, const std::vector<Element>& inputs) const override;
  std::optional<std::pair<Scalar, Scalar>> declared_modulus() const override { return {{dp_, dm_}}; }
  bool has_star() const override { return true; }
  Element star(const Element& x) const override;
  std::string basis_label(Color c, int i) const override { return matching_str(diagrams(c.k)[i]); }

  const Scalar& delta_plus() const { return dp_; }
  const Scalar& delta_minus() const { return dm_; }
  bool balanced() const { return balanced_; }
  const std::vector<Matching>& diagrams(int k) const;
  int index_of(const Matching& m) const;

  // Glue one diagram per disc; returns (output diagram, cw loops, ccw loops).
  struct Glued {
    Matching out;
    int cw = 0, ccw = 0;
  };
  Glued glue(const PlanarTangle& T, const std::vector<const Matching*>& in) const;
  Scalar loop_factor(int cw, int ccw) const;
  // G[x][y] = trace(star(y) x) over the diagram basis.
  Matrix gram(Color c) const;

 private:
  Scalar dp_, dm_;
  bool balanced_;
  struct Level {
    std::vector<Matching> basis;
    std::map<Matching, int> index;
  };
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const Level>> levels_;
  mutable std::vector<Scalar> pow_p_, pow_m_;
  std::shared_ptr<const Level> level(int k) const;
};

// Quotient of TL by the radical of the trace form. Needs delta_plus ==
// delta_minus in a number field. Coordinates are taken in a basis of
// diagrams picked greedily in basis order.
class TLQuotient : public PlanarAlgebra {
 public:
  explicit TLQuotient(std::shared_ptr<const TLAlgebra> tl);

  std::string name() const override { return "quotient of " + tl_->name(); }
  Field ring() const override { return tl_->ring(); }
  int dim(Color c) const override;
  Element act(const PlanarTangle& T, const std::vector<Element>& inputs) const override;
  std::optional<std::pair<Scalar, Scalar>> declared_modulus() const override { return tl_->declared_modulus(); }
  bool has_star() const override { return true; }
  Element star(const Element& x) const override;
  std::string basis_label(Color c, int i) const override;

  const TLAlgebra& tl() const { return *tl_; }
  // Diagram indices of the chosen basis.
  const std::vector<int>& basis_diagrams(int k) const;
  // Trace form restricted to the chosen basis.
  const Matrix& basis_gram(int k) const;
  // Pairings of a diagram with the chosen basis; injective on the quotient.
  Vec pairing(const Matching& d) const;
  Element project(const Element& tl_element) const;
  Element lift(const Element& x) const;
  // Coordinates of the image of each diagram, one column per diagram.
  Matrix projection(int k) const;

 private:
  struct Level {
    std::vector<int> basis;
    Matrix gram;
    std::shared_ptr<const Matrix> inverse;
  };
  std::shared_ptr<const TLAlgebra> tl_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<Level>> levels_;
  std::shared_ptr<Level> level(int k) const;
  std::shared_ptr<const Matrix> inverse_of(int k) const;
};

struct QuotientInfo {
  Color color;
  int dimension = 0;
  std::vector<int> basis;  // diagram indices
  Matrix projection;       // dimension x dim TL(c)
};
QuotientInfo negligible_quotient(const TLQuotient& Q, Color c);

// Ranks of the cell forms on the standard modules with j = k, k-2, ... through
// strands, in that order.
std::vector<int> cell_ranks(const TLAlgebra& tl, int k);
// Dimension of the trace-form quotient from cell ranks; blocks past the first
// vanishing Jones-Wenzl trace are dropped.
long long quotient_dimension(const TLAlgebra& tl, int k);

std::shared_ptr<TLAlgebra> tl_instance(const Scalar& delta_plus, const Scalar& delta_minus);

// Right closure of x.
Scalar markov_trace(const PlanarAlgebra& P, const Element& x);
// G[x][y] = markov_trace(star(y) x) over the basis of P(c).
Matrix gram_matrix(const PlanarAlgebra& P, Color c);

}  // namespace plancalc
