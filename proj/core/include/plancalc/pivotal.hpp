#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "plancalc/planar_algebra.hpp"
#include "plancalc/tangle.hpp"

namespace plancalc {

enum class NumericMode { Exact, Float };

// n x n row-major, entry [a*n+b] with a the left strand.
template <class T>
struct ModelTensors {
  std::vector<T> cupA;  // outside region -, arms (X, X*)
  std::vector<T> capA;  // inside region -, arms (X*, X)
  std::vector<T> cupB;  // outside region +, arms (X*, X)
  std::vector<T> capB;  // inside region +, arms (X, X*)
  std::vector<T> aX, aXs;  // pivotal maps X -> X**, X* -> X***
};

// X realized on C^n; evaluation and coevaluation derived from an invertible
// pairing g and a balance lambda (cw loops give n/lambda, ccw loops n*lambda).
struct PivotalModel {
  int n = 1;
  NumericMode mode = NumericMode::Exact;
  std::vector<mpq_class> g;  // empty in float-only models
  mpq_class lambda = 1;
  std::vector<double> gf;
  double lambdaf = 1;
  ModelTensors<mpq_class> exact;
  ModelTensors<double> num;
  std::string report;  // JSON object with the checked identities

  bool has_exact() const { return !g.empty(); }
  mpq_class delta_plus() const { return mpq_class(n) / lambda; }
  mpq_class delta_minus() const { return mpq_class(n) * lambda; }
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws ModelError on a singular pairing or a failed identity.
PivotalModel build_model(int n, const std::vector<mpq_class>& g, const mpq_class& lambda = 1);
PivotalModel build_model_float(int n, const std::vector<double>& g, double lambda = 1);
// {"format"?, "n", "pairing", "mode": "exact"|"float", "lambda"?}; entries are
// integers, decimals, or "p/q" strings. Throws SchemaError or ModelError.
PivotalModel load_model_json(const std::string& text);

// One horizontal stripe, read bottom to top. Positions index the frontier
// strands left to right; a cup at pos p creates strands p and p+1.
struct Slice {
  enum Kind { Cup, Cap, Box } kind = Cup;
  int pos = 0;
  int disc = 0;  // internal disc (1-based) for Box
};

// letter +1 = X, -1 = X*. words[s] is the frontier below slice s; words.back() is the top.
struct SlicePlan {
  Color external;
  std::vector<Color> internal;
  std::vector<Slice> slices;
  std::vector<std::vector<int>> words;
  int max_width() const;
  std::string to_json() const;
};

// Bottom-to-top sweep layout. Different seeds give different layouts of the
// same tangle. Throws std::runtime_error if no layout is found within the step limit.
SlicePlan standard_form(const PlanarTangle& T, std::uint64_t seed = 0);
// The tangle described by a plan; throws TangleError on inconsistent plans.
PlanarTangle plan_tangle(const SlicePlan& plan);

// Box labels: rows index the top word, columns the bottom word, left to right,
// as n^k x n^k row-major matrices. Output has the same shape for the external disc.
std::vector<mpq_class> evaluate_plan(const PivotalModel& M, const SlicePlan& plan,
                                     const std::vector<std::vector<mpq_class>>& labels);
std::vector<double> evaluate_plan(const PivotalModel& M, const SlicePlan& plan,
                                  const std::vector<std::vector<double>>& labels);
std::vector<mpq_class> evaluate(const PivotalModel& M, const PlanarTangle& T,
                                const std::vector<std::vector<mpq_class>>& labels, std::uint64_t seed = 0);

// P(k,eps) = End(X_(k,eps)) on the matrix-unit basis: index row*n^k + col.
class ModelPA : public PlanarAlgebra {
 public:
  explicit ModelPA(std::shared_ptr<const PivotalModel> model) : model_(std::move(model)) {}
  std::string name() const override;
  Field ring() const override { return nullptr; }
  int dim(Color c) const override;
  Element act(const PlanarTangle& T, const std::vector<Element>& inputs) const override;
  std::optional<std::pair<Scalar, Scalar>> declared_modulus() const override;
  std::string basis_label(Color c, int i) const override;
  const PivotalModel& model() const { return *model_; }
  const SlicePlan& plan(const PlanarTangle& T) const;

 private:
  std::shared_ptr<const PivotalModel> model_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const SlicePlan>> plans_;
};

// The n x n matrix-unit image of a matching: product of cup and cap tensors.
std::vector<mpq_class> matching_matrix(const PivotalModel& M, Color c, const std::vector<int>& matching);

}  // namespace plancalc
