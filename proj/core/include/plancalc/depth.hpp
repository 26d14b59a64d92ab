#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plancalc/planar_algebra.hpp"

namespace plancalc {

struct JonesPair {
  Element E;                // in P(k+1, eps)
  std::optional<Element> e; // E / delta; set only when the modulus is (delta, delta)
};

// Throws std::invalid_argument for k < 1.
JonesPair jones_projection(const PlanarAlgebra& P, int k, int eps);

struct SpanRank {
  int rank = 0;
  int dim = 0;
  bool full() const { return rank == dim; }
};

// Rank of the range of the m-disc column tangle on all basis tuples of
// P(k,eps), inside P(k+m-1,eps). m = 2 is the ideal generated by e_(k,eps).
SpanRank s_range_rank(const PlanarAlgebra& P, int k, int eps, int m = 2);

// I_(k,eps) == P(k+1,eps). Throws std::domain_error when a colour has no
// finite basis (dim < 0).
SpanRank ideal_is_full(const PlanarAlgebra& P, int k, int eps);

struct DepthCertificate {
  int k = 0;
  int eps = 1;
  int rank = 0;
  int dim = 0;
  bool full = false;
  // "computed", "propagation" (inferred from k-1) or "cross-sign".
  std::string source;
};

struct DepthReport {
  int kmax = 0;
  std::optional<int> l_plus, l_minus;  // nullopt: exceeds kmax
  std::vector<DepthCertificate> certificates;
  std::optional<int> s;                // floor(min(l+, l-) / 2)
  bool parity_ok = true;
  bool propagation_violation = false;
  std::string to_json() const;
};

struct DepthOptions {
  // Replaces ideal_is_full; used for fault injection in tests.
  std::function<SpanRank(int k, int eps)> oracle;
};

// Scans k = 1..kmax for each sign. After the first full ideal the next level
// is still computed to check propagation; later levels are inferred.
DepthReport compute_depth(const PlanarAlgebra& P, int kmax, const DepthOptions& opt = {});

// Both finite and different implies consecutive with the larger one even.
bool depth_parity_ok(std::optional<int> lp, std::optional<int> lm);

}  // namespace plancalc
