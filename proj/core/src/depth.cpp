#include "plancalc/depth.hpp"

#include <stdexcept>

#include "json.hpp"
#include "plancalc/parallel.hpp"

namespace plancalc {

JonesPair jones_projection(const PlanarAlgebra& P, int k, int eps) {
  if (k < 1) throw std::invalid_argument("jones_projection needs k >= 1");
  JonesPair out{P.act(builtin_tangle(BuiltinKind::JonesProjection, {k, eps}), {}), std::nullopt};
  if (auto mod = P.declared_modulus(); mod && mod->first == mod->second && mod->first.invertible())
    out.e = mod->first.inverse() * out.E;
  return out;
}

SpanRank s_range_rank(const PlanarAlgebra& P, int k, int eps, int m) {
  if (m < 1) throw std::invalid_argument("column tangle needs m >= 1");
  const Color in{k, eps}, out{k + m - 1, eps};
  const int d = P.dim(in), D = P.dim(out);
  if (d < 0 || D < 0) throw std::domain_error("colour " + (d < 0 ? in : out).str() + " is not finite-dimensional");
  const PlanarTangle S = builtin_tangle(BuiltinKind::Sm, in, m);
  long total = 1;
  for (int j = 0; j < m; ++j) total *= d;
  std::vector<Vec> rows(total);
  parallel_for(static_cast<int>(total), [&](int t) {
    std::vector<Element> xs;
    for (int j = 0, r = t; j < m; ++j, r /= d) xs.push_back(P.basis(in, r % d));
    rows[t] = P.act(S, xs).coeffs;
  });
  return {rank(rows, D, P.ring()), D};
}

SpanRank ideal_is_full(const PlanarAlgebra& P, int k, int eps) { return s_range_rank(P, k, eps, 2); }

bool depth_parity_ok(std::optional<int> lp, std::optional<int> lm) {
  if (!lp || !lm || *lp == *lm) return true;
  const int hi = std::max(*lp, *lm), lo = std::min(*lp, *lm);
  return hi == lo + 1 && hi % 2 == 0;
}

namespace {

// First full level for one sign, scanning up to `bound` (inclusive); a level
// equal to `inferred` is taken as full without computation.
std::optional<int> scan_sign(int eps, int kmax, std::optional<int> inferred,
                             const std::function<SpanRank(int, int)>& test, const PlanarAlgebra& P,
                             DepthReport& rep) {
  // Inferred levels carry rank = dim of P(k+1,eps).
  auto inferred_cert = [&](int k, const char* src) {
    const int D = P.dim({k + 1, eps});
    return DepthCertificate{k, eps, D, D, true, src};
  };
  for (int k = 1; k <= kmax; ++k) {
    DepthCertificate c{k, eps, 0, 0, false, "computed"};
    if (inferred && k == *inferred) {
      c = inferred_cert(k, "cross-sign");
    } else {
      const SpanRank r = test(k, eps);
      c.rank = r.rank;
      c.dim = r.dim;
      c.full = r.full();
    }
    rep.certificates.push_back(c);
    if (!c.full) continue;
    if (k + 1 <= kmax) {
      const SpanRank r = test(k + 1, eps);
      rep.certificates.push_back({k + 1, eps, r.rank, r.dim, r.full(), "computed"});
      if (!r.full()) rep.propagation_violation = true;
    }
    for (int j = k + 2; j <= kmax; ++j) rep.certificates.push_back(inferred_cert(j, "propagation"));
    return k;
  }
  return std::nullopt;
}

}  // namespace

DepthReport compute_depth(const PlanarAlgebra& P, int kmax, const DepthOptions& opt) {
  DepthReport rep;
  rep.kmax = kmax;
  auto test = opt.oracle ? opt.oracle : [&P](int k, int eps) { return ideal_is_full(P, k, eps); };
  rep.l_plus = scan_sign(+1, kmax, std::nullopt, test, P, rep);
  // Full at (k,+): k even gives (k,-), k odd gives (k+1,-).
  std::optional<int> cross;
  if (rep.l_plus) cross = *rep.l_plus % 2 == 0 ? *rep.l_plus : *rep.l_plus + 1;
  rep.l_minus = scan_sign(-1, kmax, cross, test, P, rep);
  if (rep.l_plus && rep.l_minus) rep.s = std::min(*rep.l_plus, *rep.l_minus) / 2;
  rep.parity_ok = depth_parity_ok(rep.l_plus, rep.l_minus);
  return rep;
}

std::string DepthReport::to_json() const {
  using json = nlohmann::json;
  json j;
  j["format"] = "plancalc/1";
  j["kmax"] = kmax;
  auto depth = [](std::optional<int> l) { return l ? json(*l) : json("exceeds bound"); };
  j["l_plus"] = depth(l_plus);
  j["l_minus"] = depth(l_minus);
  j["s"] = s ? json(*s) : json(nullptr);
  j["parity_ok"] = parity_ok;
  j["propagation_violation"] = propagation_violation;
  json certs = json::array();
  for (const auto& c : certificates)
    certs.push_back({{"k", c.k}, {"eps", c.eps > 0 ? "+" : "-"}, {"rank", c.rank}, {"dim", c.dim},
                     {"full", c.full}, {"source", c.source}});
  j["certificates"] = certs;
  return j.dump(2);
}

}  // namespace plancalc
