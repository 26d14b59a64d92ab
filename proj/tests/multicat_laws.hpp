#pragma once

// Multicategory laws for tangle composition, checked on canonical codes.
// Disc order follows the multicategory convention: composing S into slot i
// splices S's discs in at positions i..i+m-1.

#include <map>
#include <numeric>
#include <random>
#include <string>

#include "plancalc/planar_algebra.hpp"

namespace laws {

using plancalc::Color;
using plancalc::PlanarTangle;

struct Tally {
  std::map<std::string, int> checked, failed;
  void record(const std::string& law, bool ok) {
    ++checked[law];
    if (!ok) ++failed[law];
  }
  bool ok() const {
    for (const auto& [law, n] : failed)
      if (n) return false;
    return true;
  }
};

inline PlanarTangle random_into(std::mt19937_64& rng, Color ext, int discs, int max_k) {
  plancalc::RandomTangleOptions o;
  o.external = ext;
  o.discs = discs;
  o.max_k = max_k;
  o.max_width = 8;
  return plancalc::random_tangle(rng, o);
}

// Position of T's disc o in compose_at(T, i, S) when S has m discs.
inline int spliced(int o, int i, int m) { return o < i ? o : o + m - 1; }

// One composable triple: T, S into slot i of T, U into slot j of S, and a
// second slot i2 of T when T has one.
inline void check_triple(std::mt19937_64& rng, int max_k, Tally& t) {
  using plancalc::compose_at;
  using plancalc::relabel;
  std::uniform_int_distribution<int> kd(0, max_k), sd(0, 1);
  auto color = [&] { return Color{kd(rng), sd(rng) ? 1 : -1}; };

  const int n = 1 + static_cast<int>(rng() % 2);
  const PlanarTangle T = random_into(rng, color(), n, max_k);
  const int i = 1 + static_cast<int>(rng() % T.num_internal());
  const PlanarTangle S = random_into(rng, T.color(i), static_cast<int>(rng() % 3), max_k);
  const int m = S.num_internal();
  const PlanarTangle TS = compose_at(T, i, S);

  t.record("identity-left", compose_at(plancalc::identity_tangle(T.external()), 1, T) == T);
  for (int d = 1; d <= T.num_internal(); ++d)
    t.record("identity-right", compose_at(T, d, plancalc::identity_tangle(T.color(d))) == T);

  if (m > 0) {
    const int j = 1 + static_cast<int>(rng() % m);
    const PlanarTangle U = random_into(rng, S.color(j), static_cast<int>(rng() % 2), max_k);
    t.record("associativity-sequential", compose_at(TS, i + j - 1, U) == compose_at(T, i, compose_at(S, j, U)));
  }
  if (T.num_internal() >= 2) {
    const int i2 = i == 1 ? 2 : 1;
    const PlanarTangle V = random_into(rng, T.color(i2), static_cast<int>(rng() % 2), max_k);
    const int a = std::min(i, i2), b = std::max(i, i2);
    const PlanarTangle& X = a == i ? S : V;
    const PlanarTangle& Y = a == i ? V : S;
    const PlanarTangle lhs = compose_at(compose_at(T, b, Y), a, X);
    const PlanarTangle rhs = compose_at(compose_at(T, a, X), b + X.num_internal() - 1, Y);
    t.record("associativity-parallel", lhs == rhs);
  }

  // T relabelled by sigma, then S glued into the slot that carries old disc i.
  {
    std::vector<int> sigma(T.num_internal());
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const int jn = static_cast<int>(std::find(sigma.begin(), sigma.end(), i) - sigma.begin()) + 1;
    std::vector<int> rho;
    for (int q = 1; q < jn; ++q) rho.push_back(spliced(sigma[q - 1], i, m));
    for (int s = 1; s <= m; ++s) rho.push_back(i + s - 1);
    for (int q = jn + 1; q <= T.num_internal(); ++q) rho.push_back(spliced(sigma[q - 1], i, m));
    t.record("symmetry-outer", compose_at(relabel(T, sigma), jn, S) == relabel(TS, rho));
  }
  // S relabelled by tau before gluing.
  if (m > 0) {
    std::vector<int> tau(m);
    std::iota(tau.begin(), tau.end(), 1);
    std::shuffle(tau.begin(), tau.end(), rng);
    std::vector<int> rho(TS.num_internal());
    std::iota(rho.begin(), rho.end(), 1);
    for (int s = 1; s <= m; ++s) rho[i + s - 2] = i + tau[s - 1] - 1;
    t.record("symmetry-inner", compose_at(T, i, relabel(S, tau)) == relabel(TS, rho));
  }

  // A disc-free tangle glued into slot i deletes that slot.
  {
    const PlanarTangle E = random_into(rng, T.color(i), 0, max_k);
    const PlanarTangle TE = compose_at(T, i, E);
    bool ok = TE.num_internal() == T.num_internal() - 1;
    for (int d = 1; ok && d <= TE.num_internal(); ++d) ok = TE.color(d) == T.color(d < i ? d : d + 1);
    ok = ok && compose_at(plancalc::identity_tangle(E.external()), 1, E) == E;
    t.record("empty-object", ok);
  }
}

}  // namespace laws
