// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "multicat_laws.hpp"
#include "oracles.hpp"
#include "plancalc/affine.hpp"
#include "plancalc/depth.hpp"
#include "plancalc/pivotal.hpp"
#include "plancalc/tl.hpp"

using namespace plancalc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << o.note.str()
            << (o.note.str().empty() ? "" : ", ") << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)" << std::endl;
}

std::shared_ptr<TLQuotient> sqrt2_quotient() {
  const Scalar d = Scalar::field_generator(NumberField::sqrt(2));
  return std::make_shared<TLQuotient>(tl_instance(d, d));
}

Element e_gen(const TLAlgebra& tl, Color c, int i) {
  const int k = c.k;
  Matching m(2 * k);
  for (int col = 0; col < k; ++col) m[col] = 2 * k - 1 - col, m[2 * k - 1 - col] = col;
  auto pair = [&](int a, int b) { m[a] = b, m[b] = a; };
  pair(i - 1, i);
  pair(2 * k - i, 2 * k - 1 - i);
  Element x = tl.zero(c);
  x.coeffs[tl.index_of(m)] = Scalar(1);
  return x;
}

int ipow(int n, int k) {
  int r = 1;
  while (k-- > 0) r *= n;
  return r;
}

std::vector<mpq_class> random_label(std::mt19937_64& rng, int side) {
  std::vector<mpq_class> m(static_cast<std::size_t>(side) * side);
  for (auto& x : m) x = static_cast<int>(rng() % 7) - 3;
  return m;
}

Element as_element(Color c, const std::vector<mpq_class>& m) {
  Element e{c, {}};
  for (const auto& x : m) e.coeffs.push_back(Scalar::generic(x));
  return e;
}

std::string code(const TLAlgebra& tl, const AffineMorphism& M) {
  std::string out;
  for (int i = 0; i < static_cast<int>(M.rep.coeffs.size()); ++i)
    if (!M.rep.coeffs[i].is_zero())
      out += M.rep.coeffs[i].to_string() + "|" +
             annular_code(M.outer, M.inner, M.level, tl.diagrams(M.rep.color.k)[i]) + ";";
  return out;
}

}  // namespace

int main() {
  criterion(1, "multicategory axioms on 200 composable triples", [](Outcome& o) {
    std::mt19937_64 rng(1001);
    laws::Tally t;
    for (int s = 0; s < 200; ++s) laws::check_triple(rng, 4, t);
    for (const char* law : {"associativity-sequential", "associativity-parallel", "identity-left", "identity-right",
                            "symmetry-outer", "symmetry-inner", "empty-object"}) {
      o.require(t.checked[law] > 0, std::string(law) + " never exercised");
      o.require(t.failed[law] == 0, std::string(law) + " x" + std::to_string(t.failed[law]));
    }
    int total = 0;
    for (const auto& [law, n] : t.checked) total += n;
    o.note << total << " code equalities";
  });

  criterion(2, "TL diagram counts are Catalan numbers for k = 0..7", [](Outcome& o) {
    const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int k = 0; k <= 7; ++k) {
      o.require(oracle::noncrossing_count(k) == expected[k], "brute force k=" + std::to_string(k));
      o.require(tl_basis(k).size() == expected[k], "tl_basis k=" + std::to_string(k));
    }
  });

  criterion(3, "Jones relations in generic TL for k <= 5", [](Outcome& o) {
    const auto tl = tl_instance(Scalar::dp(), Scalar::dm());
    int checks = 0;
    for (int eps : {1, -1})
      for (int k = 2; k <= 5; ++k) {
        const Color c{k, eps};
        for (int i = 1; i < k; ++i) {
          const Element E = e_gen(*tl, c, i);
          const Scalar d = eps * ((i % 2) ? 1 : -1) > 0 ? Scalar::dp() : Scalar::dm();
          o.require(pa_mult(*tl, E, E) == d * E, "E^2 at " + c.str() + " i=" + std::to_string(i));
          ++checks;
          if (i + 1 < k) {
            const Element F = e_gen(*tl, c, i + 1);
            o.require(pa_mult(*tl, pa_mult(*tl, E, F), E) == E, "EFE at " + c.str());
            o.require(pa_mult(*tl, pa_mult(*tl, F, E), F) == F, "FEF at " + c.str());
            checks += 2;
          }
          for (int j = i + 2; j < k; ++j) {
            const Element G = e_gen(*tl, c, j);
            o.require(pa_mult(*tl, E, G) == pa_mult(*tl, G, E), "far commutation at " + c.str());
            ++checks;
          }
        }
      }
    o.note << checks << " relations";
  });

  criterion(4, "sphericality of TL depends on equal moduli", [](Outcome& o) {
    o.require(check_spherical(*tl_instance(Scalar::dp(), Scalar::dp()), 4).ok(), "balanced TL not spherical");
    const LawReport bad = check_spherical(*tl_instance(Scalar::dp(), Scalar::dm()), 4);
    o.require(!bad.ok() && !bad.failures.front().witnesses.empty(), "no witness for unbalanced TL");
    if (!bad.ok()) o.note << "witness " << bad.failures.front().witnesses.front().substr(0, 16) << "...";
  });

  criterion(5, "pivotal evaluation is layout independent", [](Outcome& o) {
    const PivotalModel M = build_model(2, {2, 1, 1, 3}, mpq_class(1, 2));
    const PivotalModel F = build_model_float(2, {2, 1, 1, 3}, 0.5);
    std::mt19937_64 rng(1005);
    int differing = 0;
    double worst = 0;
    for (int t = 0; t < 120; ++t) {
      RandomTangleOptions opt;
      opt.external = {static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1};
      opt.discs = 1 + rng() % 2;
      opt.max_k = 2;
      opt.max_width = 6;
      const PlanarTangle T = random_tangle(rng, opt);
      std::vector<std::vector<mpq_class>> labels;
      std::vector<std::vector<double>> fl;
      for (const Color& c : T.internal()) {
        labels.push_back(random_label(rng, ipow(2, c.k)));
        fl.emplace_back();
        for (const auto& x : labels.back()) fl.back().push_back(x.get_d());
      }
      const std::uint64_t s1 = rng(), s2 = rng();
      const SlicePlan p1 = standard_form(T, s1), p2 = standard_form(T, s2);
      differing += p1.to_json() != p2.to_json();
      const auto v1 = evaluate_plan(M, p1, labels);
      o.require(v1 == evaluate_plan(M, p2, labels), "layouts disagree on tangle " + T.code_hex().substr(0, 16));
      const auto fv = evaluate_plan(F, p2, fl);
      for (std::size_t i = 0; i < v1.size(); ++i) worst = std::max(worst, std::abs(v1[i].get_d() - fv[i]));
    }
    o.require(differing >= 20, "too few distinct layout pairs");
    o.require(worst <= 1e-9, "float mode off by " + std::to_string(worst));
    for (int eps : {1, -1}) {
      const int w = standard_form(identity_tangle({1, eps}), 0).words.front().front();
      SlicePlan straight;
      straight.external = {1, eps};
      straight.words = {{w}};
      for (int cup : {0, 1}) {
        SlicePlan z;
        z.external = {1, eps};
        z.slices = {{Slice::Cup, cup, 0}, {Slice::Cap, 1 - cup, 0}};
        z.words = {{w}, {w, -w, w}, {w}};
        o.require(plan_tangle(z) == plan_tangle(straight), "zig-zag tangle");
        o.require(evaluate_plan(M, z, std::vector<std::vector<mpq_class>>{}) == std::vector<mpq_class>{1, 0, 0, 1},
                  "zig-zag value");
      }
    }
    const ModelPA P(std::make_shared<const PivotalModel>(M));
    for (int k = 1; k <= 2; ++k) {
      const Element x0 = as_element({k, 1}, random_label(rng, ipow(2, k)));
      Element x = x0;
      for (int t = 0; t < 2 * k; ++t) x = P.act(builtin_tangle(BuiltinKind::Rotation, x.color), {x});
      o.require(x == x0, "rotation^(2k) at k=" + std::to_string(k));
    }
    o.note << "120 tangles, " << differing << " with distinct layouts, float error " << worst;
  });

  criterion(6, "spin model: TL(n,n) maps into End(X) as a planar algebra map", [](Outcome& o) {
    int checks = 0;
    for (int n : {2, 3}) {
      // Identity pairing with lambda = 1 gives moduli (n, n).
      std::vector<mpq_class> g(n * n, 0);
      for (int i = 0; i < n; ++i) g[i * n + i] = 1;
      const auto M = std::make_shared<const PivotalModel>(build_model(n, g));
      const ModelPA P(M);
      o.require(M->delta_plus() == n && M->delta_minus() == n, "moduli of the spin model");
      const auto tl = tl_instance(Scalar::generic(n), Scalar::generic(n));
      auto image = [&](const Element& x) {
        Element e = P.zero(x.color);
        for (int d = 0; d < tl->dim(x.color); ++d)
          if (!x.coeffs[d].is_zero())
            e = e + x.coeffs[d] * as_element(x.color, matching_matrix(*M, x.color, tl->diagrams(x.color.k)[d]));
        return e;
      };
      std::mt19937_64 rng(1006 + n);
      for (int t = 0; t < 60; ++t) {
        RandomTangleOptions opt;
        opt.external = {static_cast<int>(rng() % 4), rng() % 2 ? 1 : -1};
        opt.discs = 1 + rng() % 2;
        opt.max_k = 3;
        opt.max_width = 6;
        const PlanarTangle T = random_tangle(rng, opt);
        std::vector<Element> in, img;
        for (const Color& c : T.internal()) {
          in.push_back(tl->basis(c, rng() % tl->dim(c)));
          img.push_back(image(in.back()));
        }
        o.require(image(tl->act(T, in)) == P.act(T, img), "n=" + std::to_string(n) + " tangle " + T.code_hex());
        ++checks;
      }
    }
    o.note << checks << " tangles";
  });

  criterion(7, "sqrt2 quotient dimensions and positivity", [](Outcome& o) {
    const auto Q = sqrt2_quotient();
    for (int k = 0; k <= 4; ++k) {
      o.require(Q->dim({k, 1}) == oracle::a3_walks(k), "dim at k=" + std::to_string(k));
      o.require(Q->dim({k, -1}) == oracle::a3_walks(k), "dim at k=" + std::to_string(k) + "-");
      for (const Scalar& m : leading_minors(Q->basis_gram(k)))
        o.require(m.sign() == 1, "leading minor not positive at k=" + std::to_string(k));
      o.note << (k ? "," : "dims ") << Q->dim({k, 1});
    }
  });

  criterion(8, "depth certificates", [](Outcome& o) {
    const auto Q = sqrt2_quotient();
    const DepthReport r = compute_depth(*Q, 6);
    o.require(r.l_plus == 2 && r.l_minus == 2, "sqrt2 depth is not (2,2)");
    o.require(r.parity_ok, "parity");
    o.require(!r.propagation_violation, "propagation");
    int computed = 0;
    for (const auto& c : r.certificates) computed += c.source == "computed";
    o.require(computed >= 4, "too few computed certificates");
    // Cross-sign: fullness at (2,+) forces (2,-); confirm by direct computation.
    o.require(ideal_is_full(*Q, 2, -1).full(), "cross-sign level not full");
    o.require(!ideal_is_full(*Q, 1, -1).full(), "(1,-) unexpectedly full");
    // Propagation one level further than the report computes.
    o.require(ideal_is_full(*Q, 3, 1).full() && ideal_is_full(*Q, 3, -1).full(), "propagation to k=3");
    const DepthReport g = compute_depth(*tl_instance(Scalar::dp(), Scalar::dp()), 4);
    o.require(!g.l_plus && !g.l_minus, "generic TL has finite depth");
    o.require(g.to_json().find("exceeds bound") != std::string::npos, "generic TL report");
    o.note << "sqrt2 (2,2); generic TL exceeds bound at kmax 4";
  });

  criterion(9, "lowest weights and dimension bounds at truncation 8", [](Outcome& o) {
    const AffineCategory A(sqrt2_quotient(), 8);
    const WeightReport w = weight_and_bounds(A, 10, 5, 6);
    o.require(w.s == 1 && w.depth == 2, "depth data");
    for (int k : {2, 3}) {
      const LWAlgebra lw = lw_algebra(A, {k, 1}, false);
      o.require(lw.dim == 0 && lw.stable, "lw(" + std::to_string(k) + ") is not 0 and stable");
    }
    o.require(w.lw_vanishes, "report lw_vanishes");
    int rows = 0;
    for (const BoundRow& b : w.bounds) {
      const long long bound = static_cast<long long>(b.k + b.l) * oracle::a3_walks(b.l) * oracle::a3_walks(b.p);
      o.require(b.stable && b.bound == bound && b.dim <= bound, "bound row p=" + std::to_string(b.p));
      ++rows;
    }
    o.require(rows > 0, "no bound rows");
    // (d_p)^(1/p) increasing: d_p^(p+1) < d_(p+1)^p; bounded: d_p <= 2^p.
    o.require(w.dims.size() == 11, "root sequence length");
    for (int p = 0; p <= 10 && p < static_cast<int>(w.dims.size()); ++p) {
      o.require(w.dims[p] == oracle::a3_walks(p), "dim P(" + std::to_string(p) + ")");
      const mpz_class d = static_cast<unsigned long>(w.dims[p]);
      mpz_class two_p;
      mpz_ui_pow_ui(two_p.get_mpz_t(), 2, p);
      o.require(d <= two_p, "root exceeds delta^2 at p=" + std::to_string(p));
      if (p >= 1 && p < 10) {
        const mpz_class e = static_cast<unsigned long>(w.dims[p + 1]);
        mpz_class lhs, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), d.get_mpz_t(), p + 1);
        mpz_pow_ui(rhs.get_mpz_t(), e.get_mpz_t(), p);
        o.require(lhs < rhs, "root not increasing at p=" + std::to_string(p));
      }
    }
    o.require(w.root_increasing && w.root_bounded && w.delta_sq == "2", "report flags");
    o.note << rows << " bound rows";
  });

  criterion(10, "affine category laws and rotation", [](Outcome& o) {
    const auto tl = tl_instance(Scalar::dp(), Scalar::dp());
    const AffineCategory G(tl, 8);
    std::mt19937_64 rng(1010);
    auto color = [&](int kmax) { return Color{static_cast<int>(rng() % (kmax + 1)), rng() % 2 ? 1 : -1}; };
    auto morphism = [&](Color a, Color b) {
      std::vector<int> ls;
      for (int l = 0; l <= 2; ++l)
        if (affine_level_ok(a, b, l)) ls.push_back(l);
      const int l = ls[rng() % ls.size()];
      const Color c = affine_rep_color(a, b, l);
      return G.psi(l, a, b, tl->basis(c, rng() % tl->dim(c)));
    };
    for (int t = 0; t < 100; ++t) {
      const Color a = color(2), b = color(2), c = color(2), d = color(1);
      const AffineMorphism X = morphism(a, b), Y = morphism(b, c), Z = morphism(c, d);
      o.require(code(*tl, G.compose(G.identity(a), X)) == code(*tl, X), "left unit");
      o.require(code(*tl, G.compose(X, G.identity(b))) == code(*tl, X), "right unit");
      o.require(code(*tl, G.compose(G.compose(X, Y), Z)) == code(*tl, G.compose(X, G.compose(Y, Z))), "associativity");
      o.require(code(*tl, G.star(G.star(X))) == code(*tl, X), "star involution");
      o.require(code(*tl, G.star(G.compose(X, Y))) == code(*tl, G.compose(G.star(Y), G.star(X))), "star reverses");
    }
    for (int k = 1; k <= 3; ++k) {
      const Color c{k, 1};
      o.require(code(*tl, G.compose(G.rotation_inverse(c), G.rotation(c))) == code(*tl, G.identity(c)),
                "R^-1 R at k=" + std::to_string(k));
      AffineMorphism P = G.rotation(c);
      for (int t = 1; t < 2 * k; ++t) P = G.compose(G.rotation(P.outer), P);
      o.require(code(*tl, P) != code(*tl, G.identity(c)), "R^2k = 1 at k=" + std::to_string(k));
    }
    const AffineCategory A(sqrt2_quotient(), 8);
    for (int k = 1; k <= 2; ++k) {
      const Color c{k, 1};
      o.require(A.equal(A.compose(A.rotation_inverse(c), A.rotation(c)), A.identity(c)), "sqrt2 R^-1 R");
    }
    o.note << "100 composable triples";
  });

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << (10 - failures) << "/10" << std::endl;
  return failures ? 1 : 0;
}
