#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "plancalc/affine.hpp"

using namespace plancalc;

namespace {

std::shared_ptr<TLQuotient> sqrt2_quotient() {
  const Scalar d = Scalar::field_generator(NumberField::sqrt(2));
  return std::make_shared<TLQuotient>(tl_instance(d, d));
}

// Annular code of a single-diagram morphism, with its coefficient.
std::string code(const TLAlgebra& tl, const AffineMorphism& M) {
  int idx = -1;
  for (int i = 0; i < static_cast<int>(M.rep.coeffs.size()); ++i)
    if (!M.rep.coeffs[i].is_zero()) {
      REQUIRE(idx < 0);
      idx = i;
    }
  REQUIRE(idx >= 0);
  return M.rep.coeffs[idx].to_string() + "|" + annular_code(M.outer, M.inner, M.level, tl.diagrams(M.rep.color.k)[idx]);
}

Color random_color(std::mt19937_64& rng, int kmax) { return {static_cast<int>(rng() % (kmax + 1)), rng() % 2 ? 1 : -1}; }

AffineMorphism random_morphism(std::mt19937_64& rng, const AffineCategory& A, Color outer, Color inner, int lmax) {
  std::vector<int> ls;
  for (int l = 0; l <= lmax; ++l)
    if (affine_level_ok(outer, inner, l)) ls.push_back(l);
  const int l = ls[rng() % ls.size()];
  const Color c = affine_rep_color(outer, inner, l);
  return A.psi(l, outer, inner, A.algebra().basis(c, rng() % A.algebra().dim(c)));
}

}  // namespace

TEST_CASE("level parity") {
  CHECK(affine_level_ok({1, 1}, {2, 1}, 0));
  CHECK_FALSE(affine_level_ok({1, 1}, {2, 1}, 1));
  CHECK(affine_level_ok({1, 1}, {2, -1}, 1));
  CHECK(affine_rep_color({1, 1}, {2, -1}, 3) == Color{6, 1});
  CHECK_THROWS_AS(affine_rep_color({1, 1}, {1, -1}, 0), AffineError);
}

TEST_CASE("raising the level keeps the annular isotopy class") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dm());
  const AffineCategory A(tl, 6);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    const Color o = random_color(rng, 2), i = random_color(rng, 2);
    const AffineMorphism M = random_morphism(rng, A, o, i, 2);
    const AffineMorphism R = A.level_raise(M, M.level + 2);
    CHECK(R.level == M.level + 2);
    if (o.k + i.k + M.level > 0) CHECK(code(*tl, R) == code(*tl, M));
  }
}

TEST_CASE("composition is unital and associative in generic TL") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dm());
  const AffineCategory A(tl, 6);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    const Color a = random_color(rng, 2), b = random_color(rng, 2), c = random_color(rng, 2), d = random_color(rng, 1);
    const AffineMorphism X = random_morphism(rng, A, a, b, 1), Y = random_morphism(rng, A, b, c, 1),
                         Z = random_morphism(rng, A, c, d, 1);
    CHECK(A.compose(A.identity(a), X).rep == X.rep);
    CHECK(A.compose(X, A.identity(b)).rep == X.rep);
    const AffineMorphism L = A.compose(A.compose(X, Y), Z), R = A.compose(X, A.compose(Y, Z));
    REQUIRE(L.level == R.level);
    CHECK(L.rep == R.rep);
  }
}

TEST_CASE("star is an antimultiplicative involution") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dp());
  const AffineCategory A(tl, 6);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const Color a = random_color(rng, 2), b = random_color(rng, 2), c = random_color(rng, 2);
    const AffineMorphism X = random_morphism(rng, A, a, b, 2), Y = random_morphism(rng, A, b, c, 2);
    CHECK(A.star(A.star(X)).rep == X.rep);
    CHECK(A.star(X).outer == b);
    CHECK(code(*tl, A.star(A.compose(X, Y))) == code(*tl, A.compose(A.star(Y), A.star(X))));
  }
}

TEST_CASE("rotation is invertible but has infinite order") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dp());
  const AffineCategory A(tl, 8);
  for (int k = 1; k <= 3; ++k) {
    const Color c{k, 1};
    CHECK(code(*tl, A.compose(A.rotation_inverse(c), A.rotation(c))) == code(*tl, A.identity(c)));
    CHECK(code(*tl, A.compose(A.rotation(c), A.rotation_inverse(c))) ==
          code(*tl, A.identity({k, -1})));
    AffineMorphism P = A.rotation(c);
    for (int t = 1; t < 2 * k; ++t) P = A.compose(A.rotation(P.outer), P);
    CHECK(P.outer == c);
    CHECK(code(*tl, P) != code(*tl, A.identity(c)));
  }
}

TEST_CASE("sqrt2 hom dimensions match walks around A3") {
  const AffineCategory A(sqrt2_quotient(), 8);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n + m <= 3; ++n)
      for (int eps : {1, -1}) {
        const HomReport r = A.hom_space_dim({m, 1}, {n, eps});
        CHECK(r.stable);
        CHECK(r.dim == oracle::a3_tube(m, n, eps > 0 ? 0 : 1));
      }
}

TEST_CASE("rotation inverse holds in the sqrt2 quotient") {
  const AffineCategory A(sqrt2_quotient(), 8);
  for (int k = 1; k <= 2; ++k) {
    const Color c{k, 1};
    CHECK(A.equal(A.compose(A.rotation_inverse(c), A.rotation(c)), A.identity(c)));
    AffineMorphism P = A.rotation(c);
    for (int t = 1; t < 2 * k; ++t) P = A.compose(A.rotation(P.outer), P);
    CHECK_FALSE(A.equal(P, A.identity(c)));
  }
}

TEST_CASE("through-lower-weight span contains the relations") {
  const AffineCategory A(sqrt2_quotient(), 8);
  for (int k = 1; k <= 2; ++k)
    for (int l : {0, 2}) {
      const auto rel = A.relations({k, 1}, {k, 1}, l);
      const auto lw = A.lw_relations({k, 1}, l);
      REQUIRE(rel);
      REQUIRE(lw);
      for (const Vec& v : rel->rows()) CHECK(lw->in_span(v));
      CHECK(lw->rank() >= rel->rank());
    }
}

TEST_CASE("lowest weight algebras of the sqrt2 quotient") {
  const AffineCategory A(sqrt2_quotient(), 8);
  const LWAlgebra w0 = lw_algebra(A, {0, 1});
  CHECK(w0.dim == oracle::a3_tube(0, 0, 0));
  CHECK(w0.stable);
  const IrrepReport ir = decompose_irreps(w0);
  CHECK(ir.radical_dim == 0);
  CHECK(ir.blocks == std::vector<int>{1, 1});
  CHECK(lw_algebra(A, {1, 1}, false).dim == 1);
  for (int k : {2, 3}) {
    const LWAlgebra w = lw_algebra(A, {k, 1}, false);
    CHECK(w.dim == 0);
    CHECK(w.stable);
  }
}

TEST_CASE("lowest weight structure constants are associative") {
  const AffineCategory A(sqrt2_quotient(), 8);
  const LWAlgebra w = lw_algebra(A, {0, 1});
  REQUIRE(!w.mult.empty());
  const int d = w.dim;
  const Scalar z = Scalar::zero(w.ring);
  auto mul = [&](const Vec& x, const Vec& y) {
    Vec out(d, z);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int r = 0; r < d; ++r) out[r] += x[i] * y[j] * w.mult[i][j][r];
    return out;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec ei(d, z), ej(d, z), ek(d, z);
        ei[i] = ej[j] = ek[k] = Scalar::one(w.ring);
        CHECK(mul(mul(ei, ej), ek) == mul(ei, mul(ej, ek)));
      }
}
