#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "plancalc/depth.hpp"
#include "plancalc/tl.hpp"

using namespace plancalc;

namespace {

// E_i in the k-box: caps top i-1,i and bottom columns i-1,i.
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

std::shared_ptr<TLAlgebra> sqrt2_tl() {
  const Scalar d = Scalar::field_generator(NumberField::sqrt(2));
  return tl_instance(d, d);
}

}  // namespace

TEST_CASE("diagram counts are Catalan numbers, checked against brute force") {
  const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int k = 0; k <= 7; ++k) {
    CHECK(oracle::noncrossing_count(k) == expected[k]);
    CHECK(tl_basis(k).size() == expected[k]);
    CHECK(catalan(k) == expected[k]);
  }
}

TEST_CASE("basis diagrams are distinct noncrossing perfect matchings") {
  for (int k = 0; k <= 6; ++k) {
    const auto b = tl_basis(k);
    std::set<Matching> seen(b.begin(), b.end());
    CHECK(seen.size() == b.size());
    for (const auto& m : b) {
      CHECK(oracle::crossing_free(m));
      for (int p = 0; p < 2 * k; ++p) CHECK(m[m[p]] == p);
      CHECK(parse_matching(matching_str(m)) == m);
    }
  }
}

TEST_CASE("jones relations in generic TL") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dm());
  for (int eps : {1, -1})
    for (int k = 2; k <= 5; ++k) {
      const Color c{k, eps};
      for (int i = 1; i < k; ++i) {
        const Element E = e_gen(*tl, c, i);
        // The loop of E_i^2 bounds the region of arc i-1, sign eps*(-1)^i,
        // and so lies in a region of sign eps*(-1)^(i+1).
        const int sign = eps * ((i % 2) ? 1 : -1);
        const Scalar d = sign > 0 ? Scalar::dp() : Scalar::dm();
        CHECK(pa_mult(*tl, E, E) == d * E);
        if (i + 1 < k) {
          const Element F = e_gen(*tl, c, i + 1);
          CHECK(pa_mult(*tl, pa_mult(*tl, E, F), E) == E);
          CHECK(pa_mult(*tl, pa_mult(*tl, F, E), F) == F);
        }
        for (int j = i + 2; j < k; ++j) {
          const Element G = e_gen(*tl, c, j);
          CHECK(pa_mult(*tl, E, G) == pa_mult(*tl, G, E));
        }
      }
    }
}

TEST_CASE("jones projection helper agrees with the last generator") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dm());
  for (int k = 1; k <= 4; ++k) CHECK(jones_projection(*tl, k, 1).E == e_gen(*tl, {k + 1, 1}, k));
  CHECK_FALSE(jones_projection(*tl, 2, 1).e.has_value());
  const auto bal = tl_instance(Scalar::dp(), Scalar::dp());
  CHECK(jones_projection(*bal, 2, 1).e.has_value());
}

TEST_CASE("sphericality needs equal moduli") {
  CHECK(check_spherical(*tl_instance(Scalar::dp(), Scalar::dp()), 4).ok());
  const LawReport bad = check_spherical(*tl_instance(Scalar::dp(), Scalar::dm()), 4);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.failures.front().witnesses.empty());
}

TEST_CASE("star is an antimultiplicative involution") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dm());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Color c{1 + static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1};
    const Element x = tl->basis(c, rng() % tl->dim(c)), y = tl->basis(c, rng() % tl->dim(c));
    CHECK(tl->star(tl->star(x)) == x);
    CHECK(tl->star(pa_mult(*tl, x, y)) == pa_mult(*tl, tl->star(y), tl->star(x)));
  }
}

TEST_CASE("gram matrix is symmetric with the loop count on the diagonal") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dp());
  const Matrix g = tl->gram({3, 1});
  CHECK(g.rows() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(g(i, i) == Scalar::dp(3));
    for (int j = 0; j < 5; ++j) CHECK(g(i, j) == g(j, i));
  }
}

TEST_CASE("sqrt2 quotient dimensions follow walks on A3") {
  const auto Q = std::make_shared<TLQuotient>(sqrt2_tl());
  for (int k = 0; k <= 5; ++k)
    for (int eps : {1, -1}) {
      CHECK(Q->dim({k, eps}) == oracle::a3_walks(k));
      CHECK(quotient_dimension(Q->tl(), k) == oracle::a3_walks(k));
    }
}

TEST_CASE("sqrt2 quotient trace form is positive definite") {
  const auto Q = std::make_shared<TLQuotient>(sqrt2_tl());
  for (int k = 0; k <= 4; ++k)
    for (const Scalar& m : leading_minors(Q->basis_gram(k))) CHECK(m.sign() == 1);
}

TEST_CASE("projection to the quotient respects multiplication") {
  const auto Q = std::make_shared<TLQuotient>(sqrt2_tl());
  const TLAlgebra& tl = Q->tl();
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const Color c{2 + static_cast<int>(rng() % 2), 1};
    const Element x = tl.basis(c, rng() % tl.dim(c)), y = tl.basis(c, rng() % tl.dim(c));
    CHECK(Q->project(pa_mult(tl, x, y)) == pa_mult(*Q, Q->project(x), Q->project(y)));
    CHECK(Q->project(Q->lift(Q->project(x))) == Q->project(x));
  }
}
