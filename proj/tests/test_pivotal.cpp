#include <cmath>
#include <random>

#include "doctest.h"
#include "plancalc/pivotal.hpp"
#include "plancalc/render.hpp"
#include "plancalc/tl.hpp"

using namespace plancalc;

namespace {

using QMat = std::vector<mpq_class>;

int ipow(int n, int k) {
  int r = 1;
  while (k-- > 0) r *= n;
  return r;
}

QMat random_label(std::mt19937_64& rng, int side) {
  QMat m(static_cast<std::size_t>(side) * side);
  for (auto& x : m) x = static_cast<int>(rng() % 7) - 3;
  return m;
}

QMat matprod(const QMat& a, const QMat& b, int s) {
  QMat c(a.size(), 0);
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < s; ++k)
      for (int j = 0; j < s; ++j) c[i * s + j] += a[i * s + k] * b[k * s + j];
  return c;
}

Element as_element(Color c, const QMat& m) {
  Element e{c, {}};
  for (const auto& x : m) e.coeffs.push_back(Scalar::generic(x));
  return e;
}

PivotalModel model2() { return build_model(2, {2, 1, 1, 3}, mpq_class(1, 2)); }

std::vector<QMat> labels_for(std::mt19937_64& rng, const PlanarTangle& T, int n) {
  std::vector<QMat> labels;
  for (const Color& c : T.internal()) labels.push_back(random_label(rng, ipow(n, c.k)));
  return labels;
}

}  // namespace

TEST_CASE("moduli come from the pairing balance") {
  const PivotalModel M = model2();
  CHECK(M.delta_plus() == 4);
  CHECK(M.delta_minus() == 1);
  CHECK_THROWS_AS(build_model(2, {1, 2, 2, 4}), ModelError);
}

TEST_CASE("multiplication evaluates to the matrix product, top disc on the left") {
  const PivotalModel M = model2();
  std::mt19937_64 rng(1);
  for (int k = 1; k <= 2; ++k) {
    const int s = ipow(2, k);
    const QMat a = random_label(rng, s), b = random_label(rng, s);
    const PlanarTangle T = builtin_tangle(BuiltinKind::Multiplication, {k, 1});
    CHECK(evaluate(M, T, {a, b}) == matprod(b, a, s));
  }
}

TEST_CASE("inclusion tensors with the identity on the right") {
  const PivotalModel M = model2();
  std::mt19937_64 rng(2);
  const QMat a = random_label(rng, 2);
  const QMat out = evaluate(M, builtin_tangle(BuiltinKind::Inclusion, {1, 1}), {a});
  for (int r = 0; r < 2; ++r)
    for (int x = 0; x < 2; ++x)
      for (int c = 0; c < 2; ++c)
        for (int y = 0; y < 2; ++y) CHECK(out[(r * 2 + x) * 4 + c * 2 + y] == (x == y ? a[r * 2 + c] : 0));
}

TEST_CASE("evaluation does not depend on the layout") {
  const PivotalModel M = model2();
  std::mt19937_64 rng(3);
  int differing_layouts = 0;
  for (int t = 0; t < 100; ++t) {
    RandomTangleOptions o;
    o.external = {static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1};
    o.discs = 1 + rng() % 2;
    o.max_k = 2;
    o.max_width = 6;
    const PlanarTangle T = random_tangle(rng, o);
    const auto labels = labels_for(rng, T, 2);
    const std::uint64_t s1 = rng(), s2 = rng();
    if (standard_form(T, s1).slices.size() != standard_form(T, s2).slices.size() ||
        standard_form(T, s1).to_json() != standard_form(T, s2).to_json())
      ++differing_layouts;
    CHECK(evaluate(M, T, labels, s1) == evaluate(M, T, labels, s2));
  }
  CHECK(differing_layouts > 10);
}

TEST_CASE("float mode agrees with exact mode") {
  const PivotalModel M = model2();
  const PivotalModel F = build_model_float(2, {2, 1, 1, 3}, 0.5);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    RandomTangleOptions o;
    o.external = {1 + static_cast<int>(rng() % 2), 1};
    o.discs = 2;
    o.max_k = 2;
    const PlanarTangle T = random_tangle(rng, o);
    const auto labels = labels_for(rng, T, 2);
    std::vector<std::vector<double>> fl;
    for (const auto& l : labels) {
      fl.emplace_back();
      for (const auto& x : l) fl.back().push_back(x.get_d());
    }
    const SlicePlan plan = standard_form(T, t);
    const auto ex = evaluate_plan(M, plan, labels);
    const auto fv = evaluate_plan(F, plan, fl);
    REQUIRE(ex.size() == fv.size());
    for (std::size_t i = 0; i < ex.size(); ++i) CHECK(std::abs(ex[i].get_d() - fv[i]) <= 1e-9);
  }
}

TEST_CASE("both zig-zags are the identity") {
  const PivotalModel M = model2();
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
      CHECK(plan_tangle(z) == plan_tangle(straight));
      CHECK(evaluate_plan(M, z, std::vector<QMat>{}) == QMat{1, 0, 0, 1});
    }
  }
}

TEST_CASE("rotating a label 2k times gives it back") {
  const auto M = std::make_shared<const PivotalModel>(model2());
  const ModelPA P(M);
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 2; ++k) {
    const QMat a = random_label(rng, ipow(2, k));
    Element x = as_element({k, 1}, a);
    for (int t = 0; t < 2 * k; ++t) x = P.act(builtin_tangle(BuiltinKind::Rotation, x.color), {x});
    CHECK(x == as_element({k, 1}, a));
  }
}

TEST_CASE("TL maps into the model as a planar algebra map") {
  for (int n : {2, 3}) {
    std::vector<mpq_class> g(n * n, 0);
    for (int i = 0; i < n; ++i) g[i * n + (n - 1 - i)] = i + 1;
    const auto M = std::make_shared<const PivotalModel>(build_model(n, g, mpq_class(1, 2)));
    const ModelPA P(M);
    const auto tl = tl_instance(Scalar::generic(M->delta_plus()), Scalar::generic(M->delta_minus()));
    auto image = [&](const Element& x) {
      Element e = P.zero(x.color);
      for (int d = 0; d < tl->dim(x.color); ++d) {
        if (x.coeffs[d].is_zero()) continue;
        const QMat m = matching_matrix(*M, x.color, tl->diagrams(x.color.k)[d]);
        e = e + x.coeffs[d] * as_element(x.color, m);
      }
      return e;
    };
    std::mt19937_64 rng(6 + n);
    for (int t = 0; t < 40; ++t) {
      RandomTangleOptions o;
      o.external = {static_cast<int>(rng() % 4), rng() % 2 ? 1 : -1};
      o.discs = 1 + rng() % 2;
      o.max_k = 3;
      o.max_width = 6;
      const PlanarTangle T = random_tangle(rng, o);
      std::vector<Element> in, img;
      for (const Color& c : T.internal()) {
        in.push_back(tl->basis(c, rng() % tl->dim(c)));
        img.push_back(image(in.back()));
      }
      CHECK(image(tl->act(T, in)) == P.act(T, img));
    }
  }
}

TEST_CASE("svg output is deterministic and follows the layout") {
  const PlanarTangle T = builtin_tangle(BuiltinKind::Multiplication, {2, 1});
  const std::string a = render_svg(T, 1), b = render_svg(T, 1);
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(render_svg(standard_form(T, 1)) == a);
}
