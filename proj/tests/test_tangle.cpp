#include <fstream>
#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "multicat_laws.hpp"
#include "plancalc/planar_algebra.hpp"
#include "plancalc/tl.hpp"

using namespace plancalc;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(PLANCALC_FIXTURES) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string clause_of(const std::string& json) { return validate(raw_from_json(json)).clause; }

PlanarTangle random_with(std::mt19937_64& rng, Color ext, int discs) {
  RandomTangleOptions o;
  o.external = ext;
  o.discs = discs;
  o.max_k = 3;
  return random_tangle(rng, o);
}

}  // namespace

TEST_CASE("validation names the failing clause") {
  CHECK(validate(raw_from_json(fixture("identity2p.json"))).ok);
  CHECK(clause_of(fixture("crossing.json")) == "non-planarity");
  CHECK(clause_of(R"({"format":"plancalc/1","external":{"k":1,"eps":"+"},"internal":[],"strings":[]})") ==
        "marked point unmatched");
  CHECK(clause_of(R"({"format":"plancalc/1","external":{"k":1,"eps":"+"},"internal":[],
                      "strings":[[[0,1],[0,5]]]})") == "dart out of range");
  // Straight strands from a + disc to a - disc.
  CHECK(clause_of(R"({"format":"plancalc/1","external":{"k":1,"eps":"+"},"internal":[{"k":1,"eps":"-"}],
                      "strings":[[[0,1],[1,1]],[[0,2],[1,2]]]})") == "shading");
  CHECK_THROWS_AS(tangle_from_json(fixture("crossing.json")), TangleError);
}

TEST_CASE("schema errors are distinct from tangle errors") {
  CHECK_THROWS_AS(raw_from_json(fixture("malformed.json")), SchemaError);
  CHECK_THROWS_AS(raw_from_json(fixture("badschema.json")), SchemaError);
  CHECK_THROWS_AS(raw_from_json(fixture("wrongformat.json")), SchemaError);
}

TEST_CASE("json round trip preserves the canonical code") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const PlanarTangle T = random_with(rng, {static_cast<int>(rng() % 4), rng() % 2 ? 1 : -1}, 1 + rng() % 3);
    const PlanarTangle U = tangle_from_json(tangle_to_json(T));
    CHECK(T == U);
    CHECK(tangle_to_json(U) == tangle_to_json(T));
  }
}

TEST_CASE("canonical code forgets the input presentation") {
  // The same multiplication tangle with strings listed in reverse order.
  const PlanarTangle T = tangle_from_json(fixture("mult2p.json"));
  RawTangle raw = T.to_raw();
  std::reverse(raw.strings.begin(), raw.strings.end());
  for (auto& s : raw.strings) std::swap(s.first, s.second);
  CHECK(PlanarTangle::from_raw(raw) == T);
}

TEST_CASE("identity laws and star involution on random tangles") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const PlanarTangle T = random_with(rng, {1 + static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1}, 2);
    CHECK(compose_at(identity_tangle(T.external()), 1, T) == T);
    for (int i = 1; i <= T.num_internal(); ++i) CHECK(compose_at(T, i, identity_tangle(T.color(i))) == T);
    CHECK(star(star(T)) == T);
  }
}

TEST_CASE("relabelling by a permutation and back is the identity") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const PlanarTangle T = random_with(rng, {2, 1}, 3);
    const int n = T.num_internal();
    std::vector<int> sigma(n), inv(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    for (int i = 0; i < n; ++i) inv[sigma[i] - 1] = i + 1;
    CHECK(relabel(relabel(T, sigma), inv) == T);
  }
}

TEST_CASE("a loop changes the isotopy class") {
  const PlanarTangle T = tangle_from_json(fixture("mult2p.json"));
  const PlanarTangle U = add_loop(T, 0);
  CHECK(U != T);
  CHECK(U.num_loops() == T.num_loops() + 1);
  CHECK(tangle_from_json(fixture("loop_in_mult.json")).num_loops() == 1);
}

TEST_CASE("builtin tangles have the documented colours") {
  const Color c{2, 1};
  CHECK(builtin_tangle(BuiltinKind::Multiplication, c).num_internal() == 2);
  CHECK(builtin_tangle(BuiltinKind::Inclusion, c).external() == Color{3, 1});
  CHECK(builtin_tangle(BuiltinKind::Rotation, c).external() == Color{2, -1});
  CHECK(builtin_tangle(BuiltinKind::JonesProjection, c).external() == Color{3, 1});
  CHECK(builtin_tangle(BuiltinKind::Sm, c, 3).external() == Color{4, 1});
  CHECK(builtin_tangle(BuiltinKind::LeftCondExp, c).external() == Color{1, -1});
  CHECK(builtin_tangle(BuiltinKind::RightClosure, c).external().k == 0);
}

TEST_CASE("rotation applied 2k times is the identity tangle") {
  for (int k = 1; k <= 4; ++k) {
    Color c{k, 1};
    PlanarTangle T = identity_tangle(c);
    for (int t = 0; t < 2 * k; ++t) {
      const PlanarTangle R = builtin_tangle(BuiltinKind::Rotation, T.external());
      T = compose_at(R, 1, T);
    }
    CHECK(T == identity_tangle(c));
  }
}

TEST_CASE("multicategory laws hold for generic TL") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dm());
  const LawReport r = verify_multicat(*tl, 60, 17, 3);
  CHECK(r.checked >= 60);
  CHECK(r.ok());
}

TEST_CASE("multicategory laws on random composable triples") {
  std::mt19937_64 rng(21);
  laws::Tally t;
  for (int s = 0; s < 100; ++s) laws::check_triple(rng, 3, t);
  for (const auto& [law, n] : t.checked) {
    INFO(law);
    CHECK(n > 0);
    CHECK(t.failed[law] == 0);
  }
  CHECK(t.checked.size() == 7);
}
