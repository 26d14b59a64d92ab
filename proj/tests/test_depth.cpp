#include "doctest.h"
#include "plancalc/depth.hpp"
#include "plancalc/tl.hpp"

using namespace plancalc;

namespace {

std::shared_ptr<TLQuotient> quotient(const Field& f) {
  const Scalar d = Scalar::field_generator(f);
  return std::make_shared<TLQuotient>(tl_instance(d, d));
}

// Oracle reporting the ideal as full from level `from_plus` / `from_minus` on.
DepthOptions staircase(int from_plus, int from_minus, int dim = 10) {
  DepthOptions o;
  o.oracle = [=](int k, int eps) {
    const bool full = k >= (eps > 0 ? from_plus : from_minus);
    return SpanRank{full ? dim : dim - 1, dim};
  };
  return o;
}

}  // namespace

TEST_CASE("sqrt2 quotient has depth (2,2) with certificates") {
  const auto Q = quotient(NumberField::sqrt(2));
  const DepthReport r = compute_depth(*Q, 6);
  REQUIRE(r.l_plus.has_value());
  REQUIRE(r.l_minus.has_value());
  CHECK(*r.l_plus == 2);
  CHECK(*r.l_minus == 2);
  CHECK(r.s == 1);
  CHECK(r.parity_ok);
  CHECK_FALSE(r.propagation_violation);
  bool saw_full = false, saw_not_full = false;
  for (const auto& c : r.certificates) {
    CHECK(c.rank <= c.dim);
    CHECK(c.full == (c.rank == c.dim));
    if (c.k == 2 && c.source == "computed") saw_full |= c.full;
    if (c.k == 1 && c.source == "computed") saw_not_full |= !c.full;
  }
  CHECK(saw_full);
  CHECK(saw_not_full);
}

TEST_CASE("golden ratio quotient has the depth of A4") {
  const Field f = std::make_shared<NumberField>(std::vector<mpq_class>{-1, -1, 1}, 1, 2);
  const DepthReport r = compute_depth(*quotient(f), 5);
  CHECK(r.l_plus == 3);
  CHECK(r.l_minus == 3);
}

TEST_CASE("generic TL never fills the basic construction ideal") {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dp());
  const DepthReport r = compute_depth(*tl, 4);
  CHECK_FALSE(r.l_plus.has_value());
  CHECK_FALSE(r.l_minus.has_value());
  CHECK_FALSE(r.s.has_value());
  CHECK(r.to_json().find("exceeds bound") != std::string::npos);
}

TEST_CASE("ideal ranks never exceed the target dimension") {
  const auto Q = quotient(NumberField::sqrt(2));
  for (int k = 1; k <= 3; ++k)
    for (int eps : {1, -1}) {
      const SpanRank r = ideal_is_full(*Q, k, eps);
      CHECK(r.rank <= r.dim);
      CHECK(r.dim == Q->dim({k + 1, eps}));
    }
}

TEST_CASE("parity rule") {
  CHECK(depth_parity_ok(2, 2));
  CHECK(depth_parity_ok(3, 4));
  CHECK(depth_parity_ok(4, 3));
  CHECK_FALSE(depth_parity_ok(2, 3));
  CHECK_FALSE(depth_parity_ok(2, 4));
  CHECK(depth_parity_ok(std::nullopt, 3));
}

TEST_CASE("injected depths are read back from the oracle") {
  const DepthReport r = compute_depth(*tl_instance(Scalar::dp(), Scalar::dp()), 6, staircase(3, 4));
  CHECK(r.l_plus == 3);
  CHECK(r.l_minus == 4);
  CHECK(r.s == 1);
  CHECK(r.parity_ok);
}

TEST_CASE("injected parity violation is flagged") {
  // (3,2): the larger depth is odd.
  const DepthReport r = compute_depth(*tl_instance(Scalar::dp(), Scalar::dp()), 6, staircase(3, 2));
  CHECK(r.l_plus == 3);
  CHECK(r.l_minus == 2);
  CHECK_FALSE(r.parity_ok);
}

TEST_CASE("injected propagation failure is flagged") {
  DepthOptions o;
  // Full at k = 2 but not at k = 3.
  o.oracle = [](int k, int) { return SpanRank{k == 2 ? 5 : 4, 5}; };
  const DepthReport r = compute_depth(*tl_instance(Scalar::dp(), Scalar::dp()), 5, o);
  CHECK(r.propagation_violation);
}

TEST_CASE("cross-sign bound ties the two depths together") {
  // The oracle never reports (k,-) full. Fullness at (k,+) forces (k,-) for
  // even k and (k+1,-) for odd k.
  for (int lp : {2, 3}) {
    const DepthReport r = compute_depth(*tl_instance(Scalar::dp(), Scalar::dp()), 6, staircase(lp, 100));
    CHECK(r.l_minus == (lp % 2 == 0 ? lp : lp + 1));
    bool inferred = false;
    for (const auto& c : r.certificates) inferred |= c.eps < 0 && c.source == "cross-sign";
    CHECK(inferred);
  }
}

TEST_CASE("column tangles fill P(k+m-1) from the depth on") {
  const auto Q = quotient(NumberField::sqrt(2));
  for (int eps : {1, -1})
    for (int k = 2; k <= 3; ++k)
      for (int m = 1; m <= 3; ++m) {
        const SpanRank r = s_range_rank(*Q, k, eps, m);
        CHECK(r.dim == Q->dim({k + m - 1, eps}));
        CHECK(r.full());
      }
  // Below the depth the column misses part of P(k+1).
  CHECK_FALSE(s_range_rank(*Q, 1, 1, 2).full());
}
