#include <random>

#include "doctest.h"
#include "plancalc/linalg.hpp"
#include "plancalc/scalar.hpp"

using namespace plancalc;

namespace {

Scalar random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2), n(0, 3);
  Scalar s;
  for (int t = n(rng); t > 0; --t) s += Scalar::monomial(mpq_class(c(rng), 1 + (c(rng) + 3) % 3), e(rng), e(rng));
  return s;
}

Scalar random_field(std::mt19937_64& rng, const Field& f) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<mpq_class> v;
  for (int i = 0; i < f->degree(); ++i) v.emplace_back(c(rng), 1 + (c(rng) + 4) % 4);
  return Scalar::in_field(f, v);
}

}  // namespace

TEST_CASE("laurent ring axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a * Scalar(1) == a);
  }
}

TEST_CASE("number field ring axioms and inverses") {
  std::mt19937_64 rng(12);
  const Field f = NumberField::sqrt(2);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = random_field(rng, f), b = random_field(rng, f), c = random_field(rng, f);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("sqrt2 generator squares to 2 and is positive") {
  const Field f = NumberField::sqrt(2);
  const Scalar d = Scalar::field_generator(f);
  CHECK(d * d == Scalar::field_constant(f, 2));
  CHECK(d.sign() == 1);
  CHECK(d.to_double() == doctest::Approx(1.41421356237));
  CHECK((Scalar::field_constant(f, 1) - d).sign() == -1);
}

TEST_CASE("golden ratio field via an explicit minimal polynomial") {
  // x^2 - x - 1, positive root in [1, 2].
  const Field f = std::make_shared<NumberField>(std::vector<mpq_class>{-1, -1, 1}, 1, 2);
  const Scalar g = Scalar::field_generator(f);
  CHECK(g * g == g + Scalar::one(f));
  CHECK(g.to_double() == doctest::Approx(1.6180339887));
}

TEST_CASE("mixing rings throws") {
  const Scalar a = Scalar::field_generator(NumberField::sqrt(2));
  const Scalar b = Scalar::field_generator(NumberField::sqrt(3));
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(a * Scalar::dp(), RingMismatch);
}

TEST_CASE("rationals are canonical") {
  const Scalar a = Scalar::generic(mpq_class(2, 4));
  const Scalar b = Scalar::generic(mpq_class(1, 2));
  CHECK(a == b);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("laurent inverses and exact division") {
  const Scalar x = Scalar::dp(2) * Scalar::dm(-1);
  CHECK(x.invertible());
  CHECK((x * x.inverse()).is_one());
  const Scalar p = Scalar::dp() + Scalar(1);
  CHECK(((p * p).exact_div(p)) == p);
  CHECK_THROWS_AS((p * p + Scalar(1)).exact_div(p), std::domain_error);
  CHECK_FALSE(p.invertible());
}

TEST_CASE("specialization is a ring map") {
  std::mt19937_64 rng(13);
  const Field f = NumberField::sqrt(2);
  const Scalar x = Scalar::field_generator(f), y = Scalar::field_constant(f, 3);
  for (int t = 0; t < 50; ++t) {
    const Scalar a = random_laurent(rng), b = random_laurent(rng);
    CHECK(specialize(a * b, x, y) == specialize(a, x, y) * specialize(b, x, y));
    CHECK(specialize(a + b, x, y) == specialize(a, x, y) + specialize(b, x, y));
  }
}

TEST_CASE("exact linear algebra over the sqrt2 field") {
  const Field f = NumberField::sqrt(2);
  const Scalar d = Scalar::field_generator(f), one = Scalar::one(f), z = Scalar::zero(f);
  Matrix m(2, 2, z);
  m(0, 0) = d;
  m(0, 1) = one;
  m(1, 0) = one;
  m(1, 1) = d;
  CHECK(determinant(m) == one);
  const Matrix inv = inverse(m);
  CHECK(matmul(m, inv, z) == identity_matrix(2, f));
  Echelon e(2, f);
  CHECK(e.add({d, one}));
  CHECK_FALSE(e.add({d * d, d}));
  CHECK(e.rank() == 1);
}
