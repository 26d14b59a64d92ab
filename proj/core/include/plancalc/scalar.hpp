#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plancalc {

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Q[x]/(minpoly) with a real embedding fixed by an isolating interval.
class NumberField {
 public:
  // minpoly monic, low degree first; exactly one real root in [lo, hi].
  NumberField(std::vector<mpq_class> minpoly, mpq_class lo, mpq_class hi);

  static std::shared_ptr<const NumberField> sqrt(long n);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<mpq_class>& minpoly() const { return minpoly_; }
  mpq_class lo() const;
  mpq_class hi() const;
  // Narrow the isolating interval until its width is below w.
  std::pair<mpq_class, mpq_class> interval(const mpq_class& w) const;
  std::string describe() const;

 private:
  std::vector<mpq_class> minpoly_;
  // Refined in place by interval(); guarded by mu_.
  mutable mpq_class lo_, hi_;
  mutable std::mutex mu_;
  bool rational_root_ = false;
  void bisect() const;
};

using Field = std::shared_ptr<const NumberField>;

// Either a Laurent polynomial in dp, dm over Q (ring == nullptr) or an
// element of a number field.
class Scalar {
 public:
  using Exp = std::pair<int, int>;
  using Terms = std::map<Exp, mpq_class>;

  Scalar() = default;
  Scalar(long c);  // NOLINT: generic constant
  static Scalar generic(const mpq_class& c);
  static Scalar monomial(const mpq_class& c, int i, int j);
  static Scalar dp(int e = 1) { return monomial(1, e, 0); }
  static Scalar dm(int e = 1) { return monomial(1, 0, e); }
  static Scalar in_field(const Field& f, std::vector<mpq_class> coeffs);
  static Scalar field_constant(const Field& f, const mpq_class& c);
  static Scalar field_generator(const Field& f);
  static Scalar zero(const Field& ring);
  static Scalar one(const Field& ring);

  const Field& ring() const { return field_; }
  bool is_generic() const { return field_ == nullptr; }
  bool is_zero() const { return is_generic() ? terms_.empty() : coeffs_.empty(); }
  bool is_one() const;
  const Terms& terms() const { return terms_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }
  // Total order on representations, for use as map keys.
  bool operator<(const Scalar& b) const;

  Scalar scaled(const mpq_class& c) const;
  // Field elements: any nonzero. Generic: nonzero monomials only.
  bool invertible() const;
  Scalar inverse() const;
  // Generic: exact polynomial quotient, throws std::domain_error if inexact.
  Scalar exact_div(const Scalar& b) const;
  // Field: sign of the real embedding. Generic: sign of a constant.
  int sign() const;
  double to_double() const;
  // The value if it is a rational constant.
  bool as_rational(mpq_class& out) const;
  std::string to_string() const;

 private:
  Field field_;
  Terms terms_;
  std::vector<mpq_class> coeffs_;
  void check_ring(const Scalar& b) const;
  void normalize();
};

// Ring homomorphism dp -> x, dm -> y.
Scalar specialize(const Scalar& a, const Scalar& x, const Scalar& y);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace plancalc
