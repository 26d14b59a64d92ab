#include "plancalc/scalar.hpp"

#include <cmath>
#include <ostream>
#include <mutex>
#include <sstream>

#include "upoly.hpp"

namespace plancalc {

namespace up = upoly;

NumberField::NumberField(std::vector<mpq_class> minpoly, mpq_class lo, mpq_class hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  up::trim(minpoly_);
  if (minpoly_.size() < 2) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  if (minpoly_.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  if (!(lo_ <= hi_)) throw std::invalid_argument("empty isolating interval");
  if (up::eval(minpoly_, lo_) == 0) {
    hi_ = lo_;
    rational_root_ = true;
  } else if (up::eval(minpoly_, hi_) == 0) {
    lo_ = hi_;
    rational_root_ = true;
  } else if (up::sturm_count(minpoly_, lo_, hi_) != 1) {
    throw std::invalid_argument("interval does not isolate exactly one real root");
  }
  if (rational_root_ && degree() > 1)
    throw std::invalid_argument("minimal polynomial has a rational root");
  if (!rational_root_) interval(mpq_class(1, 1 << 20));
}

std::shared_ptr<const NumberField> NumberField::sqrt(long n) {
  if (n < 0) throw std::invalid_argument("sqrt of a negative integer has no real embedding");
  mpz_class r;
  mpz_class nz(n);
  mpz_sqrt(r.get_mpz_t(), nz.get_mpz_t());
  if (r * r == nz) return std::make_shared<NumberField>(std::vector<mpq_class>{mpq_class(-r), 1}, mpq_class(r), mpq_class(r));
  return std::make_shared<NumberField>(std::vector<mpq_class>{mpq_class(-n), 0, 1}, mpq_class(r),
                                       mpq_class(r + 1));
}

mpq_class NumberField::lo() const {
  std::lock_guard<std::mutex> lock(mu_);
  return lo_;
}
mpq_class NumberField::hi() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hi_;
}

void NumberField::bisect() const {
  mpq_class mid = (lo_ + hi_) / 2;
  int smid = sgn(up::eval(minpoly_, mid));
  if (smid == 0) {
    lo_ = hi_ = mid;
    return;
  }
  if (smid == sgn(up::eval(minpoly_, lo_)))
    lo_ = mid;
  else
    hi_ = mid;
}

std::pair<mpq_class, mpq_class> NumberField::interval(const mpq_class& w) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (hi_ - lo_ >= w && lo_ != hi_) bisect();
  return {lo_, hi_};
}

namespace {
std::string poly_string(const std::vector<mpq_class>& p, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] == 0) continue;
    mpq_class c = p[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}
}  // namespace

std::string NumberField::describe() const {
  // The interval narrows over time; print a fixed-precision root instead.
  const auto [a, b] = interval(mpq_class(1, 1000000000000L));
  std::ostringstream os;
  os.precision(12);
  os << "Q[x]/(" << poly_string(minpoly_, "x") << "), x = " << mpq_class((a + b) / 2).get_d();
  return os.str();
}

Scalar::Scalar(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

// Callers may pass fractions built from a numerator and denominator, which GMP
// does not reduce; arithmetic assumes reduced operands.
Scalar Scalar::generic(const mpq_class& c) { return monomial(c, 0, 0); }

Scalar Scalar::monomial(const mpq_class& c, int i, int j) {
  Scalar s;
  mpq_class q(c);
  q.canonicalize();
  if (q != 0) s.terms_[{i, j}] = q;
  return s;
}

Scalar Scalar::in_field(const Field& f, std::vector<mpq_class> coeffs) {
  if (!f) throw std::invalid_argument("null field");
  Scalar s;
  s.field_ = f;
  s.coeffs_ = std::move(coeffs);
  for (auto& q : s.coeffs_) q.canonicalize();
  s.normalize();
  return s;
}

Scalar Scalar::field_constant(const Field& f, const mpq_class& c) { return in_field(f, {c}); }
Scalar Scalar::field_generator(const Field& f) { return in_field(f, {0, 1}); }
Scalar Scalar::zero(const Field& ring) { return ring ? in_field(ring, {}) : Scalar(); }
Scalar Scalar::one(const Field& ring) { return ring ? in_field(ring, {1}) : Scalar(1); }

void Scalar::normalize() {
  if (field_) {
    up::trim(coeffs_);
    if (static_cast<int>(coeffs_.size()) > field_->degree()) coeffs_ = up::mod(coeffs_, field_->minpoly());
  } else {
    for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

void Scalar::check_ring(const Scalar& b) const {
  if (field_ != b.field_ && !(field_ && b.field_ && field_->minpoly() == b.field_->minpoly() &&
                              field_->lo() <= b.field_->hi() && b.field_->lo() <= field_->hi()))
    throw RingMismatch("scalars from different coefficient rings");
}

bool Scalar::is_one() const {
  if (field_) return coeffs_.size() == 1 && coeffs_[0] == 1;
  return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} && terms_.begin()->second == 1;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& c : r.coeffs_) c = -c;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  check_ring(b);
  if (field_) {
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    up::trim(coeffs_);
    return *this;
  }
  for (const auto& [e, c] : b.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
  check_ring(b);
  if (field_) {
    if (coeffs_.empty() || b.coeffs_.empty()) {
      coeffs_.clear();
      return *this;
    }
    coeffs_ = up::mul(coeffs_, b.coeffs_);
    normalize();
    return *this;
  }
  Terms out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : b.terms_) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  terms_ = std::move(out);
  normalize();
  return *this;
}

bool Scalar::operator==(const Scalar& b) const {
  check_ring(b);
  return field_ ? coeffs_ == b.coeffs_ : terms_ == b.terms_;
}

bool Scalar::operator<(const Scalar& b) const {
  if (field_ != b.field_) return field_.get() < b.field_.get();
  return field_ ? coeffs_ < b.coeffs_ : terms_ < b.terms_;
}

Scalar Scalar::scaled(const mpq_class& c) const {
  mpq_class q(c);
  q.canonicalize();
  if (q == 0) return zero(field_);
  Scalar r(*this);
  for (auto& x : r.coeffs_) x *= q;
  for (auto& [e, x] : r.terms_) x *= q;
  return r;
}

bool Scalar::invertible() const {
  if (field_) return !coeffs_.empty();
  return terms_.size() == 1;
}

Scalar Scalar::inverse() const {
  if (field_) {
    if (coeffs_.empty()) throw std::domain_error("inverse of zero");
    up::Poly g, s, t;
    up::xgcd(coeffs_, field_->minpoly(), g, s, t);
    if (up::degree(g) != 0) throw std::domain_error("minimal polynomial is reducible");
    return in_field(field_, s);
  }
  if (terms_.size() != 1) throw std::domain_error("generic scalar is not a unit");
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e.first, -e.second);
}

namespace {
using Terms = Scalar::Terms;

// Shift to nonnegative exponents with no monomial factor; returns the shift.
std::pair<int, int> strip(Terms& t) {
  int mi = t.begin()->first.first, mj = t.begin()->first.second;
  for (const auto& [e, c] : t) {
    mi = std::min(mi, e.first);
    mj = std::min(mj, e.second);
  }
  Terms out;
  for (const auto& [e, c] : t) out.emplace(Scalar::Exp{e.first - mi, e.second - mj}, c);
  t = std::move(out);
  return {mi, mj};
}
}  // namespace

Scalar Scalar::exact_div(const Scalar& b) const {
  check_ring(b);
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (field_) return *this * b.inverse();
  if (is_zero()) return Scalar();
  if (b.terms_.size() == 1) return *this * b.inverse();
  Terms num = terms_, den = b.terms_;
  auto [ai, aj] = strip(num);
  auto [bi, bj] = strip(den);
  const auto [lead_e, lead_c] = *den.rbegin();
  Terms quot;
  while (!num.empty()) {
    const auto [e, c] = *num.rbegin();
    if (e.first < lead_e.first || e.second < lead_e.second)
      throw std::domain_error("inexact Laurent division");
    Exp qe{e.first - lead_e.first, e.second - lead_e.second};
    mpq_class qc = c / lead_c;
    quot[qe] += qc;
    for (const auto& [de, dc] : den) {
      Exp te{de.first + qe.first, de.second + qe.second};
      auto [it, fresh] = num.emplace(te, -qc * dc);
      if (!fresh) {
        it->second -= qc * dc;
        if (it->second == 0) num.erase(it);
      }
    }
  }
  Scalar r;
  for (const auto& [e, c] : quot)
    if (c != 0) r.terms_[{e.first + ai - bi, e.second + aj - bj}] = c;
  return r;
}

int Scalar::sign() const {
  if (!field_) {
    mpq_class c;
    if (!as_rational(c)) throw std::domain_error("sign of a non-constant generic scalar");
    return sgn(c);
  }
  if (coeffs_.empty()) return 0;
  mpq_class w(1, 1 << 10);
  for (;;) {
    auto [lo, hi] = field_->interval(w);
    auto [vlo, vhi] = up::eval_interval(coeffs_, lo, hi);
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    if (lo == hi) return sgn(vlo);
    w /= 1 << 16;
  }
}

double Scalar::to_double() const {
  if (!field_) {
    mpq_class c;
    if (!as_rational(c)) throw std::domain_error("to_double of a non-constant generic scalar");
    return c.get_d();
  }
  auto [lo, hi] = field_->interval(mpq_class(1, 1) / mpq_class(mpz_class(1) << 80));
  mpq_class mid = (lo + hi) / 2;
  return up::eval(coeffs_, mid).get_d();
}

bool Scalar::as_rational(mpq_class& out) const {
  if (field_) {
    if (coeffs_.size() > 1) return false;
    out = coeffs_.empty() ? mpq_class(0) : coeffs_[0];
    return true;
  }
  if (terms_.empty()) {
    out = 0;
    return true;
  }
  if (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0}) {
    out = terms_.begin()->second;
    return true;
  }
  return false;
}

std::string Scalar::to_string() const {
  if (field_) return poly_string(coeffs_, "x");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    bool unit = e.first == 0 && e.second == 0;
    if (unit) os << a.get_str();
    else {
      bool star = false;
      if (a != 1) {
        os << a.get_str();
        star = true;
      }
      auto var = [&](const char* name, int p) {
        if (p == 0) return;
        if (star) os << "*";
        os << name;
        if (p != 1) os << "^" << p;
        star = true;
      };
      var("dp", e.first);
      var("dm", e.second);
    }
    first = false;
  }
  return os.str();
}

Scalar specialize(const Scalar& a, const Scalar& x, const Scalar& y) {
  if (!a.is_generic()) throw RingMismatch("specialize expects a generic scalar");
  if (x.ring() != y.ring()) throw RingMismatch("specialization targets in different rings");
  const Field& f = x.ring();
  auto power = [&f](const Scalar& base, int e, std::map<int, Scalar>& cache) -> const Scalar& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Scalar b = e < 0 ? base.inverse() : base;
    Scalar r = Scalar::one(f);
    for (int k = 0; k < std::abs(e); ++k) r *= b;
    return cache.emplace(e, std::move(r)).first->second;
  };
  std::map<int, Scalar> px, py;
  Scalar out = Scalar::zero(f);
  for (const auto& [e, c] : a.terms()) out += (power(x, e.first, px) * power(y, e.second, py)).scaled(c);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace plancalc
