#include "upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace plancalc::upoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const mpq_class& c) {
  if (c == 0) return {};
  Poly r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  Poly r(a);
  trim(r);
  Poly q;
  const mpq_class lead = b[db];
  while (degree(r) >= db) {
    const int dr = degree(r);
    const int shift = dr - db;
    mpq_class c = r[dr] / lead;
    if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1);
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly derivative(const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

Poly monic(const Poly& a) {
  const int d = degree(a);
  if (d < 0) return {};
  return scale(a, 1 / a[d]);
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x(a), y(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
  Poly r0(a), r1(b), s0{1}, s1, t0, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const int d = degree(r0);
  if (d < 0) {
    g.clear();
    s.clear();
    t.clear();
    return;
  }
  mpq_class inv = 1 / r0[d];
  g = scale(r0, inv);
  s = scale(s0, inv);
  t = scale(t0, inv);
}

mpq_class eval(const Poly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign(const mpq_class& x) { return sgn(x); }

std::pair<mpq_class, mpq_class> eval_interval(const Poly& p, const mpq_class& lo,
                                              const mpq_class& hi) {
  mpq_class alo = 0, ahi = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    mpq_class c[4] = {alo * lo, alo * hi, ahi * lo, ahi * hi};
    mpq_class mn = c[0], mx = c[0];
    for (const auto& v : c) {
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    alo = mn + *it;
    ahi = mx + *it;
  }
  return {alo, ahi};
}

namespace {
int sign_changes(const std::vector<Poly>& seq, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int sturm_count(const Poly& p, const mpq_class& lo, const mpq_class& hi) {
  std::vector<Poly> seq;
  Poly a(p);
  trim(a);
  if (a.empty()) throw std::domain_error("sturm sequence of zero polynomial");
  Poly b = derivative(a);
  seq.push_back(a);
  while (!b.empty()) {
    seq.push_back(b);
    Poly r = mod(a, b);
    for (auto& c : r) c = -c;
    a = std::move(b);
    b = std::move(r);
  }
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

}  // namespace plancalc::upoly
