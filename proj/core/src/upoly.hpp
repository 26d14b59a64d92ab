// Dense univariate polynomials over Q, coefficients low degree first.
#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace plancalc::upoly {

using Poly = std::vector<mpq_class>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const mpq_class& c);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Poly monic(const Poly& a);
Poly gcd(const Poly& a, const Poly& b);
// s*a + t*b = g with g monic
void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
mpq_class eval(const Poly& p, const mpq_class& x);
int sign(const mpq_class& x);
// Enclosure of p over [lo, hi].
std::pair<mpq_class, mpq_class> eval_interval(const Poly& p, const mpq_class& lo,
                                              const mpq_class& hi);
// Number of distinct real roots in (lo, hi].
int sturm_count(const Poly& p, const mpq_class& lo, const mpq_class& hi);

}  // namespace plancalc::upoly
