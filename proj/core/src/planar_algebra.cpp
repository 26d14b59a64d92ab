#include "plancalc/planar_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "tangle_internal.hpp"

namespace plancalc {

Element operator+(const Element& a, const Element& b) {
  if (!(a.color == b.color)) throw std::invalid_argument("adding elements of different colours");
  Element r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

Element operator-(const Element& a, const Element& b) {
  if (!(a.color == b.color)) throw std::invalid_argument("subtracting elements of different colours");
  Element r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

Element operator*(const Scalar& s, const Element& a) {
  Element r = a;
  for (auto& c : r.coeffs) c = s * c;
  return r;
}

bool is_zero(const Element& x) {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
}

Element PlanarAlgebra::star(const Element&) const { throw std::logic_error(name() + " has no star structure"); }

Element PlanarAlgebra::zero(Color c) const { return {c, Vec(dim(c), Scalar::zero(ring()))}; }

Element PlanarAlgebra::basis(Color c, int i) const {
  Element e = zero(c);
  e.coeffs.at(i) = Scalar::one(ring());
  return e;
}

Element pa_action(const PlanarAlgebra& P, const TangleLinComb& T, const std::vector<Element>& inputs) {
  if (T.terms.empty()) throw std::invalid_argument("empty tangle combination");
  const auto& first = T.terms.front().second;
  Element out = P.zero(first.external());
  for (const auto& [c, t] : T.terms) {
    if (!(t.external() == first.external()) || t.internal() != first.internal())
      throw std::invalid_argument("tangle combination mixes signatures");
    if (c.ring() != P.ring()) throw RingMismatch("tangle coefficient outside the algebra's ring");
    out = out + c * P.act(t, inputs);
  }
  return out;
}

Element pa_mult(const PlanarAlgebra& P, const Element& x, const Element& y) {
  if (!(x.color == y.color)) throw std::invalid_argument("pa_mult colour mismatch");
  return P.act(builtin_tangle(BuiltinKind::Multiplication, x.color), {x, y});
}

Element pa_include(const PlanarAlgebra& P, const Element& x) {
  return P.act(builtin_tangle(BuiltinKind::Inclusion, x.color), {x});
}

Element pa_unit(const PlanarAlgebra& P, Color c) { return P.act(builtin_tangle(BuiltinKind::Unit, c), {}); }

PlanarTangle add_loop(const PlanarTangle& T, int ext_arc) {
  RawTangle raw = T.to_raw();
  int f = T.face_of_arc(T.arc_id(0, ext_arc));
  raw.loops.push_back({RawFace::arc(0, ext_arc), T.face_sign(f) > 0});
  return PlanarTangle::from_raw(raw);
}

std::string LawReport::to_json() const {
  nlohmann::json j;
  j["format"] = "plancalc/1";
  j["checked"] = checked;
  j["failures"] = nlohmann::json::array();
  for (const auto& e : failures)
    j["failures"].push_back({{"law", e.law}, {"witnesses", e.witnesses}, {"expected", e.expected}, {"got", e.got}});
  return j.dump(2);
}

namespace {

// Sweep state for random tangle generation.
struct Sweep {
  int eps;
  std::vector<int> strands;  // frontier end ids
  std::vector<int> gaps;     // region ids, size strands+1
  std::vector<int> partner;
  std::vector<Dart> dart;  // disc -1 for frontier ends
  std::vector<std::pair<Dart, Dart>> strings;
  std::vector<std::pair<int, int>> loops;
  std::vector<std::pair<int, int>> merges;
  int regions = 0;

  int new_region() { return regions++; }
  int new_end(Dart d) {
    partner.push_back(-1);
    dart.push_back(d);
    return static_cast<int>(partner.size()) - 1;
  }
  // frontier end attached to a dart
  int open_from(Dart d) {
    int t = new_end(d), f = new_end({-1, 0});
    partner[t] = f;
    partner[f] = t;
    return f;
  }
  void link(int a, int b) {
    if (dart[a].disc >= 0 && dart[b].disc >= 0) {
      strings.push_back({dart[a], dart[b]});
    } else {
      partner[a] = b;
      partner[b] = a;
    }
  }
  void terminate(int x, Dart d) {
    int q = partner[x];
    int t = new_end(d);
    link(q, t);
  }
  void cap(int g) {
    int a = new_end({-1, 0}), b = new_end({-1, 0});
    partner[a] = b;
    partner[b] = a;
    strands.insert(strands.begin() + g, {a, b});
    int r = gaps[g];
    gaps.insert(gaps.begin() + g + 1, {new_region(), r});
  }
  void cup(int j) {
    int x = strands[j], y = strands[j + 1];
    int inner = gaps[j + 1];
    merges.push_back({gaps[j], gaps[j + 2]});
    if (partner[x] == y) loops.push_back({inner, gaps[j]});
    else link(partner[x], partner[y]);
    strands.erase(strands.begin() + j, strands.begin() + j + 2);
    gaps.erase(gaps.begin() + j + 1, gaps.begin() + j + 3);
  }
  int gap_sign(int g) const { return g % 2 == 0 ? eps : -eps; }
};

}  // namespace

PlanarTangle random_tangle(std::mt19937_64& rng, const RandomTangleOptions& opt) {
  const int K = opt.external.k;
  const int n = opt.discs;
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Sweep s;
  s.eps = opt.external.eps;
  std::vector<Color> cols(n + 1);
  cols[0] = opt.external;
  std::vector<std::vector<int>> labels(n + 1);
  labels[0].assign(detail::narcs_of(opt.external), -1);
  s.gaps.push_back(s.new_region());
  for (int c = 0; c < K; ++c) {
    s.strands.push_back(s.open_from({0, c}));
    s.gaps.push_back(s.new_region());
  }
  for (int c = 0; c + 1 < K; ++c) labels[0][c] = s.gaps[c + 1];
  if (K > 0) labels[0][K - 1] = s.gaps[K];
  labels[0][detail::narcs_of(opt.external) - 1] = s.gaps[0];

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int maxw = std::max(opt.max_width, K + 2);

  auto noise = [&](int count) {
    for (int e = 0; e < count; ++e) {
      int w = static_cast<int>(s.strands.size());
      int choice = rnd(0, 2);
      if (choice == 0 && w + 2 <= maxw) {
        int g = rnd(0, w);
        s.cap(g);
        if (opt.allow_loops && rnd(0, 3) == 0) s.cup(g);
      } else if (choice == 1 && w >= 2) {
        s.cup(rnd(0, w - 2));
      }
    }
  };

  for (int t = 0; t < n; ++t) {
    const int d = order[t] + 1;
    noise(rnd(0, 3));
    int k;
    int want_eps = 0;
    if (!opt.internal.empty()) {
      k = opt.internal[order[t]].k;
      want_eps = opt.internal[order[t]].eps;
    } else {
      k = rnd(0, opt.max_k);
    }
    while (static_cast<int>(s.strands.size()) < k + (want_eps ? 1 : 0)) s.cap(rnd(0, static_cast<int>(s.strands.size())));
    const int w = static_cast<int>(s.strands.size());
    std::vector<int> choices;
    for (int j = 0; j + k <= w; ++j)
      if (!want_eps || s.gap_sign(j) == want_eps) choices.push_back(j);
    const int j = choices[rnd(0, static_cast<int>(choices.size()) - 1)];
    cols[d] = {k, s.gap_sign(j)};
    labels[d].assign(detail::narcs_of(cols[d]), -1);
    if (k == 0) {
      labels[d][0] = s.gaps[j];
      continue;
    }
    for (int i = 0; i < k; ++i) s.terminate(s.strands[j + i], {d, i});
    for (int i = 0; i + 1 < k; ++i) labels[d][i] = s.gaps[j + 1 + i];
    labels[d][k - 1] = s.gaps[j + k];
    labels[d][2 * k - 1] = s.gaps[j];
    std::vector<int> fresh(k + 1);
    fresh[0] = s.gaps[j];
    fresh[k] = s.gaps[j + k];
    for (int c = 1; c < k; ++c) fresh[c] = s.new_region();
    for (int i = 0; i + 1 < k; ++i) labels[d][k + i] = fresh[k - 1 - i];
    for (int c = 0; c < k; ++c) s.strands[j + c] = s.open_from({d, 2 * k - 1 - c});
    std::copy(fresh.begin(), fresh.end(), s.gaps.begin() + j);
  }
  noise(rnd(0, 3));
  while (static_cast<int>(s.strands.size()) > K) s.cup(rnd(0, static_cast<int>(s.strands.size()) - 2));
  while (static_cast<int>(s.strands.size()) < K) {
    int g = rnd(0, static_cast<int>(s.strands.size()));
    s.cap(g);
  }
  for (int c = 0; c < K; ++c) s.terminate(s.strands[c], {0, 2 * K - 1 - c});
  for (int i = 0; i + 1 < K; ++i) labels[0][K + i] = s.gaps[K - 1 - i];

  detail::UnionFind uf(s.regions);
  for (auto [a, b] : s.merges) uf.unite(a, b);
  std::vector<int> ids(s.regions, -1);
  int next = 0;
  auto compact = [&](int x) {
    x = uf.find(x);
    if (ids[x] < 0) ids[x] = next++;
    return ids[x];
  };
  std::vector<int> flat;
  for (int d = 0; d <= n; ++d)
    for (int x : labels[d]) flat.push_back(compact(x));
  std::vector<std::pair<int, int>> loops;
  for (auto [a, b] : s.loops) loops.push_back({compact(a), compact(b)});
  std::vector<Color> internal(cols.begin() + 1, cols.end());
  return assemble_tangle(opt.external, internal, s.strings, flat, loops);
}

namespace {

Scalar small_int(std::mt19937_64& rng, const Field& f) {
  int v = std::uniform_int_distribution<int>(-3, 3)(rng);
  return f ? Scalar::field_constant(f, v) : Scalar(v);
}

Element random_element(const PlanarAlgebra& P, Color c, std::mt19937_64& rng) {
  Element e = P.zero(c);
  for (auto& x : e.coeffs) x = small_int(rng, P.ring());
  return e;
}

std::vector<Element> random_inputs(const PlanarAlgebra& P, const PlanarTangle& T, std::mt19937_64& rng) {
  std::vector<Element> in;
  for (int d = 1; d <= T.num_internal(); ++d) in.push_back(random_element(P, T.color(d), rng));
  return in;
}

std::string show(const Element& e) {
  std::ostringstream os;
  os << e.color.str() << "[";
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) os << (i ? "; " : "") << e.coeffs[i].to_string();
  os << "]";
  return os.str();
}

Color random_color(std::mt19937_64& rng, int max_k) {
  std::uniform_int_distribution<int> kd(0, max_k), sd(0, 1);
  return {kd(rng), sd(rng) ? 1 : -1};
}

}  // namespace

LawReport verify_multicat(const PlanarAlgebra& P, int samples, std::uint64_t seed, int max_k) {
  std::mt19937_64 rng(seed);
  LawReport rep;
  std::uniform_int_distribution<int> nd(1, 2), sd(0, 2);
  for (int s = 0; s < samples; ++s) {
    RandomTangleOptions ot{random_color(rng, max_k), nd(rng), max_k, 6, true, {}};
    PlanarTangle T = random_tangle(rng, ot);
    int i = std::uniform_int_distribution<int>(1, T.num_internal())(rng);
    RandomTangleOptions os{T.color(i), std::min(sd(rng), 3 - T.num_internal()), max_k, 6, true, {}};
    PlanarTangle S = random_tangle(rng, os);
    auto tin = random_inputs(P, T, rng);
    auto sin = random_inputs(P, S, rng);
    std::vector<Element> flat;
    for (int d = 1; d < i; ++d) flat.push_back(tin[d - 1]);
    flat.insert(flat.end(), sin.begin(), sin.end());
    for (int d = i + 1; d <= T.num_internal(); ++d) flat.push_back(tin[d - 1]);
    Element lhs = P.act(compose_at(T, i, S), flat);
    std::vector<Element> nested = tin;
    nested[i - 1] = P.act(S, sin);
    Element rhs = P.act(T, nested);
    ++rep.checked;
    if (!(lhs == rhs)) rep.failures.push_back({"composition", {T.code_hex(), S.code_hex()}, show(rhs), show(lhs)});
  }
  for (int k = 0; k <= max_k; ++k)
    for (int e : {1, -1}) {
      Color c{k, e};
      Element x = random_element(P, c, rng);
      ++rep.checked;
      Element y = P.act(identity_tangle(c), {x});
      if (!(x == y)) rep.failures.push_back({"identity", {identity_tangle(c).code_hex()}, show(x), show(y)});
    }
  return rep;
}

std::optional<std::pair<Scalar, Scalar>> check_modulus(const PlanarAlgebra& P, int kmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::optional<Scalar> val[2];
  int seen[2] = {0, 0};
  for (int s = 0; s < 40; ++s) {
    RandomTangleOptions o{random_color(rng, kmax), std::uniform_int_distribution<int>(0, 2)(rng), kmax, 6, true, {}};
    PlanarTangle T = random_tangle(rng, o);
    auto in = random_inputs(P, T, rng);
    Element base = P.act(T, in);
    if (is_zero(base)) continue;
    int a = std::uniform_int_distribution<int>(0, T.narcs(0) - 1)(rng);
    int sign = T.face_sign(T.face_of_arc(T.arc_id(0, a)));
    Element with = P.act(add_loop(T, a), in);
    std::size_t idx = 0;
    while (base.coeffs[idx].is_zero()) ++idx;
    Scalar ratio;
    try {
      ratio = with.coeffs[idx].exact_div(base.coeffs[idx]);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    if (!(ratio * base == with)) return std::nullopt;
    int slot = sign > 0 ? 0 : 1;
    if (val[slot] && !(*val[slot] == ratio)) return std::nullopt;
    val[slot] = ratio;
    ++seen[slot];
  }
  if (!val[0] || !val[1]) return std::nullopt;
  return std::make_pair(*val[0], *val[1]);
}

LawReport check_spherical(const PlanarAlgebra& P, int kmax) {
  if (!P.connected()) throw std::invalid_argument("check_spherical needs a connected planar algebra");
  LawReport rep;
  for (int k = 0; k <= kmax; ++k)
    for (int e : {1, -1}) {
      Color c{k, e};
      PlanarTangle R = builtin_tangle(BuiltinKind::RightClosure, c);
      PlanarTangle L = builtin_tangle(BuiltinKind::LeftClosure, c);
      for (int i = 0; i < P.dim(c); ++i) {
        Element x = P.basis(c, i);
        Scalar r = P.act(R, {x}).coeffs[0];
        Scalar l = P.act(L, {x}).coeffs[0];
        ++rep.checked;
        if (!(r == l))
          rep.failures.push_back({"spherical " + c.str() + " basis " + std::to_string(i),
                                  {R.code_hex(), L.code_hex()}, r.to_string(), l.to_string()});
      }
    }
  return rep;
}

LawReport check_star(const PlanarAlgebra& P, int samples, std::uint64_t seed, int max_k) {
  if (!P.has_star()) throw std::invalid_argument(P.name() + " has no star structure");
  std::mt19937_64 rng(seed);
  LawReport rep;
  for (int s = 0; s < samples; ++s) {
    RandomTangleOptions o{random_color(rng, max_k), std::uniform_int_distribution<int>(0, 2)(rng), max_k, 6, true, {}};
    PlanarTangle T = random_tangle(rng, o);
    auto in = random_inputs(P, T, rng);
    std::vector<Element> sin;
    for (const auto& x : in) sin.push_back(P.star(x));
    Element lhs = P.act(star(T), sin);
    Element rhs = P.star(P.act(T, in));
    ++rep.checked;
    if (!(lhs == rhs)) rep.failures.push_back({"star", {T.code_hex()}, show(rhs), show(lhs)});
  }
  return rep;
}

}  // namespace plancalc
