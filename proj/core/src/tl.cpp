#include "plancalc/tl.hpp"

#include <regex>
#include <sstream>

namespace plancalc {

namespace {

void enumerate(std::vector<int>& pts, Matching& m, std::vector<Matching>& out) {
  if (pts.empty()) {
    out.push_back(m);
    return;
  }
  const int n = static_cast<int>(pts.size());
  for (int j = n - 1; j >= 1; j -= 2) {
    // pts[0] ~ pts[j]; inside and outside are matched independently
    std::vector<int> inner(pts.begin() + 1, pts.begin() + j), outer(pts.begin() + j + 1, pts.end());
    m[pts[0]] = pts[j];
    m[pts[j]] = pts[0];
    std::vector<Matching> ins;
    enumerate(inner, m, ins);
    for (auto& mi : ins) {
      Matching saved = m;
      m = mi;
      enumerate(outer, m, out);
      m = saved;
    }
  }
}

}  // namespace

std::vector<Matching> tl_basis(int k) {
  if (k < 0) throw std::invalid_argument("negative colour");
  std::vector<int> pts(2 * k);
  for (int i = 0; i < 2 * k; ++i) pts[i] = i;
  Matching m(2 * k, -1);
  std::vector<Matching> out;
  enumerate(pts, m, out);
  return out;
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::string matching_str(const Matching& m) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int p = 0; p < static_cast<int>(m.size()); ++p)
    if (p < m[p]) {
      os << (first ? "" : ",") << "(" << p + 1 << "," << m[p] + 1 << ")";
      first = false;
    }
  os << "]";
  return os.str();
}

Matching parse_matching(const std::string& s) {
  static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::vector<std::pair<int, int>> pairs;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pair_re); it != std::sregex_iterator(); ++it)
    pairs.push_back({std::stoi((*it)[1]) - 1, std::stoi((*it)[2]) - 1});
  Matching m(2 * pairs.size(), -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= static_cast<int>(m.size()) || b >= static_cast<int>(m.size()) || m[a] >= 0 ||
        m[b] >= 0 || a == b)
      throw std::invalid_argument("not a perfect matching: " + s);
    m[a] = b;
    m[b] = a;
  }
  return m;
}

PlanarTangle matching_tangle(Color c, const Matching& m) {
  if (static_cast<int>(m.size()) != 2 * c.k) throw std::invalid_argument("matching size does not fit colour");
  RawTangle raw;
  raw.external = c;
  for (int p = 0; p < 2 * c.k; ++p)
    if (p < m[p]) raw.strings.push_back({{0, p}, {0, m[p]}});
  return PlanarTangle::from_raw(raw);
}

TLAlgebra::TLAlgebra(Scalar delta_plus, Scalar delta_minus)
    : dp_(std::move(delta_plus)), dm_(std::move(delta_minus)) {
  if (dp_.ring() != dm_.ring()) throw RingMismatch("modulus entries live in different rings");
  balanced_ = dp_ == dm_;
  pow_p_ = {Scalar::one(ring())};
  pow_m_ = {Scalar::one(ring())};
}

std::string TLAlgebra::name() const {
  const std::string base = "TL(" + dp_.to_string() + ", " + dm_.to_string() + ")";
  return ring() ? base + " over " + ring()->describe() : base;
}

std::shared_ptr<const TLAlgebra::Level> TLAlgebra::level(int k) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = levels_.find(k);
  if (it != levels_.end()) return it->second;
  auto lv = std::make_shared<Level>();
  lv->basis = tl_basis(k);
  for (int i = 0; i < static_cast<int>(lv->basis.size()); ++i) lv->index.emplace(lv->basis[i], i);
  levels_[k] = lv;
  return lv;
}

int TLAlgebra::dim(Color c) const { return static_cast<int>(level(c.k)->basis.size()); }
const std::vector<Matching>& TLAlgebra::diagrams(int k) const { return level(k)->basis; }

int TLAlgebra::index_of(const Matching& m) const {
  auto lv = level(static_cast<int>(m.size()) / 2);
  auto it = lv->index.find(m);
  if (it == lv->index.end()) throw std::invalid_argument("not a noncrossing matching: " + matching_str(m));
  return it->second;
}

Scalar TLAlgebra::loop_factor(int cw, int ccw) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(pow_p_.size()) <= cw) pow_p_.push_back(pow_p_.back() * dp_);
  while (static_cast<int>(pow_m_.size()) <= ccw) pow_m_.push_back(pow_m_.back() * dm_);
  return pow_p_[cw] * pow_m_[ccw];
}

TLAlgebra::Glued TLAlgebra::glue(const PlanarTangle& T, const std::vector<const Matching*>& in) const {
  const int n = T.num_internal();
  if (static_cast<int>(in.size()) != n) throw std::invalid_argument("wrong number of inputs");
  Glued g;
  const int k0 = T.external().k;
  g.out.assign(2 * k0, -1);
  if (!balanced_) {
    // Loop orientation needs the nesting structure: substitute and read it off.
    PlanarTangle R = T;
    for (int d = n; d >= 1; --d) R = compose_at(R, d, matching_tangle(T.color(d), *in[d - 1]));
    for (int p = 0; p < 2 * k0; ++p) g.out[p] = R.mate({0, p}).pos;
    for (int j = 0; j < R.num_loops(); ++j) (R.loop_cw(j) ? g.cw : g.ccw)++;
    return g;
  }
  std::vector<char> seen(T.total_points(), 0);
  for (int p = 0; p < 2 * k0; ++p) {
    if (g.out[p] >= 0) continue;
    int cur = T.mate_id(T.point_id(0, p));
    for (;;) {
      Dart x = T.point(cur);
      if (x.disc == 0) {
        g.out[p] = x.pos;
        g.out[x.pos] = p;
        break;
      }
      seen[cur] = 1;
      int other = T.point_id(x.disc, (*in[x.disc - 1])[x.pos]);
      seen[other] = 1;
      cur = T.mate_id(other);
    }
  }
  for (int gid = T.point_id(std::min(1, n), 0); n > 0 && gid < T.total_points(); ++gid) {
    if (seen[gid]) continue;
    ++g.cw;
    int cur = gid;
    do {
      seen[cur] = 1;
      Dart x = T.point(cur);
      int other = T.point_id(x.disc, (*in[x.disc - 1])[x.pos]);
      seen[other] = 1;
      cur = T.mate_id(other);
    } while (cur != gid);
  }
  g.cw += T.num_loops();
  return g;
}

Element TLAlgebra::act(const PlanarTangle& T, const std::vector<Element>& inputs) const {
  const int n = T.num_internal();
  if (static_cast<int>(inputs.size()) != n) throw std::invalid_argument("wrong number of inputs");
  std::vector<std::vector<int>> support(n);
  for (int d = 0; d < n; ++d) {
    if (!(inputs[d].color == T.color(d + 1)))
      throw std::invalid_argument("input " + std::to_string(d + 1) + " has colour " + inputs[d].color.str() +
                                  ", disc expects " + T.color(d + 1).str());
    for (int i = 0; i < static_cast<int>(inputs[d].coeffs.size()); ++i) {
      if (inputs[d].coeffs[i].ring() != ring()) throw RingMismatch("input outside the algebra's ring");
      if (!inputs[d].coeffs[i].is_zero()) support[d].push_back(i);
    }
  }
  Element out = zero(T.external());
  for (const auto& s : support)
    if (s.empty()) return out;
  std::vector<std::shared_ptr<const Level>> lv(n);
  for (int d = 0; d < n; ++d) lv[d] = level(T.color(d + 1).k);
  std::vector<int> pos(n, 0);
  std::vector<const Matching*> in(n);
  for (;;) {
    Scalar c = Scalar::one(ring());
    for (int d = 0; d < n; ++d) {
      const int i = support[d][pos[d]];
      in[d] = &lv[d]->basis[i];
      c = c * inputs[d].coeffs[i];
    }
    Glued g = glue(T, in);
    Scalar& slot = out.coeffs[index_of(g.out)];
    slot = slot + c * loop_factor(g.cw, g.ccw);
    int d = n - 1;
    while (d >= 0 && ++pos[d] == static_cast<int>(support[d].size())) pos[d--] = 0;
    if (d < 0) break;
  }
  return out;
}

Element TLAlgebra::star(const Element& x) const {
  const int k = x.color.k;
  const auto& b = diagrams(k);
  Element r = zero(x.color);
  for (int i = 0; i < static_cast<int>(b.size()); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    Matching m(2 * k);
    for (int p = 0; p < 2 * k; ++p) m[p] = 2 * k - 1 - b[i][2 * k - 1 - p];
    r.coeffs[index_of(m)] = x.coeffs[i];
  }
  return r;
}

Matrix TLAlgebra::gram(Color c) const {
  const PlanarTangle tr =
      compose_at(builtin_tangle(BuiltinKind::RightClosure, c), 1, builtin_tangle(BuiltinKind::Multiplication, c));
  const auto& b = diagrams(c.k);
  const int n = static_cast<int>(b.size()), k = c.k;
  std::vector<Matching> st(n);
  for (int i = 0; i < n; ++i) {
    st[i].resize(2 * k);
    for (int p = 0; p < 2 * k; ++p) st[i][p] = 2 * k - 1 - b[i][2 * k - 1 - p];
  }
  Matrix G(n, n, Scalar::zero(ring()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Glued g = glue(tr, {&st[j], &b[i]});
      G(i, j) = loop_factor(g.cw, g.ccw);
    }
  return G;
}

std::shared_ptr<TLAlgebra> tl_instance(const Scalar& delta_plus, const Scalar& delta_minus) {
  return std::make_shared<TLAlgebra>(delta_plus, delta_minus);
}

Scalar markov_trace(const PlanarAlgebra& P, const Element& x) {
  return P.act(builtin_tangle(BuiltinKind::RightClosure, x.color), {x}).coeffs.at(0);
}

Matrix gram_matrix(const PlanarAlgebra& P, Color c) {
  if (auto tl = dynamic_cast<const TLAlgebra*>(&P)) return tl->gram(c);
  const int n = P.dim(c);
  Matrix G(n, n, Scalar::zero(P.ring()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = markov_trace(P, pa_mult(P, P.star(P.basis(c, j)), P.basis(c, i)));
  return G;
}

}  // namespace plancalc
