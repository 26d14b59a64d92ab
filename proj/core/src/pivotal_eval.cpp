#include <sstream>

#include "plancalc/pivotal.hpp"
#include "plancalc/tl.hpp"
#include "tangle_internal.hpp"

namespace plancalc {

namespace {

// Open strand ends during a bottom-to-top replay of a plan.
struct Replay {
  struct End {
    bool linked = false;
    Dart start;
    int partner = -1;
  };
  std::vector<End> ends;
  std::vector<int> strands;  // frontier -> end id
  std::vector<int> gaps;     // frontier gaps -> region id
  int regions = 0;
  std::vector<std::pair<int, int>> merges, loops;
  std::vector<std::pair<Dart, Dart>> strings;

  int region() { return regions++; }
  int open(Dart d) {
    ends.push_back({false, d, -1});
    return static_cast<int>(ends.size()) - 1;
  }
  void terminate(int e, Dart x) {
    if (!ends[e].linked) {
      strings.push_back({ends[e].start, x});
    } else {
      const int q = ends[e].partner;
      ends[q] = {false, x, -1};
    }
  }
  // Joins two open ends; `outside` and `inside` label a loop if one closes.
  void join(int a, int b, int outside, int inside) {
    if (ends[a].linked && ends[a].partner == b) {
      loops.push_back({outside, inside});
    } else if (!ends[a].linked && !ends[b].linked) {
      strings.push_back({ends[a].start, ends[b].start});
    } else if (!ends[a].linked) {
      ends[ends[b].partner] = {false, ends[a].start, -1};
    } else if (!ends[b].linked) {
      ends[ends[a].partner] = {false, ends[b].start, -1};
    } else {
      const int pa = ends[a].partner, pb = ends[b].partner;
      ends[pa].partner = pb;
      ends[pb].partner = pa;
    }
  }
};

}  // namespace

PlanarTangle plan_tangle(const SlicePlan& plan) {
  const int K = plan.external.k;
  const int n = static_cast<int>(plan.internal.size());
  Replay r;
  std::vector<std::vector<int>> labels(n + 1);
  labels[0].assign(detail::narcs_of(plan.external), -1);
  for (int p = 0; p < K; ++p) r.strands.push_back(r.open({0, 2 * K - 1 - p}));
  for (int j = 0; j <= K; ++j) r.gaps.push_back(r.region());
  for (int j = 1; j < K; ++j) labels[0][2 * K - 1 - j] = r.gaps[j];
  if (K > 0) {
    labels[0][2 * K - 1] = r.gaps[0];
    labels[0][K - 1] = r.gaps[K];
  } else {
    labels[0][0] = r.gaps[0];
  }
  std::vector<char> used(n + 1, 0);
  for (const Slice& s : plan.slices) {
    const int m = static_cast<int>(r.strands.size());
    if (s.kind == Slice::Cup) {
      if (s.pos < 0 || s.pos > m) throw TangleError("dart out of range", "cup position");
      const int a = r.open({}), b = r.open({});
      r.ends[a] = {true, {}, b};
      r.ends[b] = {true, {}, a};
      r.strands.insert(r.strands.begin() + s.pos, {a, b});
      const int g = r.gaps[s.pos];
      r.gaps.insert(r.gaps.begin() + s.pos + 1, {r.region(), g});
    } else if (s.kind == Slice::Cap) {
      if (s.pos < 0 || s.pos + 1 >= m) throw TangleError("dart out of range", "cap position");
      r.join(r.strands[s.pos], r.strands[s.pos + 1], r.gaps[s.pos], r.gaps[s.pos + 1]);
      r.merges.push_back({r.gaps[s.pos], r.gaps[s.pos + 2]});
      r.strands.erase(r.strands.begin() + s.pos, r.strands.begin() + s.pos + 2);
      r.gaps.erase(r.gaps.begin() + s.pos + 1, r.gaps.begin() + s.pos + 3);
    } else {
      if (s.disc < 1 || s.disc > n || used[s.disc]) throw TangleError("dart out of range", "box disc");
      used[s.disc] = 1;
      const Color col = plan.internal[s.disc - 1];
      const int k = col.k;
      if (s.pos < 0 || s.pos + k > m) throw TangleError("dart out of range", "box position");
      auto& lb = labels[s.disc];
      lb.assign(detail::narcs_of(col), -1);
      if (k == 0) {
        lb[0] = r.gaps[s.pos];
        continue;
      }
      for (int c = 0; c < k; ++c) r.terminate(r.strands[s.pos + c], {s.disc, 2 * k - 1 - c});
      lb[2 * k - 1] = r.gaps[s.pos];
      lb[k - 1] = r.gaps[s.pos + k];
      for (int c = 0; c + 1 < k; ++c) lb[2 * k - 2 - c] = r.gaps[s.pos + c + 1];
      for (int c = 0; c + 1 < k; ++c) {
        const int g = r.region();
        lb[c] = g;
        r.gaps[s.pos + c + 1] = g;
      }
      for (int c = 0; c < k; ++c) r.strands[s.pos + c] = r.open({s.disc, c});
    }
  }
  if (static_cast<int>(r.strands.size()) != K) throw TangleError("colour", "plan ends with the wrong width");
  for (int d = 1; d <= n; ++d)
    if (!used[d]) throw TangleError("dart out of range", "disc missing from plan");
  for (int c = 0; c < K; ++c) r.terminate(r.strands[c], {0, c});
  for (int j = 1; j < K; ++j) labels[0][j - 1] = r.gaps[j];
  if (K > 0) {
    r.merges.push_back({labels[0][2 * K - 1], r.gaps[0]});
    r.merges.push_back({labels[0][K - 1], r.gaps[K]});
  } else {
    r.merges.push_back({labels[0][0], r.gaps[0]});
  }
  detail::UnionFind uf(r.regions);
  for (auto [a, b] : r.merges) uf.unite(a, b);
  std::vector<int> flat;
  for (const auto& lb : labels)
    for (int x : lb) flat.push_back(uf.find(x));
  std::vector<std::pair<int, int>> loops;
  for (auto [a, b] : r.loops) loops.push_back({uf.find(a), uf.find(b)});
  try {
    return assemble_tangle(plan.external, plan.internal, r.strings, flat, loops);
  } catch (const std::logic_error& e) {
    throw TangleError("non-planarity", e.what());
  }
}

}  // namespace plancalc

namespace plancalc {

namespace {

long ipow(int n, int e) {
  long r = 1;
  while (e-- > 0) r *= n;
  return r;
}

bool nonzero(const mpq_class& x) { return sgn(x) != 0; }
bool nonzero(double x) { return x != 0.0; }

// Rows index the frontier word (position 0 most significant), columns the bottom word.
template <class T>
std::vector<T> run_plan(const ModelTensors<T>& t, int n, const SlicePlan& plan, const std::vector<std::vector<T>>& labels) {
  const int K = plan.external.k;
  const int eps = plan.external.eps;
  const long C = ipow(n, K);
  if (labels.size() != plan.internal.size()) throw std::invalid_argument("label count mismatch");
  for (std::size_t d = 0; d < labels.size(); ++d)
    if (static_cast<long>(labels[d].size()) != ipow(n, 2 * plan.internal[d].k))
      throw std::invalid_argument("label " + std::to_string(d + 1) + " has the wrong shape");
  int w = K;
  std::vector<T> M(C * C, T(0));
  for (long i = 0; i < C; ++i) M[i * C + i] = T(1);
  auto sign_of_gap = [&](int j) { return j % 2 == 0 ? eps : -eps; };
  for (const Slice& s : plan.slices) {
    if (s.kind == Slice::Cup) {
      const auto& cup = sign_of_gap(s.pos) < 0 ? t.cupA : t.cupB;
      const long L = ipow(n, s.pos), R = ipow(n, w - s.pos) * C;
      std::vector<T> out(L * n * n * R, T(0));
      for (long l = 0; l < L; ++l)
        for (int ab = 0; ab < n * n; ++ab) {
          const T& f = cup[ab];
          if (!nonzero(f)) continue;
          const T* src = &M[l * R];
          T* dst = &out[(l * n * n + ab) * R];
          for (long x = 0; x < R; ++x)
            if (nonzero(src[x])) dst[x] = f * src[x];
        }
      M.swap(out);
      w += 2;
    } else if (s.kind == Slice::Cap) {
      const auto& cap = sign_of_gap(s.pos + 1) < 0 ? t.capA : t.capB;
      const long L = ipow(n, s.pos), R = ipow(n, w - s.pos - 2) * C;
      std::vector<T> out(L * R, T(0));
      for (long l = 0; l < L; ++l)
        for (int ab = 0; ab < n * n; ++ab) {
          const T& f = cap[ab];
          if (!nonzero(f)) continue;
          const T* src = &M[(l * n * n + ab) * R];
          T* dst = &out[l * R];
          for (long x = 0; x < R; ++x)
            if (nonzero(src[x])) dst[x] += f * src[x];
        }
      M.swap(out);
      w -= 2;
    } else {
      const int k = plan.internal[s.disc - 1].k;
      const auto& F = labels[s.disc - 1];
      const long B = ipow(n, k), L = ipow(n, s.pos), R = ipow(n, w - s.pos - k) * C;
      std::vector<T> out(L * B * R, T(0));
      for (long l = 0; l < L; ++l)
        for (long a = 0; a < B; ++a) {
          T* dst = &out[(l * B + a) * R];
          for (long b = 0; b < B; ++b) {
            const T& f = F[a * B + b];
            if (!nonzero(f)) continue;
            const T* src = &M[(l * B + b) * R];
            for (long x = 0; x < R; ++x)
              if (nonzero(src[x])) dst[x] += f * src[x];
          }
        }
      M.swap(out);
    }
  }
  if (w != K) throw std::logic_error("plan ends with the wrong width");
  return M;
}

}  // namespace

std::vector<mpq_class> evaluate_plan(const PivotalModel& M, const SlicePlan& plan,
                                     const std::vector<std::vector<mpq_class>>& labels) {
  if (!M.has_exact()) throw RingMismatch("float model cannot evaluate exact labels");
  // mpq equality assumes canonical form.
  std::vector<std::vector<mpq_class>> canon = labels;
  for (auto& v : canon)
    for (auto& x : v) x.canonicalize();
  return run_plan(M.exact, M.n, plan, canon);
}

std::vector<double> evaluate_plan(const PivotalModel& M, const SlicePlan& plan,
                                  const std::vector<std::vector<double>>& labels) {
  return run_plan(M.num, M.n, plan, labels);
}

std::vector<mpq_class> evaluate(const PivotalModel& M, const PlanarTangle& T,
                                const std::vector<std::vector<mpq_class>>& labels, std::uint64_t seed) {
  return evaluate_plan(M, standard_form(T, seed), labels);
}

std::vector<mpq_class> matching_matrix(const PivotalModel& M, Color c, const std::vector<int>& matching) {
  return evaluate(M, matching_tangle(c, matching), {});
}

std::string ModelPA::name() const {
  std::ostringstream os;
  os << "model(n=" << model_->n << ",lambda=" << model_->lambda << ")";
  return os.str();
}

int ModelPA::dim(Color c) const { return static_cast<int>(ipow(model_->n, 2 * c.k)); }

std::optional<std::pair<Scalar, Scalar>> ModelPA::declared_modulus() const {
  return std::make_pair(Scalar::generic(model_->delta_plus()), Scalar::generic(model_->delta_minus()));
}

std::string ModelPA::basis_label(Color c, int i) const {
  const long B = ipow(model_->n, c.k);
  return "e(" + std::to_string(i / B) + "," + std::to_string(i % B) + ")";
}

const SlicePlan& ModelPA::plan(const PlanarTangle& T) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = plans_.find(T.code());
    if (it != plans_.end()) return *it->second;
  }
  auto p = std::make_shared<const SlicePlan>(standard_form(T));
  std::lock_guard<std::mutex> lk(mu_);
  return *plans_.emplace(T.code(), p).first->second;
}

Element ModelPA::act(const PlanarTangle& T, const std::vector<Element>& inputs) const {
  if (!model_->has_exact()) throw RingMismatch("planar algebra of a float model");
  if (static_cast<int>(inputs.size()) != T.num_internal()) throw std::invalid_argument("input count mismatch");
  std::vector<std::vector<mpq_class>> labels;
  for (int d = 1; d <= T.num_internal(); ++d) {
    const Element& e = inputs[d - 1];
    if (!(e.color == T.color(d))) throw std::invalid_argument("input colour mismatch at disc " + std::to_string(d));
    std::vector<mpq_class> v;
    for (const Scalar& x : e.coeffs) {
      mpq_class q;
      if (!x.as_rational(q)) throw RingMismatch("model entries must be rational");
      v.push_back(q);
    }
    labels.push_back(std::move(v));
  }
  std::vector<mpq_class> out = evaluate_plan(*model_, plan(T), labels);
  Element r{T.external(), {}};
  r.coeffs.reserve(out.size());
  for (const auto& q : out) r.coeffs.push_back(Scalar::generic(q));
  return r;
}

}  // namespace plancalc
