#include <cmath>
#include <sstream>

#include "json.hpp"
#include "plancalc/pivotal.hpp"

namespace plancalc {

namespace {

using json = nlohmann::json;

template <class T>
using Sq = std::vector<T>;

template <class T>
Sq<T> mul(const Sq<T>& a, const Sq<T>& b, int n) {
  Sq<T> c(n * n, T(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

template <class T>
Sq<T> tr(const Sq<T>& a, int n) {
  Sq<T> c(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[j * n + i] = a[i * n + j];
  return c;
}

template <class T>
Sq<T> scale(Sq<T> a, const T& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <class T>
Sq<T> eye(int n) {
  Sq<T> c(n * n, T(0));
  for (int i = 0; i < n; ++i) c[i * n + i] = T(1);
  return c;
}

bool is_small(const mpq_class& x) { return x == 0; }
bool is_small(double x) { return std::fabs(x) <= 1e-9; }
bool is_small_pivot(const mpq_class& x) { return x == 0; }
bool is_small_pivot(double x) { return std::fabs(x) <= 1e-12; }

template <class T>
bool same(const Sq<T>& a, const Sq<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_small(T(a[i] - b[i]))) return false;
  return true;
}

template <class T>
T absval(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Gauss-Jordan with partial pivoting; throws ModelError when singular.
template <class T>
Sq<T> inv(Sq<T> a, int n) {
  Sq<T> b = eye<T>(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (absval(a[r * n + c]) > absval(a[p * n + c])) p = r;
    if (is_small_pivot(a[p * n + c])) throw ModelError("singular pairing");
    for (int j = 0; j < n; ++j) {
      std::swap(a[c * n + j], a[p * n + j]);
      std::swap(b[c * n + j], b[p * n + j]);
    }
    const T piv = a[c * n + c];
    for (int j = 0; j < n; ++j) {
      a[c * n + j] /= piv;
      b[c * n + j] /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || is_small_pivot(a[r * n + c])) continue;
      const T f = a[r * n + c];
      for (int j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[c * n + j];
        b[r * n + j] -= f * b[c * n + j];
      }
    }
  }
  return b;
}

// Bundle pivotal map of a two-letter word, from nested bends.
template <class T>
Sq<T> bundle_pivotal(const Sq<T>& cup1, const Sq<T>& cap1, const Sq<T>& cup2, const Sq<T>& cap2, int n) {
  const int N = n * n;
  Sq<T> C(N * N, T(0));
  for (int w1 = 0; w1 < n; ++w1)
    for (int w2 = 0; w2 < n; ++w2)
      for (int v1 = 0; v1 < n; ++v1)
        for (int v2 = 0; v2 < n; ++v2) {
          T s(0);
          for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2)
              s += cup1[w1 * n + x1] * cup2[w2 * n + x2] * cap1[v1 * n + x1] * cap2[v2 * n + x2];
          C[(w1 * n + w2) * N + v1 * n + v2] = s;
        }
  return inv(C, N);
}

template <class T>
Sq<T> kron(const Sq<T>& a, const Sq<T>& b, int n) {
  const int N = n * n;
  Sq<T> c(N * N);
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2) c[(i1 * n + i2) * N + j1 * n + j2] = a[i1 * n + j1] * b[i2 * n + j2];
  return c;
}

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Derives all tensors and checks the identities; fills `checks`.
template <class T>
ModelTensors<T> derive(const Sq<T>& g, const T& lambda, int n, json& checks) {
  ModelTensors<T> t;
  const Sq<T> gi = inv(g, n);
  t.cupA = gi;
  t.capA = g;
  t.cupB = scale(tr(gi, n), T(T(1) / lambda));
  t.capB = scale(tr(g, n), lambda);
  t.aX = inv(mul(t.cupA, tr(t.capB, n), n), n);
  t.aXs = inv(mul(t.cupB, tr(t.capA, n), n), n);

  const Sq<T> I = eye<T>(n);
  bool ok = true;
  auto check = [&](const char* name, bool v) {
    checks[name] = v;
    ok = ok && v;
  };
  check("zigzag_X_right", same(mul(t.capB, t.cupB, n), I));
  check("zigzag_X_left", same(mul(t.cupA, t.capA, n), I));
  check("zigzag_Xs_right", same(mul(t.capA, t.cupA, n), I));
  check("zigzag_Xs_left", same(mul(t.cupB, t.capB, n), I));
  // a*_X computed through the pairing equals the inverse of a_{X*}.
  const Sq<T> a_star = mul(mul(g, tr(t.aX, n), n), gi, n);
  check("ax_star", same(inv(t.aXs, n), a_star));
  const Sq<T> aXXs = bundle_pivotal(t.cupA, t.capB, t.cupB, t.capA, n);
  const Sq<T> aXsX = bundle_pivotal(t.cupB, t.capA, t.cupA, t.capB, n);
  check("pivotal_monoidal", same(aXXs, kron(t.aX, t.aXs, n)) && same(aXsX, kron(t.aXs, t.aX, n)));
  // Rotation by a full turn of a box conjugates by a_Y on top and bottom words,
  // which agree letterwise; the per-letter factors must cancel.
  check("rotation", same(mul(t.aX, t.aXs, n), I));
  if (!ok) throw ModelError("pivotal identity failed: " + checks.dump());
  return t;
}

template <class T>
T loop_value(const Sq<T>& cup, const Sq<T>& cap, int n) {
  T s(0);
  for (int i = 0; i < n * n; ++i) s += cup[i] * cap[i];
  return s;
}

std::vector<double> to_double(const std::vector<mpq_class>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

ModelTensors<double> to_double(const ModelTensors<mpq_class>& t) {
  return {to_double(t.cupA), to_double(t.capA), to_double(t.cupB),
          to_double(t.capB), to_double(t.aX),   to_double(t.aXs)};
}

}  // namespace

PivotalModel build_model(int n, const std::vector<mpq_class>& g, const mpq_class& lambda) {
  if (n < 1) throw ModelError("n must be positive");
  if (static_cast<int>(g.size()) != n * n) throw ModelError("pairing must be n x n");
  if (lambda == 0) throw ModelError("lambda must be nonzero");
  PivotalModel M;
  M.n = n;
  M.mode = NumericMode::Exact;
  M.g = g;
  M.lambda = lambda;
  M.gf = to_double(g);
  M.lambdaf = lambda.get_d();
  json checks;
  M.exact = derive<mpq_class>(g, lambda, n, checks);
  M.num = to_double(M.exact);
  json r;
  r["format"] = "plancalc/1";
  r["n"] = n;
  r["mode"] = "exact";
  r["lambda"] = lambda.get_str();
  r["checks"] = checks;
  r["loop_cw"] = show(loop_value(M.exact.cupB, M.exact.capA, n));
  r["loop_ccw"] = show(loop_value(M.exact.cupA, M.exact.capB, n));
  r["word_split"] = "k letters on top, k on the bottom; letter X iff the region on its left is -";
  M.report = r.dump();
  return M;
}

PivotalModel build_model_float(int n, const std::vector<double>& g, double lambda) {
  if (n < 1) throw ModelError("n must be positive");
  if (static_cast<int>(g.size()) != n * n) throw ModelError("pairing must be n x n");
  if (lambda == 0) throw ModelError("lambda must be nonzero");
  PivotalModel M;
  M.n = n;
  M.mode = NumericMode::Float;
  M.gf = g;
  M.lambdaf = lambda;
  json checks;
  M.num = derive<double>(g, lambda, n, checks);
  json r;
  r["format"] = "plancalc/1";
  r["n"] = n;
  r["mode"] = "float";
  r["lambda"] = lambda;
  r["checks"] = checks;
  r["loop_cw"] = loop_value(M.num.cupB, M.num.capA, n);
  r["loop_ccw"] = loop_value(M.num.cupA, M.num.capB, n);
  r["word_split"] = "k letters on top, k on the bottom; letter X iff the region on its left is -";
  M.report = r.dump();
  return M;
}

namespace {

mpq_class exact_entry(const json& v) {
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  if (v.is_string()) {
    mpq_class q;
    if (q.set_str(v.get<std::string>(), 10) != 0) throw SchemaError("bad rational \"" + v.get<std::string>() + "\"");
    q.canonicalize();
    return q;
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == std::floor(d)) return mpq_class(d);
    throw SchemaError("exact models take integers or \"p/q\" strings");
  }
  throw SchemaError("pairing entries must be numbers");
}

double float_entry(const json& v) {
  if (v.is_number()) return v.get<double>();
  return exact_entry(v).get_d();
}

}  // namespace

PivotalModel load_model_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("model: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("pairing"))
    throw SchemaError("model needs integer \"n\" and \"pairing\"");
  if (j.contains("format") && j["format"] != "plancalc/1") throw SchemaError("unsupported format");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 16) throw SchemaError("n out of range");
  const json& p = j["pairing"];
  if (!p.is_array() || static_cast<int>(p.size()) != n) throw SchemaError("pairing must have n rows");
  for (const auto& row : p)
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw SchemaError("pairing must be n x n");
  const std::string mode = j.value("mode", "exact");
  if (mode == "exact") {
    std::vector<mpq_class> g;
    for (const auto& row : p)
      for (const auto& v : row) g.push_back(exact_entry(v));
    mpq_class lambda = j.contains("lambda") ? exact_entry(j["lambda"]) : mpq_class(1);
    return build_model(n, g, lambda);
  }
  if (mode == "float") {
    std::vector<double> g;
    for (const auto& row : p)
      for (const auto& v : row) g.push_back(float_entry(v));
    double lambda = j.contains("lambda") ? float_entry(j["lambda"]) : 1.0;
    return build_model_float(n, g, lambda);
  }
  throw SchemaError("mode must be \"exact\" or \"float\"");
}

}  // namespace plancalc
