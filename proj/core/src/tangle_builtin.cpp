#include "plancalc/planar_algebra.hpp"

namespace plancalc {

namespace {
// Rectangle convention: top points 0..k-1 left to right, bottom k..2k-1 right to left.
int top(int c) { return c; }
int bot(int k, int c) { return 2 * k - 1 - c; }

PlanarTangle unit_tangle(Color c) {
  RawTangle raw;
  raw.external = c;
  for (int j = 0; j < c.k; ++j) raw.strings.push_back({{0, top(j)}, {0, bot(c.k, j)}});
  return PlanarTangle::from_raw(raw);
}

PlanarTangle multiplication(Color c) {
  RawTangle raw;
  const int k = c.k;
  raw.external = c;
  raw.internal = {c, c};
  for (int j = 0; j < k; ++j) {
    raw.strings.push_back({{0, top(j)}, {2, top(j)}});
    raw.strings.push_back({{2, bot(k, j)}, {1, top(j)}});
    raw.strings.push_back({{1, bot(k, j)}, {0, bot(k, j)}});
  }
  if (k == 0) {
    raw.placements.push_back({1, {1, 0}, RawFace::arc(0, 0)});
    raw.placements.push_back({2, {2, 0}, RawFace::arc(0, 0)});
  }
  return PlanarTangle::from_raw(raw);
}

PlanarTangle inclusion(Color c) {
  RawTangle raw;
  const int k = c.k, K = k + 1;
  raw.external = {K, c.eps};
  raw.internal = {c};
  for (int j = 0; j < k; ++j) {
    raw.strings.push_back({{0, top(j)}, {1, top(j)}});
    raw.strings.push_back({{1, bot(k, j)}, {0, bot(K, j)}});
  }
  raw.strings.push_back({{0, top(k)}, {0, bot(K, k)}});
  if (k == 0) raw.placements.push_back({1, {1, 0}, RawFace::arc(0, 2 * K - 1)});
  return PlanarTangle::from_raw(raw);
}

PlanarTangle jones(int k, int eps) {
  if (k < 1) throw std::invalid_argument("jones_projection needs k >= 1");
  RawTangle raw;
  const int K = k + 1;
  raw.external = {K, eps};
  for (int j = 0; j < K; ++j)
    if (j != k - 1 && j != k) raw.strings.push_back({{0, top(j)}, {0, bot(K, j)}});
  raw.strings.push_back({{0, top(k - 1)}, {0, top(k)}});
  raw.strings.push_back({{0, bot(K, k - 1)}, {0, bot(K, k)}});
  return PlanarTangle::from_raw(raw);
}

PlanarTangle rotation(Color c) {
  if (c.k < 1) throw std::invalid_argument("rotation needs k >= 1");
  RawTangle raw;
  const int n = 2 * c.k;
  raw.external = {c.k, -c.eps};
  raw.internal = {c};
  for (int p = 0; p < n; ++p) raw.strings.push_back({{1, p}, {0, (p + 1) % n}});
  return PlanarTangle::from_raw(raw);
}

// Column of m boxes, disc j is the j-th box from the bottom. Consecutive boxes
// share their first k-1 strands; the last strand on each side of a junction
// leaves to the right, the upper m-1 of these exit at the top.
PlanarTangle s_column(Color c, int m) {
  if (m < 1) throw std::invalid_argument("S_m needs m >= 1");
  if (m == 1) return identity_tangle(c);
  const int k = c.k;
  if (k < 1) throw std::invalid_argument("S needs k >= 1");
  const int K = k + m - 1;
  RawTangle raw;
  raw.external = {K, c.eps};
  raw.internal.assign(m, c);
  auto disc = [m](int box) { return m - box; };  // box 0 is the top one
  for (int j = 0; j < k; ++j) {
    raw.strings.push_back({{0, top(j)}, {disc(0), top(j)}});
    raw.strings.push_back({{disc(m - 1), bot(k, j)}, {0, bot(K, j)}});
  }
  // hooks in top-to-bottom order: box b bottom, box b+1 top
  std::vector<Dart> hooks;
  for (int b = 0; b + 1 < m; ++b) {
    for (int j = 0; j + 1 < k; ++j) raw.strings.push_back({{disc(b), bot(k, j)}, {disc(b + 1), top(j)}});
    hooks.push_back({disc(b), bot(k, k - 1)});
    hooks.push_back({disc(b + 1), top(k - 1)});
  }
  for (int h = 0; h < m - 1; ++h) raw.strings.push_back({hooks[h], {0, top(k + h)}});
  for (int h = 0; h < m - 1; ++h) {
    const int idx = 2 * (m - 1) - 1 - h;
    raw.strings.push_back({hooks[idx], {0, bot(K, k + h)}});
  }
  return PlanarTangle::from_raw(raw);
}

PlanarTangle closure(Color c, bool right) {
  RawTangle raw;
  const int k = c.k;
  const int outer_arc = right ? (k == 0 ? 0 : 2 * k - 1) : (k == 0 ? 0 : k - 1);
  const int eps = right || k % 2 == 0 ? c.eps : -c.eps;
  raw.external = {0, eps};
  raw.internal = {c};
  for (int j = 0; j < k; ++j) raw.strings.push_back({{1, top(j)}, {1, bot(k, j)}});
  raw.placements.push_back({1, {1, outer_arc}, RawFace::arc(0, 0)});
  return PlanarTangle::from_raw(raw);
}

PlanarTangle left_cond_exp(Color c) {
  const int k = c.k;
  if (k < 1) throw std::invalid_argument("left_cond_exp needs k >= 1");
  RawTangle raw;
  const int K = k - 1;
  raw.external = {K, -c.eps};
  raw.internal = {c};
  raw.strings.push_back({{1, top(0)}, {1, bot(k, 0)}});
  for (int j = 1; j < k; ++j) {
    raw.strings.push_back({{1, top(j)}, {0, top(j - 1)}});
    raw.strings.push_back({{1, bot(k, j)}, {0, bot(K, j - 1)}});
  }
  if (k == 1) raw.placements.push_back({1, {1, 0}, RawFace::arc(0, 0)});
  return PlanarTangle::from_raw(raw);
}
}  // namespace

PlanarTangle builtin_tangle(BuiltinKind kind, Color c, int m) {
  switch (kind) {
    case BuiltinKind::Multiplication: return multiplication(c);
    case BuiltinKind::Inclusion: return inclusion(c);
    case BuiltinKind::Unit: return unit_tangle(c);
    case BuiltinKind::LeftCondExp: return left_cond_exp(c);
    case BuiltinKind::JonesProjection: return jones(c.k, c.eps);
    case BuiltinKind::Rotation: return rotation(c);
    case BuiltinKind::S: return s_column(c, 2);
    case BuiltinKind::Sm: return s_column(c, m);
    case BuiltinKind::Wiggle: return identity_tangle(c);
    case BuiltinKind::RightClosure: return closure(c, true);
    case BuiltinKind::LeftClosure: return closure(c, false);
  }
  throw std::invalid_argument("unknown builtin tangle");
}

BuiltinKind parse_builtin(const std::string& name) {
  static const std::pair<const char*, BuiltinKind> names[] = {
      {"multiplication", BuiltinKind::Multiplication}, {"inclusion", BuiltinKind::Inclusion},
      {"unit", BuiltinKind::Unit},
      {"left_cond_exp", BuiltinKind::LeftCondExp},     {"jones_projection", BuiltinKind::JonesProjection},
      {"rotation", BuiltinKind::Rotation},             {"S", BuiltinKind::S},
      {"S_m", BuiltinKind::Sm},                        {"wiggle", BuiltinKind::Wiggle},
      {"right_closure", BuiltinKind::RightClosure},    {"left_closure", BuiltinKind::LeftClosure}};
  for (const auto& [n, k] : names)
    if (name == n) return k;
  throw std::invalid_argument("unknown builtin tangle kind: " + name);
}

}  // namespace plancalc
