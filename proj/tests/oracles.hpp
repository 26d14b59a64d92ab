#pragma once

// Independent reference computations. None of these call into the library.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

// All perfect matchings of 0..n-1 (n even), noncrossing or not.
inline void all_matchings(std::vector<int>& mate, std::vector<std::vector<int>>& out) {
  int first = -1;
  for (int i = 0; i < static_cast<int>(mate.size()); ++i)
    if (mate[i] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(mate);
    return;
  }
  for (int j = first + 1; j < static_cast<int>(mate.size()); ++j) {
    if (mate[j] >= 0) continue;
    mate[first] = j;
    mate[j] = first;
    all_matchings(mate, out);
    mate[first] = mate[j] = -1;
  }
}

inline bool crossing_free(const std::vector<int>& mate) {
  const int n = static_cast<int>(mate.size());
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const int b = mate[a], d = mate[c];
      if (a < c && c < b && b < d) return false;
    }
  return true;
}

inline std::uint64_t noncrossing_count(int k) {
  std::vector<int> mate(2 * k, -1);
  std::vector<std::vector<int>> all;
  all_matchings(mate, all);
  std::uint64_t n = 0;
  for (const auto& m : all) n += crossing_free(m);
  return n;
}

using M3 = std::array<std::array<long long, 3>, 3>;

inline M3 a3_power(int e) {
  const M3 A{{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}};
  M3 R{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int s = 0; s < e; ++s) {
    M3 T{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) T[i][j] += R[i][k] * A[k][j];
    R = T;
  }
  return R;
}

// Closed walks of length 2k from an end vertex of A3.
inline long long a3_walks(int k) { return a3_power(2 * k)[0][0]; }

// Annular hom dimension over the A3 subfactor planar algebra: closed walks of
// length 2m+2n based at vertices of parity l (l = 0 when the shadings agree).
inline long long a3_tube(int m, int n, int l) {
  const M3 R = a3_power(2 * m + 2 * n);
  long long s = 0;
  for (int j = 0; j < 3; ++j)
    if (j % 2 == l % 2) s += R[j][j];
  return s;
}

}  // namespace oracle
