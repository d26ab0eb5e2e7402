#pragma once
// Test-only oracles, deliberately independent of the enumeration engine:
// fillings are generated row-major from the top row down with no pruning
// beyond the local semistandard constraints, and the lattice property is
// checked by recounting every prefix from scratch.

#include <map>
#include <vector>

#include "schurpos/generate.hpp"
#include "schurpos/partition.hpp"

namespace oracle {

using schurpos::Partition;
using schurpos::SkewShape;

using Grid = std::vector<std::vector<int>>;  // rows bottom to top

inline std::vector<int> grid_reading_word(const SkewShape& s, const Grid& g) {
  std::vector<int> w;
  for (int r = 0; r < s.outer.length(); ++r)
    for (int c = s.outer.part(r) - 1; c >= s.inner.part(r); --c)
      w.push_back(g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  return w;
}

inline bool lattice_word(const std::vector<int>& w) {
  for (std::size_t len = 1; len <= w.size(); ++len) {
    int maxv = 0;
    for (std::size_t i = 0; i < len; ++i) maxv = std::max(maxv, w[i]);
    for (int v = 2; v <= maxv; ++v) {
      int lower = 0, higher = 0;
      for (std::size_t i = 0; i < len; ++i) {
        if (w[i] == v - 1) lower++;
        if (w[i] == v) higher++;
      }
      if (higher > lower) return false;
    }
  }
  return true;
}

// All semistandard fillings of the shape with the given content, filled
// top row first, each row left to right.
inline std::vector<Grid> all_ssyt(const SkewShape& s, const Partition& content) {
  std::vector<Grid> out;
  int rows = s.outer.length();
  Grid g(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    g[static_cast<std::size_t>(r)].assign(
        static_cast<std::size_t>(s.outer.part(r)), 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = rows - 1; r >= 0; --r)
    for (int c = s.inner.part(r); c < s.outer.part(r); ++c)
      cells.emplace_back(r, c);
  int m = content.length();
  std::vector<int> remaining(static_cast<std::size_t>(m) + 1, 0);
  for (int v = 1; v <= m; ++v)
    remaining[static_cast<std::size_t>(v)] = content.part(v - 1);

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      out.push_back(g);
      return;
    }
    auto [r, c] = cells[i];
    for (int v = 1; v <= m; ++v) {
      if (remaining[static_cast<std::size_t>(v)] == 0) continue;
      // left neighbor in the same row (already filled) must be <= v
      if (c > s.inner.part(r) &&
          g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v)
        continue;
      // the cell above (already filled) must be strictly larger
      if (r + 1 < rows && s.has_cell(r + 1, c) &&
          g[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)] <= v)
        continue;
      g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      remaining[static_cast<std::size_t>(v)]--;
      self(self, i + 1);
      remaining[static_cast<std::size_t>(v)]++;
      g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

inline long long lr_count(const SkewShape& s, const Partition& content) {
  if (s.size() != content.sum()) return 0;
  long long n = 0;
  for (const Grid& g : all_ssyt(s, content))
    if (lattice_word(grid_reading_word(s, g))) n++;
  return n;
}

// Product expansion straight from the rule: coefficient of theta is the
// number of lattice fillings of theta/mu with content nu.
inline std::map<Partition, long long> product(const Partition& mu,
                                              const Partition& nu) {
  std::map<Partition, long long> out;
  for (const Partition& theta : schurpos::partitions_of(mu.sum() + nu.sum())) {
    if (!schurpos::contains(theta, mu)) continue;
    long long c = lr_count(SkewShape(theta, mu), nu);
    if (c > 0) out[theta] = c;
  }
  return out;
}

}  // namespace oracle
