#pragma once
// Deterministic enumerators for partitions, skew descriptions and dealings.
// Everything returns graded-lexicographic or plain lexicographic order so
// sweep output and golden tests are stable.

#include <utility>
#include <vector>

#include "schurpos/partition.hpp"

namespace schurpos {

namespace detail {
inline void gen_partitions(int remaining, int max_part, int max_len,
                           std::vector<int>& acc,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (max_len == 0) return;
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    acc.push_back(k);
    gen_partitions(remaining - k, k, max_len - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

// Partitions of exactly n, in decreasing lexicographic order: (n) first,
// (1^n) last.
inline std::vector<Partition> partitions_of(int n, int max_part = -1,
                                            int max_len = -1) {
  if (n < 0) fail(errc::bad_input, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::gen_partitions(n, max_part < 0 ? n : max_part,
                         max_len < 0 ? n : max_len, acc, out);
  return out;
}

// Partitions of 0, 1, ..., n concatenated (graded lexicographic).
inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto layer = partitions_of(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// All partitions fitting in a max_len x max_part box, any weight.
inline std::vector<Partition> partitions_in_box(int max_part, int max_len) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_part * max_len; ++n) {
    auto layer = partitions_of(n, max_part, max_len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// All subdiagrams of mu.
inline std::vector<Partition> sub_partitions(const Partition& mu) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto go = [&](auto&& self, int row) -> void {
    out.push_back(Partition(cur));  // rows from here on are zero
    if (row == mu.length()) return;
    int hi = std::min(mu.part(row),
                      row > 0 ? cur[static_cast<std::size_t>(row - 1)]
                              : mu.part(0));
    for (int v = 1; v <= hi; ++v) {
      cur.push_back(v);
      self(self, row + 1);
      cur.pop_back();
    }
  };
  go(go, 0);
  return out;
}

// Canonical orientation of an unordered pair: second component is the
// lexicographically smaller partition.
inline std::pair<Partition, Partition> canonical_pair(Partition a, Partition b) {
  if (b > a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Runs of equal parts of gamma: (part value, multiplicity) in order.
inline std::vector<std::pair<int, int>> part_runs(const Partition& gamma) {
  std::vector<std::pair<int, int>> runs;
  for (int x : gamma.parts()) {
    if (!runs.empty() && runs.back().first == x)
      runs.back().second++;
    else
      runs.emplace_back(x, 1);
  }
  return runs;
}

struct Dealing {
  std::pair<Partition, Partition> pair;
  // Split signature: how many parts of each run go to one side, taken from
  // the side that gives the lexicographically smaller count vector. Dealings
  // of two partitions with the same run multiplicities correspond through it.
  std::vector<int> pattern;
};

// All distinct unordered dealings of the parts of gamma between two
// partitions (either side may be empty).
inline std::vector<Dealing> dealings(const Partition& gamma) {
  auto runs = part_runs(gamma);
  std::vector<Dealing> out;
  std::vector<int> counts(runs.size(), 0);
  auto emit = [&]() {
    std::vector<int> complement(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i)
      complement[i] = runs[i].second - counts[i];
    if (complement < counts) return;  // mirror image already emitted
    std::vector<int> a, b;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      a.insert(a.end(), static_cast<std::size_t>(counts[i]), runs[i].first);
      b.insert(b.end(), static_cast<std::size_t>(complement[i]),
               runs[i].first);
    }
    Dealing d;
    d.pair = canonical_pair(Partition(std::move(a)), Partition(std::move(b)));
    d.pattern = counts;
    out.push_back(std::move(d));
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == runs.size()) {
      emit();
      return;
    }
    for (int c = 0; c <= runs[i].second; ++c) {
      counts[i] = c;
      self(self, i + 1);
    }
    counts[i] = 0;
  };
  rec(rec, 0);
  return out;
}

// All skew descriptions mu/alpha with |mu| <= max_outer_weight, optionally
// restricted to a fixed number of cells.
inline std::vector<SkewShape> skew_shapes_outer_up_to(int max_outer_weight,
                                                      int cells = -1) {
  std::vector<SkewShape> out;
  for (const Partition& mu : partitions_up_to(max_outer_weight))
    for (const Partition& alpha : sub_partitions(mu)) {
      SkewShape s(mu, alpha);
      if (cells < 0 || s.size() == cells) out.push_back(std::move(s));
    }
  return out;
}

// Minimal descriptions with exactly `cells` cells. Minimality bounds the
// container: every row and column of the outer shape meets the skew diagram,
// so outer fits in a cells x cells box.
inline std::vector<SkewShape> minimal_skew_shapes(int cells) {
  std::vector<SkewShape> out;
  if (cells == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> alpha;
  for (const Partition& mu : partitions_in_box(cells, cells)) {
    if (mu.sum() < cells) continue;
    int target = mu.sum() - cells;
    // inner rows stay strictly below the outer ones; column strictness is
    // checked on the completed candidate
    auto rec = [&](auto&& self, int row, int remaining) -> void {
      if (remaining == 0) {
        SkewShape s(mu, Partition(alpha));
        if (is_minimal_pair(s)) out.push_back(std::move(s));
        return;
      }
      if (row >= mu.length()) return;
      int hi = std::min(mu.part(row) - 1,
                        row > 0 ? alpha[static_cast<std::size_t>(row - 1)]
                                : mu.part(0) - 1);
      for (int v = std::min(hi, remaining); v >= 1; --v) {
        alpha.push_back(v);
        self(self, row + 1, remaining - v);
        alpha.pop_back();
      }
    };
    rec(rec, 0, target);
  }
  return out;
}

}  // namespace schurpos
