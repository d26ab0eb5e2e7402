#pragma once
// Littlewood-Richardson machinery: enumeration of LR fillings, coefficients,
// disjoint concatenation of skew shapes and skew Schur expansion.
//
// The enumerator fills cells in reading order (bottom row right to left,
// then upward). In that order the semistandard constraints only look at
// already-placed neighbors and the lattice condition can be maintained
// incrementally, so bad branches die at the first offending cell.

#include <vector>

#include "schurpos/partition.hpp"
#include "schurpos/schur_vector.hpp"

namespace schurpos {

struct LRFilling {
  SkewShape shape;
  // rows[r] holds the entries of row r, leftmost skew cell first
  std::vector<std::vector<int>> rows;

  friend bool operator==(const LRFilling& a, const LRFilling& b) = default;
};

// Entries read from the bottom row, right to left, going up the rows.
inline IntSequence reading_word(const LRFilling& f) {
  IntSequence w;
  for (const auto& row : f.rows) w.insert(w.end(), row.rbegin(), row.rend());
  return w;
}

// Every prefix contains at least as many i's as (i+1)'s, for all i.
inline bool is_lattice(const IntSequence& w) {
  int maxv = 0;
  for (int a : w) maxv = std::max(maxv, a);
  std::vector<int> count(static_cast<std::size_t>(maxv) + 2, 0);
  for (int a : w) {
    if (a <= 0) fail(errc::bad_input, "lattice words have positive entries");
    if (a >= 2 && count[static_cast<std::size_t>(a - 1)] <=
                      count[static_cast<std::size_t>(a)])
      return false;
    count[static_cast<std::size_t>(a)]++;
  }
  return true;
}

namespace detail {

// Cells in reading order with the neighbor links the constraints need.
struct ReadingCells {
  struct Cell {
    int row;
    int col;
    int below;       // reading-order index of the cell directly below, or -1
    bool has_right;  // cell to the right exists (it is the previous index)
  };
  std::vector<Cell> cells;

  explicit ReadingCells(const SkewShape& s) {
    std::vector<int> row_start(static_cast<std::size_t>(s.outer.length()), 0);
    for (int r = 0; r < s.outer.length(); ++r) {
      row_start[static_cast<std::size_t>(r)] = static_cast<int>(cells.size());
      for (int c = s.outer.part(r) - 1; c >= s.inner.part(r); --c) {
        Cell cell;
        cell.row = r;
        cell.col = c;
        cell.has_right = c + 1 < s.outer.part(r);
        cell.below = -1;
        if (r > 0 && c >= s.inner.part(r - 1) && c < s.outer.part(r - 1))
          cell.below = row_start[static_cast<std::size_t>(r - 1)] +
                       (s.outer.part(r - 1) - 1 - c);
        cells.push_back(cell);
      }
    }
  }
};

// Shared DFS core. Visitor is called once per complete LR filling with the
// value array (indexed in reading order) and the final value counts.
template <typename Visit>
void lr_dfs(const ReadingCells& grid, const std::vector<int>* remaining_init,
            int max_value, Visit&& visit) {
  const auto& cells = grid.cells;
  std::vector<int> vals(cells.size(), 0);
  // count[v] = copies of v placed so far; count[0] sentinels the v=1 case
  std::vector<int> count(static_cast<std::size_t>(max_value) + 2, 0);
  count[0] = static_cast<int>(cells.size()) + 1;
  std::vector<int> remaining;
  if (remaining_init) remaining = *remaining_init;

  auto rec = [&](auto&& self, std::size_t idx, int max_used) -> void {
    if (idx == cells.size()) {
      visit(vals, count, max_used);
      return;
    }
    const auto& cell = cells[idx];
    int lo = cell.below >= 0 ? vals[static_cast<std::size_t>(cell.below)] + 1 : 1;
    int hi = cell.has_right ? vals[idx - 1] : max_value;
    hi = std::min(hi, max_used + 1);  // lattice forbids skipping a value
    for (int v = lo; v <= hi; ++v) {
      std::size_t sv = static_cast<std::size_t>(v);
      if (count[sv - 1] <= count[sv]) continue;  // lattice prefix condition
      if (remaining_init && remaining[sv] == 0) continue;
      count[sv]++;
      if (remaining_init) remaining[sv]--;
      vals[idx] = v;
      self(self, idx + 1, std::max(max_used, v));
      count[sv]--;
      if (remaining_init) remaining[sv]++;
    }
  };
  rec(rec, 0, 0);
}

inline LRFilling filling_from_vals(const SkewShape& s,
                                   const ReadingCells& grid,
                                   const std::vector<int>& vals) {
  LRFilling f;
  f.shape = s;
  f.rows.resize(static_cast<std::size_t>(s.outer.length()));
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    const auto& c = grid.cells[i];
    f.rows[static_cast<std::size_t>(c.row)].push_back(0);
  }
  // cells of a row are stored right to left
  std::vector<int> fill_pos(static_cast<std::size_t>(s.outer.length()));
  for (int r = 0; r < s.outer.length(); ++r)
    fill_pos[static_cast<std::size_t>(r)] =
        static_cast<int>(f.rows[static_cast<std::size_t>(r)].size()) - 1;
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    const auto& c = grid.cells[i];
    f.rows[static_cast<std::size_t>(c.row)]
          [static_cast<std::size_t>(fill_pos[static_cast<std::size_t>(c.row)]--)] =
        vals[i];
  }
  return f;
}

}  // namespace detail

// All LR fillings of the given shape and content, in lexicographic order of
// their reading words, each produced exactly once.
inline std::vector<LRFilling> enumerate_lr_fillings(const SkewShape& shape,
                                                    const Partition& content) {
  if (shape.size() != content.sum())
    fail(errc::size_mismatch, "cell count of " + to_string(shape) +
                                  " differs from |" + to_string(content) + "|");
  detail::ReadingCells grid(shape);
  int m = content.length();
  std::vector<int> remaining(static_cast<std::size_t>(m) + 2, 0);
  for (int v = 1; v <= m; ++v)
    remaining[static_cast<std::size_t>(v)] = content.part(v - 1);
  std::vector<LRFilling> out;
  detail::lr_dfs(grid, &remaining, m,
                 [&](const std::vector<int>& vals, const std::vector<int>&,
                     int) {
                   out.push_back(detail::filling_from_vals(shape, grid, vals));
                 });
  return out;
}

namespace detail {
inline coeff_t count_lr_fillings(const SkewShape& shape,
                                 const Partition& content) {
  ReadingCells grid(shape);
  int m = content.length();
  std::vector<int> remaining(static_cast<std::size_t>(m) + 2, 0);
  for (int v = 1; v <= m; ++v)
    remaining[static_cast<std::size_t>(v)] = content.part(v - 1);
  coeff_t n = 0;
  lr_dfs(grid, &remaining, m,
         [&](const std::vector<int>&, const std::vector<int>&, int) {
           n = checked_add(n, 1);
         });
  return n;
}
}  // namespace detail

// Structure constant of Schur multiplication; zero unless mu fits inside
// theta with the right weight gap.
inline coeff_t lr_coefficient(const Partition& theta, const Partition& mu,
                              const Partition& nu) {
  if (!contains(theta, mu)) return 0;
  if (theta.sum() != mu.sum() + nu.sum()) return 0;
  return detail::count_lr_fillings(SkewShape(theta, mu), nu);
}

// Disjoint diagonal concatenation: the second shape sits below and to the
// right of the first, sharing no row or column, so the skew Schur function
// of the result is the product of the two factors.
inline SkewShape star_concatenate(const SkewShape& a, const SkewShape& b) {
  int shift = a.outer.first();
  std::vector<int> outer, inner;
  for (int i = 0; i < b.outer.length(); ++i) {
    outer.push_back(b.outer.part(i) + shift);
    inner.push_back(b.inner.part(i) + shift);
  }
  for (int i = 0; i < a.outer.length(); ++i) {
    outer.push_back(a.outer.part(i));
    if (i < a.inner.length()) inner.push_back(a.inner.part(i));
  }
  // container weight can exceed the input cap; only the cells count
  return SkewShape(Partition::trusted(std::move(outer)),
                   Partition::trusted(std::move(inner)));
}

// Schur expansion of a skew Schur function: coefficient of s_nu is the LR
// coefficient of the outer shape over (inner, nu). All coefficients are
// nonnegative by construction.
inline SchurVector skew_schur_expand(const SkewShape& s) {
  detail::ReadingCells grid(s);
  SchurVector::Terms terms;
  // consecutive fillings usually share a content; remember the last slot
  std::vector<int> last_counts;
  coeff_t* last_slot = nullptr;
  detail::lr_dfs(
      grid, nullptr, static_cast<int>(grid.cells.size()),
      [&](const std::vector<int>&, const std::vector<int>& count,
          int max_used) {
        std::size_t m = static_cast<std::size_t>(max_used);
        if (last_slot && last_counts.size() == m &&
            std::equal(last_counts.begin(), last_counts.end(),
                       count.begin() + 1)) {
          *last_slot = checked_add(*last_slot, 1);
          return;
        }
        last_counts.assign(count.begin() + 1,
                           count.begin() + 1 + static_cast<long>(m));
        Partition content{std::vector<int>(last_counts)};
        auto [it, inserted] = terms.try_emplace(std::move(content), 0);
        it->second = checked_add(it->second, 1);
        last_slot = &it->second;
      });
  return SchurVector::from_terms(std::move(terms));
}

}  // namespace schurpos
