#pragma once
// Integer partitions (French convention, row 1 at the bottom), skew-shape
// descriptions and the combinatorial predicates built on them. Partitions are
// immutable values; every operation here is pure.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "schurpos/common.hpp"

namespace schurpos {

// Arbitrary finite integer sequences (possibly unsorted, possibly negative).
using IntSequence = std::vector<int>;

namespace config {
// Global cap on partition weights, so runaway enumerations fail fast instead
// of eating the machine. Raise it explicitly for bigger sweeps.
inline std::atomic<int>& partition_sum_limit() {
  static std::atomic<int> limit{64};
  return limit;
}
}  // namespace config

class Partition {
 public:
  Partition() = default;

  // Accepts trailing zeros (they are stripped, never stored); rejects
  // negative or increasing part lists.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    long long total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        fail(errc::bad_input, "partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        fail(errc::bad_input, "partition parts must be weakly decreasing");
      total += parts_[i];
    }
    if (total > config::partition_sum_limit().load())
      fail(errc::bound_exceeded,
           "partition weight " + std::to_string(total) + " exceeds limit");
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Construction for internally derived shapes (e.g. the container of a
  // disjoint concatenation), which may legitimately outweigh the input cap.
  // Still validates monotonicity; only the weight guard is skipped.
  static Partition trusted(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    while (!p.parts_.empty() && p.parts_.back() == 0) p.parts_.pop_back();
    for (std::size_t i = 0; i < p.parts_.size(); ++i)
      if (p.parts_[i] <= 0 || (i > 0 && p.parts_[i] > p.parts_[i - 1]))
        fail(errc::bad_input, "not a partition");
    return p;
  }

  // k parts of size a; (a^k) in exponent notation.
  static Partition rectangle(int a, int k) {
    if (a < 0 || k < 0) fail(errc::bad_input, "rectangle dimensions negative");
    if (a == 0 || k == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(k), a));
  }

  // (j, 1^k).
  static Partition hook(int j, int k) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(k) + 1);
    v.push_back(j);
    v.insert(v.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(v));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  // 0-based row index; rows beyond the length are zero.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  int first() const { return part(0); }

  friend bool operator==(const Partition& a, const Partition& b) = default;
  // Lexicographic on the part lists; gives the deterministic order used for
  // printing, map keys and the "smaller component" labeling convention.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// -- basic operations --------------------------------------------------------

inline Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.first()), 0);
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.part(i); ++j) cols[static_cast<std::size_t>(j)]++;
  return Partition(std::move(cols));
}

// Decreasing rearrangement of the combined parts of p and q.
inline Partition part_union(const Partition& p, const Partition& q) {
  std::vector<int> v;
  v.reserve(p.parts().size() + q.parts().size());
  std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(),
             q.parts().end(), std::back_inserter(v), std::greater<int>());
  return Partition(std::move(v));
}

// Componentwise sum, up to the longer length.
inline Partition part_sum(const Partition& p, const Partition& q) {
  int len = std::max(p.length(), q.length());
  std::vector<int> v(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    v[static_cast<std::size_t>(i)] = p.part(i) + q.part(i);
  return Partition(std::move(v));
}

// First part increased by one.
inline Partition add_to_first(const Partition& p) {
  std::vector<int> v = p.parts();
  if (v.empty())
    v.push_back(1);
  else
    v[0]++;
  return Partition(std::move(v));
}

inline IntSequence sorted_desc(IntSequence c) {
  std::sort(c.begin(), c.end(), std::greater<int>());
  return c;
}

// Pairs (a_j, a_i) with i < j and a_i > a_j.
inline long long inversions(const IntSequence& a) {
  long long n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) n++;
  return n;
}

// -- dominance order ---------------------------------------------------------

// Dominance comparison of equal-sum partitions: every prefix sum of p is at
// most that of q. Unequal weights are an error, not "false": the order is
// only defined rank by rank, and a silent false would mask harness bugs.
inline bool dominance_leq(const Partition& p, const Partition& q) {
  long long sp = p.sum(), sq = q.sum();
  if (sp != sq)
    fail(errc::sum_mismatch, "dominance order needs equal weights");
  long long a = 0, b = 0;
  int len = std::max(p.length(), q.length());
  for (int i = 0; i < len; ++i) {
    a += p.part(i);
    b += q.part(i);
    if (a > b) return false;
  }
  return true;
}

// Extension to weakly decreasing integer sequences of equal length, used by
// the resequencing lemma where entries may be negative.
inline bool dominance_leq(const IntSequence& p, const IntSequence& q) {
  if (p.size() != q.size())
    fail(errc::bad_input, "sequence dominance needs equal lengths");
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[i - 1] || q[i] > q[i - 1])
      fail(errc::bad_input, "sequence dominance needs weakly decreasing input");
  }
  long long sp = std::accumulate(p.begin(), p.end(), 0LL);
  long long sq = std::accumulate(q.begin(), q.end(), 0LL);
  if (sp != sq) fail(errc::sum_mismatch, "sequence dominance needs equal sums");
  long long a = 0, b = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    a += p[i];
    b += q[i];
    if (a > b) return false;
  }
  return true;
}

// -- containment -------------------------------------------------------------

inline bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

// (alpha, beta) is contained in (mu, nu) componentwise.
inline bool pair_contains(const std::pair<Partition, Partition>& small,
                          const std::pair<Partition, Partition>& big) {
  return contains(big.first, small.first) && contains(big.second, small.second);
}

// -- skew shapes -------------------------------------------------------------

// An explicit description pair. Equality is description equality: 21/1 and
// 32/2 describe the same cell configuration up to translation but are
// different values, and the operations that care (the tilde operation on
// skew pairs) depend on the description.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition out, Partition in)
      : outer(std::move(out)), inner(std::move(in)) {
    if (!contains(outer, inner))
      fail(errc::bad_input, "skew shape needs inner contained in outer");
  }

  int size() const { return outer.sum() - inner.sum(); }
  bool no_cells() const { return size() == 0; }

  // Cell test, 0-based (row, col).
  bool has_cell(int row, int col) const {
    return col >= inner.part(row) && col < outer.part(row);
  }

  friend bool operator==(const SkewShape& a, const SkewShape& b) = default;
  friend auto operator<=>(const SkewShape& a, const SkewShape& b) = default;
};

inline SkewShape whole(const Partition& p) { return SkewShape(p, Partition{}); }

// Multiset of row lengths, sorted decreasing, zero rows dropped.
inline Partition row_lengths(const SkewShape& s) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(s.outer.length()));
  for (int i = 0; i < s.outer.length(); ++i) {
    int len = s.outer.part(i) - s.inner.part(i);
    if (len > 0) v.push_back(len);
  }
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

inline Partition col_lengths(const SkewShape& s) {
  return row_lengths(SkewShape(conjugate(s.outer), conjugate(s.inner)));
}

inline SkewShape conjugate(const SkewShape& s) {
  return SkewShape(conjugate(s.outer), conjugate(s.inner));
}

// Minimal description: every row and every column of the inner shape stays
// strictly inside the outer one, so the description cannot be shrunk.
inline bool is_minimal_pair(const SkewShape& s) {
  const Partition& mu = s.outer;
  const Partition& al = s.inner;
  for (int i = 0; i < al.length(); ++i)
    if (al.part(i) >= mu.part(i)) return false;
  Partition muc = conjugate(mu), alc = conjugate(al);
  for (int j = 0; j < al.first(); ++j)
    if (alc.part(j) >= muc.part(j)) return false;
  return true;
}

// -- shape classification ----------------------------------------------------

struct ShapeClass {
  bool rectangle = false;
  int rect_rows = 0;  // rows and columns when rectangle
  int rect_cols = 0;
  bool fat_hook = false;
  bool near_rectangle = false;
  bool hook = false;

  bool is_line_rectangle(int k) const {
    return rectangle && (rect_rows == k || rect_cols == k);
  }
  bool other() const { return !rectangle && !fat_hook && !hook; }
};

// Part-size census classification. Flags are non-exclusive: every
// near-rectangle is a fat hook, and small hooks can be fat hooks too.
inline ShapeClass classify_shape(const Partition& p) {
  if (p.empty()) fail(errc::empty_partition, "classify_shape needs parts");
  ShapeClass c;
  // distinct part sizes with multiplicities
  std::vector<std::pair<int, int>> sizes;  // (size, count), decreasing
  for (int x : p.parts()) {
    if (!sizes.empty() && sizes.back().first == x)
      sizes.back().second++;
    else
      sizes.emplace_back(x, 1);
  }
  if (sizes.size() == 1) {
    c.rectangle = true;
    c.rect_rows = p.length();
    c.rect_cols = p.first();
  }
  if (sizes.size() == 2) {
    c.fat_hook = true;
    auto [a, ma] = sizes[0];
    auto [b, mb] = sizes[1];
    // Deleting one row works when a part size occurs once; deleting one
    // column is row deletion on the conjugate, whose part sizes are
    // (ma+mb)^b and ma^(a-b).
    if (ma == 1 || mb == 1 || b == 1 || a - b == 1) c.near_rectangle = true;
  }
  c.hook = p.part(1) <= 1;  // all parts after the first are 1
  return c;
}

struct StripKind {
  bool horizontal_strip = false;  // at most one cell per column
  bool vertical_strip = false;    // at most one cell per row
  bool weak_ribbon = false;       // no 2x2 block of cells
  bool ribbon = false;            // weak ribbon and edgewise connected
  bool skewed_hook = false;       // outer and inner both non-empty hooks
};

// Computes on the explicit cell set of the description (no translation
// normalization), consistent with description equality of SkewShape.
inline StripKind strip_kind(const SkewShape& s) {
  StripKind k;
  const Partition& out = s.outer;
  const Partition& in = s.inner;

  k.horizontal_strip = true;
  k.vertical_strip = true;
  k.weak_ribbon = true;
  Partition outc = conjugate(out), inc = conjugate(in);
  for (int j = 0; j < out.first(); ++j)
    if (outc.part(j) - inc.part(j) > 1) k.horizontal_strip = false;
  for (int i = 0; i < out.length(); ++i)
    if (out.part(i) - in.part(i) > 1) k.vertical_strip = false;
  // 2x2 block with lower-left corner (i, j)
  for (int i = 0; i + 1 < out.length() && k.weak_ribbon; ++i)
    for (int j = 0; j + 1 < out.part(i); ++j)
      if (s.has_cell(i, j) && s.has_cell(i, j + 1) && s.has_cell(i + 1, j) &&
          s.has_cell(i + 1, j + 1)) {
        k.weak_ribbon = false;
        break;
      }

  if (k.weak_ribbon && s.size() > 0) {
    // edgewise connectivity by flood fill over cells
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < out.length(); ++i)
      for (int j = in.part(i); j < out.part(i); ++j) cells.emplace_back(i, j);
    std::vector<bool> seen(cells.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    auto index_of = [&](int r, int c) -> int {
      for (std::size_t t = 0; t < cells.size(); ++t)
        if (cells[t].first == r && cells[t].second == c)
          return static_cast<int>(t);
      return -1;
    };
    while (!stack.empty()) {
      auto [r, c] = cells[stack.back()];
      stack.pop_back();
      const int dr[] = {1, -1, 0, 0}, dc[] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        if (!s.has_cell(r + dr[d], c + dc[d])) continue;
        int t = index_of(r + dr[d], c + dc[d]);
        if (t >= 0 && !seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          visited++;
          stack.push_back(static_cast<std::size_t>(t));
        }
      }
    }
    k.ribbon = visited == cells.size();
  }

  auto nonempty_hook = [](const Partition& p) {
    return !p.empty() && p.part(1) <= 1;
  };
  k.skewed_hook = nonempty_hook(out) && nonempty_hook(in);
  return k;
}

// -- text formats ------------------------------------------------------------

// Comma-separated decimal parts ("5,3,2,2,1"); the empty string is the empty
// partition. Unambiguous for parts of ten or more, unlike concatenated-digit
// shorthand.
inline std::string to_string(const Partition& p) {
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(p.part(i));
  }
  return s;
}

// "outer/inner"; an omitted inner means the empty partition.
inline std::string to_string(const SkewShape& s) {
  std::string txt = to_string(s.outer);
  if (!s.inner.empty()) {
    txt.push_back('/');
    txt += to_string(s.inner);
  }
  return txt;
}

inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(errc::bad_input, "bad partition token '" + std::string(tok) + "'");
    parts.push_back(value);
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

inline SkewShape parse_skew(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    return SkewShape(parse_partition(text), Partition{});
  return SkewShape(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << (p.empty() ? std::string("()") : to_string(p));
}

inline std::ostream& operator<<(std::ostream& os, const SkewShape& s) {
  return os << to_string(s);
}

// -- hashing -----------------------------------------------------------------

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts())
      h = h * 1099511628211ULL ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

struct PartitionPairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& pr) const {
    PartitionHash h;
    return h(pr.first) * 0x100000001b3ULL + h(pr.second);
  }
};

}  // namespace schurpos
