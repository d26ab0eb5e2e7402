#pragma once
// Posets of unordered partition pairs ordered by Schur-positivity of the
// product difference: the full weight-n poset and the subposets induced by
// dealings of a fixed part multiset. Includes isomorphism testing and
// DOT/JSON export.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schurpos/algebra.hpp"
#include "schurpos/generate.hpp"
#include "schurpos/tilde.hpp"

namespace schurpos {

struct PairElement {
  // canonical orientation: second is the lexicographically smaller partition
  Partition first;
  Partition second;

  static PairElement of(Partition a, Partition b) {
    auto [x, y] = canonical_pair(std::move(a), std::move(b));
    return {std::move(x), std::move(y)};
  }

  // Display convention: an element is named by its lexicographically smaller
  // component, and empty partitions are not displayed.
  std::string label() const {
    if (!second.empty()) return to_string(second);
    if (!first.empty()) return to_string(first);
    return "()";
  }

  friend bool operator==(const PairElement&, const PairElement&) = default;
  friend auto operator<=>(const PairElement&, const PairElement&) = default;
};

class Poset {
 public:
  Poset() = default;

  // Builds the strict order "product difference is Schur-positive and
  // nonzero" over the given elements. Distinct elements with equal products
  // would break antisymmetry; that situation is detected and reported, never
  // silently absorbed.
  explicit Poset(std::vector<PairElement> elements)
      : elements_(std::move(elements)) {
    std::size_t n = elements_.size();
    std::vector<std::shared_ptr<const SchurVector>> prod(n);
    for (std::size_t i = 0; i < n; ++i)
      prod[i] = schur_product(elements_[i].first, elements_[i].second);
    less_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        bool ij = dominated_by(*prod[i], *prod[j]);
        bool ji = dominated_by(*prod[j], *prod[i]);
        if (ij && ji)
          fail(errc::precondition_violated,
               "antisymmetry violation: distinct elements (" +
                   to_string(elements_[i].first) + " | " +
                   to_string(elements_[i].second) + ") and (" +
                   to_string(elements_[j].first) + " | " +
                   to_string(elements_[j].second) + ") have equal products");
        if (ij) less_[i][j] = true;
        if (ji) less_[j][i] = true;
      }
    check_strict_order();
    compute_covers();
  }

  static Poset from_parts(std::vector<PairElement> elements,
                          std::vector<std::vector<bool>> less,
                          std::vector<std::pair<int, int>> covers) {
    Poset p;
    p.elements_ = std::move(elements);
    p.less_ = std::move(less);
    p.covers_ = std::move(covers);
    p.check_strict_order();
    return p;
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<PairElement>& elements() const { return elements_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool less(int i, int j) const {
    return less_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  long long relation_count() const {
    long long n = 0;
    for (const auto& row : less_)
      for (bool b : row) n += b;
    return n;
  }

  // Longest chain strictly below each element; the grading used for layout.
  std::vector<int> heights() const {
    std::vector<int> h(elements_.size(), -1);
    auto rec = [&](auto&& self, std::size_t i) -> int {
      if (h[i] >= 0) return h[i];
      int best = 0;
      for (std::size_t j = 0; j < elements_.size(); ++j)
        if (less_[j][i]) best = std::max(best, self(self, j) + 1);
      return h[i] = best;
    };
    for (std::size_t i = 0; i < elements_.size(); ++i) rec(rec, i);
    return h;
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && a.less_ == b.less_ &&
           a.covers_ == b.covers_;
  }

 private:
  void check_strict_order() {
    std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (less_[i][i])
        fail(errc::precondition_violated, "irreflexivity violation");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (less_[i][j] && less_[j][i])
          fail(errc::precondition_violated, "antisymmetry violation");
        if (!less_[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (less_[j][k] && !less_[i][k])
            fail(errc::precondition_violated, "transitivity violation");
      }
  }

  void compute_covers() {
    std::size_t n = elements_.size();
    covers_.clear();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!less_[i][j]) continue;
        bool cover = true;
        for (std::size_t k = 0; k < n && cover; ++k)
          if (less_[i][k] && less_[k][j]) cover = false;
        if (cover) covers_.emplace_back(static_cast<int>(i),
                                        static_cast<int>(j));
      }
  }

  std::vector<PairElement> elements_;
  std::vector<std::vector<bool>> less_;
  std::vector<std::pair<int, int>> covers_;
};

// All unordered pairs (mu, nu) with |mu| + |nu| = n (empty components
// allowed), ordered by Schur-positivity of the product difference.
inline Poset build_pn(int n, int max_n = 12) {
  if (n < 0) fail(errc::bad_input, "build_pn needs n >= 0");
  if (n > max_n)
    fail(errc::bound_exceeded,
         "n = " + std::to_string(n) + " above the configured bound");
  std::vector<PairElement> elements;
  for (int a = 0; 2 * a <= n; ++a)
    for (const Partition& mu : partitions_of(a))
      for (const Partition& nu : partitions_of(n - a)) {
        PairElement e = PairElement::of(mu, nu);
        if (2 * a == n && !(e.first == mu && e.second == nu) && mu != nu)
          continue;  // unordered: keep one orientation
        elements.push_back(std::move(e));
      }
  return Poset(std::move(elements));
}

// The subposet of dealings of the parts of gamma. Element order matches
// dealings(gamma), which canonical_dealing_map relies on.
inline Poset build_dealings(const Partition& gamma) {
  std::vector<PairElement> elements;
  for (const Dealing& d : dealings(gamma))
    elements.push_back(PairElement{d.pair.first, d.pair.second});
  return Poset(std::move(elements));
}

// The unique maximum when it exists: the single maximal element of a finite
// poset is automatically above everything.
inline std::optional<PairElement> maximum_element(const Poset& p) {
  std::optional<PairElement> best;
  int found = 0;
  for (int i = 0; i < p.size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < p.size() && maximal; ++j)
      if (p.less(i, j)) maximal = false;
    if (maximal) {
      found++;
      best = p.elements()[static_cast<std::size_t>(i)];
    }
  }
  if (found != 1) return std::nullopt;
  return best;
}

inline bool is_chain(const Poset& p) {
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (!p.less(i, j) && !p.less(j, i)) return false;
  return true;
}

namespace detail {
// Iterated neighborhood refinement over both posets at once. Sharing one
// signature-to-id map per round keeps the label numbering comparable
// between the two posets; refining them separately would make equal
// structures come out with permuted ids.
inline std::pair<std::vector<int>, std::vector<int>> refine_labels(
    const Poset& p, const Poset& q) {
  auto signature = [](const Poset& poset, const std::vector<int>& label,
                      int i) {
    std::vector<int> sig{label[static_cast<std::size_t>(i)]};
    std::vector<int> up, down;
    for (int j = 0; j < poset.size(); ++j) {
      if (poset.less(i, j)) up.push_back(label[static_cast<std::size_t>(j)]);
      if (poset.less(j, i)) down.push_back(label[static_cast<std::size_t>(j)]);
    }
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    sig.push_back(-1);
    sig.insert(sig.end(), up.begin(), up.end());
    sig.push_back(-2);
    sig.insert(sig.end(), down.begin(), down.end());
    return sig;
  };
  std::vector<int> lp(static_cast<std::size_t>(p.size()), 0);
  std::vector<int> lq(static_cast<std::size_t>(q.size()), 0);
  for (int round = 0; round < p.size() + 2; ++round) {
    std::map<std::vector<int>, int> ids;
    auto next_of = [&](const Poset& poset, const std::vector<int>& label) {
      std::vector<int> next(label.size());
      for (int i = 0; i < poset.size(); ++i) {
        auto [it, inserted] = ids.emplace(signature(poset, label, i),
                                          static_cast<int>(ids.size()));
        next[static_cast<std::size_t>(i)] = it->second;
      }
      return next;
    };
    std::vector<int> np = next_of(p, lp), nq = next_of(q, lq);
    bool changed = np != lp || nq != lq;
    lp = std::move(np);
    lq = std::move(nq);
    if (!changed) break;
  }
  return {std::move(lp), std::move(lq)};
}
}  // namespace detail

// Exhaustive bijection search with refinement-label pruning. Exact; meant
// for the few dozen elements these posets have.
inline bool is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  int n = p.size();
  auto [lp, lq] = detail::refine_labels(p, q);
  {
    auto a = lp, b = lq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  // assign p-elements in order of rarest label first
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> freq(static_cast<std::size_t>(n), 0);
  for (int l : lp) freq[static_cast<std::size_t>(l)]++;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return freq[static_cast<std::size_t>(lp[static_cast<std::size_t>(a)])] <
           freq[static_cast<std::size_t>(lp[static_cast<std::size_t>(b)])];
  });
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int step) -> bool {
    if (step == n) return true;
    int i = order[static_cast<std::size_t>(step)];
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (lq[static_cast<std::size_t>(cand)] !=
          lp[static_cast<std::size_t>(i)])
        continue;
      bool ok = true;
      for (int s = 0; s < step && ok; ++s) {
        int j = order[static_cast<std::size_t>(s)];
        int cj = image[static_cast<std::size_t>(j)];
        if (p.less(i, j) != q.less(cand, cj) ||
            p.less(j, i) != q.less(cj, cand))
          ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(i)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (self(self, step + 1)) return true;
      used[static_cast<std::size_t>(cand)] = false;
      image[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

// Relations of p all hold in q under the supplied element correspondence.
inline bool is_weak_subposet(const Poset& p, const Poset& q,
                             const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != p.size())
    fail(errc::size_mismatch, "correspondence must cover every element");
  std::vector<bool> hit(static_cast<std::size_t>(q.size()), false);
  for (int m : map) {
    if (m < 0 || m >= q.size())
      fail(errc::size_mismatch, "correspondence image out of range");
    if (hit[static_cast<std::size_t>(m)])
      fail(errc::size_mismatch, "correspondence must be injective");
    hit[static_cast<std::size_t>(m)] = true;
  }
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.less(i, j) &&
          !q.less(map[static_cast<std::size_t>(i)],
                  map[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

// Dealing-to-dealing correspondence between part multisets with the same run
// multiplicities: dealings match when they split the runs the same way.
// Returns the index map from build_dealings(g1) to build_dealings(g2).
inline std::vector<int> canonical_dealing_map(const Partition& g1,
                                              const Partition& g2) {
  auto r1 = part_runs(g1), r2 = part_runs(g2);
  if (r1.size() != r2.size())
    fail(errc::size_mismatch, "part multisets have different run structure");
  for (std::size_t i = 0; i < r1.size(); ++i)
    if (r1[i].second != r2[i].second)
      fail(errc::size_mismatch, "part multisets have different run structure");
  auto d1 = dealings(g1), d2 = dealings(g2);
  if (d1.size() != d2.size())
    fail(errc::size_mismatch, "dealing counts differ");
  std::map<std::vector<int>, int> index2;
  for (std::size_t j = 0; j < d2.size(); ++j)
    index2[d2[j].pattern] = static_cast<int>(j);
  std::vector<int> map;
  map.reserve(d1.size());
  for (const Dealing& d : d1) {
    auto it = index2.find(d.pattern);
    if (it == index2.end())
      fail(errc::size_mismatch, "no matching dealing pattern");
    map.push_back(it->second);
  }
  return map;
}

// The explicit two-coefficient witness separating consecutive dealings of m
// copies of k: for theta = ((2k)^r, k^(m-2r)) the lower dealing cannot reach
// theta while the higher one reaches it exactly once.
inline std::tuple<Partition, coeff_t, coeff_t> chain_witness(int k, int m,
                                                             int r) {
  if (k < 1 || m < 2) fail(errc::bad_input, "chain_witness needs k >= 1, m >= 2");
  if (r < 1 || 2 * r > m)
    fail(errc::bad_rank, "rank must satisfy 1 <= r <= m/2");
  std::vector<int> parts;
  parts.insert(parts.end(), static_cast<std::size_t>(r), 2 * k);
  parts.insert(parts.end(), static_cast<std::size_t>(m - 2 * r), k);
  Partition theta(std::move(parts));
  coeff_t low = lr_coefficient(theta, Partition::rectangle(k, m - r + 1),
                               Partition::rectangle(k, r - 1));
  coeff_t high = lr_coefficient(theta, Partition::rectangle(k, m - r),
                                Partition::rectangle(k, r));
  return {std::move(theta), low, high};
}

// -- export ------------------------------------------------------------------

// Hasse diagram as a DOT digraph, bottom-to-top, one rank per height.
inline std::string export_dot(const Poset& p) {
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" +
           p.elements()[static_cast<std::size_t>(i)].label() + "\"];\n";
  for (const auto& [lo, hi] : p.covers())
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  auto h = p.heights();
  int max_h = 0;
  for (int x : h) max_h = std::max(max_h, x);
  for (int level = 0; level <= max_h; ++level) {
    std::string rank;
    for (int i = 0; i < p.size(); ++i)
      if (h[static_cast<std::size_t>(i)] == level)
        rank += " n" + std::to_string(i) + ";";
    if (!rank.empty()) out += "  { rank=same;" + rank + " }\n";
  }
  out += "}\n";
  return out;
}

inline nlohmann::json to_json(const Partition& p) {
  return nlohmann::json(p.parts());
}

inline std::string export_json(const Poset& p) {
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  for (const PairElement& e : p.elements())
    j["elements"].push_back({{"first", e.first.parts()},
                             {"second", e.second.parts()}});
  j["less"] = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i)
    for (int k = 0; k < p.size(); ++k)
      if (p.less(i, k)) j["less"].push_back({i, k});
  j["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : p.covers()) j["covers"].push_back({lo, hi});
  return j.dump(2) + "\n";
}

inline Poset parse_poset_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<PairElement> elements;
  for (const auto& e : j.at("elements"))
    elements.push_back(
        PairElement{Partition(e.at("first").get<std::vector<int>>()),
                    Partition(e.at("second").get<std::vector<int>>())});
  std::size_t n = elements.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (const auto& r : j.at("less"))
    less.at(r.at(0).get<std::size_t>()).at(r.at(1).get<std::size_t>()) = true;
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers"))
    covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return Poset::from_parts(std::move(elements), std::move(less),
                           std::move(covers));
}

}  // namespace schurpos
