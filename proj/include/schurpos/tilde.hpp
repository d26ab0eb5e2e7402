#pragma once
// The part-dealing ("tilde") operation on pairs and m-tuples of partitions,
// its skew-shape extension, and the order-theoretic facts attached to it as
// checkable operations.

#include <utility>
#include <vector>

#include "schurpos/partition.hpp"

namespace schurpos {

// Deal the combined parts alternately: the decreasing rearrangement of all
// parts goes to the first output at odd positions and to the second at even
// positions (adding a zero part when the total count is odd).
inline std::pair<Partition, Partition> tilde_pair(const Partition& mu,
                                                  const Partition& nu) {
  Partition gamma = part_union(mu, nu);
  std::vector<int> lambda, rho;
  for (int i = 0; i < gamma.length(); ++i)
    (i % 2 == 0 ? lambda : rho).push_back(gamma.part(i));
  return {Partition(std::move(lambda)), Partition(std::move(rho))};
}

// m-way dealing: with gamma the decreasing rearrangement of all parts of the
// tuple (zero-padded to a multiple of m), output i collects the entries at
// positions congruent to i mod m.
inline std::vector<Partition> tilde_m(const std::vector<Partition>& mus,
                                      int m) {
  if (m < 2 || static_cast<int>(mus.size()) != m)
    fail(errc::bad_arity, "tilde_m needs exactly m >= 2 partitions");
  std::vector<int> all;
  for (const Partition& p : mus)
    all.insert(all.end(), p.parts().begin(), p.parts().end());
  all = sorted_desc(std::move(all));
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<int> parts;
    for (std::size_t j = static_cast<std::size_t>(i); j < all.size();
         j += static_cast<std::size_t>(m))
      parts.push_back(all[j]);
    out.push_back(Partition(std::move(parts)));
  }
  return out;
}

struct SkewPair {
  SkewShape first;
  SkewShape second;

  friend bool operator==(const SkewPair& a, const SkewPair& b) = default;
  friend auto operator<=>(const SkewPair& a, const SkewPair& b) = default;
};

// Column-balancing characterization of the dealing: for every column index,
// the dealt column lengths sum to the original ones and differ by at most
// one, with the excess on the first. Applied to outers and inners separately.
inline bool check_column_def(const SkewPair& p, const SkewPair& q) {
  auto check = [](const Partition& mu, const Partition& nu,
                  const Partition& la, const Partition& ro) {
    Partition muc = conjugate(mu), nuc = conjugate(nu);
    Partition lac = conjugate(la), roc = conjugate(ro);
    int width = std::max(mu.first(), nu.first());
    for (int i = 0; i < width; ++i) {
      if (lac.part(i) + roc.part(i) != muc.part(i) + nuc.part(i)) return false;
      int d = lac.part(i) - roc.part(i);
      if (d != 0 && d != 1) return false;
    }
    return true;
  };
  return check(p.first.outer, p.second.outer, q.first.outer, q.second.outer) &&
         check(p.first.inner, p.second.inner, q.first.inner, q.second.inner);
}

// Deal the outer and inner pairs independently. Containment of the dealt
// inner in the dealt outer is automatic (dealing is monotone with respect to
// componentwise containment), so the results are well-formed skew shapes.
inline SkewPair skew_tilde(const SkewPair& p) {
  auto [lambda, rho] = tilde_pair(p.first.outer, p.second.outer);
  auto [sigma, tau] = tilde_pair(p.first.inner, p.second.inner);
  SkewPair q{SkewShape(std::move(lambda), std::move(sigma)),
             SkewShape(std::move(rho), std::move(tau))};
#ifndef NDEBUG
  if (!check_column_def(p, q))
    fail(errc::precondition_violated,
         "dealt pair violates the column characterization");
#endif
  return q;
}

// Unique dominance-maximum of the support of the product of the two skew
// Schur functions: conjugate of the merged column lengths.
inline Partition support_max(const SkewPair& p) {
  return conjugate(part_union(col_lengths(p.first), col_lengths(p.second)));
}

// Unique dominance-minimum of the support: merged row lengths.
inline Partition support_min(const SkewPair& p) {
  return part_union(row_lengths(p.first), row_lengths(p.second));
}

// Dealing pushes merged row lengths down and merged column lengths down in
// dominance order. True for every pair; exposed as a check so sweeps can
// exercise it.
inline bool check_row_col_dominance(const SkewPair& p) {
  SkewPair q = skew_tilde(p);
  Partition rows_p = part_union(row_lengths(p.first), row_lengths(p.second));
  Partition rows_q = part_union(row_lengths(q.first), row_lengths(q.second));
  Partition cols_p = part_union(col_lengths(p.first), col_lengths(p.second));
  Partition cols_q = part_union(col_lengths(q.first), col_lengths(q.second));
  return dominance_leq(rows_q, rows_p) && dominance_leq(cols_q, cols_p);
}

// Adding a weakly increasing sequence to a weakly decreasing one gives the
// dominance-smallest result among all rearrangements of the added sequence:
// sorted(gamma + delta) is dominated by sorted(gamma + epsilon) for every
// permutation epsilon of delta. Inputs violating the hypotheses are
// rejected rather than normalized.
inline bool resequence_dominance(const IntSequence& gamma,
                                 const IntSequence& delta,
                                 const IntSequence& epsilon) {
  if (gamma.size() != delta.size() || delta.size() != epsilon.size())
    fail(errc::bad_input, "resequence_dominance needs equal lengths");
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    if (gamma[i] > gamma[i - 1])
      fail(errc::bad_input, "gamma must be weakly decreasing");
    if (delta[i] < delta[i - 1])
      fail(errc::bad_input, "delta must be weakly increasing");
  }
  if (sorted_desc(delta) != sorted_desc(epsilon))
    fail(errc::bad_input, "epsilon must be a permutation of delta");
  IntSequence gd(gamma.size()), ge(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    gd[i] = gamma[i] + delta[i];
    ge[i] = gamma[i] + epsilon[i];
  }
  return dominance_leq(sorted_desc(std::move(gd)), sorted_desc(std::move(ge)));
}

}  // namespace schurpos
