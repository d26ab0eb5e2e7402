#pragma once
// Jacobi-Trudi row bookkeeping, minors as signed Schur functions, Pluecker
// relation terms, the pairwise-dealing expansion built on them, and exploded
// Jacobi-Trudi determinants.
//
// A row spec abbreviates one row of a Jacobi-Trudi style matrix: entry j of
// the row is h_{leading_index + j} (0-based j), with h_0 = 1 and h_j = 0 for
// negative j.

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "schurpos/algebra.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/tilde.hpp"

namespace schurpos {

struct JTRowSpec {
  int leading_index;
  int width;

  friend bool operator==(const JTRowSpec&, const JTRowSpec&) = default;
};

// Row order (0-based) into a row-spec list; repetitions give zero minors.
using MinorSelection = std::vector<int>;

// Rows of the p x p matrix whose determinant is s_mu: row i leads with
// h_{mu_i - i} (0-based i).
inline std::vector<JTRowSpec> jt_rows(const Partition& mu, int p) {
  if (p < mu.length())
    fail(errc::bad_input, "jt_rows needs at least l(mu) rows");
  std::vector<JTRowSpec> rows;
  rows.reserve(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) rows.push_back({mu.part(i) - i, p});
  return rows;
}

// The 2p x p stacked matrix whose top block is the Jacobi-Trudi matrix of
// the odd-indexed parts of gamma and whose bottom block is that of the
// even-indexed parts. Row leading indices interleave:
// d(1) >= d(p+1) > d(2) >= d(p+2) > ...
inline std::vector<JTRowSpec> h_gamma_rows(const Partition& gamma, int p) {
  if (gamma.length() > 2 * p)
    fail(errc::bad_input, "h_gamma_rows needs l(gamma) <= 2p");
  std::vector<JTRowSpec> rows;
  rows.reserve(static_cast<std::size_t>(2 * p));
  for (int i = 0; i < p; ++i) rows.push_back({gamma.part(2 * i) - i, p});
  for (int i = 0; i < p; ++i) rows.push_back({gamma.part(2 * i + 1) - i, p});
  return rows;
}

namespace detail {

struct SignedShape {
  bool zero = true;
  int sign = 1;
  Partition shape;
};

// A p x p minor of h-entries is 0 or +-1 times a single Schur function:
// sort the leading indices strictly decreasing (a repeat means two equal
// rows), pick up the parity of the sorting permutation, and read the shape
// off the sorted indices.
inline SignedShape minor_shape(const MinorSelection& rows,
                               const std::vector<JTRowSpec>& specs) {
  SignedShape r;
  std::size_t p = rows.size();
  std::vector<int> d;
  d.reserve(p);
  for (int idx : rows) {
    if (idx < 0 || idx >= static_cast<int>(specs.size()))
      fail(errc::bad_input, "row selection out of range");
    if (specs[static_cast<std::size_t>(idx)].width != static_cast<int>(p))
      fail(errc::size_mismatch, "selected rows have the wrong width");
    d.push_back(specs[static_cast<std::size_t>(idx)].leading_index);
  }
  int swaps = 0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      if (d[i] == d[j]) return r;  // singular minor
      if (d[i] < d[j]) swaps++;
    }
  std::sort(d.begin(), d.end(), std::greater<int>());
  std::vector<int> parts(p);
  for (std::size_t i = 0; i < p; ++i) parts[i] = d[i] + static_cast<int>(i);
  if (!parts.empty() && parts.back() < 0) return r;  // a row of zeros
  r.zero = false;
  r.sign = swaps % 2 == 0 ? 1 : -1;
  r.shape = Partition(std::move(parts));
  return r;
}

}  // namespace detail

inline SchurVector minor_to_schur(const MinorSelection& rows,
                                  const std::vector<JTRowSpec>& specs) {
  auto s = detail::minor_shape(rows, specs);
  if (s.zero) return SchurVector{};
  return SchurVector::basis(std::move(s.shape), s.sign);
}

// One Pluecker term per k-subsequence d of (p+1, ..., 2p): the selected
// positions c of the identity block swap with d position by position.
// Selections are 0-based into a 2p-row spec list; c is given 1-based over
// 1..p to match the usual bracket notation.
inline std::vector<std::pair<MinorSelection, MinorSelection>> plucker_terms(
    int p, const std::vector<int>& c_subset) {
  for (std::size_t i = 0; i < c_subset.size(); ++i) {
    if (c_subset[i] < 1 || c_subset[i] > p)
      fail(errc::bad_input, "swap positions must lie in 1..p");
    if (i > 0 && c_subset[i] <= c_subset[i - 1])
      fail(errc::bad_input, "swap positions must increase");
  }
  int k = static_cast<int>(c_subset.size());
  std::vector<std::pair<MinorSelection, MinorSelection>> out;
  std::vector<int> d;  // 0-based positions within the second block
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(d.size()) == k) {
      MinorSelection a(static_cast<std::size_t>(p)),
          b(static_cast<std::size_t>(p));
      std::iota(a.begin(), a.end(), 0);
      std::iota(b.begin(), b.end(), p);
      for (int i = 0; i < k; ++i) {
        a[static_cast<std::size_t>(c_subset[static_cast<std::size_t>(i)] - 1)] =
            p + d[static_cast<std::size_t>(i)];
        b[static_cast<std::size_t>(d[static_cast<std::size_t>(i)])] =
            c_subset[static_cast<std::size_t>(i)] - 1;
      }
      out.emplace_back(std::move(a), std::move(b));
      return;
    }
    for (int v = from; v < p; ++v) {
      d.push_back(v);
      self(self, v + 1);
      d.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// A signed product term s_alpha * s_beta.
struct ExpansionTerm {
  int sign;
  Partition alpha;
  Partition beta;
};

// For a pair whose dealing keeps parts in their rows (mu + nu equals the
// dealt componentwise sum), the Pluecker relation on the stacked matrix of
// gamma = mu u nu turns s_lambda s_rho - s_mu s_nu into a signed sum of
// Schur products. Returns every term except the s_mu s_nu one; the
// inversion-count lemma forces all the returned signs positive.
inline std::vector<ExpansionTerm> specialcase_expansion(const Partition& mu,
                                                        const Partition& nu) {
  auto [lambda, rho] = tilde_pair(mu, nu);
  if (part_sum(mu, nu) != part_sum(lambda, rho))
    fail(errc::precondition_violated,
         "pair does not deal within rows (mu + nu != lambda + rho)");
  Partition gamma = part_union(mu, nu);
  int p = std::max(1, (gamma.length() + 1) / 2);
  auto specs = h_gamma_rows(gamma, p);

  std::vector<int> c;
  for (int i = 1; i <= p; ++i)
    if (mu.part(i - 1) != lambda.part(i - 1)) c.push_back(i);
  if (c.empty()) return {};  // pair is already dealt, the difference is zero

  std::vector<ExpansionTerm> terms;
  for (auto& [sel_a, sel_b] : plucker_terms(p, c)) {
    bool identity_swap = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sel_a[static_cast<std::size_t>(c[i] - 1)] != c[i] - 1 + p)
        identity_swap = false;
    if (identity_swap) continue;  // this term is s_mu s_nu
    auto a = detail::minor_shape(sel_a, specs);
    auto b = detail::minor_shape(sel_b, specs);
    if (a.zero || b.zero) continue;
    terms.push_back({a.sign * b.sign, std::move(a.shape), std::move(b.shape)});
  }
  return terms;
}

// Direct inversion-count comparison of the two swapped sequences from the
// interleaving hypothesis a_1 >= b_1 > a_2 >= b_2 > ... Returns nullopt when
// a swapped sequence has repeated entries (the vacuous case of the
// statement), otherwise whether the two counts agree.
inline std::optional<bool> inversion_lemma_check(
    const IntSequence& a, const IntSequence& b, const std::vector<int>& c_idx,
    const std::vector<int>& d_idx) {
  if (a.size() != b.size() || c_idx.size() != d_idx.size())
    fail(errc::bad_input, "mismatched sequence or index lengths");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] || (i + 1 < a.size() && b[i] <= a[i + 1]))
      fail(errc::bad_interleaving,
           "sequences must satisfy a1 >= b1 > a2 >= b2 > ...");
  }
  auto check_idx = [&](const std::vector<int>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 0 || idx[i] >= static_cast<int>(a.size()))
        fail(errc::bad_input, "swap index out of range");
      if (i > 0 && idx[i] <= idx[i - 1])
        fail(errc::bad_input, "swap indices must increase");
    }
  };
  check_idx(c_idx);
  check_idx(d_idx);
  IntSequence ap = a, bp = b;
  for (std::size_t i = 0; i < c_idx.size(); ++i) {
    ap[static_cast<std::size_t>(c_idx[i])] =
        b[static_cast<std::size_t>(d_idx[i])];
    bp[static_cast<std::size_t>(d_idx[i])] =
        a[static_cast<std::size_t>(c_idx[i])];
  }
  auto distinct = [](IntSequence v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(ap) || !distinct(bp)) return std::nullopt;
  return inversions(ap) == inversions(bp);
}

// Determinant of the matrix whose (i, j) entry is the Schur function of the
// k-row rectangle ((mu_i - i + j)^k), expanded as an explicit permutation
// sum. Index 0 gives the scalar 1, negative indices kill the term.
inline SchurVector exploded_jt(const Partition& mu, int k, int p) {
  if (k < 1) fail(errc::bad_input, "exploded_jt needs k >= 1");
  if (p < 1 || p < mu.length())
    fail(errc::bad_input, "exploded_jt needs p >= l(mu)");
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  SchurVector det;
  do {
    long long inv = inversions(IntSequence(perm.begin(), perm.end()));
    bool dead = false;
    std::vector<int> heights;
    for (int i = 0; i < p && !dead; ++i) {
      int n = mu.part(i) - i + perm[static_cast<std::size_t>(i)];
      if (n < 0) dead = true;
      else if (n > 0) heights.push_back(n);
    }
    if (dead) continue;
    SchurVector term = SchurVector::one();
    for (int n : heights)
      term = multiply(term, SchurVector::basis(Partition::rectangle(n, k)));
    det += inv % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace schurpos
