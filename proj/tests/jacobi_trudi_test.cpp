#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "schurpos/generate.hpp"
#include "schurpos/jacobi_trudi.hpp"
#include "test_util.hpp"

using namespace schurpos;
using testutil::error_code_of;

namespace {

// Independent route: expand the determinant of the h-entry matrix as a
// permutation sum of h-products.
SchurVector jt_det_via_h(const Partition& mu, int p) {
  auto rows = jt_rows(mu, p);
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  SchurVector det;
  do {
    std::vector<int> indices;
    bool dead = false;
    for (int i = 0; i < p && !dead; ++i) {
      int idx = rows[static_cast<std::size_t>(i)].leading_index +
                perm[static_cast<std::size_t>(i)];
      if (idx < 0) dead = true;
      else if (idx > 0) indices.push_back(idx);
    }
    if (dead) continue;
    SchurVector term = h_to_schur(Partition(sorted_desc(std::move(indices))));
    det += inversions(IntSequence(perm.begin(), perm.end())) % 2 == 0 ? term
                                                                      : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

long long int_minor(const std::vector<std::vector<long long>>& m,
                    const MinorSelection& rows) {
  int p = static_cast<int>(rows.size());
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  long long det = 0;
  do {
    long long term = 1;
    for (int i = 0; i < p; ++i)
      term *= m[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])]
               [static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    det += inversions(IntSequence(perm.begin(), perm.end())) % 2 == 0 ? term
                                                                      : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("row specs", "[jt]") {
  auto rows = jt_rows(Partition{2, 1}, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].leading_index == 2);
  CHECK(rows[1].leading_index == 0);

  CHECK(jt_rows(Partition{}, 1)[0].leading_index == 0);
  CHECK(jt_rows(Partition{3}, 1)[0].leading_index == 3);
  CHECK(error_code_of([] { jt_rows(Partition{2, 1}, 1); }) == errc::bad_input);
}

TEST_CASE("stacked rows of a part multiset", "[jt]") {
  auto rows = h_gamma_rows(Partition{2, 2, 1, 1}, 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].leading_index == 2);
  CHECK(rows[1].leading_index == 0);
  CHECK(rows[2].leading_index == 2);
  CHECK(rows[3].leading_index == 0);

  auto one = h_gamma_rows(Partition{4, 4}, 1);
  CHECK(one[0].leading_index == 4);
  CHECK(one[1].leading_index == 4);

  SECTION("leading indices interleave") {
    for (int p = 1; p <= 6; ++p)
      for (int n = 0; n <= 10; ++n)
        for (const Partition& gamma : partitions_of(n, -1, 2 * p)) {
          auto specs = h_gamma_rows(gamma, p);
          for (int i = 0; i < p; ++i) {
            CHECK(specs[static_cast<std::size_t>(i)].leading_index >=
                  specs[static_cast<std::size_t>(i + p)].leading_index);
            if (i + 1 < p)
              CHECK(specs[static_cast<std::size_t>(i + p)].leading_index >
                    specs[static_cast<std::size_t>(i + 1)].leading_index);
          }
        }
  }
}

TEST_CASE("minors are signed Schur functions", "[jt]") {
  auto specs = jt_rows(Partition{2, 1}, 2);
  CHECK(minor_to_schur({0, 1}, specs) == SchurVector::basis(Partition{2, 1}));
  CHECK(minor_to_schur({1, 0}, specs) ==
        SchurVector::basis(Partition{2, 1}, -1));
  CHECK(minor_to_schur({0, 0}, specs).is_zero());
}

TEST_CASE("determinant route reproduces the Schur function", "[jt]") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& mu : partitions_of(n)) {
      int p = std::max(1, mu.length());
      INFO(to_string(mu));
      CHECK(jt_det_via_h(mu, p) == SchurVector::basis(mu));
      // one padded row changes nothing
      if (p + 1 <= 6) CHECK(jt_det_via_h(mu, p + 1) == SchurVector::basis(mu));
    }
}

TEST_CASE("swap terms of the bracket relation", "[jt]") {
  auto terms = plucker_terms(4, {1, 3});
  REQUIRE(terms.size() == 6);
  CHECK(terms[0].first == MinorSelection{4, 1, 5, 3});   // rows 5,2,6,4
  CHECK(terms[0].second == MinorSelection{0, 2, 6, 7});  // rows 1,3,7,8

  auto identity = plucker_terms(3, {});
  REQUIRE(identity.size() == 1);
  CHECK(identity[0].first == MinorSelection{0, 1, 2});
  CHECK(identity[0].second == MinorSelection{3, 4, 5});

  auto full = plucker_terms(2, {1, 2});
  REQUIRE(full.size() == 1);
  CHECK(full[0].first == MinorSelection{2, 3});
  CHECK(full[0].second == MinorSelection{0, 1});

  CHECK(error_code_of([] { plucker_terms(3, {0}); }) == errc::bad_input);
  CHECK(error_code_of([] { plucker_terms(3, {2, 2}); }) == errc::bad_input);
}

TEST_CASE("bracket relation holds on random integer matrices", "[jt]") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<long long> entry(-9, 9);
  for (int p = 2; p <= 4; ++p) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::vector<long long>> m(
          static_cast<std::size_t>(2 * p),
          std::vector<long long>(static_cast<std::size_t>(p)));
      for (auto& row : m)
        for (auto& x : row) x = entry(rng);
      MinorSelection a(static_cast<std::size_t>(p)),
          b(static_cast<std::size_t>(p));
      std::iota(a.begin(), a.end(), 0);
      std::iota(b.begin(), b.end(), p);
      long long lhs = int_minor(m, a) * int_minor(m, b);
      // every swap-position subset, including the trivial ones
      std::vector<std::vector<int>> subsets{{}};
      for (int i = 1; i <= p; ++i) {
        std::size_t count = subsets.size();
        for (std::size_t t = 0; t < count; ++t) {
          auto s = subsets[t];
          s.push_back(i);
          subsets.push_back(std::move(s));
        }
      }
      for (const auto& c : subsets) {
        long long rhs = 0;
        for (const auto& [ta, tb] : plucker_terms(p, c))
          rhs += int_minor(m, ta) * int_minor(m, tb);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("pairwise dealing expansion", "[jt]") {
  SECTION("already dealt pairs expand to nothing") {
    auto terms = specialcase_expansion(Partition{2, 1}, Partition{2, 1});
    CHECK(terms.empty());
  }

  SECTION("precondition is enforced") {
    CHECK(error_code_of([] {
            specialcase_expansion(Partition{1, 1}, Partition{});
          }) == errc::precondition_violated);
  }

  SECTION("terms sum to the difference with positive signs") {
    for (int n = 0; n <= 10; ++n)
      for (const Partition& gamma : partitions_of(n)) {
        auto [lambda, rho] = tilde_pair(gamma, Partition{});
        SchurVector dealt = multiply(SchurVector::basis(lambda),
                                     SchurVector::basis(rho));
        for (const Dealing& d : dealings(gamma)) {
          const auto& [mu, nu] = d.pair;
          if (part_sum(mu, nu) != part_sum(lambda, rho)) continue;
          SchurVector total = multiply(SchurVector::basis(mu),
                                       SchurVector::basis(nu));
          INFO("gamma " << to_string(gamma) << ", pair " << to_string(mu)
                        << " | " << to_string(nu));
          for (const ExpansionTerm& t : specialcase_expansion(mu, nu)) {
            CHECK(t.sign == 1);
            SchurVector prod = multiply(SchurVector::basis(t.alpha),
                                        SchurVector::basis(t.beta));
            total += t.sign > 0 ? prod : -prod;
          }
          CHECK(total == dealt);
        }
      }
  }
}

TEST_CASE("inversion counts survive interleaved swaps", "[jt]") {
  CHECK(inversion_lemma_check({5, 3, 1}, {4, 2, 0}, {}, {}) ==
        std::optional<bool>(true));

  SECTION("repeated entries are vacuous") {
    auto r = inversion_lemma_check({2, 1}, {2, 1}, {1}, {0});
    CHECK_FALSE(r.has_value());
  }

  SECTION("hypothesis violations are rejected") {
    CHECK(error_code_of([] {
            inversion_lemma_check({1, 5}, {0, 4}, {}, {});
          }) == errc::bad_interleaving);
  }

  SECTION("randomized interleaved instances") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> gap(0, 3);
    std::uniform_int_distribution<int> len(1, 8);
    for (int trial = 0; trial < 2000; ++trial) {
      int p = len(rng);
      IntSequence a(static_cast<std::size_t>(p)),
          b(static_cast<std::size_t>(p));
      int cur = 0;
      for (int i = p - 1; i >= 0; --i) {
        b[static_cast<std::size_t>(i)] = cur;
        cur += gap(rng);
        a[static_cast<std::size_t>(i)] = cur;
        cur += 1 + gap(rng);
      }
      std::uniform_int_distribution<int> kd(0, p);
      int k = kd(rng);
      std::vector<int> idx(static_cast<std::size_t>(p));
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<int> c(idx.begin(), idx.begin() + k);
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<int> d(idx.begin(), idx.begin() + k);
      std::sort(c.begin(), c.end());
      std::sort(d.begin(), d.end());
      auto r = inversion_lemma_check(a, b, c, d);
      if (r.has_value()) CHECK(*r);
    }
  }

  SECTION("stacked rows satisfy the interleaving hypothesis") {
    for (int p = 1; p <= 4; ++p)
      for (const Partition& gamma : partitions_of(6, -1, 2 * p)) {
        auto specs = h_gamma_rows(gamma, p);
        IntSequence a, b;
        for (int i = 0; i < p; ++i) {
          a.push_back(specs[static_cast<std::size_t>(i)].leading_index);
          b.push_back(specs[static_cast<std::size_t>(i + p)].leading_index);
        }
        CHECK_NOTHROW(inversion_lemma_check(a, b, {}, {}));
      }
  }
}

TEST_CASE("exploded determinants", "[jt]") {
  SECTION("height one is the ordinary identity") {
    for (int n = 0; n <= 6; ++n)
      for (const Partition& mu : partitions_of(n))
        CHECK(exploded_jt(mu, 1, std::max(1, mu.length())) ==
              SchurVector::basis(mu));
  }

  SECTION("the two-by-two instance") {
    CHECK(exploded_jt(Partition{1, 1}, 2, 2) ==
          SchurVector::basis(Partition{2, 1, 1}) +
              SchurVector::basis(Partition{1, 1, 1, 1}));
  }

  SECTION("two-row positivity") {
    for (int k = 1; k <= 3; ++k)
      for (int a = 1; a <= 5; ++a)
        for (int b = 0; b <= a && a + b <= 6; ++b) {
          std::vector<int> parts{a};
          if (b > 0) parts.push_back(b);
          SchurVector det = exploded_jt(Partition(parts), k, 2);
          INFO("a=" << a << " b=" << b << " k=" << k);
          CHECK(is_schur_positive(det));
          // conjugate route: omega of the rectangle-product difference
          SchurVector direct =
              multiply(SchurVector::basis(Partition::rectangle(k, a)),
                       SchurVector::basis(Partition::rectangle(k, b)));
          if (b >= 1)
            direct -=
                multiply(SchurVector::basis(Partition::rectangle(k, a + 1)),
                         SchurVector::basis(Partition::rectangle(k, b - 1)));
          CHECK(det == omega(direct));
        }
  }

  SECTION("pinned four-row non-positive instance") {
    SchurVector det = exploded_jt(Partition{2, 2, 2, 2}, 2, 4);
    CHECK_FALSE(is_schur_positive(det));
    CHECK(det.coefficient(Partition{4, 3, 3, 3, 3}) == -1);
  }

  CHECK(error_code_of([] { exploded_jt(Partition{1}, 0, 1); }) ==
        errc::bad_input);
  CHECK(error_code_of([] { exploded_jt(Partition{1, 1}, 2, 1); }) ==
        errc::bad_input);
}
