#include <catch2/catch_amalgamated.hpp>

#include "schurpos/generate.hpp"
#include "schurpos/partition.hpp"
#include "test_util.hpp"

using namespace schurpos;
using testutil::error_code_of;

TEST_CASE("conjugate", "[partition]") {
  CHECK(conjugate(Partition{6, 4, 1, 1}) == Partition{4, 2, 2, 2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  for (const Partition& p : partitions_up_to(10)) {
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).sum() == p.sum());
  }
}

TEST_CASE("union and sum of parts", "[partition]") {
  CHECK(part_union(Partition{5, 4, 4, 4}, Partition{5, 2, 1, 1}) ==
        Partition{5, 5, 4, 4, 4, 2, 1, 1});
  CHECK(part_union(Partition{2}, Partition{2}) == Partition{2, 2});
  CHECK(part_sum(Partition{3, 1}, Partition{2, 2}) == Partition{5, 3});
  CHECK(part_sum(Partition{2, 1}, Partition{1}) == Partition{3, 1});
  for (const Partition& p : partitions_up_to(6)) {
    CHECK(part_union(p, Partition{}) == p);
    CHECK(part_sum(p, Partition{}) == p);
    for (const Partition& q : partitions_up_to(5)) {
      CHECK(part_union(p, q).sum() == p.sum() + q.sum());
      CHECK(part_sum(p, q).sum() == p.sum() + q.sum());
    }
  }
}

TEST_CASE("dominance order", "[partition]") {
  CHECK(dominance_leq(Partition{1, 1}, Partition{2}));
  CHECK_FALSE(dominance_leq(Partition{2}, Partition{1, 1}));
  // incomparable pair
  CHECK_FALSE(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK_FALSE(dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
  CHECK(error_code_of([] {
          dominance_leq(Partition{2}, Partition{1});
        }) == errc::sum_mismatch);

  SECTION("partial order axioms, every rank up to 10") {
    for (int n = 0; n <= 10; ++n) {
      auto ps = partitions_of(n);
      for (const auto& p : ps) CHECK(dominance_leq(p, p));
      for (const auto& p : ps)
        for (const auto& q : ps) {
          if (dominance_leq(p, q) && dominance_leq(q, p)) CHECK(p == q);
          for (const auto& r : ps)
            if (dominance_leq(p, q) && dominance_leq(q, r))
              CHECK(dominance_leq(p, r));
        }
    }
  }

  SECTION("conjugation is an anti-isomorphism") {
    for (int n = 0; n <= 9; ++n) {
      auto ps = partitions_of(n);
      for (const auto& p : ps)
        for (const auto& q : ps)
          CHECK(dominance_leq(p, q) == dominance_leq(conjugate(q), conjugate(p)));
    }
  }

  SECTION("weakly decreasing integer sequences") {
    CHECK(dominance_leq(IntSequence{2, 2, 2}, IntSequence{4, 2, 0}));
    CHECK(dominance_leq(IntSequence{1, 0, -1}, IntSequence{2, 0, -2}));
    CHECK(error_code_of([] {
            dominance_leq(IntSequence{1, 2}, IntSequence{2, 1});
          }) == errc::bad_input);
    CHECK(error_code_of([] {
            dominance_leq(IntSequence{2, 1}, IntSequence{2, 0});
          }) == errc::sum_mismatch);
  }
}

TEST_CASE("containment", "[partition]") {
  CHECK(pair_contains({Partition{1}, Partition{}},
                      {Partition{2, 1}, Partition{2, 1}}));
  CHECK_FALSE(pair_contains({Partition{2}, Partition{1}},
                            {Partition{1}, Partition{2}}));
  CHECK(pair_contains({Partition{2, 1}, Partition{}},
                      {Partition{3, 2}, Partition{1}}));
}

TEST_CASE("row and column lengths", "[partition]") {
  SkewShape s = parse_skew("4,4,2,1/2,1");
  CHECK(row_lengths(s) == Partition{3, 2, 2, 1});
  CHECK(col_lengths(s) == Partition{2, 2, 2, 2});
  Partition mu{3, 2};
  CHECK(row_lengths(SkewShape(mu, mu)) == Partition{});
  for (const SkewShape& t : skew_shapes_outer_up_to(8)) {
    CHECK(row_lengths(t).sum() == t.size());
    CHECK(col_lengths(t).sum() == t.size());
  }
}

TEST_CASE("sequence helpers", "[partition]") {
  CHECK(sorted_desc({1, 3, 2}) == IntSequence{3, 2, 1});
  CHECK(sorted_desc({-1, 2, -1}) == IntSequence{2, -1, -1});
  CHECK(sorted_desc({3, 2, 1}) == IntSequence{3, 2, 1});
  CHECK(inversions({3, 2, 1}) == 3);
  CHECK(inversions({1, 2, 3}) == 0);
  CHECK(inversions({2, 1, 2}) == 1);
}

TEST_CASE("add_to_first", "[partition]") {
  CHECK(add_to_first(Partition{5, 3, 2, 2, 1}) == Partition{6, 3, 2, 2, 1});
  CHECK(add_to_first(Partition{}) == Partition{1});
  CHECK(add_to_first(Partition{1}) == Partition{2});
}

TEST_CASE("shape classification", "[partition]") {
  auto c = classify_shape(Partition{3, 3, 1});
  CHECK(c.fat_hook);
  CHECK(c.near_rectangle);
  CHECK_FALSE(c.rectangle);

  c = classify_shape(Partition{4, 1, 1});
  CHECK(c.hook);

  c = classify_shape(Partition{3, 3, 3});
  CHECK(c.rectangle);
  CHECK(c.is_line_rectangle(3));
  CHECK_FALSE(c.is_line_rectangle(2));

  // the four near-rectangle pictures: removing one row or column leaves a
  // rectangle
  for (const Partition& p :
       {Partition{5, 5, 3}, Partition{5, 3, 3}, Partition{3, 3, 3, 2, 2},
        Partition{3, 3, 3, 1, 1}})
    CHECK(classify_shape(p).near_rectangle);
  CHECK_FALSE(classify_shape(Partition{4, 4, 2, 2}).near_rectangle);

  CHECK(error_code_of([] { classify_shape(Partition{}); }) ==
        errc::empty_partition);
}

TEST_CASE("strip kinds", "[partition]") {
  auto k = strip_kind(parse_skew("2,2/1"));
  CHECK(k.ribbon);
  CHECK(k.weak_ribbon);
  CHECK_FALSE(k.horizontal_strip);
  CHECK_FALSE(k.vertical_strip);

  k = strip_kind(parse_skew("2,1/1"));
  CHECK(k.horizontal_strip);
  CHECK(k.vertical_strip);
  CHECK(k.weak_ribbon);
  CHECK_FALSE(k.ribbon);  // corner contact only

  k = strip_kind(parse_skew("4,4/2,2"));
  CHECK_FALSE(k.weak_ribbon);
  CHECK_FALSE(k.ribbon);

  CHECK(strip_kind(parse_skew("2,1/1")).skewed_hook);
  CHECK_FALSE(strip_kind(parse_skew("2,2/1")).skewed_hook);

  SECTION("implications over small shapes") {
    for (const SkewShape& s : skew_shapes_outer_up_to(8)) {
      auto sk = strip_kind(s);
      if (sk.ribbon) CHECK(sk.weak_ribbon);
      if (sk.horizontal_strip && sk.vertical_strip) CHECK(sk.weak_ribbon);
    }
  }
}

TEST_CASE("minimal pair descriptions", "[partition]") {
  CHECK(is_minimal_pair(parse_skew("2,1/1")));
  CHECK_FALSE(is_minimal_pair(parse_skew("3,2/2,1")));
  CHECK(is_minimal_pair(parse_skew("3,2")));
  CHECK(is_minimal_pair(SkewShape{}));
}

TEST_CASE("text formats", "[partition]") {
  CHECK(to_string(Partition{5, 3, 2, 2, 1}) == "5,3,2,2,1");
  CHECK(parse_partition("5,3,2,2,1") == Partition{5, 3, 2, 2, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("12,10,2") == Partition{12, 10, 2});
  CHECK(to_string(parse_skew("4,4,2,1/2,1")) == "4,4,2,1/2,1");
  CHECK(parse_skew("3,2") == SkewShape(Partition{3, 2}, Partition{}));
  CHECK(error_code_of([] { parse_partition("2,3"); }) == errc::bad_input);
  CHECK(error_code_of([] { parse_partition("a"); }) == errc::bad_input);
  CHECK(error_code_of([] { parse_partition("3,-1"); }) == errc::bad_input);
  CHECK(error_code_of([] { parse_skew("1/2"); }) == errc::bad_input);
  for (const Partition& p : partitions_up_to(8))
    CHECK(parse_partition(to_string(p)) == p);
}

TEST_CASE("partition validation", "[partition]") {
  CHECK(Partition(std::vector<int>{3, 2, 0, 0}) == Partition{3, 2});
  CHECK(error_code_of([] { Partition{1, 2}; }) == errc::bad_input);
  CHECK(error_code_of([] {
          Partition(std::vector<int>(65, 1));
        }) == errc::bound_exceeded);
}

TEST_CASE("skew shapes are description pairs", "[partition]") {
  CHECK(parse_skew("2,1/1") != parse_skew("3,2/2"));  // same cells, different value
  CHECK(error_code_of([] { parse_skew("2,2/3"); }) == errc::bad_input);
}

TEST_CASE("generators", "[partition]") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_up_to(3).size() == 1 + 1 + 2 + 3);
  CHECK(sub_partitions(Partition{2, 1}).size() == 5);
  CHECK(dealings(Partition{1, 1}).size() == 2);
  CHECK(dealings(Partition{5, 3, 2, 2, 1}).size() == 12);
  CHECK(minimal_skew_shapes(1).size() == 1);
  // size-two minimal descriptions: a row, a column, and the broken diagonal
  auto m2 = minimal_skew_shapes(2);
  CHECK(m2.size() == 3);
}
