#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "wordchar/set_partition.hpp"

using namespace wordchar;

TEST_CASE("restricted growth canonical form") {
  auto p = SetPartition::from_blocks(3, {{1, 3}, {2}});
  CHECK(p.to_string() == "{{1,3},{2}}");
  CHECK(p.block_count() == 2);
  CHECK(p.same_block(0, 2));
  CHECK_FALSE(p.same_block(0, 1));
  CHECK(p == SetPartition::parse("{{1,3},{2}}"));
  CHECK(p == SetPartition::from_labels({7, 2, 7}));
  CHECK(SetPartition::parse(p.to_string()) == p);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::parse("{{1,2}"), std::invalid_argument);
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(4).size() == 15);
  long bells[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int m = 1; m <= 8; ++m) {
    CHECK(bell_number(m) == bells[m - 1]);
    CHECK(enumerate_partitions(m).size() == static_cast<size_t>(bells[m - 1]));
  }
  auto all = enumerate_partitions(4);
  CHECK(all.front() == SetPartition::whole(4));
  CHECK(all.back() == SetPartition::singletons(4));
  // lexicographic restricted-growth order, no duplicates
  for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].rgs() < all[i].rgs());
}

TEST_CASE("enumeration budget is a hard error") {
  CHECK_THROWS_AS(enumerate_partitions(13), BudgetError);
  CHECK_THROWS_AS(enumerate_partitions(5, 10), BudgetError);
  CHECK_NOTHROW(enumerate_partitions(5, 52));
}

TEST_CASE("meet join leq examples") {
  auto p12 = SetPartition::parse("{{1,2},{3}}");
  auto p13 = SetPartition::parse("{{1,3},{2}}");
  auto p23 = SetPartition::parse("{{2,3},{1}}");
  auto bottom = SetPartition::singletons(3);
  auto top = SetPartition::whole(3);
  CHECK(meet(p12, p12) == p12);
  CHECK(meet(p12, p13) == bottom);
  CHECK(meet(top, p12) == p12);
  CHECK(join(p12, p23) == top);
  CHECK(leq(bottom, p13));
  CHECK(leq(bottom, top));
  CHECK_FALSE(leq(p12, p13));
  CHECK_THROWS_AS(meet(p12, SetPartition::singletons(4)), std::invalid_argument);
}

TEST_CASE("lattice laws on Part([4])") {
  auto all = enumerate_partitions(4);
  for (const auto& p : all)
    for (const auto& q : all) {
      CHECK(meet(p, q) == meet(q, p));
      CHECK(join(p, q) == join(q, p));
      CHECK(meet(p, p) == p);
      CHECK(join(p, p) == p);
      CHECK(meet(p, join(p, q)) == p);   // absorption
      CHECK(join(p, meet(p, q)) == p);
      CHECK(leq(p, q) == (meet(p, q) == p));
      for (const auto& r : all) {
        CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
        CHECK(join(join(p, q), r) == join(p, join(q, r)));
      }
    }
}

TEST_CASE("mobius closed form") {
  auto s3 = SetPartition::singletons(3);
  CHECK(mobius(s3, s3) == 1);
  CHECK(mobius(s3, SetPartition::whole(3)) == 2);
  CHECK(mobius(SetPartition::singletons(2), SetPartition::whole(2)) == -1);
  CHECK_THROWS_AS(mobius(SetPartition::whole(2), SetPartition::singletons(2)),
                  std::invalid_argument);
}

TEST_CASE("mobius agrees with the recursive definition up to size 5") {
  for (int m = 1; m <= 5; ++m) {
    auto all = enumerate_partitions(m);
    for (const auto& p : all)
      for (const auto& q : all) {
        if (!leq(p, q)) continue;
        Int total = 0;
        for (const auto& r : all)
          if (leq(p, r) && leq(r, q)) total += mobius(p, r);
        CHECK(total == (p == q ? 1 : 0));
      }
  }
}

TEST_CASE("star partitions") {
  CHECK(enumerate_star_partitions(2, 1) ==
        std::vector<SetPartition>{SetPartition::whole(2)});
  CHECK(enumerate_star_partitions(2, 2).size() == 2);
  CHECK(enumerate_star_partitions(3, 1) ==
        std::vector<SetPartition>{SetPartition::whole(3)});
  CHECK(enumerate_star_partitions(1, 3).empty());

  // Exactly the filter of the full enumeration by the two predicates.
  for (auto [rows, k] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    auto star = enumerate_star_partitions(rows, k);
    std::set<SetPartition> got(star.begin(), star.end());
    CHECK(got.size() == star.size());
    std::set<SetPartition> expect;
    for (const auto& p : enumerate_partitions(rows * k)) {
      bool ok = true;
      std::vector<int> bsize(static_cast<size_t>(p.block_count()), 0);
      for (int i = 0; i < p.size(); ++i) ++bsize[static_cast<size_t>(p.block_of(i))];
      for (int s : bsize) ok = ok && s >= 2;
      for (int i = 0; i < p.size() && ok; ++i)
        for (int j = i + 1; j < p.size() && ok; ++j)
          if (i / k == j / k && p.same_block(i, j)) ok = false;
      if (ok) expect.insert(p);
    }
    CHECK(got == expect);
  }
}

TEST_CASE("submatchings") {
  CHECK(enumerate_submatchings(1).size() == 2);
  CHECK(enumerate_submatchings(2).size() == 7);
  CHECK(enumerate_submatchings(3).size() == 34);

  // del and block count
  for (const auto& m : enumerate_submatchings(3)) {
    CHECK(m.del() == 3 - static_cast<int>(m.pairs().size()));
    CHECK(m.as_partition().block_count() == m.block_count());
  }

  // As partitions: exactly those lying below some permutation pairing.
  for (int k = 1; k <= 3; ++k) {
    std::set<SetPartition> got;
    for (const auto& m : enumerate_submatchings(k)) got.insert(m.as_partition());
    CHECK(got.size() == enumerate_submatchings(k).size());
    std::set<SetPartition> expect;
    std::vector<int> perm(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i + 1;
    std::vector<SetPartition> pairings;
    do {
      pairings.push_back(permutation_pairing(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& p : enumerate_partitions(2 * k))
      for (const auto& pr : pairings)
        if (leq(p, pr)) { expect.insert(p); break; }
    CHECK(got == expect);
  }
}

TEST_CASE("completions") {
  PartialMatching full2(2, {{1, 3}, {2, 4}});
  auto c = completions(full2);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == std::vector<int>{1, 2});

  PartialMatching empty2(2, {});
  CHECK(completions(empty2).size() == 2);

  PartialMatching one3(3, {{1, 4}});
  CHECK(completions(one3).size() == 2);

  // Every completion's pairing really coarsens the matching.
  for (const auto& m : enumerate_submatchings(3)) {
    auto cs = completions(m);
    CHECK(cs.size() == static_cast<size_t>(mpz_get_si(factorial(m.del()).get_mpz_t())));
    for (const auto& tau : cs) CHECK(leq(m.as_partition(), permutation_pairing(tau)));
  }
}

TEST_CASE("diagram multiplication") {
  // identity of the algebra
  auto id2 = permutation_pairing({1, 2});
  auto [r, g] = multiply_diagrams(id2, id2);
  CHECK(r == id2);
  CHECK(g == 0);

  // isolated middle component
  auto s = SetPartition::singletons(2);
  auto [r2, g2] = multiply_diagrams(s, s);
  CHECK(r2 == s);
  CHECK(g2 == 1);

  // the embedding is multiplicative: pairing(s)*pairing(t) = pairing(s o t)
  std::vector<std::vector<int>> perms3 = {{1, 2, 3}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& a : perms3)
    for (const auto& b : perms3) {
      std::vector<int> comp(3);
      for (int i = 0; i < 3; ++i) comp[size_t(i)] = a[size_t(b[size_t(i)] - 1)];
      auto [prod, gamma] = multiply_diagrams(permutation_pairing(a), permutation_pairing(b));
      CHECK(gamma == 0);
      CHECK(prod == permutation_pairing(comp));
    }
}

TEST_CASE("diagram multiplication is associative with gamma addition") {
  auto all = enumerate_partitions(4);  // k = 2
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        auto [ab, g1] = multiply_diagrams(a, b);
        auto [ab_c, g2] = multiply_diagrams(ab, c);
        auto [bc, h1] = multiply_diagrams(b, c);
        auto [a_bc, h2] = multiply_diagrams(a, bc);
        CHECK(ab_c == a_bc);
        CHECK(g1 + g2 == h1 + h2);
      }
}
