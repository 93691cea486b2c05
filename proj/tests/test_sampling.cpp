#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wordchar/engine.hpp"
#include "wordchar/sampling.hpp"

using namespace wordchar;

TEST_CASE("permutation basics") {
  Permutation p({1, 2, 0});
  CHECK(p.inverse() == Permutation({2, 0, 1}));
  CHECK((p * p.inverse()) == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK(cycle_type(Permutation::identity(4)) == CycleType({1, 1, 1, 1}));
  CHECK(cycle_type(Permutation({1, 2, 3, 0})) == CycleType({4}));
  CHECK(cycle_type(Permutation({1, 0, 2, 3})) == CycleType({2, 1, 1}));
}

TEST_CASE("random permutations are deterministic per (seed, position)") {
  CHECK(random_permutation(1, 5, 0) == Permutation::identity(1));
  for (uint64_t pos = 0; pos < 5; ++pos)
    CHECK(random_permutation(20, 9, pos) == random_permutation(20, 9, pos));
  CHECK(random_permutation(20, 9, 0) != random_permutation(20, 9, 1));
  CHECK(random_permutation(20, 8, 0) != random_permutation(20, 9, 0));
}

TEST_CASE("fixed point count averages to one") {
  const int n = 10;
  double total = 0;
  const long draws = 100000;
  for (long s = 0; s < draws; ++s)
    total += random_permutation(n, 31337, static_cast<uint64_t>(s)).fixed_points();
  CHECK(std::abs(total / draws - 1.0) < 0.02);
}

TEST_CASE("word evaluation") {
  auto w = preprocess_word(parse_word("a")).word;
  Permutation g = random_permutation(6, 1, 0);
  CHECK(evaluate_word(w, {g}) == g);

  // commutator of disjoint transpositions is the identity
  Permutation t1({1, 0, 2, 3});
  Permutation t2({0, 1, 3, 2});
  auto commutator = preprocess_word(parse_word("abAB")).word;
  CHECK(evaluate_word(commutator, {t1, t2}) == Permutation::identity(4));

  // free reduction does not change the image
  for (uint64_t s = 0; s < 100; ++s) {
    Permutation a = random_permutation(7, 42, 2 * s);
    Permutation b = random_permutation(7, 42, 2 * s + 1);
    CHECK(evaluate_letters(parse_word("abBabA"), {a, b}) ==
          evaluate_letters(parse_word("aabA"), {a, b}));
  }
}

TEST_CASE("exhaustive oracle") {
  auto commutator = preprocess_word(parse_word("abAB")).word;
  CHECK(exhaustive_expected_character(commutator, YoungDiagram({1}), 4) == Rat(1, 3));
  CHECK(exhaustive_expected_character(commutator, YoungDiagram({2}), 5) == Rat(1, 5));
  auto square = preprocess_word(parse_word("aa")).word;
  CHECK(exhaustive_expected_character(square, YoungDiagram({1}), 4) == 1);
  // uniform law: a single generator integrates every nontrivial character
  // to zero
  auto single = preprocess_word(parse_word("a")).word;
  CHECK(exhaustive_expected_character(single, YoungDiagram({1}), 5) == 0);
  CHECK_THROWS_AS(exhaustive_expected_character(commutator, YoungDiagram({1}), 8),
                  std::domain_error);
}

TEST_CASE("monte carlo hits exact values within four sigma") {
  auto square = preprocess_word(parse_word("aa")).word;
  McReport r = mc_expected_character(square, YoungDiagram({1}), 30, 20000, 7);
  CHECK(std::abs(r.mean - 1.0) <= 4 * r.stderr_);

  auto single = preprocess_word(parse_word("a")).word;
  McReport r2 = mc_expected_character(single, YoungDiagram({1}), 25, 20000, 8);
  CHECK(std::abs(r2.mean) <= 4 * r2.stderr_);

  auto commutator = preprocess_word(parse_word("abAB")).word;
  McReport r3 = mc_expected_character(commutator, YoungDiagram({1}), 20, 40000, 9);
  CHECK(std::abs(r3.mean - 1.0 / 19.0) <= 4 * r3.stderr_);
}

TEST_CASE("monte carlo agrees with the engine far beyond the exhaustive range") {
  auto four = preprocess_word(parse_word("aabb")).word;
  McReport r = mc_expected_character(four, YoungDiagram({1}), 40, 60000, 51);
  CHECK(std::abs(r.mean - 1.0 / 39.0) <= 4 * r.stderr_);

  auto twisted = preprocess_word(parse_word("abaB")).word;
  McReport r2 = mc_expected_character(twisted, YoungDiagram({2}), 30, 60000, 52);
  CHECK(std::abs(r2.mean - 2.0 / 810.0) <= 4 * r2.stderr_);
}

TEST_CASE("standard error halves when samples quadruple") {
  auto commutator = preprocess_word(parse_word("abAB")).word;
  double ratio_total = 0;
  const int trials = 5;
  for (int t = 0; t < trials; ++t) {
    McReport small = mc_expected_character(commutator, YoungDiagram({1}), 12, 4000,
                                           static_cast<uint64_t>(100 + t));
    McReport big = mc_expected_character(commutator, YoungDiagram({1}), 12, 16000,
                                         static_cast<uint64_t>(200 + t));
    ratio_total += big.stderr_ / small.stderr_;
  }
  double mean_ratio = ratio_total / trials;  // ideal: 1/2
  CHECK(mean_ratio > 0.4);
  CHECK(mean_ratio < 0.6);
}

TEST_CASE("mc rejects undersized n") {
  auto w = preprocess_word(parse_word("aa")).word;
  CHECK_THROWS_AS(mc_expected_character(w, YoungDiagram({2}), 3, 10, 1),
                  std::invalid_argument);
}
