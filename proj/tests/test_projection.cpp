#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordchar/projection.hpp"

using namespace wordchar;

namespace {
YoungDiagram yd(std::initializer_list<long> parts) { return YoungDiagram(std::vector<long>(parts)); }
}

TEST_CASE("projection coefficients for one box") {
  YoungDiagram box({1});
  PartialMatching full(1, {{1, 2}});
  PartialMatching empty(1, {});
  Polynomial n({Rat(0), Rat(1)});
  CHECK(proj_coeff(box, full) == RationalFunction(Polynomial({Rat(-1), Rat(1)}), n));
  CHECK(proj_coeff(box, empty) == RationalFunction(Polynomial(Rat(-1)), n));
}

TEST_CASE("projection coefficient order bound") {
  // vanishing at infinity to order at least del(pi), whenever nonzero
  for (long k = 1; k <= 3; ++k)
    for (const auto& lambda : diagrams_of_size(k))
      for (const auto& pi : enumerate_submatchings(static_cast<int>(k))) {
        auto c = proj_coeff(lambda, pi);
        if (!c.is_zero()) CHECK(c.degree_gap() >= pi.del());
      }
}

TEST_CASE("one-box projection is I - J/n") {
  const int n = 4;
  RatMatrix q = build_projection(yd({1}), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(q.at(i, j) == (i == j ? Rat(1) - Rat(1, n) : Rat(-1, n)));
}

TEST_CASE("projection identities at k = 2") {
  const int n = 6;
  for (const auto& lambda : diagrams_of_size(2)) {
    RatMatrix q = build_projection(lambda, n);
    CHECK(q * q == q);
    CHECK(q.symmetric());
    CHECK(q.trace() == Rat(dim(lambda)) * dim_stable(lambda).evaluate(Rat(n)));
  }
  CHECK(build_projection(yd({1, 1}), n).trace() == 10);
  CHECK_THROWS_AS(build_projection(yd({2}), 3), std::invalid_argument);  // n < 2k
}

TEST_CASE("matrix entries carry the coefficients") {
  // an entry whose index pair realizes exactly the coincidence pattern of a
  // matching equals that matching's coefficient
  const int n = 6;
  RatMatrix q = build_projection(yd({2}), n);
  PartialMatching id2(2, {{1, 3}, {2, 4}});
  // I = (0,1) in column 0*6+1, J = (0,1) in row 0*6+1: pattern is the
  // identity pairing
  CHECK(q.at(1, 1) == proj_coeff(yd({2}), id2).evaluate(Rat(n)));
  PartialMatching empty2(2, {});
  // I = (0,1), J = (2,3): no coincidences at all
  CHECK(q.at(2 * 6 + 3, 1) == proj_coeff(yd({2}), empty2).evaluate(Rat(n)));
}

TEST_CASE("bitrace equals the character recursion") {
  // one box: fix(g) - 1
  for (uint64_t t = 0; t < 10; ++t) {
    Permutation g = random_permutation(5, 11, t);
    CHECK(bitrace_character(yd({1}), g, 5) == Rat(g.fixed_points() - 1));
  }
  CHECK(bitrace_character(yd({2}), Permutation::identity(6), 6) == 9);
  for (const auto& lambda : diagrams_of_size(2))
    for (uint64_t t = 0; t < 6; ++t) {
      Permutation g = random_permutation(6, 13, t);
      CHECK(bitrace_character(lambda, g, 6) ==
            Rat(character(lambda.with_long_first_row(6), cycle_type(g))));
    }
}

TEST_CASE("xi isotypic checks") {
  CHECK(xi_projector_check(yd({1}), 3));
  CHECK(xi_projector_check(yd({2}), 5));
  CHECK(xi_projector_check(yd({1, 1}), 5));
}
