#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordchar/contribution.hpp"

using namespace wordchar;

namespace {

ReducedWord commutator() { return preprocess_word(parse_word("abAB")).word; }

Polynomial n_falling(int m) { return falling_factorial(m); }

}  // namespace

TEST_CASE("chromatic polynomial closed forms") {
  CHECK(chromatic_polynomial(1, {}) == Polynomial({Rat(0), Rat(1)}));
  CHECK(chromatic_polynomial(2, {{0, 1}}) == n_falling(2));
  CHECK(chromatic_polynomial(3, {{0, 1}, {1, 2}, {0, 2}}) == n_falling(3));
  // parallel edges collapse; loops kill
  CHECK(chromatic_polynomial(2, {{0, 1}, {1, 0}}) == n_falling(2));
  CHECK(chromatic_polynomial(1, {{0, 0}}).is_zero());
  // 4-cycle: (n-1)^4 + (n-1)
  Polynomial nm1({Rat(-1), Rat(1)});
  CHECK(chromatic_polynomial(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}) ==
        nm1 * nm1 * nm1 * nm1 + nm1);
  // disconnected: product of components and isolated vertices
  CHECK(chromatic_polynomial(4, {{0, 1}}) ==
        n_falling(2) * Polynomial({Rat(0), Rat(1)}) * Polynomial({Rat(0), Rat(1)}));
  // Petersen-ish spot check: K4 via deletion-contraction path
  CHECK(chromatic_polynomial(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) ==
        n_falling(4));
}

TEST_CASE("slot layout matches the worked commutator wiring") {
  ReducedWord w = commutator();
  SlotLayout layout = make_slot_layout(w, 1);
  CHECK(layout.slot_count == 8);
  REQUIRE(layout.junctions.size() == 4);
  // letters: a (occ 0), b (occ 0), A (occ 1), B (occ 1)
  // junction 0: terminal of a^1 against initial of b^1
  CHECK(layout.junctions[0].top == std::vector<int>{layout.terminal_slot(0, 0, 0)});
  CHECK(layout.junctions[0].bottom == std::vector<int>{layout.initial_slot(1, 0, 0)});
  // junction 1: terminal of b^1 against terminal of a^2 (inverse letter)
  CHECK(layout.junctions[1].top == std::vector<int>{layout.terminal_slot(1, 0, 0)});
  CHECK(layout.junctions[1].bottom == std::vector<int>{layout.terminal_slot(0, 1, 0)});
  // junction 2: initial of a^2 against terminal of b^2
  CHECK(layout.junctions[2].top == std::vector<int>{layout.initial_slot(0, 1, 0)});
  CHECK(layout.junctions[2].bottom == std::vector<int>{layout.terminal_slot(1, 1, 0)});
  // junction 3: initial of b^2 against initial of a^1, closing the cycle
  CHECK(layout.junctions[3].top == std::vector<int>{layout.initial_slot(1, 1, 0)});
  CHECK(layout.junctions[3].bottom == std::vector<int>{layout.initial_slot(0, 0, 0)});
}

TEST_CASE("merged graph of the commutator at k = 1") {
  ReducedWord w = commutator();
  std::vector<SetPartition> pairing{SetPartition::whole(2), SetPartition::whole(2)};
  PartialMatching full(1, {{1, 2}});
  PartialMatching empty(1, {});

  // all junctions merged: one vertex class, two merged edges
  ContributionGraph g =
      build_contribution_graph(w, 1, pairing, pairing, {full, full, full, full});
  CHECK_FALSE(g.contradiction);
  CHECK(g.vertex_classes == 1);
  CHECK(g.edge_classes == 2);  // sum over generators of |sigma ^ tau|
  CHECK(g.euler_characteristic() <= 0);
  CHECK(g.del_total == 0);
  CHECK(count_assignments(g) == Polynomial({Rat(0), Rat(1)}));

  // three merges force the fourth junction into a contradiction
  ContributionGraph bad =
      build_contribution_graph(w, 1, pairing, pairing, {full, full, full, empty});
  CHECK(bad.contradiction);
  CHECK(count_assignments(bad).is_zero());

  // no merges: the four classes sit on a 4-cycle of conflicts
  ContributionGraph open_g =
      build_contribution_graph(w, 1, pairing, pairing, {empty, empty, empty, empty});
  CHECK_FALSE(open_g.contradiction);
  CHECK(open_g.vertex_classes == 4);
  CHECK(open_g.conflicts.size() == 4);
  CHECK(open_g.del_total == 4);
  Polynomial nm1({Rat(-1), Rat(1)});
  CHECK(count_assignments(open_g) == nm1 * nm1 * nm1 * nm1 + nm1);
}

TEST_CASE("euler data for the square word") {
  ReducedWord w = preprocess_word(parse_word("aa")).word;
  std::vector<SetPartition> pairing{SetPartition::whole(2)};
  PartialMatching full(1, {{1, 2}});
  PartialMatching empty(1, {});
  ContributionGraph g = build_contribution_graph(w, 1, pairing, pairing, {full, full});
  CHECK(g.vertex_classes == 1);
  CHECK(g.edge_classes == 1);
  ContributionGraph g2 = build_contribution_graph(w, 1, pairing, pairing, {empty, empty});
  CHECK(g2.vertex_classes == 2);
  CHECK(count_assignments(g2) == falling_factorial(2));
}
