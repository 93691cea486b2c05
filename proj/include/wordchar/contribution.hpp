#pragma once

#include <vector>

#include "wordchar/polynomial.hpp"
#include "wordchar/set_partition.hpp"
#include "wordchar/word.hpp"

namespace wordchar {

/// Slot bookkeeping for the merged-graph construction. Every generator
/// occurrence owns two multi-indices of k slots each: the terminal block
/// (where the generator's edge arrives) and the initial block (where it
/// leaves). Junction t couples letter t with letter t+1 (cyclically): its
/// top half is letter t's unconjugated block (terminal for a positive
/// letter, initial for a negative one) and its bottom half is letter t+1's
/// other block.
struct SlotLayout {
  int k = 0;
  int length = 0;
  int slot_count = 0;
  std::vector<int> occurrence_base;  // first slot of each generator's range

  int terminal_slot(int f, int z, int i) const;  // I block
  int initial_slot(int f, int z, int i) const;   // J block

  struct Junction {
    std::vector<int> top;     // k slots
    std::vector<int> bottom;  // k slots
  };
  std::vector<Junction> junctions;  // one per letter
};

SlotLayout make_slot_layout(const ReducedWord& w, int k);

/// The merged graph for one choice of equality partitions. Equality edges
/// come from sigma (initial blocks), tau (terminal blocks) and the matched
/// pairs of each junction; vertex classes are the connected components.
/// Each junction's unmatched slot pairs must take distinct values, which
/// projects to inequality edges between classes; a forced equality between
/// two such classes is a contradiction and kills the term.
struct ContributionGraph {
  int k = 0;
  int word_length = 0;
  int vertex_classes = 0;  // |V| of the merged graph
  int edge_classes = 0;    // |E|: sum over generators of |sigma ^ tau|
  int del_total = 0;       // sum of del(pi_t)
  bool contradiction = false;
  /// Inequality constraints between distinct vertex classes, deduplicated,
  /// each pair with first < second.
  std::vector<std::pair<int, int>> conflicts;
  /// Class id of every slot (layout as in SlotLayout).
  std::vector<int> slot_class;

  int euler_characteristic() const { return vertex_classes - edge_classes; }
};

/// sigma[f], tau[f] partition [occurrences(f) * k] (element (z)*k + i is
/// occurrence z+1, position i+1); junctions[t] couples letters t and t+1.
ContributionGraph build_contribution_graph(const ReducedWord& w, int k,
                                           const std::vector<SetPartition>& sigma,
                                           const std::vector<SetPartition>& tau,
                                           const std::vector<PartialMatching>& junctions);

/// Number of assignments of values from [n] to the vertex classes that
/// respect every inequality constraint, as a polynomial in n: the proper
/// coloring counting polynomial of the conflict graph, by deletion and
/// contraction. Zero polynomial when the graph is contradictory.
Polynomial count_assignments(const ContributionGraph& g);

/// Chromatic polynomial of an explicit graph (any loop makes it zero).
Polynomial chromatic_polynomial(int vertices, std::vector<std::pair<int, int>> edges);

}  // namespace wordchar
