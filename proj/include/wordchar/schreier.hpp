#pragma once

#include <vector>

#include "wordchar/permutation.hpp"
#include "wordchar/tuple_space.hpp"

namespace wordchar {

/// The 2r-regular Schreier graph of r permutations acting pointwise on
/// k-tuples of distinct elements, held as an implicit adjacency operator:
/// generator images are precomputed rank-indexed arrays, so a matvec is two
/// gathers per generator. Loops and multiplicities are kept, so every row
/// sum is exactly 2r.
class SchreierOperator {
public:
  SchreierOperator(int n, int k, const std::vector<Permutation>& generators,
                   int64_t memory_budget_entries = 200'000'000);

  int64_t size() const { return space_.size(); }
  int r() const { return static_cast<int>(forward_.size()); }
  const TupleSpace& space() const { return space_; }

  /// y = A x with A = sum_i (P_i + P_i^{-1}).
  void apply(const std::vector<double>& x, std::vector<double>& y) const;

  /// Neighbor list of one vertex (2r entries, with multiplicity).
  std::vector<int64_t> neighbors(int64_t v) const;

  bool connected() const;
  int component_count() const;
  /// True when the graph is 2-colorable (no odd closed walk); loops or odd
  /// cycles make it false.
  bool bipartite(std::vector<int8_t>* coloring = nullptr) const;

private:
  TupleSpace space_;
  std::vector<std::vector<int64_t>> forward_;   // per generator
  std::vector<std::vector<int64_t>> backward_;
};

}  // namespace wordchar
