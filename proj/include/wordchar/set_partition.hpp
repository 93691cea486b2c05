#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wordchar/numbers.hpp"

namespace wordchar {

/// Canonical set partition of [m]. The representation is the restricted
/// growth string: element i (0-based) carries the id of its block, blocks
/// numbered 0,1,... in order of first appearance. Equality, ordering and
/// hashing all derive from that string, so equal partitions compare equal
/// bitwise. Immutable after construction.
class SetPartition {
public:
  /// Singleton partition {{1},{2},...,{m}}.
  static SetPartition singletons(int m);
  /// One-block partition {{1,...,m}}.
  static SetPartition whole(int m);
  /// From an arbitrary block-id labelling (renumbered canonically).
  static SetPartition from_labels(const std::vector<int>& labels);
  /// From explicit blocks over 1-based elements, e.g. {{1,3},{2}}.
  static SetPartition from_blocks(int m, const std::vector<std::vector<int>>& blocks);
  /// Parse the textual form "{{1,3},{2}}".
  static SetPartition parse(const std::string& text);

  int size() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return blocks_; }
  /// Block id of 0-based element i.
  int block_of(int i) const { return rgs_[static_cast<size_t>(i)]; }
  const std::vector<int>& rgs() const { return rgs_; }
  bool same_block(int i, int j) const { return rgs_[size_t(i)] == rgs_[size_t(j)]; }

  /// Blocks as sorted lists of sorted 1-based elements.
  std::vector<std::vector<int>> blocks() const;
  /// Textual form, bit-exact: "{{1,3},{2}}".
  std::string to_string() const;

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
  explicit SetPartition(std::vector<int> rgs);
  std::vector<int> rgs_;
  int blocks_ = 0;
};

// Refinement-lattice operations. All require equal sizes.
SetPartition meet(const SetPartition& p, const SetPartition& q);
SetPartition join(const SetPartition& p, const SetPartition& q);
bool leq(const SetPartition& p, const SetPartition& q);

/// Rota's closed form for the Mobius function of the refinement lattice.
/// Requires leq(p, q).
Int mobius(const SetPartition& p, const SetPartition& q);

/// Bell number (exact).
Int bell_number(int m);

/// Default enumeration budget: refuse to enumerate more than this many
/// partitions. Overridable per call; exceeding it throws BudgetError
/// rather than truncating.
inline constexpr long kDefaultEnumerationBudget = 10'000'000;

/// All partitions of [m] in lexicographic restricted-growth order.
std::vector<SetPartition> enumerate_partitions(int m, long budget = kDefaultEnumerationBudget);

/// Streaming form of the above; f is called once per partition.
void for_each_partition(int m, const std::function<void(const SetPartition&)>& f,
                        long budget = kDefaultEnumerationBudget);

/// Partitions of a rows x k grid (element (r-1)*k + c is row r, position c,
/// 1-based) with no singleton block and no block containing two elements of
/// the same row. For rows = 1 the result is empty.
std::vector<SetPartition> enumerate_star_partitions(int rows, int k,
                                                    long budget = kDefaultEnumerationBudget);

/// Partial matching between a top row [1..k] and a bottom row [k+1..2k];
/// as a set partition of [2k] every block has size <= 2 and never joins two
/// top or two bottom elements.
class PartialMatching {
public:
  PartialMatching(int k, std::vector<std::pair<int, int>> pairs);

  int k() const { return k_; }
  /// Pairs (top, bottom) with top in [1..k], bottom in [k+1..2k], sorted.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int del() const { return k_ - static_cast<int>(pairs_.size()); }
  /// Number of blocks as a partition of [2k]: 2k - |pairs|.
  int block_count() const { return 2 * k_ - static_cast<int>(pairs_.size()); }
  SetPartition as_partition() const;

  friend auto operator<=>(const PartialMatching&, const PartialMatching&) = default;

private:
  int k_;
  std::vector<std::pair<int, int>> pairs_;
};

/// All partial matchings of [1..k] x [k+1..2k]; count is
/// sum_m C(k,m)^2 m!. Deterministic order: by pair count, then
/// lexicographically by the pair list.
std::vector<PartialMatching> enumerate_submatchings(int k, long budget = kDefaultEnumerationBudget);

/// The pairing of [2k] induced by a permutation s of [k] (1-based images):
/// blocks {i, k + s^{-1}(i)}.
SetPartition permutation_pairing(const std::vector<int>& s);

/// All permutations t of [k] (as 1-based image vectors) whose induced
/// pairing coarsens m; there are (k - |pairs|)! of them.
std::vector<std::vector<int>> completions(const PartialMatching& m);

/// Partition-diagram multiplication on Part([2k]): merge the bottom row of
/// p with the top row of q, take connected components, and count the
/// components that lie entirely in the merged middle row as the exponent
/// gamma, so that p*q = n^gamma * result.
std::pair<SetPartition, int> multiply_diagrams(const SetPartition& p, const SetPartition& q);

}  // namespace wordchar
