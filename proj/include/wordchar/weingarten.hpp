#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "wordchar/rational_function.hpp"
#include "wordchar/set_partition.hpp"

namespace wordchar {

/// delta_pi(I): 1 iff every pair related in pi carries equal entries of the
/// multi-index (implication only; unrelated entries may coincide).
int delta(const SetPartition& pi, const std::vector<int>& index);

/// Average over the full symmetric group on [n] of the product of
/// permutation-matrix entries prod_t [g(J_t) = I_t]. Exhaustive, 2 <= n <= 7.
Rat brute_force_integral(const std::vector<int>& I, const std::vector<int>& J, int n);

/// The symmetric-group Weingarten function as an exact rational function of
/// the symbol n:
///   Wg(sigma, tau) = sum over pi refining sigma ^ tau of
///                    mobius(pi, sigma) * mobius(pi, tau) / (n)_{|pi|}.
/// The reduced result always has deg(den) - deg(num) >= |sigma ^ tau|.
RationalFunction weingarten(const SetPartition& sigma, const SetPartition& tau,
                            long budget = kDefaultEnumerationBudget);

/// Shared memo for Weingarten values, keyed by the canonical restricted
/// growth strings of the (unordered) argument pair. Thread safe.
class WeingartenCache {
public:
  const RationalFunction& get(const SetPartition& sigma, const SetPartition& tau,
                              long budget = kDefaultEnumerationBudget);
  size_t size() const;

private:
  mutable std::mutex mu_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, RationalFunction> memo_;
};

/// All refinements of p (every partition <= p), by refining each block
/// independently.
std::vector<SetPartition> enumerate_refinements(const SetPartition& p,
                                                long budget = kDefaultEnumerationBudget);

}  // namespace wordchar
