#pragma once

#include <cstdint>
#include <vector>

namespace wordchar {

/// The set of k-tuples of distinct elements of [n], with a lexicographic
/// rank/unrank bijection onto [0, n(n-1)...(n-k+1)). Tuples use 0-based
/// entries; the rank is the mixed-radix value of the reduced digits (entry
/// minus the number of smaller entries already used).
class TupleSpace {
public:
  TupleSpace(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int64_t size() const { return size_; }

  int64_t rank(const std::vector<int>& tuple) const;
  std::vector<int> unrank(int64_t index) const;

private:
  int n_;
  int k_;
  int64_t size_;
};

}  // namespace wordchar
