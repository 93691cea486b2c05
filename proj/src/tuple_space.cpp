#include "wordchar/tuple_space.hpp"

#include <stdexcept>

namespace wordchar {

TupleSpace::TupleSpace(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k > n) throw std::invalid_argument("TupleSpace: need 1 <= k <= n");
  size_ = 1;
  for (int i = 0; i < k; ++i) {
    size_ *= n - i;
    if (size_ < 0) throw std::overflow_error("TupleSpace: size overflow");
  }
}

int64_t TupleSpace::rank(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != k_) throw std::invalid_argument("rank: wrong arity");
  int64_t r = 0;
  for (int i = 0; i < k_; ++i) {
    int t = tuple[static_cast<size_t>(i)];
    if (t < 0 || t >= n_) throw std::invalid_argument("rank: entry out of range");
    int digit = t;
    for (int j = 0; j < i; ++j) {
      int prev = tuple[static_cast<size_t>(j)];
      if (prev == t) throw std::invalid_argument("rank: entries must be distinct");
      if (prev < t) --digit;
    }
    r = r * (n_ - i) + digit;
  }
  return r;
}

std::vector<int> TupleSpace::unrank(int64_t index) const {
  if (index < 0 || index >= size_) throw std::out_of_range("unrank: index out of range");
  std::vector<int> digits(static_cast<size_t>(k_));
  for (int i = k_ - 1; i >= 0; --i) {
    digits[static_cast<size_t>(i)] = static_cast<int>(index % (n_ - i));
    index /= n_ - i;
  }
  std::vector<int> tuple(static_cast<size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    // digit = value's position among the not-yet-used elements
    int d = digits[static_cast<size_t>(i)];
    int v = d;
    while (true) {
      int bumps = 0;
      for (int j = 0; j < i; ++j)
        if (tuple[static_cast<size_t>(j)] <= v) ++bumps;
      int nv = d + bumps;
      if (nv == v) break;
      v = nv;
    }
    tuple[static_cast<size_t>(i)] = v;
  }
  return tuple;
}

}  // namespace wordchar
