#include "wordchar/weingarten.hpp"

#include <algorithm>
#include <numeric>

namespace wordchar {

int delta(const SetPartition& pi, const std::vector<int>& index) {
  if (pi.size() != static_cast<int>(index.size()))
    throw std::invalid_argument("delta: length mismatch");
  std::vector<int> rep(static_cast<size_t>(pi.block_count()), -1);
  for (int i = 0; i < pi.size(); ++i) {
    int& r = rep[static_cast<size_t>(pi.block_of(i))];
    if (r == -1) r = index[static_cast<size_t>(i)];
    else if (r != index[static_cast<size_t>(i)]) return 0;
  }
  return 1;
}

Rat brute_force_integral(const std::vector<int>& I, const std::vector<int>& J, int n) {
  if (n < 2 || n > 7) throw std::domain_error("brute_force_integral: n out of oracle range");
  if (I.size() != J.size()) throw std::invalid_argument("brute_force_integral: length mismatch");
  for (size_t t = 0; t < I.size(); ++t)
    if (I[t] < 1 || I[t] > n || J[t] < 1 || J[t] > n)
      throw std::invalid_argument("brute_force_integral: index out of range");
  std::vector<int> g(static_cast<size_t>(n));
  std::iota(g.begin(), g.end(), 1);
  long hits = 0;
  do {
    bool ok = true;
    for (size_t t = 0; t < I.size() && ok; ++t)
      ok = g[static_cast<size_t>(J[t] - 1)] == I[t];
    if (ok) ++hits;
  } while (std::next_permutation(g.begin(), g.end()));
  return Rat(hits) / Rat(factorial(n));
}

std::vector<SetPartition> enumerate_refinements(const SetPartition& p, long budget) {
  auto blocks = p.blocks();
  Int count = 1;
  for (const auto& b : blocks) count *= bell_number(static_cast<int>(b.size()));
  if (count > budget) throw BudgetError("enumerate_refinements: budget exceeded");

  // Partitions of each block, combined by cartesian product.
  std::vector<std::vector<SetPartition>> per_block;
  per_block.reserve(blocks.size());
  for (const auto& b : blocks)
    per_block.push_back(enumerate_partitions(static_cast<int>(b.size()), budget));

  std::vector<SetPartition> out;
  std::vector<size_t> odo(blocks.size(), 0);
  std::vector<int> labels(static_cast<size_t>(p.size()));
  while (true) {
    int next_id = 0;
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& sub = per_block[bi][odo[bi]];
      for (size_t j = 0; j < blocks[bi].size(); ++j)
        labels[static_cast<size_t>(blocks[bi][j] - 1)] =
            next_id + sub.block_of(static_cast<int>(j));
      next_id += sub.block_count();
    }
    out.push_back(SetPartition::from_labels(labels));
    size_t i = 0;
    while (i < odo.size() && ++odo[i] == per_block[i].size()) odo[i++] = 0;
    if (i == odo.size()) break;
  }
  return out;
}

RationalFunction weingarten(const SetPartition& sigma, const SetPartition& tau, long budget) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("weingarten: size mismatch");
  const int m = sigma.size();
  SetPartition mt = meet(sigma, tau);
  // Accumulate over the common denominator (n)_m: each term contributes
  // mobius * mobius * (n - |pi|)(n - |pi| - 1)...(n - m + 1).
  Polynomial numerator;
  for (const auto& pi : enumerate_refinements(mt, budget)) {
    Rat mm = Rat(mobius(pi, sigma) * mobius(pi, tau));
    Polynomial lift(Rat(1));
    for (int c = pi.block_count(); c < m; ++c) lift *= Polynomial({Rat(-c), Rat(1)});
    numerator += lift.scaled(mm);
  }
  return RationalFunction(numerator, falling_factorial(m));
}

const RationalFunction& WeingartenCache::get(const SetPartition& sigma,
                                             const SetPartition& tau, long budget) {
  auto key = std::make_pair(sigma.rgs(), tau.rgs());
  if (key.second < key.first) std::swap(key.first, key.second);  // symmetric
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  RationalFunction value = weingarten(sigma, tau, budget);
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

size_t WeingartenCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

}  // namespace wordchar
