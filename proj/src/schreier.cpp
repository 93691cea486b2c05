#include "wordchar/schreier.hpp"

#include <deque>
#include <stdexcept>

namespace wordchar {

SchreierOperator::SchreierOperator(int n, int k, const std::vector<Permutation>& generators,
                                   int64_t memory_budget_entries)
    : space_(n, k) {
  if (generators.empty()) throw std::invalid_argument("SchreierOperator: need generators");
  for (const auto& g : generators)
    if (g.n() != n) throw std::invalid_argument("SchreierOperator: generator degree mismatch");
  if (2 * static_cast<int64_t>(generators.size()) * space_.size() > memory_budget_entries)
    throw BudgetError("SchreierOperator: image arrays exceed the memory budget");

  forward_.resize(generators.size());
  backward_.resize(generators.size());
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    const Permutation& g = generators[gi];
    Permutation ginv = g.inverse();
    auto& fwd = forward_[gi];
    auto& bwd = backward_[gi];
    fwd.resize(static_cast<size_t>(space_.size()));
    bwd.resize(static_cast<size_t>(space_.size()));
    std::vector<int> img(static_cast<size_t>(k));
    for (int64_t v = 0; v < space_.size(); ++v) {
      std::vector<int> t = space_.unrank(v);
      for (int i = 0; i < k; ++i) img[static_cast<size_t>(i)] = g.apply(t[static_cast<size_t>(i)]);
      fwd[static_cast<size_t>(v)] = space_.rank(img);
      for (int i = 0; i < k; ++i) img[static_cast<size_t>(i)] = ginv.apply(t[static_cast<size_t>(i)]);
      bwd[static_cast<size_t>(v)] = space_.rank(img);
    }
  }
}

void SchreierOperator::apply(const std::vector<double>& x, std::vector<double>& y) const {
  if (x.size() != static_cast<size_t>(size()))
    throw std::invalid_argument("SchreierOperator::apply: size mismatch");
  y.assign(x.size(), 0.0);
  for (size_t gi = 0; gi < forward_.size(); ++gi) {
    const auto& fwd = forward_[gi];
    const auto& bwd = backward_[gi];
    for (size_t v = 0; v < x.size(); ++v)
      y[v] += x[static_cast<size_t>(fwd[v])] + x[static_cast<size_t>(bwd[v])];
  }
}

std::vector<int64_t> SchreierOperator::neighbors(int64_t v) const {
  std::vector<int64_t> out;
  out.reserve(2 * forward_.size());
  for (size_t gi = 0; gi < forward_.size(); ++gi) {
    out.push_back(forward_[gi][static_cast<size_t>(v)]);
    out.push_back(backward_[gi][static_cast<size_t>(v)]);
  }
  return out;
}

int SchreierOperator::component_count() const {
  std::vector<int8_t> seen(static_cast<size_t>(size()), 0);
  int comps = 0;
  for (int64_t s = 0; s < size(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++comps;
    std::deque<int64_t> queue{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!queue.empty()) {
      int64_t v = queue.front();
      queue.pop_front();
      for (int64_t u : neighbors(v)) {
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = 1;
          queue.push_back(u);
        }
      }
    }
  }
  return comps;
}

bool SchreierOperator::connected() const { return component_count() == 1; }

bool SchreierOperator::bipartite(std::vector<int8_t>* coloring) const {
  std::vector<int8_t> color(static_cast<size_t>(size()), -1);
  for (int64_t s = 0; s < size(); ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    std::deque<int64_t> queue{s};
    while (!queue.empty()) {
      int64_t v = queue.front();
      queue.pop_front();
      for (int64_t u : neighbors(v)) {
        if (u == v) return false;  // loop
        if (color[static_cast<size_t>(u)] == -1) {
          color[static_cast<size_t>(u)] = static_cast<int8_t>(1 - color[static_cast<size_t>(v)]);
          queue.push_back(u);
        } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  if (coloring) *coloring = std::move(color);
  return true;
}

}  // namespace wordchar
