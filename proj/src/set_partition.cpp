#include "wordchar/set_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace wordchar {

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
  int mx = -1;
  for (size_t i = 0; i < rgs_.size(); ++i) {
    if (rgs_[i] < 0 || rgs_[i] > mx + 1)
      throw std::invalid_argument("not a restricted growth string");
    mx = std::max(mx, rgs_[i]);
  }
  blocks_ = mx + 1;
}

SetPartition SetPartition::singletons(int m) {
  std::vector<int> rgs(static_cast<size_t>(m));
  std::iota(rgs.begin(), rgs.end(), 0);
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::whole(int m) {
  return SetPartition(std::vector<int>(static_cast<size_t>(m), 0));
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  std::vector<int> rgs(labels.size());
  std::map<int, int> renumber;
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = renumber.try_emplace(labels[i], static_cast<int>(renumber.size()));
    rgs[i] = it->second;
  }
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::from_blocks(int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> label(static_cast<size_t>(m), -1);
  int id = 0;
  for (const auto& b : blocks) {
    for (int e : b) {
      if (e < 1 || e > m || label[size_t(e - 1)] != -1)
        throw std::invalid_argument("blocks do not partition [m]");
      label[size_t(e - 1)] = id;
    }
    ++id;
  }
  for (int l : label)
    if (l == -1) throw std::invalid_argument("blocks do not cover [m]");
  return from_labels(label);
}

SetPartition SetPartition::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  size_t i = 0;
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument("bad partition text: " + text);
    ++i;
  };
  expect('{');
  int m = 0;
  while (i < text.size() && text[i] == '{') {
    ++i;
    std::vector<int> block;
    while (true) {
      size_t j = i;
      while (j < text.size() && isdigit(text[j])) ++j;
      if (j == i) throw std::invalid_argument("bad partition text: " + text);
      block.push_back(std::stoi(text.substr(i, j - i)));
      m = std::max(m, block.back());
      i = j;
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      break;
    }
    expect('}');
    blocks.push_back(std::move(block));
    if (i < text.size() && text[i] == ',') ++i;
  }
  expect('}');
  if (i != text.size()) throw std::invalid_argument("bad partition text: " + text);
  return from_blocks(m, blocks);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(blocks_));
  for (int i = 0; i < size(); ++i) out[size_t(rgs_[size_t(i)])].push_back(i + 1);
  // Blocks are numbered by first appearance, so they are already sorted by
  // their minima and each block is ascending.
  return out;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  auto bs = blocks();
  for (size_t b = 0; b < bs.size(); ++b) {
    if (b) os << ',';
    os << '{';
    for (size_t j = 0; j < bs[b].size(); ++j) {
      if (j) os << ',';
      os << bs[b][j];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

SetPartition meet(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("meet: size mismatch");
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> labels(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    auto key = std::make_pair(p.block_of(i), q.block_of(i));
    auto [it, fresh] = ids.try_emplace(key, static_cast<int>(ids.size()));
    labels[size_t(i)] = it->second;
  }
  return SetPartition::from_labels(labels);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[size_t(x)] != x) {
      parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
      x = parent[size_t(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[size_t(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("join: size mismatch");
  const int m = p.size();
  UnionFind uf(m);
  std::vector<int> first_p(static_cast<size_t>(p.block_count()), -1);
  std::vector<int> first_q(static_cast<size_t>(q.block_count()), -1);
  for (int i = 0; i < m; ++i) {
    int& fp = first_p[size_t(p.block_of(i))];
    if (fp == -1) fp = i; else uf.unite(fp, i);
    int& fq = first_q[size_t(q.block_of(i))];
    if (fq == -1) fq = i; else uf.unite(fq, i);
  }
  std::vector<int> labels(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) labels[size_t(i)] = uf.find(i);
  return SetPartition::from_labels(labels);
}

bool leq(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("leq: size mismatch");
  std::vector<int> image(static_cast<size_t>(p.block_count()), -1);
  for (int i = 0; i < p.size(); ++i) {
    int& img = image[size_t(p.block_of(i))];
    if (img == -1) img = q.block_of(i);
    else if (img != q.block_of(i)) return false;
  }
  return true;
}

Int mobius(const SetPartition& p, const SetPartition& q) {
  if (!leq(p, q)) throw std::invalid_argument("mobius: p is not a refinement of q");
  // Each block of q splits into b_i blocks of p; the value is
  // (-1)^{|p|-|q|} prod (b_i - 1)!.
  std::vector<int> split(static_cast<size_t>(q.block_count()), 0);
  std::vector<bool> seen(static_cast<size_t>(p.block_count()), false);
  for (int i = 0; i < p.size(); ++i) {
    if (!seen[size_t(p.block_of(i))]) {
      seen[size_t(p.block_of(i))] = true;
      ++split[size_t(q.block_of(i))];
    }
  }
  Int v = 1;
  for (int b : split) v *= factorial(b - 1);
  if ((p.block_count() - q.block_count()) % 2 != 0) v = -v;
  return v;
}

Int bell_number(int m) {
  // Bell triangle.
  std::vector<Int> row{1};
  for (int i = 1; i < m; ++i) {
    std::vector<Int> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const Int& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return m == 0 ? Int(1) : row.back();
}

void for_each_partition(int m, const std::function<void(const SetPartition&)>& f,
                        long budget) {
  if (m < 1) throw std::invalid_argument("enumerate_partitions: m must be positive");
  if (bell_number(m) > budget)
    throw BudgetError("enumerate_partitions: Bell(" + std::to_string(m) +
                      ") exceeds the enumeration budget");
  std::vector<int> rgs(static_cast<size_t>(m), 0);
  std::vector<int> maxv(static_cast<size_t>(m), 0);  // max of rgs[0..i]
  while (true) {
    f(SetPartition::from_labels(rgs));
    int i = m - 1;
    while (i > 0 && rgs[size_t(i)] == maxv[size_t(i - 1)] + 1) --i;
    if (i == 0) break;
    ++rgs[size_t(i)];
    maxv[size_t(i)] = std::max(maxv[size_t(i - 1)], rgs[size_t(i)]);
    for (int j = i + 1; j < m; ++j) {
      rgs[size_t(j)] = 0;
      maxv[size_t(j)] = maxv[size_t(i)];
    }
  }
}

std::vector<SetPartition> enumerate_partitions(int m, long budget) {
  std::vector<SetPartition> out;
  for_each_partition(m, [&](const SetPartition& p) { out.push_back(p); }, budget);
  return out;
}

std::vector<SetPartition> enumerate_star_partitions(int rows, int k, long budget) {
  if (rows < 1 || k < 1)
    throw std::invalid_argument("enumerate_star_partitions: bad shape");
  const int m = rows * k;
  if (bell_number(m) > budget)
    throw BudgetError("enumerate_star_partitions: grid size exceeds budget");
  if (rows == 1) return {};  // every block would be a same-row singleton chain

  // Backtracking over restricted growth strings. Same-row conflicts prune
  // during descent; singleton blocks are rejected at the leaves.
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<size_t>(m), 0);
  std::vector<int> block_sizes;
  auto row_of = [k](int e) { return e / k; };

  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      for (int s : block_sizes)
        if (s == 1) return;
      out.push_back(SetPartition::from_labels(rgs));
      return;
    }
    const int nblocks = static_cast<int>(block_sizes.size());
    for (int b = 0; b <= nblocks; ++b) {
      if (b < nblocks) {
        bool clash = false;
        for (int j = 0; j < i && !clash; ++j)
          clash = rgs[size_t(j)] == b && row_of(j) == row_of(i);
        if (clash) continue;
        rgs[size_t(i)] = b;
        ++block_sizes[size_t(b)];
        rec(i + 1);
        --block_sizes[size_t(b)];
      } else {
        rgs[size_t(i)] = b;
        block_sizes.push_back(1);
        rec(i + 1);
        block_sizes.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

PartialMatching::PartialMatching(int k, std::vector<std::pair<int, int>> pairs)
    : k_(k), pairs_(std::move(pairs)) {
  if (k_ < 1) throw std::invalid_argument("PartialMatching: k must be positive");
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<bool> top(static_cast<size_t>(k_), false), bot(static_cast<size_t>(k_), false);
  for (auto [t, b] : pairs_) {
    if (t < 1 || t > k_ || b < k_ + 1 || b > 2 * k_)
      throw std::invalid_argument("PartialMatching: endpoint out of range");
    if (top[size_t(t - 1)] || bot[size_t(b - k_ - 1)])
      throw std::invalid_argument("PartialMatching: endpoint used twice");
    top[size_t(t - 1)] = bot[size_t(b - k_ - 1)] = true;
  }
}

SetPartition PartialMatching::as_partition() const {
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(static_cast<size_t>(2 * k_), false);
  for (auto [t, b] : pairs_) {
    used[size_t(t - 1)] = used[size_t(b - 1)] = true;
  }
  // from_blocks renumbers canonically, so order of blocks here is free.
  for (auto [t, b] : pairs_) blocks.push_back({t, b});
  for (int e = 1; e <= 2 * k_; ++e)
    if (!used[size_t(e - 1)]) blocks.push_back({e});
  return SetPartition::from_blocks(2 * k_, blocks);
}

std::vector<PartialMatching> enumerate_submatchings(int k, long budget) {
  // sum_m C(k,m)^2 m! candidates.
  Int total = 0;
  for (int m = 0; m <= k; ++m) total += binomial(k, m) * binomial(k, m) * factorial(m);
  if (total > budget) throw BudgetError("enumerate_submatchings: count exceeds budget");

  std::vector<PartialMatching> out;
  // Subsets in lexicographic order by their sorted element lists.
  std::vector<std::vector<int>> subsets_by_size(static_cast<size_t>(k + 1));
  std::vector<std::vector<std::vector<int>>> subsets(static_cast<size_t>(k + 1));
  {
    std::function<void(int, std::vector<int>&)> rec = [&](int start, std::vector<int>& cur) {
      subsets[cur.size()].push_back(cur);
      for (int v = start; v <= k; ++v) {
        cur.push_back(v);
        rec(v + 1, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    rec(1, cur);
  }
  for (int m = 0; m <= k; ++m) {
    for (const auto& tops : subsets[size_t(m)]) {
      for (const auto& bots : subsets[size_t(m)]) {
        std::vector<int> perm(static_cast<size_t>(m));
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<std::pair<int, int>> pairs;
          pairs.reserve(static_cast<size_t>(m));
          for (int i = 0; i < m; ++i)
            pairs.emplace_back(tops[size_t(i)], k + bots[size_t(perm[size_t(i)])]);
          out.emplace_back(k, std::move(pairs));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return out;
}

SetPartition permutation_pairing(const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  std::vector<int> inv(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (s[size_t(i)] < 1 || s[size_t(i)] > k) throw std::invalid_argument("bad permutation");
    inv[size_t(s[size_t(i)] - 1)] = i + 1;
  }
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= k; ++i) blocks.push_back({i, k + inv[size_t(i - 1)]});
  return SetPartition::from_blocks(2 * k, blocks);
}

std::vector<std::vector<int>> completions(const PartialMatching& m) {
  const int k = m.k();
  // A pair (t, k+b) forces tau(b) = t; unmatched positions are free.
  std::vector<int> image(static_cast<size_t>(k), 0);  // image[b-1] = t or 0
  std::vector<bool> used_t(static_cast<size_t>(k), false);
  for (auto [t, kb] : m.pairs()) {
    image[size_t(kb - k - 1)] = t;
    used_t[size_t(t - 1)] = true;
  }
  std::vector<int> free_targets;
  for (int t = 1; t <= k; ++t)
    if (!used_t[size_t(t - 1)]) free_targets.push_back(t);
  std::vector<int> free_slots;
  for (int b = 1; b <= k; ++b)
    if (image[size_t(b - 1)] == 0) free_slots.push_back(b);

  std::vector<std::vector<int>> out;
  std::vector<int> idx(free_targets.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<int> tau = image;
    for (size_t i = 0; i < free_slots.size(); ++i)
      tau[size_t(free_slots[i] - 1)] = free_targets[size_t(idx[i])];
    out.push_back(std::move(tau));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::pair<SetPartition, int> multiply_diagrams(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size() || p.size() % 2 != 0)
    throw std::invalid_argument("multiply_diagrams: need two partitions of [2k]");
  const int k = p.size() / 2;
  // Nodes: 0..k-1 top, k..2k-1 middle, 2k..3k-1 bottom.
  UnionFind uf(3 * k);
  std::map<int, int> pfirst, qfirst;
  for (int i = 0; i < 2 * k; ++i) {
    int node = i;  // p lives on top+middle with its own labels
    auto [it, fresh] = pfirst.try_emplace(p.block_of(i), node);
    if (!fresh) uf.unite(it->second, node);
  }
  for (int i = 0; i < 2 * k; ++i) {
    int node = i + k;  // q's top row is the middle row, its bottom the bottom
    auto [it, fresh] = qfirst.try_emplace(q.block_of(i), node);
    if (!fresh) uf.unite(it->second, node);
  }
  // gamma: components entirely inside the middle row.
  std::map<int, bool> touches_outside;
  for (int v = 0; v < 3 * k; ++v) {
    int r = uf.find(v);
    bool outside = v < k || v >= 2 * k;
    auto [it, fresh] = touches_outside.try_emplace(r, outside);
    if (!fresh) it->second = it->second || outside;
  }
  int gamma = 0;
  for (auto& [root, outside] : touches_outside)
    if (!outside) ++gamma;
  std::vector<int> labels;
  labels.reserve(static_cast<size_t>(2 * k));
  for (int v = 0; v < k; ++v) labels.push_back(uf.find(v));
  for (int v = 2 * k; v < 3 * k; ++v) labels.push_back(uf.find(v));
  return {SetPartition::from_labels(labels), gamma};
}

}  // namespace wordchar
