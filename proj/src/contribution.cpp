#include "wordchar/contribution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace wordchar {

int SlotLayout::terminal_slot(int f, int z, int i) const {
  return occurrence_base[static_cast<size_t>(f)] + z * 2 * k + i;
}

int SlotLayout::initial_slot(int f, int z, int i) const {
  return occurrence_base[static_cast<size_t>(f)] + z * 2 * k + k + i;
}

SlotLayout make_slot_layout(const ReducedWord& w, int k) {
  if (k < 1) throw std::invalid_argument("make_slot_layout: k must be positive");
  if (!w.cyclically_reduced() || w.length() == 0)
    throw std::invalid_argument("make_slot_layout: need a nonempty cyclically reduced word");
  SlotLayout layout;
  layout.k = k;
  layout.length = w.length();
  layout.occurrence_base.resize(w.occurrences().size());
  int base = 0;
  for (size_t f = 0; f < w.occurrences().size(); ++f) {
    layout.occurrence_base[f] = base;
    base += w.occurrences()[f] * 2 * k;
  }
  layout.slot_count = base;

  // Occurrence index of each letter, and the junction slot lists. The top
  // of junction t is letter t's unconjugated block; the bottom is letter
  // t+1's conjugated block (indices cyclic).
  const auto& letters = w.letters();
  std::vector<int> occ_seen(w.occurrences().size(), 0);
  std::vector<int> occ_of(letters.size());
  for (size_t t = 0; t < letters.size(); ++t)
    occ_of[t] = occ_seen[static_cast<size_t>(letters[t].generator)]++;

  layout.junctions.resize(letters.size());
  for (size_t t = 0; t < letters.size(); ++t) {
    size_t t1 = (t + 1) % letters.size();
    auto& j = layout.junctions[t];
    j.top.resize(static_cast<size_t>(k));
    j.bottom.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      j.top[static_cast<size_t>(i)] =
          letters[t].sign == 1
              ? layout.terminal_slot(letters[t].generator, occ_of[t], i)
              : layout.initial_slot(letters[t].generator, occ_of[t], i);
      j.bottom[static_cast<size_t>(i)] =
          letters[t1].sign == 1
              ? layout.initial_slot(letters[t1].generator, occ_of[t1], i)
              : layout.terminal_slot(letters[t1].generator, occ_of[t1], i);
    }
  }
  return layout;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

ContributionGraph build_contribution_graph(const ReducedWord& w, int k,
                                           const std::vector<SetPartition>& sigma,
                                           const std::vector<SetPartition>& tau,
                                           const std::vector<PartialMatching>& junctions) {
  SlotLayout layout = make_slot_layout(w, k);
  const int rank = w.rank();
  if (static_cast<int>(sigma.size()) != rank || static_cast<int>(tau.size()) != rank)
    throw std::invalid_argument("build_contribution_graph: one sigma/tau per generator");
  if (static_cast<int>(junctions.size()) != w.length())
    throw std::invalid_argument("build_contribution_graph: one junction matching per letter");

  ContributionGraph g;
  g.k = k;
  g.word_length = w.length();

  UnionFind uf(layout.slot_count);
  for (int f = 0; f < rank; ++f) {
    const int m = w.occurrences()[static_cast<size_t>(f)] * k;
    if (sigma[static_cast<size_t>(f)].size() != m || tau[static_cast<size_t>(f)].size() != m)
      throw std::invalid_argument("build_contribution_graph: partition size mismatch");
    // sigma couples initial slots, tau couples terminal slots; element
    // z*k + i of the grid is occurrence z, position i.
    std::vector<int> sfirst(static_cast<size_t>(m), -1), tfirst(static_cast<size_t>(m), -1);
    for (int e = 0; e < m; ++e) {
      int z = e / k, i = e % k;
      int js = layout.initial_slot(f, z, i);
      int& sf = sfirst[static_cast<size_t>(sigma[static_cast<size_t>(f)].block_of(e))];
      if (sf == -1) sf = js; else uf.unite(sf, js);
      int is = layout.terminal_slot(f, z, i);
      int& tf = tfirst[static_cast<size_t>(tau[static_cast<size_t>(f)].block_of(e))];
      if (tf == -1) tf = is; else uf.unite(tf, is);
    }
  }
  for (size_t t = 0; t < junctions.size(); ++t) {
    if (junctions[t].k() != k)
      throw std::invalid_argument("build_contribution_graph: junction k mismatch");
    for (auto [top, bot] : junctions[t].pairs())
      uf.unite(layout.junctions[t].top[static_cast<size_t>(top - 1)],
               layout.junctions[t].bottom[static_cast<size_t>(bot - k - 1)]);
    g.del_total += junctions[t].del();
  }

  // Vertex classes.
  std::map<int, int> class_id;
  g.slot_class.resize(static_cast<size_t>(layout.slot_count));
  for (int s = 0; s < layout.slot_count; ++s) {
    auto [it, fresh] = class_id.try_emplace(uf.find(s), static_cast<int>(class_id.size()));
    g.slot_class[static_cast<size_t>(s)] = it->second;
  }
  g.vertex_classes = static_cast<int>(class_id.size());

  for (int f = 0; f < rank; ++f)
    g.edge_classes +=
        meet(sigma[static_cast<size_t>(f)], tau[static_cast<size_t>(f)]).block_count();

  // Inequality constraints: within each junction, slots in different
  // matching classes must take distinct values.
  std::vector<std::pair<int, int>> conflicts;
  for (size_t t = 0; t < junctions.size(); ++t) {
    const auto& jn = layout.junctions[t];
    // matching class of the 2k junction slots: matched pairs share an id
    std::vector<int> mclass(static_cast<size_t>(2 * k));
    std::iota(mclass.begin(), mclass.end(), 0);
    for (auto [top, bot] : junctions[t].pairs())
      mclass[static_cast<size_t>(k + bot - k - 1)] = top - 1;
    auto slot_at = [&](int pos) {
      return pos < k ? jn.top[static_cast<size_t>(pos)]
                     : jn.bottom[static_cast<size_t>(pos - k)];
    };
    for (int x = 0; x < 2 * k; ++x)
      for (int y = x + 1; y < 2 * k; ++y) {
        if (mclass[static_cast<size_t>(x)] == mclass[static_cast<size_t>(y)]) continue;
        int cx = g.slot_class[static_cast<size_t>(slot_at(x))];
        int cy = g.slot_class[static_cast<size_t>(slot_at(y))];
        if (cx == cy) {
          g.contradiction = true;
          return g;
        }
        conflicts.emplace_back(std::min(cx, cy), std::max(cx, cy));
      }
  }
  std::sort(conflicts.begin(), conflicts.end());
  conflicts.erase(std::unique(conflicts.begin(), conflicts.end()), conflicts.end());
  g.conflicts = std::move(conflicts);
  return g;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Canonical key for a connected piece: vertices renamed by first appearance
// in the sorted edge list.
std::pair<int, EdgeList> normalize(int vertices, EdgeList edges) {
  std::map<int, int> rename;
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  for (auto& [a, b] : edges) {
    a = rename.try_emplace(a, static_cast<int>(rename.size())).first->second;
    b = rename.try_emplace(b, static_cast<int>(rename.size())).first->second;
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {vertices, std::move(edges)};
}

std::map<std::pair<int, EdgeList>, Polynomial>& chromatic_memo() {
  static std::map<std::pair<int, EdgeList>, Polynomial> memo;
  return memo;
}
std::mutex& chromatic_mutex() {
  static std::mutex mu;
  return mu;
}

Polynomial chromatic_of(int vertices, EdgeList edges);

// Connected, simple, loop-free piece with every vertex incident to an edge.
Polynomial chromatic_connected(int vertices, EdgeList edges) {
  const int e = static_cast<int>(edges.size());
  if (e == vertices - 1) {
    // spanning tree: n (n-1)^{e}
    Polynomial p({Rat(0), Rat(1)});
    for (int i = 0; i < e; ++i) p *= Polynomial({Rat(-1), Rat(1)});
    return p;
  }
  if (e == vertices * (vertices - 1) / 2) return falling_factorial(vertices);

  auto key = std::make_pair(vertices, edges);
  {
    std::lock_guard<std::mutex> lock(chromatic_mutex());
    auto it = chromatic_memo().find(key);
    if (it != chromatic_memo().end()) return it->second;
  }

  // deletion - contraction on the last edge
  auto [a, b] = edges.back();
  EdgeList deleted(edges.begin(), edges.end() - 1);
  EdgeList contracted;
  contracted.reserve(deleted.size());
  for (auto [x, y] : deleted) {
    if (x == b) x = a;
    if (y == b) y = a;
    if (x == y) continue;  // parallel edge collapses, never a loop here
    contracted.emplace_back(std::min(x, y), std::max(x, y));
  }
  Polynomial result =
      chromatic_of(vertices, std::move(deleted)) - chromatic_of(vertices - 1, std::move(contracted));

  std::lock_guard<std::mutex> lock(chromatic_mutex());
  return chromatic_memo().try_emplace(std::move(key), std::move(result)).first->second;
}

Polynomial chromatic_of(int vertices, EdgeList edges) {
  for (auto [a, b] : edges)
    if (a == b) return {};
  auto [v, simple] = normalize(vertices, std::move(edges));

  // Split into connected components over the touched vertices; untouched
  // vertices contribute a factor of n each.
  int touched = 0;
  std::map<int, std::vector<std::pair<int, int>>> comp_edges;
  {
    std::map<int, int> root_of;
    std::vector<int> parent;
    std::function<int(int)> find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    int maxv = -1;
    for (auto [a, b] : simple) maxv = std::max({maxv, a, b});
    parent.resize(static_cast<size_t>(maxv + 1));
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [a, b] : simple) {
      int ra = find(a), rb = find(b);
      if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    std::map<int, std::pair<std::map<int, int>, EdgeList>> comps;
    for (auto [a, b] : simple) {
      auto& [verts, es] = comps[find(a)];
      verts.try_emplace(a, static_cast<int>(verts.size()));
      verts.try_emplace(b, static_cast<int>(verts.size()));
      es.emplace_back(verts[a], verts[b]);
    }
    Polynomial product(Rat(1));
    for (auto& [root, comp] : comps) {
      touched += static_cast<int>(comp.first.size());
      product *= chromatic_connected(static_cast<int>(comp.first.size()), comp.second);
    }
    for (int i = 0; i < v - touched; ++i) product *= Polynomial({Rat(0), Rat(1)});
    return product;
  }
}

}  // namespace

Polynomial chromatic_polynomial(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 0) throw std::invalid_argument("chromatic_polynomial: negative vertex count");
  for (auto [a, b] : edges)
    if (a < 0 || a >= vertices || b < 0 || b >= vertices)
      throw std::invalid_argument("chromatic_polynomial: edge endpoint out of range");
  return chromatic_of(vertices, std::move(edges));
}

Polynomial count_assignments(const ContributionGraph& g) {
  if (g.contradiction) return {};
  return chromatic_polynomial(g.vertex_classes, g.conflicts);
}

}  // namespace wordchar
