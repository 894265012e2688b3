#ifndef SKEWGAIN_ENUMERATE_HPP
#define SKEWGAIN_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewgain/graph.hpp"

namespace skewgain {

// Enumeration is exponential by nature; beyond this many edges the
// operations fail fast with CapExceeded.
inline constexpr int kEnumerationEdgeCap = 24;

// Vertex-disjoint union of single edges (K_2 components) and cycles.
// Cycles are canonical vertex sequences: lowest vertex first, second element
// the smaller of its two neighbors.
struct ElementarySubgraph {
  std::vector<int> k2_edges;            // edge ids, ascending
  std::vector<std::vector<int>> cycles; // canonical sequences, sorted
  std::vector<int> covered;             // covered vertices, ascending

  // Components of even order: every K_2, plus even-length cycles.
  int even_components() const {
    int count = static_cast<int>(k2_edges.size());
    for (const auto& c : cycles) {
      if (c.size() % 2 == 0) ++count;
    }
    return count;
  }
};

// Nonempty set of pairwise non-adjacent edges.
struct Matching {
  std::vector<int> edges;  // edge ids, ascending
};

// One connected component with exactly one cycle (edge count = vertex count).
struct OneTree {
  std::vector<int> vertices;  // ascending
  std::vector<int> edges;     // edge ids, ascending
  std::vector<int> cycle;     // canonical vertex sequence
};

// Spanning subgraph whose components are all 1-trees.
struct Spanning1Forest {
  std::vector<OneTree> components;  // ordered by lowest vertex

  std::vector<int> edge_ids() const {
    std::vector<int> out;
    for (const auto& c : components) out.insert(out.end(), c.edges.begin(), c.edges.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

// ---- canonical ordering and text forms ------------------------------------

inline bool operator<(const ElementarySubgraph& a, const ElementarySubgraph& b) {
  if (a.covered != b.covered) return a.covered < b.covered;
  if (a.k2_edges != b.k2_edges) return a.k2_edges < b.k2_edges;
  return a.cycles < b.cycles;
}
inline bool operator==(const ElementarySubgraph& a, const ElementarySubgraph& b) {
  return a.covered == b.covered && a.k2_edges == b.k2_edges && a.cycles == b.cycles;
}
inline bool operator<(const Matching& a, const Matching& b) { return a.edges < b.edges; }
inline bool operator==(const Matching& a, const Matching& b) { return a.edges == b.edges; }
inline bool operator<(const Spanning1Forest& a, const Spanning1Forest& b) {
  return a.edge_ids() < b.edge_ids();
}
inline bool operator==(const Spanning1Forest& a, const Spanning1Forest& b) {
  return a.edge_ids() == b.edge_ids();
}

std::string to_text(const Matching& m);
std::string to_text(const ElementarySubgraph& s);
std::string to_text(const Spanning1Forest& f);

namespace detail {

inline void check_enumeration_cap(int m, int n, int cap) {
  if (m > cap) {
    throw Error("CapExceeded", "enumeration over " + std::to_string(m) +
                                   " edges exceeds the cap of " + std::to_string(cap));
  }
  if (n > 64) throw Error("CapExceeded", "enumeration is limited to 64 vertices");
}

// All simple cycles as canonical sequences. Each cycle is found once: the
// start is its lowest vertex, every other vertex is larger, and the walk
// begins at the smaller of the start's two cycle neighbors.
template <class F>
std::vector<std::vector<int>> all_cycles(const SkewGainGraph<F>& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == start) {
        if (path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (w < start || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    used.assign(n, 0);
    used[s] = 1;
    dfs(dfs, s, s);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace detail

// All nonempty matchings, in canonical order (ascending edge-id lists).
template <class F>
std::vector<Matching> matchings(const SkewGainGraph<F>& g,
                                int cap = kEnumerationEdgeCap) {
  detail::check_enumeration_cap(g.edge_count(), g.vertex_count(), cap);
  const int m = g.edge_count();
  std::vector<Matching> out;
  std::vector<int> chosen;
  std::vector<char> used(g.vertex_count(), 0);
  auto extend = [&](auto&& self, int first) -> void {
    for (int id = first; id < m; ++id) {
      const auto& e = g.edge(id);
      if (used[e.tail] || used[e.head]) continue;
      used[e.tail] = used[e.head] = 1;
      chosen.push_back(id);
      out.push_back({chosen});
      self(self, id + 1);
      chosen.pop_back();
      used[e.tail] = used[e.head] = 0;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// All nonempty elementary subgraphs, canonical order (lexicographic by
// covered-vertex list, then edge ids, then cycles). The empty subgraph is
// excluded; the identity-permutation term of the characteristic-polynomial
// expansion is handled separately by its consumers.
template <class F>
std::vector<ElementarySubgraph> elementary_subgraphs(const SkewGainGraph<F>& g,
                                                     int cap = kEnumerationEdgeCap) {
  detail::check_enumeration_cap(g.edge_count(), g.vertex_count(), cap);
  const int m = g.edge_count();
  const auto cycles = detail::all_cycles(g);

  // Pieces are K_2 edges first, then cycles; masks make disjointness cheap.
  struct Piece {
    std::uint64_t mask;
    int edge_id;    // -1 for cycles
    int cycle_idx;  // -1 for edges
  };
  std::vector<Piece> pieces;
  pieces.reserve(m + cycles.size());
  for (int id = 0; id < m; ++id) {
    const auto& e = g.edge(id);
    pieces.push_back({(1ULL << e.tail) | (1ULL << e.head), id, -1});
  }
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    std::uint64_t mask = 0;
    for (int v : cycles[c]) mask |= 1ULL << v;
    pieces.push_back({mask, -1, static_cast<int>(c)});
  }

  std::vector<ElementarySubgraph> out;
  std::vector<int> selection;
  auto emit = [&](std::uint64_t mask) {
    ElementarySubgraph s;
    for (int p : selection) {
      if (pieces[p].edge_id >= 0) {
        s.k2_edges.push_back(pieces[p].edge_id);
      } else {
        s.cycles.push_back(cycles[pieces[p].cycle_idx]);
      }
    }
    std::sort(s.k2_edges.begin(), s.k2_edges.end());
    std::sort(s.cycles.begin(), s.cycles.end());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (mask & (1ULL << v)) s.covered.push_back(v);
    }
    out.push_back(std::move(s));
  };
  auto extend = [&](auto&& self, std::size_t first, std::uint64_t mask) -> void {
    for (std::size_t p = first; p < pieces.size(); ++p) {
      if (mask & pieces[p].mask) continue;
      selection.push_back(static_cast<int>(p));
      emit(mask | pieces[p].mask);
      self(self, p + 1, mask | pieces[p].mask);
      selection.pop_back();
    }
  };
  extend(extend, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// The unique cycle of a 1-tree: peel degree-1 vertices, then walk what is
// left starting from its lowest vertex toward the smaller neighbor.
template <class F>
std::vector<int> one_tree_cycle(const SkewGainGraph<F>& g,
                                const std::vector<int>& edge_ids) {
  std::vector<int> deg(g.vertex_count(), 0);
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int id : edge_ids) {
    const auto& e = g.edge(id);
    deg[e.tail]++;
    deg[e.head]++;
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> pending;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 1) pending.push_back(v);
  }
  while (!pending.empty()) {
    int v = pending.back();
    pending.pop_back();
    deg[v] = 0;
    for (int w : adj[v]) {
      if (deg[w] > 0 && --deg[w] == 1) pending.push_back(w);
    }
  }
  int start = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] > 0) {
      start = v;
      break;
    }
  }
  std::vector<int> cycle{start};
  int prev = -1, cur = start;
  do {
    int next = -1;
    for (int w : adj[cur]) {
      if (deg[w] > 0 && w != prev && (next == -1 || w < next)) next = w;
    }
    prev = cur;
    cur = next;
    if (cur != start) cycle.push_back(cur);
  } while (cur != start);
  return cycle;
}

}  // namespace detail

// All essential spanning subgraphs: n-edge spanning subgraphs whose every
// component is a 1-tree. Empty when m < n or none exists.
template <class F>
std::vector<Spanning1Forest> essential_spanning_subgraphs(
    const SkewGainGraph<F>& g, int cap = kEnumerationEdgeCap) {
  detail::check_enumeration_cap(g.edge_count(), g.vertex_count(), cap);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<Spanning1Forest> out;
  if (m < n || n == 0) return out;

  std::vector<int> subset;
  // Union-find over vertices for the candidate edge subset.
  std::vector<int> parent(n), comp_edges(n);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto evaluate = [&]() {
    for (int v = 0; v < n; ++v) {
      parent[v] = v;
      comp_edges[v] = 0;
    }
    for (int id : subset) {
      const auto& e = g.edge(id);
      int a = find(e.tail), b = find(e.head);
      if (a != b) parent[a] = b;
    }
    for (int id : subset) comp_edges[find(g.edge(id).tail)]++;
    std::vector<int> vcount(n, 0);
    for (int v = 0; v < n; ++v) vcount[find(v)]++;
    for (int v = 0; v < n; ++v) {
      if (parent[v] == v && vcount[v] != comp_edges[v]) return false;
    }
    return true;
  };
  auto choose = [&](auto&& self, int first) -> void {
    if (static_cast<int>(subset.size()) == n) {
      if (!evaluate()) return;
      // Split the subset into components and extract each unique cycle.
      std::vector<std::vector<int>> comp_edge_ids(n);
      for (int id : subset) comp_edge_ids[find(g.edge(id).tail)].push_back(id);
      Spanning1Forest forest;
      std::vector<std::pair<int, OneTree>> trees;
      for (int root = 0; root < n; ++root) {
        if (parent[root] != root || comp_edge_ids[root].empty()) continue;
        OneTree tree;
        tree.edges = comp_edge_ids[root];
        for (int v = 0; v < n; ++v) {
          if (find(v) == root) tree.vertices.push_back(v);
        }
        tree.cycle = detail::one_tree_cycle(g, tree.edges);
        trees.emplace_back(tree.vertices.front(), std::move(tree));
      }
      std::sort(trees.begin(), trees.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [lo, tree] : trees) forest.components.push_back(std::move(tree));
      out.push_back(std::move(forest));
      return;
    }
    int needed = n - static_cast<int>(subset.size());
    for (int id = first; id <= m - needed; ++id) {
      subset.push_back(id);
      self(self, id + 1);
      subset.pop_back();
    }
  };
  choose(choose, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Gain of a cycle traversal and its symmetrization phi + f(phi). The
// sequence lists distinct vertices; the closing edge back to the first is
// implicit. The symmetrized value does not depend on direction or start.
template <class F>
std::pair<typename F::value_type, typename F::value_type> cycle_gain(
    const SkewGainGraph<F>& g, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) throw Error("NotACycle", "a cycle needs at least 3 vertices");
  std::vector<char> seen(g.vertex_count(), 0);
  typename F::value_type phi = F::one();
  for (std::size_t i = 0; i < k; ++i) {
    int u = cycle[i];
    int v = cycle[(i + 1) % k];
    if (u < 0 || u >= g.vertex_count()) {
      throw Error("BadVertexIndex", "cycle vertex out of range");
    }
    if (seen[u]) throw Error("NotACycle", "cycle repeats a vertex");
    seen[u] = 1;
    auto gain = g.gain(u, v);
    if (!gain) throw Error("NotACycle", "consecutive cycle vertices are not adjacent");
    phi = phi * *gain;
  }
  typename F::value_type symmetrized = phi + F::f(phi);
  return {phi, symmetrized};
}

}  // namespace skewgain

#endif  // SKEWGAIN_ENUMERATE_HPP
