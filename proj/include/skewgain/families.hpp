#ifndef SKEWGAIN_FAMILIES_HPP
#define SKEWGAIN_FAMILIES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewgain/graph.hpp"

namespace skewgain {

enum class FamilyKind { path, cycle, star, complete_bipartite, unicyclic, custom };

// Generator parameters. `n` is the vertex count, except for stars where it
// is the number of leaves (order n+1, matching K_{1,n}).
struct GraphFamily {
  FamilyKind kind = FamilyKind::custom;
  int n = 0;
  int part_a = 0, part_b = 0;                     // complete_bipartite
  int cycle_length = 0;                           // unicyclic
  std::vector<std::pair<int, int>> custom_edges;  // custom
};

// How edge gains are assigned by the generator.
template <class F>
struct GainRule {
  enum class Mode { all_one, explicit_list, random_nonzero };

  Mode mode = Mode::all_one;
  std::vector<typename F::value_type> values;

  static GainRule all_one() { return {}; }
  static GainRule explicit_list(std::vector<typename F::value_type> v) {
    return {Mode::explicit_list, std::move(v)};
  }
  static GainRule random_nonzero() { return {Mode::random_nonzero, {}}; }
};

namespace detail {

// Orientation conventions: paths run v0->v1->..., cycles run consistently
// around (vn-1 -> v0 closes), stars point center->leaf.
inline std::vector<std::pair<int, int>> family_edges(const GraphFamily& fam, Rng& rng,
                                                     int& vertex_count) {
  std::vector<std::pair<int, int>> e;
  switch (fam.kind) {
    case FamilyKind::path:
      if (fam.n < 1) throw Error("BadParameters", "path needs n >= 1");
      vertex_count = fam.n;
      for (int v = 0; v + 1 < fam.n; ++v) e.emplace_back(v, v + 1);
      break;
    case FamilyKind::cycle:
      if (fam.n < 3) throw Error("BadParameters", "cycle needs n >= 3");
      vertex_count = fam.n;
      for (int v = 0; v < fam.n; ++v) e.emplace_back(v, (v + 1) % fam.n);
      break;
    case FamilyKind::star:
      if (fam.n < 1) throw Error("BadParameters", "star needs at least one leaf");
      vertex_count = fam.n + 1;
      for (int v = 1; v <= fam.n; ++v) e.emplace_back(0, v);
      break;
    case FamilyKind::complete_bipartite:
      if (fam.part_a < 1 || fam.part_b < 1) {
        throw Error("BadParameters", "complete bipartite needs both parts >= 1");
      }
      vertex_count = fam.part_a + fam.part_b;
      for (int x = 0; x < fam.part_a; ++x) {
        for (int y = 0; y < fam.part_b; ++y) e.emplace_back(x, fam.part_a + y);
      }
      break;
    case FamilyKind::unicyclic: {
      if (fam.cycle_length < 3 || fam.cycle_length > fam.n) {
        throw Error("BadParameters", "unicyclic needs 3 <= cycle length <= n");
      }
      vertex_count = fam.n;
      for (int v = 0; v < fam.cycle_length; ++v) {
        e.emplace_back(v, (v + 1) % fam.cycle_length);
      }
      for (int v = fam.cycle_length; v < fam.n; ++v) {
        e.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
      }
      break;
    }
    case FamilyKind::custom:
      if (fam.n < 0) throw Error("BadParameters", "custom family needs n >= 0");
      vertex_count = fam.n;
      e = fam.custom_edges;
      break;
  }
  return e;
}

}  // namespace detail

// Deterministic generator: identical (family, rule, seed) yields an
// identical graph.
template <class F>
SkewGainGraph<F> generate(const GraphFamily& fam, const GainRule<F>& rule,
                          std::uint64_t seed = 0) {
  Rng rng(seed);
  int vertex_count = 0;
  auto pairs = detail::family_edges(fam, rng, vertex_count);
  if (rule.mode == GainRule<F>::Mode::explicit_list &&
      rule.values.size() != pairs.size()) {
    throw Error("BadParameters", "explicit gain list must match the edge count");
  }
  std::vector<OrientedEdge<F>> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    typename F::value_type gain = F::one();
    switch (rule.mode) {
      case GainRule<F>::Mode::all_one:
        break;
      case GainRule<F>::Mode::explicit_list:
        gain = rule.values[i];
        break;
      case GainRule<F>::Mode::random_nonzero:
        gain = F::random_nonzero(rng);
        break;
    }
    edges.push_back({pairs[i].first, pairs[i].second, gain});
  }
  return SkewGainGraph<F>::build(vertex_count, std::move(edges));
}

// ---- Underlying-graph classification -------------------------------------

template <class F>
bool is_tree(const SkewGainGraph<F>& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
         g.is_connected();
}

template <class F>
bool is_path_graph(const SkewGainGraph<F>& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

template <class F>
bool is_cycle_graph(const SkewGainGraph<F>& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return g.is_connected();
}

// Center vertex of a star K_{1,n}, or nullopt. A single edge counts (either
// endpoint works; the lower one is reported).
template <class F>
std::optional<int> star_center(const SkewGainGraph<F>& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_tree(g)) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return v;
  }
  return std::nullopt;
}

// Regularity degree d, or nullopt when degrees differ.
template <class F>
std::optional<int> regular_degree(const SkewGainGraph<F>& g) {
  if (g.vertex_count() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

template <class F>
bool is_unicyclic_connected(const SkewGainGraph<F>& g) {
  return g.vertex_count() >= 3 && g.edge_count() == g.vertex_count() &&
         g.is_connected();
}

// Every component has exactly as many edges as vertices (a disjoint union of
// 1-trees). Connected cycles and unicyclic graphs qualify.
template <class F>
bool is_one_forest(const SkewGainGraph<F>& g) {
  if (g.vertex_count() == 0 || g.edge_count() != g.vertex_count()) return false;
  auto comp = g.component_ids();
  int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> vcount(ncomp, 0), ecount(ncomp, 0);
  for (int v = 0; v < g.vertex_count(); ++v) vcount[comp[v]]++;
  for (const auto& e : g.edges()) ecount[comp[e.tail]]++;
  for (int c = 0; c < ncomp; ++c) {
    if (vcount[c] != ecount[c]) return false;
  }
  return true;
}

// Two-coloring of the underlying graph; nullopt when an odd cycle exists.
// Parts are listed in ascending vertex order, part X holds vertex 0 of each
// component.
template <class F>
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const SkewGainGraph<F>& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

// True when every cross-part pair is an edge and no same-part pair is.
template <class F>
bool is_complete_bipartite(const SkewGainGraph<F>& g, const std::vector<int>& xs,
                           const std::vector<int>& ys) {
  if (xs.size() * ys.size() != static_cast<std::size_t>(g.edge_count())) return false;
  for (int x : xs) {
    for (int y : ys) {
      if (!g.adjacent(x, y)) return false;
    }
  }
  return true;
}

}  // namespace skewgain

#endif  // SKEWGAIN_FAMILIES_HPP
