#ifndef SKEWGAIN_GRAPH_HPP
#define SKEWGAIN_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewgain/error.hpp"
#include "skewgain/fields.hpp"

namespace skewgain {

// Oriented edge with a skew gain. The reverse gain is never stored; queries
// against the orientation return f(gain).
template <class F>
struct OrientedEdge {
  int tail = 0;
  int head = 0;
  typename F::value_type gain = F::zero();
};

// Immutable simple graph with field-valued gains on oriented edges. Edge
// order is preserved: it fixes the column order of the incidence matrix.
// Disconnected graphs are accepted; operations that need connectivity or a
// particular family check it themselves.
template <class F>
class SkewGainGraph {
 public:
  using Field = F;
  using Value = typename F::value_type;
  using Edge = OrientedEdge<F>;

  static SkewGainGraph build(int n, std::vector<Edge> edges) {
    if (n < 0) throw Error("BadParameters", "vertex count must be nonnegative");
    SkewGainGraph g;
    g.n_ = n;
    g.pair_edge_.assign(static_cast<std::size_t>(n) * n, -1);
    g.degrees_.assign(n, 0);
    g.adjacency_.assign(n, {});
    for (std::size_t id = 0; id < edges.size(); ++id) {
      const Edge& e = edges[id];
      const std::string where = "edge " + std::to_string(id);
      if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
        throw Error("BadVertexIndex", where + " references a vertex outside [0, n)");
      }
      if (e.tail == e.head) throw Error("LoopEdge", where + " is a loop");
      if (F::is_zero(e.gain)) throw Error("ZeroGain", where + " has gain 0");
      if (g.pair_edge_[g.slot(e.tail, e.head)] != -1) {
        throw Error("DuplicateEdge", where + " duplicates an existing vertex pair");
      }
      g.pair_edge_[g.slot(e.tail, e.head)] = static_cast<int>(id);
      g.pair_edge_[g.slot(e.head, e.tail)] = static_cast<int>(id);
      g.degrees_[e.tail]++;
      g.degrees_[e.head]++;
      g.adjacency_[e.tail].push_back(e.head);
      g.adjacency_[e.head].push_back(e.tail);
    }
    g.edges_ = std::move(edges);
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  bool adjacent(int u, int v) const { return edge_id_between(u, v) != -1; }

  // Stored edge id joining u and v in either orientation; -1 if none.
  int edge_id_between(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return -1;
    return pair_edge_[slot(u, v)];
  }

  // phi(uv): the stored gain when the edge is oriented u->v, f(gain) when
  // stored v->u, absent when u and v are not adjacent.
  std::optional<Value> gain(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("BadVertexIndex", "gain query requires distinct vertices");
    int id = pair_edge_[slot(u, v)];
    if (id == -1) return std::nullopt;
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    return e.tail == u ? e.gain : F::f(e.gain);
  }

  // Copy with one edge's stored orientation reversed (gain replaced by its
  // f-image). The graph it represents is unchanged.
  SkewGainGraph with_flipped_edge(int id) const {
    if (id < 0 || id >= edge_count()) {
      throw Error("BadParameters", "edge id out of range");
    }
    std::vector<Edge> edges = edges_;
    Edge& e = edges[static_cast<std::size_t>(id)];
    e = Edge{e.head, e.tail, F::f(e.gain)};
    return build(n_, std::move(edges));
  }

  // Component index per vertex, components numbered by lowest vertex.
  std::vector<int> component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
      if (comp[s] != -1) continue;
      std::vector<int> stack{s};
      comp[s] = next;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
          if (comp[w] == -1) {
            comp[w] = next;
            stack.push_back(w);
          }
        }
      }
      ++next;
    }
    return comp;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    auto comp = component_ids();
    for (int c : comp) {
      if (c != 0) return false;
    }
    return true;
  }

 private:
  SkewGainGraph() = default;

  std::size_t slot(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw Error("BadVertexIndex", "vertex index out of range");
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> pair_edge_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace skewgain

#endif  // SKEWGAIN_GRAPH_HPP
