#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/group.hpp"
#include "pgraph/power_graph.hpp"

namespace pgraph {

/// Partition of the vertex set into maximal connected sets. Components are
/// ordered by their smallest vertex and each is sorted ascending.
inline std::vector<std::vector<int>> connected_components(const UndirectedGraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u) && comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline bool is_connected(const UndirectedGraph& g) {
  return connected_components(g).size() <= 1;
}

struct BipartitenessResult {
  bool bipartite = false;
  std::vector<int> side;       // per-vertex 0/1 coloring when bipartite
  std::vector<int> odd_cycle;  // odd-length vertex cycle otherwise
};

inline BipartitenessResult is_bipartite(const UndirectedGraph& g) {
  int n = g.vertex_count();
  BipartitenessResult result;
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int u = 0; u < n; ++u) {
        if (!g.adjacent(v, u)) continue;
        if (color[u] < 0) {
          color[u] = color[v] ^ 1;
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          // walk both endpoints up to their meeting point in the BFS tree
          std::vector<int> left{v}, right{u};
          int a = v, b = u;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          result.odd_cycle.assign(left.begin(), left.end());
          for (auto it = right.rbegin(); it != right.rend(); ++it)
            if (*it != a) result.odd_cycle.push_back(*it);
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  result.side = std::move(color);
  return result;
}

/// Eulerian circuit existence: connected with every degree even. A one-vertex
/// graph qualifies; a disconnected graph never does (isolated vertices count).
inline bool is_eulerian(const UndirectedGraph& g) {
  if (g.vertex_count() <= 1) return true;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return is_connected(g);
}

/// Cut edges via DFS low-points, as (u, v) pairs with u < v, sorted.
inline std::vector<std::pair<int, int>> find_bridges(const UndirectedGraph& g) {
  int n = g.vertex_count();
  std::vector<int> entry(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
  std::vector<std::pair<int, int>> bridges;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (entry[root] >= 0) continue;
    std::vector<int> stack{root};
    entry[root] = low[root] = timer++;
    while (!stack.empty()) {
      int v = stack.back();
      if (next_child[v] < n) {
        int u = next_child[v]++;
        if (!g.adjacent(v, u)) continue;
        if (entry[u] < 0) {
          parent[u] = v;
          entry[u] = low[u] = timer++;
          stack.push_back(u);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], entry[u]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > entry[p]) bridges.emplace_back(std::min(p, v), std::max(p, v));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

/// Edges predicted to be cut edges of the punctured power graph: {x, y} for
/// every vertex with punctured in-degree and out-degree both 1, y its unique
/// out-neighbour. Coincides with find_bridges on the undirected counterpart.
inline std::vector<std::pair<int, int>> cut_edge_criterion(const Group& g,
                                                           const DirectedPowerGraph& punctured) {
  if (punctured.vertex_count() != g.order() - 1)
    throw std::invalid_argument("cut_edge_criterion: digraph does not match punctured group");
  for (int v = 0; v < punctured.vertex_count(); ++v)
    if (punctured.label(v) != v + 1)
      throw std::invalid_argument("cut_edge_criterion: digraph labels are not punctured elements");
  std::set<std::pair<int, int>> edges;
  for (int x = 0; x < punctured.vertex_count(); ++x) {
    if (punctured.out_degree(x) != 1 || punctured.in_degree(x) != 1) continue;
    int y = punctured.out_neighbors(x)[0];
    edges.emplace(std::min(x, y), std::max(x, y));
  }
  return {edges.begin(), edges.end()};
}

struct SrgParameters {
  int n = 0;
  int k = 0;
  std::optional<int> lambda;  // absent when there is no adjacent pair
  std::optional<int> mu;      // absent when there is no non-adjacent pair
};

struct SrgCheck {
  std::optional<SrgParameters> params;
  std::string refusal;                     // reason when params is empty
  std::array<int, 2> witness_pair{-1, -1}; // pair violating the conditions
};

/// Strong-regularity test by exhaustive pair scan. Complete graphs, edgeless
/// graphs and disjoint unions of equal cliques all qualify under the chosen
/// conventions (lambda/mu omitted when the defining pair set is empty).
inline SrgCheck srg_parameters(const UndirectedGraph& g) {
  SrgCheck result;
  int n = g.vertex_count();
  if (n == 0) {
    result.params = SrgParameters{0, 0, std::nullopt, std::nullopt};
    return result;
  }
  int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) {
      result.refusal = "not regular: degrees " + std::to_string(k) + " and " +
                       std::to_string(g.degree(v)) + " coexist";
      result.witness_pair = {0, v};
      return result;
    }
  std::optional<int> lambda, mu;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int common = g.common_neighbors(u, v);
      std::optional<int>& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        result.refusal = std::string(g.adjacent(u, v) ? "adjacent" : "non-adjacent") +
                         " pairs see " + std::to_string(*slot) + " and " +
                         std::to_string(common) + " common neighbours";
        result.witness_pair = {u, v};
        return result;
      }
    }
  result.params = SrgParameters{n, k, lambda, mu};
  return result;
}

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<int> mapping;  // vertex of a → vertex of b
};

namespace detail {

// iterated refinement: colors stabilize under (color, sorted neighbor colors)
inline bool refine_colors(const UndirectedGraph& a, const UndirectedGraph& b,
                          std::vector<int>& ca, std::vector<int>& cb) {
  int na = a.vertex_count();
  ca.assign(na, 0);
  cb.assign(na, 0);
  for (int round = 0; round < na + 1; ++round) {
    using Signature = std::pair<int, std::vector<int>>;
    std::map<Signature, int> palette;
    auto signature = [](const UndirectedGraph& g, const std::vector<int>& colors, int v) {
      std::vector<int> around;
      for (int u = 0; u < g.vertex_count(); ++u)
        if (g.adjacent(v, u)) around.push_back(colors[u]);
      std::sort(around.begin(), around.end());
      return Signature{colors[v], std::move(around)};
    };
    std::vector<int> next_a(na), next_b(na);
    for (int v = 0; v < na; ++v)
      next_a[v] = palette.emplace(signature(a, ca, v), static_cast<int>(palette.size()))
                      .first->second;
    for (int v = 0; v < na; ++v) {
      auto it = palette.find(signature(b, cb, v));
      if (it == palette.end()) return false;  // color class missing in a
      next_b[v] = it->second;
    }
    std::vector<int> hist_a(palette.size(), 0), hist_b(palette.size(), 0);
    for (int v = 0; v < na; ++v) {
      ++hist_a[next_a[v]];
      ++hist_b[next_b[v]];
    }
    if (hist_a != hist_b) return false;
    bool stable = next_a == ca && next_b == cb;
    ca = std::move(next_a);
    cb = std::move(next_b);
    if (stable) break;
  }
  return true;
}

inline bool extend_mapping(const UndirectedGraph& a, const UndirectedGraph& b,
                           const std::vector<int>& ca, const std::vector<int>& cb,
                           std::vector<int>& map_ab, std::vector<char>& used_b, int mapped) {
  int n = a.vertex_count();
  if (mapped == n) return true;
  // most-constrained vertex next: maximize mapped neighbors, break ties by index
  int best = -1, best_links = -1;
  for (int v = 0; v < n; ++v) {
    if (map_ab[v] >= 0) continue;
    int links = 0;
    for (int u = 0; u < n; ++u)
      if (map_ab[u] >= 0 && a.adjacent(v, u)) ++links;
    if (links > best_links) {
      best_links = links;
      best = v;
    }
  }
  int v = best;
  for (int w = 0; w < n; ++w) {
    if (used_b[w] || cb[w] != ca[v]) continue;
    bool consistent = true;
    for (int u = 0; u < n && consistent; ++u)
      if (map_ab[u] >= 0) consistent = a.adjacent(v, u) == b.adjacent(w, map_ab[u]);
    if (!consistent) continue;
    map_ab[v] = w;
    used_b[w] = 1;
    if (extend_mapping(a, b, ca, cb, map_ab, used_b, mapped + 1)) return true;
    map_ab[v] = -1;
    used_b[w] = 0;
  }
  return false;
}

}  // namespace detail

/// Backtracking isomorphism test with color refinement. A positive answer
/// always carries a mapping that has been re-verified edge by edge.
inline IsomorphismResult are_isomorphic(const UndirectedGraph& a, const UndirectedGraph& b) {
  constexpr int kMaxIsoVertices = 256;
  if (a.vertex_count() > kMaxIsoVertices || b.vertex_count() > kMaxIsoVertices)
    throw std::length_error("are_isomorphic: vertex count exceeds cap 256");
  IsomorphismResult result;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return result;
  std::vector<int> ca, cb;
  if (!detail::refine_colors(a, b, ca, cb)) return result;
  std::vector<int> map_ab(a.vertex_count(), -1);
  std::vector<char> used_b(a.vertex_count(), 0);
  if (!detail::extend_mapping(a, b, ca, cb, map_ab, used_b, 0)) return result;
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v = u + 1; v < a.vertex_count(); ++v)
      if (a.adjacent(u, v) != b.adjacent(map_ab[u], map_ab[v]))
        throw std::logic_error("are_isomorphic: mapping failed verification");
  result.isomorphic = true;
  result.mapping = std::move(map_ab);
  return result;
}

/// True when every edge of sub is an edge of sup; vertices are matched by
/// label and the two labeled vertex sets must coincide.
inline bool is_spanning_subgraph(const UndirectedGraph& sub, const UndirectedGraph& sup) {
  if (sub.vertex_count() != sup.vertex_count())
    throw std::invalid_argument("is_spanning_subgraph: vertex sets differ");
  std::map<int, int> where;
  for (int v = 0; v < sup.vertex_count(); ++v) where[sup.label(v)] = v;
  std::vector<int> at(sub.vertex_count());
  for (int v = 0; v < sub.vertex_count(); ++v) {
    auto it = where.find(sub.label(v));
    if (it == where.end())
      throw std::invalid_argument("is_spanning_subgraph: vertex sets differ");
    at[v] = it->second;
  }
  for (auto [u, v] : sub.edges())
    if (!sup.adjacent(at[u], at[v])) return false;
  return true;
}

/// Whether both groups have the same number of elements of each order.
inline bool order_statistics_equal(const Group& a, const Group& b) {
  return spectrum(a).s == spectrum(b).s;
}

}  // namespace pgraph
