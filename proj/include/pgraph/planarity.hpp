#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "pgraph/graph.hpp"
#include "pgraph/graph_algorithms.hpp"

namespace pgraph {

struct PlanarityResult {
  bool planar = false;
  // planar case: cyclic neighbour order per vertex plus the face count under
  // the shared-outer-face convention, so v − e + faces = 1 + components
  std::vector<std::vector<int>> rotation;
  std::int64_t face_count = 0;
  // non-planar case: an edge set forming a subdivision of K5 or K3,3
  std::vector<std::pair<int, int>> kuratowski_edges;
  std::string kuratowski_kind;  // "K5" or "K3,3"
};

/// Drops pendant chains: vertices of degree ≤ 1 are removed until none
/// remain. The planarity test's witness may carry such tails in addition to
/// the actual subdivision.
inline std::vector<std::pair<int, int>> trim_pendant_edges(
    std::vector<std::pair<int, int>> edges) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, int> degree;
    for (auto [u, v] : edges) {
      ++degree[u];
      ++degree[v];
    }
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : edges) {
      if (degree[u] <= 1 || degree[v] <= 1)
        changed = true;
      else
        kept.emplace_back(u, v);
    }
    edges = std::move(kept);
  }
  return edges;
}

/// Classifies an edge set as a subdivision of K5 or K3,3: pendant chains are
/// trimmed, degree-2 vertices suppressed, and the remaining core must be
/// exactly K5 or K3,3. Returns "" otherwise. Used both to validate witnesses
/// coming out of the planarity test and by tests independently.
inline std::string classify_kuratowski(const std::vector<std::pair<int, int>>& raw_edges) {
  std::vector<std::pair<int, int>> edges = trim_pendant_edges(raw_edges);
  std::map<int, std::set<int>> adj;
  for (auto [u, v] : edges) {
    if (u == v) return "";
    if (!adj[u].insert(v).second) return "";  // parallel edge
    adj[v].insert(u);
  }
  for (const auto& [v, nb] : adj)
    if (nb.size() < 2 || nb.size() > 4) return "";
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      if (it->second.size() != 2) continue;
      int v = it->first;
      auto nb = it->second.begin();
      int a = *nb, b = *std::next(nb);
      if (a == b || adj[a].count(b)) return "";  // loop or chord after suppression
      adj[a].erase(v);
      adj[b].erase(v);
      adj[a].insert(b);
      adj[b].insert(a);
      adj.erase(it);
      changed = true;
      break;
    }
  }
  if (adj.size() == 5) {
    for (const auto& [v, nb] : adj)
      if (nb.size() != 4) return "";
    return "K5";
  }
  if (adj.size() == 6) {
    for (const auto& [v, nb] : adj)
      if (nb.size() != 3) return "";
    // complete bipartite: the non-neighbours of any vertex form the other side
    auto first = adj.begin();
    std::set<int> side{first->first};
    for (const auto& [v, nb] : adj)
      if (v != first->first && !first->second.count(v)) side.insert(v);
    if (side.size() != 3) return "";
    for (int u : side)
      for (const auto& [v, nb] : adj)
        if (!side.count(v) && !adj[u].count(v)) return "";
    return "K3,3";
  }
  return "";
}

namespace detail {

inline bool edges_nonplanar(const std::vector<std::pair<int, int>>& edges, int n) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(n);
  for (auto [u, v] : edges) boost::add_edge(u, v, bg);
  return !boost::boyer_myrvold_planarity_test(bg);
}

// Deletes every edge whose removal keeps the subgraph non-planar. Since
// planarity is monotone under edge deletion one forward pass is enough, and
// the edge-minimal non-planar remainder is exactly a K5 or K3,3 subdivision.
inline std::vector<std::pair<int, int>> minimal_nonplanar_witness(
    std::vector<std::pair<int, int>> edges, int n) {
  for (std::size_t i = 0; i < edges.size();) {
    std::vector<std::pair<int, int>> without = edges;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (edges_nonplanar(without, n))
      edges = std::move(without);
    else
      ++i;
  }
  return edges;
}

// orbit count of the dart successor permutation induced by the rotations;
// isolated vertices contribute one face each
inline std::int64_t trace_faces(const UndirectedGraph& g,
                                const std::vector<std::vector<int>>& rotation) {
  int n = g.vertex_count();
  std::map<std::pair<int, int>, int> position;
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rotation[v].size(); ++i)
      position[{v, rotation[v][i]}] = static_cast<int>(i);
  std::set<std::pair<int, int>> visited;
  std::int64_t faces = 0;
  for (int v = 0; v < n; ++v) {
    if (rotation[v].empty()) ++faces;
    for (int u : rotation[v]) {
      if (visited.count({v, u})) continue;
      ++faces;
      int x = v, y = u;
      while (!visited.count({x, y})) {
        visited.insert({x, y});
        auto it = position.find({y, x});
        if (it == position.end())
          throw std::logic_error("trace_faces: rotation system is not symmetric");
        const auto& rot = rotation[y];
        int next = rot[(it->second + 1) % rot.size()];
        x = y;
        y = next;
      }
    }
  }
  return faces;
}

}  // namespace detail

/// Planarity with witnesses: a validated rotation system on success, a
/// verified K5/K3,3 subdivision on failure.
inline PlanarityResult is_planar(const UndirectedGraph& g) {
  constexpr int kMaxPlanarityVertices = 10000;
  int n = g.vertex_count();
  if (n > kMaxPlanarityVertices)
    throw std::length_error("is_planar: vertex count exceeds cap");

  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                            boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  int index = 0;
  for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei)
    boost::put(boost::edge_index, bg, *ei, index++);

  std::vector<std::vector<BoostEdge>> embedding(std::max(n, 1));
  std::vector<BoostEdge> kuratowski;
  PlanarityResult result;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  if (result.planar) {
    result.rotation.resize(n);
    for (int v = 0; v < n; ++v)
      for (const BoostEdge& e : embedding[v]) {
        int s = static_cast<int>(boost::source(e, bg));
        int t = static_cast<int>(boost::target(e, bg));
        result.rotation[v].push_back(s == v ? t : s);
      }
    std::int64_t faces = detail::trace_faces(g, result.rotation);
    std::int64_t comps = static_cast<std::int64_t>(connected_components(g).size());
    if (faces != 2 * comps + g.edge_count() - n)
      throw std::logic_error("is_planar: face count contradicts the embedding");
    result.face_count = faces - (comps - 1);
    return result;
  }

  for (const BoostEdge& e : kuratowski) {
    int s = static_cast<int>(boost::source(e, bg));
    int t = static_cast<int>(boost::target(e, bg));
    result.kuratowski_edges.emplace_back(std::min(s, t), std::max(s, t));
  }
  result.kuratowski_edges =
      detail::minimal_nonplanar_witness(std::move(result.kuratowski_edges), n);
  std::sort(result.kuratowski_edges.begin(), result.kuratowski_edges.end());
  result.kuratowski_kind = classify_kuratowski(result.kuratowski_edges);
  if (result.kuratowski_kind.empty())
    throw std::logic_error("is_planar: witness is not a K5/K3,3 subdivision");
  for (auto [u, v] : result.kuratowski_edges)
    if (!g.adjacent(u, v))
      throw std::logic_error("is_planar: witness edge not present in the graph");
  return result;
}

}  // namespace pgraph
