#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgraph {

/// Square symmetric-capable bit matrix with 64-bit word rows.
class BitMatrix {
 public:
  explicit BitMatrix(int n)
      : n_(n), words_(static_cast<std::size_t>(n) * words_per_row(n), 0) {}

  bool get(int r, int c) const {
    return (words_[row_offset(r) + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    std::uint64_t& w = words_[row_offset(r) + c / 64];
    std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }
  int row_popcount(int r) const {
    int total = 0;
    for (std::size_t i = row_offset(r), e = i + words_per_row(n_); i < e; ++i)
      total += std::popcount(words_[i]);
    return total;
  }
  int row_and_popcount(int r1, int r2) const {
    int total = 0;
    std::size_t o1 = row_offset(r1), o2 = row_offset(r2);
    for (std::size_t i = 0, e = words_per_row(n_); i < e; ++i)
      total += std::popcount(words_[o1 + i] & words_[o2 + i]);
    return total;
  }
  bool rows_equal_except(int r1, int r2, int skip1, int skip2) const {
    std::size_t o1 = row_offset(r1), o2 = row_offset(r2);
    for (std::size_t i = 0, e = words_per_row(n_); i < e; ++i) {
      std::uint64_t diff = words_[o1 + i] ^ words_[o2 + i];
      for (int s : {skip1, skip2})
        if (s >= 0 && static_cast<std::size_t>(s / 64) == i)
          diff &= ~(std::uint64_t{1} << (s % 64));
      if (diff) return false;
    }
    return true;
  }

 private:
  static std::size_t words_per_row(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }
  std::size_t row_offset(int r) const { return static_cast<std::size_t>(r) * words_per_row(n_); }

  int n_;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph over labeled vertices; loopless by construction.
class UndirectedGraph {
 public:
  static constexpr int kMaxVertices = 4096;

  explicit UndirectedGraph(int n) : UndirectedGraph(n, default_labels(n)) {}

  UndirectedGraph(int n, std::vector<int> labels) : n_(n), adj_(n), labels_(std::move(labels)) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("UndirectedGraph: vertex count out of range");
    if (labels_.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("UndirectedGraph: label count mismatch");
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("UndirectedGraph: loops not allowed");
    if (adj_.get(u, v)) return;
    adj_.set(u, v, true);
    adj_.set(v, u, true);
    ++edges_;
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!adj_.get(u, v)) return;
    adj_.set(u, v, false);
    adj_.set(v, u, false);
    --edges_;
  }

  bool adjacent(int u, int v) const { return adj_.get(u, v); }
  int degree(int v) const { return adj_.row_popcount(v); }
  int common_neighbors(int u, int v) const { return adj_.row_and_popcount(u, v); }
  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return edges_; }
  int label(int v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (adj_.get(v, u)) out.push_back(u);
    return out;
  }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adj_.get(u, v)) out.emplace_back(u, v);
    return out;
  }

 private:
  static std::vector<int> default_labels(int n) {
    std::vector<int> l(std::max(n, 0));
    std::iota(l.begin(), l.end(), 0);
    return l;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("UndirectedGraph: vertex out of range");
  }

  int n_;
  BitMatrix adj_;
  std::vector<int> labels_;
  std::int64_t edges_ = 0;
};

/// Loopless digraph used for the arc relation x → y ⇔ y ∈ ⟨x⟩, y ≠ x.
class DirectedPowerGraph {
 public:
  explicit DirectedPowerGraph(int n) : DirectedPowerGraph(n, default_labels(n)) {}

  DirectedPowerGraph(int n, std::vector<int> labels)
      : n_(n), adj_(n), labels_(std::move(labels)), out_deg_(n, 0), in_deg_(n, 0) {
    if (n < 0 || n > UndirectedGraph::kMaxVertices)
      throw std::invalid_argument("DirectedPowerGraph: vertex count out of range");
    if (labels_.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("DirectedPowerGraph: label count mismatch");
  }

  void add_arc(int x, int y) {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw std::invalid_argument("DirectedPowerGraph: loops not allowed");
    if (adj_.get(x, y)) return;
    adj_.set(x, y, true);
    ++out_deg_[x];
    ++in_deg_[y];
    ++arcs_;
  }

  bool arc(int x, int y) const { return adj_.get(x, y); }
  int out_degree(int x) const { return out_deg_[x]; }
  int in_degree(int x) const { return in_deg_[x]; }
  int vertex_count() const { return n_; }
  std::int64_t arc_count() const { return arcs_; }
  int label(int v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }

  std::vector<int> out_neighbors(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
      if (adj_.get(x, y)) out.push_back(y);
    return out;
  }
  std::vector<int> in_neighbors(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
      if (adj_.get(y, x)) out.push_back(y);
    return out;
  }
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(arcs_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (adj_.get(x, y)) out.emplace_back(x, y);
    return out;
  }
  bool out_rows_equal_except(int x, int y, int skip1, int skip2) const {
    return adj_.rows_equal_except(x, y, skip1, skip2);
  }

 private:
  static std::vector<int> default_labels(int n) {
    std::vector<int> l(std::max(n, 0));
    std::iota(l.begin(), l.end(), 0);
    return l;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("DirectedPowerGraph: vertex out of range");
  }

  int n_;
  BitMatrix adj_;
  std::vector<int> labels_;
  std::vector<int> out_deg_, in_deg_;
  std::int64_t arcs_ = 0;
};

// ---------------------------------------------------------------------------
// deterministic exports: DOT and a plain edge list keyed by vertex labels
// ---------------------------------------------------------------------------

inline std::string to_dot(const UndirectedGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << g.label(v) << ";\n";
  for (auto [u, v] : g.edges())
    out << "  " << g.label(u) << " -- " << g.label(v) << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const DirectedPowerGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << g.label(v) << ";\n";
  for (auto [x, y] : g.arcs())
    out << "  " << g.label(x) << " -> " << g.label(y) << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_edge_list(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "# vertices: " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << g.label(u) << " " << g.label(v) << "\n";
  return out.str();
}

inline std::string to_edge_list(const DirectedPowerGraph& g) {
  std::ostringstream out;
  out << "# vertices: " << g.vertex_count() << "\n";
  for (auto [x, y] : g.arcs()) out << g.label(x) << " " << g.label(y) << "\n";
  return out.str();
}

}  // namespace pgraph
