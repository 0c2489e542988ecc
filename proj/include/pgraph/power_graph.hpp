#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/group.hpp"
#include "pgraph/number_theory.hpp"

namespace pgraph {

/// Directed power graph of G: arc x → y exactly when y ∈ ⟨x⟩ and y ≠ x.
inline DirectedPowerGraph build_directed(const Group& g) {
  int n = g.order();
  DirectedPowerGraph d(n);
  for (int x = 0; x < n; ++x)
    for (int y : cyclic_subgroup(g, x))
      if (y != x) d.add_arc(x, y);
  return d;
}

/// Undirected power graph of G: x ~ y when one lies in the cyclic subgroup
/// generated by the other. The identity (vertex 0) is adjacent to all others.
inline UndirectedGraph build_undirected(const Group& g) {
  int n = g.order();
  UndirectedGraph pg(n);
  for (int x = 0; x < n; ++x)
    for (int y : cyclic_subgroup(g, x))
      if (y != x) pg.add_edge(x, y);
  return pg;
}

namespace detail {
inline void require_group_labeled(const std::vector<int>& labels) {
  if (labels.empty() || labels[0] != 0)
    throw std::invalid_argument("puncture: graph is not labeled by group elements");
}
}  // namespace detail

/// Removes the identity vertex (label 0) and its incident edges; element
/// labels are preserved, so vertex i of the result carries label i + 1.
inline UndirectedGraph puncture(const UndirectedGraph& g) {
  detail::require_group_labeled(g.labels());
  int n = g.vertex_count();
  std::vector<int> labels(g.labels().begin() + 1, g.labels().end());
  UndirectedGraph out(n - 1, std::move(labels));
  for (auto [u, v] : g.edges())
    if (u != 0) out.add_edge(u - 1, v - 1);
  return out;
}

inline DirectedPowerGraph puncture(const DirectedPowerGraph& g) {
  detail::require_group_labeled(g.labels());
  int n = g.vertex_count();
  std::vector<int> labels(g.labels().begin() + 1, g.labels().end());
  DirectedPowerGraph out(n - 1, std::move(labels));
  for (auto [x, y] : g.arcs())
    if (x != 0 && y != 0) out.add_arc(x - 1, y - 1);
  return out;
}

inline UndirectedGraph build_punctured(const Group& g) { return puncture(build_undirected(g)); }

/// Closed-form degrees of x^m in the power graph of a cyclic group of order n.
/// d_minus_printed counts x^m itself (the convention of the source identity);
/// d_minus_loopless is the proper in-neighbour count, always printed − 1.
struct CyclicDegrees {
  std::uint64_t d_plus;
  std::uint64_t d_minus_printed;
  std::uint64_t d_minus_loopless;
  std::uint64_t d_undirected;
};

inline CyclicDegrees cyclic_degree_formula(std::uint64_t n, std::uint64_t m) {
  if (n == 0) throw std::invalid_argument("cyclic_degree_formula: n must be positive");
  if (m < 1 || m > n) throw std::out_of_range("cyclic_degree_formula: m must lie in 1..n");
  std::uint64_t g = std::gcd(m, n);
  CyclicDegrees r{};
  r.d_plus = n / g - 1;
  r.d_minus_printed = 0;
  for (std::uint64_t d : divisors(g)) r.d_minus_printed += euler_phi(n / d);
  r.d_minus_loopless = r.d_minus_printed - 1;
  r.d_undirected = r.d_plus + (r.d_minus_printed - euler_phi(n / g));
  return r;
}

/// Edge count of the punctured power graph from element orders alone:
/// 2e* = Σ_{g ≠ 1} (2·o(g) − φ(o(g)) − 3).
inline std::uint64_t edge_count_closed_form(const Group& g) {
  std::uint64_t twice = 0;
  for (int x = 1; x < g.order(); ++x) {
    std::uint64_t o = static_cast<std::uint64_t>(element_order(g, x));
    twice += 2 * o - euler_phi(o) - 3;
  }
  if (twice % 2 != 0)
    throw std::logic_error("edge_count_closed_form: odd degree sum");
  return twice / 2;
}

/// Same count computed per order class: 2e* = Σ_{n ∈ π_e, n>1} s_n(2n − φ(n) − 3).
/// Depends only on the order statistics, not on the group itself.
inline std::uint64_t edge_count_by_order_classes(const SpectrumInfo& spec) {
  std::uint64_t twice = 0;
  for (const auto& [n, count] : spec.s) {
    if (n == 1) continue;
    twice += count * (2 * n - euler_phi(n) - 3);
  }
  if (twice % 2 != 0)
    throw std::invalid_argument("edge_count_by_order_classes: odd sum, corrupted spectrum");
  return twice / 2;
}

/// Prime graph: vertices are the primes dividing |G|, labeled by the prime;
/// p ~ q exactly when G has an element of order pq.
inline UndirectedGraph prime_graph(const Group& g) {
  if (g.order() < 2) throw std::invalid_argument("prime_graph: group must be nontrivial");
  SpectrumInfo spec = spectrum(g);
  std::vector<int> labels(spec.pi.begin(), spec.pi.end());
  UndirectedGraph pg(static_cast<int>(labels.size()), labels);
  auto has_order = [&spec](std::uint64_t k) { return spec.s.count(k) != 0; };
  for (std::size_t i = 0; i < spec.pi.size(); ++i)
    for (std::size_t j = i + 1; j < spec.pi.size(); ++j)
      if (has_order(spec.pi[i] * spec.pi[j]))
        pg.add_edge(static_cast<int>(i), static_cast<int>(j));
  return pg;
}

/// Commuting graph on the non-identity elements: x ~ y when xy = yx.
inline UndirectedGraph commuting_graph(const Group& g) {
  if (g.order() < 2) throw std::invalid_argument("commuting_graph: group must be nontrivial");
  int n = g.order();
  std::vector<int> labels(n - 1);
  std::iota(labels.begin(), labels.end(), 1);
  UndirectedGraph cg(n - 1, std::move(labels));
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) cg.add_edge(x - 1, y - 1);
  return cg;
}

}  // namespace pgraph
