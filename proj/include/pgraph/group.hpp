#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgraph/number_theory.hpp"

namespace pgraph {

enum class TableErrorKind {
  MalformedInput,
  NotLatinSquare,
  MissingIdentity,
  NotAssociative,
  Oversize,
};

class CayleyTableError : public std::runtime_error {
 public:
  CayleyTableError(TableErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  TableErrorKind kind() const { return kind_; }

 private:
  TableErrorKind kind_;
};

/// Finite group as a dense multiplication table over element indices
/// {0..n−1}. The identity is always index 0; construction enforces that
/// and computes the inverse map. Immutable after construction.
class Group {
 public:
  static constexpr int kMaxOrder = 2048;
  // exhaustive associativity checking is limited to this order
  static constexpr int kFullValidationLimit = 512;

  Group(std::vector<std::uint16_t> table, std::string label) : label_(std::move(label)) {
    std::size_t sz = table.size();
    int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(sz))));
    if (n < 1 || static_cast<std::size_t>(n) * n != sz)
      throw std::invalid_argument("Group: table size is not a perfect square");
    if (n > kMaxOrder)
      throw CayleyTableError(TableErrorKind::Oversize,
                             "Group: order " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(kMaxOrder));
    n_ = n;
    table_ = std::move(table);
    for (std::size_t i = 0; i < sz; ++i)
      if (table_[i] >= n_)
        throw std::invalid_argument("Group: table entry out of range");
    for (int x = 0; x < n_; ++x)
      if (mul(0, x) != x || mul(x, 0) != x)
        throw std::invalid_argument("Group: index 0 is not an identity");
    inverse_.assign(n_, 0);
    for (int x = 0; x < n_; ++x) {
      int inv = -1;
      for (int y = 0; y < n_; ++y)
        if (mul(x, y) == 0) {
          inv = y;
          break;
        }
      if (inv < 0 || mul(inv, x) != 0)
        throw std::invalid_argument("Group: element has no two-sided inverse");
      inverse_[x] = static_cast<std::uint16_t>(inv);
    }
  }

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inverse(int x) const { return inverse_[x]; }
  int identity() const { return 0; }
  const std::string& label() const { return label_; }

  int power(int x, std::uint64_t k) const {
    int acc = 0, base = x;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

 private:
  int n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::string label_;
};

/// Latin-square, identity, inverse and associativity checks. Associativity is
/// exhaustive up to kFullValidationLimit and sampled (deterministic seed) above.
inline void validate_group_axioms(const Group& g, int sample_triples = 20000) {
  int n = g.order();
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) seen[g.mul(r, c)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw CayleyTableError(TableErrorKind::NotLatinSquare,
                             "row " + std::to_string(r) + " is not a permutation");
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) seen[g.mul(r, c)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw CayleyTableError(TableErrorKind::NotLatinSquare,
                             "column " + std::to_string(c) + " is not a permutation");
  }
  auto check = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw CayleyTableError(TableErrorKind::NotAssociative,
                             "associativity fails at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  if (n <= Group::kFullValidationLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < sample_triples; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

// ---------------------------------------------------------------------------
// constructors for the built-in families
// ---------------------------------------------------------------------------

inline Group build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("build_cyclic: order must be positive");
  if (n > Group::kMaxOrder) throw std::invalid_argument("build_cyclic: order exceeds cap");
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return Group(std::move(t), "Z" + std::to_string(n));
}

/// (ℤ_p)^k with elements encoded as k base-p digits, identity 0.
inline Group build_elementary_abelian(int p, int k) {
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("build_elementary_abelian: p must be prime");
  if (k < 1) throw std::invalid_argument("build_elementary_abelian: k must be positive");
  std::int64_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > Group::kMaxOrder)
      throw std::invalid_argument("build_elementary_abelian: order exceeds cap");
  }
  auto add = [p, k](int a, int b) {
    int r = 0, m = 1;
    for (int i = 0; i < k; ++i) {
      r += ((a % p + b % p) % p) * m;
      a /= p;
      b /= p;
      m *= p;
    }
    return r;
  };
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = add(i, j);
  return Group(std::move(t), "E(" + std::to_string(p) + "^" + std::to_string(k) + ")");
}

/// Generalized quaternion group of order 4m: x of order 2m, y² = x^m,
/// y⁻¹xy = x⁻¹. Elements encoded as pairs (i, j) ↦ j·2m + i.
inline Group build_generalized_quaternion(int m) {
  if (m < 2) throw std::invalid_argument("build_generalized_quaternion: m must be >= 2");
  int n2 = 2 * m, n = 4 * m;
  if (n > Group::kMaxOrder)
    throw std::invalid_argument("build_generalized_quaternion: order exceeds cap");
  auto enc = [n2](int i, int j) { return j * n2 + i; };
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n2; ++k)
        for (int l = 0; l < 2; ++l) {
          int r;
          if (j == 0)
            r = enc((i + k) % n2, l);  // x^i · x^k y^l
          else if (l == 0)
            r = enc(((i - k) % n2 + n2) % n2, 1);  // x^i y · x^k = x^{i−k} y
          else
            r = enc(((i - k + m) % n2 + n2) % n2, 0);  // x^i y · x^k y = x^{i−k+m}
          t[static_cast<std::size_t>(enc(i, j)) * n + enc(k, l)] = r;
        }
  return Group(std::move(t), "Q" + std::to_string(n));
}

/// Dihedral group of order 2m: indices 0..m−1 are rotations, m..2m−1 reflections.
inline Group build_dihedral(int m) {
  if (m < 3) throw std::invalid_argument("build_dihedral: m must be >= 3");
  int n = 2 * m;
  if (n > Group::kMaxOrder) throw std::invalid_argument("build_dihedral: order exceeds cap");
  auto mul = [m](int a, int b) {
    bool ra = a >= m, rb = b >= m;
    int i = ra ? a - m : a, j = rb ? b - m : b;
    if (!ra && !rb) return (i + j) % m;
    if (!ra && rb) return m + (i + j) % m;
    if (ra && !rb) return m + ((i - j) % m + m) % m;
    return ((i - j) % m + m) % m;
  };
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  return Group(std::move(t), "D" + std::to_string(m));
}

/// Extraspecial group of order p³ and exponent p (p odd): triples (a, b, c)
/// over ℤ_p with (a,b,c)(a′,b′,c′) = (a+a′, b+b′, c+c′+a·b′).
inline Group build_heisenberg(int p) {
  if (p == 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("build_heisenberg: p must be an odd prime");
  std::int64_t n = static_cast<std::int64_t>(p) * p * p;
  if (n > Group::kMaxOrder) throw std::invalid_argument("build_heisenberg: order exceeds cap");
  auto enc = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t[static_cast<std::size_t>(enc(a, b, c)) * n + enc(a2, b2, c2)] =
                  enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  return Group(std::move(t), "H(" + std::to_string(p) + ")");
}

/// Closure of a set of permutations of {0..d−1} under composition,
/// relabeled to indices with the identity at 0. mul(a, b) acts as b then a,
/// i.e. (a∘b)(i) = a(b(i)).
inline Group build_from_permutations(const std::vector<std::vector<int>>& generators,
                                     std::string label = "") {
  if (generators.empty())
    throw std::invalid_argument("build_from_permutations: no generators");
  std::size_t d = generators[0].size();
  if (d == 0) throw std::invalid_argument("build_from_permutations: empty domain");
  for (const auto& g : generators) {
    if (g.size() != d)
      throw std::invalid_argument("build_from_permutations: mixed domain sizes");
    std::vector<char> seen(d, 0);
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= d || seen[v])
        throw std::invalid_argument("build_from_permutations: generator is not a bijection");
      seen[v] = 1;
    }
  }
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  std::deque<int> queue{0};
  std::vector<int> composed(d);
  while (!queue.empty()) {
    int xi = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      const auto& x = elems[xi];
      for (std::size_t i = 0; i < d; ++i) composed[i] = x[g[i]];
      if (index.emplace(composed, static_cast<int>(elems.size())).second) {
        elems.push_back(composed);
        queue.push_back(static_cast<int>(elems.size()) - 1);
        if (elems.size() > static_cast<std::size_t>(Group::kMaxOrder))
          throw std::length_error("build_from_permutations: closure exceeds order cap " +
                                  std::to_string(Group::kMaxOrder));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) composed[i] = elems[a][elems[b][i]];
      t[static_cast<std::size_t>(a) * n + b] = index.at(composed);
    }
  if (label.empty()) label = "Perm" + std::to_string(n);
  return Group(std::move(t), std::move(label));
}

inline Group build_symmetric(int m) {
  if (m < 1) throw std::invalid_argument("build_symmetric: degree must be positive");
  std::string label = "S" + std::to_string(m);
  if (m == 1) {
    return Group(std::vector<std::uint16_t>{0}, label);
  }
  std::vector<int> transposition(m), cycle(m);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
  return build_from_permutations({transposition, cycle}, label);
}

inline Group build_alternating(int m) {
  if (m < 3) throw std::invalid_argument("build_alternating: degree must be >= 3");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 2 < m; ++i) {
    std::vector<int> g(m);
    std::iota(g.begin(), g.end(), 0);
    g[i] = i + 1;
    g[i + 1] = i + 2;
    g[i + 2] = i;
    gens.push_back(std::move(g));
  }
  return build_from_permutations(gens, "A" + std::to_string(m));
}

inline Group direct_product(const Group& g, const Group& h) {
  std::int64_t n = static_cast<std::int64_t>(g.order()) * h.order();
  if (n > Group::kMaxOrder) throw std::length_error("direct_product: order exceeds cap");
  int nb = h.order();
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < g.order(); ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < g.order(); ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[static_cast<std::size_t>(a1 * nb + b1) * n + (a2 * nb + b2)] =
              g.mul(a1, a2) * nb + h.mul(b1, b2);
  return Group(std::move(t), g.label() + "x" + h.label());
}

// ---------------------------------------------------------------------------
// element and subgroup queries
// ---------------------------------------------------------------------------

inline int element_order(const Group& g, int x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("element_order: index out of range");
  int t = 1, c = x;
  while (c != 0) {
    c = g.mul(c, x);
    ++t;
  }
  return t;
}

/// Elements of ⟨x⟩, sorted ascending.
inline std::vector<int> cyclic_subgroup(const Group& g, int x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("cyclic_subgroup: index out of range");
  std::vector<int> elems{0};
  int c = x;
  while (c != 0) {
    elems.push_back(c);
    c = g.mul(c, x);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline std::vector<int> center(const Group& g) {
  std::vector<int> z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

inline std::vector<int> centralizer(const Group& g, int x) {
  std::vector<int> c;
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.push_back(y);
  return c;
}

inline bool is_abelian(const Group& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

struct SpectrumInfo {
  std::vector<std::uint64_t> pi_e;        // sorted set of element orders
  std::vector<std::uint64_t> mu;          // maximal members of pi_e under divisibility
  std::map<std::uint64_t, std::uint64_t> s;  // order → number of elements of that order
  std::vector<std::uint64_t> pi;          // primes dividing the group order
};

inline SpectrumInfo spectrum(const Group& g) {
  SpectrumInfo info;
  for (int x = 0; x < g.order(); ++x)
    ++info.s[static_cast<std::uint64_t>(element_order(g, x))];
  for (const auto& [n, count] : info.s) info.pi_e.push_back(n);
  for (std::uint64_t m : info.pi_e) {
    bool maximal = true;
    for (std::uint64_t n : info.pi_e)
      if (n != m && n % m == 0) {
        maximal = false;
        break;
      }
    if (maximal) info.mu.push_back(m);
  }
  info.pi = prime_divisors(static_cast<std::uint64_t>(g.order()));
  return info;
}

inline std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (int x = 0; x < g.order(); ++x)
    e = std::lcm(e, static_cast<std::uint64_t>(element_order(g, x)));
  return e;
}

inline bool is_cyclic(const Group& g) {
  for (int x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

/// Every non-trivial element order is a prime power.
inline bool is_eppo(const Group& g) {
  for (int x = 1; x < g.order(); ++x)
    if (!is_prime_power(static_cast<std::uint64_t>(element_order(g, x)))) return false;
  return true;
}

/// Every non-trivial element order is prime.
inline bool is_epo(const Group& g) {
  for (int x = 1; x < g.order(); ++x)
    if (!is_prime(static_cast<std::uint64_t>(element_order(g, x)))) return false;
  return true;
}

/// Number of subgroups of order p, i.e. s(p)/(p−1). Zero when p ∤ |G|.
inline int count_order_p_subgroups(const Group& g, int p) {
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("count_order_p_subgroups: p must be prime");
  if (g.order() % p != 0) return 0;
  int count = 0;
  for (int x = 1; x < g.order(); ++x)
    if (element_order(g, x) == p) ++count;
  return count / (p - 1);
}

/// Structural test against the presentation ⟨x, y | x^{2m} = 1, y² = x^m,
/// y⁻¹xy = x⁻¹⟩ with |G| = 4m, m ≥ 2.
inline bool is_generalized_quaternion(const Group& g) {
  int n = g.order();
  if (n < 8 || n % 4 != 0) return false;
  int m = n / 4;
  for (int x = 0; x < n; ++x) {
    if (element_order(g, x) != 2 * m) continue;
    std::vector<char> in_x(n, 0);
    for (int e : cyclic_subgroup(g, x)) in_x[e] = 1;
    int xm = g.power(x, static_cast<std::uint64_t>(m));
    int xinv = g.inverse(x);
    for (int y = 0; y < n; ++y) {
      if (in_x[y]) continue;
      if (g.mul(y, y) == xm && g.mul(g.inverse(y), g.mul(x, y)) == xinv) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Cayley-table serialization
// ---------------------------------------------------------------------------

/// Format: optional `# label: ...` comment lines, then the order n, then n
/// rows of n zero-based indices. The identity may sit at any index in the
/// input; the loaded group is relabeled so it lands at 0.
inline Group load_cayley_table(std::istream& in) {
  std::string label;
  std::string line;
  int n = -1;
  std::vector<std::uint16_t> table;
  std::size_t rows_read = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::string comment = line.substr(first + 1);
      std::size_t pos = comment.find("label:");
      if (pos != std::string::npos && label.empty()) {
        label = comment.substr(pos + 6);
        std::size_t b = label.find_first_not_of(" \t");
        label = b == std::string::npos ? "" : label.substr(b);
      }
      continue;
    }
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 1)
        throw CayleyTableError(TableErrorKind::MalformedInput,
                               "expected a positive order on the first line");
      if (n > Group::kMaxOrder)
        throw CayleyTableError(TableErrorKind::Oversize,
                               "order " + std::to_string(n) + " exceeds cap " +
                                   std::to_string(Group::kMaxOrder));
      std::string rest;
      if (ls >> rest)
        throw CayleyTableError(TableErrorKind::MalformedInput,
                               "unexpected token after order: " + rest);
      table.reserve(static_cast<std::size_t>(n) * n);
      continue;
    }
    if (rows_read == static_cast<std::size_t>(n))
      throw CayleyTableError(TableErrorKind::MalformedInput, "more rows than the stated order");
    int count = 0, v;
    while (ls >> v) {
      if (v < 0 || v >= n)
        throw CayleyTableError(TableErrorKind::MalformedInput,
                               "row " + std::to_string(rows_read) + ": entry " +
                                   std::to_string(v) + " out of range");
      table.push_back(static_cast<std::uint16_t>(v));
      ++count;
    }
    if (!ls.eof())
      throw CayleyTableError(TableErrorKind::MalformedInput,
                             "row " + std::to_string(rows_read) + ": non-numeric token");
    if (count != n)
      throw CayleyTableError(TableErrorKind::MalformedInput,
                             "row " + std::to_string(rows_read) + ": expected " +
                                 std::to_string(n) + " entries, got " + std::to_string(count));
    ++rows_read;
  }
  if (n < 0)
    throw CayleyTableError(TableErrorKind::MalformedInput, "empty input");
  if (rows_read != static_cast<std::size_t>(n))
    throw CayleyTableError(TableErrorKind::MalformedInput,
                           "expected " + std::to_string(n) + " rows, got " +
                               std::to_string(rows_read));

  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };

  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      if (seen[at(r, c)])
        throw CayleyTableError(TableErrorKind::NotLatinSquare,
                               "row " + std::to_string(r) + " repeats entry " +
                                   std::to_string(at(r, c)));
      seen[at(r, c)] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      if (seen[at(r, c)])
        throw CayleyTableError(TableErrorKind::NotLatinSquare,
                               "column " + std::to_string(c) + " repeats entry " +
                                   std::to_string(at(r, c)));
      seen[at(r, c)] = 1;
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0)
    throw CayleyTableError(TableErrorKind::MissingIdentity, "no two-sided identity element");

  std::vector<std::uint16_t> relabeled(table.size());
  auto rho = [identity](int v) { return v == identity ? 0 : (v == 0 ? identity : v); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      relabeled[static_cast<std::size_t>(rho(a)) * n + rho(b)] =
          static_cast<std::uint16_t>(rho(at(a, b)));

  // associativity before Group construction so the error kind is reported
  // even when the raw table is a non-associative loop
  auto rt = [&](int a, int b) { return relabeled[static_cast<std::size_t>(a) * n + b]; };
  auto check = [&](int a, int b, int c) {
    if (rt(rt(a, b), c) != rt(a, rt(b, c)))
      throw CayleyTableError(TableErrorKind::NotAssociative,
                             "associativity fails at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  if (n <= Group::kFullValidationLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i) check(pick(rng), pick(rng), pick(rng));
    for (int x = 0; x < n; ++x) {
      int right = -1;
      for (int y = 0; y < n; ++y)
        if (rt(x, y) == 0) {
          right = y;
          break;
        }
      if (right < 0 || rt(right, x) != 0)
        throw CayleyTableError(TableErrorKind::NotAssociative,
                               "left and right inverses differ at " + std::to_string(x));
    }
  }

  if (label.empty()) label = "G" + std::to_string(n);
  return Group(std::move(relabeled), label);
}

inline void save_cayley_table(const Group& g, std::ostream& out) {
  out << "# label: " << g.label() << "\n" << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << "\n";
  }
}

}  // namespace pgraph
