#pragma once

// Category and monoid families shared by the unit tests and the acceptance
// runner. Everything here is built from plain data, independent of the
// library's own enumeration helpers where that matters for an oracle.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "cattool/constructions.hpp"
#include "cattool/fincat.hpp"

namespace cattool::testing {

inline PreorderPresentation preorder_from_matrix(const std::vector<std::vector<bool>>& leq) {
  PreorderPresentation p;
  for (std::size_t i = 0; i < leq.size(); ++i) p.elements.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < leq.size(); ++i)
    for (std::size_t j = 0; j < leq.size(); ++j)
      if (i != j && leq[i][j]) p.leq.push_back({p.elements[i], p.elements[j]});
  return p;
}

inline PreorderPresentation chain(std::size_t n) {
  PreorderPresentation p;
  for (std::size_t i = 0; i < n; ++i) p.elements.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) p.leq.push_back({p.elements[i], p.elements[i + 1]});
  return p;
}

// X, Y below both A and B, X and Y incomparable.
inline PreorderPresentation bowtie() {
  return {{"X", "Y", "A", "B"}, {{"X", "A"}, {"X", "B"}, {"Y", "A"}, {"Y", "B"}}};
}

// Non-antisymmetric: a cycle of length n collapses to one clique.
inline PreorderPresentation clique(std::size_t n) {
  PreorderPresentation p;
  for (std::size_t i = 0; i < n; ++i) p.elements.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) p.leq.push_back({p.elements[i], p.elements[(i + 1) % n]});
  return p;
}

inline FiniteMonoid product_monoid(const FiniteMonoid& a, const FiniteMonoid& b) {
  FiniteMonoid m;
  const std::size_t nb = b.size();
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) m.elements.push_back("(" + x + "," + y + ")");
  m.unit = a.unit * nb + b.unit;
  m.table.assign(m.size(), std::vector<std::size_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      m.table[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  return m;
}

// All maps {0..n-1} -> {0..n-1} under diagrammatic composition.
inline FiniteMonoid full_transformation_monoid(std::size_t n) {
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> t(n, 0);
  while (true) {
    maps.push_back(t);
    std::size_t i = n;
    while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
    if (i == 0) break;
  }
  FiniteMonoid m;
  for (const auto& f : maps) {
    std::string s;
    for (std::size_t v : f) s += std::to_string(v);
    m.elements.push_back(s);
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    bool id = true;
    for (std::size_t x = 0; x < n; ++x) id = id && maps[i][x] == x;
    if (id) m.unit = i;
  }
  m.table.assign(maps.size(), std::vector<std::size_t>(maps.size()));
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = 0; j < maps.size(); ++j) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = maps[j][maps[i][x]];
      for (std::size_t k = 0; k < maps.size(); ++k)
        if (maps[k] == c) m.table[i][j] = k;
    }
  return m;
}

// ({0..n-1}, max, 0): a commutative idempotent monoid.
inline FiniteMonoid max_monoid(std::size_t n) {
  FiniteMonoid m;
  for (std::size_t i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
  m.unit = 0;
  m.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table[a][b] = std::max(a, b);
  return m;
}

// Left-zero semigroup {1..k} with an adjoined unit 0: a * b = a for a, b != 0.
inline FiniteMonoid left_zero_monoid(std::size_t k) {
  FiniteMonoid m;
  for (std::size_t i = 0; i <= k; ++i) m.elements.push_back(std::to_string(i));
  m.unit = 0;
  m.table.assign(k + 1, std::vector<std::size_t>(k + 1));
  for (std::size_t a = 0; a <= k; ++a)
    for (std::size_t b = 0; b <= k; ++b) m.table[a][b] = a == 0 ? b : a;
  return m;
}

// Every monoid structure on {0..n-1} with unit 0, by brute force over tables.
inline std::vector<FiniteMonoid> all_monoids(std::size_t n) {
  std::vector<FiniteMonoid> out;
  const std::size_t free = (n - 1) * (n - 1);
  std::vector<std::size_t> cells(free, 0);
  while (true) {
    FiniteMonoid m;
    for (std::size_t i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
    m.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      m.table[0][a] = a;
      m.table[a][0] = a;
    }
    for (std::size_t k = 0; k < free; ++k) m.table[1 + k / (n - 1)][1 + k % (n - 1)] = cells[k];
    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a)
      for (std::size_t b = 0; b < n && assoc; ++b)
        for (std::size_t c = 0; c < n && assoc; ++c)
          assoc = m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c));
    if (assoc) out.push_back(m);
    std::size_t i = free;
    while (i > 0 && ++cells[i - 1] == n) cells[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// Random acyclic multigraph: edges only go from lower to higher node index.
inline GraphPresentation random_dag(std::size_t nodes, std::size_t edges, std::mt19937_64& rng) {
  GraphPresentation g;
  for (std::size_t i = 0; i < nodes; ++i) g.nodes.push_back("v" + std::to_string(i));
  if (nodes < 2) return g;
  std::uniform_int_distribution<std::size_t> pick(0, nodes - 1);
  for (std::size_t e = 0; e < edges; ++e) {
    std::size_t a = pick(rng), b = pick(rng);
    while (a == b) b = pick(rng);
    if (a > b) std::swap(a, b);
    g.edges.push_back({"e" + std::to_string(e), g.nodes[a], g.nodes[b]});
  }
  return g;
}

// Every simple DAG on n nodes oriented by index.
inline std::vector<GraphPresentation> all_simple_dags(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.push_back({a, b});
  std::vector<GraphPresentation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    GraphPresentation g;
    for (std::size_t i = 0; i < n; ++i) g.nodes.push_back("v" + std::to_string(i));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1)
        g.edges.push_back({"e" + std::to_string(s), g.nodes[slots[s].first], g.nodes[slots[s].second]});
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cattool::testing
