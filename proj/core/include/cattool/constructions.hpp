#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cattool/fincat.hpp"

namespace cattool {

struct PreorderPresentation {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
};

// Elements are indices; table[a][b] is the product a then b.
struct FiniteMonoid {
  std::vector<std::string> elements;
  std::size_t unit = 0;
  std::vector<std::vector<std::size_t>> table;

  std::size_t size() const { return elements.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  /// Throws ConstructionError naming the first failed axiom.
  void validate() const;
};

FiniteMonoid monoid_zn(std::size_t n);
FiniteMonoid monoid_trivial();
FiniteMonoid monoid_bool_and();
FiniteMonoid monoid_bool_or();
/// Same elements, a*b := b*a.
FiniteMonoid opposite_monoid(const FiniteMonoid& m);
/// Looks up z2, z3, ..., trivial, bool-and, bool-or.
FiniteMonoid builtin_monoid(const std::string& name);

struct GraphEdge {
  std::string name;
  std::string src;
  std::string dst;
};

struct GraphPresentation {
  std::vector<std::string> nodes;
  std::vector<GraphEdge> edges;
  std::optional<std::size_t> max_path_len;
};

/// Hom(x, y) has one morphism "x<=y" when x <= y in the reflexive-transitive closure.
FinCat from_preorder(const PreorderPresentation& p);

/// One object "*"; morphisms are the elements, composition is multiplication.
FinCat from_monoid(const FiniteMonoid& m);

/// Free category on a graph: paths, named "e1;e2;...", identities "id_x".
/// Cyclic graphs need max_path_len and give a truncated category.
FinCat from_graph(const GraphPresentation& g);

/// Reversed arrows. Morphism names gain or lose a trailing "^op".
FinCat opposite(const FinCat& c);

/// Objects "(x,y)", morphisms "(f,g)", componentwise composition.
FinCat product_category(const FinCat& c, const FinCat& d);

enum class UniverseKind { finset, finord, finptset, finpos };

UniverseKind parse_universe_kind(const std::string& name);
const char* to_string(UniverseKind k);

// Sizes up to n (n <= 4, or n <= 3 for finpos), with all structure-preserving
// functions. finset carries two labeled copies of every nonempty size.
FinCat universe_category(UniverseKind kind, std::size_t n);

/// All partial orders on {0, ..., k-1}, as leq matrices, in a fixed order.
std::vector<std::vector<std::vector<bool>>> enumerate_posets(std::size_t k);

}  // namespace cattool
