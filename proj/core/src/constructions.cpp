#include "cattool/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "cattool/error.hpp"

namespace cattool {

namespace {

std::unordered_map<std::string, std::size_t> index_names(const std::vector<std::string>& names,
                                                          const std::string& what) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], i).second)
      throw ConstructionError("duplicate " + what + " '" + names[i] + "'");
  return idx;
}

std::string table_string(const std::vector<std::size_t>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + "]";
}

// Builds a concrete category from carriers and an admissibility test on
// function tables. Every admissible function between every ordered pair of
// objects becomes a morphism; composition is table composition.
FinCat concrete_category(const std::string& family, const std::vector<std::string>& names,
                         const std::vector<FinSet>& carriers,
                         const std::function<bool(std::size_t, std::size_t, const FinFun&)>& admit) {
  FinCat::Builder b;
  b.set_family(family);
  const std::size_t n = names.size();
  for (const auto& name : names) b.add_object(name);
  Concrete concrete;
  concrete.carriers = carriers;
  // by_table[x * n + y] maps function_index to the morphism id.
  std::vector<std::unordered_map<std::size_t, MorId>> by_table(n * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for_each_function(carriers[x], carriers[y], [&](const FinFun& f) {
        if (!admit(x, y, f)) return true;
        MorId id = b.add_morphism(names[x] + "->" + names[y] + ":" + table_string(f.table()), x, y);
        by_table[x * n + y].emplace(function_index(f), id);
        concrete.functions.push_back(f);
        if (x == y && f == FinFun::identity(carriers[x])) b.set_identity(x, id);
        return true;
      });
  std::vector<std::size_t> dom_of, cod_of;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      dom_of.insert(dom_of.end(), by_table[x * n + y].size(), x);
      cod_of.insert(cod_of.end(), by_table[x * n + y].size(), y);
    }
  const auto& funs = concrete.functions;
  b.set_rule([&](MorId f, MorId g) -> std::optional<MorId> {
    const auto& m = by_table[dom_of[f] * n + cod_of[g]];
    auto it = m.find(function_index(compose(funs[f], funs[g])));
    if (it == m.end()) return std::nullopt;
    return it->second;
  });
  b.set_concrete(concrete);
  return b.build();
}

}  // namespace

void FiniteMonoid::validate() const {
  const std::size_t n = elements.size();
  index_names(elements, "monoid element");
  if (n == 0) throw ConstructionError("monoid must have at least one element (the unit)");
  if (unit >= n) throw ConstructionError("monoid unit is not an element");
  if (table.size() != n) throw ConstructionError("multiplication table must have one row per element");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw ConstructionError("multiplication table row '" + elements[a] + "' is not total");
    for (std::size_t v : table[a])
      if (v >= n) throw ConstructionError("multiplication table entry outside the carrier");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(unit, a) != a)
      throw ConstructionError("left unit law fails: e*" + elements[a] + " = " +
                              elements[mul(unit, a)]);
    if (mul(a, unit) != a)
      throw ConstructionError("right unit law fails: " + elements[a] + "*e = " +
                              elements[mul(a, unit)]);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ConstructionError("associativity fails at (" + elements[a] + ", " + elements[b] +
                                  ", " + elements[c] + ")");
}

FiniteMonoid monoid_zn(std::size_t n) {
  if (n == 0) throw ConstructionError("Z/0 is not finite");
  FiniteMonoid m;
  for (std::size_t i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
  m.unit = 0;
  m.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table[a][b] = (a + b) % n;
  return m;
}

FiniteMonoid monoid_trivial() { return monoid_zn(1); }

FiniteMonoid monoid_bool_and() {
  return FiniteMonoid{{"0", "1"}, 1, {{0, 0}, {0, 1}}};
}

FiniteMonoid monoid_bool_or() {
  return FiniteMonoid{{"0", "1"}, 0, {{0, 1}, {1, 1}}};
}

FiniteMonoid opposite_monoid(const FiniteMonoid& m) {
  FiniteMonoid op = m;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) op.table[a][b] = m.table[b][a];
  return op;
}

FiniteMonoid builtin_monoid(const std::string& name) {
  if (name == "trivial") return monoid_trivial();
  if (name == "bool-and") return monoid_bool_and();
  if (name == "bool-or") return monoid_bool_or();
  if (name.size() > 1 && name[0] == 'z' &&
      std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    std::size_t n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 16) return monoid_zn(n);
  }
  throw LookupError("unknown monoid '" + name + "' (expected z<n>, trivial, bool-and, bool-or)");
}

FinCat from_preorder(const PreorderPresentation& p) {
  const std::size_t n = p.elements.size();
  auto idx = index_names(p.elements, "preorder element");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : p.leq) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end())
      throw ConstructionError("leq pair (" + a + ", " + b + ") names an undeclared element");
    leq[ia->second][ib->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;

  FinCat::Builder b;
  b.set_family("preorder");
  for (const auto& e : p.elements) b.add_object(e);
  std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n, FinCat::Builder::npos));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      std::string name = i == j ? "id_" + p.elements[i] : p.elements[i] + "<=" + p.elements[j];
      arrow[i][j] = b.add_morphism(name, i, j);
      if (i == j) b.set_identity(i, arrow[i][j]);
    }
  std::vector<std::pair<ObjId, ObjId>> ends;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) ends.emplace_back(i, j);
  b.set_rule([&](MorId f, MorId g) -> std::optional<MorId> {
    return arrow[ends[f].first][ends[g].second];
  });
  return b.build();
}

FinCat from_monoid(const FiniteMonoid& m) {
  m.validate();
  FinCat::Builder b;
  b.set_family("monoid");
  ObjId star = b.add_object("*");
  for (const auto& e : m.elements) b.add_morphism(e, star, star);
  b.set_identity(star, m.unit);
  b.set_rule([&m](MorId f, MorId g) -> std::optional<MorId> { return m.mul(f, g); });
  return b.build();
}

namespace {

bool has_cycle(std::size_t n, const std::vector<std::vector<std::size_t>>& succ,
               std::string* where, const std::vector<std::string>& names) {
  std::vector<int> state(n, 0);
  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (std::size_t w : succ[v]) {
      if (state[w] == 1) {
        *where = names[w];
        return true;
      }
      if (state[w] == 0 && visit(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == 0 && visit(v)) return true;
  return false;
}

}  // namespace

FinCat from_graph(const GraphPresentation& g) {
  const std::size_t n = g.nodes.size();
  auto node = index_names(g.nodes, "node");
  std::vector<std::string> edge_names;
  for (const auto& e : g.edges) edge_names.push_back(e.name);
  index_names(edge_names, "edge");
  std::vector<std::size_t> src, dst;
  std::vector<std::vector<std::size_t>> succ(n), out_edges(n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    auto s = node.find(e.src), d = node.find(e.dst);
    if (s == node.end() || d == node.end())
      throw ConstructionError("edge '" + e.name + "' has an undeclared endpoint");
    src.push_back(s->second);
    dst.push_back(d->second);
    succ[s->second].push_back(d->second);
    out_edges[s->second].push_back(i);
  }
  std::string cycle_at;
  bool cyclic = has_cycle(n, succ, &cycle_at, g.nodes);
  if (cyclic && !g.max_path_len)
    throw InfiniteCategoryError("infinite category: the graph has a cycle through '" + cycle_at +
                                "', so it has infinitely many paths (give max_path_len to "
                                "enumerate hom-sets up to a length)");
  // An acyclic graph has no path longer than n - 1 edges, so the bound is irrelevant there.
  const std::size_t bound = cyclic ? *g.max_path_len : n;

  FinCat::Builder b;
  b.set_family("graph");
  for (const auto& v : g.nodes) b.add_object(v);
  using Path = std::vector<std::size_t>;
  std::vector<Path> paths;
  std::vector<ObjId> path_src;
  std::map<std::pair<ObjId, Path>, MorId> by_path;
  auto add_path = [&](ObjId from, const Path& p) {
    ObjId to = p.empty() ? from : dst[p.back()];
    std::string name;
    if (p.empty()) {
      name = "id_" + g.nodes[from];
    } else {
      for (std::size_t k = 0; k < p.size(); ++k) name += (k ? ";" : "") + g.edges[p[k]].name;
    }
    MorId id = b.add_morphism(name, from, to);
    paths.push_back(p);
    path_src.push_back(from);
    by_path.emplace(std::make_pair(from, p), id);
    if (p.empty()) b.set_identity(from, id);
  };
  // Breadth-first by length from each node, so shorter paths come first.
  for (ObjId v = 0; v < n; ++v) {
    std::vector<Path> frontier{Path{}};
    add_path(v, Path{});
    for (std::size_t len = 1; len <= bound && !frontier.empty(); ++len) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        ObjId at = p.empty() ? v : dst[p.back()];
        for (std::size_t e : out_edges[at]) {
          Path q = p;
          q.push_back(e);
          add_path(v, q);
          next.push_back(std::move(q));
        }
      }
      require_within(static_cast<double>(b.morphism_count()),
                     static_cast<double>(search_limit()), "graph path enumeration");
      frontier = std::move(next);
    }
  }
  if (cyclic) b.mark_truncated();
  b.set_rule([&](MorId f, MorId h) -> std::optional<MorId> {
    Path p = paths[f];
    p.insert(p.end(), paths[h].begin(), paths[h].end());
    auto it = by_path.find({path_src[f], p});
    if (it == by_path.end()) return std::nullopt;
    return it->second;
  });
  return b.build();
}

FinCat opposite(const FinCat& c) {
  static const std::string suffix = "^op";
  FinCat::Builder b;
  b.set_family(c.family().empty() ? "opposite" : c.family() + "^op");
  for (ObjId x = 0; x < c.object_count(); ++x) b.add_object(c.object_name(x));
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    std::string name = c.morphism_name(f);
    if (name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
      name.erase(name.size() - suffix.size());
    else
      name += suffix;
    b.add_morphism(name, c.cod(f), c.dom(f));
  }
  for (ObjId x = 0; x < c.object_count(); ++x) b.set_identity(x, c.identity(x));
  if (c.truncated()) b.mark_truncated();
  b.set_rule([&c](MorId f, MorId g) -> std::optional<MorId> {
    try {
      return c.compose(g, f);
    } catch (const InfiniteCategoryError&) {
      return std::nullopt;
    }
  });
  return b.build();
}

FinCat product_category(const FinCat& c, const FinCat& d) {
  c.require_complete("product_category");
  d.require_complete("product_category");
  const std::size_t nd = d.object_count();
  const std::size_t md = d.morphism_count();
  require_within(static_cast<double>(c.morphism_count()) * static_cast<double>(md),
                 static_cast<double>(search_limit()), "product_category");
  FinCat::Builder b;
  b.set_family("product");
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = 0; y < nd; ++y)
      b.add_object("(" + c.object_name(x) + "," + d.object_name(y) + ")");
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g = 0; g < md; ++g)
      b.add_morphism("(" + c.morphism_name(f) + "," + d.morphism_name(g) + ")",
                     c.dom(f) * nd + d.dom(g), c.cod(f) * nd + d.cod(g));
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = 0; y < nd; ++y) b.set_identity(x * nd + y, c.identity(x) * md + d.identity(y));
  b.set_rule([&c, &d, md](MorId p, MorId q) -> std::optional<MorId> {
    return c.compose(p / md, q / md) * md + d.compose(p % md, q % md);
  });
  return b.build();
}

UniverseKind parse_universe_kind(const std::string& name) {
  if (name == "finset") return UniverseKind::finset;
  if (name == "finord") return UniverseKind::finord;
  if (name == "finptset") return UniverseKind::finptset;
  if (name == "finpos") return UniverseKind::finpos;
  throw LookupError("unknown universe family '" + name +
                    "' (expected finset, finord, finptset or finpos)");
}

const char* to_string(UniverseKind k) {
  switch (k) {
    case UniverseKind::finset:
      return "finset";
    case UniverseKind::finord:
      return "finord";
    case UniverseKind::finptset:
      return "finptset";
    case UniverseKind::finpos:
      return "finpos";
  }
  return "?";
}

std::vector<std::vector<std::vector<bool>>> enumerate_posets(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::vector<bool>>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> r(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) r[i][i] = true;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (mask >> t & 1) r[pairs[t].first][pairs[t].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (i != j && r[i][j] && r[j][i]) ok = false;
        for (std::size_t l = 0; l < k && ok; ++l)
          if (r[i][j] && r[j][l] && !r[i][l]) ok = false;
      }
    if (ok) out.push_back(std::move(r));
  }
  return out;
}

FinCat universe_category(UniverseKind kind, std::size_t n) {
  const std::size_t bound = kind == UniverseKind::finpos ? 3 : 4;
  if (n > bound)
    throw SizeLimitError("size limit exceeded: universe_category(" + std::string(to_string(kind)) +
                         ") supports n <= " + std::to_string(bound));
  std::vector<std::string> names;
  std::vector<FinSet> carriers;
  auto labeled = [](std::size_t k, char tag) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::string(1, tag) + std::to_string(i));
    return FinSet(k, labels);
  };
  switch (kind) {
    case UniverseKind::finset: {
      names.push_back("0");
      carriers.emplace_back(0);
      for (std::size_t k = 1; k <= n; ++k)
        for (char tag : {'a', 'b'}) {
          names.push_back(std::to_string(k) + tag);
          carriers.push_back(labeled(k, tag));
        }
      return concrete_category("finset", names, carriers,
                               [](std::size_t, std::size_t, const FinFun&) { return true; });
    }
    case UniverseKind::finord: {
      for (std::size_t k = 0; k <= n; ++k) {
        names.push_back("[" + std::to_string(k) + "]");
        carriers.emplace_back(k);
      }
      return concrete_category("finord", names, carriers,
                               [](std::size_t, std::size_t, const FinFun&) { return true; });
    }
    case UniverseKind::finptset: {
      // Point is element 0.
      for (std::size_t k = 1; k <= n; ++k) {
        names.push_back("p" + std::to_string(k));
        carriers.emplace_back(k);
      }
      return concrete_category("finptset", names, carriers,
                               [](std::size_t, std::size_t, const FinFun& f) { return f(0) == 0; });
    }
    case UniverseKind::finpos: {
      std::vector<std::vector<std::vector<bool>>> orders;
      for (std::size_t k = 0; k <= n; ++k)
        for (auto& r : enumerate_posets(k)) {
          std::string name = "P" + std::to_string(k) + "{";
          bool first = true;
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
              if (i != j && r[i][j]) {
                name += (first ? "" : ",") + std::to_string(i) + "<" + std::to_string(j);
                first = false;
              }
          names.push_back(name + "}");
          carriers.emplace_back(k);
          orders.push_back(std::move(r));
        }
      return concrete_category("finpos", names, carriers,
                               [&orders](std::size_t x, std::size_t y, const FinFun& f) {
                                 const auto& rx = orders[x];
                                 const auto& ry = orders[y];
                                 for (std::size_t i = 0; i < rx.size(); ++i)
                                   for (std::size_t j = 0; j < rx.size(); ++j)
                                     if (rx[i][j] && !ry[f(i)][f(j)]) return false;
                                 return true;
                               });
    }
  }
  throw LookupError("unknown universe family");
}

}  // namespace cattool
