#include "doctest.h"

#include <algorithm>

#include "cattool/constructions.hpp"
#include "cattool/error.hpp"
#include "cattool/queries.hpp"
#include "support/fixtures.hpp"

using namespace cattool;
namespace ct = cattool::testing;

namespace {

// Number of pairs x <= y in the reflexive-transitive closure, by Warshall.
std::size_t order_pairs(const PreorderPresentation& p) {
  const std::size_t n = p.elements.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  auto idx = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(p.elements.begin(), p.elements.end(), s) - p.elements.begin());
  };
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [a, b] : p.leq) r[idx(a)][idx(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] || (r[i][k] && r[k][j]);
  std::size_t count = 0;
  for (const auto& row : r)
    for (bool b : row) count += b;
  return count;
}

std::size_t brute_force_isos(const FinCat& c) {
  std::size_t n = 0;
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g : c.hom(c.cod(f), c.dom(f)))
      if (c.compose(f, g) == c.identity(c.dom(f)) && c.compose(g, f) == c.identity(c.cod(f))) {
        ++n;
        break;
      }
  return n;
}

}  // namespace

TEST_CASE("interval category") {
  FinCat c = from_preorder(ct::chain(2));
  CHECK(c.morphism_count() == 3);
  CHECK(check_laws(c).passed());
}

TEST_CASE("chain 0 <= 1 <= 2 has six morphisms") {
  auto p = ct::chain(3);
  FinCat c = from_preorder(p);
  CHECK(c.morphism_count() == order_pairs(p));
  CHECK(c.morphism_count() == 6);
  CHECK(c.find_morphism("0<=2"));
  CHECK(c.find_morphism("id_1"));
}

TEST_CASE("preorder closure matches Warshall on every poset of size 4") {
  for (const auto& leq : enumerate_posets(4)) {
    auto p = ct::preorder_from_matrix(leq);
    CHECK(from_preorder(p).morphism_count() == order_pairs(p));
  }
  CHECK(enumerate_posets(3).size() == 19);
  CHECK(enumerate_posets(4).size() == 219);
}

TEST_CASE("truth values poset") {
  FinCat c = from_preorder(ct::chain(2));
  CHECK(c.hom(c.object_id("0"), c.object_id("1")).size() == 1);
  CHECK(c.hom(c.object_id("1"), c.object_id("0")).empty());
  CHECK(check_antisymmetry(c).passed());
  CHECK(check_antisymmetry(from_preorder(ct::clique(2))).status == Status::fail);
}

TEST_CASE("undeclared preorder element") {
  PreorderPresentation p{{"a"}, {{"a", "b"}}};
  CHECK_THROWS_AS(from_preorder(p), ConstructionError);
}

TEST_CASE("monoid categories") {
  FinCat z3 = from_monoid(monoid_zn(3));
  CHECK(z3.object_count() == 1);
  CHECK(z3.morphism_count() == 3);
  CHECK(brute_force_isos(z3) == 3);
  FinCat band = from_monoid(monoid_bool_and());
  CHECK(brute_force_isos(band) == 1);
  CHECK(band.is_identity(*band.find_morphism("1")));
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& m : ct::all_monoids(n)) CHECK(check_laws(from_monoid(m)).passed());
  CHECK(ct::all_monoids(2).size() == 2);
}

TEST_CASE("monoid validation names the failing axiom") {
  FiniteMonoid m{{"e", "a"}, 0, {{0, 1}, {1, 0}}};
  CHECK_NOTHROW(m.validate());
  m.table[0][1] = 0;
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("unit law"), ConstructionError);
  FiniteMonoid n{{"e", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 1}, {2, 0, 0}}};
  CHECK_THROWS_WITH_AS(n.validate(), doctest::Contains("associativity"), ConstructionError);
  CHECK_THROWS_AS(builtin_monoid("z0"), LookupError);
  CHECK_THROWS_AS(builtin_monoid("nope"), LookupError);
  CHECK(builtin_monoid("z5").size() == 5);
}

TEST_CASE("graph with edges y->x, y->z, z->w") {
  GraphPresentation g;
  g.nodes = {"x", "y", "z", "w"};
  g.edges = {{"f", "y", "x"}, {"g", "y", "z"}, {"h", "z", "w"}};
  FinCat c = from_graph(g);
  auto yw = c.hom(c.object_id("y"), c.object_id("w"));
  REQUIRE(yw.size() == 1);
  CHECK(c.morphism_name(yw[0]) == "g;h");
  CHECK(c.hom(c.object_id("w"), c.object_id("x")).empty());
  CHECK(check_laws(c).passed());
}

TEST_CASE("single node graph is the terminal category") {
  GraphPresentation g;
  g.nodes = {"v"};
  FinCat c = from_graph(g);
  CHECK(c.morphism_count() == 1);
}

TEST_CASE("cyclic graphs") {
  GraphPresentation g;
  g.nodes = {"x", "y"};
  g.edges = {{"f", "x", "y"}, {"g", "y", "x"}};
  CHECK_THROWS_AS(from_graph(g), InfiniteCategoryError);
  g.max_path_len = 3;
  FinCat c = from_graph(g);
  CHECK(c.truncated());
  std::vector<std::string> names;
  for (MorId m : c.hom(c.object_id("x"), c.object_id("x"))) names.push_back(c.morphism_name(m));
  CHECK(names == std::vector<std::string>{"id_x", "f;g"});
  CHECK(check_laws(c).status == Status::error);
}

TEST_CASE("opposite category") {
  FinCat c = from_preorder(ct::chain(3));
  FinCat op = opposite(c);
  CHECK(check_laws(op).passed());
  CHECK(op.hom(op.object_id("2"), op.object_id("0")).size() == 1);
  auto t = find_universal(c, UniversalKind::terminal);
  auto i = find_universal(op, UniversalKind::initial);
  CHECK(c.object_name(t.objects.at(0)) == op.object_name(i.objects.at(0)));
  FinCat back = opposite(op);
  CHECK(back.morphism_count() == c.morphism_count());
  CHECK(back.find_morphism("0<=2"));
}

TEST_CASE("product of two intervals is the commuting square") {
  FinCat i = from_preorder(ct::chain(2));
  FinCat sq = product_category(i, i);
  CHECK(sq.object_count() == 4);
  CHECK(sq.morphism_count() == 9);
  CHECK(check_laws(sq).passed());
}

TEST_CASE("universe families") {
  FinCat ps = universe_category(UniverseKind::finptset, 2);
  auto init = find_universal(ps, UniversalKind::initial);
  REQUIRE(init.objects.size() == 1);
  CHECK(ps.concrete()->carriers.at(init.objects[0]).size() == 1);

  FinCat pos = universe_category(UniverseKind::finpos, 2);
  ObjId c2 = pos.object_id("P2{0<1}");
  CHECK(pos.hom(c2, c2).size() == 3);

  FinCat fs = universe_category(UniverseKind::finset, 2);
  CHECK(fs.object_count() == 5);
  CHECK(check_laws(fs).passed());
  CHECK(check_laws(universe_category(UniverseKind::finord, 3)).passed());
  CHECK_THROWS_AS(universe_category(UniverseKind::finpos, 4), SizeLimitError);
  CHECK_THROWS_AS(universe_category(UniverseKind::finset, 5), SizeLimitError);
  CHECK(parse_universe_kind("finpos") == UniverseKind::finpos);
  CHECK_THROWS(parse_universe_kind("grp"));
}
