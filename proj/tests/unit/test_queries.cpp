#include "doctest.h"

#include "cattool/constructions.hpp"
#include "cattool/error.hpp"
#include "cattool/finset.hpp"
#include "cattool/queries.hpp"
#include "support/fixtures.hpp"

using namespace cattool;
namespace ct = cattool::testing;

namespace {

const FinFun& fn_of(const FinCat& c, MorId f) { return c.concrete()->functions.at(f); }
std::size_t size_of(const FinCat& c, ObjId x) { return c.concrete()->carriers.at(x).size(); }

FinCat discrete2() {
  FinCat::Builder b;
  ObjId x = b.add_object("x"), y = b.add_object("y");
  b.set_identity(x, b.add_morphism("id_x", x, x));
  b.set_identity(y, b.add_morphism("id_y", y, y));
  b.set_rule([](MorId f, MorId) { return std::optional<MorId>(f); });
  return b.build();
}

}  // namespace

TEST_CASE("injective non-surjective map in finset(3)") {
  FinCat c = universe_category(UniverseKind::finset, 3);
  MorId f = c.morphism_id("2a->3a:[0,2]");
  CHECK(fn_of(c, f).injective());
  auto k = classify(c, f);
  CHECK(k.is_mono);
  CHECK_FALSE(k.is_epi);
  CHECK_FALSE(k.is_iso);
  CHECK_FALSE(k.retractions_of.empty());
  CHECK(k.epi_witness);
  CHECK(check_set_characterizations(c).passed());
}

TEST_CASE("truth values: mono and epi but not iso") {
  FinCat c = from_preorder(ct::chain(2));
  auto k = classify(c, c.morphism_id("0<=1"));
  CHECK(k.is_mono);
  CHECK(k.is_epi);
  CHECK_FALSE(k.is_iso);
  CHECK(check_classification_laws(c).passed());
}

TEST_CASE("classification laws hold in several categories") {
  CHECK(check_classification_laws(universe_category(UniverseKind::finset, 2)).passed());
  CHECK(check_classification_laws(from_monoid(ct::full_transformation_monoid(2))).passed());
  CHECK(check_classification_laws(universe_category(UniverseKind::finpos, 2)).passed());
}

TEST_CASE("initial and terminal in finset(2)") {
  FinCat c = universe_category(UniverseKind::finset, 2);
  auto i = find_universal(c, UniversalKind::initial);
  REQUIRE(i.objects.size() == 1);
  CHECK(size_of(c, i.objects[0]) == 0);
  auto t = find_universal(c, UniversalKind::terminal);
  REQUIRE(t.objects.size() == 2);
  for (ObjId x : t.objects) CHECK(size_of(c, x) == 1);
  CHECK(check_universal_uniqueness(c, UniversalKind::terminal, t).passed());
}

TEST_CASE("two-object discrete category has neither") {
  FinCat c = discrete2();
  CHECK(find_universal(c, UniversalKind::initial).objects.empty());
  CHECK(find_universal(c, UniversalKind::terminal).objects.empty());
}

TEST_CASE("products in preorders are meets") {
  FinCat lat = from_preorder({{"bot", "l", "r", "top"}, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}}});
  auto w = find_binary(lat, BinaryKind::product, lat.object_id("l"), lat.object_id("r"));
  REQUIRE(w.cones.size() == 1);
  CHECK(lat.object_name(w.cones[0].apex) == "bot");
  auto s = find_binary(lat, BinaryKind::coproduct, lat.object_id("l"), lat.object_id("r"));
  REQUIRE(s.cones.size() == 1);
  CHECK(lat.object_name(s.cones[0].apex) == "top");

  FinCat ch = from_preorder(ct::chain(4));
  auto m = find_binary(ch, BinaryKind::product, ch.object_id("1"), ch.object_id("3"));
  REQUIRE(m.cones.size() == 1);
  CHECK(ch.object_name(m.cones[0].apex) == "1");
}

TEST_CASE("bowtie preorder has no product of A and B") {
  FinCat c = from_preorder(ct::bowtie());
  auto w = find_binary(c, BinaryKind::product, c.object_id("A"), c.object_id("B"));
  CHECK(w.cones.empty());
  CHECK(w.tested.size() == 2);
  ChosenProducts p(c);
  CHECK_THROWS_AS(p.product(c.object_id("A"), c.object_id("B")), LookupError);
}

TEST_CASE("finset products and coproducts have the expected size") {
  FinCat c = universe_category(UniverseKind::finset, 4);
  ObjId a = c.object_id("2a"), b = c.object_id("2b");
  auto w = find_binary(c, BinaryKind::product, a, b);
  REQUIRE_FALSE(w.cones.empty());
  for (const auto& k : w.cones) CHECK(size_of(c, k.apex) == 4);
  CHECK(check_binary_uniqueness(c, BinaryKind::product, a, b, w).passed());
  auto s = find_binary(c, BinaryKind::coproduct, c.object_id("1a"), c.object_id("3a"));
  REQUIRE_FALSE(s.cones.empty());
  for (const auto& k : s.cones) CHECK(size_of(c, k.apex) == 4);

  ConeCategory cones(c, BinaryKind::product, a, b);
  CHECK(cones.cones().size() == w.tested.size());
  CHECK(cones.describe(w.cones[0]).front() == '(');
}

TEST_CASE("product of morphisms acts componentwise") {
  FinCat c = universe_category(UniverseKind::finset, 4);
  ChosenProducts p(c);
  ObjId a = c.object_id("2a"), b = c.object_id("2b");
  const Cone& ab = p.product(a, b);
  for (MorId f : c.hom(a, a))
    for (MorId g : c.hom(b, b)) {
      MorId fg = product_of_morphisms(p, f, g);
      const FinFun& m = fn_of(c, fg);
      const FinFun& pl = fn_of(c, ab.left);
      const FinFun& pr = fn_of(c, ab.right);
      for (std::size_t x = 0; x < 4; ++x) {
        CHECK(pl(m(x)) == fn_of(c, f)(pl(x)));
        CHECK(pr(m(x)) == fn_of(c, g)(pr(x)));
      }
    }
}

TEST_CASE("product of morphisms is functorial") {
  FinCat c = universe_category(UniverseKind::finset, 4);
  ChosenProducts p(c);
  ObjId a = c.object_id("2a"), b = c.object_id("2b");
  for (MorId f : c.hom(a, a))
    for (MorId g : c.hom(b, b))
      for (MorId h : c.hom(a, a))
        for (MorId k : c.hom(b, b))
          CHECK(c.compose(product_of_morphisms(p, f, g), product_of_morphisms(p, h, k)) ==
                product_of_morphisms(p, c.compose(f, h), c.compose(g, k)));
}

TEST_CASE("swap") {
  // Sizes 2 and 3: the transpose permutation of six elements.
  Product p23(FinSet(2), FinSet(3)), p32(FinSet(3), FinSet(2));
  FinFun swap = p32.pairing(p23.cone().proj_r, p23.cone().proj_l);
  FinFun back = p23.pairing(p32.cone().proj_r, p32.cone().proj_l);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(swap(i * 3 + j) == j * 2 + i);
  CHECK(compose(swap, back) == FinFun::identity(p23.obj()));

  FinCat c = universe_category(UniverseKind::finset, 4);
  ChosenProducts cp(c);
  ObjId a = c.object_id("2a"), b = c.object_id("2b");
  MorId s = swap_iso(cp, a, b), t = swap_iso(cp, b, a);
  CHECK(c.compose(s, t) == c.identity(cp.product(a, b).apex));
}
