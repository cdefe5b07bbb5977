#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "cattool/constructions.hpp"
#include "cattool/finset.hpp"
#include "cattool/functor.hpp"
#include "cattool/queries.hpp"
#include "cattool/set_functor.hpp"
#include "support/fixtures.hpp"

using namespace cattool;
namespace ct = cattool::testing;

namespace {

// Monotone maps from the n-chain to the m-chain: nondecreasing sequences.
std::size_t monotone_count(std::size_t n, std::size_t m) {
  std::vector<std::size_t> t(n, 0);
  std::size_t count = 0;
  for (std::size_t code = 0, total = static_cast<std::size_t>(std::pow(m, n)); code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= m) t[n - 1 - i] = c % m;
    count += std::is_sorted(t.begin(), t.end());
  }
  return count;
}

}  // namespace

TEST_CASE("identity and composite functors") {
  CatPtr c = share(from_preorder(ct::chain(3)));
  CHECK(check_functor(identity_functor(c)).passed());
  CatPtr d = share(from_preorder(ct::chain(2)));
  auto fs = enumerate_functors(d, c);
  auto gs = enumerate_functors(c, c);
  CHECK(fs.size() == monotone_count(2, 3));
  CHECK(gs.size() == monotone_count(3, 3));
  for (const auto& f : fs)
    for (const auto& g : gs) CHECK(check_functor(compose_functors(f, g)).passed());
  CHECK(same_functor(compose_functors(fs[0], identity_functor(c)), fs[0]));
}

TEST_CASE("functor law failure") {
  CatPtr z2 = share(from_monoid(monoid_zn(2)));
  CatPtr z3 = share(from_monoid(monoid_zn(3)));
  FunctorData f{z2, z3, {0}, {0, 1}};
  Report r = check_functor(f);
  CHECK(r.status == Status::fail);
  CHECK(r.find("preserves composition")->status == Status::fail);
  CHECK(enumerate_functors(z2, z3).size() == 1);
  CHECK(enumerate_functors(z3, z3).size() == 3);
}

TEST_CASE("set functors") {
  for (const char* name : {"list", "maybe", "times", "plus", "reader", "hom"})
    CHECK_MESSAGE(check_set_functor(builtin_set_functor(name, 2), 3).passed(), name);
  SetFunctor list = list_functor(3);
  // map(id) = id on all lists of length <= 3 over a 2-element set.
  FinFun id = FinFun::identity(FinSet(2));
  FinFun lid = list.on_morphisms(id);
  CHECK(lid.dom().size() == 15);
  CHECK(lid == FinFun::identity(lid.dom()));
  CHECK(enumerate_lists(2, 3).size() == 15);
  for (std::size_t i = 0; i < 15; ++i) CHECK(list_index(2, list_at(2, i)) == i);
}

TEST_CASE("times(A) is f x id_A") {
  SetFunctor t = times_functor(2);
  for (const auto& f : enumerate_functions(FinSet(2), FinSet(3)))
    CHECK(t.on_morphisms(f) == product_map(f, FinFun::identity(FinSet(2))));
}

TEST_CASE("hom functors on finite categories") {
  FinCat c = universe_category(UniverseKind::finset, 2);
  for (ObjId r = 0; r < c.object_count(); ++r) CHECK(check_hom_functor(c, r).passed());
  CHECK(check_hom_functor(from_preorder(ct::bowtie()), 0).passed());
}

TEST_CASE("natural transformations") {
  CatPtr i = share(from_preorder(ct::chain(2)));
  CatPtr c = share(from_preorder(ct::chain(3)));
  auto fs = enumerate_functors(i, c);
  for (const auto& f : fs) CHECK(check_naturality(identity_nat(f)).passed());
  auto fc = functor_category(i, i);
  CHECK(fc.category.object_count() == 3);
  CHECK(fc.category.morphism_count() == 6);
  CHECK(check_laws(fc.category).passed());
}

TEST_CASE("vertical and horizontal composition") {
  CatPtr i = share(from_preorder(ct::chain(2)));
  CatPtr c = share(from_monoid(ct::full_transformation_monoid(2)));
  auto fs = enumerate_functors(i, i);
  auto gs = enumerate_functors(i, i);
  std::size_t compared = 0;
  for (const auto& f : fs)
    for (const auto& g : fs)
      for (const auto& alpha : enumerate_nat(f, g))
        for (const auto& h : gs)
          for (const auto& k : gs)
            for (const auto& beta : enumerate_nat(h, k)) {
              NatTransData a = hcompose(alpha, beta), b = hcompose_alt(alpha, beta);
              CHECK(a.components == b.components);
              CHECK(check_naturality(a).passed());
              ++compared;
            }
  CHECK(compared > 0);
  auto es = enumerate_functors(c, c);
  for (const auto& f : es)
    for (const auto& a : enumerate_nat(f, f))
      for (const auto& b : enumerate_nat(f, f)) CHECK(check_naturality(vcompose(a, b)).passed());
}

TEST_CASE("naturality failure") {
  FinCat::Builder b;
  ObjId x = b.add_object("A"), y = b.add_object("B");
  MorId ia = b.add_morphism("id_A", x, x), ib = b.add_morphism("id_B", y, y);
  MorId f = b.add_morphism("f", x, y), g = b.add_morphism("g", x, y);
  b.set_identity(x, ia);
  b.set_identity(y, ib);
  b.set_rule([&](MorId p, MorId q) { return std::optional<MorId>(p == ia || p == ib ? q : p); });
  CatPtr par = share(b.build());
  CatPtr i = share(from_preorder(ct::chain(2)));
  FunctorData F{i, par, {x, y}, {ia, f, ib}}, G{i, par, {x, y}, {ia, g, ib}};
  REQUIRE(check_functor(F).passed());
  REQUIRE(check_functor(G).passed());
  NatTransData a{F, G, {ia, ib}};
  CHECK(check_naturality(a).status == Status::fail);
  CHECK(enumerate_nat(F, G).empty());
}

TEST_CASE("finset to finord") {
  FunctorData u2 = finset_to_finord(2);
  CHECK(check_functor(u2).passed());
  FunctorClassification k = classify_functor(finset_to_finord(3));
  CHECK_FALSE(k.injective_on_objects);
  CHECK(k.surjective_on_objects);
  CHECK(k.full);
  CHECK(k.faithful);
  CHECK(k.essentially_surjective);
  CHECK(k.is_equivalence);
  CHECK_FALSE(k.is_isomorphism);
  REQUIRE(k.equivalence);
  CHECK(check_functor(k.equivalence->inverse).passed());
  CHECK(is_natural_iso(k.equivalence->unit));
  CHECK(is_natural_iso(k.equivalence->counit));
}

TEST_CASE("a non-full inclusion is not an equivalence") {
  CatPtr i = share(from_preorder(ct::chain(2)));
  CatPtr c = share(from_preorder(ct::chain(3)));
  FunctorData f{i, c, {0, 2}, {}};
  f.mor_map = {c->identity(0), c->morphism_id("0<=2"), c->identity(2)};
  REQUIRE(check_functor(f).passed());
  auto k = classify_functor(f);
  CHECK(k.full);
  CHECK_FALSE(k.essentially_surjective);
  CHECK_FALSE(k.is_equivalence);
  CHECK(k.equivalence_report.status == Status::fail);
}

TEST_CASE("contravariant powerset") {
  FinFun f(FinSet(2), FinSet(2), {0, 0});
  CHECK(powerset_inverse_image(f, {true, false}) == std::vector<bool>{true, true});
  CHECK(powerset_inverse_image(f, {false, true}) == std::vector<bool>{false, false});
  Report r = check_powerset_contravariant(2);
  CHECK(r.passed());
  CHECK(r.cases > 0);
}

TEST_CASE("contravariant functors through the opposite") {
  CatPtr c = share(from_preorder(ct::chain(3)));
  CatPtr op = share(opposite(*c));
  FunctorData id_op = identity_functor(op);
  ContravariantFunctorData k = from_covariant_on_opposite(id_op, c);
  CHECK(check_contravariant(k).passed());
  CHECK(same_functor(to_covariant(k), id_op));
}

TEST_CASE("monoid actions are right actions") {
  // T2 acting on a 2-element set through the functor into finset(2).
  FiniteMonoid t2 = ct::full_transformation_monoid(2);
  CatPtr m = share(from_monoid(t2));
  CatPtr fs = share(universe_category(UniverseKind::finset, 2));
  ObjId two = fs->object_id("2a");
  FunctorData f{m, fs, {two}, {}};
  for (const auto& e : t2.elements) f.mor_map.push_back(fs->morphism_id("2a->2a:[" + std::string(1, e[0]) + "," + std::string(1, e[1]) + "]"));
  REQUIRE(check_functor(f).passed());
  CHECK(check_mset_action(f, t2).passed());
  // As a left action it fails; it is one for the opposite monoid.
  FiniteMonoid op = opposite_monoid(t2);
  CHECK(check_mset_action(f, op).status == Status::fail);
}
