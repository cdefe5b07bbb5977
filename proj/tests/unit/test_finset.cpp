#include "doctest.h"

#include "cattool/error.hpp"
#include "cattool/finset.hpp"

using namespace cattool;

namespace {
FinFun fn(std::size_t dom, std::size_t cod, std::vector<std::size_t> t) { return FinFun(FinSet(dom), FinSet(cod), std::move(t)); }
}  // namespace

TEST_CASE("composition is f then g") {
  FinFun f = fn(2, 2, {0, 0}), g = fn(2, 2, {1, 1});
  CHECK(compose(f, g).table() == std::vector<std::size_t>{1, 1});
  FinFun h = fn(2, 3, {2, 0}), k = fn(3, 2, {1, 0, 0});
  CHECK(compose(h, k).table() == std::vector<std::size_t>{0, 1});
  CHECK(after(k, h) == compose(h, k));
  CHECK_THROWS_AS(compose(h, h), CompositionError);
}

TEST_CASE("function tables are validated") {
  CHECK_THROWS(fn(2, 2, {0, 2}));
  CHECK_THROWS(fn(2, 2, {0}));
  CHECK_NOTHROW(fn(0, 0, {}));
}

TEST_CASE("enumeration order and indexing") {
  auto fs = enumerate_functions(FinSet(2), FinSet(3));
  REQUIRE(fs.size() == 9);
  CHECK(count_functions(2, 3) == 9);
  CHECK(count_functions(3, 0) == 0);
  CHECK(count_functions(0, 0) == 1);
  CHECK(fs.front().table() == std::vector<std::size_t>{0, 0});
  CHECK(fs[1].table() == std::vector<std::size_t>{0, 1});
  CHECK(fs.back().table() == std::vector<std::size_t>{2, 2});
  for (std::size_t i = 0; i < fs.size(); ++i) {
    CHECK(function_index(fs[i]) == i);
    CHECK(function_at(FinSet(2), FinSet(3), i) == fs[i]);
  }
  std::size_t visited = 0;
  for_each_function(FinSet(2), FinSet(3), [&](const FinFun& f) { return f == fs[visited++] && visited < 4; });
  CHECK(visited == 4);
}

TEST_CASE("injective, surjective, bijective") {
  CHECK(fn(2, 3, {0, 2}).injective());
  CHECK_FALSE(fn(2, 3, {0, 2}).surjective());
  CHECK(fn(3, 2, {0, 1, 1}).surjective());
  CHECK(fn(3, 3, {2, 0, 1}).bijective());
  CHECK(fn(0, 2, {}).injective());
}

TEST_CASE("product pairing is the unique mediating map") {
  Product p(FinSet(2), FinSet(3));
  CHECK(p.obj().size() == 6);
  for (const auto& q1 : enumerate_functions(FinSet(2), FinSet(2)))
    for (const auto& q2 : enumerate_functions(FinSet(2), FinSet(3))) {
      FinFun m = p.pairing(q1, q2);
      CHECK(compose(m, p.cone().proj_l) == q1);
      CHECK(compose(m, p.cone().proj_r) == q2);
      std::size_t hits = 0;
      for (const auto& u : enumerate_functions(FinSet(2), p.obj()))
        hits += compose(u, p.cone().proj_l) == q1 && compose(u, p.cone().proj_r) == q2;
      CHECK(hits == 1);
    }
}

TEST_CASE("product with a terminal set is the other factor") {
  Product p(FinSet(3), FinSet(1));
  CHECK(p.obj().size() == 3);
  CHECK(p.cone().proj_l.bijective());
}

TEST_CASE("coproduct copairing") {
  Coproduct c(FinSet(1), FinSet(2));
  CHECK(c.obj().size() == 3);
  FinFun f = fn(1, 2, {1}), g = fn(2, 2, {0, 0});
  FinFun m = c.copairing(f, g);
  CHECK(m.table() == std::vector<std::size_t>{1, 0, 0});
  CHECK(compose(c.cocone().inj_l, m) == f);
  CHECK(compose(c.cocone().inj_r, m) == g);
}

TEST_CASE("curry and uncurry are inverse") {
  Exponential e(FinSet(2), FinSet(2));
  CHECK(e.obj().size() == 4);
  Product xy(FinSet(2), FinSet(2));
  for (const auto& f : enumerate_functions(xy.obj(), FinSet(2))) {
    FinFun g = e.curry(FinSet(2), f);
    CHECK(e.uncurry(g) == f);
    // ev(curry(f)(x), y) = f(x, y)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) CHECK(e.function_at(g(x))(y) == f(xy.index(x, y)));
  }
}

TEST_CASE("product_map acts componentwise") {
  FinFun f = fn(2, 3, {2, 0}), g = fn(3, 2, {1, 1, 0});
  FinFun m = product_map(f, g);
  CHECK(m.dom().size() == 6);
  CHECK(m.cod().size() == 6);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(m(a * 3 + b) == f(a) * 2 + g(b));
}

TEST_CASE("product_map is functorial on size 2") {
  auto fs = enumerate_functions(FinSet(2), FinSet(2));
  for (const auto& f : fs)
    for (const auto& g : fs)
      for (const auto& h : fs)
        for (const auto& k : fs) CHECK(compose(product_map(f, g), product_map(h, k)) == product_map(compose(f, h), compose(g, k)));
}

TEST_CASE("coproduct_map places the summands") {
  FinFun m = coproduct_map(fn(1, 2, {1}), fn(2, 1, {0, 0}));
  CHECK(m.table() == std::vector<std::size_t>{1, 2, 2});
}
