#include "doctest.h"

#include <map>
#include <random>

#include "cattool/error.hpp"
#include "cattool/fincat.hpp"
#include "cattool/sampled.hpp"

using namespace cattool;

namespace {

// One object, morphisms id, a, b; the table is total but not associative.
FinCat broken_monoid_table() {
  FinCat::Builder b;
  ObjId s = b.add_object("*");
  MorId id = b.add_morphism("id", s, s), a = b.add_morphism("a", s, s), bb = b.add_morphism("b", s, s);
  b.set_identity(s, id);
  b.set_composite(a, a, bb);
  b.set_composite(a, bb, a);
  b.set_composite(bb, a, bb);
  b.set_composite(bb, bb, bb);
  b.set_rule([id](MorId f, MorId g) -> std::optional<MorId> {
    if (f == id) return g;
    if (g == id) return f;
    return std::nullopt;
  });
  return b.build();
}

}  // namespace

TEST_CASE("terminal category") {
  FinCat::Builder b;
  ObjId x = b.add_object("x");
  b.set_identity(x, b.add_morphism("id", x, x));
  b.set_rule([](MorId f, MorId) { return std::optional<MorId>(f); });
  FinCat c = b.build();
  CHECK(c.object_count() == 1);
  CHECK(c.morphism_count() == 1);
  CHECK(check_laws(c).passed());
}

TEST_CASE("builder rejects missing composites and bad typing") {
  FinCat::Builder b;
  ObjId x = b.add_object("x"), y = b.add_object("y");
  MorId ix = b.add_morphism("ix", x, x), iy = b.add_morphism("iy", y, y), f = b.add_morphism("f", x, y);
  b.set_identity(x, ix);
  b.set_identity(y, iy);
  b.set_composite(ix, f, f);
  b.set_composite(ix, ix, ix);
  b.set_composite(iy, iy, iy);
  try {
    (void)b.build();
    FAIL("expected ConstructionError");
  } catch (const ConstructionError& e) {
    CHECK(std::string(e.what()).find("composition table is not total: missing f then iy") != std::string::npos);
  }
  b.set_composite(f, iy, f);
  CHECK_NOTHROW((void)b.build());

  FinCat::Builder bad;
  ObjId p = bad.add_object("p"), q = bad.add_object("q");
  MorId g = bad.add_morphism("g", p, q);
  CHECK_THROWS_AS(bad.set_identity(p, g), ConstructionError);
  (void)q;
}

TEST_CASE("composition typing") {
  FinCat::Builder b;
  ObjId x = b.add_object("x"), y = b.add_object("y");
  MorId ix = b.add_morphism("ix", x, x), iy = b.add_morphism("iy", y, y), f = b.add_morphism("f", x, y);
  b.set_identity(x, ix);
  b.set_identity(y, iy);
  b.set_rule([&](MorId a, MorId c) -> std::optional<MorId> { return a == ix || a == iy ? c : a; });
  FinCat c = b.build();
  CHECK(c.compose(ix, f) == f);
  CHECK(c.compose(f, iy) == f);
  CHECK_THROWS_AS((void)c.compose(f, f), CompositionError);
  CHECK(c.hom(x, y) == std::vector<MorId>{f});
  CHECK(c.hom(y, x).empty());
  CHECK(c.describe(f) == "f : x -> y");
}

TEST_CASE("associativity failure carries a witness that replays") {
  FinCat c = broken_monoid_table();
  Report r = check_laws(c);
  CHECK(r.status == Status::fail);
  const Report* assoc = r.find("associativity");
  REQUIRE(assoc);
  CHECK(assoc->status == Status::fail);
  std::map<std::string, std::string> w;
  for (const auto& x : assoc->witnesses) w[x.role] = x.value;
  MorId f = c.morphism_id(w["f"]), g = c.morphism_id(w["g"]), h = c.morphism_id(w["h"]);
  CHECK(c.compose(c.compose(f, g), h) != c.compose(f, c.compose(g, h)));
  CHECK(c.morphism_name(c.compose(c.compose(f, g), h)) == w["(f;g);h"]);
  CHECK(r.find("left unit")->passed());
}

TEST_CASE("unit law failure") {
  FinCat::Builder b;
  ObjId s = b.add_object("*");
  MorId e = b.add_morphism("e", s, s), a = b.add_morphism("a", s, s);
  b.set_identity(s, e);
  // e then a = e breaks the left unit law.
  b.set_rule([&](MorId, MorId) { return std::optional<MorId>(e); });
  (void)a;
  FinCat c = b.build();
  Report r = check_laws(c);
  CHECK(r.find("left unit")->status == Status::fail);
  CHECK(r.find("left unit")->witnesses.at(0).role == "f");
}

TEST_CASE("sampled laws: integer matrices mod 3") {
  using Mat = std::vector<std::vector<int>>;
  LazyCategory<std::size_t, Mat> m;
  m.dom = [](const Mat& a) { return a.size(); };
  m.cod = [](const Mat& a) { return a.at(0).size(); };
  m.id = [](std::size_t n) {
    Mat a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
  };
  m.compose = [](const Mat& a, const Mat& b) {
    Mat c(a.size(), std::vector<int>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b[0].size(); ++j)
        for (std::size_t k = 0; k < b.size(); ++k) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % 3;
    return c;
  };
  m.equal = [](const Mat& a, const Mat& b) { return a == b; };
  m.show = [](const Mat& a) { return std::to_string(a.size()) + "x" + std::to_string(a[0].size()); };
  auto random_mat = [](std::size_t r, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<int> entry(0, 2);
    Mat a(r, std::vector<int>(dim(rng)));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    return a;
  };
  m.sample = [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    return random_mat(dim(rng), rng);
  };
  m.sample_from = [&](const std::size_t& r, std::mt19937_64& rng) { return random_mat(r, rng); };
  Report r = sampled_laws(m, 1000, 7);
  CHECK(r.passed());
  CHECK(r.cases == 3000);
}
