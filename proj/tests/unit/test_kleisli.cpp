#include "doctest.h"

#include "cattool/error.hpp"
#include "cattool/kleisli.hpp"

using namespace cattool;

namespace {

Value at(long a) { return Value::of(a); }
Value seq(std::vector<Value> xs) { return Value::seq(std::move(xs)); }

InstanceParams params(const std::string& name, std::size_t n, std::size_t e = 1) {
  InstanceParams p;
  p.name = name;
  p.x = p.y = p.z = n;
  p.e = e;
  return p;
}

}  // namespace

TEST_CASE("list unit and bind") {
  KleisliTriple t = instance(params("list", 2));
  CHECK(t.unit(at(1)) == seq({at(1)}));
  Arrow1 twice = [](const Value& x) { return seq({x, x}); };
  CHECK(to_string(t.bind(twice, seq({at(0), at(1)}))) == "[0,0,1,1]");
  MonadSpec m = kleisli_to_monad(t);
  CHECK(to_string(m.mult(seq({seq({at(0)}), seq({at(1), at(1)})}))) == "[0,1,1]");
  CHECK(to_string(m.map([](const Value& x) { return at(1 - x.atom); }, seq({at(0), at(0), at(1)}))) == "[1,1,0]");
}

TEST_CASE("exception bind passes errors through") {
  KleisliTriple t = instance(params("exception", 2, 2));
  Arrow1 f = [](const Value& x) { return seq({at(0), at(1 - x.atom)}); };
  CHECK(t.bind(f, seq({at(0), at(0)})) == seq({at(0), at(1)}));
  for (long e = 0; e < 2; ++e) CHECK(t.bind(f, seq({at(1), at(e)})) == seq({at(1), at(e)}));
  MonadSpec m = kleisli_to_monad(t);
  // mu(inl(inl x)) = inl x, mu(inl(err e)) = err e, mu(err e) = err e
  CHECK(m.mult(seq({at(0), seq({at(0), at(1)})})) == seq({at(0), at(1)}));
  CHECK(m.mult(seq({at(0), seq({at(1), at(1)})})) == seq({at(1), at(1)}));
  CHECK(m.mult(seq({at(1), at(0)})) == seq({at(1), at(0)}));
  for (const Value& v : t.values(2, t.value_bound)) CHECK(m.mult(m.unit(v)) == v);
}

TEST_CASE("powerset bind is a union") {
  KleisliTriple t = instance(params("powerset", 3));
  Arrow1 f = [](const Value& x) { return x.atom == 0 ? seq({at(1)}) : seq({at(1), at(2)}); };
  CHECK(to_string(t.bind(f, seq({at(0), at(2)}))) == "[1,2]");
  CHECK(to_string(t.bind(f, seq({}))) == "[]");
  CHECK(t.values(3, t.value_bound).size() == 8);
}

TEST_CASE("reader bind reads the diagonal") {
  KleisliTriple t = instance(params("reader", 2, 2));
  CHECK(t.unit(at(1)) == seq({at(1), at(1)}));
  Arrow1 f = [](const Value& x) { return x.atom == 0 ? seq({at(0), at(1)}) : seq({at(1), at(0)}); };
  CHECK(t.bind(f, seq({at(1), at(0)})) == seq({at(1), at(1)}));
}

TEST_CASE("Kleisli laws at small sizes") {
  for (const auto& name : instance_names()) {
    InstanceParams p = params(name, 1, 1);
    p.max_len = 2;
    p.max_depth = 1;
    KleisliTriple t = instance(p);
    Report r = check_kleisli_laws(t);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.children.size() == 3);
    CHECK_MESSAGE(check_monad_laws(kleisli_to_monad(t)).passed(), name);
    CHECK_MESSAGE(check_roundtrip(t).passed(), name);
  }
}

TEST_CASE("continuation law 1 covers all 16 values") {
  InstanceParams p = params("continuation", 2, 2);
  KleisliTriple t = instance(p);
  CHECK(t.values(2, t.value_bound).size() == 16);
  Report r = check_kleisli_laws(t);
  CHECK(r.passed());
  CHECK(r.find("law 1: eta* = id")->cases == 16);
}

TEST_CASE("powerset roundtrip at size 2") {
  CHECK(check_roundtrip(instance(params("powerset", 2))).passed());
}

TEST_CASE("guards") {
  InstanceParams p = params("list", 3);
  CHECK_THROWS_AS(instance(p), SizeLimitError);
  CHECK_THROWS_AS(instance(params("powerset", 4)), SizeLimitError);
  CHECK_THROWS(instance(params("state", 2)));
}

TEST_CASE("a constant unit breaks the laws") {
  KleisliTriple t = instance(params("exception", 2, 2));
  Arrow1 eta = t.unit;
  t.unit = [eta](const Value&) { return eta(at(0)); };
  Report r = check_kleisli_laws(t);
  CHECK(r.status == Status::fail);
  CHECK(r.find("law 1: eta* = id")->status == Status::fail);
}

TEST_CASE("Kleisli categories") {
  FinCat pw = kleisli_category(instance(params("powerset", 2)), {0, 1, 2});
  CHECK(check_laws(pw).passed());
  // Hom(1, 2) = functions 1 -> P(2)
  CHECK(pw.hom(pw.object_id("1"), pw.object_id("2")).size() == 4);
  FinCat ex = kleisli_category(instance(params("exception", 2, 2)), {1, 2});
  CHECK(check_laws(ex).passed());
}

TEST_CASE("reader Kleisli composition is direct evaluation") {
  KleisliTriple t = instance(params("reader", 2, 2));
  FinCat c = kleisli_category(t, {2});
  // A morphism 2 -> 2 is a pair of reader values; its name ends with the table.
  auto arrows = enumerate_arrows(t, 2, 2);
  REQUIRE(arrows.size() == c.morphism_count());
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g = 0; g < c.morphism_count(); ++g) {
      // (f;g)(x)(r) = g(f(x)(r))(r)
      std::vector<Value> expected;
      for (long x = 0; x < 2; ++x) {
        std::vector<Value> row;
        for (std::size_t r = 0; r < 2; ++r) row.push_back(arrows[g][arrows[f][x].items[r].atom].items[r]);
        expected.push_back(seq(row));
      }
      CHECK(arrows[c.compose(f, g)] == expected);
    }
}

TEST_CASE("list bind distributes over concatenation") {
  CHECK(check_list_bind_distributes(2, 3).passed());
}

TEST_CASE("sampling above the search limit") {
  MonadSpec m = kleisli_to_monad(instance(params("list", 2)));
  Report a = check_monad_laws(m, 64, 3), b = check_monad_laws(m, 64, 3);
  CHECK(a.passed());
  CHECK(render_text(a) == render_text(b));
}
