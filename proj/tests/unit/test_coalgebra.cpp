#include "doctest.h"

#include "cattool/coalgebra.hpp"
#include "cattool/error.hpp"
#include "cattool/queries.hpp"

using namespace cattool;

namespace {

// Steps until the point, by direct iteration; Inf when a state repeats.
Conat iterate_oracle(const CoalgebraSpec& c, std::size_t x) {
  std::vector<bool> seen(c.size, false);
  std::size_t steps = 0;
  while (true) {
    if (seen[x]) return Conat::inf();
    seen[x] = true;
    if (!c.next[x]) return Conat::fin(steps);
    x = *c.next[x];
    ++steps;
  }
}

}  // namespace

TEST_CASE("conat predecessor") {
  CHECK_FALSE(conat_out(Conat::fin(0)).has_value());
  CHECK(*conat_out(Conat::fin(3)) == Conat::fin(2));
  CHECK(*conat_out(Conat::inf()) == Conat::inf());
  CHECK(to_string(Conat::fin(2)) == "Fin(2)");
  CHECK(to_string(Conat::inf()) == "Inf");
}

TEST_CASE("anamorphism into the conaturals") {
  CoalgebraSpec point = make_coalgebra({std::nullopt});
  CHECK(ana_conat(point)[0] == Conat::fin(0));
  // x -> y -> point
  CoalgebraSpec chain = make_coalgebra({1, std::nullopt});
  CHECK(ana_conat(chain)[0] == Conat::fin(1));
  CoalgebraSpec loop = make_coalgebra({1, 0, 0});
  for (const Conat& v : ana_conat(loop)) CHECK(v == Conat::inf());
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& c : enumerate_maybe_coalgebras(k)) {
      auto phi = ana_conat(c);
      for (std::size_t x = 0; x < k; ++x) CHECK(phi[x] == iterate_oracle(c, x));
    }
  CHECK_THROWS_AS(make_coalgebra({2}), ConstructionError);
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_maybe_coalgebras(3).size() == 64);
  CHECK(enumerate_maybe_coalgebras(2).front().describe() == "[*,*]");
}

TEST_CASE("terminality") {
  Report r = check_conat_terminality(3);
  CHECK(r.passed());
  CHECK(r.children.size() == 3);
  CHECK(check_conat_identity_anamorphism(8).passed());
  CHECK(dual_lambek_conat(8).passed());
  CoalgebraSpec t = truncated_conat(3);
  CHECK(t.size == 4);
  CHECK(truncated_conat_value(3, 3) == Conat::inf());
  CHECK(truncated_conat_value(3, 1) == Conat::fin(1));
}

TEST_CASE("restricted coalgebra category") {
  FinCat c = maybe_coalgebra_category(2);
  CHECK(check_laws(c).passed());
  auto t = find_universal(c, UniversalKind::terminal);
  REQUIRE(t.objects.size() == 1);
  CHECK(c.object_name(t.objects[0]) == "conat2");
  CHECK(coalgebra_category_check(2).passed());
}

TEST_CASE("streams") {
  auto xs = stream_take(nats(5), 3);
  CHECK(to_string(Value::seq(xs)) == "[5,6,7]");
  CHECK(stream_take(nats(5), 0).empty());
  auto zs = stream_take(zip(nats(0), nats(3)), 2);
  CHECK(to_string(Value::seq(zs)) == "[[0,3],[1,4]]");
  CHECK(bisimilar_up_to(zip(nats(0), nats(0)), diagonal_pairs(0), 32));
  CHECK_FALSE(bisimilar_up_to(nats(0), nats(1), 1));
  CHECK(check_stream_equations(nats(2), 8).passed());
  CHECK(check_stream_equations(zip(nats(0), nats(1)), 8).passed());
  CHECK_THROWS_AS(stream_take(nats(5, 6), 4), SizeLimitError);
  CHECK_NOTHROW(stream_take(nats(5, 6), 2));
}
