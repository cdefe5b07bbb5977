// Acceptance runner: one line per criterion, exit status 1 if any fails.
// Usage: cattool_acceptance [--verbose] [--only N]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cattool/adjunction.hpp"
#include "cattool/algebra.hpp"
#include "cattool/coalgebra.hpp"
#include "cattool/constructions.hpp"
#include "cattool/error.hpp"
#include "cattool/free_monoid.hpp"
#include "cattool/functor.hpp"
#include "cattool/kleisli.hpp"
#include "cattool/poly.hpp"
#include "cattool/queries.hpp"
#include "cattool_cli/app.hpp"
#include "cattool_cli/document.hpp"

#include "../cli/golden.hpp"
#include "../support/fixtures.hpp"

using namespace cattool;
namespace ct = cattool::testing;

namespace {

bool verbose = false;

// Collects failed sub-checks of one criterion.
struct Outcome {
  std::vector<std::string> problems;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) problems.push_back(what);
  }
  void expect_pass(const Report& r, const std::string& what) {
    ++checks;
    if (r.status != Status::pass) {
      problems.push_back(what + ": " + to_string(r.status));
      if (verbose) std::cerr << render_text(r);
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no budget
  std::function<void(Outcome&)> body;
};

void all_laws(Outcome& o, const FinCat& c, const std::string& what) { o.expect_pass(check_laws(c), what); }

// 1
void category_laws(Outcome& o) {
  std::size_t preorders = 0;
  for (std::size_t k = 1; k <= 5; ++k)
    for (const auto& leq : enumerate_posets(k)) {
      all_laws(o, from_preorder(ct::preorder_from_matrix(leq)), "poset on " + std::to_string(k));
      ++preorders;
    }
  for (std::size_t k = 1; k <= 5; ++k) {
    all_laws(o, from_preorder(ct::clique(k)), "clique preorder " + std::to_string(k));
    all_laws(o, from_preorder(ct::chain(k)), "chain " + std::to_string(k));
  }
  all_laws(o, from_preorder(ct::bowtie()), "bowtie preorder");

  std::vector<FiniteMonoid> monoids;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& m : ct::all_monoids(n)) monoids.push_back(std::move(m));
  for (std::size_t n = 4; n <= 6; ++n) {
    monoids.push_back(monoid_zn(n));
    monoids.push_back(ct::max_monoid(n));
    monoids.push_back(ct::left_zero_monoid(n - 1));
  }
  monoids.push_back(ct::product_monoid(monoid_bool_and(), monoid_bool_or()));
  monoids.push_back(ct::product_monoid(monoid_zn(2), monoid_zn(2)));
  monoids.push_back(ct::product_monoid(monoid_zn(2), monoid_zn(3)));
  monoids.push_back(ct::product_monoid(monoid_zn(3), monoid_bool_and()));
  monoids.push_back(ct::full_transformation_monoid(2));
  monoids.push_back(opposite_monoid(ct::left_zero_monoid(3)));
  for (const auto& m : monoids) {
    m.validate();
    all_laws(o, from_monoid(m), "monoid of size " + std::to_string(m.size()));
  }

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : ct::all_simple_dags(n)) all_laws(o, from_graph(g), "simple dag on " + std::to_string(n));
  std::mt19937_64 rng(20261015);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t trial = 0; trial < 40; ++trial)
      all_laws(o, from_graph(ct::random_dag(n, 1 + trial % (2 * n), rng)), "random dag on " + std::to_string(n));

  all_laws(o, universe_category(UniverseKind::finset, 4), "finset(4)");
  all_laws(o, universe_category(UniverseKind::finord, 4), "finord(4)");
  all_laws(o, universe_category(UniverseKind::finptset, 4), "finptset(4)");
  all_laws(o, universe_category(UniverseKind::finpos, 3), "finpos(3)");

  FinCat chain3 = from_preorder(ct::chain(3));
  FinCat z3 = from_monoid(monoid_zn(3));
  FinCat t2 = from_monoid(ct::full_transformation_monoid(2));
  FinCat fs2 = universe_category(UniverseKind::finset, 2);
  all_laws(o, opposite(chain3), "chain3^op");
  all_laws(o, opposite(t2), "T2^op");
  all_laws(o, opposite(fs2), "finset(2)^op");
  all_laws(o, opposite(opposite(fs2)), "finset(2)^op^op");
  all_laws(o, product_category(chain3, z3), "chain3 x Z3");
  all_laws(o, product_category(t2, opposite(chain3)), "T2 x chain3^op");
  all_laws(o, product_category(fs2, from_preorder(ct::chain(2))), "finset(2) x interval");
  o.expect(preorders > 4000, "expected every poset on up to 5 elements");
}

// 2
void set_characterizations(Outcome& o) {
  FinCat c = universe_category(UniverseKind::finset, 3);
  const auto& conc = *c.concrete();
  std::size_t checked = 0;
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const FinFun& fn = conc.functions[f];
    MorphismClassification k = classify(c, f);
    o.expect(k.is_mono == fn.injective(), "mono vs injective at " + c.describe(f));
    o.expect(k.is_epi == fn.surjective(), "epi vs surjective at " + c.describe(f));
    o.expect(k.is_iso == fn.bijective(), "iso vs bijective at " + c.describe(f));
    // f is a section when it has a retraction, a retraction when it has a section.
    if (!k.retractions_of.empty()) o.expect(fn.injective(), "section not injective: " + c.describe(f));
    if (!k.sections_of.empty()) o.expect(fn.surjective(), "retraction not surjective: " + c.describe(f));
    ++checked;
  }
  o.expect(checked == c.morphism_count(), "not every morphism was classified");
  o.expect_pass(check_set_characterizations(c), "check_set_characterizations");
}

std::size_t carrier_size(const FinCat& c, ObjId x) { return c.concrete()->carriers.at(x).size(); }

// 3
void universal_objects(Outcome& o) {
  FinCat c = universe_category(UniverseKind::finset, 4);
  auto init = find_universal(c, UniversalKind::initial);
  auto term = find_universal(c, UniversalKind::terminal);
  o.expect(init.objects.size() == 1 && carrier_size(c, init.objects[0]) == 0, "initial is not the empty set");
  o.expect(!term.objects.empty(), "no terminal object");
  for (ObjId t : term.objects) o.expect(carrier_size(c, t) == 1, "terminal object of size != 1");
  std::size_t singletons = 0;
  for (ObjId x = 0; x < c.object_count(); ++x) singletons += carrier_size(c, x) == 1;
  o.expect(term.objects.size() == singletons, "every singleton is terminal");

  for (ObjId a = 0; a < c.object_count(); ++a)
    for (ObjId b = 0; b < c.object_count(); ++b) {
      std::size_t na = carrier_size(c, a), nb = carrier_size(c, b);
      std::string pair = c.object_name(a) + ", " + c.object_name(b);
      if (na * nb <= 4 && na * nb > 0 && (a <= b)) {
        auto w = find_binary(c, BinaryKind::product, a, b);
        o.expect(!w.cones.empty(), "no product of " + pair);
        for (const auto& k : w.cones) o.expect(carrier_size(c, k.apex) == na * nb, "product size at " + pair);
        o.expect_pass(check_binary_uniqueness(c, BinaryKind::product, a, b, w), "product uniqueness " + pair);
      }
      if (na + nb <= 4 && na > 0 && nb > 0 && a <= b) {
        auto w = find_binary(c, BinaryKind::coproduct, a, b);
        o.expect(!w.cones.empty(), "no coproduct of " + pair);
        for (const auto& k : w.cones) o.expect(carrier_size(c, k.apex) == na + nb, "coproduct size at " + pair);
        o.expect_pass(check_binary_uniqueness(c, BinaryKind::coproduct, a, b, w), "coproduct uniqueness " + pair);
      }
    }

  for (std::size_t n = 1; n <= 5; ++n) {
    FinCat ch = from_preorder(ct::chain(n));
    auto i = find_universal(ch, UniversalKind::initial);
    auto t = find_universal(ch, UniversalKind::terminal);
    o.expect(i.objects == std::vector<ObjId>{ch.object_id("0")}, "chain initial is not the minimum");
    o.expect(t.objects == std::vector<ObjId>{ch.object_id(std::to_string(n - 1))}, "chain terminal is not the maximum");
  }
  FinCat bow = from_preorder(ct::bowtie());
  o.expect(find_binary(bow, BinaryKind::product, bow.object_id("A"), bow.object_id("B")).cones.empty(),
           "bowtie preorder has a product of A and B");
}

// 4
void uniqueness_up_to_iso(Outcome& o) {
  std::vector<std::pair<std::string, FinCat>> cats;
  cats.emplace_back("finset(3)", universe_category(UniverseKind::finset, 3));
  cats.emplace_back("finptset(3)", universe_category(UniverseKind::finptset, 3));
  cats.emplace_back("finpos(2)", universe_category(UniverseKind::finpos, 2));
  cats.emplace_back("clique(3)", from_preorder(ct::clique(3)));
  cats.emplace_back("Z3", from_monoid(monoid_zn(3)));
  cats.emplace_back("T2", from_monoid(ct::full_transformation_monoid(2)));
  std::size_t multiple = 0;
  for (const auto& [name, c] : cats) {
    for (auto kind : {UniversalKind::initial, UniversalKind::terminal}) {
      auto w = find_universal(c, kind);
      if (w.objects.size() > 1) ++multiple;
      o.expect_pass(check_universal_uniqueness(c, kind, w), name + " universal uniqueness");
    }
    for (ObjId a = 0; a < c.object_count(); ++a)
      for (ObjId b = a; b < c.object_count(); ++b)
        for (auto kind : {BinaryKind::product, BinaryKind::coproduct}) {
          auto w = find_binary(c, kind, a, b);
          if (w.cones.size() > 1) ++multiple;
          if (!w.cones.empty()) o.expect_pass(check_binary_uniqueness(c, kind, a, b, w), name + " binary uniqueness");
        }
  }
  o.expect(multiple > 0, "no instance with several universal objects was exercised");
}

// 5
void monad_laws(Outcome& o) {
  std::vector<InstanceParams> ps;
  ps.push_back({"list", 2, 2, 2, 1, 3, 2});
  ps.push_back({"tree", 2, 2, 2, 1, 3, 2});
  ps.push_back({"exception", 2, 2, 2, 2, 3, 2});
  ps.push_back({"powerset", 3, 3, 3, 1, 3, 2});
  ps.push_back({"reader", 2, 2, 2, 2, 3, 2});
  ps.push_back({"continuation", 2, 2, 2, 2, 3, 2});
  for (const auto& p : ps) {
    KleisliTriple t = instance(p);
    Report k = check_kleisli_laws(t);
    o.expect_pass(k, p.name + " Kleisli laws");
    o.expect(k.children.size() == 3, p.name + ": three Kleisli laws");
    o.expect_pass(check_monad_laws(kleisli_to_monad(t)), p.name + " monad laws");
    o.expect_pass(check_roundtrip(t), p.name + " roundtrip");
  }
}

// 6
void kleisli_categories(Outcome& o) {
  all_laws(o, kleisli_category(instance({"exception", 2, 2, 2, 2, 3, 2}), {0, 1, 2}), "exception Kleisli category");
  all_laws(o, kleisli_category(instance({"powerset", 2, 2, 2, 1, 3, 2}), {0, 1, 2}), "powerset Kleisli category");
  all_laws(o, kleisli_category(instance({"reader", 2, 2, 2, 2, 3, 2}), {0, 1, 2}), "reader Kleisli category");
}

// 7
void catamorphisms(Outcome& o) {
  const std::vector<long> bits{0, 1};
  const std::vector<long> window{-1, 0, 1};
  o.expect_pass(check_cata_laws(nat_value_algebra(), 4), "Nat value");
  o.expect_pass(check_cata_laws(in_algebra(poly_nat()), 4), "Nat in");
  o.expect_pass(check_cata_laws(table_algebra(poly_bool(), 2, {1, 0}, "not"), 4), "Bool");
  o.expect_pass(check_cata_laws(in_algebra(poly_bool()), 4), "Bool in");
  for (const char* f : {"sum", "length", "reverse", "bin2int", "bin2int2"})
    o.expect_pass(check_cata_laws(fold_library(f, bits), 4), std::string("List ") + f);
  o.expect_pass(check_cata_laws(in_algebra(poly_list(bits)), 4), "List in");
  o.expect_pass(check_cata_laws(btree_sum_algebra(bits), 4), "BTree sum");
  o.expect_pass(check_cata_laws(btree_leaves_algebra(bits), 4), "BTree leaves");
  o.expect_pass(check_cata_laws(exp_eval_algebra(window), 4), "Exp eval");
  o.expect_pass(check_cata_laws(in_algebra(poly_exp(window)), 4), "Exp in");

  o.expect_pass(check_initiality_sweep(poly_nat(), 3, 4), "Nat uniqueness, carriers <= 3");
  o.expect_pass(check_initiality_sweep(poly_bool(), 3, 4), "Bool uniqueness, carriers <= 3");
  o.expect_pass(check_initiality_sweep(poly_list(bits), 3, 4), "List uniqueness, carriers <= 3");
  o.expect_pass(check_initiality_sweep(poly_btree(bits), 3, 3), "BTree uniqueness, carriers <= 3");
  o.expect_pass(check_initiality_sweep(poly_exp(window), 3, 3), "Exp uniqueness, carriers <= 3");

  Report conat = check_conat_algebra_initiality();
  o.expect(conat.status == Status::fail, "conatural algebra was not refuted");
  const Report* two_maps = conat.find("exactly one map into every algebra");
  o.expect(two_maps && two_maps->status == Status::fail && !two_maps->witnesses.empty(),
           "conatural refutation carries no witness");
  if (verbose) std::cerr << render_text(conat);

  for (const Poly& f : {poly_nat(), poly_bool(), poly_list(bits), poly_btree(bits), poly_exp(window)})
    o.expect_pass(lambek_check(f, 4), "Lambek for " + to_string(f));
}

// 8
void fusion(Outcome& o) {
  FusionResult r = fusion_sum_plus_one(-2, 2, 5);
  o.expect(r.premise_holds && r.conclusion_holds, "(+1) . sum = fold (+) 1");
  o.expect_pass(r.report, "sum-plus-one report");
  const Report* premise = r.report.find("premise: phi;f = F(f);psi");
  o.expect(premise && premise->find("nil case: f 0 = 1") && premise->find("cons case: f (a + n) = a + f n"),
           "premise cases missing");
  // Lists over [-2, 2] of length <= 5.
  std::size_t lists = 0;
  for (std::size_t l = 0, p = 1; l <= 5; ++l, p *= 5) lists += p;
  const Report* concl = r.report.find("conclusion: cata(phi);f = cata(psi)");
  o.expect(concl && concl->cases == lists, "conclusion did not cover all lists");
  o.expect_pass(fusion_map_map(2, 4), "map g . map f = map (g . f)");
}

// 9
void bin2int(Outcome& o) {
  const std::vector<long> bits{0, 1};
  Value big = fold(fold_library("bin2int", bits), list_term({1, 1, 0, 1}));
  Value little = fold(fold_library("bin2int2_pair", bits), list_term({1, 0, 1, 1}));
  Value little_plain = fold(fold_library("bin2int2", bits), list_term({1, 0, 1, 1}));
  o.expect(to_string(big) == "13", "bin2int([1,1,0,1]) = " + to_string(big));
  o.expect(to_string(little) == "13", "bin2int2 via pairs = " + to_string(little));
  o.expect(to_string(little_plain) == "13", "bin2int2 plain = " + to_string(little_plain));
  // The paired carrier: cata gives (value, 2^length) before the projection.
  Value raw = cata(fold_library("bin2int", bits), list_term({1, 1, 0, 1}));
  o.expect(to_string(raw) == "[13,16]", "bin2int pair carrier = " + to_string(raw));
}

// 10
void conat_terminality(Outcome& o) {
  Report r = check_conat_terminality(4);
  o.expect_pass(r, "terminality on carriers <= 4");
  for (std::size_t k = 1; k <= 4; ++k) {
    std::size_t expected = 1;
    for (std::size_t i = 0; i < k; ++i) expected *= k + 1;
    o.expect(enumerate_maybe_coalgebras(k).size() == expected, "(k+1)^k coalgebras at k = " + std::to_string(k));
  }
}

// 11
void streams(Outcome& o) {
  for (long n = 0; n <= 32; ++n)
    for (std::size_t k = 0; k <= 32; ++k) {
      auto xs = stream_take(nats(n), k);
      std::vector<long> oracle(k);
      std::iota(oracle.begin(), oracle.end(), n);
      bool ok = xs.size() == k;
      for (std::size_t i = 0; ok && i < k; ++i) ok = to_string(xs[i]) == std::to_string(oracle[i]);
      o.expect(ok, "take " + std::to_string(k) + " nats(" + std::to_string(n) + ")");
    }
  for (long n = 0; n <= 32; n += 4)
    for (long m = 0; m <= 32; m += 3)
      for (std::size_t k = 0; k <= 32; k += 8) {
        auto zs = stream_take(zip(nats(n), nats(m)), k);
        auto as = stream_take(nats(n), k), bs = stream_take(nats(m), k);
        bool ok = zs.size() == k;
        for (std::size_t i = 0; ok && i < k; ++i) ok = zs[i] == Value::seq({as[i], bs[i]});
        o.expect(ok, "zip take at " + std::to_string(n) + "," + std::to_string(m));
      }
}

// 12
void adjunctions(Outcome& o) {
  for (std::size_t y = 0; y <= 2; ++y) {
    Report r = check_adjunction(currying_adjunction(y, 2));
    o.expect_pass(r, "currying adjunction |Y| = " + std::to_string(y));
    o.expect(r.find("hom-set naturality") && r.find("presentation roundtrip"), "currying report is incomplete");
  }
  FiniteMonoid z3 = monoid_zn(3);
  Report uvp = check_uvp_all(2, z3, 3);
  o.expect_pass(uvp, "UVP uniqueness at |X| = 2, Z/3, L = 3");
  Report ff = free_forget_adjunction(2, z3, 3);
  o.expect_pass(ff, "Free -| Forget");
  o.expect(ff.find("alpha is a bijection with inverse lift") && ff.find("Free(eta);eps_Free = id") &&
               ff.find("eta_U;U(eps) = id"),
           "Free -| Forget report is incomplete");
}

// 13
void equivalence(Outcome& o) {
  FunctorClassification k = classify_functor(finset_to_finord(3));
  o.expect(k.full && k.faithful && k.essentially_surjective, "U is full, faithful, essentially surjective");
  o.expect(k.is_equivalence, "U is an equivalence");
  o.expect_pass(k.equivalence_report, "equivalence data");
  o.expect(!k.is_isomorphism, "U is not an isomorphism");
  bool witness = false;
  for (const auto& w : k.witnesses) witness = witness || w.role == "not injective on objects";
  o.expect(!k.injective_on_objects && witness, "injectivity-on-objects witness");
}

// 14
void powerset(Outcome& o) { o.expect_pass(check_powerset_contravariant(3), "powerset laws to size 3"); }

// 15
void cli_golden(Outcome& o) {
  const std::string samples = CATTOOL_SAMPLES_DIR;
  auto cases = ct::load_golden_manifest(CATTOOL_GOLDEN_DIR "/../golden_cases.tsv", samples);
  std::map<std::string, std::set<int>> seen;
  for (const auto& c : cases) {
    auto r = ct::run_golden(c, CATTOOL_GOLDEN_DIR, samples);
    o.expect(r.matched, "golden " + c.name + " (exit " + std::to_string(r.exit_code) + ")");
    if (!c.args.empty()) {
      std::size_t i = c.args[0] == "--json" ? 1 : 0;
      std::string cmd = c.args.at(i);
      if (cmd == "functor" || cmd == "nattrans" || cmd == "adjunction" || cmd == "monad" || cmd == "free-monoid" ||
          cmd == "equiv")
        cmd += " " + c.args.at(i + 1);
      seen[cmd].insert(r.exit_code);
    }
  }
  for (const char* cmd : {"laws", "classify", "universal", "binary", "functor check", "nattrans check",
                          "adjunction check", "monad laws", "fold", "unfold", "fusion", "free-monoid uvp",
                          "equiv check"})
    o.expect(seen[cmd].count(0) && seen[cmd].count(1), std::string("pass and fail cases for ") + cmd);
  o.expect(seen["laws"].count(2), "schema violation case");

  // Replay the broken table's witness through the library.
  std::ostringstream out, err;
  int code = cli::run({"--json", "laws", samples + "/broken_assoc.json"}, out, err);
  o.expect(code == cli::kExitFail, "broken table exit code");
  auto j = nlohmann::json::parse(out.str());
  const nlohmann::json* assoc = nullptr;
  for (const auto& ch : j["report"]["children"])
    if (ch["check"] == "associativity") assoc = &ch;
  o.expect(assoc != nullptr, "associativity child in the JSON report");
  if (!assoc) return;
  std::map<std::string, std::string> w;
  for (const auto& x : (*assoc)["witnesses"]) w[x["role"]] = x["value"];
  auto loaded = cli::load_document(samples + "/broken_assoc.json");
  FinCat c = cli::parse_category(loaded.doc, loaded.base);
  MorId f = c.morphism_id(w["f"]), g = c.morphism_id(w["g"]), h = c.morphism_id(w["h"]);
  MorId left = c.compose(c.compose(f, g), h), right = c.compose(f, c.compose(g, h));
  o.expect(left != right, "replayed witness does not break associativity");
  o.expect(c.morphism_name(left) == w["(f;g);h"] && c.morphism_name(right) == w["f;(g;h)"],
           "replayed composites differ from the reported ones");

  std::ostringstream out2, err2;
  o.expect(cli::run({"laws", samples + "/bad_schema.json"}, out2, err2) == cli::kExitInput, "schema violation exit");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--verbose")) verbose = true;
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria{
      {1, "category laws of every constructor", 10, category_laws},
      {2, "set characterizations in finset(3)", 5, set_characterizations},
      {3, "universal objects", 0, universal_objects},
      {4, "uniqueness up to iso", 0, uniqueness_up_to_iso},
      {5, "monad laws, six instances", 60, monad_laws},
      {6, "Kleisli categories", 0, kleisli_categories},
      {7, "catamorphisms", 30, catamorphisms},
      {8, "fusion", 0, fusion},
      {9, "bin2int values", 0, bin2int},
      {10, "conat terminality", 10, conat_terminality},
      {11, "streams", 0, streams},
      {12, "adjunctions", 0, adjunctions},
      {13, "equivalence finset -> finord", 0, equivalence},
      {14, "contravariant powerset", 0, powerset},
      {15, "command line", 0, cli_golden},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && s > c.budget_s)
      o.problems.push_back("over budget: " + std::to_string(s) + " s > " + std::to_string(c.budget_s) + " s");
    bool ok = o.problems.empty();
    failed += !ok;
    std::printf("%s C%02d %-38s %4zu check%-1s %7.2f s", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), o.checks, o.checks == 1 ? "" : "s", s);
    if (!ok) std::printf("  first problem: %s (%zu total)", o.problems.front().c_str(), o.problems.size());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, only ? std::size_t{1} : criteria.size());
  return failed ? 1 : 0;
}
