#include "cattool_cli/app.hpp"

#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cattool/adjunction.hpp"
#include "cattool/algebra.hpp"
#include "cattool/coalgebra.hpp"
#include "cattool/constructions.hpp"
#include "cattool/free_monoid.hpp"
#include "cattool/functor.hpp"
#include "cattool/kleisli.hpp"
#include "cattool/poly.hpp"
#include "cattool/queries.hpp"
#include "cattool/set_functor.hpp"
#include "cattool_cli/document.hpp"
#include "cattool_cli/json_report.hpp"

namespace cattool::cli {

namespace {

int exit_code(const Report& r) {
  switch (r.status) {
    case Status::pass:
    case Status::not_applicable:
      return kExitPass;
    case Status::fail:
      return kExitFail;
    case Status::error:
      return kExitInput;
  }
  return kExitInput;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (ch != ' ' && ch != '\t' && ch != '\n') out += ch;
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_names(const FinCat& c, const std::vector<MorId>& ms) {
  std::string s;
  for (MorId m : ms) s += (s.empty() ? "" : ", ") + c.morphism_name(m);
  return "{" + s + "}";
}

FinCat load_category(const std::string& path) {
  Loaded l = load_document(path);
  return parse_category(l.doc, l.base);
}

Report laws_command(const std::string& path, bool characterizations) {
  FinCat c = load_category(path);
  Report r("category laws");
  auto count = [](std::size_t n, const char* noun) { return std::to_string(n) + " " + noun + (n == 1 ? "" : "s"); };
  r.note(count(c.object_count(), "object") + ", " + count(c.morphism_count(), "morphism"));
  Report laws = check_laws(c);
  for (auto& ch : laws.children) r.add(std::move(ch));
  if (laws.status == Status::error) r.error(laws.detail);
  if (characterizations) {
    if (!c.concrete()) {
      Report na("set characterizations");
      na.not_applicable("the category has no underlying sets");
      r.add(std::move(na));
    } else {
      r.add(check_set_characterizations(c));
    }
  }
  return r;
}

Report classify_command(const std::string& path, const std::string& morphism, const std::string& require) {
  FinCat c = load_category(path);
  auto f = c.find_morphism(morphism);
  if (!f) throw DocumentError("--morphism", "unknown morphism '" + morphism + "'");
  MorphismClassification k = classify(c, *f);
  Report r("classify " + c.describe(*f));
  r.witnesses.push_back({"mono", yes_no(k.is_mono)});
  r.witnesses.push_back({"epi", yes_no(k.is_epi)});
  r.witnesses.push_back({"iso", yes_no(k.is_iso)});
  if (k.inverse) r.witnesses.push_back({"inverse", c.morphism_name(*k.inverse)});
  r.witnesses.push_back({"retractions", join_names(c, k.retractions_of)});
  r.witnesses.push_back({"sections", join_names(c, k.sections_of)});
  if (k.mono_witness)
    r.witnesses.push_back({"not mono", c.morphism_name(k.mono_witness->first) + " and " +
                                           c.morphism_name(k.mono_witness->second) + " agree after f"});
  if (k.epi_witness)
    r.witnesses.push_back({"not epi", c.morphism_name(k.epi_witness->first) + " and " +
                                          c.morphism_name(k.epi_witness->second) + " agree before f"});
  if (!require.empty()) {
    Report q("requires " + require);
    q.tick();
    bool holds = require == "mono"         ? k.is_mono
                 : require == "epi"        ? k.is_epi
                 : require == "iso"        ? k.is_iso
                 : require == "section"    ? !k.retractions_of.empty()
                                           : !k.sections_of.empty();
    if (!holds) {
      std::vector<Witness> ws{{"morphism", c.morphism_name(*f)}};
      if (require == "mono" && k.mono_witness) {
        ws.push_back({"g1", c.morphism_name(k.mono_witness->first)});
        ws.push_back({"g2", c.morphism_name(k.mono_witness->second)});
      } else if (require == "epi" && k.epi_witness) {
        ws.push_back({"h1", c.morphism_name(k.epi_witness->first)});
        ws.push_back({"h2", c.morphism_name(k.epi_witness->second)});
      }
      q.fail("the morphism is not " + std::string(require == "iso" ? "an " : "a ") + require, std::move(ws));
    }
    r.add(std::move(q));
  }
  return r;
}

Report universal_command(const std::string& path, const std::string& kind) {
  FinCat c = load_category(path);
  UniversalKind k = kind == "initial" ? UniversalKind::initial : UniversalKind::terminal;
  UniversalWitness w = find_universal(c, k);
  Report r(kind + " object");
  r.tick(c.object_count());
  if (w.objects.empty()) {
    std::vector<Witness> ws;
    // Why each candidate fails, for the first few.
    for (ObjId x = 0; x < c.object_count() && ws.size() < 8; ++x) {
      for (ObjId y = 0; y < c.object_count(); ++y) {
        std::size_t n = k == UniversalKind::initial ? c.hom(x, y).size() : c.hom(y, x).size();
        if (n != 1) {
          std::string hom = k == UniversalKind::initial ? "Hom(" + c.object_name(x) + ", " + c.object_name(y) + ")"
                                                        : "Hom(" + c.object_name(y) + ", " + c.object_name(x) + ")";
          ws.push_back({c.object_name(x), hom + " has " + std::to_string(n) + " morphisms"});
          break;
        }
      }
    }
    r.fail("no " + kind + " object", std::move(ws));
    return r;
  }
  for (ObjId x : w.objects) r.witnesses.push_back({kind, c.object_name(x)});
  r.add(check_universal_uniqueness(c, k, w));
  return r;
}

Report binary_command(const std::string& path, const std::string& kind, const std::string& a, const std::string& b) {
  FinCat c = load_category(path);
  auto oa = c.find_object(a), ob = c.find_object(b);
  if (!oa) throw DocumentError("--a", "unknown object '" + a + "'");
  if (!ob) throw DocumentError("--b", "unknown object '" + b + "'");
  BinaryKind k = kind == "product" ? BinaryKind::product : BinaryKind::coproduct;
  BinaryWitness w = find_binary(c, k, *oa, *ob);
  ConeCategory cones(c, k, *oa, *ob);
  Report r(kind + " of " + a + " and " + b);
  r.tick(w.tested.size());
  if (w.cones.empty()) {
    r.fail("no " + kind + " of " + a + " and " + b,
           {{"a", a}, {"b", b}, {"cones tested", std::to_string(w.tested.size())}});
    return r;
  }
  for (const auto& cone : w.cones) r.witnesses.push_back({kind, cones.describe(cone)});
  r.add(check_binary_uniqueness(c, k, *oa, *ob, w));
  return r;
}

Report functor_command(const std::string& path, const std::string& builtin, std::size_t param, std::size_t max_size,
                       bool powerset) {
  if (powerset) return check_powerset_contravariant(max_size);
  if (!builtin.empty()) return check_set_functor(builtin_set_functor(builtin, param), max_size);
  if (path.empty()) throw DocumentError("", "functor check needs a document, --builtin or --powerset");
  Loaded l = load_document(path);
  return check_functor(parse_functor(l.doc, l.base));
}

Report nattrans_command(const std::string& path) {
  Loaded l = load_document(path);
  return check_naturality(parse_nattrans(l.doc, l.base));
}

struct AdjunctionArgs {
  std::string document;
  bool currying = false;
  std::size_t y = 2, n = 2;
  bool uniqueness = false;
  bool free_forget = false;
  std::size_t gens = 2, max_len = 3;
  std::string monoid = "z3";
  std::string identity;
};

Report adjunction_command(const AdjunctionArgs& a) {
  if (a.currying) {
    Report r = check_adjunction(currying_adjunction(a.y, a.n));
    if (a.uniqueness) r.add(check_right_adjoint_uniqueness(a.y, a.n));
    return r;
  }
  if (a.free_forget) return free_forget_adjunction(a.gens, builtin_monoid(a.monoid), a.max_len);
  if (!a.identity.empty()) {
    auto adj = identity_adjunction(share(load_category(a.identity)));
    return check_adjunction(hom_bijection_from_unit_counit(adj));
  }
  if (a.document.empty()) throw DocumentError("", "adjunction check needs a document, --currying, --free-forget or --identity");
  Loaded l = load_document(a.document);
  AdjunctionUnitCounit adj = parse_adjunction(l.doc, l.base);
  Report r("adjunction");
  r.add(check_unit_counit_naturality(adj));
  r.add(check_triangles(adj));
  if (r.passed()) r.add(check_adjunction(hom_bijection_from_unit_counit(adj)));
  return r;
}

struct MonadArgs {
  InstanceParams p;
  std::size_t samples = 4096;
  std::uint64_t seed = 1;
  bool constant_unit = false;
  std::vector<std::size_t> kleisli_objects;
};

Report monad_command(const MonadArgs& a) {
  KleisliTriple t = instance(a.p);
  Report r("monad laws: " + t.name);
  if (a.constant_unit) {
    // Mutation for exercising the harness: every x goes to eta(0).
    Arrow1 eta = t.unit;
    t.unit = [eta](const Value&) { return eta(Value::of(0)); };
    r.note("unit replaced by the constant x -> eta(0)");
  }
  r.add(check_kleisli_laws(t));
  r.add(check_monad_laws(kleisli_to_monad(t), a.samples, a.seed));
  r.add(check_roundtrip(t));
  if (!a.kleisli_objects.empty()) {
    Report k = check_laws(kleisli_category(t, a.kleisli_objects));
    k.check = "Kleisli category laws";
    r.add(std::move(k));
  }
  return r;
}

struct FoldArgs {
  std::string datatype = "list";
  std::string algebra;
  std::string term;
  std::optional<std::string> expect;
  bool laws = false;
  std::size_t depth = 4;
};

Report fold_command(const FoldArgs& a) {
  AlgebraSpec alg = algebra_catalog(a.datatype, a.algebra);
  Report r("fold " + a.algebra + " over " + a.datatype);
  if (!a.term.empty()) {
    Value t = parse_term(a.datatype, a.term);
    Value v = fold(alg, t);
    r.tick();
    r.witnesses.push_back({"term", render_term(a.datatype, t)});
    r.witnesses.push_back({"value", to_string(v)});
    if (a.expect) {
      Report e("expected value");
      e.tick();
      if (strip_spaces(*a.expect) != to_string(v))
        e.fail("value differs from the expectation",
               {{"term", render_term(a.datatype, t)}, {"value", to_string(v)}, {"expected", *a.expect}});
      r.add(std::move(e));
    }
  } else if (!a.laws) {
    throw DocumentError("--term", "fold needs --term or --laws");
  }
  if (a.laws) r.add(check_cata_laws(alg, a.depth));
  return r;
}

struct UnfoldArgs {
  std::string stream = "nats";
  long start = 0, start2 = 0, bound = kNatsBound;
  std::size_t take = 8;
  std::optional<std::string> expect;
  bool conat = false;
  std::size_t max_size = 4;
};

Report unfold_command(const UnfoldArgs& a) {
  if (a.conat) {
    Report r("conaturals");
    r.add(check_conat_terminality(a.max_size));
    r.add(check_conat_identity_anamorphism());
    r.add(dual_lambek_conat());
    r.add(coalgebra_category_check(std::min<std::size_t>(a.max_size, 3)));
    return r;
  }
  StreamProc p = a.stream == "nats"       ? nats(a.start, a.bound)
                 : a.stream == "diagonal" ? diagonal_pairs(a.start, a.bound)
                                          : zip(nats(a.start, a.bound), nats(a.start2, a.bound));
  auto xs = stream_take(p, a.take);
  std::string shown = to_string(Value::seq(xs));
  Report r("take " + std::to_string(a.take) + " from " + p.name);
  r.tick(a.take);
  r.witnesses.push_back({"take", shown});
  if (a.expect) {
    Report e("expected prefix");
    e.tick();
    if (strip_spaces(*a.expect) != shown)
      e.fail("observation differs from the expectation", {{"stream", p.name}, {"take", shown}, {"expected", *a.expect}});
    r.add(std::move(e));
  }
  return r;
}

struct FusionArgs {
  std::string demo;
  long lo = -2, hi = 2;
  std::size_t max_len = 5;
  std::size_t n = 2;
};

Report fusion_command(const FusionArgs& a) {
  if (a.demo == "sum-plus-one") return fusion_sum_plus_one(a.lo, a.hi, a.max_len).report;
  if (a.demo == "sum-times-two") return fusion_sum_times_two(a.lo, a.hi, a.max_len).report;
  return fusion_map_map(a.n, std::min<std::size_t>(a.max_len, 4));
}

struct UvpArgs {
  std::size_t gens = 2, max_len = 3;
  std::string monoid = "z3";
  std::vector<std::size_t> f;
  std::vector<std::size_t> candidate;
};

Report uvp_command(const UvpArgs& a) {
  FiniteMonoid m = builtin_monoid(a.monoid);
  if (!a.candidate.empty()) {
    if (a.f.empty()) throw DocumentError("--f", "--candidate needs --f");
    return check_hom_candidate(a.gens, m, a.f, a.candidate, a.max_len);
  }
  if (!a.f.empty()) return check_uvp(a.gens, m, a.f, a.max_len);
  return check_uvp_all(a.gens, m, a.max_len);
}

Report equiv_command(const std::string& path, std::size_t n, const std::string& require) {
  FunctorData f;
  if (!path.empty()) {
    Loaded l = load_document(path);
    f = parse_functor(l.doc, l.base);
  } else {
    f = finset_to_finord(n);
  }
  Report typing = check_functor(f);
  if (!typing.passed()) return typing;
  FunctorClassification k = classify_functor(f);
  Report r("functor classification");
  r.witnesses.push_back({"injective on objects", yes_no(k.injective_on_objects)});
  r.witnesses.push_back({"surjective on objects", yes_no(k.surjective_on_objects)});
  r.witnesses.push_back({"full", yes_no(k.full)});
  r.witnesses.push_back({"faithful", yes_no(k.faithful)});
  r.witnesses.push_back({"essentially surjective", yes_no(k.essentially_surjective)});
  r.witnesses.push_back({"equivalence", yes_no(k.is_equivalence)});
  r.witnesses.push_back({"isomorphism", yes_no(k.is_isomorphism)});
  Report eq = k.equivalence_report;
  // A missing equivalence is a finding here, not a failure of the command.
  if (eq.status == Status::fail && require != "equivalence") eq.status = Status::not_applicable;
  if (require == "equivalence" || k.is_equivalence) r.add(std::move(eq));
  Report q("requires " + require);
  q.tick();
  bool holds = require == "equivalence" ? k.is_equivalence
               : require == "isomorphism" ? k.is_isomorphism
               : require == "full"        ? k.full
               : require == "faithful"    ? k.faithful
                                          : k.essentially_surjective;
  if (!holds) {
    auto ws = k.witnesses;
    if (ws.empty()) ws.push_back({"property", require});
    std::string article = require == "equivalence" || require == "isomorphism" ? "an " : "";
    q.fail("the functor is not " + article + require, std::move(ws));
  }
  r.add(std::move(q));
  return r;
}

void emit(std::ostream& out, const std::string& command, const Report& r, bool as_json) {
  if (as_json) {
    nlohmann::json j;
    j["command"] = command;
    j["exit_code"] = exit_code(r);
    j["report"] = report_to_json(r);
    out << j.dump(2) << "\n";
  } else {
    out << render_text(r);
  }
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& command, const std::string& type,
                const std::string& message, const std::string& field, bool as_json) {
  if (as_json) {
    nlohmann::json j;
    j["command"] = command;
    j["exit_code"] = kExitInput;
    j["error"] = {{"type", type}, {"message", message}};
    if (!field.empty()) j["error"]["field"] = field;
    out << j.dump(2) << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite category theory checks", "cattool"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the report as JSON");

  std::string command;
  std::function<Report()> action;
  std::string doc;

  auto* laws = app.add_subcommand("laws", "Check unit and associativity laws of a category document");
  bool characterizations = false;
  laws->add_option("document", doc, "Category document")->required();
  laws->add_flag("--set-characterizations", characterizations, "Also compare mono/epi/iso with injective/surjective/bijective");
  laws->callback([&] {
    command = "laws";
    action = [&] { return laws_command(doc, characterizations); };
  });

  auto* cls = app.add_subcommand("classify", "Mono, epi, iso, sections and retractions of one morphism");
  std::string morphism, require;
  cls->add_option("document", doc, "Category document")->required();
  cls->add_option("--morphism", morphism, "Morphism name")->required();
  cls->add_option("--require", require, "Fail unless the property holds")
      ->check(CLI::IsMember({"mono", "epi", "iso", "section", "retraction"}));
  cls->callback([&] {
    command = "classify";
    action = [&] { return classify_command(doc, morphism, require); };
  });

  auto* uni = app.add_subcommand("universal", "Find initial or terminal objects");
  std::string kind;
  uni->add_option("document", doc, "Category document")->required();
  uni->add_option("--kind", kind, "initial or terminal")->required()->check(CLI::IsMember({"initial", "terminal"}));
  uni->callback([&] {
    command = "universal";
    action = [&] { return universal_command(doc, kind); };
  });

  auto* bin = app.add_subcommand("binary", "Find products or coproducts of two objects");
  std::string obj_a, obj_b;
  bin->add_option("document", doc, "Category document")->required();
  bin->add_option("--kind", kind, "product or coproduct")->required()->check(CLI::IsMember({"product", "coproduct"}));
  bin->add_option("--a", obj_a, "First object")->required();
  bin->add_option("--b", obj_b, "Second object")->required();
  bin->callback([&] {
    command = "binary";
    action = [&] { return binary_command(doc, kind, obj_a, obj_b); };
  });

  auto* fun = app.add_subcommand("functor", "Functor checks");
  fun->require_subcommand(1);
  auto* fun_check = fun->add_subcommand("check", "Check a functor document or a built-in Set functor");
  std::string builtin;
  std::size_t param = 2, max_size = 3;
  bool powerset = false;
  fun_check->add_option("document", doc, "Functor document");
  fun_check->add_option("--builtin", builtin, "list, maybe, times, plus, reader or hom");
  fun_check->add_option("--param", param, "Max length, |A| or |R| of the built-in functor");
  fun_check->add_option("--max-size", max_size, "Largest set size checked");
  fun_check->add_flag("--powerset", powerset, "Contravariant powerset functor");
  fun_check->callback([&] {
    command = "functor check";
    action = [&] { return functor_command(doc, builtin, param, max_size, powerset); };
  });

  auto* nat = app.add_subcommand("nattrans", "Natural transformation checks");
  nat->require_subcommand(1);
  auto* nat_check = nat->add_subcommand("check", "Check a natural transformation document");
  nat_check->add_option("document", doc, "Natural transformation document")->required();
  nat_check->callback([&] {
    command = "nattrans check";
    action = [&] { return nattrans_command(doc); };
  });

  auto* adj = app.add_subcommand("adjunction", "Adjunction checks");
  adj->require_subcommand(1);
  auto* adj_check = adj->add_subcommand("check", "Check an adjunction document or a built-in adjunction");
  AdjunctionArgs aa;
  adj_check->add_option("document", aa.document, "Adjunction document");
  adj_check->add_flag("--currying", aa.currying, "- x Y left adjoint to Y -> -");
  adj_check->add_option("--y", aa.y, "|Y| for --currying");
  adj_check->add_option("--n", aa.n, "Largest set size for --currying");
  adj_check->add_flag("--uniqueness", aa.uniqueness, "Also search for the natural iso between right adjoints");
  adj_check->add_flag("--free-forget", aa.free_forget, "Free monoid left adjoint to the forgetful functor");
  adj_check->add_option("--gens", aa.gens, "Generators for --free-forget");
  adj_check->add_option("--monoid", aa.monoid, "Monoid for --free-forget");
  adj_check->add_option("--max-len", aa.max_len, "Word length bound for --free-forget");
  adj_check->add_option("--identity", aa.identity, "Identity adjunction on a category document");
  adj_check->callback([&] {
    command = "adjunction check";
    action = [&] { return adjunction_command(aa); };
  });

  auto* mon = app.add_subcommand("monad", "Monad checks");
  mon->require_subcommand(1);
  auto* mon_laws = mon->add_subcommand("laws", "Kleisli and monad laws of a built-in instance");
  MonadArgs ma;
  mon_laws->add_option("--instance", ma.p.name, "list, tree, exception, powerset, reader or continuation")
      ->required()
      ->check(CLI::IsMember(instance_names()));
  mon_laws->add_option("--x", ma.p.x, "|X|");
  mon_laws->add_option("--y", ma.p.y, "|Y|");
  mon_laws->add_option("--z", ma.p.z, "|Z|");
  mon_laws->add_option("--e", ma.p.e, "|E| for exception, |R| for reader and continuation");
  mon_laws->add_option("--max-len", ma.p.max_len, "List length bound");
  mon_laws->add_option("--max-depth", ma.p.max_depth, "Tree depth bound");
  mon_laws->add_option("--samples", ma.samples, "Sample size when T^3 exceeds the search limit");
  mon_laws->add_option("--seed", ma.seed, "Sampling seed");
  mon_laws->add_flag("--constant-unit", ma.constant_unit, "Replace the unit by x -> eta(0) (harness self-test)");
  mon_laws->add_option("--kleisli-category", ma.kleisli_objects, "Also check the Kleisli category on these set sizes")
      ->delimiter(',');
  mon_laws->callback([&] {
    command = "monad laws";
    action = [&] { return monad_command(ma); };
  });

  auto* fo = app.add_subcommand("fold", "Evaluate a catamorphism or check its laws");
  FoldArgs fa;
  std::string fold_expect;
  fo->add_option("--datatype", fa.datatype, "nat, list, btree or exp")
      ->check(CLI::IsMember({"nat", "list", "btree", "exp", "bool"}));
  fo->add_option("--algebra", fa.algebra, "Algebra name, e.g. sum, bin2int, eval")->required();
  fo->add_option("--term", fa.term, "Term literal");
  auto* fo_expect = fo->add_option("--expect", fold_expect, "Fail unless the value matches");
  fo->add_flag("--laws", fa.laws, "Check the catamorphism laws on all terms to --depth");
  fo->add_option("--depth", fa.depth, "Term depth for --laws");
  fo->callback([&] {
    command = "fold";
    if (fo_expect->count()) fa.expect = fold_expect;
    action = [&] { return fold_command(fa); };
  });

  auto* un = app.add_subcommand("unfold", "Observe a stream or check the conaturals");
  UnfoldArgs ua;
  std::string unfold_expect;
  un->add_option("--stream", ua.stream, "nats, zip or diagonal")->check(CLI::IsMember({"nats", "zip", "diagonal"}));
  un->add_option("--start", ua.start, "First state");
  un->add_option("--start2", ua.start2, "First state of the second zipped stream");
  un->add_option("--bound", ua.bound, "Largest natural a stream may reach");
  un->add_option("--take", ua.take, "Number of observations");
  auto* un_expect = un->add_option("--expect", unfold_expect, "Fail unless the observation matches");
  un->add_flag("--conat", ua.conat, "Terminality of the conaturals and the coalgebra category");
  un->add_option("--max-size", ua.max_size, "Largest carrier for --conat");
  un->callback([&] {
    command = "unfold";
    if (un_expect->count()) ua.expect = unfold_expect;
    action = [&] { return unfold_command(ua); };
  });

  auto* fu = app.add_subcommand("fusion", "Fold fusion demonstrations");
  FusionArgs fua;
  fu->add_option("--demo", fua.demo, "sum-plus-one, sum-times-two or map-map")
      ->required()
      ->check(CLI::IsMember({"sum-plus-one", "sum-times-two", "map-map"}));
  fu->add_option("--lo", fua.lo, "Smallest list entry");
  fu->add_option("--hi", fua.hi, "Largest list entry");
  fu->add_option("--max-len", fua.max_len, "Longest list");
  fu->add_option("--n", fua.n, "Set size for map-map");
  fu->callback([&] {
    command = "fusion";
    action = [&] { return fusion_command(fua); };
  });

  auto* fm = app.add_subcommand("free-monoid", "Free monoid checks");
  fm->require_subcommand(1);
  auto* uvp = fm->add_subcommand("uvp", "Universal property on words up to a length");
  UvpArgs va;
  uvp->add_option("--gens", va.gens, "Number of generators");
  uvp->add_option("--monoid", va.monoid, "z<n>, trivial, bool-and or bool-or");
  uvp->add_option("--max-len", va.max_len, "Word length bound");
  uvp->add_option("--f", va.f, "Images of the generators; every f when omitted")->delimiter(',');
  uvp->add_option("--candidate", va.candidate, "A table on the words, shortest first")->delimiter(',');
  uvp->callback([&] {
    command = "free-monoid uvp";
    action = [&] { return uvp_command(va); };
  });

  auto* eq = app.add_subcommand("equiv", "Equivalence checks");
  eq->require_subcommand(1);
  auto* eq_check = eq->add_subcommand("check", "Classify a functor; the default is finset to finord");
  std::size_t eq_n = 3;
  std::string eq_require = "equivalence";
  eq_check->add_option("document", doc, "Functor document");
  eq_check->add_option("--n", eq_n, "Size bound of finset_to_finord");
  eq_check->add_option("--require", eq_require, "Property to insist on")
      ->check(CLI::IsMember({"equivalence", "isomorphism", "full", "faithful", "essentially-surjective"}));
  eq_check->callback([&] {
    command = "equiv check";
    action = [&] { return equiv_command(doc, eq_n, eq_require); };
  });

  std::vector<std::string> argv_store{"cattool"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    Report r = action();
    emit(out, command, r, as_json);
    return exit_code(r);
  } catch (const DocumentError& e) {
    emit_error(out, err, command, "schema", e.what(), e.field(), as_json);
  } catch (const InfiniteCategoryError& e) {
    emit_error(out, err, command, "infinite category", e.what(), "", as_json);
  } catch (const ConstructionError& e) {
    emit_error(out, err, command, "construction", e.what(), "", as_json);
  } catch (const SizeLimitError& e) {
    emit_error(out, err, command, "size limit", e.what(), "", as_json);
  } catch (const Error& e) {
    emit_error(out, err, command, "input", e.what(), "", as_json);
  } catch (const std::exception& e) {
    emit_error(out, err, command, "internal", e.what(), "", as_json);
  }
  return kExitInput;
}

}  // namespace cattool::cli
