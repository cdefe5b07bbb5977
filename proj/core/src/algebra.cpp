#include "cattool/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

#include "cattool/error.hpp"
#include "cattool/queries.hpp"

namespace cattool {

namespace {

Value tagged(long tag, Value inner) { return Value::seq({Value::of(tag), std::move(inner)}); }

Value pair(Value a, Value b) { return Value::seq({std::move(a), std::move(b)}); }

std::string show_value(const AlgebraSpec& alg, const Value& v) { return alg.show ? alg.show(v) : to_string(v); }

Arrow1 identity_arrow() {
  return [](const Value& v) { return v; };
}

// Finite carrier maps are stored as atoms; h[i] is the image of terms.term(i).
Value shape_image(const AlgebraSpec& alg, const Value& shape, const std::vector<Value>& h) {
  return alg.phi(poly_map(alg.functor, [&h](const Value& c) { return h.at(static_cast<std::size_t>(c.atom)); },
                          shape));
}

std::string count_text(double x) {
  std::ostringstream out;
  out.precision(15);
  out << x;
  return out.str();
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << "]";
  return out.str();
}

Report uniqueness_report(const AlgebraSpec& alg, const TermTable& terms, const std::vector<Value>& vals) {
  Report r("uniqueness");
  if (!alg.finite_carrier) {
    r.not_applicable("carrier is not finite");
    return r;
  }
  const std::size_t n = *alg.finite_carrier;
  const std::size_t count = terms.size();
  double space = std::pow(static_cast<double>(n), static_cast<double>(count));
  if (space <= 1e5) {
    // Every map terms -> carrier; exactly one may commute with the squares.
    std::vector<std::size_t> idx(count, 0);
    std::vector<Value> h(count, Value::of(0));
    std::size_t commuting = 0;
    std::vector<std::size_t> first, second;
    while (true) {
      for (std::size_t i = 0; i < count; ++i) h[i] = Value::of(static_cast<long>(idx[i]));
      bool ok = true;
      for (std::size_t i = 0; i < count && ok; ++i) ok = shape_image(alg, terms.shapes[i], h) == h[i];
      r.tick();
      if (ok) {
        ++commuting;
        if (commuting == 1) first = idx;
        else if (commuting == 2) second = idx;
      }
      std::size_t k = 0;
      while (k < count && ++idx[k] == n) idx[k++] = 0;
      if (k == count) break;
    }
    if (commuting != 1) {
      std::vector<Witness> ws{{"algebra", alg.name}, {"commuting maps", std::to_string(commuting)}};
      if (commuting >= 2) {
        ws.push_back({"h1", join(first)});
        ws.push_back({"h2", join(second)});
      }
      r.fail("expected exactly one algebra map from the terms", std::move(ws));
      return r;
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (Value::of(static_cast<long>(first[i])) != vals[i]) {
        r.fail("the unique map differs from cata",
               {{"term", show_term(terms.functor, terms.term(i))}, {"cata", show_value(alg, vals[i])}});
        break;
      }
    }
    return r;
  }
  // The squares force h on each term from its children; terms come children first.
  std::vector<Value> forced(count, Value::of(0));
  for (std::size_t i = 0; i < count; ++i) {
    forced[i] = shape_image(alg, terms.shapes[i], forced);
    r.tick();
    if (forced[i] != vals[i]) {
      r.fail("value forced by the squares differs from cata",
             {{"term", show_term(terms.functor, terms.term(i))},
              {"forced", show_value(alg, forced[i])},
              {"cata", show_value(alg, vals[i])}});
    }
  }
  r.note("values forced term by term; brute force would need " + count_text(space) + " candidates");
  return r;
}

std::vector<Value> cata_values(const AlgebraSpec& alg, const TermTable& terms) {
  std::vector<Value> vals(terms.size(), Value::of(0));
  for (std::size_t i = 0; i < terms.size(); ++i) vals[i] = shape_image(alg, terms.shapes[i], vals);
  return vals;
}

std::vector<Value> atoms(std::size_t n) {
  std::vector<Value> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Value::of(static_cast<long>(i)));
  return xs;
}

Value of_longs(const std::vector<long>& xs) {
  std::vector<Value> vs;
  for (long x : xs) vs.push_back(Value::of(x));
  return Value::seq(std::move(vs));
}

// nil -> nil_value, cons(a, x) -> cons(a, x).
AlgebraSpec list_algebra(std::string name, const std::vector<long>& labels, Value nil_value,
                         std::function<Value(long, const Value&)> cons) {
  AlgebraSpec alg;
  alg.name = std::move(name);
  alg.functor = poly_list(labels);
  alg.phi = [nil_value, cons](const Value& s) {
    if (s.kind != Value::Kind::seq || s.items.size() != 2) throw ShapeError("not a list layer: " + to_string(s));
    if (s.items[0].atom == 0) return nil_value;
    const Value& p = s.items[1];
    return cons(p.items.at(0).atom, p.items.at(1));
  };
  alg.exported = identity_arrow();
  return alg;
}

AlgebraSpec with_projection(AlgebraSpec alg) {
  alg.exported = [](const Value& v) { return v.items.at(0); };
  return alg;
}

Value cons_front(long a, const Value& xs) {
  std::vector<Value> out{Value::of(a)};
  out.insert(out.end(), xs.items.begin(), xs.items.end());
  return Value::seq(std::move(out));
}

}  // namespace

Value cata(const AlgebraSpec& alg, const Value& t) {
  return alg.phi(poly_map(alg.functor, [&alg](const Value& c) { return cata(alg, c); }, out(t)));
}

Value fold(const AlgebraSpec& alg, const Value& t) {
  Value v = cata(alg, t);
  return alg.exported ? alg.exported(v) : v;
}

AlgebraSpec in_algebra(const Poly& f) {
  AlgebraSpec alg;
  alg.name = "in";
  alg.functor = f;
  alg.phi = [](const Value& s) { return in(s); };
  alg.exported = identity_arrow();
  alg.show = [f](const Value& t) { return show_term(f, t); };
  return alg;
}

AlgebraSpec table_algebra(const Poly& f, std::size_t n, std::vector<std::size_t> table, std::string name) {
  auto values = poly_values(f, atoms(n));
  if (table.size() != values.size())
    throw ConstructionError("algebra table needs " + std::to_string(values.size()) + " entries, got " +
                            std::to_string(table.size()));
  auto index = std::make_shared<std::map<Value, std::size_t>>();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (table[i] >= n) throw ConstructionError("algebra table entry out of range: " + std::to_string(table[i]));
    (*index)[values[i]] = table[i];
  }
  AlgebraSpec alg;
  alg.name = name.empty() ? "table " + join(table) : std::move(name);
  alg.functor = f;
  alg.finite_carrier = n;
  alg.phi = [index](const Value& s) {
    auto it = index->find(s);
    if (it == index->end()) throw ShapeError("not an element of F(carrier): " + to_string(s));
    return Value::of(static_cast<long>(it->second));
  };
  alg.exported = identity_arrow();
  return alg;
}

double table_algebra_count(const Poly& f, std::size_t n) {
  return std::pow(static_cast<double>(n), poly_count(f, static_cast<double>(n)));
}

std::vector<AlgebraSpec> enumerate_table_algebras(const Poly& f, std::size_t n) {
  require_within(table_algebra_count(f, n), static_cast<double>(search_limit()), "algebras on a carrier");
  std::size_t width = poly_values(f, atoms(n)).size();
  std::vector<AlgebraSpec> out;
  if (n == 0) {
    if (width == 0) out.push_back(table_algebra(f, 0, {}));
    return out;
  }
  std::vector<std::size_t> idx(width, 0);
  while (true) {
    out.push_back(table_algebra(f, n, idx));
    std::size_t k = 0;
    while (k < width && ++idx[k] == n) idx[k++] = 0;
    if (k == width) break;
  }
  return out;
}

AlgebraSpec sample_table_algebra(const Poly& f, std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw ConstructionError("cannot sample an algebra on the empty carrier");
  std::size_t width = poly_values(f, atoms(n)).size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> table(width);
  for (auto& x : table) x = pick(rng);
  return table_algebra(f, n, std::move(table));
}

Report check_cata_laws(const AlgebraSpec& alg, const TermTable& terms) {
  Report report("catamorphism laws: " + alg.name);
  Report square("cata(in s) = phi(F(cata) s)");
  Report ident("cata(in) = id");
  std::vector<Value> vals(terms.size(), Value::of(0));
  const AlgebraSpec in_alg = in_algebra(terms.functor);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Value t = terms.term(i);
    vals[i] = cata(alg, t);
    square.tick();
    Value rhs = shape_image(alg, terms.shapes[i], vals);
    if (vals[i] != rhs)
      square.fail("square does not commute",
                  {{"term", show_term(terms.functor, t)}, {"cata", show_value(alg, vals[i])},
                   {"phi(F(cata))", show_value(alg, rhs)}});
    ident.tick();
    if (cata(in_alg, t) != t) ident.fail("cata(in) moved a term", {{"term", show_term(terms.functor, t)}});
  }
  report.add(std::move(square));
  report.add(std::move(ident));
  report.add(uniqueness_report(alg, terms, vals));
  return report;
}

Report check_cata_laws(const AlgebraSpec& alg, std::size_t depth) {
  return check_cata_laws(alg, enumerate_terms(alg.functor, depth));
}

Report check_initiality_sweep(const Poly& f, std::size_t max_carrier, std::size_t depth, std::size_t cap,
                              std::uint64_t seed) {
  Report report("initiality of the term algebra for " + to_string(f));
  TermTable terms = enumerate_terms(f, depth);
  report.note(std::to_string(terms.size()) + " terms up to depth " + std::to_string(depth));
  std::mt19937_64 rng(seed);
  for (std::size_t n = 1; n <= max_carrier; ++n) {
    Report sized("carrier size " + std::to_string(n));
    double count = table_algebra_count(f, n);
    auto visit = [&](const AlgebraSpec& alg) {
      Report u = uniqueness_report(alg, terms, cata_values(alg, terms));
      sized.tick();
      if (!u.passed() && u.status != Status::not_applicable) {
        auto ws = u.witnesses;
        ws.insert(ws.begin(), {"algebra", alg.name});
        sized.fail(u.detail, std::move(ws));
      }
    };
    if (count <= static_cast<double>(cap)) {
      for (const auto& alg : enumerate_table_algebras(f, n)) visit(alg);
    } else {
      for (std::size_t i = 0; i < cap; ++i) visit(sample_table_algebra(f, n, rng));
      sized.note("sampled " + std::to_string(cap) + " of " + count_text(count) + " algebras");
    }
    report.add(std::move(sized));
  }
  return report;
}

AlgebraSpec nat_value_algebra() {
  AlgebraSpec alg;
  alg.name = "value";
  alg.functor = poly_nat();
  alg.phi = [](const Value& s) {
    if (s.items.at(0).atom == 0) return Value::of(0);
    return Value::of(s.items.at(1).atom + 1);
  };
  alg.exported = identity_arrow();
  return alg;
}

AlgebraSpec exp_eval_algebra(std::vector<long> labels) {
  AlgebraSpec alg;
  alg.name = "eval";
  alg.functor = poly_exp(std::move(labels));
  alg.phi = [](const Value& s) {
    if (s.items.at(0).atom == 0) return s.items.at(1);
    const Value& inner = s.items.at(1);
    if (inner.items.at(0).atom == 0) {
      const Value& p = inner.items.at(1);
      return Value::of(p.items.at(0).atom + p.items.at(1).atom);
    }
    long x = inner.items.at(1).atom;
    return Value::of(x * x);
  };
  alg.exported = identity_arrow();
  return alg;
}

AlgebraSpec btree_sum_algebra(std::vector<long> labels) {
  AlgebraSpec alg;
  alg.name = "sum";
  alg.functor = poly_btree(std::move(labels));
  alg.phi = [](const Value& s) {
    if (s.items.at(0).atom == 0) return s.items.at(1);
    const Value& p = s.items.at(1);
    return Value::of(p.items.at(0).atom + p.items.at(1).atom);
  };
  alg.exported = identity_arrow();
  return alg;
}

AlgebraSpec btree_leaves_algebra(std::vector<long> labels) {
  AlgebraSpec alg = btree_sum_algebra(std::move(labels));
  alg.name = "leaves";
  alg.phi = [](const Value& s) {
    if (s.items.at(0).atom == 0) return Value::of(1);
    const Value& p = s.items.at(1);
    return Value::of(p.items.at(0).atom + p.items.at(1).atom);
  };
  return alg;
}

std::vector<std::string> fold_library_names() {
  return {"sum", "product", "and", "or", "append", "length", "reverse", "map", "filter",
          "bin2int", "bin2int2", "bin2int2_pair"};
}

AlgebraSpec fold_library(const std::string& name, const std::vector<long>& labels, const FoldOptions& opts) {
  using V = Value;
  if (name == "sum") return list_algebra(name, labels, V::of(0), [](long a, const V& x) { return V::of(a + x.atom); });
  if (name == "product")
    return list_algebra(name, labels, V::of(1), [](long a, const V& x) { return V::of(a * x.atom); });
  if (name == "and")
    return list_algebra(name, labels, V::of(1), [](long a, const V& x) { return V::of(a != 0 && x.atom != 0); });
  if (name == "or")
    return list_algebra(name, labels, V::of(0), [](long a, const V& x) { return V::of(a != 0 || x.atom != 0); });
  if (name == "length")
    return list_algebra(name, labels, V::of(0), [](long, const V& x) { return V::of(x.atom + 1); });
  if (name == "append") return list_algebra(name, labels, of_longs(opts.tail), cons_front);
  if (name == "reverse")
    return list_algebra(name, labels, V::seq({}), [](long a, const V& x) {
      V out = x;
      out.items.push_back(V::of(a));
      return out;
    });
  if (name == "map") {
    if (!opts.map_fn) throw LookupError("map needs a function");
    auto g = opts.map_fn;
    return list_algebra(name, labels, V::seq({}), [g](long a, const V& x) { return cons_front(g(a), x); });
  }
  if (name == "filter") {
    if (!opts.predicate) throw LookupError("filter needs a predicate");
    auto p = opts.predicate;
    return list_algebra(name, labels, V::seq({}), [p](long a, const V& x) { return p(a) ? cons_front(a, x) : x; });
  }
  if (name == "bin2int") {
    // Most significant digit first: a contributes a * 2^(digits after it).
    return with_projection(list_algebra(name, labels, pair(V::of(0), V::of(1)), [](long a, const V& x) {
      long v = x.items.at(0).atom, p = x.items.at(1).atom;
      return pair(V::of(a * p + v), V::of(2 * p));
    }));
  }
  if (name == "bin2int2")
    return list_algebra(name, labels, V::of(0), [](long a, const V& x) { return V::of(a + 2 * x.atom); });
  if (name == "bin2int2_pair") {
    return with_projection(list_algebra(name, labels, pair(V::of(0), V::of(0)), [](long a, const V& x) {
      return pair(V::of(a + 2 * x.items.at(0).atom), V::of(x.items.at(1).atom + 1));
    }));
  }
  throw LookupError("unknown fold: " + name);
}

AlgebraSpec algebra_catalog(const std::string& datatype, const std::string& name) {
  if (datatype == "nat" && name == "value") return nat_value_algebra();
  if (datatype == "exp" && name == "eval") return exp_eval_algebra(label_range(kExpLabelMin, kExpLabelMax));
  if (datatype == "btree" && name == "sum") return btree_sum_algebra({0, 1});
  if (datatype == "btree" && name == "leaves") return btree_leaves_algebra({0, 1});
  if (datatype == "list") {
    FoldOptions opts;
    // Command-line defaults for the parameterised folds.
    opts.map_fn = [](long a) { return a + 1; };
    opts.predicate = [](long a) { return a != 0; };
    return fold_library(name, {0, 1}, opts);
  }
  throw LookupError("no algebra '" + name + "' for datatype '" + datatype + "'");
}

std::optional<std::vector<Witness>> fold_obstruction(const TermTable& terms, const Arrow1& h) {
  std::map<Value, std::pair<std::size_t, Value>> seen;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Value t = terms.term(i);
    Value key = poly_map(terms.functor, h, out(t));
    Value ht = h(t);
    auto [it, fresh] = seen.emplace(key, std::make_pair(i, ht));
    if (!fresh && it->second.second != ht) {
      Value t1 = terms.term(it->second.first);
      return std::vector<Witness>{{"t1", show_term(terms.functor, t1)},
                                  {"t2", show_term(terms.functor, t)},
                                  {"F(h)(out t1) = F(h)(out t2)", to_string(key)},
                                  {"h(t1)", to_string(it->second.second)},
                                  {"h(t2)", to_string(ht)}};
    }
  }
  return std::nullopt;
}

Report lambek_check(const Poly& f, std::size_t depth, std::optional<Arrow1> in_inverse) {
  Report report("Lambek: in is an isomorphism");
  Arrow1 inv;
  if (in_inverse) {
    inv = *in_inverse;
  } else {
    AlgebraSpec alg;
    alg.name = "F(in)";
    alg.functor = f;
    alg.phi = [f](const Value& s) { return poly_map(f, [](const Value& x) { return in(x); }, s); };
    inv = [alg](const Value& t) { return cata(alg, t); };
    report.note("in^-1 = cata(F(in))");
  }
  TermTable terms = enumerate_terms(f, depth);
  Report left("in^-1;in = id");
  Report right("in;in^-1 = id");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Value t = terms.term(i);
    left.tick();
    Value s = inv(t);
    if (in(s) != t) left.fail("in(in^-1 t) differs from t", {{"t", show_term(f, t)}, {"in^-1 t", to_string(s)}});
    // out(t) ranges over F applied to the terms one level down.
    const Value& layer = out(t);
    right.tick();
    Value round;
    try {
      round = inv(in(layer));
    } catch (const Error& e) {
      right.fail(std::string("in^-1 rejected a layer: ") + e.what(), {{"s", to_string(layer)}});
      continue;
    }
    if (round != layer) right.fail("in^-1(in s) differs from s", {{"s", to_string(layer)}, {"in^-1(in s)", to_string(round)}});
  }
  report.add(std::move(left));
  report.add(std::move(right));
  return report;
}

namespace {

FusionResult fusion_impl(const AlgebraSpec& phi, const AlgebraSpec& psi, const Arrow1& f,
                         const std::vector<std::pair<std::string, std::vector<Value>>>& cases, const TermTable& terms,
                         std::string name) {
  FusionResult res;
  res.report = Report(std::move(name));
  Report premise("premise: phi;f = F(f);psi");
  for (const auto& [label, inputs] : cases) {
    Report c(label);
    for (const auto& s : inputs) {
      c.tick();
      Value lhs = f(phi.phi(s));
      Value rhs = psi.phi(poly_map(phi.functor, f, s));
      if (lhs != rhs) c.fail("premise fails", {{"s", to_string(s)}, {"f(phi s)", to_string(lhs)}, {"psi(F(f) s)", to_string(rhs)}});
    }
    premise.add(std::move(c));
  }
  res.premise_holds = premise.passed();
  Report conclusion("conclusion: cata(phi);f = cata(psi)");
  if (res.premise_holds) {
    auto a = cata_values(phi, terms);
    auto b = cata_values(psi, terms);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      conclusion.tick();
      Value lhs = f(a[i]);
      if (lhs != b[i])
        conclusion.fail("conclusion fails",
                        {{"term", show_term(terms.functor, terms.term(i))}, {"f(cata phi)", to_string(lhs)},
                         {"cata psi", to_string(b[i])}});
    }
    res.conclusion_holds = conclusion.passed();
  } else {
    conclusion.not_applicable("not asserted: the premise does not hold");
  }
  res.report.add(std::move(premise));
  res.report.add(std::move(conclusion));
  return res;
}

std::vector<std::pair<std::string, std::vector<Value>>> sum_premise_cases(long lo, long hi, std::size_t max_len) {
  std::vector<Value> nil{tagged(0, Value::of(0))};
  std::vector<Value> cons;
  long n_lo = std::min(0L, lo * static_cast<long>(max_len)) - 2;
  long n_hi = std::max(0L, hi * static_cast<long>(max_len)) + 2;
  for (long a = lo; a <= hi; ++a)
    for (long n = n_lo; n <= n_hi; ++n) cons.push_back(tagged(1, pair(Value::of(a), Value::of(n))));
  return {{"nil case: f 0 = 1", nil}, {"cons case: f (a + n) = a + f n", cons}};
}

FusionResult sum_fusion(long lo, long hi, std::size_t max_len, long mul, long add, std::string name) {
  auto labels = label_range(lo, hi);
  AlgebraSpec phi = fold_library("sum", labels);
  AlgebraSpec psi = list_algebra("fold (+) 1", labels, Value::of(1), [](long a, const Value& x) {
    return Value::of(a + x.atom);
  });
  Arrow1 f = [mul, add](const Value& v) { return Value::of(v.atom * mul + add); };
  return fusion_impl(phi, psi, f, sum_premise_cases(lo, hi, max_len), enumerate_terms(phi.functor, max_len + 1),
                     std::move(name));
}

}  // namespace

FusionResult fusion_check(const AlgebraSpec& phi, const AlgebraSpec& psi, const Arrow1& f,
                          const std::vector<Value>& premise_inputs, const TermTable& terms) {
  return fusion_impl(phi, psi, f, {{"all cases", premise_inputs}}, terms, "fusion: " + phi.name + " / " + psi.name);
}

FusionResult fusion_sum_plus_one(long lo, long hi, std::size_t max_len) {
  return sum_fusion(lo, hi, max_len, 1, 1, "(+1) after sum = fold (+) 1");
}

FusionResult fusion_sum_times_two(long lo, long hi, std::size_t max_len) {
  return sum_fusion(lo, hi, max_len, 2, 0, "(*2) after sum = fold (+) 1");
}

Report fusion_map_map(std::size_t n, std::size_t max_len) {
  Report report("map g after map f = map (f;g)");
  auto labels = label_range(0, static_cast<long>(n) - 1);
  TermTable terms = enumerate_terms(poly_list(labels), max_len + 1);
  // Carrier lists up to max_len for the premise.
  std::vector<Value> lists{Value::seq({})};
  for (std::size_t start = 0, len = 0; len < max_len; ++len) {
    std::size_t end = lists.size();
    for (std::size_t i = start; i < end; ++i)
      for (long a : labels) lists.push_back(cons_front(a, lists[i]));
    start = end;
  }
  std::vector<Value> cons;
  for (long a : labels)
    for (const auto& xs : lists) cons.push_back(tagged(1, pair(Value::of(a), xs)));
  std::vector<std::pair<std::string, std::vector<Value>>> cases{{"nil case", {tagged(0, Value::of(0))}},
                                                                {"cons case", cons}};
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  auto table_of = [n](std::size_t code) {
    std::vector<long> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<long>(code % n);
      code /= n;
    }
    return t;
  };
  for (std::size_t fi = 0; fi < total; ++fi) {
    for (std::size_t gi = 0; gi < total; ++gi) {
      auto ft = table_of(fi), gt = table_of(gi);
      FoldOptions fo, fgo;
      fo.map_fn = [ft](long a) { return ft[static_cast<std::size_t>(a)]; };
      fgo.map_fn = [ft, gt](long a) { return gt[static_cast<std::size_t>(ft[static_cast<std::size_t>(a)])]; };
      AlgebraSpec phi = fold_library("map", labels, fo);
      AlgebraSpec psi = fold_library("map", labels, fgo);
      Arrow1 h = [gt](const Value& xs) {
        Value out = xs;
        for (auto& x : out.items) x = Value::of(gt[static_cast<std::size_t>(x.atom)]);
        return out;
      };
      std::ostringstream name;
      name << "f = " << to_string(of_longs(ft)) << ", g = " << to_string(of_longs(gt));
      FusionResult r = fusion_impl(phi, psi, h, cases, terms, name.str());
      report.tick();
      report.add(std::move(r.report));
    }
  }
  return report;
}

Value mu_map(const Poly& f2, const Arrow1& g, const Value& t) {
  AlgebraSpec alg;
  alg.name = "in . F(g, id)";
  alg.functor = f2;
  alg.phi = [f2, g](const Value& s) { return in(poly_bimap(f2, g, identity_arrow(), s)); };
  return cata(alg, t);
}

Report check_mu_functor(const Poly& f2, const std::vector<long>& labels, std::size_t depth) {
  Report report("mu F(A, -) is a functor in A");
  TermTable terms = enumerate_terms(instantiate(f2, labels), depth);
  const std::size_t n = labels.size();
  std::map<long, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[labels[i]] = i;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  require_within(static_cast<double>(total) * static_cast<double>(total) * static_cast<double>(terms.size()),
                 static_cast<double>(search_limit()) * 10, "functor law inputs");
  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> t(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = c % n;
      c /= n;
    }
    tables.push_back(std::move(t));
  }
  auto arrow = [&](const std::vector<std::size_t>& t) -> Arrow1 {
    return [t, &labels, &pos](const Value& v) { return Value::of(labels[t[pos.at(v.atom)]]); };
  };
  Report ident("mu(id) = id");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Value t = terms.term(i);
    ident.tick();
    if (mu_map(f2, identity_arrow(), t) != t) ident.fail("identity moved a term", {{"term", to_string(t)}});
  }
  Report comp("mu(g1;g2) = mu(g1);mu(g2)");
  std::vector<Value> ts;
  for (std::size_t i = 0; i < terms.size(); ++i) ts.push_back(terms.term(i));
  for (const auto& t1 : tables) {
    for (const auto& t2 : tables) {
      std::vector<std::size_t> t12(n);
      for (std::size_t i = 0; i < n; ++i) t12[i] = t2[t1[i]];
      Arrow1 g1 = arrow(t1), g2 = arrow(t2), g12 = arrow(t12);
      for (const auto& t : ts) {
        comp.tick();
        Value lhs = mu_map(f2, g12, t);
        Value rhs = mu_map(f2, g2, mu_map(f2, g1, t));
        if (lhs != rhs)
          comp.fail("composition not preserved",
                    {{"g1", join(t1)}, {"g2", join(t2)}, {"term", to_string(t)}});
      }
    }
  }
  report.add(std::move(ident));
  report.add(std::move(comp));
  return report;
}

FinCat id_algebra_category(const FinCat& c) {
  c.require_complete("Id-algebra category");
  FinCat::Builder b;
  struct Obj {
    ObjId x;
    MorId phi;
  };
  std::vector<Obj> objs;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    for (MorId phi : c.hom(x, x)) {
      objs.push_back({x, phi});
      b.add_object("(" + c.object_name(x) + ", " + c.morphism_name(phi) + ")");
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < objs.size(); ++i) names.push_back("(" + c.object_name(objs[i].x) + ", " + c.morphism_name(objs[i].phi) + ")");
  auto under = std::make_shared<std::vector<MorId>>();
  auto ends = std::make_shared<std::vector<std::pair<std::size_t, std::size_t>>>();
  auto lookup = std::make_shared<std::map<std::tuple<std::size_t, std::size_t, MorId>, MorId>>();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      for (MorId f : c.hom(objs[i].x, objs[j].x)) {
        if (c.compose(objs[i].phi, f) != c.compose(f, objs[j].phi)) continue;
        MorId id = b.add_morphism(c.morphism_name(f) + " : " + names[i] + " -> " + names[j], i, j);
        under->push_back(f);
        ends->push_back({i, j});
        (*lookup)[{i, j, f}] = id;
        if (i == j && f == c.identity(objs[i].x)) b.set_identity(i, id);
      }
    }
  }
  const FinCat* base = &c;
  b.set_rule([under, ends, lookup, base](MorId f, MorId g) -> std::optional<MorId> {
    MorId h = base->compose((*under)[f], (*under)[g]);
    auto it = lookup->find({(*ends)[f].first, (*ends)[g].second, h});
    if (it == lookup->end()) return std::nullopt;
    return it->second;
  });
  return b.build();
}

Report initial_object_is_initial_algebra_of_id(const FinCat& c) {
  Report report("initial object gives the initial Id-algebra");
  UniversalWitness w = find_universal(c, UniversalKind::initial);
  if (w.objects.empty()) {
    report.not_applicable("the category has no initial object");
    return report;
  }
  FinCat algs = id_algebra_category(c);
  Report laws = check_laws(algs);
  laws.check = "Id-algebras form a category";
  report.add(std::move(laws));
  UniversalWitness wa = find_universal(algs, UniversalKind::initial);
  for (ObjId bot : w.objects) {
    std::string name = "(" + c.object_name(bot) + ", " + c.morphism_name(c.identity(bot)) + ")";
    Report r(name + " is initial");
    r.tick();
    ObjId a = algs.object_id(name);
    if (std::find(wa.objects.begin(), wa.objects.end(), a) == wa.objects.end())
      r.fail("not initial among Id-algebras", {{"algebra", name}});
    report.add(std::move(r));
  }
  return report;
}

Report check_conat_algebra_initiality(std::size_t k) {
  Report report("(N + inf, zero, succ) is an initial algebra of 1 + X");
  // Points: Fin 0..k at 0..k, inf at k + 1. succ(Fin k) leaves the window.
  const std::size_t pts = k + 2, inf = k + 1;
  Report count("algebra maps agree with the fixed points of s");
  std::optional<std::vector<Witness>> witness;
  for (std::size_t x = 1; x <= 2; ++x) {
    std::size_t tables = 1;
    for (std::size_t i = 0; i < x; ++i) tables *= x;
    for (std::size_t z = 0; z < x; ++z) {
      for (std::size_t code = 0; code < tables; ++code) {
        std::vector<std::size_t> s(x);
        for (std::size_t i = 0, cc = code; i < x; ++i, cc /= x) s[i] = cc % x;
        std::size_t fixed = 0;
        for (std::size_t i = 0; i < x; ++i) fixed += s[i] == i;
        // Every h on the window commuting with zero and succ where defined.
        std::vector<std::vector<std::size_t>> homs;
        std::size_t maps = 1;
        for (std::size_t i = 0; i < pts; ++i) maps *= x;
        for (std::size_t m = 0; m < maps; ++m) {
          std::vector<std::size_t> h(pts);
          for (std::size_t i = 0, cc = m; i < pts; ++i, cc /= x) h[i] = cc % x;
          bool ok = h[0] == z && s[h[inf]] == h[inf];
          for (std::size_t n = 0; n < k && ok; ++n) ok = h[n + 1] == s[h[n]];
          if (ok) homs.push_back(std::move(h));
        }
        count.tick();
        if (homs.size() != fixed)
          count.fail("map count differs from the fixed point count",
                     {{"z", std::to_string(z)}, {"s", join(s)}, {"maps", std::to_string(homs.size())}});
        if (homs.size() >= 2 && !witness) {
          witness = std::vector<Witness>{{"carrier size", std::to_string(x)},
                                         {"z", std::to_string(z)},
                                         {"s", join(s)},
                                         {"h1 on Fin 0..k, inf", join(homs[0])},
                                         {"h2 on Fin 0..k, inf", join(homs[1])}};
        }
      }
    }
  }
  report.add(std::move(count));
  Report unique("exactly one map into every algebra");
  unique.tick();
  if (witness) unique.fail("two distinct algebra maps into one algebra", std::move(*witness));
  report.add(std::move(unique));
  return report;
}

}  // namespace cattool
