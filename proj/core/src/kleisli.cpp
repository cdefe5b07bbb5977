#include "cattool/kleisli.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cattool/error.hpp"
#include "cattool/finset.hpp"
#include "cattool/set_functor.hpp"

namespace cattool {

namespace {

std::vector<Value> atoms(std::size_t n) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Value::of(static_cast<long>(i)));
  return out;
}

double dpow(double b, double e) { return std::pow(b, e); }

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

// Every table over `width` positions drawn from `choices` values, first position most significant.
template <class Visit>
void odometer(std::size_t width, std::size_t choices, Visit visit) {
  if (choices == 0 && width > 0) return;
  std::vector<std::size_t> digits(width, 0);
  while (true) {
    visit(digits);
    std::size_t i = width;
    while (i > 0) {
      if (++digits[i - 1] < choices) break;
      digits[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

void guard(bool ok, const std::string& what) {
  if (!ok) throw SizeLimitError(what);
}

KleisliTriple list_instance(const InstanceParams& p) {
  guard(p.x <= 2 && p.y <= 2 && p.z <= 2 && p.max_len <= 3,
        "list monad: sizes are limited to 2 and max_len to 3");
  KleisliTriple t;
  t.name = "list";
  t.params = p;
  t.unit = [](const Value& x) { return Value::seq({x}); };
  t.bind = [](const Arrow1& f, const Value& v) {
    std::vector<Value> out;
    for (const Value& x : v.items) {
      Value fx = f(x);
      out.insert(out.end(), fx.items.begin(), fx.items.end());
    }
    return Value::seq(std::move(out));
  };
  t.values = [](std::size_t n, std::size_t bound) {
    std::vector<Value> out;
    for (const auto& xs : enumerate_lists(n, bound)) {
      std::vector<Value> items;
      for (std::size_t a : xs) items.push_back(Value::of(static_cast<long>(a)));
      out.push_back(Value::seq(std::move(items)));
    }
    return out;
  };
  t.value_count = [](std::size_t n, std::size_t bound) {
    double c = 0;
    for (std::size_t l = 0; l <= bound; ++l) c += dpow(static_cast<double>(n), static_cast<double>(l));
    return c;
  };
  t.sample = [](std::size_t n, std::size_t bound, std::mt19937_64& rng) {
    std::vector<Value> items;
    if (n > 0)
      for (std::size_t len = pick(rng, bound + 1); len > 0; --len)
        items.push_back(Value::of(static_cast<long>(pick(rng, n))));
    return Value::seq(std::move(items));
  };
  t.canon = [](std::size_t, const Value& v) { return v; };
  t.show = [](std::size_t, const Value& v) { return to_string(v); };
  t.value_bound = p.max_len;
  t.arrow_bound = p.max_len;
  t.lift_bound = 2;
  return t;
}

// leaf a = [0, a], node l r = [1, l, r]
Value leaf(const Value& a) { return Value::seq({Value::of(0), a}); }
Value node(const Value& l, const Value& r) { return Value::seq({Value::of(1), l, r}); }

std::string show_tree(const Value& v) {
  if (v.items.at(0).atom == 0) return to_string(v.items.at(1));
  return "(" + show_tree(v.items.at(1)) + " " + show_tree(v.items.at(2)) + ")";
}

Value tree_bind(const Arrow1& f, const Value& v) {
  if (v.items.at(0).atom == 0) return f(v.items.at(1));
  return node(tree_bind(f, v.items.at(1)), tree_bind(f, v.items.at(2)));
}

Value sample_tree(std::size_t n, std::size_t depth, std::mt19937_64& rng) {
  if (depth == 0 || pick(rng, 2) == 0) return leaf(Value::of(static_cast<long>(pick(rng, n))));
  return node(sample_tree(n, depth - 1, rng), sample_tree(n, depth - 1, rng));
}

KleisliTriple tree_instance(const InstanceParams& p) {
  guard(p.max_depth <= 2 && p.x <= 2 && p.y <= 2 && p.z <= 2,
        "tree monad: depth is limited to 2 and sizes to 2");
  KleisliTriple t;
  t.name = "tree";
  t.params = p;
  t.unit = leaf;
  t.bind = tree_bind;
  t.values = [](std::size_t n, std::size_t bound) {
    std::vector<Value> level;
    for (const Value& a : atoms(n)) level.push_back(leaf(a));
    for (std::size_t d = 1; d <= bound; ++d) {
      std::vector<Value> next;
      for (const Value& a : atoms(n)) next.push_back(leaf(a));
      for (const Value& l : level)
        for (const Value& r : level) next.push_back(node(l, r));
      level = std::move(next);
    }
    return level;
  };
  t.value_count = [](std::size_t n, std::size_t bound) {
    double c = static_cast<double>(n);
    for (std::size_t d = 1; d <= bound; ++d) c = static_cast<double>(n) + c * c;
    return c;
  };
  t.sample = [](std::size_t n, std::size_t bound, std::mt19937_64& rng) {
    return sample_tree(n, bound, rng);
  };
  t.canon = [](std::size_t, const Value& v) { return v; };
  t.show = [](std::size_t, const Value& v) { return show_tree(v); };
  t.value_bound = p.max_depth;
  t.arrow_bound = std::min<std::size_t>(p.max_depth, 1);
  t.lift_bound = 1;
  return t;
}

// inl x = [0, x], error e = [1, e]
KleisliTriple exception_instance(const InstanceParams& p) {
  guard(p.e <= 2 && p.x <= 3 && p.y <= 3 && p.z <= 3,
        "exception monad: |E| is limited to 2 and sizes to 3");
  const std::size_t e = p.e;
  KleisliTriple t;
  t.name = "exception";
  t.params = p;
  t.unit = [](const Value& x) { return Value::seq({Value::of(0), x}); };
  t.bind = [](const Arrow1& f, const Value& v) {
    return v.items.at(0).atom == 0 ? f(v.items.at(1)) : v;
  };
  t.values = [e](std::size_t n, std::size_t) {
    std::vector<Value> out;
    for (const Value& a : atoms(n)) out.push_back(Value::seq({Value::of(0), a}));
    for (const Value& a : atoms(e)) out.push_back(Value::seq({Value::of(1), a}));
    return out;
  };
  t.value_count = [e](std::size_t n, std::size_t) { return static_cast<double>(n + e); };
  t.sample = [e](std::size_t n, std::size_t, std::mt19937_64& rng) {
    std::size_t i = pick(rng, n + e);
    return i < n ? Value::seq({Value::of(0), Value::of(static_cast<long>(i))})
                 : Value::seq({Value::of(1), Value::of(static_cast<long>(i - n))});
  };
  t.canon = [](std::size_t, const Value& v) { return v; };
  t.show = [](std::size_t, const Value& v) {
    return (v.items.at(0).atom == 0 ? "inl " : "err ") + to_string(v.items.at(1));
  };
  t.finitely_closed = true;
  return t;
}

Value normal_set(std::vector<Value> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return Value::seq(std::move(xs));
}

KleisliTriple powerset_instance(const InstanceParams& p) {
  guard(p.x <= 3 && p.y <= 3 && p.z <= 3, "powerset monad: sizes are limited to 3");
  KleisliTriple t;
  t.name = "powerset";
  t.params = p;
  t.unit = [](const Value& x) { return Value::seq({x}); };
  t.bind = [](const Arrow1& f, const Value& v) {
    std::vector<Value> out;
    for (const Value& a : v.items) {
      Value fa = f(a);
      out.insert(out.end(), fa.items.begin(), fa.items.end());
    }
    return normal_set(std::move(out));
  };
  t.values = [](std::size_t n, std::size_t) {
    require_within(dpow(2, static_cast<double>(n)), static_cast<double>(search_limit()), "powerset values");
    std::vector<Value> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Value> items;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) items.push_back(Value::of(static_cast<long>(i)));
      out.push_back(Value::seq(std::move(items)));
    }
    return out;
  };
  t.value_count = [](std::size_t n, std::size_t) { return dpow(2, static_cast<double>(n)); };
  t.sample = [](std::size_t n, std::size_t, std::mt19937_64& rng) {
    std::vector<Value> items;
    for (std::size_t i = 0; i < n; ++i)
      if (pick(rng, 2)) items.push_back(Value::of(static_cast<long>(i)));
    return Value::seq(std::move(items));
  };
  t.canon = [](std::size_t, const Value& v) { return v; };
  t.show = [](std::size_t, const Value& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.items.size(); ++i) s += (i ? "," : "") + to_string(v.items[i]);
    return s + "}";
  };
  t.finitely_closed = true;
  return t;
}

// A value is the table r |-> x.
KleisliTriple reader_instance(const InstanceParams& p) {
  guard(p.e <= 2 && p.x <= 3 && p.y <= 3 && p.z <= 3,
        "reader monad: |R| is limited to 2 and sizes to 3");
  const std::size_t r = p.e;
  KleisliTriple t;
  t.name = "reader";
  t.params = p;
  t.unit = [r](const Value& x) { return Value::seq(std::vector<Value>(r, x)); };
  t.bind = [r](const Arrow1& f, const Value& v) {
    std::vector<Value> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(f(v.items.at(i)).items.at(i));
    return Value::seq(std::move(out));
  };
  t.values = [r](std::size_t n, std::size_t) {
    std::vector<Value> out;
    odometer(r, n, [&](const std::vector<std::size_t>& d) {
      std::vector<Value> items;
      for (std::size_t a : d) items.push_back(Value::of(static_cast<long>(a)));
      out.push_back(Value::seq(std::move(items)));
    });
    return out;
  };
  t.value_count = [r](std::size_t n, std::size_t) {
    return dpow(static_cast<double>(n), static_cast<double>(r));
  };
  t.sample = [r](std::size_t n, std::size_t, std::mt19937_64& rng) {
    std::vector<Value> items;
    for (std::size_t i = 0; i < r; ++i) items.push_back(Value::of(static_cast<long>(pick(rng, n))));
    return Value::seq(std::move(items));
  };
  t.canon = [](std::size_t, const Value& v) { return v; };
  t.show = [](std::size_t, const Value& v) { return "r->" + to_string(v); };
  t.finitely_closed = true;
  return t;
}

// Values of (X -> R) -> R are closures taking k : X -> R, itself a closure.
// canon tabulates a value on every k, first k(0) most significant.
KleisliTriple continuation_instance(const InstanceParams& p) {
  guard(p.e <= 2 && p.x <= 2 && p.y <= 2 && p.z <= 2,
        "continuation monad: |R| and sizes are limited to 2");
  const std::size_t r = p.e;
  auto probe = [r](std::size_t n, std::size_t kidx) {
    std::vector<long> table(n);
    for (std::size_t i = n; i > 0; --i) {
      table[i - 1] = static_cast<long>(kidx % r);
      kidx /= r;
    }
    return Value::lambda([table](const Value& a) { return Value::of(table.at(a.atom)); });
  };
  auto kindex = [r](std::size_t n, const Value& k) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx = idx * r + static_cast<std::size_t>(k(Value::of(static_cast<long>(i))).atom);
    return idx;
  };
  auto k_count = [r](std::size_t n) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= r;
    return c;
  };

  KleisliTriple t;
  t.name = "continuation";
  t.params = p;
  t.unit = [](const Value& x) { return Value::lambda([x](const Value& k) { return k(x); }); };
  t.bind = [](const Arrow1& f, const Value& v) {
    return Value::lambda([f, v](const Value& j) {
      return v(Value::lambda([f, j](const Value& x) { return f(x)(j); }));
    });
  };
  t.values = [r, kindex, k_count](std::size_t n, std::size_t) {
    const std::size_t ks = k_count(n);
    require_within(dpow(static_cast<double>(r), static_cast<double>(ks)),
                   static_cast<double>(search_limit()), "continuation values");
    std::vector<Value> out;
    odometer(ks, r, [&](const std::vector<std::size_t>& d) {
      std::vector<long> table(d.begin(), d.end());
      out.push_back(Value::lambda([table, kindex, n](const Value& k) {
        return Value::of(table.at(kindex(n, k)));
      }));
    });
    return out;
  };
  t.value_count = [r](std::size_t n, std::size_t) {
    return dpow(static_cast<double>(r), dpow(static_cast<double>(r), static_cast<double>(n)));
  };
  // Finite support: v(k) = tau(k(a_1), ..., k(a_m)) for a few atoms a_i.
  t.sample = [r](std::size_t n, std::size_t, std::mt19937_64& rng) {
    const std::size_t m = n == 0 ? 0 : 1 + pick(rng, std::min<std::size_t>(n, 3));
    std::vector<long> support;
    for (std::size_t i = 0; i < m; ++i) support.push_back(static_cast<long>(pick(rng, n)));
    std::size_t entries = 1;
    for (std::size_t i = 0; i < m; ++i) entries *= r;
    std::vector<long> tau(entries);
    for (auto& v : tau) v = static_cast<long>(pick(rng, r));
    return Value::lambda([support, tau, r](const Value& k) {
      std::size_t idx = 0;
      for (long a : support) idx = idx * r + static_cast<std::size_t>(k(Value::of(a)).atom);
      return Value::of(tau.at(idx));
    });
  };
  t.canon = [probe, k_count](std::size_t n, const Value& v) {
    std::vector<Value> out;
    for (std::size_t i = 0; i < k_count(n); ++i) out.push_back(v(probe(n, i)));
    return Value::seq(std::move(out));
  };
  t.show = [canon = t.canon](std::size_t n, const Value& v) { return "cont" + to_string(canon(n, v)); };
  t.finitely_closed = true;
  return t;
}

// False when evaluating a law walked off the encoding of T X.
template <class F>
bool evaluates(F&& body) {
  try {
    body();
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

// Mutated units can hand back values outside T X; show those raw.
std::string display(const KleisliTriple& t, std::size_t n, const Value& v) {
  try {
    return t.show(n, v);
  } catch (const std::exception&) {
    return "ill-typed " + to_string(v);
  }
}

std::string show_arrow(const KleisliTriple& t, std::size_t y, const std::vector<Value>& table) {
  std::string s = "[";
  for (std::size_t i = 0; i < table.size(); ++i) s += (i ? ", " : "") + t.show(y, table[i]);
  return s + "]";
}

Arrow1 identity_arrow() {
  return [](const Value& v) { return v; };
}

// T over an arbitrary list of elements: T over atoms, relabelled by map.
std::vector<Value> values_over(const MonadSpec& m, const std::vector<Value>& elems, std::size_t bound,
                               std::size_t samples, std::mt19937_64& rng, bool& sampled) {
  const KleisliTriple& b = m.base;
  const std::size_t n = elems.size();
  std::vector<Value> raw;
  if (b.value_count(n, bound) <= static_cast<double>(search_limit())) {
    raw = b.values(n, bound);
  } else {
    sampled = true;
    for (std::size_t i = 0; i < samples; ++i) raw.push_back(b.sample(n, bound, rng));
  }
  Arrow1 relabel = [elems](const Value& a) { return elems.at(static_cast<std::size_t>(a.atom)); };
  std::vector<Value> out;
  for (const Value& v : raw) out.push_back(m.map(relabel, v));
  return out;
}

}  // namespace

KleisliTriple instance(const InstanceParams& p) {
  if (p.name == "list") return list_instance(p);
  if (p.name == "tree") return tree_instance(p);
  if (p.name == "exception") return exception_instance(p);
  if (p.name == "powerset") return powerset_instance(p);
  if (p.name == "reader") return reader_instance(p);
  if (p.name == "continuation") return continuation_instance(p);
  throw LookupError("unknown monad instance '" + p.name + "'");
}

std::vector<std::string> instance_names() {
  return {"list", "tree", "exception", "powerset", "reader", "continuation"};
}

Arrow1 table_arrow(std::vector<Value> table) {
  return [table = std::move(table)](const Value& a) { return table.at(static_cast<std::size_t>(a.atom)); };
}

std::vector<std::vector<Value>> enumerate_arrows(const KleisliTriple& t, std::size_t x, std::size_t y) {
  std::vector<Value> outs = t.values(y, t.arrow_bound);
  require_within(dpow(static_cast<double>(outs.size()), static_cast<double>(x)),
                 static_cast<double>(search_limit()), t.name + " arrows");
  std::vector<std::vector<Value>> arrows;
  odometer(x, outs.size(), [&](const std::vector<std::size_t>& d) {
    std::vector<Value> table;
    for (std::size_t i : d) table.push_back(outs[i]);
    arrows.push_back(std::move(table));
  });
  return arrows;
}

Report check_kleisli_laws(const KleisliTriple& t) {
  const std::size_t nx = t.params.x, ny = t.params.y, nz = t.params.z;
  Report report(t.name + " Kleisli laws");
  Report law1("law 1: eta* = id"), law2("law 2: eta;f* = f"), law3("law 3: (f;g*)* = f*;g*");

  const std::vector<Value> ts = t.values(nx, t.value_bound);
  for (const Value& v : ts) {
    law1.tick();
    if (t.canon(nx, t.bind(t.unit, v)) != t.canon(nx, v))
      law1.fail("eta*(t) differs from t", {{"t", display(t, nx, v)}, {"eta*(t)", display(t, nx, t.bind(t.unit, v))}});
  }

  const auto fs = enumerate_arrows(t, nx, ny);
  for (const auto& ftab : fs) {
    Arrow1 f = table_arrow(ftab);
    for (const Value& x : atoms(nx)) {
      law2.tick();
      Value lhs = t.bind(f, t.unit(x));
      if (t.canon(ny, lhs) != t.canon(ny, f(x)))
        law2.fail("f*(eta(x)) differs from f(x)",
                  {{"x", to_string(x)}, {"f", show_arrow(t, ny, ftab)},
                   {"f*(eta(x))", display(t, ny, lhs)}, {"f(x)", display(t, ny, f(x))}});
    }
  }

  const auto gs = enumerate_arrows(t, ny, nz);
  // f*(t) once per (f, t)
  std::vector<std::vector<Value>> ft(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Arrow1 f = table_arrow(fs[i]);
    for (const Value& v : ts) ft[i].push_back(t.bind(f, v));
  }
  for (const auto& gtab : gs) {
    Arrow1 g = table_arrow(gtab);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      std::vector<Value> fg;
      for (const Value& fx : fs[i]) fg.push_back(t.bind(g, fx));
      Arrow1 fgs = table_arrow(fg);
      for (std::size_t k = 0; k < ts.size(); ++k) {
        law3.tick();
        Value lhs = t.bind(fgs, ts[k]);
        Value rhs = t.bind(g, ft[i][k]);
        if (t.canon(nz, lhs) != t.canon(nz, rhs))
          law3.fail("(f;g*)*(t) differs from g*(f*(t))",
                    {{"f", show_arrow(t, ny, fs[i])}, {"g", show_arrow(t, nz, gtab)},
                     {"t", display(t, nx, ts[k])}, {"(f;g*)*(t)", t.show(nz, lhs)},
                     {"g*(f*(t))", t.show(nz, rhs)}});
      }
    }
  }
  report.add(std::move(law1));
  report.add(std::move(law2));
  report.add(std::move(law3));
  return report;
}

MonadSpec kleisli_to_monad(const KleisliTriple& t) {
  MonadSpec m;
  m.name = t.name;
  m.params = t.params;
  m.base = t;
  m.unit = t.unit;
  m.map = [bind = t.bind, unit = t.unit](const Arrow1& f, const Value& v) {
    return bind([f, unit](const Value& a) { return unit(f(a)); }, v);
  };
  m.mult = [bind = t.bind](const Value& v) { return bind(identity_arrow(), v); };
  return m;
}

KleisliTriple monad_to_kleisli(const MonadSpec& m) {
  KleisliTriple t = m.base;
  t.unit = m.unit;
  t.bind = [map = m.map, mult = m.mult](const Arrow1& f, const Value& v) { return mult(map(f, v)); };
  return t;
}

Report check_monad_laws(const MonadSpec& m, std::size_t samples, std::uint64_t seed) {
  const KleisliTriple& b = m.base;
  const std::size_t nx = b.params.x;
  Report report(m.name + " monad laws");
  Report functor("map preserves identities"), assoc("associativity: mu_T;mu = T(mu);mu");
  Report left("unit: eta_T;mu = id"), right("unit: T(eta);mu = id");
  std::mt19937_64 rng(seed);
  bool sampled = false;

  const std::vector<Value> t1 = b.values(nx, b.value_bound);
  for (const Value& v : t1) {
    functor.tick();
    left.tick();
    right.tick();
    if (!evaluates([&] {
          if (b.canon(nx, m.map(identity_arrow(), v)) != b.canon(nx, v))
            functor.fail("map(id)(t) differs from t", {{"t", display(b, nx, v)}});
        }))
      functor.fail("map(id)(t) is not a value of T X", {{"t", display(b, nx, v)}});
    if (!evaluates([&] {
          Value l = m.mult(m.unit(v));
          if (b.canon(nx, l) != b.canon(nx, v))
            left.fail("mu(eta(t)) differs from t", {{"t", display(b, nx, v)}, {"mu(eta(t))", display(b, nx, l)}});
        }))
      left.fail("mu(eta(t)) is not a value of T X", {{"t", display(b, nx, v)}});
    if (!evaluates([&] {
          Value r = m.mult(m.map(m.unit, v));
          if (b.canon(nx, r) != b.canon(nx, v))
            right.fail("mu(map(eta)(t)) differs from t",
                       {{"t", display(b, nx, v)}, {"mu(map(eta)(t))", display(b, nx, r)}});
        }))
      right.fail("mu(map(eta)(t)) is not a value of T X", {{"t", display(b, nx, v)}});
  }

  const std::vector<Value> e1 = b.values(nx, b.lift_bound);
  const std::vector<Value> e2 = values_over(m, e1, b.lift_bound, samples, rng, sampled);
  const std::vector<Value> e3 = values_over(m, e2, b.lift_bound, samples, rng, sampled);
  for (const Value& v : e3) {
    assoc.tick();
    if (!evaluates([&] {
          Value lhs = m.mult(m.mult(v));
          Value rhs = m.mult(m.map(m.mult, v));
          if (b.canon(nx, lhs) != b.canon(nx, rhs))
            assoc.fail("mu(mu_T(v)) differs from mu(map(mu)(v))",
                       {{"v", to_string(v)}, {"mu(mu_T(v))", display(b, nx, lhs)},
                        {"mu(map(mu)(v))", display(b, nx, rhs)}});
        }))
      assoc.fail("mu(mu_T(v)) or mu(map(mu)(v)) is not a value of T X", {{"v", to_string(v)}});
  }
  if (sampled)
    assoc.note("T^3 inputs: seeded sample of " + std::to_string(samples) + " values (seed " +
               std::to_string(seed) + ")");
  report.add(std::move(functor));
  report.add(std::move(assoc));
  report.add(std::move(left));
  report.add(std::move(right));
  return report;
}

Report check_roundtrip(const KleisliTriple& t) {
  const std::size_t nx = t.params.x, ny = t.params.y;
  Report report(t.name + " Kleisli/monad roundtrip");
  Report triple("triple -> monad -> triple"), monad("monad -> triple -> monad");
  MonadSpec m = kleisli_to_monad(t);
  KleisliTriple back = monad_to_kleisli(m);
  for (const Value& x : atoms(nx)) {
    triple.tick();
    if (t.canon(nx, back.unit(x)) != t.canon(nx, t.unit(x)))
      triple.fail("unit changed", {{"x", to_string(x)}});
  }
  const std::vector<Value> ts = t.values(nx, t.value_bound);
  for (const auto& ftab : enumerate_arrows(t, nx, ny)) {
    Arrow1 f = table_arrow(ftab);
    for (const Value& v : ts) {
      triple.tick();
      if (t.canon(ny, back.bind(f, v)) != t.canon(ny, t.bind(f, v)))
        triple.fail("bind changed", {{"f", show_arrow(t, ny, ftab)}, {"t", display(t, nx, v)}});
    }
  }

  MonadSpec again = kleisli_to_monad(back);
  for_each_function(FinSet(nx), FinSet(ny), [&](const FinFun& ff) {
    std::vector<Value> tab;
    for (std::size_t i = 0; i < nx; ++i) tab.push_back(Value::of(static_cast<long>(ff(i))));
    Arrow1 f = table_arrow(tab);
    for (const Value& v : ts) {
      monad.tick();
      if (t.canon(ny, again.map(f, v)) != t.canon(ny, m.map(f, v)))
        monad.fail("map changed", {{"f", ff.to_string()}, {"t", display(t, nx, v)}});
    }
    return true;
  });
  std::mt19937_64 rng(1);
  bool sampled = false;
  for (const Value& v : values_over(m, t.values(nx, t.lift_bound), t.lift_bound, 1024, rng, sampled)) {
    monad.tick();
    if (t.canon(nx, again.mult(v)) != t.canon(nx, m.mult(v)))
      monad.fail("mu changed", {{"v", to_string(v)}});
  }
  report.add(std::move(triple));
  report.add(std::move(monad));
  return report;
}

FinCat kleisli_category(const KleisliTriple& t, const std::vector<std::size_t>& objects) {
  if (!t.finitely_closed)
    throw UnsupportedError("Kleisli category: the " + t.name +
                           " monad has no finite T X closed under bind");
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = i + 1; j < objects.size(); ++j)
      if (objects[i] == objects[j]) throw ShapeError("Kleisli category: object sizes must be distinct");

  const std::size_t k = objects.size();
  std::vector<std::vector<Value>> tvals(k);
  std::vector<std::map<Value, std::size_t>> position(k);
  for (std::size_t j = 0; j < k; ++j) {
    tvals[j] = t.values(objects[j], t.value_bound);
    for (std::size_t i = 0; i < tvals[j].size(); ++i)
      position[j][t.canon(objects[j], tvals[j][i])] = i;
  }
  std::vector<std::vector<double>> hom(k, std::vector<double>(k));
  double entries = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      hom[a][b] = dpow(static_cast<double>(tvals[b].size()), static_cast<double>(objects[a]));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) entries += hom[a][b] * hom[b][c];
  require_within(entries, static_cast<double>(search_limit()), "Kleisli category composition table");

  FinCat::Builder builder;
  for (std::size_t s : objects) builder.add_object(std::to_string(s));
  // Morphisms stored as positions into tvals[cod].
  std::vector<std::vector<std::size_t>> tables;
  std::vector<std::size_t> dom_of, cod_of;
  std::vector<std::vector<MorId>> first(k, std::vector<MorId>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      first[a][b] = builder.morphism_count();
      odometer(objects[a], tvals[b].size(), [&](const std::vector<std::size_t>& d) {
        std::vector<Value> tab;
        for (std::size_t i : d) tab.push_back(tvals[b][i]);
        builder.add_morphism(std::to_string(objects[a]) + "->" + std::to_string(objects[b]) + ":" +
                                 show_arrow(t, objects[b], tab),
                             a, b);
        tables.push_back(d);
        dom_of.push_back(a);
        cod_of.push_back(b);
      });
    }
  auto id_of = [&](std::size_t a, std::size_t b, const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (std::size_t i : d) idx = idx * tvals[b].size() + i;
    return first[a][b] + idx;
  };
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<std::size_t> d;
    for (const Value& x : atoms(objects[a])) d.push_back(position[a].at(t.canon(objects[a], t.unit(x))));
    builder.set_identity(a, id_of(a, a, d));
  }
  builder.set_rule([&, objects](MorId f, MorId g) -> std::optional<MorId> {
    const std::size_t a = dom_of[f], b = cod_of[f], c = cod_of[g];
    std::vector<Value> gtab;
    for (std::size_t i : tables[g]) gtab.push_back(tvals[c][i]);
    Arrow1 ga = table_arrow(std::move(gtab));
    std::vector<std::size_t> d;
    for (std::size_t i : tables[f]) d.push_back(position[c].at(t.canon(objects[c], t.bind(ga, tvals[b][i]))));
    return id_of(a, c, d);
  });
  builder.set_family("kleisli:" + t.name);
  return builder.build();
}

Report check_list_bind_distributes(std::size_t n, std::size_t max_len) {
  InstanceParams p;
  p.x = p.y = p.z = n;
  p.max_len = max_len;
  KleisliTriple t = list_instance(p);
  Report report("list bind distributes over concatenation");
  const auto ls = t.values(n, max_len);
  for (const auto& gtab : enumerate_arrows(t, n, n)) {
    Arrow1 g = table_arrow(gtab);
    for (const Value& s : ls)
      for (const Value& u : ls) {
        report.tick();
        std::vector<Value> st = s.items;
        st.insert(st.end(), u.items.begin(), u.items.end());
        Value lhs = t.bind(g, Value::seq(st));
        Value gs = t.bind(g, s), gu = t.bind(g, u);
        std::vector<Value> r = gs.items;
        r.insert(r.end(), gu.items.begin(), gu.items.end());
        if (lhs != Value::seq(r))
          report.fail("g*(s ++ t) differs from g*(s) ++ g*(t)",
                      {{"g", show_arrow(t, n, gtab)}, {"s", to_string(s)}, {"t", to_string(u)}});
      }
  }
  return report;
}

}  // namespace cattool
