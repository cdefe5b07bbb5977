#include "cattool/coalgebra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

#include "cattool/error.hpp"
#include "cattool/queries.hpp"

namespace cattool {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << "]";
  return out.str();
}

std::string show_maybe(const std::optional<Conat>& m) { return m ? to_string(*m) : "*"; }

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Codomain {Fin 0..k-1, Inf} indexed 0..k.
Conat restricted(std::size_t k, std::size_t i) { return i < k ? Conat::fin(i) : Conat::inf(); }

bool square_commutes(const CoalgebraSpec& c, const std::vector<Conat>& h) {
  for (std::size_t x = 0; x < c.size; ++x) {
    auto o = conat_out(h[x]);
    if (!c.next[x]) {
      if (o) return false;
    } else if (!o || !(*o == h[*c.next[x]])) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(const Conat& c) { return c.infinite ? "Inf" : "Fin(" + std::to_string(c.n) + ")"; }

std::optional<Conat> conat_out(const Conat& c) {
  if (c.infinite) return c;
  if (c.n == 0) return std::nullopt;
  return Conat::fin(c.n - 1);
}

std::string CoalgebraSpec::describe() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < size; ++i) {
    if (i) out << ",";
    if (next[i]) out << *next[i];
    else out << "*";
  }
  out << "]";
  return out.str();
}

CoalgebraSpec make_coalgebra(std::vector<std::optional<std::size_t>> next) {
  CoalgebraSpec c;
  c.size = next.size();
  for (const auto& n : next)
    if (n && *n >= c.size) throw ConstructionError("coalgebra successor out of range: " + std::to_string(*n));
  c.next = std::move(next);
  return c;
}

std::vector<CoalgebraSpec> enumerate_maybe_coalgebras(std::size_t size) {
  std::size_t total = ipow(size + 1, size);
  require_within(static_cast<double>(total), static_cast<double>(search_limit()), "Maybe-coalgebras");
  std::vector<CoalgebraSpec> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::optional<std::size_t>> next(size);
    // Most significant digit first; digit 0 is the point.
    std::size_t c = code;
    for (std::size_t i = size; i > 0; --i, c /= size + 1) {
      std::size_t d = c % (size + 1);
      if (d) next[i - 1] = d - 1;
    }
    out.push_back(make_coalgebra(std::move(next)));
  }
  return out;
}

std::vector<Conat> ana_conat(const CoalgebraSpec& c) {
  std::vector<Conat> out(c.size);
  for (std::size_t x = 0; x < c.size; ++x) {
    std::size_t steps = 0;
    std::optional<std::size_t> s = x;
    // A run longer than the carrier revisits a state.
    while (s && steps <= c.size) {
      s = c.next[*s];
      if (s) ++steps;
    }
    out[x] = s ? Conat::inf() : Conat::fin(steps);
  }
  return out;
}

CoalgebraSpec truncated_conat(std::size_t k) {
  std::vector<std::optional<std::size_t>> next(k + 1);
  for (std::size_t i = 1; i < k; ++i) next[i] = i - 1;
  next[k] = k;
  return make_coalgebra(std::move(next));
}

Conat truncated_conat_value(std::size_t k, std::size_t element) { return restricted(k, element); }

Report check_conat_terminality(std::size_t max_size) {
  Report report("conaturals are the terminal Maybe-coalgebra");
  for (std::size_t k = 1; k <= max_size; ++k) {
    Report sized("carrier size " + std::to_string(k));
    Report square("anamorphism commutes");
    Report unique("unique commuting map into {Fin 0.." + std::to_string(k - 1) + ", Inf}");
    std::size_t maps = ipow(k + 1, k);
    require_within(static_cast<double>(maps) * static_cast<double>(maps), static_cast<double>(search_limit()),
                   "conat terminality candidates");
    for (const auto& c : enumerate_maybe_coalgebras(k)) {
      auto a = ana_conat(c);
      square.tick();
      if (!square_commutes(c, a)) {
        square.fail("square does not commute", {{"coalgebra", c.describe()}});
      }
      std::size_t commuting = 0;
      std::optional<std::vector<Conat>> other;
      std::vector<Conat> h(k);
      for (std::size_t code = 0; code < maps; ++code) {
        std::size_t cc = code;
        for (std::size_t x = 0; x < k; ++x, cc /= k + 1) h[x] = restricted(k, cc % (k + 1));
        if (!square_commutes(c, h)) continue;
        ++commuting;
        if (h != a) other = h;
      }
      unique.tick();
      if (commuting != 1 || other) {
        std::vector<Witness> ws{{"coalgebra", c.describe()}, {"commuting maps", std::to_string(commuting)}};
        if (other) {
          std::string s;
          for (const auto& v : *other) s += (s.empty() ? "" : ",") + to_string(v);
          ws.push_back({"other map", "[" + s + "]"});
        }
        unique.fail("anamorphism is not the only commuting map", std::move(ws));
      }
    }
    sized.add(std::move(square));
    sized.add(std::move(unique));
    report.add(std::move(sized));
  }
  return report;
}

Report check_conat_identity_anamorphism(std::size_t k) {
  Report report("ana(out) = id on the conaturals");
  CoalgebraSpec c = truncated_conat(k);
  auto a = ana_conat(c);
  for (std::size_t i = 0; i <= k; ++i) {
    report.tick();
    if (!(a[i] == restricted(k, i)))
      report.fail("ana(out) moved a value", {{"value", to_string(restricted(k, i))}, {"ana(out)", to_string(a[i])}});
  }
  return report;
}

Report dual_lambek_conat(std::size_t depth) {
  Report report("dual Lambek: out is an isomorphism on the conaturals");
  report.note("out^-1 = ana(F(out)), observed to depth " + std::to_string(depth));
  // Unfold a state of 1 + Conat: the point stops, some(c) steps to out(c).
  auto inv = [depth](std::optional<Conat> m) {
    std::size_t steps = 0;
    while (m) {
      if (steps > depth + 1) return Conat::inf();
      m = conat_out(*m);
      ++steps;
    }
    return Conat::fin(steps);
  };
  Report left("out(out^-1 m) = m");
  std::vector<std::optional<Conat>> ms{std::nullopt};
  for (std::size_t n = 0; n < depth; ++n) ms.push_back(Conat::fin(n));
  ms.push_back(Conat::inf());
  for (const auto& m : ms) {
    left.tick();
    auto back = conat_out(inv(m));
    if (back != m) left.fail("out after out^-1 differs", {{"m", show_maybe(m)}, {"out(out^-1 m)", show_maybe(back)}});
  }
  Report right("out^-1(out v) = v");
  std::vector<Conat> vs;
  for (std::size_t n = 0; n <= depth; ++n) vs.push_back(Conat::fin(n));
  vs.push_back(Conat::inf());
  for (const auto& v : vs) {
    right.tick();
    Conat back = inv(conat_out(v));
    if (!(back == v)) right.fail("out^-1 after out differs", {{"v", to_string(v)}, {"out^-1(out v)", to_string(back)}});
  }
  report.add(std::move(left));
  report.add(std::move(right));
  return report;
}

namespace {

struct CoalgCat {
  std::vector<CoalgebraSpec> objects;
  std::vector<std::string> names;
  FinCat cat;
  std::vector<std::vector<std::size_t>> tables;  // per morphism
};

CoalgCat build_coalgebra_category(std::size_t max_size) {
  CoalgCat out;
  for (std::size_t k = 1; k <= max_size; ++k)
    for (auto& c : enumerate_maybe_coalgebras(k)) out.objects.push_back(std::move(c));
  out.objects.push_back(truncated_conat(max_size));
  FinCat::Builder b;
  for (std::size_t i = 0; i < out.objects.size(); ++i) {
    std::string name = i + 1 == out.objects.size() ? "conat" + std::to_string(max_size)
                                                   : "c" + out.objects[i].describe();
    out.names.push_back(name);
    b.add_object(name);
  }
  auto lookup = std::make_shared<std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, MorId>>();
  auto tables = std::make_shared<std::vector<std::vector<std::size_t>>>();
  auto ends = std::make_shared<std::vector<std::pair<std::size_t, std::size_t>>>();
  double candidates = 0;
  for (const auto& x : out.objects)
    for (const auto& y : out.objects) candidates += static_cast<double>(ipow(y.size, x.size));
  require_within(candidates, static_cast<double>(search_limit()), "coalgebra morphism candidates");
  for (std::size_t i = 0; i < out.objects.size(); ++i) {
    const auto& x = out.objects[i];
    for (std::size_t j = 0; j < out.objects.size(); ++j) {
      const auto& y = out.objects[j];
      std::size_t maps = ipow(y.size, x.size);
      std::vector<std::size_t> f(x.size);
      for (std::size_t code = 0; code < maps; ++code) {
        std::size_t cc = code;
        for (std::size_t p = 0; p < x.size; ++p, cc /= y.size) f[p] = cc % y.size;
        bool ok = true;
        for (std::size_t p = 0; p < x.size && ok; ++p) {
          const auto& nx = x.next[p];
          const auto& ny = y.next[f[p]];
          ok = nx ? (ny && *ny == f[*nx]) : !ny;
        }
        if (!ok) continue;
        MorId id = b.add_morphism(out.names[i] + "->" + out.names[j] + ":" + join(f), i, j);
        (*lookup)[{i, j, f}] = id;
        tables->push_back(f);
        ends->push_back({i, j});
        if (i == j) {
          bool identity = true;
          for (std::size_t p = 0; p < x.size; ++p) identity = identity && f[p] == p;
          if (identity) b.set_identity(i, id);
        }
      }
    }
  }
  b.set_rule([lookup, tables, ends](MorId f, MorId g) -> std::optional<MorId> {
    const auto& tf = (*tables)[f];
    const auto& tg = (*tables)[g];
    std::vector<std::size_t> h(tf.size());
    for (std::size_t p = 0; p < tf.size(); ++p) h[p] = tg[tf[p]];
    auto it = lookup->find({(*ends)[f].first, (*ends)[g].second, h});
    if (it == lookup->end()) return std::nullopt;
    return it->second;
  });
  out.cat = b.build();
  out.tables = *tables;
  return out;
}

}  // namespace

FinCat maybe_coalgebra_category(std::size_t max_size) { return build_coalgebra_category(max_size).cat; }

Report coalgebra_category_check(std::size_t max_size) {
  Report report("Coalg(Maybe) on carriers up to " + std::to_string(max_size));
  CoalgCat cc = build_coalgebra_category(max_size);
  report.note(std::to_string(cc.cat.object_count()) + " coalgebras, " + std::to_string(cc.cat.morphism_count()) +
              " morphisms");
  Report laws = check_laws(cc.cat);
  laws.check = "category laws";
  report.add(std::move(laws));

  Report terminal("terminal object is the truncated conat");
  UniversalWitness w = find_universal(cc.cat, UniversalKind::terminal);
  ObjId conat = cc.objects.size() - 1;
  terminal.tick();
  if (w.objects.size() != 1 || w.objects[0] != conat) {
    std::string found;
    for (ObjId o : w.objects) found += (found.empty() ? "" : ", ") + cc.cat.object_name(o);
    terminal.fail("terminal objects differ", {{"expected", cc.names[conat]}, {"found", "{" + found + "}"}});
  }
  report.add(std::move(terminal));
  if (!w.objects.empty()) {
    Report iso = check_universal_uniqueness(cc.cat, UniversalKind::terminal, w);
    iso.check = "terminal object unique up to iso";
    report.add(std::move(iso));
  }

  Report fusion("f;ana(psi) = ana(phi)");
  std::vector<std::vector<Conat>> anas;
  for (const auto& c : cc.objects) anas.push_back(ana_conat(c));
  for (MorId m = 0; m < cc.cat.morphism_count(); ++m) {
    ObjId i = cc.cat.dom(m), j = cc.cat.cod(m);
    const auto& f = cc.tables[m];
    for (std::size_t p = 0; p < f.size(); ++p) {
      fusion.tick();
      if (!(anas[j][f[p]] == anas[i][p]))
        fusion.fail("anamorphisms disagree along a coalgebra morphism",
                    {{"morphism", cc.cat.morphism_name(m)}, {"element", std::to_string(p)}});
    }
  }
  report.add(std::move(fusion));
  return report;
}

StreamProc nats(long start, long bound) {
  StreamProc p;
  p.name = "nats(" + std::to_string(start) + ")";
  p.state = Value::of(start);
  p.head = [](const Value& s) { return s; };
  p.tail = [bound](const Value& s) {
    if (s.atom >= bound) throw SizeLimitError("nats: successor of " + std::to_string(s.atom) + " exceeds the bound");
    return Value::of(s.atom + 1);
  };
  return p;
}

StreamProc zip(const StreamProc& s, const StreamProc& t) {
  StreamProc p;
  p.name = "zip(" + s.name + ", " + t.name + ")";
  p.state = Value::seq({s.state, t.state});
  auto sh = s.head, th = t.head, st = s.tail, tt = t.tail;
  p.head = [sh, th](const Value& v) { return Value::seq({sh(v.items.at(0)), th(v.items.at(1))}); };
  p.tail = [st, tt](const Value& v) { return Value::seq({st(v.items.at(0)), tt(v.items.at(1))}); };
  return p;
}

StreamProc diagonal_pairs(long start, long bound) {
  StreamProc p = nats(start, bound);
  p.name = "diagonal(" + std::to_string(start) + ")";
  p.head = [](const Value& s) { return Value::seq({s, s}); };
  return p;
}

std::vector<Value> stream_take(const StreamProc& p, std::size_t k) {
  std::vector<Value> out;
  Value s = p.state;
  for (std::size_t i = 0; i < k; ++i) {
    if (i) s = p.tail(s);
    out.push_back(p.head(s));
  }
  return out;
}

bool bisimilar_up_to(const StreamProc& p, const StreamProc& q, std::size_t k) {
  return stream_take(p, k) == stream_take(q, k);
}

Report check_stream_equations(const StreamProc& p, std::size_t depth, std::size_t steps) {
  Report report("stream equations for " + p.name);
  Report head("head(f x) = h x");
  Report tail("tail(f x) = f(t x)");
  StreamProc at = p;
  for (std::size_t i = 0; i < steps; ++i) {
    auto obs = stream_take(at, depth + 1);
    head.tick();
    if (obs.at(0) != at.head(at.state))
      head.fail("head differs", {{"state", to_string(at.state)}, {"observed", to_string(obs[0])}});
    StreamProc next = at;
    next.state = at.tail(at.state);
    auto rest = stream_take(next, depth);
    tail.tick();
    if (!std::equal(rest.begin(), rest.end(), obs.begin() + 1))
      tail.fail("tail differs", {{"state", to_string(at.state)}, {"depth", std::to_string(depth)}});
    at = next;
  }
  report.add(std::move(head));
  report.add(std::move(tail));
  return report;
}

}  // namespace cattool
