#include "cattool/functor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "cattool/error.hpp"

namespace cattool {

namespace {

std::optional<MorId> inverse_in(const FinCat& c, MorId f) {
  for (MorId g : c.hom(c.cod(f), c.dom(f)))
    if (c.compose(f, g) == c.identity(c.dom(f)) && c.compose(g, f) == c.identity(c.cod(f)))
      return g;
  return std::nullopt;
}

void require_same(const CatPtr& a, const CatPtr& b, const std::string& what) {
  if (a.get() != b.get() && (a->object_count() != b->object_count() ||
                             a->morphism_count() != b->morphism_count()))
    throw ShapeError(what + ": categories do not match");
}

Report structural_error(const std::string& name, const std::string& why, std::vector<Witness> ws) {
  Report r(name);
  r.error("ill-typed: " + why);
  r.witnesses = std::move(ws);
  return r;
}

}  // namespace

FunctorData identity_functor(const CatPtr& c) {
  FunctorData f{c, c, {}, {}};
  for (ObjId x = 0; x < c->object_count(); ++x) f.obj_map.push_back(x);
  for (MorId m = 0; m < c->morphism_count(); ++m) f.mor_map.push_back(m);
  return f;
}

FunctorData compose_functors(const FunctorData& f, const FunctorData& g) {
  require_same(f.target, g.source, "compose_functors");
  FunctorData h{f.source, g.target, {}, {}};
  for (ObjId x : f.obj_map) h.obj_map.push_back(g.obj_map.at(x));
  for (MorId m : f.mor_map) h.mor_map.push_back(g.mor_map.at(m));
  return h;
}

bool same_functor(const FunctorData& f, const FunctorData& g) {
  return f.obj_map == g.obj_map && f.mor_map == g.mor_map;
}

Report check_functor(const FunctorData& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  const std::string name = "functor laws";
  if (f.obj_map.size() != c.object_count())
    return structural_error(name, "object map does not cover the source objects", {});
  if (f.mor_map.size() != c.morphism_count())
    return structural_error(name, "morphism map does not cover the source morphisms", {});
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (f.obj_map[x] >= d.object_count())
      return structural_error(name, "object sent outside the target", {{"object", c.object_name(x)}});
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    if (f.mor_map[m] >= d.morphism_count())
      return structural_error(name, "morphism sent outside the target",
                              {{"morphism", c.morphism_name(m)}});
    MorId fm = f.mor_map[m];
    if (d.dom(fm) != f.obj_map[c.dom(m)] || d.cod(fm) != f.obj_map[c.cod(m)])
      return structural_error(name, "image of a morphism has the wrong domain or codomain",
                              {{"morphism", c.describe(m)}, {"image", d.describe(fm)}});
  }
  Report report(name);
  Report ids("preserves identities");
  for (ObjId x = 0; x < c.object_count(); ++x) {
    ids.tick();
    MorId img = f.mor_map[c.identity(x)];
    if (img != d.identity(f.obj_map[x]))
      ids.fail("F(id) is not an identity",
               {{"object", c.object_name(x)}, {"F(id)", d.morphism_name(img)}});
  }
  Report comp("preserves composition");
  for (MorId a = 0; a < c.morphism_count(); ++a)
    for (MorId b : c.out(c.cod(a))) {
      comp.tick();
      MorId lhs = f.mor_map[c.compose(a, b)];
      MorId rhs = d.compose(f.mor_map[a], f.mor_map[b]);
      if (lhs != rhs)
        comp.fail("F(f;g) differs from F(f);F(g)",
                  {{"f", c.morphism_name(a)},
                   {"g", c.morphism_name(b)},
                   {"F(f;g)", d.morphism_name(lhs)},
                   {"F(f);F(g)", d.morphism_name(rhs)}});
    }
  report.add(std::move(ids));
  report.add(std::move(comp));
  return report;
}

NatTransData identity_nat(const FunctorData& f) {
  NatTransData a{f, f, {}};
  for (ObjId x = 0; x < f.source->object_count(); ++x)
    a.components.push_back(f.target->identity(f.obj_map[x]));
  return a;
}

Report check_naturality(const NatTransData& a) {
  const FunctorData& F = a.source_functor;
  const FunctorData& G = a.target_functor;
  const FinCat& c = *F.source;
  const FinCat& d = *F.target;
  const std::string name = "naturality";
  if (a.components.size() != c.object_count()) {
    Report r(name);
    r.error("component missing for some object");
    if (a.components.size() < c.object_count())
      r.witnesses.push_back({"object", c.object_name(a.components.size())});
    return r;
  }
  for (ObjId x = 0; x < c.object_count(); ++x) {
    MorId ax = a.components[x];
    if (ax >= d.morphism_count() || d.dom(ax) != F(x) || d.cod(ax) != G(x))
      return structural_error(name, "component is not a morphism F x -> G x",
                              {{"object", c.object_name(x)}});
  }
  Report report(name);
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    report.tick();
    ObjId x = c.dom(f), y = c.cod(f);
    MorId lhs = d.compose(a.components[x], G.map(f));
    MorId rhs = d.compose(F.map(f), a.components[y]);
    if (lhs != rhs)
      report.fail("naturality square does not commute",
                  {{"f", c.describe(f)},
                   {"alpha_x;G(f)", d.morphism_name(lhs)},
                   {"F(f);alpha_y", d.morphism_name(rhs)}});
  }
  return report;
}

bool is_natural_iso(const NatTransData& a) {
  for (MorId m : a.components)
    if (!inverse_in(*a.source_functor.target, m)) return false;
  return true;
}

NatTransData vcompose(const NatTransData& alpha, const NatTransData& beta) {
  if (!same_functor(alpha.target_functor, beta.source_functor))
    throw ShapeError("vcompose: target of the first is not the source of the second");
  NatTransData out{alpha.source_functor, beta.target_functor, {}};
  const FinCat& d = *alpha.source_functor.target;
  for (std::size_t x = 0; x < alpha.components.size(); ++x)
    out.components.push_back(d.compose(alpha.components[x], beta.components[x]));
  return out;
}

namespace {

void check_horizontal_shapes(const NatTransData& alpha, const NatTransData& beta) {
  const FinCat& d1 = *alpha.source_functor.target;
  const FinCat& d2 = *beta.source_functor.source;
  if (&d1 != &d2 && (d1.object_count() != d2.object_count() ||
                     d1.morphism_count() != d2.morphism_count()))
    throw ShapeError("hcompose: the first transformation does not land where the second starts");
}

}  // namespace

NatTransData hcompose(const NatTransData& alpha, const NatTransData& beta) {
  check_horizontal_shapes(alpha, beta);
  const FunctorData& F = alpha.source_functor;
  const FunctorData& G = alpha.target_functor;
  const FunctorData& H = beta.source_functor;
  const FunctorData& K = beta.target_functor;
  const FinCat& e = *H.target;
  NatTransData out{compose_functors(F, H), compose_functors(G, K), {}};
  for (ObjId x = 0; x < F.source->object_count(); ++x)
    out.components.push_back(e.compose(H.map(alpha.components[x]), beta.components[G(x)]));
  return out;
}

NatTransData hcompose_alt(const NatTransData& alpha, const NatTransData& beta) {
  check_horizontal_shapes(alpha, beta);
  const FunctorData& F = alpha.source_functor;
  const FunctorData& G = alpha.target_functor;
  const FunctorData& H = beta.source_functor;
  const FunctorData& K = beta.target_functor;
  const FinCat& e = *H.target;
  NatTransData out{compose_functors(F, H), compose_functors(G, K), {}};
  for (ObjId x = 0; x < F.source->object_count(); ++x)
    out.components.push_back(e.compose(beta.components[F(x)], K.map(alpha.components[x])));
  return out;
}

std::vector<FunctorData> enumerate_functors(const CatPtr& cp, const CatPtr& dp) {
  const FinCat& c = *cp;
  const FinCat& d = *dp;
  c.require_complete("enumerate_functors");
  d.require_complete("enumerate_functors");
  const std::size_t no = c.object_count(), nm = c.morphism_count();
  const double limit = static_cast<double>(search_limit());
  double explored = 0;
  std::vector<FunctorData> out;
  if (no > 0 && d.object_count() == 0) return out;

  // Composable pairs (a, b) indexed by the later of a, b, c(a;b), so each is
  // checked as soon as all three images are fixed.
  std::vector<std::vector<std::pair<MorId, MorId>>> checks(nm);
  for (MorId a = 0; a < nm; ++a)
    for (MorId b : c.out(c.cod(a))) {
      MorId ab = c.compose(a, b);
      checks[std::max({a, b, ab})].emplace_back(a, b);
    }

  std::vector<ObjId> om(no, 0);
  std::vector<MorId> mm(nm, 0);
  std::function<void(MorId)> assign = [&](MorId m) {
    if (m == nm) {
      out.push_back(FunctorData{cp, dp, om, mm});
      return;
    }
    ObjId x = c.dom(m), y = c.cod(m);
    auto try_value = [&](MorId v) {
      mm[m] = v;
      for (auto [a, b] : checks[m])
        if (d.compose(mm[a], mm[b]) != mm[c.compose(a, b)]) return;
      assign(m + 1);
    };
    if (c.is_identity(m)) {
      try_value(d.identity(om[x]));
      return;
    }
    const auto& options = d.hom(om[x], om[y]);
    explored += static_cast<double>(options.size());
    require_within(explored, limit, "functor enumeration");
    for (MorId v : options) try_value(v);
  };
  // Odometer over object maps.
  while (true) {
    explored += 1;
    require_within(explored, limit, "functor enumeration");
    assign(0);
    std::size_t i = no;
    bool done = true;
    while (i > 0) {
      --i;
      if (++om[i] < d.object_count()) {
        done = false;
        break;
      }
      om[i] = 0;
    }
    if (done) break;
  }
  return out;
}

std::vector<NatTransData> enumerate_nat(const FunctorData& f, const FunctorData& g) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  const std::size_t n = c.object_count();
  double total = 1;
  for (ObjId x = 0; x < n; ++x) total *= static_cast<double>(d.hom(f(x), g(x)).size());
  require_within(total, static_cast<double>(search_limit()), "natural transformation enumeration");
  std::vector<NatTransData> out;
  if (total == 0) return out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    NatTransData a{f, g, {}};
    for (ObjId x = 0; x < n; ++x) a.components.push_back(d.hom(f(x), g(x))[pick[x]]);
    bool natural = true;
    for (MorId m = 0; m < c.morphism_count() && natural; ++m)
      natural = d.compose(a.components[c.dom(m)], g.map(m)) ==
                d.compose(f.map(m), a.components[c.cod(m)]);
    if (natural) out.push_back(std::move(a));
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++pick[i] < d.hom(f(i), g(i)).size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  return out;
}

FunctorCategory functor_category(const CatPtr& c, const CatPtr& d) {
  FunctorCategory fc;
  fc.functors = enumerate_functors(c, d);
  FinCat::Builder b;
  b.set_family("functor-category");
  for (std::size_t i = 0; i < fc.functors.size(); ++i) b.add_object("F" + std::to_string(i));
  std::map<std::tuple<std::size_t, std::size_t, std::vector<MorId>>, MorId> index;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < fc.functors.size(); ++i)
    for (std::size_t j = 0; j < fc.functors.size(); ++j) {
      auto nats = enumerate_nat(fc.functors[i], fc.functors[j]);
      for (std::size_t k = 0; k < nats.size(); ++k) {
        MorId id = b.add_morphism(
            "F" + std::to_string(i) + "=>F" + std::to_string(j) + "#" + std::to_string(k), i, j);
        index.emplace(std::make_tuple(i, j, nats[k].components), id);
        ends.emplace_back(i, j);
        if (i == j && nats[k].components == identity_nat(fc.functors[i]).components)
          b.set_identity(i, id);
        fc.transformations.push_back(std::move(nats[k]));
      }
      require_within(static_cast<double>(fc.transformations.size()),
                     static_cast<double>(search_limit()), "functor category");
    }
  b.set_rule([&](MorId p, MorId q) -> std::optional<MorId> {
    NatTransData v = vcompose(fc.transformations[p], fc.transformations[q]);
    auto it = index.find(std::make_tuple(ends[p].first, ends[q].second, v.components));
    if (it == index.end()) return std::nullopt;
    return it->second;
  });
  fc.category = b.build();
  return fc;
}

FunctorClassification classify_functor(const FunctorData& F) {
  const FinCat& c = *F.source;
  const FinCat& d = *F.target;
  FunctorClassification k;

  k.injective_on_objects = true;
  for (ObjId x = 0; x < c.object_count() && k.injective_on_objects; ++x)
    for (ObjId y = x + 1; y < c.object_count(); ++y)
      if (F(x) == F(y)) {
        k.injective_on_objects = false;
        k.witnesses.push_back({"not injective on objects",
                               c.object_name(x) + " and " + c.object_name(y) + " both map to " +
                                   d.object_name(F(x))});
        break;
      }

  std::vector<bool> hit(d.object_count(), false);
  for (ObjId x : F.obj_map) hit[x] = true;
  k.surjective_on_objects = true;
  for (ObjId y = 0; y < d.object_count(); ++y)
    if (!hit[y]) {
      k.surjective_on_objects = false;
      k.witnesses.push_back({"not surjective on objects", d.object_name(y)});
      break;
    }

  k.full = true;
  k.faithful = true;
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = 0; y < c.object_count(); ++y) {
      std::map<MorId, MorId> image;
      for (MorId m : c.hom(x, y)) {
        auto [it, fresh] = image.emplace(F.map(m), m);
        if (!fresh && k.faithful) {
          k.faithful = false;
          k.witnesses.push_back({"not faithful", c.morphism_name(it->second) + " and " +
                                                     c.morphism_name(m) + " have the same image"});
        }
      }
      if (k.full)
        for (MorId g : d.hom(F(x), F(y)))
          if (!image.count(g)) {
            k.full = false;
            k.witnesses.push_back({"not full", d.describe(g) + " is not an image of " +
                                                   c.object_name(x) + " -> " + c.object_name(y)});
            break;
          }
    }

  // For each target object, the first source object with an iso F c -> d.
  std::vector<std::optional<std::pair<ObjId, MorId>>> chosen(d.object_count());
  k.essentially_surjective = true;
  for (ObjId t = 0; t < d.object_count(); ++t) {
    for (ObjId x = 0; x < c.object_count() && !chosen[t]; ++x)
      for (MorId i : d.hom(F(x), t))
        if (inverse_in(d, i)) {
          chosen[t] = std::make_pair(x, i);
          break;
        }
    if (!chosen[t] && k.essentially_surjective) {
      k.essentially_surjective = false;
      k.witnesses.push_back({"not essentially surjective", d.object_name(t)});
    }
  }

  k.is_isomorphism = k.injective_on_objects && k.surjective_on_objects && k.full && k.faithful;

  Report& eq = k.equivalence_report;
  if (!(k.full && k.faithful && k.essentially_surjective)) {
    eq.fail("an equivalence is full, faithful and essentially surjective; this functor is not",
            k.witnesses);
    return k;
  }
  // Full and faithful: every target morphism between images has exactly one preimage.
  auto lift = [&](ObjId x, ObjId y, MorId g) {
    for (MorId m : c.hom(x, y))
      if (F.map(m) == g) return m;
    throw Error("classify_functor: full functor with a missing preimage");
  };
  FunctorData G{F.target, F.source, {}, {}};
  std::vector<MorId> eps, eps_inv;
  for (ObjId t = 0; t < d.object_count(); ++t) {
    G.obj_map.push_back(chosen[t]->first);
    eps.push_back(chosen[t]->second);
    eps_inv.push_back(*inverse_in(d, chosen[t]->second));
  }
  for (MorId g = 0; g < d.morphism_count(); ++g) {
    ObjId s = d.dom(g), t = d.cod(g);
    MorId target = d.compose(d.compose(eps[s], g), eps_inv[t]);
    G.mor_map.push_back(lift(G(s), G(t), target));
  }
  NatTransData unit{identity_functor(F.source), compose_functors(F, G), {}};
  for (ObjId x = 0; x < c.object_count(); ++x) unit.components.push_back(lift(x, G(F(x)), eps_inv[F(x)]));
  NatTransData counit{compose_functors(G, F), identity_functor(F.target), eps};

  Report g_laws = check_functor(G);
  g_laws.check = "inverse functor laws";
  eq.add(std::move(g_laws));
  Report un = check_naturality(unit);
  un.check = "unit naturality";
  eq.add(std::move(un));
  Report co = check_naturality(counit);
  co.check = "counit naturality";
  eq.add(std::move(co));
  Report isos("unit and counit are isos");
  isos.tick(2);
  if (!is_natural_iso(unit)) isos.fail("unit has a non-invertible component", {{"unit", "component"}});
  if (!is_natural_iso(counit))
    isos.fail("counit has a non-invertible component", {{"counit", "component"}});
  eq.add(std::move(isos));
  k.is_equivalence = eq.passed();
  if (k.is_equivalence) k.equivalence = EquivalenceData{G, unit, counit};
  return k;
}

FunctorData finset_to_finord(std::size_t n) {
  if (n > 3) throw SizeLimitError("size limit exceeded: finset_to_finord supports n <= 3");
  CatPtr s = share(universe_category(UniverseKind::finset, n));
  CatPtr t = share(universe_category(UniverseKind::finord, n));
  FunctorData u{s, t, {}, {}};
  const Concrete& cs = *s->concrete();
  for (ObjId x = 0; x < s->object_count(); ++x) u.obj_map.push_back(cs.carriers[x].size());
  // finord hom-sets list every function in enumeration order, so the index is the table.
  for (MorId f = 0; f < s->morphism_count(); ++f)
    u.mor_map.push_back(
        t->hom(u.obj_map[s->dom(f)], u.obj_map[s->cod(f)]).at(function_index(cs.functions[f])));
  return u;
}

Report check_contravariant(const ContravariantFunctorData& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  const std::string name = "contravariant functor laws";
  if (f.obj_map.size() != c.object_count() || f.mor_map.size() != c.morphism_count())
    return structural_error(name, "maps do not cover the source", {});
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    MorId fm = f.mor_map[m];
    if (fm >= d.morphism_count() || d.dom(fm) != f.obj_map.at(c.cod(m)) ||
        d.cod(fm) != f.obj_map.at(c.dom(m)))
      return structural_error(name, "image of f : x -> y is not a morphism F y -> F x",
                              {{"morphism", c.describe(m)}});
  }
  Report report(name);
  Report ids("preserves identities");
  for (ObjId x = 0; x < c.object_count(); ++x) {
    ids.tick();
    if (f.mor_map[c.identity(x)] != d.identity(f.obj_map[x]))
      ids.fail("F(id) is not an identity", {{"object", c.object_name(x)}});
  }
  Report comp("reverses composition");
  for (MorId a = 0; a < c.morphism_count(); ++a)
    for (MorId b : c.out(c.cod(a))) {
      comp.tick();
      MorId lhs = f.mor_map[c.compose(a, b)];
      MorId rhs = d.compose(f.mor_map[b], f.mor_map[a]);
      if (lhs != rhs)
        comp.fail("F(f;g) differs from F(g);F(f)",
                  {{"f", c.morphism_name(a)}, {"g", c.morphism_name(b)}});
    }
  report.add(std::move(ids));
  report.add(std::move(comp));
  return report;
}

FunctorData to_covariant(const ContravariantFunctorData& f) {
  // opposite() keeps morphism ids, so the maps carry over unchanged.
  return FunctorData{share(opposite(*f.source)), f.target, f.obj_map, f.mor_map};
}

ContravariantFunctorData from_covariant_on_opposite(const FunctorData& f, const CatPtr& original) {
  if (original->morphism_count() != f.source->morphism_count())
    throw ShapeError("from_covariant_on_opposite: source is not the opposite of the given category");
  return ContravariantFunctorData{original, f.target, f.obj_map, f.mor_map};
}

std::vector<bool> powerset_inverse_image(const FinFun& f, const std::vector<bool>& b) {
  if (b.size() != f.cod().size()) throw ShapeError("inverse image: B is not a subset of the codomain");
  std::vector<bool> out(f.dom().size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = b[f(x)];
  return out;
}

namespace {

std::vector<bool> subset_of(std::size_t n, std::size_t mask) {
  std::vector<bool> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
  return s;
}

std::string subset_string(const std::vector<bool>& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return out + "}";
}

}  // namespace

Report check_powerset_contravariant(std::size_t nmax) {
  if (nmax > 3) throw SizeLimitError("size limit exceeded: powerset check supports nmax <= 3");
  Report report("contravariant powerset laws");
  Report ids("id^-1 = id"), comp("(f;g)^-1 = g^-1 then f^-1");
  for (std::size_t a = 0; a <= nmax; ++a) {
    FinSet A(a);
    for (std::size_t mask = 0; mask < (std::size_t{1} << a); ++mask) {
      ids.tick();
      auto s = subset_of(a, mask);
      if (powerset_inverse_image(FinFun::identity(A), s) != s)
        ids.fail("inverse image along id changes a subset", {{"B", subset_string(s)}});
    }
  }
  for (std::size_t a = 0; a <= nmax; ++a)
    for (std::size_t b = 0; b <= nmax; ++b)
      for (std::size_t cz = 0; cz <= nmax; ++cz)
        for_each_function(FinSet(a), FinSet(b), [&](const FinFun& f) {
          for_each_function(FinSet(b), FinSet(cz), [&](const FinFun& g) {
            FinFun fg = compose(f, g);
            for (std::size_t mask = 0; mask < (std::size_t{1} << cz); ++mask) {
              comp.tick();
              auto s = subset_of(cz, mask);
              auto lhs = powerset_inverse_image(fg, s);
              auto rhs = powerset_inverse_image(f, powerset_inverse_image(g, s));
              if (lhs != rhs)
                comp.fail("inverse image does not reverse composition",
                          {{"f", f.to_string()}, {"g", g.to_string()}, {"C", subset_string(s)}});
            }
            return true;
          });
          return true;
        });
  report.add(std::move(ids));
  report.add(std::move(comp));
  return report;
}

Report check_mset_action(const FunctorData& f, const FiniteMonoid& m) {
  Report report("monoid action laws");
  const FinCat& d = *f.target;
  if (!d.concrete()) {
    report.not_applicable("target category has no underlying functions");
    return report;
  }
  if (f.source->object_count() != 1 || f.source->morphism_count() != m.size())
    throw ShapeError("check_mset_action: source is not the category of the given monoid");
  const auto& funs = d.concrete()->functions;
  const std::size_t carrier = d.concrete()->carriers[f(0)].size();
  auto mu = [&](std::size_t a, std::size_t x) { return funs[f.map(a)](x); };
  Report unit("mu(e, x) = x"), action("mu(m*n, x) = mu(n, mu(m, x))");
  for (std::size_t x = 0; x < carrier; ++x) {
    unit.tick();
    if (mu(m.unit, x) != x) unit.fail("unit acts non-trivially", {{"x", std::to_string(x)}});
  }
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      for (std::size_t x = 0; x < carrier; ++x) {
        action.tick();
        if (mu(m.mul(a, b), x) != mu(b, mu(a, x)))
          action.fail("action law fails",
                      {{"m", m.elements[a]}, {"n", m.elements[b]}, {"x", std::to_string(x)}});
      }
  report.add(std::move(unit));
  report.add(std::move(action));
  return report;
}

}  // namespace cattool
