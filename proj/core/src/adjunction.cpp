#include "cattool/adjunction.hpp"

#include <algorithm>
#include <map>

#include "cattool/error.hpp"
#include "cattool/finset.hpp"
#include "cattool/set_functor.hpp"

namespace cattool {

namespace {

std::string pair_name(const HomCat& c, ObjId x, const HomCat& d, ObjId y) {
  return "(" + c.show_object(x) + ", " + d.show_object(y) + ")";
}

void guard_hom(const HomCat& c, ObjId x, ObjId y, const std::string& what) {
  require_within(static_cast<double>(c.hom_size(x, y)), static_cast<double>(search_limit()), what);
}

}  // namespace

HomCatPtr hom_cat(const CatPtr& c) {
  auto h = std::make_shared<HomCat>();
  h->name = "finite category";
  h->hom_size = [c](ObjId x, ObjId y) { return c->hom(x, y).size(); };
  h->for_each_hom = [c](ObjId x, ObjId y, const std::function<bool(const Arrow&)>& visit) {
    for (MorId m : c->hom(x, y))
      if (!visit(Arrow{m})) return;
  };
  h->index_of = [c](ObjId x, ObjId y, const Arrow& a) {
    const auto& hs = c->hom(x, y);
    auto it = a.size() == 1 ? std::find(hs.begin(), hs.end(), a[0]) : hs.end();
    if (it == hs.end())
      throw ShapeError("arrow is not in Hom(" + c->object_name(x) + ", " + c->object_name(y) + ")");
    return static_cast<std::size_t>(it - hs.begin());
  };
  h->arrow_at = [c](ObjId x, ObjId y, std::size_t i) { return Arrow{c->hom(x, y).at(i)}; };
  h->compose = [c](ObjId, ObjId, ObjId, const Arrow& f, const Arrow& g) {
    return Arrow{c->compose(f.at(0), g.at(0))};
  };
  h->identity = [c](ObjId x) { return Arrow{c->identity(x)}; };
  h->show_object = [c](ObjId x) { return c->object_name(x); };
  h->show_arrow = [c](ObjId, ObjId, const Arrow& a) { return c->morphism_name(a.at(0)); };
  return h;
}

HomCatPtr finset_hom_cat() {
  auto h = std::make_shared<HomCat>();
  h->name = "finite sets";
  h->hom_size = [](ObjId x, ObjId y) { return count_functions(x, y); };
  h->for_each_hom = [](ObjId x, ObjId y, const std::function<bool(const Arrow&)>& visit) {
    for_each_function(FinSet(x), FinSet(y), [&](const FinFun& f) { return visit(f.table()); });
  };
  h->index_of = [](ObjId x, ObjId y, const Arrow& a) {
    return function_index(FinFun(FinSet(x), FinSet(y), a));
  };
  h->arrow_at = [](ObjId x, ObjId y, std::size_t i) {
    return function_at(FinSet(x), FinSet(y), i).table();
  };
  h->compose = [](ObjId, ObjId, ObjId, const Arrow& f, const Arrow& g) {
    Arrow out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.at(f[i]);
    return out;
  };
  h->identity = [](ObjId x) { return FinFun::identity(FinSet(x)).table(); };
  h->show_object = [](ObjId x) { return std::to_string(x); };
  h->show_arrow = [](ObjId x, ObjId y, const Arrow& a) {
    return FinFun(FinSet(x), FinSet(y), a).to_string();
  };
  return h;
}

HomFunctor hom_functor_view(const FunctorData& f, HomCatPtr source, HomCatPtr target) {
  HomFunctor h;
  h.name = "F";
  h.source = std::move(source);
  h.target = std::move(target);
  h.obj = [f](ObjId x) { return f(x); };
  h.mor = [f](ObjId, ObjId, const Arrow& a) { return Arrow{f.map(a.at(0))}; };
  return h;
}

HomFunctor identity_hom_functor(HomCatPtr c) {
  HomFunctor h;
  h.name = "Id";
  h.source = c;
  h.target = c;
  h.obj = [](ObjId x) { return x; };
  h.mor = [](ObjId, ObjId, const Arrow& a) { return a; };
  return h;
}

HomTables AdjunctionHomBijection::tables(ObjId x, ObjId d) const {
  const HomCat& c = *frame.left.source;
  const HomCat& dc = *frame.left.target;
  const ObjId fx = frame.left.obj(x), gd = frame.right.obj(d);
  guard_hom(dc, fx, d, "hom-set table");
  guard_hom(c, x, gd, "hom-set table");
  HomTables t;
  dc.for_each_hom(fx, d, [&](const Arrow& h) {
    t.alpha.push_back(c.index_of(x, gd, alpha(x, d, h)));
    return true;
  });
  c.for_each_hom(x, gd, [&](const Arrow& g) {
    t.alpha_inv.push_back(dc.index_of(fx, d, alpha_inv(x, d, g)));
    return true;
  });
  return t;
}

AdjunctionUnitCounit adjunction_from_nat(const FunctorData& f, const FunctorData& g,
                                         const NatTransData& unit, const NatTransData& counit) {
  if (f.source->object_count() != g.target->object_count() ||
      f.target->object_count() != g.source->object_count())
    throw ShapeError("adjunction: F : C -> D and G : D -> C do not line up");
  if (unit.components.size() != f.source->object_count() ||
      counit.components.size() != f.target->object_count())
    throw ShapeError("adjunction: unit or counit has the wrong number of components");
  HomCatPtr c = hom_cat(f.source), d = hom_cat(f.target);
  AdjunctionUnitCounit adj;
  adj.frame.left = hom_functor_view(f, c, d);
  adj.frame.right = hom_functor_view(g, d, c);
  adj.frame.right.name = "G";
  for (ObjId x = 0; x < f.source->object_count(); ++x) adj.frame.c_objects.push_back(x);
  for (ObjId y = 0; y < f.target->object_count(); ++y) adj.frame.d_objects.push_back(y);
  adj.unit = [u = unit.components](ObjId x) { return Arrow{u.at(x)}; };
  adj.counit = [e = counit.components](ObjId y) { return Arrow{e.at(y)}; };
  return adj;
}

AdjunctionHomBijection adjunction_from_tables(
    const FunctorData& f, const FunctorData& g,
    const std::vector<std::vector<std::vector<std::size_t>>>& alpha) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  if (c.object_count() != g.target->object_count() || d.object_count() != g.source->object_count())
    throw ShapeError("adjunction: F : C -> D and G : D -> C do not line up");
  if (alpha.size() != c.object_count())
    throw ShapeError("adjunction: alpha needs one row per object of C");
  using Tables = std::vector<std::vector<HomTables>>;
  auto tabs = std::make_shared<Tables>(c.object_count(), std::vector<HomTables>(d.object_count()));
  for (ObjId x = 0; x < c.object_count(); ++x) {
    if (alpha[x].size() != d.object_count())
      throw ShapeError("adjunction: alpha needs one table per object of D");
    for (ObjId y = 0; y < d.object_count(); ++y) {
      const std::size_t n_src = d.hom(f(x), y).size(), n_dst = c.hom(x, g(y)).size();
      const auto& t = alpha[x][y];
      std::string where = "alpha(" + c.object_name(x) + ", " + d.object_name(y) + ")";
      if (t.size() != n_src || n_src != n_dst)
        throw ConstructionError(where + " is not a bijection: hom-set sizes differ");
      std::vector<std::size_t> inv(n_dst, n_dst);
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= n_dst || inv[t[i]] != n_dst)
          throw ConstructionError(where + " is not a bijection at entry " + std::to_string(i));
        inv[t[i]] = i;
      }
      (*tabs)[x][y] = HomTables{t, inv};
    }
  }
  HomCatPtr hc = hom_cat(f.source), hd = hom_cat(f.target);
  AdjunctionHomBijection adj;
  adj.frame.left = hom_functor_view(f, hc, hd);
  adj.frame.right = hom_functor_view(g, hd, hc);
  adj.frame.right.name = "G";
  for (ObjId x = 0; x < c.object_count(); ++x) adj.frame.c_objects.push_back(x);
  for (ObjId y = 0; y < d.object_count(); ++y) adj.frame.d_objects.push_back(y);
  adj.alpha = [tabs, hc, hd, f, g](ObjId x, ObjId y, const Arrow& h) {
    std::size_t i = hd->index_of(f(x), y, h);
    return hc->arrow_at(x, g(y), (*tabs)[x][y].alpha[i]);
  };
  adj.alpha_inv = [tabs, hc, hd, f, g](ObjId x, ObjId y, const Arrow& k) {
    std::size_t i = hc->index_of(x, g(y), k);
    return hd->arrow_at(f(x), y, (*tabs)[x][y].alpha_inv[i]);
  };
  return adj;
}

AdjunctionUnitCounit identity_adjunction(const CatPtr& c) {
  HomCatPtr h = hom_cat(c);
  AdjunctionUnitCounit adj;
  adj.frame.left = identity_hom_functor(h);
  adj.frame.right = identity_hom_functor(h);
  for (ObjId x = 0; x < c->object_count(); ++x) {
    adj.frame.c_objects.push_back(x);
    adj.frame.d_objects.push_back(x);
  }
  adj.unit = [h](ObjId x) { return h->identity(x); };
  adj.counit = [h](ObjId x) { return h->identity(x); };
  return adj;
}

Report check_unit_counit_naturality(const AdjunctionUnitCounit& adj) {
  const HomFunctor& f = adj.frame.left;
  const HomFunctor& g = adj.frame.right;
  const HomCat& c = *f.source;
  const HomCat& d = *f.target;
  Report report("unit and counit naturality");
  Report unit("unit naturality"), counit("counit naturality");

  std::map<ObjId, Arrow> eta, eps;
  for (ObjId x : adj.frame.c_objects) eta[x] = adj.unit(x);
  for (ObjId y : adj.frame.d_objects) eps[y] = adj.counit(y);

  // f;eta_X' = eta_X;G(F(f))
  for (ObjId x : adj.frame.c_objects)
    for (ObjId x2 : adj.frame.c_objects) {
      const ObjId fx = f.obj(x), fx2 = f.obj(x2);
      const ObjId gfx = g.obj(fx), gfx2 = g.obj(fx2);
      c.for_each_hom(x, x2, [&](const Arrow& m) {
        unit.tick();
        Arrow lhs = c.compose(x, x2, gfx2, m, eta[x2]);
        Arrow rhs = c.compose(x, gfx, gfx2, eta[x], g.mor(fx, fx2, f.mor(x, x2, m)));
        if (lhs != rhs)
          unit.fail("f;eta differs from eta;GF(f)",
                    {{"f", c.show_arrow(x, x2, m)}, {"f;eta", c.show_arrow(x, gfx2, lhs)},
                     {"eta;GF(f)", c.show_arrow(x, gfx2, rhs)}});
        return true;
      });
    }
  // FG(g);eps_D' = eps_D;g
  for (ObjId y : adj.frame.d_objects)
    for (ObjId y2 : adj.frame.d_objects) {
      const ObjId gy = g.obj(y), gy2 = g.obj(y2);
      const ObjId fgy = f.obj(gy), fgy2 = f.obj(gy2);
      d.for_each_hom(y, y2, [&](const Arrow& m) {
        counit.tick();
        Arrow lhs = d.compose(fgy, fgy2, y2, f.mor(gy, gy2, g.mor(y, y2, m)), eps[y2]);
        Arrow rhs = d.compose(fgy, y, y2, eps[y], m);
        if (lhs != rhs)
          counit.fail("FG(g);eps differs from eps;g",
                      {{"g", d.show_arrow(y, y2, m)}, {"FG(g);eps", d.show_arrow(fgy, y2, lhs)},
                       {"eps;g", d.show_arrow(fgy, y2, rhs)}});
        return true;
      });
    }
  report.add(std::move(unit));
  report.add(std::move(counit));
  return report;
}

Report check_triangles(const AdjunctionUnitCounit& adj) {
  const HomFunctor& f = adj.frame.left;
  const HomFunctor& g = adj.frame.right;
  const HomCat& c = *f.source;
  const HomCat& d = *f.target;
  Report report("triangle identities");
  Report left("F(eta);eps = id"), right("eta;G(eps) = id");
  for (ObjId x : adj.frame.c_objects) {
    left.tick();
    const ObjId fx = f.obj(x), gfx = g.obj(fx), fgfx = f.obj(gfx);
    Arrow lhs = d.compose(fx, fgfx, fx, f.mor(x, gfx, adj.unit(x)), adj.counit(fx));
    if (lhs != d.identity(fx))
      left.fail("F(eta_X);eps_FX is not the identity",
                {{"object", c.show_object(x)}, {"F(eta_X);eps_FX", d.show_arrow(fx, fx, lhs)}});
  }
  for (ObjId y : adj.frame.d_objects) {
    right.tick();
    const ObjId gy = g.obj(y), fgy = f.obj(gy), gfgy = g.obj(fgy);
    Arrow lhs = c.compose(gy, gfgy, gy, adj.unit(gy), g.mor(fgy, y, adj.counit(y)));
    if (lhs != c.identity(gy))
      right.fail("eta_GD;G(eps_D) is not the identity",
                 {{"object", d.show_object(y)}, {"eta_GD;G(eps_D)", c.show_arrow(gy, gy, lhs)}});
  }
  report.add(std::move(left));
  report.add(std::move(right));
  return report;
}

AdjunctionHomBijection hom_bijection_from_unit_counit(const AdjunctionUnitCounit& adj) {
  AdjunctionHomBijection out;
  out.frame = adj.frame;
  const HomFunctor f = adj.frame.left, g = adj.frame.right;
  auto unit = adj.unit, counit = adj.counit;
  out.alpha = [f, g, unit](ObjId x, ObjId y, const Arrow& h) {
    const ObjId fx = f.obj(x);
    return f.source->compose(x, g.obj(fx), g.obj(y), unit(x), g.mor(fx, y, h));
  };
  out.alpha_inv = [f, g, counit](ObjId x, ObjId y, const Arrow& k) {
    const ObjId gy = g.obj(y);
    return f.target->compose(f.obj(x), f.obj(gy), y, f.mor(x, gy, k), counit(y));
  };
  return out;
}

AdjunctionUnitCounit unit_counit_from_hom_bijection(const AdjunctionHomBijection& adj) {
  AdjunctionUnitCounit out;
  out.frame = adj.frame;
  const HomFunctor f = adj.frame.left, g = adj.frame.right;
  auto alpha = adj.alpha, alpha_inv = adj.alpha_inv;
  out.unit = [f, alpha](ObjId x) {
    const ObjId fx = f.obj(x);
    return alpha(x, fx, f.target->identity(fx));
  };
  out.counit = [g, alpha_inv](ObjId y) {
    const ObjId gy = g.obj(y);
    return alpha_inv(gy, y, g.target->identity(gy));
  };
  return out;
}

Report check_hom_bijection(const AdjunctionHomBijection& adj) {
  const HomCat& c = *adj.frame.left.source;
  const HomCat& d = *adj.frame.left.target;
  Report report("hom-set bijection");
  for (ObjId x : adj.frame.c_objects)
    for (ObjId y : adj.frame.d_objects) {
      HomTables t = adj.tables(x, y);
      std::string where = pair_name(c, x, d, y);
      report.tick();
      if (t.alpha.size() != t.alpha_inv.size()) {
        report.fail("hom-sets have different sizes", {{"pair", where}});
        continue;
      }
      for (std::size_t i = 0; i < t.alpha.size(); ++i) {
        report.tick();
        if (t.alpha_inv[t.alpha[i]] != i)
          report.fail("alpha_inv(alpha(h)) != h",
                      {{"pair", where},
                       {"h", d.show_arrow(adj.frame.left.obj(x), y,
                                          d.arrow_at(adj.frame.left.obj(x), y, i))}});
        if (t.alpha[t.alpha_inv[i]] != i)
          report.fail("alpha(alpha_inv(k)) != k",
                      {{"pair", where},
                       {"k", c.show_arrow(x, adj.frame.right.obj(y),
                                          c.arrow_at(x, adj.frame.right.obj(y), i))}});
      }
    }
  return report;
}

Report check_hom_naturality(const AdjunctionHomBijection& adj) {
  const HomFunctor& f = adj.frame.left;
  const HomFunctor& g = adj.frame.right;
  const HomCat& c = *f.source;
  const HomCat& d = *f.target;
  Report report("hom-set naturality");
  Report pre("natural in C"), post("natural in D");

  // alpha(F(m);h) = m;alpha(h) for m : X' -> X, h : F X -> D
  for (ObjId x : adj.frame.c_objects)
    for (ObjId x2 : adj.frame.c_objects)
      for (ObjId y : adj.frame.d_objects) {
        const ObjId fx = f.obj(x), fx2 = f.obj(x2), gy = g.obj(y);
        c.for_each_hom(x2, x, [&](const Arrow& m) {
          Arrow fm = f.mor(x2, x, m);
          d.for_each_hom(fx, y, [&](const Arrow& h) {
            pre.tick();
            Arrow lhs = adj.alpha(x2, y, d.compose(fx2, fx, y, fm, h));
            Arrow rhs = c.compose(x2, x, gy, m, adj.alpha(x, y, h));
            if (lhs != rhs)
              pre.fail("alpha(F(f);h) differs from f;alpha(h)",
                       {{"f", c.show_arrow(x2, x, m)}, {"h", d.show_arrow(fx, y, h)},
                        {"alpha(F(f);h)", c.show_arrow(x2, gy, lhs)},
                        {"f;alpha(h)", c.show_arrow(x2, gy, rhs)}});
            return true;
          });
          return true;
        });
      }
  // alpha(h;m) = alpha(h);G(m) for m : D -> D'
  for (ObjId x : adj.frame.c_objects)
    for (ObjId y : adj.frame.d_objects)
      for (ObjId y2 : adj.frame.d_objects) {
        const ObjId fx = f.obj(x), gy = g.obj(y), gy2 = g.obj(y2);
        d.for_each_hom(y, y2, [&](const Arrow& m) {
          Arrow gm = g.mor(y, y2, m);
          d.for_each_hom(fx, y, [&](const Arrow& h) {
            post.tick();
            Arrow lhs = adj.alpha(x, y2, d.compose(fx, y, y2, h, m));
            Arrow rhs = c.compose(x, gy, gy2, adj.alpha(x, y, h), gm);
            if (lhs != rhs)
              post.fail("alpha(h;g) differs from alpha(h);G(g)",
                        {{"g", d.show_arrow(y, y2, m)}, {"h", d.show_arrow(fx, y, h)},
                         {"alpha(h;g)", c.show_arrow(x, gy2, lhs)},
                         {"alpha(h);G(g)", c.show_arrow(x, gy2, rhs)}});
            return true;
          });
          return true;
        });
      }
  report.add(std::move(pre));
  report.add(std::move(post));
  return report;
}

Report check_roundtrip(const AdjunctionHomBijection& adj) {
  const HomCat& c = *adj.frame.left.source;
  const HomCat& d = *adj.frame.left.target;
  Report report("presentation roundtrip");
  Report tables("hom bijection -> unit/counit -> hom bijection");
  Report units("unit/counit -> hom bijection -> unit/counit");

  AdjunctionUnitCounit uc = unit_counit_from_hom_bijection(adj);
  AdjunctionHomBijection back = hom_bijection_from_unit_counit(uc);
  for (ObjId x : adj.frame.c_objects)
    for (ObjId y : adj.frame.d_objects) {
      tables.tick();
      HomTables a = adj.tables(x, y), b = back.tables(x, y);
      if (a.alpha != b.alpha || a.alpha_inv != b.alpha_inv)
        tables.fail("reconstructed alpha differs", {{"pair", pair_name(c, x, d, y)}});
    }

  AdjunctionUnitCounit again = unit_counit_from_hom_bijection(back);
  for (ObjId x : adj.frame.c_objects) {
    units.tick();
    if (uc.unit(x) != again.unit(x)) units.fail("unit changed", {{"object", c.show_object(x)}});
  }
  for (ObjId y : adj.frame.d_objects) {
    units.tick();
    if (uc.counit(y) != again.counit(y)) units.fail("counit changed", {{"object", d.show_object(y)}});
  }
  report.add(std::move(tables));
  report.add(std::move(units));
  return report;
}

Report check_adjunction(const AdjunctionHomBijection& adj) {
  Report report("adjunction");
  report.add(check_hom_bijection(adj));
  report.add(check_hom_naturality(adj));
  AdjunctionUnitCounit uc = unit_counit_from_hom_bijection(adj);
  report.add(check_unit_counit_naturality(uc));
  report.add(check_triangles(uc));
  report.add(check_roundtrip(adj));
  return report;
}

AdjunctionHomBijection currying_adjunction(std::size_t y, std::size_t n) {
  if (n > 3 || y > 3) throw SizeLimitError("currying adjunction: sizes are limited to 3");
  HomCatPtr set = finset_hom_cat();
  SetFunctor reader = reader_functor(y);
  const FinSet ys(y);

  AdjunctionHomBijection adj;
  HomFunctor& f = adj.frame.left;
  f.name = "- x " + std::to_string(y);
  f.source = set;
  f.target = set;
  f.obj = [y](ObjId x) { return x * y; };
  f.mor = [ys](ObjId a, ObjId b, const Arrow& m) {
    return product_map(FinFun(FinSet(a), FinSet(b), m), FinFun::identity(ys)).table();
  };
  HomFunctor& g = adj.frame.right;
  g.name = std::to_string(y) + " -> -";
  g.source = set;
  g.target = set;
  g.obj = [y](ObjId d) { return count_functions(y, d); };
  g.mor = [reader](ObjId a, ObjId b, const Arrow& m) {
    return reader.on_morphisms(FinFun(FinSet(a), FinSet(b), m)).table();
  };
  for (ObjId k = 0; k <= n; ++k) {
    adj.frame.c_objects.push_back(k);
    adj.frame.d_objects.push_back(k);
  }
  adj.alpha = [ys](ObjId x, ObjId d, const Arrow& h) {
    Exponential e{FinSet(d), ys};
    return e.curry(FinSet(x), FinFun(Product(FinSet(x), ys).obj(), FinSet(d), h)).table();
  };
  adj.alpha_inv = [ys](ObjId x, ObjId d, const Arrow& k) {
    Exponential e{FinSet(d), ys};
    return e.uncurry(FinFun(FinSet(x), e.obj(), k)).table();
  };
  return adj;
}

HomFunctor reversed_exponential_functor(std::size_t y) {
  // Entry 0 is the least significant digit.
  auto decode = [y](std::size_t d, std::size_t i) {
    std::vector<std::size_t> t(y);
    for (std::size_t k = 0; k < y; ++k) {
      t[k] = i % d;
      i /= d;
    }
    return t;
  };
  auto encode = [y](std::size_t d, const std::vector<std::size_t>& t) {
    std::size_t i = 0;
    for (std::size_t k = y; k > 0; --k) i = i * d + t[k - 1];
    return i;
  };
  HomCatPtr set = finset_hom_cat();
  HomFunctor g;
  g.name = std::to_string(y) + " -> - (reversed)";
  g.source = set;
  g.target = set;
  g.obj = [y](ObjId d) { return count_functions(y, d); };
  g.mor = [y, decode, encode](ObjId a, ObjId b, const Arrow& m) {
    const std::size_t n = count_functions(y, a);
    Arrow out(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto t = decode(a, i);
      for (auto& v : t) v = m.at(v);
      out[i] = encode(b, t);
    }
    return out;
  };
  return g;
}

std::vector<std::vector<Arrow>> find_natural_isos(const HomFunctor& f, const HomFunctor& g,
                                                  const std::vector<ObjId>& objects) {
  const HomCat& src = *f.source;
  const HomCat& dst = *f.target;
  // Candidate components: the isomorphisms F x -> G x.
  std::vector<std::vector<Arrow>> candidates(objects.size());
  double space = 1;
  for (std::size_t k = 0; k < objects.size(); ++k) {
    const ObjId fx = f.obj(objects[k]), gx = g.obj(objects[k]);
    guard_hom(dst, fx, gx, "natural iso search");
    guard_hom(dst, gx, fx, "natural iso search");
    dst.for_each_hom(fx, gx, [&](const Arrow& a) {
      bool iso = false;
      dst.for_each_hom(gx, fx, [&](const Arrow& b) {
        iso = dst.compose(fx, gx, fx, a, b) == dst.identity(fx) &&
              dst.compose(gx, fx, gx, b, a) == dst.identity(gx);
        return !iso;
      });
      if (iso) candidates[k].push_back(a);
      return true;
    });
    space *= static_cast<double>(std::max<std::size_t>(candidates[k].size(), 1));
  }
  require_within(space, static_cast<double>(search_limit()), "natural iso search");

  std::vector<std::vector<Arrow>> found;
  std::vector<Arrow> chosen(objects.size());
  // F(m);theta_b = theta_a;G(m) for m : objects[a] -> objects[b].
  auto square = [&](std::size_t a, std::size_t b) {
    const ObjId x = objects[a], y = objects[b];
    bool ok = true;
    src.for_each_hom(x, y, [&](const Arrow& m) {
      Arrow lhs = dst.compose(f.obj(x), f.obj(y), g.obj(y), f.mor(x, y, m), chosen[b]);
      Arrow rhs = dst.compose(f.obj(x), g.obj(x), g.obj(y), chosen[a], g.mor(x, y, m));
      ok = lhs == rhs;
      return ok;
    });
    return ok;
  };
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == objects.size()) {
      found.push_back(chosen);
      return;
    }
    for (const Arrow& cand : candidates[k]) {
      chosen[k] = cand;
      bool ok = true;
      for (std::size_t j = 0; j <= k && ok; ++j) ok = square(j, k) && square(k, j);
      if (ok) go(k + 1);
    }
  };
  go(0);
  return found;
}

Report check_right_adjoint_uniqueness(std::size_t y, std::size_t n) {
  Report report("right adjoint unique up to iso");
  AdjunctionHomBijection standard = currying_adjunction(y, n);
  HomFunctor reversed = reversed_exponential_functor(y);

  // The reversed encoding is also right adjoint: transport alpha along the
  // reindexing Y -> D numbered one way to the other.
  AdjunctionHomBijection other = standard;
  other.frame.right = reversed;
  auto to_rev = [y](std::size_t d, std::size_t i) {
    auto t = function_at(FinSet(y), FinSet(d), i).table();
    std::size_t j = 0;
    for (std::size_t k = y; k > 0; --k) j = j * d + t[k - 1];
    return j;
  };
  auto from_rev = [y](std::size_t d, std::size_t j) {
    std::vector<std::size_t> t(y);
    for (std::size_t k = 0; k < y; ++k) {
      t[k] = j % d;
      j /= d;
    }
    return function_index(FinFun(FinSet(y), FinSet(d), std::move(t)));
  };
  other.alpha = [a = standard.alpha, to_rev](ObjId x, ObjId d, const Arrow& h) {
    Arrow k = a(x, d, h);
    for (auto& v : k) v = to_rev(d, v);
    return k;
  };
  other.alpha_inv = [a = standard.alpha_inv, from_rev](ObjId x, ObjId d, const Arrow& k) {
    Arrow std_k = k;
    for (auto& v : std_k) v = from_rev(d, v);
    return a(x, d, std_k);
  };
  Report second = check_adjunction(other);
  second.check = "reversed encoding is right adjoint";
  report.add(std::move(second));

  Report search("natural iso between the right adjoints");
  auto isos = find_natural_isos(standard.frame.right, reversed, standard.frame.d_objects);
  search.tick();
  if (isos.empty())
    search.fail("no natural isomorphism found", {{"Y", std::to_string(y)}, {"n", std::to_string(n)}});
  else
    search.note(std::to_string(isos.size()) + " natural isomorphism(s) on sets of size <= " +
                std::to_string(n));
  report.add(std::move(search));
  return report;
}

}  // namespace cattool
