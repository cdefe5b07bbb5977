#include "cattool/set_functor.hpp"

#include <algorithm>

#include "cattool/error.hpp"

namespace cattool {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) v *= base;
  return v;
}

std::size_t list_count(std::size_t n, std::size_t max_len) {
  std::size_t total = 0;
  for (std::size_t l = 0; l <= max_len; ++l) total += power(n, l);
  return total;
}

std::string show_list(const std::vector<std::size_t>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_lists(std::size_t n, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for_each_function(FinSet(len), FinSet(n), [&](const FinFun& f) {
      out.push_back(f.table());
      return true;
    });
  return out;
}

std::size_t list_index(std::size_t n, const std::vector<std::size_t>& xs) {
  std::size_t offset = 0;
  for (std::size_t l = 0; l < xs.size(); ++l) offset += power(n, l);
  std::size_t lex = 0;
  for (std::size_t v : xs) lex = lex * n + v;
  return offset + lex;
}

std::vector<std::size_t> list_at(std::size_t n, std::size_t index) {
  std::size_t len = 0;
  while (index >= power(n, len)) {
    index -= power(n, len);
    ++len;
    if (n <= 1 && len > 64) throw LookupError("list_at: index out of range");
  }
  return function_at(FinSet(len), FinSet(n), index).table();
}

SetFunctor list_functor(std::size_t max_len) {
  SetFunctor f;
  f.name = "list(" + std::to_string(max_len) + ")";
  f.on_objects = [max_len](const FinSet& x) { return FinSet(list_count(x.size(), max_len)); };
  f.on_morphisms = [max_len](const FinFun& g) {
    const std::size_t n = g.dom().size(), m = g.cod().size();
    std::vector<std::size_t> t;
    for (const auto& xs : enumerate_lists(n, max_len)) {
      std::vector<std::size_t> ys;
      for (std::size_t v : xs) ys.push_back(g(v));
      t.push_back(list_index(m, ys));
    }
    return FinFun(FinSet(list_count(n, max_len)), FinSet(list_count(m, max_len)), std::move(t));
  };
  f.show = [](std::size_t n, std::size_t i) { return show_list(list_at(n, i)); };
  return f;
}

SetFunctor maybe_functor() {
  SetFunctor f;
  f.name = "maybe";
  f.on_objects = [](const FinSet& x) { return FinSet(x.size() + 1); };
  f.on_morphisms = [](const FinFun& g) { return coproduct_map(g, FinFun::identity(FinSet(1))); };
  f.show = [](std::size_t n, std::size_t i) { return i == n ? std::string("*") : std::to_string(i); };
  return f;
}

SetFunctor times_functor(std::size_t a) {
  SetFunctor f;
  f.name = "times(" + std::to_string(a) + ")";
  f.on_objects = [a](const FinSet& x) { return Product(x, FinSet(a)).obj(); };
  f.on_morphisms = [a](const FinFun& g) { return product_map(g, FinFun::identity(FinSet(a))); };
  f.show = [a](std::size_t, std::size_t i) {
    return "(" + std::to_string(i / a) + "," + std::to_string(i % a) + ")";
  };
  return f;
}

SetFunctor plus_functor(std::size_t a) {
  SetFunctor f;
  f.name = "plus(" + std::to_string(a) + ")";
  f.on_objects = [a](const FinSet& x) { return Coproduct(x, FinSet(a)).obj(); };
  f.on_morphisms = [a](const FinFun& g) { return coproduct_map(g, FinFun::identity(FinSet(a))); };
  f.show = [](std::size_t n, std::size_t i) {
    return i < n ? "inl " + std::to_string(i) : "inr " + std::to_string(i - n);
  };
  return f;
}

SetFunctor reader_functor(std::size_t r) {
  SetFunctor f;
  f.name = "reader(" + std::to_string(r) + ")";
  f.on_objects = [r](const FinSet& x) { return Exponential(x, FinSet(r)).obj(); };
  // (R -> g)(h) = h ; g
  f.on_morphisms = [r](const FinFun& g) {
    Exponential src(g.dom(), FinSet(r)), dst(g.cod(), FinSet(r));
    std::vector<std::size_t> t(src.obj().size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = dst.index_of(compose(src.function_at(i), g));
    return FinFun(src.obj(), dst.obj(), std::move(t));
  };
  f.show = [r](std::size_t n, std::size_t i) {
    return show_list(function_at(FinSet(r), FinSet(n), i).table());
  };
  return f;
}

SetFunctor hom_functor(std::size_t r) {
  SetFunctor f = reader_functor(r);
  f.name = "hom(" + std::to_string(r) + ")";
  return f;
}

SetFunctor builtin_set_functor(const std::string& name, std::size_t param) {
  if (name == "list") return list_functor(param);
  if (name == "maybe") return maybe_functor();
  if (name == "times") return times_functor(param);
  if (name == "plus") return plus_functor(param);
  if (name == "reader") return reader_functor(param);
  if (name == "hom") return hom_functor(param);
  throw LookupError("unknown set functor '" + name + "'");
}

Report check_set_functor(const SetFunctor& f, std::size_t max_size) {
  Report report(f.name + " functor laws");
  Report ids("preserves identities"), comp("preserves composition");
  for (std::size_t a = 0; a <= max_size; ++a) {
    ids.tick();
    FinSet x(a);
    FinFun img = f.on_morphisms(FinFun::identity(x));
    if (!(img == FinFun::identity(f.on_objects(x))))
      ids.fail("F(id) is not the identity", {{"|X|", std::to_string(a)}});
  }
  for (std::size_t a = 0; a <= max_size; ++a)
    for (std::size_t b = 0; b <= max_size; ++b)
      for (std::size_t c = 0; c <= max_size; ++c)
        for_each_function(FinSet(a), FinSet(b), [&](const FinFun& g) {
          FinFun fg = f.on_morphisms(g);
          for_each_function(FinSet(b), FinSet(c), [&](const FinFun& h) {
            comp.tick();
            if (!(f.on_morphisms(compose(g, h)) == compose(fg, f.on_morphisms(h))))
              comp.fail("F(g;h) differs from F(g);F(h)", {{"g", g.to_string()}, {"h", h.to_string()}});
            return true;
          });
          return true;
        });
  report.add(std::move(ids));
  report.add(std::move(comp));
  return report;
}

FinSet CatHomFunctor::on_object(ObjId x) const { return FinSet(c->hom(r, x).size()); }

FinFun CatHomFunctor::on_morphism(MorId f) const {
  const auto& src = c->hom(r, c->dom(f));
  const auto& dst = c->hom(r, c->cod(f));
  std::vector<std::size_t> t;
  for (MorId g : src) {
    MorId gf = c->compose(g, f);
    t.push_back(static_cast<std::size_t>(std::find(dst.begin(), dst.end(), gf) - dst.begin()));
  }
  return FinFun(on_object(c->dom(f)), on_object(c->cod(f)), std::move(t));
}

Report check_hom_functor(const FinCat& c, ObjId r) {
  c.require_complete("hom functor");
  CatHomFunctor h{&c, r};
  Report report("Hom(" + c.object_name(r) + ", -) functor laws");
  Report ids("preserves identities"), comp("preserves composition");
  for (ObjId x = 0; x < c.object_count(); ++x) {
    ids.tick();
    if (!(h.on_morphism(c.identity(x)) == FinFun::identity(h.on_object(x))))
      ids.fail("Hom(R, id) is not the identity", {{"object", c.object_name(x)}});
  }
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g : c.out(c.cod(f))) {
      comp.tick();
      if (!(h.on_morphism(c.compose(f, g)) == compose(h.on_morphism(f), h.on_morphism(g))))
        comp.fail("Hom(R, f;g) differs from Hom(R, f);Hom(R, g)",
                  {{"f", c.morphism_name(f)}, {"g", c.morphism_name(g)}});
    }
  report.add(std::move(ids));
  report.add(std::move(comp));
  return report;
}

}  // namespace cattool
