#include "cattool_cli/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cattool/constructions.hpp"

namespace cattool::cli {

namespace {

namespace fs = std::filesystem;

std::string sub(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string sub(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const json& field(const json& doc, const std::string& key, const std::string& at) {
  if (!doc.is_object()) throw DocumentError(at, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw DocumentError(sub(at, key), "missing field");
  return *it;
}

std::string as_string(const json& v, const std::string& at) {
  if (!v.is_string()) throw DocumentError(at, "expected a string");
  return v.get<std::string>();
}

std::size_t as_count(const json& v, const std::string& at) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw DocumentError(at, "expected a non-negative integer");
  return v.get<std::size_t>();
}

const json& as_array(const json& v, const std::string& at) {
  if (!v.is_array()) throw DocumentError(at, "expected an array");
  return v;
}

std::vector<std::string> string_list(const json& doc, const std::string& key, const std::string& at) {
  const json& arr = as_array(field(doc, key, at), sub(at, key));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_string(arr[i], sub(sub(at, key), i)));
  return out;
}

const std::string& kind_of(const json& doc, const std::string& at) {
  const json& k = field(doc, "kind", at);
  if (!k.is_string()) throw DocumentError(sub(at, "kind"), "expected a string");
  return k.get_ref<const std::string&>();
}

void expect_kind(const json& doc, const std::string& kind, const std::string& at) {
  if (kind_of(doc, at) != kind)
    throw DocumentError(sub(at, "kind"), "expected \"" + kind + "\", got \"" + kind_of(doc, at) + "\"");
}

ObjId object_named(const FinCat& c, const std::string& name, const std::string& at) {
  auto x = c.find_object(name);
  if (!x) throw DocumentError(at, "unknown object '" + name + "'");
  return *x;
}

MorId morphism_named(const FinCat& c, const std::string& name, const std::string& at) {
  auto f = c.find_morphism(name);
  if (!f) throw DocumentError(at, "unknown morphism '" + name + "'");
  return *f;
}

FinCat parse_explicit(const json& doc, const std::string& at) {
  FinCat::Builder b;
  std::map<std::string, ObjId> objects;
  for (const auto& name : string_list(doc, "objects", at)) objects[name] = b.add_object(name);
  std::map<std::string, MorId> morphisms;
  const json& ms = as_array(field(doc, "morphisms", at), sub(at, "morphisms"));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::string p = sub(sub(at, "morphisms"), i);
    std::string name = as_string(field(ms[i], "name", p), sub(p, "name"));
    std::string dom = as_string(field(ms[i], "dom", p), sub(p, "dom"));
    std::string cod = as_string(field(ms[i], "cod", p), sub(p, "cod"));
    if (!objects.count(dom)) throw DocumentError(sub(p, "dom"), "unknown object '" + dom + "'");
    if (!objects.count(cod)) throw DocumentError(sub(p, "cod"), "unknown object '" + cod + "'");
    if (morphisms.count(name)) throw DocumentError(sub(p, "name"), "duplicate morphism '" + name + "'");
    morphisms[name] = b.add_morphism(name, objects[dom], objects[cod]);
  }
  auto mor = [&](const json& v, const std::string& p) {
    std::string n = as_string(v, p);
    auto it = morphisms.find(n);
    if (it == morphisms.end()) throw DocumentError(p, "unknown morphism '" + n + "'");
    return it->second;
  };
  const json& ids = field(doc, "identities", at);
  if (!ids.is_object()) throw DocumentError(sub(at, "identities"), "expected an object mapping objects to morphisms");
  std::vector<std::optional<MorId>> identity(objects.size());
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    std::string p = sub(sub(at, "identities"), it.key());
    auto o = objects.find(it.key());
    if (o == objects.end()) throw DocumentError(p, "unknown object '" + it.key() + "'");
    MorId f = mor(it.value(), p);
    b.set_identity(o->second, f);
    identity[o->second] = f;
  }
  if (doc.contains("composition")) {
    const json& comp = as_array(doc["composition"], sub(at, "composition"));
    for (std::size_t i = 0; i < comp.size(); ++i) {
      std::string p = sub(sub(at, "composition"), i);
      b.set_composite(mor(field(comp[i], "first", p), sub(p, "first")), mor(field(comp[i], "then", p), sub(p, "then")),
                      mor(field(comp[i], "result", p), sub(p, "result")));
    }
  }
  // Composites with an identity may be left out of the table.
  b.set_rule([identity](MorId f, MorId g) -> std::optional<MorId> {
    for (const auto& id : identity) {
      if (id && *id == f) return g;
      if (id && *id == g) return f;
    }
    return std::nullopt;
  });
  return b.build();
}

FinCat parse_preorder(const json& doc, const std::string& at) {
  PreorderPresentation p;
  p.elements = string_list(doc, "elements", at);
  const json& leq = as_array(field(doc, "leq", at), sub(at, "leq"));
  for (std::size_t i = 0; i < leq.size(); ++i) {
    std::string q = sub(sub(at, "leq"), i);
    if (!leq[i].is_array() || leq[i].size() != 2) throw DocumentError(q, "expected a pair [a, b]");
    p.leq.emplace_back(as_string(leq[i][0], sub(q, 0)), as_string(leq[i][1], sub(q, 1)));
  }
  return from_preorder(p);
}

FinCat parse_monoid(const json& doc, const std::string& at) {
  FiniteMonoid m;
  m.elements = string_list(doc, "elements", at);
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < m.elements.size(); ++i) idx[m.elements[i]] = i;
  auto element = [&](const json& v, const std::string& p) -> std::size_t {
    if (v.is_number_integer()) {
      std::size_t i = as_count(v, p);
      if (i >= m.elements.size()) throw DocumentError(p, "element index out of range");
      return i;
    }
    std::string n = as_string(v, p);
    auto it = idx.find(n);
    if (it == idx.end()) throw DocumentError(p, "unknown element '" + n + "'");
    return it->second;
  };
  m.unit = element(field(doc, "unit", at), sub(at, "unit"));
  const json& table = as_array(field(doc, "table", at), sub(at, "table"));
  if (table.size() != m.elements.size()) throw DocumentError(sub(at, "table"), "needs one row per element");
  for (std::size_t a = 0; a < table.size(); ++a) {
    std::string row = sub(sub(at, "table"), a);
    const json& r = as_array(table[a], row);
    if (r.size() != m.elements.size()) throw DocumentError(row, "needs one entry per element");
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < r.size(); ++b) out.push_back(element(r[b], sub(row, b)));
    m.table.push_back(std::move(out));
  }
  m.validate();
  return from_monoid(m);
}

FinCat parse_graph(const json& doc, const std::string& at) {
  GraphPresentation g;
  g.nodes = string_list(doc, "nodes", at);
  const json& edges = as_array(field(doc, "edges", at), sub(at, "edges"));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string p = sub(sub(at, "edges"), i);
    g.edges.push_back({as_string(field(edges[i], "name", p), sub(p, "name")),
                       as_string(field(edges[i], "dom", p), sub(p, "dom")),
                       as_string(field(edges[i], "cod", p), sub(p, "cod"))});
  }
  if (doc.contains("max_path_len")) g.max_path_len = as_count(doc["max_path_len"], sub(at, "max_path_len"));
  return from_graph(g);
}

FinCat parse_universe(const json& doc, const std::string& at) {
  std::string family = as_string(field(doc, "family", at), sub(at, "family"));
  std::size_t n = as_count(field(doc, "max_size", at), sub(at, "max_size"));
  UniverseKind k;
  try {
    k = parse_universe_kind(family);
  } catch (const LookupError& e) {
    throw DocumentError(sub(at, "family"), e.what());
  }
  return universe_category(k, n);
}

NatTransData parse_components(const json& doc, const std::string& key, FunctorData from, FunctorData to,
                              const std::string& at) {
  NatTransData a{std::move(from), std::move(to), {}};
  const FinCat& src = *a.source_functor.source;
  const FinCat& tgt = *a.source_functor.target;
  const json& comps = field(doc, key, at);
  if (!comps.is_object()) throw DocumentError(sub(at, key), "expected an object mapping objects to morphisms");
  a.components.resize(src.object_count());
  for (ObjId x = 0; x < src.object_count(); ++x) {
    std::string p = sub(sub(at, key), src.object_name(x));
    auto it = comps.find(src.object_name(x));
    if (it == comps.end()) throw DocumentError(p, "missing component");
    a.components[x] = morphism_named(tgt, as_string(*it, p), p);
  }
  for (auto it = comps.begin(); it != comps.end(); ++it)
    if (!src.find_object(it.key())) throw DocumentError(sub(sub(at, key), it.key()), "unknown object");
  return a;
}

}  // namespace

Loaded load_document(const std::string& path_or_text) {
  Loaded out;
  std::string text;
  if (!path_or_text.empty() && path_or_text.front() == '{') {
    text = path_or_text;
    out.base = fs::current_path();
  } else {
    std::ifstream in(path_or_text);
    if (!in) throw DocumentError("", "cannot read '" + path_or_text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    out.base = fs::path(path_or_text).parent_path();
  }
  try {
    out.doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("", std::string("invalid JSON: ") + e.what());
  }
  return out;
}

FinCat parse_category(const json& doc, const fs::path& base, const std::string& at) {
  (void)base;
  const std::string& kind = kind_of(doc, at);
  if (kind == "explicit") return parse_explicit(doc, at);
  if (kind == "preorder") return parse_preorder(doc, at);
  if (kind == "monoid") return parse_monoid(doc, at);
  if (kind == "graph") return parse_graph(doc, at);
  if (kind == "universe") return parse_universe(doc, at);
  throw DocumentError(sub(at, "kind"), "unknown category kind \"" + kind +
                                           "\" (expected explicit, preorder, monoid, graph, universe)");
}

CatPtr category_field(const json& doc, const std::string& key, const fs::path& base, const std::string& at) {
  const json& v = field(doc, key, at);
  if (v.is_string()) {
    fs::path p = fs::path(v.get<std::string>());
    if (p.is_relative()) p = base / p;
    Loaded nested = load_document(p.string());
    return share(parse_category(nested.doc, nested.base, sub(at, key)));
  }
  if (v.is_object()) return share(parse_category(v, base, sub(at, key)));
  throw DocumentError(sub(at, key), "expected a category document or a path");
}

FunctorData parse_functor_maps(const json& doc, const CatPtr& source, const CatPtr& target, const std::string& at) {
  FunctorData f{source, target, {}, {}};
  const json& objs = field(doc, "objects", at);
  if (!objs.is_object()) throw DocumentError(sub(at, "objects"), "expected an object mapping names");
  f.obj_map.resize(source->object_count());
  for (ObjId x = 0; x < source->object_count(); ++x) {
    std::string p = sub(sub(at, "objects"), source->object_name(x));
    auto it = objs.find(source->object_name(x));
    if (it == objs.end()) throw DocumentError(p, "missing object image");
    f.obj_map[x] = object_named(*target, as_string(*it, p), p);
  }
  for (auto it = objs.begin(); it != objs.end(); ++it)
    if (!source->find_object(it.key())) throw DocumentError(sub(sub(at, "objects"), it.key()), "unknown object");
  json mors = doc.contains("morphisms") ? doc["morphisms"] : json::object();
  if (!mors.is_object()) throw DocumentError(sub(at, "morphisms"), "expected an object mapping names");
  f.mor_map.resize(source->morphism_count());
  for (MorId m = 0; m < source->morphism_count(); ++m) {
    std::string p = sub(sub(at, "morphisms"), source->morphism_name(m));
    auto it = mors.find(source->morphism_name(m));
    if (it != mors.end()) {
      f.mor_map[m] = morphism_named(*target, as_string(*it, p), p);
    } else if (source->is_identity(m)) {
      // Identities may be omitted; they go to the identity of the image object.
      f.mor_map[m] = target->identity(f.obj_map[source->dom(m)]);
    } else {
      throw DocumentError(p, "missing morphism image");
    }
  }
  for (auto it = mors.begin(); it != mors.end(); ++it)
    if (!source->find_morphism(it.key())) throw DocumentError(sub(sub(at, "morphisms"), it.key()), "unknown morphism");
  return f;
}

FunctorData parse_functor(const json& doc, const fs::path& base) {
  expect_kind(doc, "functor", "");
  CatPtr s = category_field(doc, "source", base, "");
  CatPtr t = category_field(doc, "target", base, "");
  return parse_functor_maps(doc, s, t, "");
}

NatTransData parse_nattrans(const json& doc, const fs::path& base) {
  expect_kind(doc, "nattrans", "");
  CatPtr s = category_field(doc, "source", base, "");
  CatPtr t = category_field(doc, "target", base, "");
  FunctorData from = parse_functor_maps(field(doc, "from", ""), s, t, "/from");
  FunctorData to = parse_functor_maps(field(doc, "to", ""), s, t, "/to");
  return parse_components(doc, "components", std::move(from), std::move(to), "");
}

AdjunctionUnitCounit parse_adjunction(const json& doc, const fs::path& base) {
  expect_kind(doc, "adjunction", "");
  CatPtr c = category_field(doc, "c", base, "");
  CatPtr d = category_field(doc, "d", base, "");
  FunctorData f = parse_functor_maps(field(doc, "left", ""), c, d, "/left");
  FunctorData g = parse_functor_maps(field(doc, "right", ""), d, c, "/right");
  NatTransData unit = parse_components(doc, "unit", identity_functor(c), compose_functors(f, g), "");
  NatTransData counit = parse_components(doc, "counit", compose_functors(g, f), identity_functor(d), "");
  return adjunction_from_nat(f, g, unit, counit);
}

json category_to_json(const FinCat& c) {
  json doc;
  doc["kind"] = "explicit";
  json objects = json::array();
  for (ObjId x = 0; x < c.object_count(); ++x) objects.push_back(c.object_name(x));
  doc["objects"] = objects;
  json morphisms = json::array();
  for (MorId f = 0; f < c.morphism_count(); ++f)
    morphisms.push_back(
        {{"name", c.morphism_name(f)}, {"dom", c.object_name(c.dom(f))}, {"cod", c.object_name(c.cod(f))}});
  doc["morphisms"] = morphisms;
  json ids = json::object();
  for (ObjId x = 0; x < c.object_count(); ++x) ids[c.object_name(x)] = c.morphism_name(c.identity(x));
  doc["identities"] = ids;
  json comp = json::array();
  if (!c.truncated()) {
    for (MorId f = 0; f < c.morphism_count(); ++f)
      for (MorId g : c.out(c.cod(f)))
        comp.push_back({{"first", c.morphism_name(f)},
                        {"then", c.morphism_name(g)},
                        {"result", c.morphism_name(c.compose(f, g))}});
  }
  doc["composition"] = comp;
  return doc;
}

}  // namespace cattool::cli
