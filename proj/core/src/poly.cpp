#include "cattool/poly.hpp"

#include <cctype>
#include <functional>

#include "cattool/error.hpp"

namespace cattool {

namespace {

Poly make(PolyF::Kind k, std::vector<long> labels = {}, Poly l = nullptr, Poly r = nullptr) {
  auto p = std::make_shared<PolyF>();
  p->kind = k;
  p->labels = std::move(labels);
  p->left = std::move(l);
  p->right = std::move(r);
  return p;
}

Value tagged(long tag, Value inner) { return Value::seq({Value::of(tag), std::move(inner)}); }

}  // namespace

Poly poly_const(std::vector<long> labels) { return make(PolyF::Kind::constant, std::move(labels)); }
Poly poly_id() { return make(PolyF::Kind::id); }
Poly poly_param() { return make(PolyF::Kind::param); }
Poly poly_sum(Poly a, Poly b) { return make(PolyF::Kind::sum, {}, std::move(a), std::move(b)); }
Poly poly_prod(Poly a, Poly b) { return make(PolyF::Kind::prod, {}, std::move(a), std::move(b)); }

bool same_shape(const Poly& a, const Poly& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case PolyF::Kind::constant:
      return a->labels == b->labels;
    case PolyF::Kind::id:
    case PolyF::Kind::param:
      return true;
    default:
      return same_shape(a->left, b->left) && same_shape(a->right, b->right);
  }
}

std::string to_string(const Poly& f) {
  switch (f->kind) {
    case PolyF::Kind::constant: {
      if (f->labels.size() == 1) return "1";
      std::string s = "{";
      for (std::size_t i = 0; i < f->labels.size(); ++i) s += (i ? "," : "") + std::to_string(f->labels[i]);
      return s + "}";
    }
    case PolyF::Kind::id:
      return "X";
    case PolyF::Kind::param:
      return "A";
    case PolyF::Kind::sum:
      return "(" + to_string(f->left) + " + " + to_string(f->right) + ")";
    case PolyF::Kind::prod:
      return "(" + to_string(f->left) + " x " + to_string(f->right) + ")";
  }
  return "?";
}

bool has_param(const Poly& f) {
  if (f->kind == PolyF::Kind::param) return true;
  if (f->kind == PolyF::Kind::sum || f->kind == PolyF::Kind::prod)
    return has_param(f->left) || has_param(f->right);
  return false;
}

Poly instantiate(const Poly& f2, const std::vector<long>& labels) {
  switch (f2->kind) {
    case PolyF::Kind::param:
      return poly_const(labels);
    case PolyF::Kind::sum:
      return poly_sum(instantiate(f2->left, labels), instantiate(f2->right, labels));
    case PolyF::Kind::prod:
      return poly_prod(instantiate(f2->left, labels), instantiate(f2->right, labels));
    default:
      return f2;
  }
}

std::vector<long> label_range(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Poly poly_nat() { return poly_sum(poly_const({0}), poly_id()); }
Poly poly_bool() { return poly_sum(poly_const({0}), poly_const({0})); }
Poly poly_list(std::vector<long> labels) { return instantiate(poly_list2(), labels); }
Poly poly_btree(std::vector<long> labels) { return instantiate(poly_btree2(), labels); }
Poly poly_exp(std::vector<long> labels) {
  return poly_sum(poly_const(std::move(labels)), poly_sum(poly_prod(poly_id(), poly_id()), poly_id()));
}
Poly poly_coproduct(std::size_t x, std::size_t y) {
  return poly_sum(poly_const(label_range(0, static_cast<long>(x) - 1)),
                  poly_const(label_range(0, static_cast<long>(y) - 1)));
}
Poly poly_list2() { return poly_sum(poly_const({0}), poly_prod(poly_param(), poly_id())); }
Poly poly_btree2() { return poly_sum(poly_param(), poly_prod(poly_id(), poly_id())); }

Poly poly_builtin(const std::string& name) {
  if (name == "nat") return poly_nat();
  if (name == "bool") return poly_bool();
  if (name == "list") return poly_list({0, 1});
  if (name == "btree") return poly_btree({0, 1});
  if (name == "exp") return poly_exp(label_range(kExpLabelMin, kExpLabelMax));
  throw LookupError("unknown datatype '" + name + "'");
}

std::vector<Value> poly_values(const Poly& f, const std::vector<Value>& elems) {
  std::vector<Value> out;
  switch (f->kind) {
    case PolyF::Kind::constant:
      for (long l : f->labels) out.push_back(Value::of(l));
      break;
    case PolyF::Kind::id:
      out = elems;
      break;
    case PolyF::Kind::param:
      throw ShapeError("functor " + to_string(f) + " still has a parameter");
    case PolyF::Kind::sum:
      for (Value& v : poly_values(f->left, elems)) out.push_back(tagged(0, std::move(v)));
      for (Value& v : poly_values(f->right, elems)) out.push_back(tagged(1, std::move(v)));
      break;
    case PolyF::Kind::prod: {
      auto ls = poly_values(f->left, elems);
      auto rs = poly_values(f->right, elems);
      for (const Value& l : ls)
        for (const Value& r : rs) out.push_back(Value::seq({l, r}));
      break;
    }
  }
  return out;
}

double poly_count(const Poly& f, double n) {
  switch (f->kind) {
    case PolyF::Kind::constant:
      return static_cast<double>(f->labels.size());
    case PolyF::Kind::id:
      return n;
    case PolyF::Kind::param:
      throw ShapeError("functor " + to_string(f) + " still has a parameter");
    case PolyF::Kind::sum:
      return poly_count(f->left, n) + poly_count(f->right, n);
    case PolyF::Kind::prod:
      return poly_count(f->left, n) * poly_count(f->right, n);
  }
  return 0;
}

Value poly_bimap(const Poly& f, const Arrow1& a, const Arrow1& g, const Value& v) {
  switch (f->kind) {
    case PolyF::Kind::constant:
      return v;
    case PolyF::Kind::id:
      return g(v);
    case PolyF::Kind::param:
      return a(v);
    case PolyF::Kind::sum: {
      if (v.kind != Value::Kind::seq || v.items.size() != 2)
        throw ShapeError("value " + to_string(v) + " does not fit " + to_string(f));
      const Poly& side = v.items[0].atom == 0 ? f->left : f->right;
      return tagged(v.items[0].atom, poly_bimap(side, a, g, v.items[1]));
    }
    case PolyF::Kind::prod:
      if (v.kind != Value::Kind::seq || v.items.size() != 2)
        throw ShapeError("value " + to_string(v) + " does not fit " + to_string(f));
      return Value::seq({poly_bimap(f->left, a, g, v.items[0]), poly_bimap(f->right, a, g, v.items[1])});
  }
  return v;
}

Value poly_map(const Poly& f, const Arrow1& g, const Value& v) {
  static const Arrow1 keep = [](const Value& x) { return x; };
  return poly_bimap(f, keep, g, v);
}

Value in(const Value& s) { return Value::seq({s}); }

const Value& out(const Value& t) {
  if (t.kind != Value::Kind::seq || t.items.size() != 1) throw ShapeError("not a term: " + to_string(t));
  return t.items[0];
}

Value TermTable::term(std::size_t i) const {
  return in(poly_map(functor, [this](const Value& c) { return term(static_cast<std::size_t>(c.atom)); },
                     shapes.at(i)));
}

TermTable enumerate_terms(const Poly& f, std::size_t depth) {
  // Count first: c_d = |F(c_{d-1})|.
  double count = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    count = poly_count(f, count);
    require_within(count, static_cast<double>(search_limit()), "term enumeration");
  }
  TermTable t;
  t.functor = f;
  std::size_t prev = 0;  // terms of depth < d occupy [0, prev)
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Value> children;
    for (std::size_t i = 0; i < prev; ++i) children.push_back(Value::of(static_cast<long>(i)));
    const std::size_t before = t.shapes.size();
    for (Value& s : poly_values(f, children)) {
      // Keep only shapes of depth exactly d; shallower ones are already listed.
      std::size_t deepest = 0;
      bool any = false;
      poly_map(f, [&](const Value& c) {
        any = true;
        deepest = std::max(deepest, t.depth[static_cast<std::size_t>(c.atom)]);
        return c;
      }, s);
      const std::size_t ds = any ? deepest + 1 : 1;
      if (ds == d) {
        t.shapes.push_back(std::move(s));
        t.depth.push_back(d);
      }
    }
    prev = t.shapes.size();
    if (prev == before && d > 1) break;
  }
  return t;
}

std::size_t term_depth(const Poly& f, const Value& t) {
  std::size_t deepest = 0;
  poly_map(f, [&](const Value& c) {
    deepest = std::max(deepest, term_depth(f, c));
    return c;
  }, out(t));
  return deepest + 1;
}

std::string show_term(const Poly& f, const Value& t) {
  std::function<std::string(const Poly&, const Value&)> layer = [&](const Poly& g, const Value& v) -> std::string {
    switch (g->kind) {
      case PolyF::Kind::constant:
      case PolyF::Kind::param:
        return std::to_string(v.atom);
      case PolyF::Kind::id:
        return show_term(f, v);
      case PolyF::Kind::sum:
        return (v.items[0].atom == 0 ? "inl " : "inr ") +
               layer(v.items[0].atom == 0 ? g->left : g->right, v.items[1]);
      case PolyF::Kind::prod:
        return "(" + layer(g->left, v.items[0]) + ", " + layer(g->right, v.items[1]) + ")";
    }
    return "?";
  };
  return "in(" + layer(f, out(t)) + ")";
}

Value nat_term(std::size_t n) {
  Value t = in(tagged(0, Value::of(0)));
  for (std::size_t i = 0; i < n; ++i) t = in(tagged(1, t));
  return t;
}

std::size_t nat_from_term(const Value& t) {
  std::size_t n = 0;
  const Value* cur = &t;
  while (out(*cur).items.at(0).atom == 1) {
    ++n;
    cur = &out(*cur).items.at(1);
  }
  return n;
}

Value list_term(const std::vector<long>& xs) {
  Value t = in(tagged(0, Value::of(0)));
  for (std::size_t i = xs.size(); i > 0; --i) t = in(tagged(1, Value::seq({Value::of(xs[i - 1]), t})));
  return t;
}

std::vector<long> list_from_term(const Value& t) {
  std::vector<long> xs;
  const Value* cur = &t;
  while (out(*cur).items.at(0).atom == 1) {
    const Value& cell = out(*cur).items.at(1);
    xs.push_back(cell.items.at(0).atom);
    cur = &cell.items.at(1);
  }
  return xs;
}

Value bool_term(bool b) { return in(tagged(b ? 0 : 1, Value::of(0))); }

Value exp_int(long n) { return in(tagged(0, Value::of(n))); }
Value exp_plus(const Value& a, const Value& b) { return in(tagged(1, tagged(0, Value::seq({a, b})))); }
Value exp_squared(const Value& a) { return in(tagged(1, tagged(1, a))); }
Value btree_leaf(long a) { return in(tagged(0, Value::of(a))); }
Value btree_node(const Value& l, const Value& r) { return in(tagged(1, Value::seq({l, r}))); }

namespace {

struct SexpParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ShapeError("term literal: " + what + " at offset " + std::to_string(pos) + " in '" + s + "'");
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string word() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '-')) ++pos;
    if (start == pos) fail("expected a word");
    return s.substr(start, pos - start);
  }
  long number() {
    std::string w = word();
    try {
      std::size_t used = 0;
      long v = std::stol(w, &used);
      if (used != w.size()) fail("bad number '" + w + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad number '" + w + "'");
    }
  }
  void done() {
    skip();
    if (pos != s.size()) fail("trailing input");
  }
};

Value parse_exp(SexpParser& p) {
  if (!p.eat('(')) p.fail("expected '('");
  std::string head = p.word();
  Value v;
  if (head == "int") {
    v = exp_int(p.number());
  } else if (head == "plus") {
    Value a = parse_exp(p);
    Value b = parse_exp(p);
    v = exp_plus(a, b);
  } else if (head == "squared") {
    v = exp_squared(parse_exp(p));
  } else {
    p.fail("unknown constructor '" + head + "'");
  }
  if (!p.eat(')')) p.fail("expected ')'");
  return v;
}

Value parse_btree(SexpParser& p) {
  if (!p.eat('(')) p.fail("expected '('");
  std::string head = p.word();
  Value v;
  if (head == "leaf") {
    v = btree_leaf(p.number());
  } else if (head == "node") {
    Value a = parse_btree(p);
    Value b = parse_btree(p);
    v = btree_node(a, b);
  } else {
    p.fail("unknown constructor '" + head + "'");
  }
  if (!p.eat(')')) p.fail("expected ')'");
  return v;
}

Value parse_nat(SexpParser& p) {
  p.skip();
  if (p.pos < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.pos]))) {
    long n = p.number();
    if (n < 0) p.fail("negative natural");
    return nat_term(static_cast<std::size_t>(n));
  }
  std::string w = p.word();
  if (w == "z") return nat_term(0);
  if (w != "s" || !p.eat('(')) p.fail("expected z or s(...)");
  Value inner = parse_nat(p);
  if (!p.eat(')')) p.fail("expected ')'");
  return in(tagged(1, inner));
}

}  // namespace

Value parse_term(const std::string& datatype, const std::string& text) {
  SexpParser p{text};
  Value v;
  if (datatype == "list") {
    if (!p.eat('[')) p.fail("expected '['");
    std::vector<long> xs;
    if (!p.eat(']')) {
      do xs.push_back(p.number());
      while (p.eat(','));
      if (!p.eat(']')) p.fail("expected ']'");
    }
    v = list_term(xs);
  } else if (datatype == "nat") {
    v = parse_nat(p);
  } else if (datatype == "exp") {
    v = parse_exp(p);
  } else if (datatype == "btree") {
    v = parse_btree(p);
  } else if (datatype == "bool") {
    std::string w = p.word();
    if (w != "true" && w != "false") p.fail("expected true or false");
    v = bool_term(w == "true");
  } else {
    throw ShapeError("unknown datatype '" + datatype + "'");
  }
  p.done();
  return v;
}

std::string render_term(const std::string& datatype, const Value& t) {
  if (datatype == "list") {
    std::string s = "[";
    auto xs = list_from_term(t);
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "]";
  }
  if (datatype == "nat") {
    std::size_t n = nat_from_term(t);
    std::string r;
    for (std::size_t i = 0; i < n; ++i) r += "s(";
    return r + "z" + std::string(n, ')');
  }
  if (datatype == "bool") return out(t).items.at(0).atom == 0 ? "true" : "false";
  if (datatype == "exp") {
    const Value& s = out(t);
    if (s.items[0].atom == 0) return "(int " + std::to_string(s.items[1].atom) + ")";
    const Value& r = s.items[1];
    if (r.items[0].atom == 0)
      return "(plus " + render_term("exp", r.items[1].items[0]) + " " + render_term("exp", r.items[1].items[1]) + ")";
    return "(squared " + render_term("exp", r.items[1]) + ")";
  }
  if (datatype == "btree") {
    const Value& s = out(t);
    if (s.items[0].atom == 0) return "(leaf " + std::to_string(s.items[1].atom) + ")";
    return "(node " + render_term("btree", s.items[1].items[0]) + " " + render_term("btree", s.items[1].items[1]) + ")";
  }
  throw ShapeError("unknown datatype '" + datatype + "'");
}

}  // namespace cattool
