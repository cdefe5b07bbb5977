#include "cattool/finset.hpp"

#include <limits>
#include <set>
#include <sstream>

#include "cattool/error.hpp"

namespace cattool {

FinSet::FinSet(std::size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (!labels_.empty()) {
    if (labels_.size() != size_) throw ConstructionError("FinSet: label count does not match size");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw ConstructionError("FinSet: duplicate label");
  }
}

std::string FinSet::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return std::to_string(i);
}

FinFun::FinFun(FinSet dom, FinSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw ConstructionError("FinFun: table length " + std::to_string(table_.size()) +
                            " does not match domain size " + std::to_string(dom_.size()));
  for (std::size_t v : table_)
    if (v >= cod_.size())
      throw ConstructionError("FinFun: entry " + std::to_string(v) + " outside codomain of size " +
                              std::to_string(cod_.size()));
}

FinFun FinFun::identity(const FinSet& x) {
  std::vector<std::size_t> t(x.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return FinFun(x, x, std::move(t));
}

FinFun FinFun::constant(const FinSet& dom, const FinSet& cod, std::size_t value) {
  return FinFun(dom, cod, std::vector<std::size_t>(dom.size(), value));
}

bool FinFun::injective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (std::size_t v : table_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool FinFun::surjective() const {
  std::vector<bool> hit(cod_.size(), false);
  std::size_t count = 0;
  for (std::size_t v : table_)
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  return count == cod_.size();
}

std::string FinFun::to_string() const {
  std::ostringstream out;
  out << dom_.size() << "->" << cod_.size() << "[";
  for (std::size_t i = 0; i < table_.size(); ++i) out << (i ? "," : "") << table_[i];
  out << "]";
  return out.str();
}

FinFun compose(const FinFun& f, const FinFun& g) {
  if (!(f.cod() == g.dom()))
    throw CompositionError("cannot compose " + f.to_string() + " then " + g.to_string() +
                           ": codomain/domain mismatch");
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinFun(f.dom(), g.cod(), std::move(t));
}

std::size_t count_functions(std::size_t dom_size, std::size_t cod_size) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dom_size; ++i) {
    if (cod_size == 0) return 0;
    if (n > std::numeric_limits<std::size_t>::max() / cod_size)
      return std::numeric_limits<std::size_t>::max();
    n *= cod_size;
  }
  return n;
}

void for_each_function(const FinSet& x, const FinSet& y,
                       const std::function<bool(const FinFun&)>& visit) {
  if (x.size() > 0 && y.size() == 0) return;
  std::vector<std::size_t> t(x.size(), 0);
  while (true) {
    if (!visit(FinFun(x, y, t))) return;
    // odometer, last entry fastest
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < y.size()) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (t.empty()) return;
  }
}

std::vector<FinFun> enumerate_functions(const FinSet& x, const FinSet& y) {
  std::vector<FinFun> out;
  std::size_t n = count_functions(x.size(), y.size());
  require_within(static_cast<double>(n), static_cast<double>(search_limit()),
                 "enumerate_functions");
  out.reserve(n);
  for_each_function(x, y, [&](const FinFun& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::size_t function_index(const FinFun& f) {
  std::size_t idx = 0;
  for (std::size_t v : f.table()) idx = idx * f.cod().size() + v;
  return idx;
}

FinFun function_at(const FinSet& x, const FinSet& y, std::size_t index) {
  std::vector<std::size_t> t(x.size(), 0);
  for (std::size_t i = t.size(); i > 0; --i) {
    t[i - 1] = index % y.size();
    index /= y.size();
  }
  return FinFun(x, y, std::move(t));
}

Product::Product(FinSet a, FinSet b) : a_(std::move(a)), b_(std::move(b)) {
  FinSet p(a_.size() * b_.size());
  std::vector<std::size_t> l(p.size()), r(p.size());
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (std::size_t j = 0; j < b_.size(); ++j) {
      l[index(i, j)] = i;
      r[index(i, j)] = j;
    }
  cone_ = ProductCone{p, FinFun(p, a_, std::move(l)), FinFun(p, b_, std::move(r))};
}

FinFun Product::pairing(const FinFun& q1, const FinFun& q2) const {
  if (!(q1.dom() == q2.dom()))
    throw CompositionError("pairing: " + q1.to_string() + " and " + q2.to_string() +
                           " have different domains");
  if (!(q1.cod() == a_) || !(q2.cod() == b_))
    throw CompositionError("pairing: legs do not land in the product factors");
  std::vector<std::size_t> t(q1.dom().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = index(q1(x), q2(x));
  return FinFun(q1.dom(), cone_.obj, std::move(t));
}

Coproduct::Coproduct(FinSet a, FinSet b) : a_(std::move(a)), b_(std::move(b)) {
  FinSet s(a_.size() + b_.size());
  std::vector<std::size_t> l(a_.size()), r(b_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) l[i] = i;
  for (std::size_t j = 0; j < b_.size(); ++j) r[j] = a_.size() + j;
  cocone_ = CoproductCocone{s, FinFun(a_, s, std::move(l)), FinFun(b_, s, std::move(r))};
}

FinFun Coproduct::copairing(const FinFun& f, const FinFun& g) const {
  if (!(f.cod() == g.cod()))
    throw CompositionError("copairing: " + f.to_string() + " and " + g.to_string() +
                           " have different codomains");
  if (!(f.dom() == a_) || !(g.dom() == b_))
    throw CompositionError("copairing: legs do not start at the coproduct summands");
  std::vector<std::size_t> t;
  t.reserve(cocone_.obj.size());
  for (std::size_t i = 0; i < a_.size(); ++i) t.push_back(f(i));
  for (std::size_t j = 0; j < b_.size(); ++j) t.push_back(g(j));
  return FinFun(cocone_.obj, f.cod(), std::move(t));
}

Exponential::Exponential(FinSet base, FinSet exponent)
    : base_(std::move(base)), exponent_(std::move(exponent)) {
  std::size_t n = count_functions(exponent_.size(), base_.size());
  require_within(static_cast<double>(n), static_cast<double>(search_limit()), "exponential");
  obj_ = FinSet(n);
  Product p(obj_, exponent_);
  std::vector<std::size_t> t(p.obj().size());
  for (std::size_t f = 0; f < n; ++f) {
    FinFun fn = cattool::function_at(exponent_, base_, f);
    for (std::size_t y = 0; y < exponent_.size(); ++y) t[p.index(f, y)] = fn(y);
  }
  eval_ = FinFun(p.obj(), base_, std::move(t));
}

std::size_t Exponential::index_of(const FinFun& f) const {
  if (!(f.dom() == exponent_) || !(f.cod() == base_))
    throw ShapeError("exponential: function " + f.to_string() + " has the wrong type");
  return function_index(f);
}

FinFun Exponential::function_at(std::size_t index) const {
  if (index >= obj_.size()) throw LookupError("exponential: index out of range");
  return cattool::function_at(exponent_, base_, index);
}

FinFun Exponential::curry(const FinSet& x, const FinFun& f) const {
  Product p(x, exponent_);
  if (!(f.dom() == p.obj()) || !(f.cod() == base_))
    throw ShapeError("curry: " + f.to_string() + " is not a map X x Y -> Z");
  std::vector<std::size_t> t(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<std::size_t> row(exponent_.size());
    for (std::size_t y = 0; y < exponent_.size(); ++y) row[y] = f(p.index(i, y));
    t[i] = function_index(FinFun(exponent_, base_, std::move(row)));
  }
  return FinFun(x, obj_, std::move(t));
}

FinFun Exponential::uncurry(const FinFun& g) const {
  if (!(g.cod() == obj_)) throw ShapeError("uncurry: codomain is not the exponential");
  Product p(g.dom(), exponent_);
  std::vector<std::size_t> t(p.obj().size());
  for (std::size_t i = 0; i < g.dom().size(); ++i) {
    FinFun row = function_at(g(i));
    for (std::size_t y = 0; y < exponent_.size(); ++y) t[p.index(i, y)] = row(y);
  }
  return FinFun(p.obj(), base_, std::move(t));
}

FinFun product_map(const FinFun& f, const FinFun& g) {
  Product src(f.dom(), g.dom());
  Product dst(f.cod(), g.cod());
  return dst.pairing(compose(src.cone().proj_l, f), compose(src.cone().proj_r, g));
}

FinFun coproduct_map(const FinFun& f, const FinFun& g) {
  Coproduct src(f.dom(), g.dom());
  Coproduct dst(f.cod(), g.cod());
  return src.copairing(compose(f, dst.cocone().inj_l), compose(g, dst.cocone().inj_r));
}

}  // namespace cattool
