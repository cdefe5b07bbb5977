#include "cattool/value.hpp"

#include <algorithm>

#include "cattool/error.hpp"

namespace cattool {

Value Value::of(long a) {
  Value v;
  v.atom = a;
  return v;
}

Value Value::seq(std::vector<Value> xs) {
  Value v;
  v.kind = Kind::seq;
  v.items = std::move(xs);
  return v;
}

Value Value::lambda(Fn f) {
  Value v;
  v.kind = Kind::fn;
  v.fn = std::make_shared<const Fn>(std::move(f));
  return v;
}

Value Value::operator()(const Value& arg) const {
  if (kind != Kind::fn) throw ShapeError("value " + to_string(*this) + " is not a function");
  return (*fn)(arg);
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind == Value::Kind::fn || b.kind == Value::Kind::fn)
    throw UnsupportedError("functions are compared through their tabulation only");
  if (a.kind != b.kind) return false;
  if (a.kind == Value::Kind::atom) return a.atom == b.atom;
  return a.items == b.items;
}

bool operator<(const Value& a, const Value& b) {
  if (a.kind == Value::Kind::fn || b.kind == Value::Kind::fn)
    throw UnsupportedError("functions are not ordered");
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.kind == Value::Kind::atom) return a.atom < b.atom;
  return std::lexicographical_compare(a.items.begin(), a.items.end(), b.items.begin(), b.items.end());
}

std::string to_string(const Value& v) {
  switch (v.kind) {
    case Value::Kind::atom:
      return std::to_string(v.atom);
    case Value::Kind::fn:
      return "<fn>";
    case Value::Kind::seq:
      break;
  }
  std::string s = "[";
  for (std::size_t i = 0; i < v.items.size(); ++i) s += (i ? "," : "") + to_string(v.items[i]);
  return s + "]";
}

}  // namespace cattool
