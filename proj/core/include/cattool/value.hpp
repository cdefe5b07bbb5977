#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace cattool {

// Dynamic value: an atom (element of a base set), a sequence, or a function.
// Elements of X are atoms 0..|X|-1; T X is built from these per instance.
struct Value {
  enum class Kind { atom, seq, fn };
  using Fn = std::function<Value(const Value&)>;

  Kind kind = Kind::atom;
  long atom = 0;
  std::vector<Value> items;
  std::shared_ptr<const Fn> fn;

  static Value of(long a);
  static Value seq(std::vector<Value> xs);
  static Value lambda(Fn f);

  Value operator()(const Value& arg) const;
};

/// Structural comparison; functions are not comparable (UnsupportedError).
bool operator==(const Value& a, const Value& b);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }
bool operator<(const Value& a, const Value& b);
std::string to_string(const Value& v);

using Arrow1 = std::function<Value(const Value&)>;

}  // namespace cattool
