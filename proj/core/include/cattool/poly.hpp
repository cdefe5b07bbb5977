#pragma once

// Polynomial endofunctors on sets and their initial algebras as finite
// constructor trees.
//
// Elements of F(X) are Values: a constant is its label atom, an Id position
// holds the X element, Sum is [tag, inner] with tag 0 for the left summand,
// Prod is [left, right]. A term is in(s) = [s] with s in F(terms).

#include <memory>
#include <string>
#include <vector>

#include "cattool/value.hpp"

namespace cattool {

struct PolyF;
using Poly = std::shared_ptr<const PolyF>;

struct PolyF {
  // param marks the A position of a two-argument functor F(A, X).
  enum class Kind { constant, id, param, sum, prod };
  Kind kind = Kind::id;
  std::vector<long> labels;
  Poly left, right;
};

Poly poly_const(std::vector<long> labels);
Poly poly_id();
Poly poly_param();
Poly poly_sum(Poly a, Poly b);
Poly poly_prod(Poly a, Poly b);

bool same_shape(const Poly& a, const Poly& b);
std::string to_string(const Poly& f);
bool has_param(const Poly& f);
/// Replaces the A position by the constant label set.
Poly instantiate(const Poly& f2, const std::vector<long>& labels);

/// Integer labels of the expression functor.
inline constexpr long kExpLabelMin = -8;
inline constexpr long kExpLabelMax = 8;
std::vector<long> label_range(long lo, long hi);

Poly poly_nat();                                   // 1 + X
Poly poly_bool();                                  // 1 + 1
Poly poly_list(std::vector<long> labels);          // 1 + A x X
Poly poly_btree(std::vector<long> labels);         // A + X x X
Poly poly_exp(std::vector<long> labels);           // Z + (X x X + X)
Poly poly_coproduct(std::size_t x, std::size_t y); // X + Y as constants
Poly poly_list2();                                 // 1 + A x X, A a parameter
Poly poly_btree2();                                // A + X x X, A a parameter
/// "nat", "bool", "list", "btree", "exp" with default labels.
Poly poly_builtin(const std::string& name);

/// F applied to the listed elements, in a fixed order.
std::vector<Value> poly_values(const Poly& f, const std::vector<Value>& elems);
double poly_count(const Poly& f, double n);
Value poly_map(const Poly& f, const Arrow1& g, const Value& v);
/// Two-argument action: a on the A position, g on X.
Value poly_bimap(const Poly& f2, const Arrow1& a, const Arrow1& g, const Value& v);

Value in(const Value& s);
const Value& out(const Value& t);

// Terms to a depth bound, shortest first. Nullary constructors have depth 1.
// shapes[i] is the top layer with children replaced by their term indices.
struct TermTable {
  Poly functor;
  std::vector<Value> shapes;
  std::vector<std::size_t> depth;

  std::size_t size() const { return shapes.size(); }
  Value term(std::size_t i) const;
};

TermTable enumerate_terms(const Poly& f, std::size_t depth);
std::size_t term_depth(const Poly& f, const Value& t);
std::string show_term(const Poly& f, const Value& t);

// Literal syntax.
Value nat_term(std::size_t n);
std::size_t nat_from_term(const Value& t);
Value list_term(const std::vector<long>& xs);
std::vector<long> list_from_term(const Value& t);
Value bool_term(bool b);
// Expression terms: (int n), (plus a b), (squared a).
Value exp_int(long n);
Value exp_plus(const Value& a, const Value& b);
Value exp_squared(const Value& a);
Value btree_leaf(long a);
Value btree_node(const Value& l, const Value& r);

/// "[1,0,1]", "s(s(z))" or a decimal, "(plus (int 3) (squared (int 2)))",
/// "true"/"false", btree "(node (leaf 1) (leaf 0))". Throws ShapeError.
Value parse_term(const std::string& datatype, const std::string& text);
std::string render_term(const std::string& datatype, const Value& t);

}  // namespace cattool
