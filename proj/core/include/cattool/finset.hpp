#pragma once

// Canonical finite sets {0, ..., n-1} and functions between them given by
// explicit value tables. This is the desk-scale stand-in for Set that the
// rest of the library quantifies over.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cattool {

class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::size_t size) : size_(size) {}
  // Labels are presentation only; they must be distinct and match the size.
  FinSet(std::size_t size, std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;

  // Equality ignores labels.
  friend bool operator==(const FinSet& a, const FinSet& b) { return a.size_ == b.size_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::string> labels_;
};

class FinFun {
 public:
  FinFun() = default;
  FinFun(FinSet dom, FinSet cod, std::vector<std::size_t> table);

  static FinFun identity(const FinSet& x);
  static FinFun constant(const FinSet& dom, const FinSet& cod, std::size_t value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_.at(x); }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  std::string to_string() const;

  friend bool operator==(const FinFun& a, const FinFun& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> table_;
};

/// Diagrammatic composition: f then g. Throws CompositionError on a type mismatch.
FinFun compose(const FinFun& f, const FinFun& g);

/// Classical order, g after f. Defined through compose().
inline FinFun after(const FinFun& g, const FinFun& f) { return compose(f, g); }

/// |Y|^|X|, saturating at SIZE_MAX.
std::size_t count_functions(std::size_t dom_size, std::size_t cod_size);

/// All functions X -> Y in lexicographic table order (first entry most significant).
std::vector<FinFun> enumerate_functions(const FinSet& x, const FinSet& y);

/// Visits the same sequence as enumerate_functions without materializing it.
/// The callback returns false to stop early.
void for_each_function(const FinSet& x, const FinSet& y,
                       const std::function<bool(const FinFun&)>& visit);

// Position of f in enumerate_functions(f.dom(), f.cod()).
std::size_t function_index(const FinFun& f);
FinFun function_at(const FinSet& x, const FinSet& y, std::size_t index);

struct ProductCone {
  FinSet obj;
  FinFun proj_l;
  FinFun proj_r;
};

struct CoproductCocone {
  FinSet obj;
  FinFun inj_l;
  FinFun inj_r;
};

// A x B with the pair (i, j) stored at i*|B| + j.
class Product {
 public:
  Product(FinSet a, FinSet b);

  const ProductCone& cone() const { return cone_; }
  const FinSet& obj() const { return cone_.obj; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * b_.size() + j; }

  /// The mediating map <q1, q2>.
  FinFun pairing(const FinFun& q1, const FinFun& q2) const;

 private:
  FinSet a_;
  FinSet b_;
  ProductCone cone_;
};

// A + B with A at 0..|A|-1 and B at |A|..|A|+|B|-1.
class Coproduct {
 public:
  Coproduct(FinSet a, FinSet b);

  const CoproductCocone& cocone() const { return cocone_; }
  const FinSet& obj() const { return cocone_.obj; }

  /// The mediating map [f, g].
  FinFun copairing(const FinFun& f, const FinFun& g) const;

 private:
  FinSet a_;
  FinSet b_;
  CoproductCocone cocone_;
};

// Z^Y: the set of all functions Y -> Z, indexed in enumerate_functions order.
class Exponential {
 public:
  Exponential(FinSet base, FinSet exponent);

  const FinSet& obj() const { return obj_; }
  const FinSet& base() const { return base_; }
  const FinSet& exponent() const { return exponent_; }

  /// eval : Z^Y x Y -> Z, (f, y) |-> f(y).
  const FinFun& eval() const { return eval_; }

  std::size_t index_of(const FinFun& f) const;
  FinFun function_at(std::size_t index) const;

  /// Transpose of f : X x Y -> Z into X -> Z^Y.
  FinFun curry(const FinSet& x, const FinFun& f) const;
  /// Inverse of curry: g : X -> Z^Y becomes X x Y -> Z.
  FinFun uncurry(const FinFun& g) const;

 private:
  FinSet base_;
  FinSet exponent_;
  FinSet obj_;
  FinFun eval_;
};

/// f x g : A x B -> C x D, (a, b) |-> (f a, g b).
FinFun product_map(const FinFun& f, const FinFun& g);
/// f + g : A + B -> C + D.
FinFun coproduct_map(const FinFun& f, const FinFun& g);

}  // namespace cattool
