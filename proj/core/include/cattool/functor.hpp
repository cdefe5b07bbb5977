#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cattool/constructions.hpp"
#include "cattool/fincat.hpp"
#include "cattool/report.hpp"

namespace cattool {

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

struct FunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId operator()(ObjId x) const { return obj_map.at(x); }
  MorId map(MorId f) const { return mor_map.at(f); }
};

struct NatTransData {
  FunctorData source_functor;
  FunctorData target_functor;
  std::vector<MorId> components;  // components[x] : F x -> G x in the target category
};

// mor_map(f) : F(cod f) -> F(dom f).
struct ContravariantFunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;
};

FunctorData identity_functor(const CatPtr& c);
/// F then G.
FunctorData compose_functors(const FunctorData& f, const FunctorData& g);
bool same_functor(const FunctorData& f, const FunctorData& g);

/// Typing first, then F(id) = id and F(f;g) = F(f);F(g).
Report check_functor(const FunctorData& f);

NatTransData identity_nat(const FunctorData& f);
/// Components F x -> G x, then for every f : x -> y, alpha_x;G(f) = F(f);alpha_y.
Report check_naturality(const NatTransData& a);
bool is_natural_iso(const NatTransData& a);

/// alpha then beta, componentwise.
NatTransData vcompose(const NatTransData& alpha, const NatTransData& beta);
// For alpha : F => G over C -> D and beta : H => K over D -> E, the Godement
// product F;H => G;K with component H(alpha_x) ; beta_{G x}.
NatTransData hcompose(const NatTransData& alpha, const NatTransData& beta);
/// The other formula, beta_{F x} ; K(alpha_x).
NatTransData hcompose_alt(const NatTransData& alpha, const NatTransData& beta);

/// Every functor C -> D passing check_functor, in lexicographic order of (obj_map, mor_map).
std::vector<FunctorData> enumerate_functors(const CatPtr& c, const CatPtr& d);
/// Every natural transformation F => G.
std::vector<NatTransData> enumerate_nat(const FunctorData& f, const FunctorData& g);

// Functor category [C, D]: objects "F<i>", morphisms named "F<i>=>F<j>#<k>".
struct FunctorCategory {
  FinCat category;
  std::vector<FunctorData> functors;
  std::vector<NatTransData> transformations;  // indexed by morphism id
};

FunctorCategory functor_category(const CatPtr& c, const CatPtr& d);

struct EquivalenceData {
  FunctorData inverse;   // G : D -> C
  NatTransData unit;     // Id_C => F;G
  NatTransData counit;   // G;F => Id_D
};

struct FunctorClassification {
  bool injective_on_objects = false;
  bool surjective_on_objects = false;
  bool full = false;
  bool faithful = false;
  bool essentially_surjective = false;
  bool is_isomorphism = false;
  bool is_equivalence = false;
  std::vector<Witness> witnesses;
  std::optional<EquivalenceData> equivalence;
  Report equivalence_report{"equivalence"};
};

FunctorClassification classify_functor(const FunctorData& f);

/// Forgets labels: finset(n) -> finord(n), sending a carrier to [size] and a
/// function to the same table.
FunctorData finset_to_finord(std::size_t n);

Report check_contravariant(const ContravariantFunctorData& f);
/// The same data as a covariant functor out of opposite(source).
FunctorData to_covariant(const ContravariantFunctorData& f);
ContravariantFunctorData from_covariant_on_opposite(const FunctorData& f, const CatPtr& original);

/// f^{-1}(B) = { x | f(x) in B }. Subsets are membership vectors.
std::vector<bool> powerset_inverse_image(const FinFun& f, const std::vector<bool>& b);
/// (f;g)^{-1} = g^{-1} then f^{-1}, and id^{-1} = id, over all sizes <= nmax.
Report check_powerset_contravariant(std::size_t nmax);

// A functor out of the one-object category of a monoid into a concrete
// category is a monoid action on F(*): mu(m, x) = F(m)(x).
/// Diagrammatic composition makes it a right action: mu(m*n, x) = mu(n, mu(m, x)).
Report check_mset_action(const FunctorData& f, const FiniteMonoid& m);

}  // namespace cattool
