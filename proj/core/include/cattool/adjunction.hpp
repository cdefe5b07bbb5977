#pragma once

// Adjunctions in both presentations (unit/counit and hom-set bijection) and
// the conversions between them. Categories are seen through HomCat, which
// only needs hom-sets enumerable on the finitely many pairs a check visits;
// this lets finite sets of every size serve as a category.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cattool/fincat.hpp"
#include "cattool/functor.hpp"
#include "cattool/report.hpp"

namespace cattool {

// A morphism as a value: {MorId} in a FinCat, the function table in finite sets.
using Arrow = std::vector<std::size_t>;

struct HomCat {
  std::string name;
  std::function<std::size_t(ObjId, ObjId)> hom_size;
  std::function<void(ObjId, ObjId, const std::function<bool(const Arrow&)>&)> for_each_hom;
  std::function<std::size_t(ObjId, ObjId, const Arrow&)> index_of;
  std::function<Arrow(ObjId, ObjId, std::size_t)> arrow_at;
  // f : x -> y then g : y -> z.
  std::function<Arrow(ObjId, ObjId, ObjId, const Arrow&, const Arrow&)> compose;
  std::function<Arrow(ObjId)> identity;
  std::function<std::string(ObjId)> show_object;
  std::function<std::string(ObjId, ObjId, const Arrow&)> show_arrow;
};

using HomCatPtr = std::shared_ptr<const HomCat>;

HomCatPtr hom_cat(const CatPtr& c);
/// Object n is the n-element set.
HomCatPtr finset_hom_cat();

struct HomFunctor {
  std::string name;
  HomCatPtr source;
  HomCatPtr target;
  std::function<ObjId(ObjId)> obj;
  std::function<Arrow(ObjId, ObjId, const Arrow&)> mor;  // f : x -> y gives F x -> F y
};

HomFunctor hom_functor_view(const FunctorData& f, HomCatPtr source, HomCatPtr target);
HomFunctor identity_hom_functor(HomCatPtr c);

struct AdjunctionFrame {
  HomFunctor left;   // F : C -> D
  HomFunctor right;  // G : D -> C
  // Objects quantified over by the checks.
  std::vector<ObjId> c_objects;
  std::vector<ObjId> d_objects;
};

struct AdjunctionUnitCounit {
  AdjunctionFrame frame;
  std::function<Arrow(ObjId)> unit;    // eta_X : X -> G F X
  std::function<Arrow(ObjId)> counit;  // eps_D : F G D -> D
};

// alpha_{X,D} and its inverse for one pair, indexed by hom-set position.
struct HomTables {
  std::vector<std::size_t> alpha;      // Hom_D(F X, D) -> Hom_C(X, G D)
  std::vector<std::size_t> alpha_inv;  // Hom_C(X, G D) -> Hom_D(F X, D)
};

struct AdjunctionHomBijection {
  AdjunctionFrame frame;
  std::function<Arrow(ObjId, ObjId, const Arrow&)> alpha;
  std::function<Arrow(ObjId, ObjId, const Arrow&)> alpha_inv;

  HomTables tables(ObjId x, ObjId d) const;
};

AdjunctionUnitCounit adjunction_from_nat(const FunctorData& f, const FunctorData& g,
                                         const NatTransData& unit, const NatTransData& counit);
// alpha keyed by (X, D) as a table over hom positions; the inverse is computed
// and a non-bijective table raises ConstructionError.
AdjunctionHomBijection adjunction_from_tables(
    const FunctorData& f, const FunctorData& g,
    const std::vector<std::vector<std::vector<std::size_t>>>& alpha);
AdjunctionUnitCounit identity_adjunction(const CatPtr& c);

Report check_unit_counit_naturality(const AdjunctionUnitCounit& adj);
/// F(eta_X);eps_{F X} = id and eta_{G D};G(eps_D) = id, diagrammatic order.
Report check_triangles(const AdjunctionUnitCounit& adj);
/// alpha(g) = eta_X;G(g), alpha_inv(f) = F(f);eps_D.
AdjunctionHomBijection hom_bijection_from_unit_counit(const AdjunctionUnitCounit& adj);
/// eta_X = alpha(id_{F X}), eps_D = alpha_inv(id_{G D}).
AdjunctionUnitCounit unit_counit_from_hom_bijection(const AdjunctionHomBijection& adj);

Report check_hom_bijection(const AdjunctionHomBijection& adj);
/// alpha(F(f);h) = f;alpha(h) and alpha(h;g) = alpha(h);G(g).
Report check_hom_naturality(const AdjunctionHomBijection& adj);
/// hom bijection -> unit/counit -> hom bijection reproduces every table, and
/// the unit and counit survive the opposite trip.
Report check_roundtrip(const AdjunctionHomBijection& adj);
/// Everything above on one adjunction.
Report check_adjunction(const AdjunctionHomBijection& adj);

/// F = - x Y, G = Y -> -, alpha = curry, over sets of size <= n.
AdjunctionHomBijection currying_adjunction(std::size_t y, std::size_t n);
/// Y -> - with functions Y -> D numbered last-entry-most-significant.
HomFunctor reversed_exponential_functor(std::size_t y);

/// Every natural iso F => G on the listed objects, as component lists.
std::vector<std::vector<Arrow>> find_natural_isos(const HomFunctor& f, const HomFunctor& g,
                                                  const std::vector<ObjId>& objects);
/// The two exponential encodings are right adjoint to - x Y; a natural iso
/// between them is found by search.
Report check_right_adjoint_uniqueness(std::size_t y, std::size_t n);

}  // namespace cattool
