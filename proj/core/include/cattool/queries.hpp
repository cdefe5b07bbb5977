#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cattool/fincat.hpp"
#include "cattool/report.hpp"

namespace cattool {

struct MorphismClassification {
  bool is_mono = false;
  bool is_epi = false;
  bool is_iso = false;
  std::optional<MorId> inverse;
  std::vector<MorId> retractions_of;  // r with f then r = id
  std::vector<MorId> sections_of;     // s with s then f = id
  // Counterexamples: g1 != g2 with g1;f == g2;f, resp. h1 != h2 with f;h1 == f;h2.
  std::optional<std::pair<MorId, MorId>> mono_witness;
  std::optional<std::pair<MorId, MorId>> epi_witness;
};

MorphismClassification classify(const FinCat& c, MorId f);

enum class UniversalKind { initial, terminal };

struct UniversalWitness {
  std::vector<ObjId> objects;
  // mediating[i][y]: the unique morphism objects[i] -> y (initial) or y -> objects[i] (terminal).
  std::vector<std::vector<MorId>> mediating;
  // canonical_isos[i][j]: the unique morphism objects[i] -> objects[j].
  std::vector<std::vector<MorId>> canonical_isos;
};

UniversalWitness find_universal(const FinCat& c, UniversalKind kind);

/// Canonical isos are inverse pairs, and transporting along every iso out of
/// a qualifying object lands on a qualifying object.
Report check_universal_uniqueness(const FinCat& c, UniversalKind kind, const UniversalWitness& w);

enum class BinaryKind { product, coproduct };

// A cone (apex, left: apex -> A, right: apex -> B), or for coproducts a
// cocone with left: A -> apex and right: B -> apex.
struct Cone {
  ObjId apex = 0;
  MorId left = 0;
  MorId right = 0;
  friend bool operator==(const Cone& a, const Cone& b) {
    return a.apex == b.apex && a.left == b.left && a.right == b.right;
  }
};

// The category of (co)cones over A and B: a product is a terminal object of
// it, a coproduct an initial one. Hom-sets are computed on demand.
class ConeCategory {
 public:
  ConeCategory(const FinCat& c, BinaryKind kind, ObjId a, ObjId b);

  const FinCat& base() const { return *c_; }
  BinaryKind kind() const { return kind_; }
  const std::vector<Cone>& cones() const { return cones_; }
  /// Underlying morphisms of C that are cone morphisms cones()[i] -> cones()[j].
  std::vector<MorId> hom(std::size_t i, std::size_t j) const;
  bool is_cone_morphism(MorId h, const Cone& from, const Cone& to) const;
  std::string describe(const Cone& k) const;

  /// Explicit FinCat of cones, for small instances.
  FinCat materialize() const;

 private:
  const FinCat* c_;
  BinaryKind kind_;
  std::vector<Cone> cones_;
};

struct BinaryWitness {
  std::vector<Cone> cones;     // the universal ones
  std::vector<Cone> tested;    // every cone in the cone category
  // mediating[i][j]: unique cone morphism between tested[j] and cones[i].
  std::vector<std::vector<MorId>> mediating;
  std::vector<std::vector<MorId>> canonical_isos;
};

BinaryWitness find_binary(const FinCat& c, BinaryKind kind, ObjId a, ObjId b);
Report check_binary_uniqueness(const FinCat& c, BinaryKind kind, ObjId a, ObjId b,
                               const BinaryWitness& w);

// First universal product cone per pair, computed on first use.
class ChosenProducts {
 public:
  explicit ChosenProducts(const FinCat& c) : c_(&c) {}

  const FinCat& category() const { return *c_; }
  /// Throws LookupError when A x B does not exist in the category.
  const Cone& product(ObjId a, ObjId b) const;
  /// <q1, q2> into the chosen product.
  MorId pairing(ObjId a, ObjId b, MorId q1, MorId q2) const;

 private:
  const FinCat* c_;
  mutable std::map<std::pair<ObjId, ObjId>, std::optional<Cone>> cache_;
};

/// f x g = <pl;f, pr;g>.
MorId product_of_morphisms(const ChosenProducts& p, MorId f, MorId g);
/// <pr, pl> : A x B -> B x A.
MorId swap_iso(const ChosenProducts& p, ObjId a, ObjId b);

/// Preorder antisymmetry read categorically: no non-identity endomorphisms
/// and no pair of distinct objects with arrows both ways.
Report check_antisymmetry(const FinCat& c);

/// For categories with concrete data: mono iff injective, epi iff surjective,
/// iso iff bijective, sections injective, retractions surjective.
Report check_set_characterizations(const FinCat& c);

/// Section/retraction facts valid in every category: sections are mono,
/// retractions are epi, isos are mono and epi.
Report check_classification_laws(const FinCat& c);

}  // namespace cattool
