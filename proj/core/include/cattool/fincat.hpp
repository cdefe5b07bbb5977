#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cattool/finset.hpp"
#include "cattool/report.hpp"

namespace cattool {

using ObjId = std::size_t;
using MorId = std::size_t;

struct Morphism {
  std::string name;
  ObjId dom = 0;
  ObjId cod = 0;
};

// Underlying sets and functions for categories whose objects are finite
// sets with structure (the universe families). Indexed like the category.
struct Concrete {
  std::vector<FinSet> carriers;
  std::vector<FinFun> functions;
};

// A fully materialized small category. Composition is diagrammatic:
// compose(f, g) is "f then g" and needs cod(f) == dom(g).
class FinCat {
 public:
  class Builder;

  FinCat() = default;

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::string& object_name(ObjId x) const { return objects_.at(x); }
  const Morphism& morphism(MorId f) const { return morphisms_.at(f); }
  const std::string& morphism_name(MorId f) const { return morphisms_.at(f).name; }
  ObjId dom(MorId f) const { return morphisms_.at(f).dom; }
  ObjId cod(MorId f) const { return morphisms_.at(f).cod; }
  MorId identity(ObjId x) const { return identity_.at(x); }
  bool is_identity(MorId f) const { return identity_.at(dom(f)) == f; }

  /// f then g. Throws CompositionError when cod(f) != dom(g).
  MorId compose(MorId f, MorId g) const;

  const std::vector<MorId>& hom(ObjId x, ObjId y) const;
  /// Every morphism with domain x, in id order.
  const std::vector<MorId>& out(ObjId x) const { return out_.at(x); }
  // Raw table access for tight loops: comp_row(f)[out_position(g)] == compose(f, g).
  const MorId* comp_row(MorId f) const { return comp_.data() + comp_offset_[f]; }
  std::size_t out_position(MorId g) const { return out_pos_[g]; }

  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<MorId> find_morphism(const std::string& name) const;
  ObjId object_id(const std::string& name) const;
  MorId morphism_id(const std::string& name) const;

  // A truncated category only enumerates hom-sets (graph categories with
  // cycles cut at a path length). Composition is not closed, so law checks
  // and queries refuse it.
  bool truncated() const { return truncated_; }
  void require_complete(const std::string& what) const;

  const std::optional<Concrete>& concrete() const { return concrete_; }
  const std::string& family() const { return family_; }

  /// Display form "name : dom -> cod".
  std::string describe(MorId f) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identity_;
  std::vector<std::vector<MorId>> out_;
  std::vector<std::size_t> out_pos_;
  // hom_[x * |Ob| + y]
  std::vector<std::vector<MorId>> hom_;
  // comp_[comp_offset_[f] + out_pos_[g]] for dom(g) == cod(f); npos marks a
  // gap in a truncated category.
  std::vector<MorId> comp_;
  std::vector<std::size_t> comp_offset_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
  bool truncated_ = false;
  std::optional<Concrete> concrete_;
  std::string family_;
};

class FinCat::Builder {
 public:
  static constexpr MorId npos = static_cast<MorId>(-1);
  using Rule = std::function<std::optional<MorId>(MorId, MorId)>;

  Builder() = default;
  // Starts from an existing category, e.g. to perturb one table entry.
  explicit Builder(const FinCat& c);

  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId dom, ObjId cod);
  void set_identity(ObjId x, MorId f);
  void set_composite(MorId f, MorId g, MorId result);
  // Fills every composable pair not set explicitly.
  void set_rule(Rule rule) { rule_ = std::move(rule); }
  void set_concrete(Concrete c) { concrete_ = std::move(c); }
  void set_family(std::string f) { family_ = std::move(f); }
  void mark_truncated() { truncated_ = true; }

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  /// Validates typing and totality and freezes the table. Throws ConstructionError.
  FinCat build() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::optional<MorId>> identity_;
  std::unordered_map<std::size_t, std::unordered_map<std::size_t, MorId>> explicit_;  // [f][g]
  Rule rule_;
  bool truncated_ = false;
  std::optional<Concrete> concrete_;
  std::string family_;
};

/// Left unit, right unit and associativity over all composable pairs and triples.
Report check_laws(const FinCat& c);

}  // namespace cattool
