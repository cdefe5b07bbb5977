#include "cattool/fincat.hpp"

#include <memory>

#include "cattool/error.hpp"

namespace cattool {

MorId FinCat::compose(MorId f, MorId g) const {
  if (cod(f) != dom(g))
    throw CompositionError("cannot compose " + describe(f) + " then " + describe(g));
  MorId h = comp_[comp_offset_[f] + out_pos_[g]];
  if (h == Builder::npos)
    throw InfiniteCategoryError("composite of " + morphism_name(f) + " and " + morphism_name(g) +
                                " lies beyond the path-length bound");
  return h;
}

const std::vector<MorId>& FinCat::hom(ObjId x, ObjId y) const {
  if (x >= objects_.size() || y >= objects_.size()) throw LookupError("hom: unknown object");
  return hom_[x * objects_.size() + y];
}

std::optional<ObjId> FinCat::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCat::find_morphism(const std::string& name) const {
  auto it = morphism_index_.find(name);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

ObjId FinCat::object_id(const std::string& name) const {
  if (auto x = find_object(name)) return *x;
  throw LookupError("unknown object '" + name + "'");
}

MorId FinCat::morphism_id(const std::string& name) const {
  if (auto f = find_morphism(name)) return *f;
  throw LookupError("unknown morphism '" + name + "'");
}

void FinCat::require_complete(const std::string& what) const {
  if (truncated_)
    throw InfiniteCategoryError(what +
                                ": category is a truncated hom enumeration of an infinite "
                                "category and has no total composition");
}

std::string FinCat::describe(MorId f) const {
  const Morphism& m = morphism(f);
  return m.name + " : " + objects_[m.dom] + " -> " + objects_[m.cod];
}

FinCat::Builder::Builder(const FinCat& c) {
  objects_ = c.objects_;
  morphisms_ = c.morphisms_;
  identity_.assign(c.identity_.begin(), c.identity_.end());
  truncated_ = c.truncated_;
  concrete_ = c.concrete_;
  family_ = c.family_;
  auto base = std::make_shared<FinCat>(c);
  rule_ = [base](MorId f, MorId g) -> std::optional<MorId> {
    MorId h = base->comp_row(f)[base->out_pos_[g]];
    if (h == npos) return std::nullopt;
    return h;
  };
}

ObjId FinCat::Builder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identity_.emplace_back();
  return objects_.size() - 1;
}

MorId FinCat::Builder::add_morphism(std::string name, ObjId dom, ObjId cod) {
  if (dom >= objects_.size() || cod >= objects_.size())
    throw ConstructionError("morphism '" + name + "' refers to an undeclared object");
  morphisms_.push_back({std::move(name), dom, cod});
  return morphisms_.size() - 1;
}

void FinCat::Builder::set_identity(ObjId x, MorId f) {
  if (x >= objects_.size() || f >= morphisms_.size())
    throw ConstructionError("identity: unknown object or morphism");
  if (morphisms_[f].dom != x || morphisms_[f].cod != x)
    throw ConstructionError("identity: " + morphisms_[f].name + " is not an endomorphism of " + objects_[x]);
  identity_[x] = f;
}

void FinCat::Builder::set_composite(MorId f, MorId g, MorId result) {
  if (f >= morphisms_.size() || g >= morphisms_.size() || result >= morphisms_.size())
    throw ConstructionError("composition: unknown morphism");
  explicit_[f][g] = result;
}

FinCat FinCat::Builder::build() const {
  FinCat c;
  c.objects_ = objects_;
  c.morphisms_ = morphisms_;
  c.truncated_ = truncated_;
  c.concrete_ = concrete_;
  c.family_ = family_;

  const std::size_t n = objects_.size();
  for (ObjId x = 0; x < n; ++x) {
    if (!c.object_index_.emplace(objects_[x], x).second)
      throw ConstructionError("duplicate object name '" + objects_[x] + "'");
  }
  for (MorId f = 0; f < morphisms_.size(); ++f) {
    if (!c.morphism_index_.emplace(morphisms_[f].name, f).second)
      throw ConstructionError("duplicate morphism name '" + morphisms_[f].name + "'");
  }

  c.identity_.resize(n);
  for (ObjId x = 0; x < n; ++x) {
    if (!identity_[x]) throw ConstructionError("object '" + objects_[x] + "' has no identity");
    const Morphism& m = morphisms_[*identity_[x]];
    if (m.dom != x || m.cod != x)
      throw ConstructionError("identity of '" + objects_[x] + "' is '" + m.name +
                              "', which is not an endomorphism of it");
    c.identity_[x] = *identity_[x];
  }

  c.out_.assign(n, {});
  c.hom_.assign(n * n, {});
  c.out_pos_.resize(morphisms_.size());
  for (MorId f = 0; f < morphisms_.size(); ++f) {
    const Morphism& m = morphisms_[f];
    c.out_pos_[f] = c.out_[m.dom].size();
    c.out_[m.dom].push_back(f);
    c.hom_[m.dom * n + m.cod].push_back(f);
  }

  c.comp_offset_.resize(morphisms_.size());
  std::size_t total = 0;
  for (MorId f = 0; f < morphisms_.size(); ++f) {
    c.comp_offset_[f] = total;
    total += c.out_[morphisms_[f].cod].size();
  }
  c.comp_.assign(total, npos);
  for (MorId f = 0; f < morphisms_.size(); ++f) {
    const auto& next = c.out_[morphisms_[f].cod];
    MorId* row = c.comp_.data() + c.comp_offset_[f];
    auto ex = explicit_.find(f);
    for (std::size_t k = 0; k < next.size(); ++k) {
      MorId g = next[k];
      std::optional<MorId> h;
      if (ex != explicit_.end()) {
        auto hit = ex->second.find(g);
        if (hit != ex->second.end()) h = hit->second;
      }
      if (!h && rule_) h = rule_(f, g);
      if (!h) {
        if (truncated_) continue;
        throw ConstructionError("composition table is not total: missing " + morphisms_[f].name +
                                " then " + morphisms_[g].name);
      }
      const Morphism& r = morphisms_[*h];
      if (r.dom != morphisms_[f].dom || r.cod != morphisms_[g].cod)
        throw ConstructionError("composite of " + morphisms_[f].name + " then " +
                                morphisms_[g].name + " is '" + r.name +
                                "', which has the wrong domain or codomain");
      row[k] = *h;
    }
  }
  for (const auto& [f, row] : explicit_)
    for (const auto& [g, h] : row) {
      (void)h;
      if (morphisms_[f].cod != morphisms_[g].dom)
        throw ConstructionError("composition entry for non-composable pair " +
                                morphisms_[f].name + ", " + morphisms_[g].name);
    }
  return c;
}

Report check_laws(const FinCat& c) {
  Report report("category laws");
  if (c.truncated()) {
    report.error(
        "truncated hom enumeration: composition is not closed, so the laws cannot be checked");
    return report;
  }
  Report left("left unit");
  Report right("right unit");
  Report assoc("associativity");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    left.tick();
    if (c.compose(c.identity(c.dom(f)), f) != f)
      left.fail("id then f differs from f",
                {{"f", c.morphism_name(f)},
                 {"id then f", c.morphism_name(c.compose(c.identity(c.dom(f)), f))}});
    right.tick();
    if (c.compose(f, c.identity(c.cod(f))) != f)
      right.fail("f then id differs from f",
                 {{"f", c.morphism_name(f)},
                  {"f then id", c.morphism_name(c.compose(f, c.identity(c.cod(f))))}});
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const MorId* row_f = c.comp_row(f);
    const auto& next_f = c.out(c.cod(f));
    for (std::size_t j = 0; j < next_f.size(); ++j) {
      MorId g = next_f[j];
      const MorId* row_fg = c.comp_row(row_f[j]);
      const MorId* row_g = c.comp_row(g);
      const auto& next_g = c.out(c.cod(g));
      assoc.tick(next_g.size());
      for (std::size_t k = 0; k < next_g.size(); ++k) {
        MorId a = row_fg[k];
        MorId b = row_f[c.out_position(row_g[k])];
        if (a == b) continue;
        MorId h = next_g[k];
          assoc.fail("(f then g) then h differs from f then (g then h)",
                     {{"f", c.morphism_name(f)},
                      {"g", c.morphism_name(g)},
                      {"h", c.morphism_name(h)},
                      {"(f;g);h", c.morphism_name(a)},
                      {"f;(g;h)", c.morphism_name(b)}});
      }
    }
  }
  report.add(std::move(left));
  report.add(std::move(right));
  report.add(std::move(assoc));
  return report;
}

}  // namespace cattool
