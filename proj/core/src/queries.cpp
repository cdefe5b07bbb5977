#include "cattool/queries.hpp"

#include <tuple>
#include <unordered_map>

#include "cattool/error.hpp"

namespace cattool {

MorphismClassification classify(const FinCat& c, MorId f) {
  c.require_complete("classify");
  if (f >= c.morphism_count()) throw LookupError("unknown morphism id " + std::to_string(f));
  MorphismClassification out;
  const ObjId x = c.dom(f), y = c.cod(f);

  out.is_mono = true;
  for (ObjId w = 0; w < c.object_count() && out.is_mono; ++w) {
    std::unordered_map<MorId, MorId> seen;
    for (MorId g : c.hom(w, x)) {
      auto [it, fresh] = seen.emplace(c.compose(g, f), g);
      if (!fresh) {
        out.is_mono = false;
        out.mono_witness = std::make_pair(it->second, g);
        break;
      }
    }
  }
  out.is_epi = true;
  for (ObjId z = 0; z < c.object_count() && out.is_epi; ++z) {
    std::unordered_map<MorId, MorId> seen;
    for (MorId h : c.hom(y, z)) {
      auto [it, fresh] = seen.emplace(c.compose(f, h), h);
      if (!fresh) {
        out.is_epi = false;
        out.epi_witness = std::make_pair(it->second, h);
        break;
      }
    }
  }
  for (MorId g : c.hom(y, x)) {
    bool left = c.compose(f, g) == c.identity(x);
    bool right = c.compose(g, f) == c.identity(y);
    if (left) out.retractions_of.push_back(g);
    if (right) out.sections_of.push_back(g);
    if (left && right && !out.inverse) out.inverse = g;
  }
  out.is_iso = out.inverse.has_value();
  return out;
}

namespace {

bool qualifies(const FinCat& c, UniversalKind kind, ObjId x) {
  for (ObjId y = 0; y < c.object_count(); ++y) {
    std::size_t n = kind == UniversalKind::initial ? c.hom(x, y).size() : c.hom(y, x).size();
    if (n != 1) return false;
  }
  return true;
}

const char* kind_name(UniversalKind k) { return k == UniversalKind::initial ? "initial" : "terminal"; }
const char* kind_name(BinaryKind k) { return k == BinaryKind::product ? "product" : "coproduct"; }

// g with f;g = id and g;f = id, if any.
std::optional<MorId> inverse_of(const FinCat& c, MorId f) {
  for (MorId g : c.hom(c.cod(f), c.dom(f)))
    if (c.compose(f, g) == c.identity(c.dom(f)) && c.compose(g, f) == c.identity(c.cod(f)))
      return g;
  return std::nullopt;
}

}  // namespace

UniversalWitness find_universal(const FinCat& c, UniversalKind kind) {
  c.require_complete("find_universal");
  UniversalWitness w;
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (qualifies(c, kind, x)) w.objects.push_back(x);
  for (ObjId x : w.objects) {
    std::vector<MorId> row;
    for (ObjId y = 0; y < c.object_count(); ++y)
      row.push_back(kind == UniversalKind::initial ? c.hom(x, y)[0] : c.hom(y, x)[0]);
    w.mediating.push_back(std::move(row));
  }
  for (ObjId x : w.objects) {
    std::vector<MorId> row;
    for (ObjId y : w.objects) row.push_back(c.hom(x, y)[0]);
    w.canonical_isos.push_back(std::move(row));
  }
  return w;
}

Report check_universal_uniqueness(const FinCat& c, UniversalKind kind, const UniversalWitness& w) {
  Report report(std::string(kind_name(kind)) + " uniqueness up to iso");
  Report isos("canonical isos");
  for (std::size_t i = 0; i < w.objects.size(); ++i)
    for (std::size_t j = 0; j < w.objects.size(); ++j) {
      isos.tick();
      ObjId x = w.objects[i], y = w.objects[j];
      if (c.hom(x, y).size() != 1) {
        isos.fail("more than one morphism between universal objects",
                  {{"from", c.object_name(x)}, {"to", c.object_name(y)}});
        continue;
      }
      MorId there = w.canonical_isos[i][j], back = w.canonical_isos[j][i];
      if (c.compose(there, back) != c.identity(x))
        isos.fail("canonical isos do not compose to the identity",
                  {{"iso", c.morphism_name(there)}, {"inverse", c.morphism_name(back)}});
    }
  Report transport("transport along isos");
  for (ObjId x : w.objects)
    for (ObjId z = 0; z < c.object_count(); ++z)
      for (MorId i : c.hom(x, z)) {
        if (!inverse_of(c, i)) continue;
        transport.tick();
        if (!qualifies(c, kind, z))
          transport.fail("object isomorphic to a universal one is not universal",
                         {{"iso", c.morphism_name(i)}, {"object", c.object_name(z)}});
      }
  if (w.objects.size() < 2) isos.note("fewer than two universal objects; nothing to compare");
  report.add(std::move(isos));
  report.add(std::move(transport));
  return report;
}

ConeCategory::ConeCategory(const FinCat& c, BinaryKind kind, ObjId a, ObjId b)
    : c_(&c), kind_(kind) {
  c.require_complete("cone category");
  if (a >= c.object_count() || b >= c.object_count()) throw LookupError("cone category: unknown object");
  double total = 0;
  for (ObjId q = 0; q < c.object_count(); ++q)
    total += kind == BinaryKind::product
                 ? static_cast<double>(c.hom(q, a).size()) * static_cast<double>(c.hom(q, b).size())
                 : static_cast<double>(c.hom(a, q).size()) * static_cast<double>(c.hom(b, q).size());
  require_within(total, static_cast<double>(search_limit()), "cone enumeration");
  for (ObjId q = 0; q < c.object_count(); ++q) {
    const auto& ls = kind == BinaryKind::product ? c.hom(q, a) : c.hom(a, q);
    const auto& rs = kind == BinaryKind::product ? c.hom(q, b) : c.hom(b, q);
    for (MorId l : ls)
      for (MorId r : rs) cones_.push_back({q, l, r});
  }
}

bool ConeCategory::is_cone_morphism(MorId h, const Cone& from, const Cone& to) const {
  const FinCat& c = *c_;
  if (c.dom(h) != from.apex || c.cod(h) != to.apex) return false;
  if (kind_ == BinaryKind::product)
    return c.compose(h, to.left) == from.left && c.compose(h, to.right) == from.right;
  return c.compose(from.left, h) == to.left && c.compose(from.right, h) == to.right;
}

std::vector<MorId> ConeCategory::hom(std::size_t i, std::size_t j) const {
  std::vector<MorId> out;
  for (MorId h : c_->hom(cones_[i].apex, cones_[j].apex))
    if (is_cone_morphism(h, cones_[i], cones_[j])) out.push_back(h);
  return out;
}

std::string ConeCategory::describe(const Cone& k) const {
  return "(" + c_->object_name(k.apex) + ", " + c_->morphism_name(k.left) + ", " +
         c_->morphism_name(k.right) + ")";
}

FinCat ConeCategory::materialize() const {
  FinCat::Builder b;
  b.set_family(std::string(kind_name(kind_)) + "-cones");
  for (const auto& k : cones_) b.add_object(describe(k));
  // Morphism ids of the cone category map back to (underlying morphism, source, target).
  std::vector<std::tuple<MorId, std::size_t, std::size_t>> under;
  std::map<std::tuple<MorId, std::size_t, std::size_t>, MorId> back;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (std::size_t j = 0; j < cones_.size(); ++j)
      for (MorId h : hom(i, j)) {
        MorId id = b.add_morphism(c_->morphism_name(h) + "@" + std::to_string(i) + "->" +
                                      std::to_string(j),
                                  i, j);
        under.emplace_back(h, i, j);
        back.emplace(std::make_tuple(h, i, j), id);
        if (h == c_->identity(cones_[i].apex) && i == j) b.set_identity(i, id);
      }
  b.set_rule([&](MorId f, MorId g) -> std::optional<MorId> {
    auto [hf, from, mid] = under[f];
    auto [hg, mid2, to] = under[g];
    (void)mid;
    (void)mid2;
    auto it = back.find({c_->compose(hf, hg), from, to});
    if (it == back.end()) return std::nullopt;
    return it->second;
  });
  return b.build();
}

namespace {

// Counts cone morphisms i -> j, stopping at two.
std::size_t count_upto_two(const ConeCategory& k, std::size_t i, std::size_t j) {
  std::size_t n = 0;
  const auto& cones = k.cones();
  for (MorId h : k.base().hom(cones[i].apex, cones[j].apex))
    if (k.is_cone_morphism(h, cones[i], cones[j]) && ++n == 2) break;
  return n;
}

bool cone_universal(const ConeCategory& k, std::size_t j) {
  for (std::size_t i = 0; i < k.cones().size(); ++i) {
    std::size_t n = k.kind() == BinaryKind::product ? count_upto_two(k, i, j) : count_upto_two(k, j, i);
    if (n != 1) return false;
  }
  return true;
}

}  // namespace

BinaryWitness find_binary(const FinCat& c, BinaryKind kind, ObjId a, ObjId b) {
  ConeCategory k(c, kind, a, b);
  BinaryWitness w;
  w.tested = k.cones();
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < w.tested.size(); ++j)
    if (cone_universal(k, j)) idx.push_back(j);
  for (std::size_t i : idx) {
    w.cones.push_back(w.tested[i]);
    std::vector<MorId> row;
    for (std::size_t j = 0; j < w.tested.size(); ++j)
      row.push_back(kind == BinaryKind::product ? k.hom(j, i).at(0) : k.hom(i, j).at(0));
    w.mediating.push_back(std::move(row));
  }
  for (std::size_t i : idx) {
    std::vector<MorId> row;
    for (std::size_t j : idx) row.push_back(k.hom(i, j).at(0));
    w.canonical_isos.push_back(std::move(row));
  }
  return w;
}

Report check_binary_uniqueness(const FinCat& c, BinaryKind kind, ObjId a, ObjId b,
                               const BinaryWitness& w) {
  Report report(std::string(kind_name(kind)) + " uniqueness up to iso");
  ConeCategory k(c, kind, a, b);
  Report isos("canonical isos");
  for (std::size_t i = 0; i < w.cones.size(); ++i)
    for (std::size_t j = 0; j < w.cones.size(); ++j) {
      isos.tick();
      MorId there = w.canonical_isos[i][j], back = w.canonical_isos[j][i];
      if (!k.is_cone_morphism(there, w.cones[i], w.cones[j]) ||
          c.compose(there, back) != c.identity(w.cones[i].apex))
        isos.fail("canonical cone isos are not mutually inverse",
                  {{"from", k.describe(w.cones[i])}, {"to", k.describe(w.cones[j])}});
    }
  Report transport("transport along isos");
  std::map<std::tuple<ObjId, MorId, MorId>, std::size_t> index;
  for (std::size_t j = 0; j < k.cones().size(); ++j)
    index.emplace(std::make_tuple(k.cones()[j].apex, k.cones()[j].left, k.cones()[j].right), j);
  // Each transported cone is re-verified from scratch once.
  std::map<std::size_t, bool> verified;
  auto universal_at = [&](const Cone& x) {
    auto it = index.find(std::make_tuple(x.apex, x.left, x.right));
    if (it == index.end()) return false;
    auto v = verified.find(it->second);
    if (v == verified.end()) v = verified.emplace(it->second, cone_universal(k, it->second)).first;
    return v->second;
  };
  for (const Cone& u : w.cones)
    for (ObjId z = 0; z < c.object_count(); ++z)
      for (MorId i : c.hom(u.apex, z)) {
        auto inv = inverse_of(c, i);
        if (!inv) continue;
        transport.tick();
        Cone moved = kind == BinaryKind::product
                         ? Cone{z, c.compose(*inv, u.left), c.compose(*inv, u.right)}
                         : Cone{z, c.compose(u.left, i), c.compose(u.right, i)};
        if (!universal_at(moved))
          transport.fail("cone transported along an iso is not universal",
                         {{"iso", c.morphism_name(i)}, {"cone", k.describe(moved)}});
      }
  if (w.cones.size() < 2) isos.note("fewer than two universal cones; nothing to compare");
  report.add(std::move(isos));
  report.add(std::move(transport));
  return report;
}

const Cone& ChosenProducts::product(ObjId a, ObjId b) const {
  auto key = std::make_pair(a, b);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    BinaryWitness w = find_binary(*c_, BinaryKind::product, a, b);
    std::optional<Cone> chosen;
    if (!w.cones.empty()) chosen = w.cones.front();
    it = cache_.emplace(key, chosen).first;
  }
  if (!it->second)
    throw LookupError("missing chosen product: " + c_->object_name(a) + " x " + c_->object_name(b) +
                      " does not exist in this category");
  return *it->second;
}

MorId ChosenProducts::pairing(ObjId a, ObjId b, MorId q1, MorId q2) const {
  const FinCat& c = *c_;
  if (c.dom(q1) != c.dom(q2))
    throw CompositionError("pairing: " + c.describe(q1) + " and " + c.describe(q2) +
                           " have different domains");
  if (c.cod(q1) != a || c.cod(q2) != b)
    throw CompositionError("pairing: legs do not land in the product factors");
  const Cone& p = product(a, b);
  for (MorId h : c.hom(c.dom(q1), p.apex))
    if (c.compose(h, p.left) == q1 && c.compose(h, p.right) == q2) return h;
  throw LookupError("pairing: no mediating morphism (chosen product is not universal)");
}

MorId product_of_morphisms(const ChosenProducts& p, MorId f, MorId g) {
  const FinCat& c = p.category();
  const Cone& src = p.product(c.dom(f), c.dom(g));
  return p.pairing(c.cod(f), c.cod(g), c.compose(src.left, f), c.compose(src.right, g));
}

MorId swap_iso(const ChosenProducts& p, ObjId a, ObjId b) {
  const Cone& src = p.product(a, b);
  return p.pairing(b, a, src.right, src.left);
}

Report check_antisymmetry(const FinCat& c) {
  Report report("antisymmetry");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    report.tick();
    if (c.dom(f) == c.cod(f) && !c.is_identity(f))
      report.fail("non-identity endomorphism", {{"f", c.describe(f)}});
  }
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = x + 1; y < c.object_count(); ++y) {
      report.tick();
      if (!c.hom(x, y).empty() && !c.hom(y, x).empty())
        report.fail("arrows in both directions between distinct objects",
                    {{"x", c.object_name(x)}, {"y", c.object_name(y)}});
    }
  return report;
}

Report check_set_characterizations(const FinCat& c) {
  Report report("set characterizations");
  if (!c.concrete()) {
    report.not_applicable("category has no underlying functions");
    return report;
  }
  const auto& funs = c.concrete()->functions;
  Report mono("mono iff injective"), epi("epi iff surjective"), iso("iso iff bijective");
  Report sec("sections are injective"), ret("retractions are surjective");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    MorphismClassification k = classify(c, f);
    const FinFun& u = funs[f];
    mono.tick();
    if (k.is_mono != u.injective())
      mono.fail("mono and injective disagree",
                {{"f", c.morphism_name(f)}, {"is_mono", k.is_mono ? "true" : "false"}});
    epi.tick();
    if (k.is_epi != u.surjective())
      epi.fail("epi and surjective disagree",
               {{"f", c.morphism_name(f)}, {"is_epi", k.is_epi ? "true" : "false"}});
    iso.tick();
    if (k.is_iso != u.bijective())
      iso.fail("iso and bijective disagree",
               {{"f", c.morphism_name(f)}, {"is_iso", k.is_iso ? "true" : "false"}});
    for (MorId s : k.sections_of) {
      sec.tick();
      if (!funs[s].injective())
        sec.fail("section is not injective", {{"section", c.morphism_name(s)}, {"of", c.morphism_name(f)}});
    }
    for (MorId r : k.retractions_of) {
      ret.tick();
      if (!funs[r].surjective())
        ret.fail("retraction is not surjective",
                 {{"retraction", c.morphism_name(r)}, {"of", c.morphism_name(f)}});
    }
  }
  report.add(std::move(mono));
  report.add(std::move(epi));
  report.add(std::move(iso));
  report.add(std::move(sec));
  report.add(std::move(ret));
  return report;
}

Report check_classification_laws(const FinCat& c) {
  Report report("classification laws");
  std::vector<MorphismClassification> k;
  k.reserve(c.morphism_count());
  for (MorId f = 0; f < c.morphism_count(); ++f) k.push_back(classify(c, f));
  Report iso("iso implies mono and epi"), sec("sections are mono"), ret("retractions are epi");
  Report inv("inverse is unique");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    iso.tick();
    if (k[f].is_iso && !(k[f].is_mono && k[f].is_epi))
      iso.fail("iso that is not mono and epi", {{"f", c.morphism_name(f)}});
    for (MorId s : k[f].sections_of) {
      sec.tick();
      if (!k[s].is_mono) sec.fail("section that is not mono", {{"section", c.morphism_name(s)}});
    }
    for (MorId r : k[f].retractions_of) {
      ret.tick();
      if (!k[r].is_epi) ret.fail("retraction that is not epi", {{"retraction", c.morphism_name(r)}});
    }
    if (k[f].is_iso) {
      inv.tick();
      std::size_t both = 0;
      for (MorId g : k[f].retractions_of)
        for (MorId s : k[f].sections_of)
          if (g == s) ++both;
      if (both != 1) inv.fail("iso with several inverses", {{"f", c.morphism_name(f)}});
    }
  }
  report.add(std::move(iso));
  report.add(std::move(sec));
  report.add(std::move(ret));
  report.add(std::move(inv));
  return report;
}

}  // namespace cattool
