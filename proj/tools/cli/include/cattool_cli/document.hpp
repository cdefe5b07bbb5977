#pragma once

// JSON documents for categories, functors, natural transformations and
// adjunctions. Every document carries a "kind" discriminator.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "cattool/adjunction.hpp"
#include "cattool/error.hpp"
#include "cattool/fincat.hpp"
#include "cattool/functor.hpp"

namespace cattool::cli {

using nlohmann::json;

// Malformed input: wrong JSON, missing or mistyped fields. `field` is a
// JSON-pointer-like path to the offending value.
class DocumentError : public Error {
 public:
  DocumentError(const std::string& field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Loaded {
  json doc;
  std::filesystem::path base;  // directory for nested relative paths
};

/// A path, or inline JSON text when the argument starts with '{'.
Loaded load_document(const std::string& path_or_text);

/// kind: explicit | preorder | monoid | graph | universe.
FinCat parse_category(const json& doc, const std::filesystem::path& base, const std::string& at = "");
/// A nested category: an inline document or a path relative to `base`.
CatPtr category_field(const json& doc, const std::string& key, const std::filesystem::path& base,
                      const std::string& at);

/// {"objects": {x: y}, "morphisms": {f: g}} between the given categories.
FunctorData parse_functor_maps(const json& doc, const CatPtr& source, const CatPtr& target, const std::string& at);
/// kind "functor": source, target, objects, morphisms.
FunctorData parse_functor(const json& doc, const std::filesystem::path& base);
/// kind "nattrans": source, target, from, to, components.
NatTransData parse_nattrans(const json& doc, const std::filesystem::path& base);
/// kind "adjunction": c, d, left (C -> D), right (D -> C), unit, counit.
AdjunctionUnitCounit parse_adjunction(const json& doc, const std::filesystem::path& base);

/// Normalized explicit form: every composite listed, identities by object.
json category_to_json(const FinCat& c);

}  // namespace cattool::cli
