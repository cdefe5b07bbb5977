#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cattool {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// f then g where cod(f) != dom(g).
class CompositionError : public Error {
 public:
  using Error::Error;
};

// A presentation that does not describe a valid structure (non-total tables,
// failed monoid axioms, dangling names, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class InfiniteCategoryError : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

// Exhaustive searches refuse inputs whose candidate space exceeds a guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// Operands whose shapes do not line up (functor sources, algebra functors, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for this instance (e.g. Kleisli category of the list monad).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Default cap on brute-force candidate spaces. CATTOOL_MAX_SEARCH overrides it.
inline constexpr std::size_t kDefaultSearchLimit = 1'000'000;

std::size_t search_limit();

/// Throws SizeLimitError when `count` exceeds `limit`.
void require_within(double count, double limit, const std::string& what);

}  // namespace cattool
