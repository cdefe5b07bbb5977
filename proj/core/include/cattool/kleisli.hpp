#pragma once

// Kleisli triples and monads over finite sets, the six standard instances,
// the law harness, the conversions between the presentations and Kleisli
// categories.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cattool/fincat.hpp"
#include "cattool/report.hpp"
#include "cattool/value.hpp"

namespace cattool {

struct InstanceParams {
  std::string name = "list";  // list | tree | exception | powerset | reader | continuation
  std::size_t x = 2, y = 2, z = 2;
  std::size_t e = 1;  // |E| for exception, |R| for reader and continuation
  std::size_t max_len = 3;
  std::size_t max_depth = 2;
};

struct KleisliTriple {
  std::string name;
  InstanceParams params;
  Arrow1 unit;
  // f* applied to t.
  std::function<Value(const Arrow1& f, const Value& t)> bind;
  // T over atoms 0..n-1 within the size bound; the order is deterministic.
  std::function<std::vector<Value>(std::size_t n, std::size_t bound)> values;
  std::function<double(std::size_t n, std::size_t bound)> value_count;
  std::function<Value(std::size_t n, std::size_t bound, std::mt19937_64& rng)> sample;
  // Exact normal form of an element of T X (|X| = n); structural for every
  // instance except the continuation monad, whose values are tabulated.
  std::function<Value(std::size_t n, const Value& t)> canon;
  std::function<std::string(std::size_t n, const Value& t)> show;
  std::size_t value_bound = 0;  // bound for law inputs t
  std::size_t arrow_bound = 0;  // bound for outputs of enumerated f : X -> T Y
  std::size_t lift_bound = 0;   // bound for T^2 and T^3 inputs of the monad laws
  bool finitely_closed = false;
};

struct MonadSpec {
  std::string name;
  InstanceParams params;
  std::function<Value(const Arrow1& f, const Value& t)> map;
  Arrow1 unit;
  Arrow1 mult;
  // Enumeration and comparison data carried over from the triple.
  KleisliTriple base;
};

/// Guard violations raise SizeLimitError.
KleisliTriple instance(const InstanceParams& p);
std::vector<std::string> instance_names();

/// Every f : X -> T Y with outputs from values(|Y|, arrow_bound), lexicographic.
std::vector<std::vector<Value>> enumerate_arrows(const KleisliTriple& t, std::size_t x, std::size_t y);
Arrow1 table_arrow(std::vector<Value> table);

Report check_kleisli_laws(const KleisliTriple& t);

/// mu = (id)*, map(f) = (f;eta)*.
MonadSpec kleisli_to_monad(const KleisliTriple& t);
/// f* = map(f);mu.
KleisliTriple monad_to_kleisli(const MonadSpec& m);
/// T^3 inputs are exhaustive while the count stays within the search limit,
/// otherwise a seeded sample of `samples` values.
Report check_monad_laws(const MonadSpec& m, std::size_t samples = 4096, std::uint64_t seed = 1);
/// Unit and bind of monad_to_kleisli(kleisli_to_monad(t)) agree with t.
Report check_roundtrip(const KleisliTriple& t);

/// Objects are the sets of the listed sizes; Hom(X, Y) = X -> T Y.
FinCat kleisli_category(const KleisliTriple& t, const std::vector<std::size_t>& objects);

/// g*(s ++ t) = g*(s) ++ g*(t) for the list instance.
Report check_list_bind_distributes(std::size_t n, std::size_t max_len);

}  // namespace cattool
