#pragma once

// F-algebras for polynomial F, catamorphisms and their laws, the fold
// library over lists, fusion, Lambek, and the initial algebra of the
// identity functor on a finite category.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cattool/fincat.hpp"
#include "cattool/poly.hpp"
#include "cattool/report.hpp"
#include "cattool/value.hpp"

namespace cattool {

struct AlgebraSpec {
  std::string name;
  Poly functor;
  // Carrier atoms 0..n-1 when finite; otherwise a value domain (integers,
  // lists, tuples) that only supports bounded test vectors.
  std::optional<std::size_t> finite_carrier;
  Arrow1 phi;       // F(carrier) -> carrier
  Arrow1 exported;  // applied after cata; a projection for tupled carriers
  std::function<std::string(const Value&)> show;
};

/// cata(in(s)) = phi(F(cata)(s)). Throws ShapeError when the term does not fit.
Value cata(const AlgebraSpec& alg, const Value& t);
/// cata followed by the exported projection.
Value fold(const AlgebraSpec& alg, const Value& t);

AlgebraSpec in_algebra(const Poly& f);
/// Finite carrier; table[i] is the image of the i-th element of poly_values(F, carrier).
AlgebraSpec table_algebra(const Poly& f, std::size_t n, std::vector<std::size_t> table, std::string name = {});
double table_algebra_count(const Poly& f, std::size_t n);
std::vector<AlgebraSpec> enumerate_table_algebras(const Poly& f, std::size_t n);
AlgebraSpec sample_table_algebra(const Poly& f, std::size_t n, std::mt19937_64& rng);

/// Square, cata(in) = id and, for finite carriers, uniqueness among all maps
/// from the enumerated terms (brute force up to 1e5 candidates, forced values
/// beyond).
Report check_cata_laws(const AlgebraSpec& alg, const TermTable& terms);
Report check_cata_laws(const AlgebraSpec& alg, std::size_t depth);
/// Uniqueness over every table algebra on carriers of size 1..max_carrier;
/// above `cap` algebras per size a seeded sample of `cap` is used.
Report check_initiality_sweep(const Poly& f, std::size_t max_carrier, std::size_t depth,
                              std::size_t cap = 4096, std::uint64_t seed = 1);

// Named algebras.
AlgebraSpec nat_value_algebra();                 // z -> 0, s -> n + 1
AlgebraSpec exp_eval_algebra(std::vector<long> labels);  // Int, Plus, Squared
AlgebraSpec btree_sum_algebra(std::vector<long> labels);
AlgebraSpec btree_leaves_algebra(std::vector<long> labels);

struct FoldOptions {
  std::vector<long> tail;                 // append(t)
  std::function<long(long)> map_fn;      // map(g)
  std::function<bool(long)> predicate;   // filter(p)
};

/// sum, product, and, or, append, length, reverse, map, filter, bin2int,
/// bin2int2, bin2int2_pair over lists with the given labels. bin2int reads
/// big-endian and is a fold on the pair (value, 2^length) followed by the
/// left projection; bin2int2 reads little-endian and is a plain fold;
/// bin2int2_pair computes it on N x N with (value, length).
AlgebraSpec fold_library(const std::string& name, const std::vector<long>& labels,
                         const FoldOptions& opts = {});
std::vector<std::string> fold_library_names();

/// Algebra by datatype and name for the command line.
AlgebraSpec algebra_catalog(const std::string& datatype, const std::string& name);

/// Two terms whose images under F(h) agree while h differs: no algebra on
/// the carrier has h as its catamorphism. nullopt when h is consistent.
std::optional<std::vector<Witness>> fold_obstruction(const TermTable& terms, const Arrow1& h);

/// in^-1 = cata(F(in)), or the supplied candidate, checked two-sided.
Report lambek_check(const Poly& f, std::size_t depth, std::optional<Arrow1> in_inverse = std::nullopt);

struct FusionResult {
  bool premise_holds = false;
  bool conclusion_holds = false;
  Report report{"fusion"};
};

/// Premise phi;f = F(f);psi on the given elements of F(carrier of phi);
/// conclusion cata(phi);f = cata(psi) on the terms, asserted only when the
/// premise holds.
FusionResult fusion_check(const AlgebraSpec& phi, const AlgebraSpec& psi, const Arrow1& f,
                          const std::vector<Value>& premise_inputs, const TermTable& terms);
/// (+1) after sum against fold (+) 1 on lists over [lo, hi] up to max_len.
FusionResult fusion_sum_plus_one(long lo = -2, long hi = 2, std::size_t max_len = 5);
/// (*2) after sum against fold (+) 1: the premise fails.
FusionResult fusion_sum_times_two(long lo = -2, long hi = 2, std::size_t max_len = 5);
/// map g after map f = map (f;g) for every f, g between sets of size n.
Report fusion_map_map(std::size_t n = 2, std::size_t max_len = 4);

/// A -> mu F(A, -) on morphisms: the catamorphism of in . F(g, id).
Value mu_map(const Poly& f2, const Arrow1& g, const Value& t);
/// Identity and composition over every g : labels -> labels.
Report check_mu_functor(const Poly& f2, const std::vector<long>& labels, std::size_t depth);

/// Id-algebras over C as a finite category; (0, id) is initial there for
/// every initial object 0 of C. not_applicable when C has no initial object.
Report initial_object_is_initial_algebra_of_id(const FinCat& c);
FinCat id_algebra_category(const FinCat& c);

/// (N + {inf}, zero, succ) is not initial: algebra maps into (X, z, s) are
/// the fixed points c of s (h(inf) = c), checked on Fin(0..k) and inf.
/// Fails with two distinct maps into ({0,1}, 0, id).
Report check_conat_algebra_initiality(std::size_t k = 8);

}  // namespace cattool
