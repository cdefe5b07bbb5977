#pragma once

// Free monoids over finite generator sets, observed on words up to a length
// bound: the universal property, the free functor, and Free -| Forget.

#include <cstddef>
#include <string>
#include <vector>

#include "cattool/constructions.hpp"
#include "cattool/report.hpp"

namespace cattool {

using Word = std::vector<std::size_t>;

std::string to_string(const Word& w);

/// Words over {0..gens-1} of length <= max_len, shortest first, then lex.
std::vector<Word> words_up_to(std::size_t gens, std::size_t max_len);
Word concat(const Word& u, const Word& v);

/// x -> [x].
Word canonical_injection(std::size_t x);
/// Folds f over the word with the monoid product; the empty word goes to the unit.
std::size_t lift(const std::vector<std::size_t>& f, const FiniteMonoid& m, const Word& w);
/// Free on morphisms: pointwise application.
Word free_map(const std::vector<std::size_t>& f, const Word& w);

/// Associativity and two-sided unit of concatenation on words <= max_len.
Report check_free_monoid_laws(std::size_t gens, std::size_t max_len = 3);
/// Free(id) = id and Free(f;g) = Free(f);Free(g) for every f, g between sets
/// of size <= max_set, on words <= max_len.
Report check_free_functor_laws(std::size_t max_set = 2, std::size_t max_len = 4);
/// lift(f) sends the empty word to the unit and concatenation to products.
Report check_lift_is_hom(const std::vector<std::size_t>& f, const FiniteMonoid& m, std::size_t max_len = 3);

// A table on the words <= L (index order of words_up_to) is a bounded hom
// when it sends [] to the unit and u++v to t(u)*t(v) whenever |u|+|v| <= L.
// The words <= L determine a hom, since generators generate.
using BoundedHom = std::vector<std::size_t>;

/// Every bounded hom, optionally pinned to f on the singletons. Backtracking
/// over all |M|^#words tables; branches that break a clause are cut.
std::vector<BoundedHom> enumerate_bounded_homs(std::size_t gens, const FiniteMonoid& m, std::size_t max_len,
                                               const std::vector<std::size_t>* pinned = nullptr);

/// lift(f) after the injection is f, and lift(f) is the only bounded hom
/// agreeing with f on generators. Guard: gens <= 2, |M| <= 3, L <= 3.
Report check_uvp(std::size_t gens, const FiniteMonoid& m, const std::vector<std::size_t>& f, std::size_t max_len);
/// A user-supplied table on the words <= L (order of words_up_to): the unit
/// clause, agreement with f on singletons, concatenation within the bound,
/// and equality with lift(f).
Report check_hom_candidate(std::size_t gens, const FiniteMonoid& m, const std::vector<std::size_t>& f,
                           const BoundedHom& table, std::size_t max_len);
/// check_uvp for every f : X -> M.
Report check_uvp_all(std::size_t gens, const FiniteMonoid& m, std::size_t max_len);

bool is_monoid_hom(const std::vector<std::size_t>& h, const FiniteMonoid& a, const FiniteMonoid& b);
std::vector<std::vector<std::size_t>> enumerate_monoid_homs(const FiniteMonoid& a, const FiniteMonoid& b);

/// Free -| Forget at |X| = gens: alpha(phi) = inj;phi is a bijection with
/// inverse lift, natural in X (maps between generator sets of size <= 2) and
/// in M (homs among M, the trivial monoid and bool-or), and the unit
/// (injection) and counit (fold by multiplication) satisfy both triangles.
Report free_forget_adjunction(std::size_t gens, const FiniteMonoid& m, std::size_t max_len = 3);

}  // namespace cattool
