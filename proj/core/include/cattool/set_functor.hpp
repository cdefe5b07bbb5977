#pragma once

// Endofunctors on finite sets given by an object recipe and an action on
// FinFuns: list (bounded length), maybe, (x A), (+ A), (R ->), Hom(R, -).

#include <functional>
#include <string>
#include <vector>

#include "cattool/fincat.hpp"
#include "cattool/finset.hpp"
#include "cattool/report.hpp"

namespace cattool {

struct SetFunctor {
  std::string name;
  std::function<FinSet(const FinSet&)> on_objects;
  std::function<FinFun(const FinFun&)> on_morphisms;
  // Renders element i of F(X) where |X| = n.
  std::function<std::string(std::size_t n, std::size_t i)> show;
};

/// Lists of length <= max_len, shortest first, then lexicographic.
SetFunctor list_functor(std::size_t max_len);
/// X + 1 with the adjoined point last.
SetFunctor maybe_functor();
SetFunctor times_functor(std::size_t a);
SetFunctor plus_functor(std::size_t a);
/// R -> X, indexed as in enumerate_functions.
SetFunctor reader_functor(std::size_t r);
/// Set(R, -). Same action as the reader functor.
SetFunctor hom_functor(std::size_t r);

/// "list", "maybe", "times", "plus", "reader", "hom"; param is L, |A| or |R|.
SetFunctor builtin_set_functor(const std::string& name, std::size_t param);

/// Identity and composition over all functions between sets of size <= max_size.
Report check_set_functor(const SetFunctor& f, std::size_t max_size);

std::vector<std::vector<std::size_t>> enumerate_lists(std::size_t n, std::size_t max_len);
std::size_t list_index(std::size_t n, const std::vector<std::size_t>& xs);
std::vector<std::size_t> list_at(std::size_t n, std::size_t index);

// Hom(R, -) on an arbitrary finite category; Hom(R, X) is indexed by
// position in c.hom(r, x).
struct CatHomFunctor {
  const FinCat* c;
  ObjId r;
  FinSet on_object(ObjId x) const;
  FinFun on_morphism(MorId f) const;
};

Report check_hom_functor(const FinCat& c, ObjId r);

}  // namespace cattool
