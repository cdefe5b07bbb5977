#pragma once

// Coalgebras of Maybe = 1 + X on finite carriers, the conaturals as their
// terminal coalgebra, and streams as (state, head, tail) processes observed
// to a depth.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cattool/fincat.hpp"
#include "cattool/report.hpp"
#include "cattool/value.hpp"

namespace cattool {

struct Conat {
  bool infinite = false;
  std::size_t n = 0;

  static Conat fin(std::size_t n) { return {false, n}; }
  static Conat inf() { return {true, 0}; }
  bool operator==(const Conat&) const = default;
};

std::string to_string(const Conat& c);

/// Predecessor: Fin 0 -> nullopt (the point), Fin (n+1) -> Fin n, Inf -> Inf.
std::optional<Conat> conat_out(const Conat& c);

// A Maybe-coalgebra on {0..size-1}: next[x] is nullopt for the point.
struct CoalgebraSpec {
  std::size_t size = 0;
  std::vector<std::optional<std::size_t>> next;

  std::string describe() const;  // e.g. "[*,0,1]"
};

/// Throws ConstructionError on out-of-range successors.
CoalgebraSpec make_coalgebra(std::vector<std::optional<std::size_t>> next);
/// All (size+1)^size structure maps, lexicographic with the point first.
std::vector<CoalgebraSpec> enumerate_maybe_coalgebras(std::size_t size);

/// Fin n when the point is reached after n steps, Inf once a state repeats.
std::vector<Conat> ana_conat(const CoalgebraSpec& c);

/// {Fin 0..k-1, Inf} with the predecessor; closed under out. Element i < k
/// is Fin i, element k is Inf.
CoalgebraSpec truncated_conat(std::size_t k);
Conat truncated_conat_value(std::size_t k, std::size_t element);

/// Every coalgebra on carriers of size 1..max_size: the anamorphism commutes
/// and is the only commuting map into {Fin 0..size-1, Inf}. A square-commuting
/// map from a size-k carrier can only take those values, so the restriction
/// loses nothing.
Report check_conat_terminality(std::size_t max_size = 4);
/// ana(out) on the truncated conat is the identity.
Report check_conat_identity_anamorphism(std::size_t k = 8);
/// out^-1 = ana(F(out)) on 1 + Conat, compared with out both ways to `depth`.
Report dual_lambek_conat(std::size_t depth = 8);

/// Coalg(Maybe) restricted to every coalgebra on carriers of size 1..max_size
/// plus truncated_conat(max_size). Objects are named "c" + describe().
FinCat maybe_coalgebra_category(std::size_t max_size);
/// Laws, terminal object = the truncated conat, canonical isos, and
/// f;ana(psi) = ana(phi) for every morphism f.
Report coalgebra_category_check(std::size_t max_size = 3);

// Streams.
struct StreamProc {
  std::string name;
  Value state;
  Arrow1 head;
  Arrow1 tail;
};

inline constexpr long kNatsBound = 1'000'000;

/// h = id, t = succ; stepping past `bound` raises SizeLimitError.
StreamProc nats(long start, long bound = kNatsBound);
/// h = head x head, t = tail x tail on paired states.
StreamProc zip(const StreamProc& s, const StreamProc& t);
/// [n, n], [n+1, n+1], ...
StreamProc diagonal_pairs(long start, long bound = kNatsBound);

/// output[i] = head(tail^i(state)); tail is applied k-1 times.
std::vector<Value> stream_take(const StreamProc& p, std::size_t k);
bool bisimilar_up_to(const StreamProc& p, const StreamProc& q, std::size_t k);

/// f = ana(head, tail) satisfies head(f x) = h x and tail(f x) = f(t x),
/// observed to `depth` from each of `steps` successive states.
Report check_stream_equations(const StreamProc& p, std::size_t depth, std::size_t steps = 4);

}  // namespace cattool
