#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qpbw/weyl.hpp"

namespace qpbw::tropical {

/// Lusztig parameter / PBW exponent tuple.  Entries are exact integers; the
/// module never touches floating point.
using ParamVector = std::vector<long>;

/// The elementary 3-move update: (a,b,c) -> (b+c-min(a,c), min(a,c), a+b-min(a,c)).
/// Reproduces both strict branches of the piecewise-linear map and is
/// continuous across a = c.  An involution.
std::array<long, 3> r_move3(long a, long b, long c);

/// Braid-move path from `from` to `to` in the word graph (shortest; ties
/// broken toward the lexicographically smaller intermediate word).
std::vector<weyl::BraidMove> path_between(const weyl::Word& from, const weyl::Word& to);

/// Parameter transport along one braid move applied at `mv` to the current
/// word: a 2-move swaps entries, a 3-move applies r_move3.
void apply_move_in_place(ParamVector& m, const weyl::BraidMove& mv);

/// R_from^to(m).
ParamVector reparametrize(const weyl::Word& from, const weyl::Word& to, const ParamVector& m);

/// Wall indices k (1-based, k <= N-2) with w_k = w_{k+2} = w_{k+1} +- 1.
std::vector<int> walls(const weyl::Word& w);

/// True iff for every reduced word w' the transported point avoids every
/// w'-wall.
bool is_regular(const weyl::Word& base, const ParamVector& m);

/// Separating witness for a failed same-domain verdict.
struct DomainWitness {
  weyl::Word word;
  int wall = 0;
};

struct DomainCheck {
  bool same = false;        // the common verdict
  bool additivity = false;  // characterization (a)
  bool weak_side = false;   // characterization (b)
  std::optional<DomainWitness> witness;
};

/// Both characterizations of "m and m2 lie in a single linearity domain";
/// throws InvariantError if they disagree.
DomainCheck same_linearity_domain(const weyl::Word& base, const ParamVector& m,
                                  const ParamVector& m2);

/// Set version: no two of the points are strictly separated by any wall in
/// any parametrization.
bool all_in_single_domain(const weyl::Word& base, const std::vector<ParamVector>& points);

/// Harness for the composition property: preconditions are that every pair
/// among {parts, sum(parts)} shares a domain and that sum(parts) and q share
/// a domain (PreconditionError otherwise); returns whether all of
/// {parts, sum, q} lie in a single domain.
bool samedomain_triple_check(const weyl::Word& base, const std::vector<ParamVector>& parts,
                             const ParamVector& q);

}  // namespace qpbw::tropical
