#include "qpbw/algebra.hpp"
#include "qpbw/errors.hpp"
#include "caches.hpp"

namespace qpbw::algebra {

long Algebra::phi(int i, const WordElt& x) const {
  if (i < 1 || i > rank_) throw PreconditionError("phi: letter out of range");
  if (x.empty()) throw PreconditionError("phi of zero");
  // (delta_i^r(x), F_u) = (x, F_{i^r u}) up to nonzero scalars, so phi is the
  // longest run of leading i's over the nonvanishing pairings.
  PairingTable pt = all_pairings(x);
  if (pt.is_zero()) throw PreconditionError("phi of zero");
  long best = 0;
  for (const auto& [u, v] : pt.values) {
    long run = 0;
    for (int letter : u) {
      if (letter != i) break;
      ++run;
    }
    best = std::max(best, run);
  }
  return best;
}

std::pair<WordElt, long> Algebra::delta_max(int i, const WordElt& x) const {
  long r = phi(i, x);
  WordElt cur = x;
  for (long k = 1; k <= r; ++k)
    cur = delta(i, cur).scaled(RationalFunction(1) /
                               RationalFunction(coeff::quantum_integer(k)));
  return {cur, r};
}

tropical::ParamVector Algebra::string_of(const WordElt& x, const weyl::Word& w) const {
  if (!is_dual_canonical(x, w, false))
    throw PreconditionError("string input is not dual canonical up to a q-power");
  tropical::ParamVector out;
  WordElt cur = x;
  for (int letter : w.letters) {
    auto [next, r] = delta_max(letter, cur);
    out.push_back(r);
    cur = std::move(next);
  }
  if (!cur.weight().is_zero() || cur.coeff({}).is_zero())
    throw InvariantError("string residue is not proportional to the unit");
  return out;
}

WordElt Algebra::saito_rotation(const WordElt& x, int i) const {
  if (x.empty()) return x;
  const weyl::Word& wi = word_starting_with(i);
  PBWVector coords = to_pbw(x, wi);
  for (const auto& [m, c] : coords.terms)
    if (m.front() != 0)
      throw PreconditionError("saito_rotation: delta_i(x) != 0");
  PBWVector rotated;
  rotated.word = weyl::rotate_word(wi);
  for (const auto& [m, c] : coords.terms) {
    Exponent r(m.begin() + 1, m.end());
    r.push_back(0);
    rotated.terms.emplace(std::move(r), c);
  }
  return from_pbw(rotated);
}

tropical::ParamVector Algebra::pbw_string(const WordElt& x, const weyl::Word& w) const {
  if (!weyl::is_reduced_for_w0(w)) throw PreconditionError("word is not reduced for w0");
  if (!is_dual_canonical(x, w, false))
    throw PreconditionError("pbw_string input is not dual canonical up to a q-power");
  tropical::ParamVector out;
  WordElt cur = x;
  weyl::Word cw = w;
  for (int k = 0; k < w.length(); ++k) {
    int letter = cw.letters.front();
    auto [next, r] = delta_max(letter, cur);
    out.push_back(r);
    cur = saito_rotation(next, letter);
    cw = weyl::rotate_word(cw);
  }
  if (!cur.weight().is_zero() || cur.coeff({}).is_zero())
    throw InvariantError("pbw_string residue is not proportional to the unit");
  return out;
}

}  // namespace qpbw::algebra
