#pragma once

#include <map>
#include <vector>

#include "qpbw/rational.hpp"
#include "qpbw/weyl.hpp"

namespace qpbw::algebra {

using coeff::LaurentPoly;
using coeff::RationalFunction;

/// A word in the generators: sequence over {1..n}.
using GenWord = std::vector<int>;

/// Weight-homogeneous element of U+ in the word model: a sparse assignment
/// word -> coefficient in the free algebra on E_1..E_n.  Equality in U+ is
/// detected through the pairing (see Algebra::equal), never syntactically.
class WordElt {
 public:
  WordElt() = default;
  explicit WordElt(int rank) : rank_(rank) {}

  static WordElt unit(int rank);
  static WordElt generator(int rank, int i);

  int rank() const { return rank_; }
  const std::map<GenWord, RationalFunction>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// True if all stored words share one letter multiset.  The free product
  /// tolerates mixed contents, but every semantic operation (pairing, PBW
  /// coordinates, weights) requires homogeneity.
  bool is_homogeneous() const;
  /// Letter-content weight; requires homogeneity.  Unit has weight 0.
  weyl::Root weight() const;
  long trace() const { return weight().trace(); }

  void add_term(const GenWord& w, const RationalFunction& c);
  WordElt operator+(const WordElt& o) const;
  WordElt operator-(const WordElt& o) const;
  WordElt& operator+=(const WordElt& o);
  WordElt scaled(const RationalFunction& c) const;
  RationalFunction coeff(const GenWord& w) const;

  /// Syntactic equality of the free representatives.
  bool operator==(const WordElt& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  int rank_ = 0;
  std::map<GenWord, RationalFunction> terms_;
};

/// Bilinear extension of word concatenation.
WordElt mul(const WordElt& x, const WordElt& y);

/// Bar involution: coefficients q -> q^{-1}, words fixed.
WordElt eta(const WordElt& x);

/// Anti-automorphism fixing E_i: every word reversed, coefficients fixed.
WordElt sigma(const WordElt& x);

/// The q-differential operator: removes one letter i at a time,
///   delta_i(word) = (1-q^2)^{-1} sum_u q^{-(prefix weight, alpha_i)} (word \ u),
/// which satisfies delta_i(xy) = delta_i(x) y + q^{-(wt x, alpha_i)} x delta_i(y)
/// and delta_i(E_j) = (1-q^2)^{-1} delta_{ij}.
WordElt delta(int i, const WordElt& x);

/// Hopf pairing against F_{j_1}...F_{j_k}: peel the leading F through the
/// adjoint identity (delta_j x, y) = (x, F_j y), i.e. iterate delta along the
/// fword and read off the coefficient of the empty word.  This is the unique
/// reading of the pairing axioms compatible with the dual PBW law
/// E(m)* = prod psi_{m_t}(q^2) E(m); see README for the derivation.
RationalFunction pairing(const WordElt& x, const GenWord& fword);

/// All pairings of x at once: word u -> (x, F_u) for every u with the letter
/// content of x, computed on a shared prefix tree with denominator-cleared
/// arithmetic.  scale * values = true pairings.  Zero entries are absent; the
/// table is empty iff x = 0 in U+.
struct PairingTable {
  RationalFunction scale;
  std::map<GenWord, LaurentPoly> values;

  RationalFunction at(const GenWord& u) const;
  bool is_zero() const { return values.empty(); }
};

PairingTable all_pairings(const WordElt& x);

}  // namespace qpbw::algebra
