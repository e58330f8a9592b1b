#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qpbw/tropical.hpp"
#include "qpbw/word_elt.hpp"

namespace qpbw::algebra {

/// PBW exponent tuple (length N), lexicographically ordered left-to-right.
using Exponent = std::vector<long>;

/// Element of U+ in PBW coordinates relative to a fixed reduced word.
struct PBWVector {
  weyl::Word word;
  std::map<Exponent, RationalFunction> terms;

  bool is_zero() const { return terms.empty(); }
  /// Lexicographically greatest exponent in the support.
  const Exponent& lex_max() const;
};

/// Per-(word, weight) data: exponent list, PBW monomials, diagonal Gram.
struct Context {
  weyl::Word word;
  weyl::Root weight;
  std::vector<Exponent> exponents;            // ascending lex
  std::vector<WordElt> monomials;             // E(m)
  std::vector<RationalFunction> gram;         // (E(m), F-image of E(m))
  std::vector<RationalFunction> psi_product;  // prod_t psi_{m_t}(q^2)

  int index_of(const Exponent& m) const;  // -1 if absent
};

/// Per-(word, weight) transition data between the PBW, canonical and dual
/// canonical bases.
struct TransitionTable {
  weyl::Word word;
  weyl::Root weight;
  std::vector<Exponent> exponents;  // ascending lex
  std::vector<RationalFunction> gram;
  std::vector<RationalFunction> psi_product;
  // bar[i][j]: coefficient of E(m_i) in eta(E(m_j)); unitriangular, nonzero
  // only for i >= j.
  std::vector<std::vector<RationalFunction>> bar;
  // canonical[i][j]: coefficient of E(m_i) in B(m_j); off-diagonal in qZ[q].
  std::vector<std::vector<RationalFunction>> canonical;
  // dual[i][j]: coefficient of E(m_i)* in B(m_j)*; inverse-transpose of
  // canonical, nonzero only for i <= j.
  std::vector<std::vector<RationalFunction>> dual;

  int index_of(const Exponent& m) const;
};

struct CacheStats {
  long hits = 0;
  long misses = 0;
};

/// The algebra workbench for one rank.  Root vectors, contexts and transition
/// tables are computed once and frozen; callers share them read-only.
class Algebra {
 public:
  explicit Algebra(int rank);
  Algebra(int rank, long weight_cap);

  int rank() const { return rank_; }
  long weight_cap() const { return weight_cap_; }
  static long default_weight_cap(int rank);

  const weyl::Word& base_word() const { return base_word_; }

  /// Persistent table cache; empty path disables.
  void set_cache_dir(const std::filesystem::path& dir);
  CacheStats cache_stats() const;

  // --- PBW layer ---------------------------------------------------------
  const std::vector<WordElt>& root_vectors(const weyl::Word& w) const;
  WordElt root_vector(const weyl::Word& w, int t) const;
  WordElt pbw_monomial(const weyl::Word& w, const Exponent& m) const;
  std::vector<Exponent> exponents_of_weight(const weyl::Word& w, const weyl::Root& alpha) const;
  const Context& context(const weyl::Word& w, const weyl::Root& alpha) const;
  PBWVector to_pbw(const WordElt& x, const weyl::Word& w) const;
  WordElt from_pbw(const PBWVector& v) const;

  bool is_zero(const WordElt& x) const;
  bool equal(const WordElt& x, const WordElt& y) const;

  // --- canonical / dual canonical layer -----------------------------------
  const TransitionTable& table(const weyl::Word& w, const weyl::Root& alpha) const;
  WordElt canonical_element(const weyl::Word& w, const Exponent& m) const;
  /// B(m)* as a WordElt, verified against its characterizing conditions.
  WordElt dual_canonical(const weyl::Word& w, const Exponent& m) const;
  /// Coordinates of x over the dual PBW basis E(n)* of w.
  std::map<Exponent, RationalFunction> dual_coords(const WordElt& x, const weyl::Word& w) const;
  /// (m, k) if x = q^k (E(m)* + q sum_{n<m} c_n E(n)*) and sigma.eta(x) is
  /// proportional to x; strict requires k = 0.
  std::optional<std::pair<Exponent, long>> is_dual_canonical(const WordElt& x,
                                                             const weyl::Word& w,
                                                             bool strict) const;
  Exponent lusztig_parameter(const WordElt& x, const weyl::Word& w) const;

  // --- delta / string layer ------------------------------------------------
  /// phi_i(x) = max r with delta_i^r(x) != 0 (in U+, not just syntactically).
  long phi(int i, const WordElt& x) const;
  /// (delta_i^{(phi)}(x), phi); error on x = 0.
  std::pair<WordElt, long> delta_max(int i, const WordElt& x) const;
  /// Iterated delta_max along the letters of w.
  tropical::ParamVector string_of(const WordElt& x, const weyl::Word& w) const;
  /// T_i^{-1} on ker delta_i, realized as PBW exponent rotation.
  WordElt saito_rotation(const WordElt& x, int i) const;
  tropical::ParamVector pbw_string(const WordElt& x, const weyl::Word& w) const;

  // --- q-commutation / flag minors -----------------------------------------
  /// n with yx = q^n xy in U+, if any.
  std::optional<long> q_commutation(const WordElt& x, const WordElt& y) const;
  long d_form(const weyl::Word& w, const Exponent& m, const Exponent& n) const;
  Exponent flag_minor_exponent(const weyl::Word& w, int k) const;
  /// Delta_k^* = B_w(n_k)^*; w must be adapted.
  WordElt flag_minor(const weyl::Word& w, int k) const;

  /// Lexicographically least reduced word for w0 starting with i.
  const weyl::Word& word_starting_with(int i) const;

 private:
  struct Caches;

  void check_weight_cap(const weyl::Root& alpha) const;
  std::vector<WordElt> build_root_vectors(const weyl::Word& w) const;
  std::unique_ptr<Context> build_context(const weyl::Word& w, const weyl::Root& alpha) const;
  std::unique_ptr<TransitionTable> build_table(const weyl::Word& w,
                                               const weyl::Root& alpha) const;
  std::map<Exponent, RationalFunction> coords_from_pairings(const PairingTable& pt,
                                                            const Context& ctx) const;

  int rank_;
  long weight_cap_;
  weyl::Word base_word_;
  std::filesystem::path cache_dir_;
  std::shared_ptr<Caches> caches_;
};

}  // namespace qpbw::algebra
