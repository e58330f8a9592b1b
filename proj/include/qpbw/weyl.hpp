#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qpbw::weyl {

/// Rank cap for full R(w0) enumeration; the count explodes past A4.
inline constexpr int kRankCap = 4;

/// Sequence over {1..n}; carries its rank.
struct Word {
  int rank = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const Word&) const = default;
  std::string str() const;
};

/// Element of the root lattice in simple-root coordinates.
struct Root {
  std::vector<long> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  long trace() const;
  bool is_zero() const;
  auto operator<=>(const Root&) const = default;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  std::string str() const;
};

/// Orientation of the A_n diagram; edge i (1-based, i < n) joins i and i+1,
/// right[i-1] true meaning i -> i+1.
struct Quiver {
  int rank = 0;
  std::vector<bool> right;

  auto operator<=>(const Quiver&) const = default;
};

enum class MoveKind { Swap2, Braid3 };

/// One braid-move edge in the word graph: the move at `pos` (1-based) turns
/// word `from` into word `to`.
struct BraidMove {
  int pos = 0;
  MoveKind kind = MoveKind::Swap2;
};

long longest_length(int rank);  // n(n+1)/2

Root simple_root(int i, int rank);
Root reflect(int i, const Root& r);  // s_i acting on root coordinates
long cartan_pairing(const Root& a, const Root& b);

/// Word as permutation of {1..n+1} (image vector, 1-based letters applied
/// left factor first: w = s_{i_1} s_{i_2} ... acting on positions).
std::vector<int> permutation_of(const Word& w);
bool is_reduced(const Word& w);
bool is_reduced_for_w0(const Word& w);

/// Seed word (1, 2,1, 3,2,1, ...).
Word seed_word_w0(int rank);

/// All reduced decompositions of w0, sorted lexicographically.  Cached;
/// throws CapacityError above kRankCap.
const std::vector<Word>& reduced_words_w0(int rank);

Word apply_braid_move(const Word& w, int pos, MoveKind kind);

/// All braid moves applicable to w, as (pos, kind) in deterministic order.
std::vector<BraidMove> applicable_moves(const Word& w);

/// (beta_1, ..., beta_N) for a reduced word for w0.
std::vector<Root> roots_of_word(const Word& w);

/// Index of the simple root -w0(alpha_i): n+1-i in type A.
int chevalley_dual(int i, int rank);

/// (w_2, ..., w_N, chevalley_dual(w_1)).
Word rotate_word(const Word& w);

std::vector<int> sinks(const Quiver& q);
Quiver reflect_quiver(const Quiver& q, int vertex);

/// Reduced word for w0 adapted to q; deterministic (smallest available sink,
/// with backtracking over sink choices that cannot complete).
Word adapted_word(const Quiver& q);

/// True if w is reduced for w0 and adapted to some quiver.
bool is_adapted(const Word& w);
std::optional<Quiver> adapting_quiver(const Word& w);

/// All quivers of the given rank in deterministic order.
std::vector<Quiver> all_quivers(int rank);

/// All adapted reduced words for w0 (union of the commutation classes of the
/// adapted_word of every quiver), sorted lexicographically.
std::vector<Word> all_adapted_words(int rank);

/// Word graph on R(w0): nodes sorted lex, edges labelled by braid moves.
struct WordGraph {
  std::vector<Word> words;
  // edges[i] = (neighbor index, move applied to words[i]).
  std::vector<std::vector<std::pair<int, BraidMove>>> edges;

  int index_of(const Word& w) const;  // -1 if absent
};

const WordGraph& word_graph(int rank);

}  // namespace qpbw::weyl
