#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qpbw/errors.hpp"
#include "qpbw/weyl.hpp"

using namespace qpbw::weyl;

namespace {

// Independent brute-force oracle: all words of length N over {1..n} that
// evaluate to w0.  Any such word is automatically reduced.
std::set<Word> brute_force_w0(int rank) {
  long n = longest_length(rank);
  std::set<Word> out;
  std::vector<int> letters(n, 1);
  while (true) {
    Word w{rank, letters};
    if (is_reduced_for_w0(w)) out.insert(w);
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && letters[pos] == rank) letters[pos--] = 1;
    if (pos < 0) break;
    ++letters[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("reduced words for w0") {
  CHECK(reduced_words_w0(1) == std::vector<Word>{Word{1, {1}}});
  CHECK(reduced_words_w0(2) == std::vector<Word>{Word{2, {1, 2, 1}}, Word{2, {2, 1, 2}}});

  const auto& r3 = reduced_words_w0(3);
  CHECK(r3.size() == 16);
  auto oracle = brute_force_w0(3);
  CHECK(std::set<Word>(r3.begin(), r3.end()) == oracle);

  CHECK_THROWS_AS(reduced_words_w0(5), qpbw::CapacityError);
}

TEST_CASE("braid move closure") {
  for (int rank : {2, 3}) {
    const auto& words = reduced_words_w0(rank);
    std::set<Word> all(words.begin(), words.end());
    for (const auto& w : words)
      for (const auto& mv : applicable_moves(w))
        CHECK(all.count(apply_braid_move(w, mv.pos, mv.kind)) == 1);
  }
}

TEST_CASE("braid move examples and errors") {
  Word w121{2, {1, 2, 1}};
  CHECK(apply_braid_move(w121, 1, MoveKind::Braid3) == Word{2, {2, 1, 2}});

  Word w13{3, {1, 3, 1, 2, 3, 2}};
  CHECK(apply_braid_move(w13, 1, MoveKind::Swap2).letters[0] == 3);

  CHECK_THROWS_AS(apply_braid_move(w121, 1, MoveKind::Swap2), qpbw::PreconditionError);
}

TEST_CASE("roots of a word") {
  Word w121{2, {1, 2, 1}};
  auto roots = roots_of_word(w121);
  CHECK(roots[0] == Root{{1, 0}});
  CHECK(roots[1] == Root{{1, 1}});
  CHECK(roots[2] == Root{{0, 1}});

  Word w212{2, {2, 1, 2}};
  auto roots2 = roots_of_word(w212);
  CHECK(roots2[0] == Root{{0, 1}});
  CHECK(roots2[1] == Root{{1, 1}});
  CHECK(roots2[2] == Root{{1, 0}});

  // Every rank-3 word hits each positive root exactly once.
  std::set<Root> all_pos;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      Root r{{0, 0, 0}};
      for (int k = a; k <= b; ++k) r.coords[k] = 1;
      all_pos.insert(r);
    }
  for (const auto& w : reduced_words_w0(3)) {
    auto rr = roots_of_word(w);
    CHECK(std::set<Root>(rr.begin(), rr.end()) == all_pos);
  }

  CHECK_THROWS_AS(roots_of_word(Word{2, {1, 1, 2}}), qpbw::PreconditionError);
}

TEST_CASE("cartan pairing") {
  CHECK(cartan_pairing(simple_root(1, 3), simple_root(1, 3)) == 2);
  CHECK(cartan_pairing(Root{{1, 1, 0}}, simple_root(1, 3)) == 1);
  CHECK(cartan_pairing(simple_root(1, 3), simple_root(3, 3)) == 0);
}

TEST_CASE("adapted words") {
  // Quiver 1 -> 2: sink 2, then 1, then 2.
  Quiver q12{2, {true}};
  CHECK(adapted_word(q12) == Word{2, {2, 1, 2}});
  Quiver q21{2, {false}};
  CHECK(adapted_word(q21) == Word{2, {1, 2, 1}});

  for (int rank : {2, 3}) {
    for (const auto& q : all_quivers(rank)) {
      Word w = adapted_word(q);
      CHECK(is_reduced_for_w0(w));
      auto s = sinks(q);
      CHECK(std::find(s.begin(), s.end(), w.letters.front()) != s.end());
      CHECK(is_adapted(w));
    }
  }

  // A3 has adapted and non-adapted words.
  auto adapted = all_adapted_words(3);
  CHECK(!adapted.empty());
  CHECK(adapted.size() < reduced_words_w0(3).size());
}

TEST_CASE("chevalley dual and rotation") {
  CHECK(chevalley_dual(1, 2) == 2);
  CHECK(chevalley_dual(2, 3) == 2);
  for (int i = 1; i <= 4; ++i) CHECK(chevalley_dual(chevalley_dual(i, 4), 4) == i);

  Word w{2, {1, 2, 1}};
  CHECK(rotate_word(w) == Word{2, {2, 1, 2}});
  // Rotation of a reduced word for w0 stays reduced for w0.
  for (const auto& u : reduced_words_w0(3)) CHECK(is_reduced_for_w0(rotate_word(u)));
}

TEST_CASE("word graph") {
  const auto& g = word_graph(3);
  CHECK(g.words.size() == 16);
  for (size_t i = 0; i < g.words.size(); ++i) {
    CHECK(!g.edges[i].empty());
    for (const auto& [j, mv] : g.edges[i])
      CHECK(g.index_of(apply_braid_move(g.words[i], mv.pos, mv.kind)) == j);
  }
}
