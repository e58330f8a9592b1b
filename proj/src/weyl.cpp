#include "qpbw/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "qpbw/errors.hpp"

namespace qpbw::weyl {

std::string Word::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ",";
    os << letters[i];
  }
  os << ")";
  return os.str();
}

long Root::trace() const { return std::accumulate(coords.begin(), coords.end(), 0L); }

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

std::string Root::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << ")";
  return os.str();
}

long longest_length(int rank) { return static_cast<long>(rank) * (rank + 1) / 2; }

Root simple_root(int i, int rank) {
  if (i < 1 || i > rank) throw PreconditionError("simple_root: index out of range");
  Root r;
  r.coords.assign(rank, 0);
  r.coords[i - 1] = 1;
  return r;
}

long cartan_pairing(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw PreconditionError("cartan_pairing: rank mismatch");
  long s = 0;
  int n = a.rank();
  for (int i = 0; i < n; ++i) {
    s += 2 * a.coords[i] * b.coords[i];
    if (i + 1 < n) s -= a.coords[i] * b.coords[i + 1] + a.coords[i + 1] * b.coords[i];
  }
  return s;
}

Root reflect(int i, const Root& r) {
  Root out = r;
  out.coords[i - 1] -= cartan_pairing(simple_root(i, r.rank()), r);
  return out;
}

std::vector<int> permutation_of(const Word& w) {
  std::vector<int> p(w.rank + 1);
  std::iota(p.begin(), p.end(), 1);
  // Multiply on the right letter by letter: appending s_i swaps images of
  // positions i, i+1.
  for (int letter : w.letters) {
    if (letter < 1 || letter > w.rank) throw PreconditionError("word letter out of range");
    std::swap(p[letter - 1], p[letter]);
  }
  return p;
}

namespace {

long inversions(const std::vector<int>& p) {
  long inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

}  // namespace

bool is_reduced(const Word& w) {
  return inversions(permutation_of(w)) == w.length();
}

bool is_reduced_for_w0(const Word& w) {
  if (w.length() != longest_length(w.rank)) return false;
  auto p = permutation_of(w);
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(p.size() - i)) return false;
  return true;
}

Word seed_word_w0(int rank) {
  Word w{rank, {}};
  for (int k = 1; k <= rank; ++k)
    for (int j = k; j >= 1; --j) w.letters.push_back(j);
  return w;
}

Word apply_braid_move(const Word& w, int pos, MoveKind kind) {
  const auto& l = w.letters;
  int idx = pos - 1;
  if (kind == MoveKind::Swap2) {
    if (idx < 0 || idx + 1 >= w.length())
      throw PreconditionError("2-move position out of range");
    if (std::abs(l[idx] - l[idx + 1]) < 2)
      throw PreconditionError("2-move requires commuting letters at " + std::to_string(pos));
    Word r = w;
    std::swap(r.letters[idx], r.letters[idx + 1]);
    return r;
  }
  if (idx < 0 || idx + 2 >= w.length())
    throw PreconditionError("3-move position out of range");
  if (l[idx] != l[idx + 2] || std::abs(l[idx] - l[idx + 1]) != 1)
    throw PreconditionError("3-move requires pattern (i,j,i), |i-j| = 1, at " +
                            std::to_string(pos));
  Word r = w;
  r.letters[idx] = l[idx + 1];
  r.letters[idx + 1] = l[idx];
  r.letters[idx + 2] = l[idx + 1];
  return r;
}

std::vector<BraidMove> applicable_moves(const Word& w) {
  std::vector<BraidMove> out;
  const auto& l = w.letters;
  for (int k = 0; k + 1 < w.length(); ++k)
    if (std::abs(l[k] - l[k + 1]) >= 2) out.push_back({k + 1, MoveKind::Swap2});
  for (int k = 0; k + 2 < w.length(); ++k)
    if (l[k] == l[k + 2] && std::abs(l[k] - l[k + 1]) == 1)
      out.push_back({k + 1, MoveKind::Braid3});
  return out;
}

const std::vector<Word>& reduced_words_w0(int rank) {
  if (rank < 1) throw PreconditionError("rank must be >= 1");
  if (rank > kRankCap)
    throw CapacityError("R(w0) enumeration capped at rank " + std::to_string(kRankCap));
  static std::mutex mu;
  static std::map<int, std::vector<Word>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;

  std::set<Word> seen;
  std::vector<Word> queue{seed_word_w0(rank)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Word w = queue.back();
    queue.pop_back();
    for (const auto& mv : applicable_moves(w)) {
      Word next = apply_braid_move(w, mv.pos, mv.kind);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  auto& slot = cache[rank];
  slot.assign(seen.begin(), seen.end());
  return slot;
}

std::vector<Root> roots_of_word(const Word& w) {
  if (!is_reduced_for_w0(w)) throw PreconditionError("word is not reduced for w0: " + w.str());
  std::vector<Root> roots;
  roots.reserve(w.letters.size());
  for (size_t t = 0; t < w.letters.size(); ++t) {
    Root r = simple_root(w.letters[t], w.rank);
    for (size_t s = t; s-- > 0;) r = reflect(w.letters[s], r);
    roots.push_back(std::move(r));
  }
  return roots;
}

int chevalley_dual(int i, int rank) {
  if (i < 1 || i > rank) throw PreconditionError("chevalley_dual: index out of range");
  return rank + 1 - i;
}

Word rotate_word(const Word& w) {
  Word r{w.rank, {}};
  r.letters.assign(w.letters.begin() + 1, w.letters.end());
  r.letters.push_back(chevalley_dual(w.letters.front(), w.rank));
  return r;
}

std::vector<int> sinks(const Quiver& q) {
  std::vector<int> out;
  for (int v = 1; v <= q.rank; ++v) {
    bool sink = true;
    if (v > 1 && !q.right[v - 2]) sink = false;        // edge v-1 -- v points left
    if (v < q.rank && q.right[v - 1]) sink = false;    // edge v -- v+1 points right
    if (sink) out.push_back(v);
  }
  return out;
}

Quiver reflect_quiver(const Quiver& q, int vertex) {
  Quiver r = q;
  if (vertex > 1) r.right[vertex - 2] = !r.right[vertex - 2];
  if (vertex < q.rank) r.right[vertex - 1] = !r.right[vertex - 1];
  return r;
}

namespace {

bool extend_adapted(const Quiver& q, std::vector<int>& p, Word& w, long target) {
  if (w.length() == target) return is_reduced_for_w0(w);
  for (int s : sinks(q)) {
    // Appending s_s must keep the word reduced: p[s-1] < p[s].
    if (p[s - 1] > p[s]) continue;
    std::swap(p[s - 1], p[s]);
    w.letters.push_back(s);
    if (extend_adapted(reflect_quiver(q, s), p, w, target)) return true;
    w.letters.pop_back();
    std::swap(p[s - 1], p[s]);
  }
  return false;
}

}  // namespace

Word adapted_word(const Quiver& q) {
  Word w{q.rank, {}};
  std::vector<int> p(q.rank + 1);
  std::iota(p.begin(), p.end(), 1);
  if (!extend_adapted(q, p, w, longest_length(q.rank)))
    throw InvariantError("no adapted word found for quiver");
  return w;
}

std::optional<Quiver> adapting_quiver(const Word& w) {
  if (!is_reduced_for_w0(w)) return std::nullopt;
  for (const auto& q0 : all_quivers(w.rank)) {
    Quiver q = q0;
    bool ok = true;
    for (int letter : w.letters) {
      auto s = sinks(q);
      if (std::find(s.begin(), s.end(), letter) == s.end()) {
        ok = false;
        break;
      }
      q = reflect_quiver(q, letter);
    }
    if (ok) return q0;
  }
  return std::nullopt;
}

bool is_adapted(const Word& w) { return adapting_quiver(w).has_value(); }

std::vector<Quiver> all_quivers(int rank) {
  int edges = rank - 1;
  std::vector<Quiver> out;
  for (int mask = 0; mask < (1 << edges); ++mask) {
    Quiver q{rank, std::vector<bool>(edges)};
    for (int e = 0; e < edges; ++e) q.right[e] = (mask >> e) & 1;
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Word> all_adapted_words(int rank) {
  std::set<Word> out;
  for (const auto& w : reduced_words_w0(rank))
    if (is_adapted(w)) out.insert(w);
  return {out.begin(), out.end()};
}

int WordGraph::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || !(*it == w)) return -1;
  return static_cast<int>(it - words.begin());
}

const WordGraph& word_graph(int rank) {
  static std::mutex mu;
  static std::map<int, WordGraph> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;

  WordGraph g;
  g.words = reduced_words_w0(rank);
  g.edges.resize(g.words.size());
  for (size_t i = 0; i < g.words.size(); ++i) {
    for (const auto& mv : applicable_moves(g.words[i])) {
      Word next = apply_braid_move(g.words[i], mv.pos, mv.kind);
      int j = g.index_of(next);
      if (j < 0) throw InvariantError("braid move left R(w0)");
      g.edges[i].emplace_back(j, mv);
    }
    // Lex order on neighbors, so path tie-breaking is deterministic.
    std::sort(g.edges[i].begin(), g.edges[i].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return cache.emplace(rank, std::move(g)).first->second;
}

}  // namespace qpbw::weyl
