#include "qpbw/tropical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "qpbw/errors.hpp"

namespace qpbw::tropical {

std::array<long, 3> r_move3(long a, long b, long c) {
  long mu = std::min(a, c);
  return {b + c - mu, mu, a + b - mu};
}

namespace {

void check_param(const weyl::Word& w, const ParamVector& m) {
  if (static_cast<long>(m.size()) != weyl::longest_length(w.rank))
    throw PreconditionError("parameter length does not match N");
}

// Shortest-path predecessor maps, one BFS per source word, cached.
struct PathTable {
  std::vector<int> parent;                 // node index, -1 at source
  std::vector<weyl::BraidMove> via_move;   // move applied at parent
};

const PathTable& paths_from(int rank, int src) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PathTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rank, src);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const auto& g = weyl::word_graph(rank);
  PathTable t;
  t.parent.assign(g.words.size(), -2);
  t.via_move.assign(g.words.size(), weyl::BraidMove{});
  std::deque<int> queue{src};
  t.parent[src] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    // Neighbors in edge order; words are lex-sorted, so among equal-length
    // paths the first discovery is the deterministic choice.
    for (const auto& [v, mv] : g.edges[u]) {
      if (t.parent[v] != -2) continue;
      t.parent[v] = u;
      t.via_move[v] = mv;
      queue.push_back(v);
    }
  }
  return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace

std::vector<weyl::BraidMove> path_between(const weyl::Word& from, const weyl::Word& to) {
  if (from.rank != to.rank) throw PreconditionError("reparametrize: rank mismatch");
  const auto& g = weyl::word_graph(from.rank);
  int a = g.index_of(from), b = g.index_of(to);
  if (a < 0) throw PreconditionError("word is not reduced for w0: " + from.str());
  if (b < 0) throw PreconditionError("word is not reduced for w0: " + to.str());
  const auto& t = paths_from(from.rank, a);
  std::vector<weyl::BraidMove> rev;
  for (int cur = b; t.parent[cur] != -1; cur = t.parent[cur]) rev.push_back(t.via_move[cur]);
  return {rev.rbegin(), rev.rend()};
}

void apply_move_in_place(ParamVector& m, const weyl::BraidMove& mv) {
  int k = mv.pos - 1;
  if (mv.kind == weyl::MoveKind::Swap2) {
    std::swap(m[k], m[k + 1]);
  } else {
    auto [a, b, c] = r_move3(m[k], m[k + 1], m[k + 2]);
    m[k] = a;
    m[k + 1] = b;
    m[k + 2] = c;
  }
}

ParamVector reparametrize(const weyl::Word& from, const weyl::Word& to, const ParamVector& m) {
  check_param(from, m);
  ParamVector out = m;
  for (const auto& mv : path_between(from, to)) apply_move_in_place(out, mv);
  return out;
}

std::vector<int> walls(const weyl::Word& w) {
  std::vector<int> out;
  const auto& l = w.letters;
  for (int k = 0; k + 2 < w.length(); ++k)
    if (l[k] == l[k + 2] && std::abs(l[k] - l[k + 1]) == 1) out.push_back(k + 1);
  return out;
}

bool is_regular(const weyl::Word& base, const ParamVector& m) {
  check_param(base, m);
  for (const auto& w : weyl::reduced_words_w0(base.rank)) {
    ParamVector p = reparametrize(base, w, m);
    for (int k : walls(w))
      if (p[k - 1] == p[k + 1]) return false;
  }
  return true;
}

namespace {

int sign_of(long v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

bool weak_side_check(const weyl::Word& base, const std::vector<ParamVector>& points,
                     std::optional<DomainWitness>* witness) {
  for (const auto& w : weyl::reduced_words_w0(base.rank)) {
    std::vector<ParamVector> imgs;
    imgs.reserve(points.size());
    for (const auto& p : points) imgs.push_back(reparametrize(base, w, p));
    for (int k : walls(w)) {
      int seen = 0;
      for (const auto& img : imgs) {
        int s = sign_of(img[k - 1] - img[k + 1]);
        if (s == 0) continue;
        if (seen == 0) {
          seen = s;
        } else if (seen != s) {
          if (witness) *witness = DomainWitness{w, k};
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

DomainCheck same_linearity_domain(const weyl::Word& base, const ParamVector& m,
                                  const ParamVector& m2) {
  check_param(base, m);
  check_param(base, m2);
  for (const auto& v : {m, m2})
    for (long e : v)
      if (e < 0) throw PreconditionError("same_linearity_domain: negative entry");

  DomainCheck out;
  ParamVector sum(m.size());
  for (size_t i = 0; i < m.size(); ++i) sum[i] = m[i] + m2[i];
  out.additivity = true;
  for (const auto& w : weyl::reduced_words_w0(base.rank)) {
    ParamVector a = reparametrize(base, w, m);
    ParamVector b = reparametrize(base, w, m2);
    ParamVector s = reparametrize(base, w, sum);
    for (size_t i = 0; i < s.size(); ++i)
      if (s[i] != a[i] + b[i]) {
        out.additivity = false;
        break;
      }
    if (!out.additivity) break;
  }
  out.weak_side = weak_side_check(base, {m, m2}, &out.witness);
  if (out.additivity != out.weak_side)
    throw InvariantError("linearity-domain characterizations disagree");
  out.same = out.additivity;
  if (out.same) out.witness.reset();
  return out;
}

bool all_in_single_domain(const weyl::Word& base, const std::vector<ParamVector>& points) {
  for (const auto& p : points) check_param(base, p);
  return weak_side_check(base, points, nullptr);
}

bool samedomain_triple_check(const weyl::Word& base, const std::vector<ParamVector>& parts,
                             const ParamVector& q) {
  if (parts.empty()) throw PreconditionError("samedomain_triple_check: no parts");
  ParamVector sum(q.size(), 0);
  for (const auto& p : parts) {
    check_param(base, p);
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += p[i];
  }
  std::vector<ParamVector> hyp = parts;
  hyp.push_back(sum);
  if (!all_in_single_domain(base, hyp))
    throw PreconditionError("parts and their sum do not share a linearity domain");
  if (!same_linearity_domain(base, sum, q).same)
    throw PreconditionError("sum and q do not share a linearity domain");
  hyp.push_back(q);
  return all_in_single_domain(base, hyp);
}

}  // namespace qpbw::tropical
