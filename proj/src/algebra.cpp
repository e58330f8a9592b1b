#include "qpbw/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qpbw/errors.hpp"
#include "caches.hpp"

namespace qpbw::algebra {

namespace {

const RationalFunction& e_norm() {
  // (1 - q^2)^{-1}: the generator pairing and the target root-vector norm.
  static const RationalFunction e = [] {
    LaurentPoly d(1);
    d.add_term(2, -1);
    return RationalFunction(LaurentPoly(1), d);
  }();
  return e;
}

// (x, F-image of y): the pairing extended linearly over the words of y.
RationalFunction pair_elts(const PairingTable& px, const WordElt& y) {
  RationalFunction s;
  for (const auto& [u, c] : y.terms()) s += c * px.at(u);
  return s;
}

// Solve A a = b by Gaussian elimination, exact.  A is square and must be
// invertible.
std::vector<RationalFunction> linear_solve(std::vector<std::vector<RationalFunction>> A,
                                           std::vector<RationalFunction> b) {
  size_t n = A.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && A[piv][col].is_zero()) ++piv;
    if (piv == n) throw InvariantError("singular Gram system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      RationalFunction f = A[r][col] / A[col][col];
      for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<RationalFunction> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

}  // namespace

const Exponent& PBWVector::lex_max() const {
  if (terms.empty()) throw PreconditionError("lex_max of zero PBW vector");
  return terms.rbegin()->first;
}

int Context::index_of(const Exponent& m) const {
  auto it = std::lower_bound(exponents.begin(), exponents.end(), m);
  if (it == exponents.end() || *it != m) return -1;
  return static_cast<int>(it - exponents.begin());
}

int TransitionTable::index_of(const Exponent& m) const {
  auto it = std::lower_bound(exponents.begin(), exponents.end(), m);
  if (it == exponents.end() || *it != m) return -1;
  return static_cast<int>(it - exponents.begin());
}

long Algebra::default_weight_cap(int rank) {
  switch (rank) {
    case 1:
    case 2:
      return 8;
    case 3:
      return 6;
    default:
      return 4;
  }
}

Algebra::Algebra(int rank) : Algebra(rank, default_weight_cap(rank)) {}

Algebra::Algebra(int rank, long weight_cap)
    : rank_(rank),
      weight_cap_(weight_cap),
      base_word_(weyl::seed_word_w0(rank)),
      caches_(std::make_shared<Caches>()) {
  if (rank < 1 || rank > weyl::kRankCap)
    throw CapacityError("rank must be within [1, " + std::to_string(weyl::kRankCap) + "]");
}

void Algebra::set_cache_dir(const std::filesystem::path& dir) { cache_dir_ = dir; }

CacheStats Algebra::cache_stats() const {
  std::lock_guard<std::mutex> lock(caches_->mu);
  return caches_->stats;
}

void Algebra::check_weight_cap(const weyl::Root& alpha) const {
  if (alpha.trace() > weight_cap_)
    throw CapacityError("weight trace " + std::to_string(alpha.trace()) +
                        " exceeds cap " + std::to_string(weight_cap_));
}

const weyl::Word& Algebra::word_starting_with(int i) const {
  if (i < 1 || i > rank_) throw PreconditionError("letter out of range");
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->start_words.find(i);
    if (it != caches_->start_words.end()) return it->second;
  }
  for (const auto& w : weyl::reduced_words_w0(rank_)) {
    if (w.letters.front() == i) {
      std::lock_guard<std::mutex> lock(caches_->mu);
      return caches_->start_words.emplace(i, w).first->second;
    }
  }
  throw InvariantError("no reduced word starts with the given letter");
}

std::vector<WordElt> Algebra::build_root_vectors(const weyl::Word& w) const {
  auto roots = weyl::roots_of_word(w);
  const int N = static_cast<int>(roots.size());
  std::vector<WordElt> vec(N);
  std::vector<int> order(N);
  for (int t = 0; t < N; ++t) order[t] = t;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return roots[a].trace() < roots[b].trace(); });

  for (int t : order) {
    const weyl::Root& beta = roots[t];
    if (beta.trace() == 1) {
      int i = 0;
      for (int k = 0; k < rank_; ++k)
        if (beta.coords[k] == 1) i = k + 1;
      vec[t] = WordElt::generator(rank_, i);
      continue;
    }
    // Pair (r, s), r < t < s, beta_r + beta_s = beta_t, maximizing r.
    int br = -1, bs = -1;
    for (int r = t - 1; r >= 0 && br < 0; --r)
      for (int s = t + 1; s < N; ++s)
        if (roots[r] + roots[s] == beta) {
          br = r;
          bs = s;
          break;
        }
    if (br < 0) throw InvariantError("no convex splitting for root " + beta.str());
    if (weyl::cartan_pairing(roots[br], roots[bs]) != -1)
      throw InvariantError("unexpected pairing for split of " + beta.str());
    // The q-commutator seeding the direction and the sign.
    WordElt C = mul(vec[bs], vec[br]) +
                mul(vec[br], vec[bs]).scaled(-RationalFunction::q_power(1));

    // Orthogonalize against the PBW monomials of the same weight built from
    // lower roots, then rescale to the norm (1-q^2)^{-1}.
    auto exps = exponents_of_weight(w, beta);
    std::vector<Exponent> others;
    std::vector<WordElt> other_monomials;
    for (const auto& m : exps) {
      bool self = true;
      for (int u = 0; u < N; ++u)
        if (m[u] != (u == t ? 1 : 0)) self = false;
      if (self) continue;
      others.push_back(m);
      WordElt mono = WordElt::unit(rank_);
      for (int u = 0; u < N; ++u) {
        for (long p = 0; p < m[u]; ++p) mono = mul(mono, vec[u]);
        if (m[u] > 1)
          mono = mono.scaled(RationalFunction(1) /
                             RationalFunction(coeff::quantum_factorial(m[u])));
      }
      other_monomials.push_back(std::move(mono));
    }
    WordElt v = C;
    if (!others.empty()) {
      PairingTable pc = all_pairings(C);
      std::vector<PairingTable> pm;
      pm.reserve(other_monomials.size());
      for (const auto& mono : other_monomials) pm.push_back(all_pairings(mono));
      size_t k = others.size();
      std::vector<std::vector<RationalFunction>> G(k, std::vector<RationalFunction>(k));
      std::vector<RationalFunction> rhs(k);
      for (size_t a = 0; a < k; ++a) {
        rhs[a] = pair_elts(pc, other_monomials[a]);
        for (size_t b = 0; b < k; ++b) G[a][b] = pair_elts(pm[b], other_monomials[a]);
      }
      auto sol = linear_solve(G, rhs);
      for (size_t b = 0; b < k; ++b)
        v += other_monomials[b].scaled(-sol[b]);
    }
    PairingTable pv = all_pairings(v);
    RationalFunction nu = pair_elts(pv, v);
    if (nu.is_zero()) throw InvariantError("root vector norm vanished at " + beta.str());
    auto rho = (e_norm() / nu).as_signed_q_power();
    if (!rho || rho->first != 1 || rho->second % 2 != 0)
      throw InvariantError("root vector normalization failed at " + beta.str() +
                           ": norm ratio " + (e_norm() / nu).str());
    vec[t] = v.scaled(RationalFunction::q_power(rho->second / 2));
  }
  return vec;
}

const std::vector<WordElt>& Algebra::root_vectors(const weyl::Word& w) const {
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->root_vectors.find(w);
    if (it != caches_->root_vectors.end()) return it->second;
  }
  auto built = build_root_vectors(w);
  std::lock_guard<std::mutex> lock(caches_->mu);
  return caches_->root_vectors.emplace(w, std::move(built)).first->second;
}

WordElt Algebra::root_vector(const weyl::Word& w, int t) const {
  const auto& vec = root_vectors(w);
  if (t < 1 || t > static_cast<int>(vec.size()))
    throw PreconditionError("root vector index out of range");
  return vec[t - 1];
}

WordElt Algebra::pbw_monomial(const weyl::Word& w, const Exponent& m) const {
  const auto& vec = root_vectors(w);
  if (m.size() != vec.size()) throw PreconditionError("exponent length != N");
  WordElt out = WordElt::unit(rank_);
  for (size_t t = 0; t < m.size(); ++t) {
    if (m[t] < 0) throw PreconditionError("negative exponent");
    for (long p = 0; p < m[t]; ++p) out = mul(out, vec[t]);
    if (m[t] > 1)
      out = out.scaled(RationalFunction(1) /
                       RationalFunction(coeff::quantum_factorial(m[t])));
  }
  return out;
}

std::vector<Exponent> Algebra::exponents_of_weight(const weyl::Word& w,
                                                   const weyl::Root& alpha) const {
  std::vector<weyl::Root> roots;
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->roots.find(w);
    if (it == caches_->roots.end()) it = caches_->roots.emplace(w, weyl::roots_of_word(w)).first;
    roots = it->second;
  }
  const int N = static_cast<int>(roots.size());
  std::vector<Exponent> out;
  Exponent cur(N, 0);
  weyl::Root rem = alpha;
  auto rec = [&](auto&& self, int t) -> void {
    if (rem.is_zero() && t <= N) {
      Exponent full = cur;
      out.push_back(full);
      // Continue only to place zeros; remaining positions already zero.
      return;
    }
    if (t == N) return;
    // Max multiple of roots[t] fitting in rem.
    long maxm = -1;
    for (int k = 0; k < rank_; ++k) {
      if (roots[t].coords[k] == 0) continue;
      long fit = rem.coords[k] / roots[t].coords[k];
      maxm = maxm < 0 ? fit : std::min(maxm, fit);
    }
    for (long mt = maxm; mt >= 0; --mt) {
      cur[t] = mt;
      for (int k = 0; k < rank_; ++k) rem.coords[k] -= mt * roots[t].coords[k];
      bool ok = true;
      for (int k = 0; k < rank_; ++k)
        if (rem.coords[k] < 0) ok = false;
      if (ok) self(self, t + 1);
      for (int k = 0; k < rank_; ++k) rem.coords[k] += mt * roots[t].coords[k];
      cur[t] = 0;
    }
  };
  if (static_cast<int>(alpha.coords.size()) != rank_)
    throw PreconditionError("weight rank mismatch");
  bool nonneg = std::all_of(alpha.coords.begin(), alpha.coords.end(),
                            [](long c) { return c >= 0; });
  if (nonneg) rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::unique_ptr<Context> Algebra::build_context(const weyl::Word& w,
                                                const weyl::Root& alpha) const {
  auto ctx = std::make_unique<Context>();
  ctx->word = w;
  ctx->weight = alpha;
  ctx->exponents = exponents_of_weight(w, alpha);
  ctx->monomials.reserve(ctx->exponents.size());
  ctx->psi_product.reserve(ctx->exponents.size());
  for (const auto& m : ctx->exponents) {
    ctx->monomials.push_back(pbw_monomial(w, m));
    LaurentPoly pp(1);
    for (long mt : m) pp *= coeff::psi(mt);
    ctx->psi_product.emplace_back(pp);
  }
  // Gram must be diagonal with entry exactly 1 / prod psi_{m_t}(q^2); this is
  // the dual PBW law and any failure is a convention bug.
  ctx->gram.resize(ctx->exponents.size());
  for (size_t j = 0; j < ctx->exponents.size(); ++j) {
    PairingTable pt = all_pairings(ctx->monomials[j]);
    for (size_t i = 0; i < ctx->exponents.size(); ++i) {
      RationalFunction g = pair_elts(pt, ctx->monomials[i]);
      if (i == j) {
        if (!(g * ctx->psi_product[j]).is_one())
          throw InvariantError("Gram diagonal is not 1/psi at weight " + alpha.str() +
                               " word " + w.str());
        ctx->gram[j] = g;
      } else if (!g.is_zero()) {
        throw InvariantError("Gram matrix not diagonal at weight " + alpha.str() + " word " +
                             w.str());
      }
    }
  }
  return ctx;
}

const Context& Algebra::context(const weyl::Word& w, const weyl::Root& alpha) const {
  auto key = std::make_pair(w, alpha);
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->contexts.find(key);
    if (it != caches_->contexts.end()) return *it->second;
  }
  auto built = build_context(w, alpha);
  std::lock_guard<std::mutex> lock(caches_->mu);
  auto [it, fresh] = caches_->contexts.emplace(key, std::move(built));
  return *it->second;
}

std::map<Exponent, RationalFunction> Algebra::coords_from_pairings(const PairingTable& pt,
                                                                   const Context& ctx) const {
  std::map<Exponent, RationalFunction> out;
  for (size_t i = 0; i < ctx.exponents.size(); ++i) {
    RationalFunction v = pair_elts(pt, ctx.monomials[i]);
    if (v.is_zero()) continue;
    out.emplace(ctx.exponents[i], v / ctx.gram[i]);
  }
  return out;
}

PBWVector Algebra::to_pbw(const WordElt& x, const weyl::Word& w) const {
  PBWVector out;
  out.word = w;
  if (x.empty()) return out;
  if (x.rank() != rank_) throw PreconditionError("rank mismatch");
  const Context& ctx = context(w, x.weight());
  PairingTable pt = all_pairings(x);
  out.terms = coords_from_pairings(pt, ctx);
  return out;
}

WordElt Algebra::from_pbw(const PBWVector& v) const {
  WordElt out(rank_);
  for (const auto& [m, c] : v.terms) out += pbw_monomial(v.word, m).scaled(c);
  return out;
}

bool Algebra::is_zero(const WordElt& x) const {
  if (x.empty()) return true;
  return all_pairings(x).is_zero();
}

bool Algebra::equal(const WordElt& x, const WordElt& y) const { return is_zero(x - y); }

}  // namespace qpbw::algebra
