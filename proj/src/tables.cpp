#include <algorithm>
#include <mutex>

#include "qpbw/algebra.hpp"
#include "qpbw/cache.hpp"
#include "qpbw/errors.hpp"
#include "caches.hpp"

namespace qpbw::algebra {

namespace {

// f - bar(f) = r with f in qZ[q]; r must be a skew Laurent polynomial with no
// constant term.
RationalFunction solve_skew(const RationalFunction& r) {
  if (r.is_zero()) return RationalFunction();
  if (!r.is_laurent()) throw InvariantError("bar solve: right side not Laurent: " + r.str());
  const LaurentPoly& p = r.as_laurent();
  if (!(p.bar() + p).is_zero() || p.coeff(0) != 0)
    throw InvariantError("bar solve: right side not skew: " + r.str());
  LaurentPoly f;
  for (const auto& [e, c] : p.terms())
    if (e > 0) f.set(e, c);
  return RationalFunction(f);
}

}  // namespace

std::unique_ptr<TransitionTable> Algebra::build_table(const weyl::Word& w,
                                                      const weyl::Root& alpha) const {
  const Context& ctx = context(w, alpha);
  auto t = std::make_unique<TransitionTable>();
  t->word = w;
  t->weight = alpha;
  t->exponents = ctx.exponents;
  t->gram = ctx.gram;
  t->psi_product = ctx.psi_product;
  const size_t n = ctx.exponents.size();

  // Bar matrix: coordinates of eta(E(m_j)) over the PBW basis.
  t->bar.assign(n, std::vector<RationalFunction>(n));
  for (size_t j = 0; j < n; ++j) {
    PBWVector col = to_pbw(eta(ctx.monomials[j]), w);
    for (const auto& [m, c] : col.terms) {
      int i = ctx.index_of(m);
      if (i < 0) throw InvariantError("bar image leaves the weight space");
      t->bar[i][j] = c;
    }
    for (size_t i = 0; i < n; ++i) {
      const RationalFunction& c = t->bar[i][j];
      if (c.is_zero()) continue;
      if (!c.is_laurent())
        throw InvariantError("bar matrix entry not Laurent at " + w.str() + " " + alpha.str());
      if (i < j)
        throw InvariantError("bar matrix not triangular at " + w.str() + " " + alpha.str());
      if (i == j && !c.is_one())
        throw InvariantError("bar matrix diagonal not 1 at position " +
                             std::to_string(j) + ", " + w.str() + " " + alpha.str());
    }
  }

  // Canonical transition P: B(m_j) = sum_i P[i][j] E(m_i), the unique
  // unitriangular bar-fixed solution with off-diagonal entries in qZ[q].
  t->canonical.assign(n, std::vector<RationalFunction>(n));
  for (size_t j = 0; j < n; ++j) {
    t->canonical[j][j] = RationalFunction(1);
    for (size_t i = j + 1; i < n; ++i) {
      RationalFunction r;
      for (size_t k = j; k < i; ++k) {
        if (t->bar[i][k].is_zero() || t->canonical[k][j].is_zero()) continue;
        r += t->bar[i][k] * t->canonical[k][j].bar();
      }
      t->canonical[i][j] = solve_skew(r);
      if (!t->canonical[i][j].in_q_shifted_poly(1))
        throw InvariantError("canonical coefficient outside qZ[q]");
    }
  }
  // Verify bar-fixedness: bar(P) = means columns satisfy P = M bar(P).
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      RationalFunction s;
      for (size_t k = j; k <= i && k < n; ++k)
        s += t->bar[i][k] * t->canonical[k][j].bar();
      if (!(s - t->canonical[i][j]).is_zero())
        throw InvariantError("canonical solve is not bar-fixed");
    }

  // Dual transition: inverse-transpose of P.
  std::vector<std::vector<RationalFunction>> inv(n, std::vector<RationalFunction>(n));
  for (size_t j = 0; j < n; ++j) {
    inv[j][j] = RationalFunction(1);
    for (size_t i = j + 1; i < n; ++i) {
      RationalFunction s;
      for (size_t k = j; k < i; ++k) s += t->canonical[i][k] * inv[k][j];
      inv[i][j] = -s;
    }
  }
  t->dual.assign(n, std::vector<RationalFunction>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      t->dual[i][j] = inv[j][i];
      if (i < j && !t->dual[i][j].in_q_shifted_poly(1))
        throw InvariantError("dual coefficient outside qZ[q]");
      if (i > j && !t->dual[i][j].is_zero())
        throw InvariantError("dual transition not triangular");
    }
  return t;
}

const TransitionTable& Algebra::table(const weyl::Word& w, const weyl::Root& alpha) const {
  check_weight_cap(alpha);
  auto key = std::make_pair(w, alpha);
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->tables.find(key);
    if (it != caches_->tables.end()) {
      ++caches_->stats.hits;
      return *it->second;
    }
  }
  std::unique_ptr<TransitionTable> built;
  bool from_disk = false;
  if (!cache_dir_.empty()) {
    if (auto loaded = cache::load_table(cache_dir_, rank_, w, alpha)) {
      built = std::make_unique<TransitionTable>(std::move(*loaded));
      from_disk = true;
    }
  }
  if (!built) {
    built = build_table(w, alpha);
    if (!cache_dir_.empty()) cache::store_table(cache_dir_, rank_, *built);
  }
  std::lock_guard<std::mutex> lock(caches_->mu);
  if (from_disk)
    ++caches_->stats.hits;
  else
    ++caches_->stats.misses;
  auto [it, fresh] = caches_->tables.emplace(key, std::move(built));
  return *it->second;
}

WordElt Algebra::canonical_element(const weyl::Word& w, const Exponent& m) const {
  weyl::Root alpha = [&] {
    auto roots = weyl::roots_of_word(w);
    weyl::Root a;
    a.coords.assign(rank_, 0);
    for (size_t t = 0; t < m.size(); ++t)
      for (int k = 0; k < rank_; ++k) a.coords[k] += m[t] * roots[t].coords[k];
    return a;
  }();
  const TransitionTable& t = table(w, alpha);
  const Context& ctx = context(w, alpha);
  int j = t.index_of(m);
  if (j < 0) throw PreconditionError("exponent not in the weight space");
  WordElt out(rank_);
  for (size_t i = 0; i < t.exponents.size(); ++i)
    if (!t.canonical[i][j].is_zero()) out += ctx.monomials[i].scaled(t.canonical[i][j]);
  return out;
}

WordElt Algebra::dual_canonical(const weyl::Word& w, const Exponent& m) const {
  weyl::Root alpha;
  alpha.coords.assign(rank_, 0);
  {
    auto roots = weyl::roots_of_word(w);
    for (size_t t = 0; t < m.size(); ++t)
      for (int k = 0; k < rank_; ++k) alpha.coords[k] += m[t] * roots[t].coords[k];
  }
  auto key = std::make_pair(w, alpha);
  const TransitionTable& t = table(w, alpha);
  const Context& ctx = context(w, alpha);
  int j = t.index_of(m);
  if (j < 0) throw PreconditionError("exponent not in the weight space");
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->duals.find(key);
    if (it != caches_->duals.end()) return it->second[j];
  }

  const size_t n = t.exponents.size();
  std::vector<WordElt> duals;
  duals.reserve(n);
  for (size_t col = 0; col < n; ++col) {
    WordElt X(rank_);
    for (size_t i = 0; i < n; ++i) {
      if (t.dual[i][col].is_zero()) continue;
      X += ctx.monomials[i].scaled(t.dual[i][col] * t.psi_product[i]);
    }
    duals.push_back(std::move(X));
  }
  // Verify the characterizing identity eta(X) = (-1)^tr q^{-<wt,wt>/2} q^{-tr}
  // sigma(X) on every element of the weight space.
  long tr = alpha.trace();
  long pair = weyl::cartan_pairing(alpha, alpha);
  if (pair % 2 != 0) throw InvariantError("odd <wt,wt>");
  RationalFunction lambda = RationalFunction::q_power(-pair / 2 - tr);
  if (tr % 2 != 0) lambda = -lambda;
  for (size_t col = 0; col < n; ++col) {
    WordElt diff = eta(duals[col]) - sigma(duals[col]).scaled(lambda);
    if (!is_zero(diff))
      throw InvariantError("dual canonical element fails its eta/sigma identity at " +
                           w.str() + " " + alpha.str());
  }
  std::lock_guard<std::mutex> lock(caches_->mu);
  auto [it, fresh] = caches_->duals.emplace(key, std::move(duals));
  return it->second[j];
}

std::map<Exponent, RationalFunction> Algebra::dual_coords(const WordElt& x,
                                                          const weyl::Word& w) const {
  std::map<Exponent, RationalFunction> out;
  if (x.empty()) return out;
  const Context& ctx = context(w, x.weight());
  PBWVector v = to_pbw(x, w);
  for (const auto& [m, c] : v.terms) {
    int i = ctx.index_of(m);
    out.emplace(m, c / ctx.psi_product[i]);
  }
  return out;
}

std::optional<std::pair<Exponent, long>> Algebra::is_dual_canonical(const WordElt& x,
                                                                    const weyl::Word& w,
                                                                    bool strict) const {
  if (x.empty()) return std::nullopt;
  auto a = dual_coords(x, w);
  if (a.empty()) return std::nullopt;
  const Exponent& m = a.rbegin()->first;
  auto lead = a.rbegin()->second.as_signed_q_power();
  if (!lead || lead->first != 1) return std::nullopt;
  long k = lead->second;
  if (strict && k != 0) return std::nullopt;
  for (const auto& [nexp, c] : a) {
    if (nexp == m) continue;
    if (!c.in_q_shifted_poly(k + 1)) return std::nullopt;
  }
  // sigma.eta(x) must be proportional to x (necessarily by +-q^j).
  auto b = dual_coords(sigma(eta(x)), w);
  if (b.size() != a.size()) return std::nullopt;
  std::optional<std::pair<int, long>> ratio;
  for (const auto& [nexp, c] : a) {
    auto it = b.find(nexp);
    if (it == b.end()) return std::nullopt;
    auto r = coeff::proportionality(it->second, c);
    if (!r) return std::nullopt;
    if (!ratio)
      ratio = r;
    else if (*ratio != *r)
      return std::nullopt;
  }
  return std::make_pair(m, k);
}

Exponent Algebra::lusztig_parameter(const WordElt& x, const weyl::Word& w) const {
  auto id = is_dual_canonical(x, w, false);
  if (!id)
    throw PreconditionError("element is not dual canonical up to a q-power");
  return id->first;
}

}  // namespace qpbw::algebra
