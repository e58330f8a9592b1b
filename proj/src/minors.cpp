#include "qpbw/algebra.hpp"
#include "qpbw/errors.hpp"
#include "caches.hpp"

namespace qpbw::algebra {

std::optional<long> Algebra::q_commutation(const WordElt& x, const WordElt& y) const {
  if (x.rank() != rank_ || y.rank() != rank_) throw PreconditionError("rank mismatch");
  PBWVector xy = to_pbw(mul(x, y), base_word_);
  PBWVector yx = to_pbw(mul(y, x), base_word_);
  if (xy.terms.empty() && yx.terms.empty()) return 0;
  if (xy.terms.size() != yx.terms.size()) return std::nullopt;
  std::optional<std::pair<int, long>> ratio;
  for (const auto& [m, c] : xy.terms) {
    auto it = yx.terms.find(m);
    if (it == yx.terms.end()) return std::nullopt;
    auto r = coeff::proportionality(it->second, c);
    if (!r) return std::nullopt;
    if (!ratio)
      ratio = r;
    else if (*ratio != *r)
      return std::nullopt;
  }
  if (ratio->first != 1) return std::nullopt;
  return ratio->second;
}

long Algebra::d_form(const weyl::Word& w, const Exponent& m, const Exponent& n) const {
  std::vector<weyl::Root> roots;
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->roots.find(w);
    if (it == caches_->roots.end()) it = caches_->roots.emplace(w, weyl::roots_of_word(w)).first;
    roots = it->second;
  }
  const size_t N = roots.size();
  if (m.size() != N || n.size() != N) throw PreconditionError("d_form: exponent length != N");
  long d = 0;
  for (size_t i = 0; i < N; ++i) {
    d += m[i] * n[i];
    for (size_t j = 0; j < i; ++j)
      d += weyl::cartan_pairing(roots[i], roots[j]) * m[i] * n[j];
  }
  return d;
}

Exponent Algebra::flag_minor_exponent(const weyl::Word& w, int k) const {
  if (k < 1 || k > w.length()) throw PreconditionError("flag minor index out of range");
  Exponent n(w.length(), 0);
  for (int t = 0; t < k; ++t)
    if (w.letters[t] == w.letters[k - 1]) n[t] = 1;
  return n;
}

WordElt Algebra::flag_minor(const weyl::Word& w, int k) const {
  if (!weyl::is_adapted(w))
    throw PreconditionError("flag minors are realized over adapted words only");
  return dual_canonical(w, flag_minor_exponent(w, k));
}

}  // namespace qpbw::algebra
