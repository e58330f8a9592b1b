#include "qpbw/word_elt.hpp"

#include <algorithm>
#include <sstream>

#include "qpbw/errors.hpp"

namespace qpbw::algebra {

namespace {

std::vector<long> content_of(const GenWord& w, int rank) {
  std::vector<long> c(rank, 0);
  for (int letter : w) {
    if (letter < 1 || letter > rank) throw PreconditionError("letter out of range");
    ++c[letter - 1];
  }
  return c;
}

// (alpha_a, alpha_b) for simple roots.
long simple_pairing(int a, int b) {
  if (a == b) return 2;
  return std::abs(a - b) == 1 ? -1 : 0;
}

const RationalFunction& gen_norm() {
  // (1 - q^2)^{-1}, the normalization of delta_i(E_i) and (E_i, F_i).
  static const RationalFunction e = [] {
    LaurentPoly d(1);
    d.add_term(2, -1);
    return RationalFunction(LaurentPoly(1), d);
  }();
  return e;
}

}  // namespace

WordElt WordElt::unit(int rank) {
  WordElt x(rank);
  x.add_term({}, RationalFunction(1));
  return x;
}

WordElt WordElt::generator(int rank, int i) {
  if (i < 1 || i > rank) throw PreconditionError("generator index out of range");
  WordElt x(rank);
  x.add_term({i}, RationalFunction(1));
  return x;
}

bool WordElt::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto first = content_of(terms_.begin()->first, rank_);
  for (const auto& [w, c] : terms_)
    if (content_of(w, rank_) != first) return false;
  return true;
}

weyl::Root WordElt::weight() const {
  weyl::Root r;
  if (terms_.empty()) {
    r.coords.assign(rank_, 0);
    return r;
  }
  if (!is_homogeneous())
    throw PreconditionError("weight of a non-homogeneous element");
  r.coords = content_of(terms_.begin()->first, rank_);
  return r;
}

void WordElt::add_term(const GenWord& w, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WordElt WordElt::operator+(const WordElt& o) const {
  WordElt r = *this;
  r += o;
  return r;
}

WordElt& WordElt::operator+=(const WordElt& o) {
  if (rank_ != o.rank_) throw PreconditionError("rank mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WordElt WordElt::operator-(const WordElt& o) const {
  WordElt r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

WordElt WordElt::scaled(const RationalFunction& c) const {
  WordElt r(rank_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
  return r;
}

RationalFunction WordElt::coeff(const GenWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RationalFunction() : it->second;
}

std::string WordElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*E";
    for (int letter : w) os << letter;
    if (w.empty()) os << "[]";
  }
  return os.str();
}

WordElt mul(const WordElt& x, const WordElt& y) {
  if (x.rank() != y.rank()) throw PreconditionError("mul: rank mismatch");
  WordElt r(x.rank());
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      GenWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      r.add_term(w, cx * cy);
    }
  return r;
}

WordElt eta(const WordElt& x) {
  WordElt r(x.rank());
  for (const auto& [w, c] : x.terms()) r.add_term(w, c.bar());
  return r;
}

WordElt sigma(const WordElt& x) {
  WordElt r(x.rank());
  for (const auto& [w, c] : x.terms()) {
    GenWord rev(w.rbegin(), w.rend());
    r.add_term(rev, c);
  }
  return r;
}

WordElt delta(int i, const WordElt& x) {
  WordElt r(x.rank());
  for (const auto& [w, c] : x.terms()) {
    long pre = 0;  // (prefix weight, alpha_i)
    for (size_t u = 0; u < w.size(); ++u) {
      if (w[u] == i) {
        GenWord rest;
        rest.reserve(w.size() - 1);
        rest.insert(rest.end(), w.begin(), w.begin() + u);
        rest.insert(rest.end(), w.begin() + u + 1, w.end());
        r.add_term(rest, c * gen_norm() * RationalFunction::q_power(-pre));
      }
      pre += simple_pairing(w[u], i);
    }
  }
  return r;
}

RationalFunction pairing(const WordElt& x, const GenWord& fword) {
  WordElt cur = x;
  for (int j : fword) {
    cur = delta(j, cur);
    if (cur.empty()) return RationalFunction();
  }
  return cur.coeff({});
}

RationalFunction PairingTable::at(const GenWord& u) const {
  auto it = values.find(u);
  return it == values.end() ? RationalFunction() : scale * RationalFunction(it->second);
}

namespace {

using LMap = std::map<GenWord, LaurentPoly>;

// delta without the (1-q^2)^{-1} factor, on denominator-cleared coefficients.
LMap delta_cleared(int i, const LMap& x) {
  LMap r;
  for (const auto& [w, c] : x) {
    long pre = 0;
    for (size_t u = 0; u < w.size(); ++u) {
      if (w[u] == i) {
        GenWord rest;
        rest.reserve(w.size() - 1);
        rest.insert(rest.end(), w.begin(), w.begin() + u);
        rest.insert(rest.end(), w.begin() + u + 1, w.end());
        auto [it, fresh] = r.try_emplace(rest);
        it->second += c.shifted(-pre);
        if (it->second.is_zero()) r.erase(it);
      }
      pre += simple_pairing(w[u], i);
    }
  }
  return r;
}

void collect_pairings(const LMap& cur, const std::vector<long>& content, GenWord& prefix,
                      LMap& out) {
  if (cur.empty()) return;
  bool done = true;
  for (long c : content)
    if (c > 0) done = false;
  if (done) {
    auto it = cur.find(GenWord{});
    if (it != cur.end() && !it->second.is_zero()) out.emplace(prefix, it->second);
    return;
  }
  std::vector<long> rest = content;
  for (size_t i = 0; i < content.size(); ++i) {
    if (content[i] == 0) continue;
    LMap child = delta_cleared(static_cast<int>(i) + 1, cur);
    prefix.push_back(static_cast<int>(i) + 1);
    --rest[i];
    collect_pairings(child, rest, prefix, out);
    ++rest[i];
    prefix.pop_back();
  }
}

}  // namespace

PairingTable all_pairings(const WordElt& x) {
  PairingTable t;
  if (x.empty()) {
    t.scale = RationalFunction();
    return t;
  }
  // Clear denominators: common = lcm of all coefficient denominators.
  LaurentPoly common(1);
  for (const auto& [w, c] : x.terms()) {
    LaurentPoly g = coeff::laurent_gcd(common, c.den());
    common = coeff::laurent_div_exact(common * c.den(), g);
  }
  LMap cleared;
  for (const auto& [w, c] : x.terms()) {
    LaurentPoly lifted = c.num() * coeff::laurent_div_exact(common, c.den());
    if (!lifted.is_zero()) cleared.emplace(w, lifted);
  }
  long tr = x.trace();
  RationalFunction e = RationalFunction(1);
  for (long k = 0; k < tr; ++k) e = e * gen_norm();
  t.scale = e / RationalFunction(common);
  std::vector<long> content = x.weight().coords;
  GenWord prefix;
  collect_pairings(cleared, content, prefix, t.values);
  return t;
}

}  // namespace qpbw::algebra
