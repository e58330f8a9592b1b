#include "qpbw/laurent.hpp"

#include <sstream>
#include <vector>

#include "qpbw/errors.hpp"

namespace qpbw::coeff {

LaurentPoly LaurentPoly::monomial(const mpz_class& c, long exp) {
  LaurentPoly p;
  p.set(exp, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

mpz_class LaurentPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::set(long exp, const mpz_class& c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

void LaurentPoly::add_term(long exp, const mpz_class& c) {
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

long LaurentPoly::min_exp() const {
  if (is_zero()) throw InvariantError("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (is_zero()) throw InvariantError("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

const mpz_class& LaurentPoly::leading_coeff() const {
  if (is_zero()) throw InvariantError("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

const mpz_class& LaurentPoly::trailing_coeff() const {
  if (is_zero()) throw InvariantError("trailing_coeff of zero polynomial");
  return terms_.begin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::optional<std::pair<int, long>> LaurentPoly::as_signed_q_power() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (c == 1) return std::make_pair(1, e);
  if (c == -1) return std::make_pair(-1, e);
  return std::nullopt;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    long e = it->first;
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

// Dense ordinary-polynomial view, coefficients c[0..deg], c[deg] != 0.
std::vector<mpz_class> to_dense(const LaurentPoly& p) {
  long lo = p.min_exp(), hi = p.max_exp();
  std::vector<mpz_class> c(static_cast<size_t>(hi - lo) + 1, mpz_class(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e - lo)] = v;
  return c;
}

LaurentPoly from_dense(const std::vector<mpz_class>& c) {
  LaurentPoly p;
  for (size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<long>(i), c[i]);
  return p;
}

void make_primitive(std::vector<mpz_class>& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : a) c /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  auto normalize = [](const LaurentPoly& p) {
    auto d = to_dense(p);
    make_primitive(d);
    return d;
  };
  if (a.is_zero()) return from_dense(normalize(b));
  if (b.is_zero()) return from_dense(normalize(a));
  std::vector<mpz_class> x = normalize(a), y = normalize(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    auto r = prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  return from_dense(x);
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InvariantError("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  // Work over Q via mpq, then check integrality.
  long sa = a.min_exp(), sb = b.min_exp();
  auto da = to_dense(a);
  auto db = to_dense(b);
  if (da.size() < db.size()) throw InvariantError("inexact polynomial division");
  std::vector<mpq_class> rem(da.begin(), da.end());
  std::vector<mpq_class> quot(da.size() - db.size() + 1, mpq_class(0));
  mpq_class lb(db.back());
  for (size_t k = rem.size(); k-- >= db.size();) {
    if (rem[k] == 0) continue;
    mpq_class f = rem[k] / lb;
    size_t shift = k - (db.size() - 1);
    quot[shift] = f;
    for (size_t i = 0; i < db.size(); ++i) rem[i + shift] -= f * db[i];
    if (k == 0) break;
  }
  for (const auto& r : rem)
    if (r != 0) throw InvariantError("inexact polynomial division (remainder)");
  LaurentPoly q;
  for (size_t i = 0; i < quot.size(); ++i) {
    mpq_class v = quot[i];
    v.canonicalize();
    if (v.get_den() != 1) throw InvariantError("inexact polynomial division (fraction)");
    q.add_term(static_cast<long>(i) + sa - sb, mpz_class(v.get_num()));
  }
  return q;
}

LaurentPoly quantum_integer(long m) {
  if (m < 0) throw PreconditionError("quantum_integer: m < 0");
  LaurentPoly p;
  for (long k = m - 1; k >= -m + 1; k -= 2) p.add_term(k, 1);
  return p;
}

LaurentPoly quantum_factorial(long m) {
  if (m < 0) throw PreconditionError("quantum_factorial: m < 0");
  LaurentPoly p(1);
  for (long k = 1; k <= m; ++k) p *= quantum_integer(k);
  return p;
}

LaurentPoly psi(long m) {
  if (m < 0) throw PreconditionError("psi: m < 0");
  LaurentPoly p(1);
  for (long k = 1; k <= m; ++k) {
    LaurentPoly f(1);
    f.add_term(2 * k, -1);
    p *= f;
  }
  return p;
}

}  // namespace qpbw::coeff
