#include "qpbw/serialize.hpp"

#include <sstream>

#include "qpbw/errors.hpp"

namespace qpbw::serialize {

json to_json(const coeff::LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

coeff::LaurentPoly laurent_from_json(const json& j) {
  coeff::LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long e = std::stol(it.key());
    mpz_class c(it.value().get<std::string>());
    p.set(e, c);
  }
  return p;
}

json to_json(const coeff::RationalFunction& x) {
  return json{{"num", to_json(x.num())}, {"den", to_json(x.den())}};
}

coeff::RationalFunction rational_from_json(const json& j) {
  return coeff::RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const weyl::Word& w) { return json(w.letters); }

weyl::Word word_from_json(const json& j, int rank) {
  weyl::Word w{rank, {}};
  for (const auto& v : j) w.letters.push_back(v.get<int>());
  return w;
}

json to_json(const weyl::Quiver& q) {
  json j = json::array();
  for (bool r : q.right) j.push_back(r ? "lr" : "rl");
  return j;
}

weyl::Quiver quiver_from_json(const json& j) {
  weyl::Quiver q;
  q.rank = static_cast<int>(j.size()) + 1;
  for (const auto& v : j) {
    std::string s = v.get<std::string>();
    if (s != "lr" && s != "rl") throw PreconditionError("quiver edge must be 'lr' or 'rl'");
    q.right.push_back(s == "lr");
  }
  return q;
}

json to_json(const weyl::Root& r) { return json(r.coords); }

weyl::Root root_from_json(const json& j) {
  weyl::Root r;
  for (const auto& v : j) r.coords.push_back(v.get<long>());
  return r;
}

json to_json(const tropical::ParamVector& m) { return json(m); }

tropical::ParamVector params_from_json(const json& j) {
  tropical::ParamVector m;
  for (const auto& v : j) m.push_back(v.get<long>());
  return m;
}

json to_json(const algebra::WordElt& x) {
  json j = json::array();
  for (const auto& [w, c] : x.terms()) j.push_back(json::array({json(w), to_json(c)}));
  return j;
}

algebra::WordElt word_elt_from_json(const json& j, int rank) {
  algebra::WordElt x(rank);
  for (const auto& pair : j) {
    algebra::GenWord w;
    for (const auto& v : pair.at(0)) w.push_back(v.get<int>());
    x.add_term(w, rational_from_json(pair.at(1)));
  }
  return x;
}

namespace {

json matrix_to_json(const std::vector<std::vector<coeff::RationalFunction>>& m) {
  json j = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    j.push_back(std::move(r));
  }
  return j;
}

std::vector<std::vector<coeff::RationalFunction>> matrix_from_json(const json& j) {
  std::vector<std::vector<coeff::RationalFunction>> m;
  for (const auto& row : j) {
    std::vector<coeff::RationalFunction> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

json to_json(const algebra::TransitionTable& t) {
  json exps = json::array();
  for (const auto& m : t.exponents) exps.push_back(json(m));
  json gram = json::array();
  for (const auto& g : t.gram) gram.push_back(to_json(g));
  json psi = json::array();
  for (const auto& p : t.psi_product) psi.push_back(to_json(p));
  return json{{"word", to_json(t.word)},     {"weight", to_json(t.weight)},
              {"exponents", exps},           {"gram", gram},
              {"psi_product", psi},          {"bar", matrix_to_json(t.bar)},
              {"canonical", matrix_to_json(t.canonical)}, {"dual", matrix_to_json(t.dual)}};
}

algebra::TransitionTable table_from_json(const json& j, int rank) {
  algebra::TransitionTable t;
  t.word = word_from_json(j.at("word"), rank);
  t.weight = root_from_json(j.at("weight"));
  for (const auto& m : j.at("exponents")) {
    algebra::Exponent e;
    for (const auto& v : m) e.push_back(v.get<long>());
    t.exponents.push_back(std::move(e));
  }
  for (const auto& g : j.at("gram")) t.gram.push_back(rational_from_json(g));
  for (const auto& p : j.at("psi_product")) t.psi_product.push_back(rational_from_json(p));
  t.bar = matrix_from_json(j.at("bar"));
  t.canonical = matrix_from_json(j.at("canonical"));
  t.dual = matrix_from_json(j.at("dual"));
  return t;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& s) {
  std::ostringstream os;
  os << std::hex << fnv1a64(s);
  return os.str();
}

}  // namespace qpbw::serialize
