#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qpbw/algebra.hpp"
#include "qpbw/rational.hpp"
#include "qpbw/tropical.hpp"
#include "qpbw/weyl.hpp"
#include "qpbw/word_elt.hpp"

namespace qpbw::serialize {

using nlohmann::json;

// LaurentPoly <-> {"<exp>": "<coeff>", ...} with decimal strings.
json to_json(const coeff::LaurentPoly& p);
coeff::LaurentPoly laurent_from_json(const json& j);

// RationalFunction <-> {"num": ..., "den": ...}.
json to_json(const coeff::RationalFunction& x);
coeff::RationalFunction rational_from_json(const json& j);

// Word <-> array of letters (rank supplied on read).
json to_json(const weyl::Word& w);
weyl::Word word_from_json(const json& j, int rank);

// Quiver <-> array of "lr"/"rl" edge directions, left-to-right.
json to_json(const weyl::Quiver& q);
weyl::Quiver quiver_from_json(const json& j);

json to_json(const weyl::Root& r);
weyl::Root root_from_json(const json& j);

json to_json(const tropical::ParamVector& m);
tropical::ParamVector params_from_json(const json& j);

// WordElt <-> list of (word, coefficient) pairs sorted lexicographically.
json to_json(const algebra::WordElt& x);
algebra::WordElt word_elt_from_json(const json& j, int rank);

json to_json(const algebra::TransitionTable& t);
algebra::TransitionTable table_from_json(const json& j, int rank);

/// FNV-1a over a string; the stable digest used for cache names and report
/// checksums.
std::uint64_t fnv1a64(const std::string& s);
std::string digest_hex(const std::string& s);

}  // namespace qpbw::serialize
