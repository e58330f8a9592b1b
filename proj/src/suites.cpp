#include "qpbw/suites.hpp"

namespace qpbw::cli {

long RunConfig::bound() const {
  return weight_bound > 0 ? weight_bound : algebra::Algebra::default_weight_cap(rank);
}

nlohmann::json RunConfig::to_json() const { return nlohmann::json::object(); }

std::vector<weyl::Word> selected_words(const RunConfig& cfg) { return {}; }

Report run_basis(const RunConfig& cfg, algebra::Algebra& alg) { return {}; }

Report run_reparam(const RunConfig& cfg, algebra::Algebra& alg, const weyl::Word& from,
                   const weyl::Word& to, const tropical::ParamVector& m) { return {}; }

Report run_suite(const std::string& name, const RunConfig& cfg, algebra::Algebra& alg) {
  return {};
}

std::vector<Report> run_all_suites(const RunConfig& cfg, algebra::Algebra& alg) { return {}; }

std::vector<std::pair<algebra::Exponent, algebra::WordElt>> enumerate_duals(
    algebra::Algebra& alg, const weyl::Word& w, long bound) { return {}; }

std::vector<weyl::Root> weights_up_to(int rank, long bound) { return {}; }

}  // namespace qpbw::cli
