#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qpbw/algebra.hpp"
#include "qpbw/report.hpp"

namespace qpbw::cli {

/// Shared run configuration.  With a fixed seed every report is
/// byte-identical across reruns.
struct RunConfig {
  int rank = 2;
  long weight_bound = 0;        // 0 -> per-rank default cap
  std::string word = "base";    // "base", "all-adapted", "adapted:EDGES" or comma letters
  std::string cache_dir;
  std::string report_path;
  std::uint64_t seed = 12345;
  long samples = 1000;          // sampling budget per suite at rank >= 3

  long bound() const;
  nlohmann::json to_json() const;
};

/// Words selected by config.word.
std::vector<weyl::Word> selected_words(const RunConfig& cfg);

/// Builds all transition tables up to the weight bound for the selected
/// words, validating triangularity; reports per-weight dimensions and cache
/// hit counts.
Report run_basis(const RunConfig& cfg, algebra::Algebra& alg);

/// Reparametrization report for one input, with the braid path and (when the
/// weight is within bounds) the algebraic cross-check via the Lusztig
/// parameter.
Report run_reparam(const RunConfig& cfg, algebra::Algebra& alg, const weyl::Word& from,
                   const weyl::Word& to, const tropical::ParamVector& m);

/// Named verification suites: analogue | pbwstring | fan | graded | main.
Report run_suite(const std::string& name, const RunConfig& cfg, algebra::Algebra& alg);

/// All five suites in order; stops at nothing, concatenating failures.
std::vector<Report> run_all_suites(const RunConfig& cfg, algebra::Algebra& alg);

/// All dual canonical basis elements with trace within bound, as (exponent,
/// element) pairs over word w, in deterministic order.
std::vector<std::pair<algebra::Exponent, algebra::WordElt>> enumerate_duals(
    algebra::Algebra& alg, const weyl::Word& w, long bound);

/// Weights in Q+ with 1 <= trace <= bound, lex order.
std::vector<weyl::Root> weights_up_to(int rank, long bound);

}  // namespace qpbw::cli
