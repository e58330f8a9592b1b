#pragma once

#include <map>
#include <mutex>

#include "qpbw/algebra.hpp"

namespace qpbw::algebra {

// Shared lazily-built data, frozen after construction.  The mutex guards map
// lookups/inserts only; builds run outside it, and on a race the first insert
// wins (results are deterministic, so duplicates are identical).
struct Algebra::Caches {
  std::mutex mu;
  std::map<weyl::Word, std::vector<WordElt>> root_vectors;
  std::map<weyl::Word, std::vector<weyl::Root>> roots;
  std::map<std::pair<weyl::Word, weyl::Root>, std::unique_ptr<Context>> contexts;
  std::map<std::pair<weyl::Word, weyl::Root>, std::unique_ptr<TransitionTable>> tables;
  std::map<std::pair<weyl::Word, weyl::Root>, std::vector<WordElt>> duals;
  std::map<int, weyl::Word> start_words;
  CacheStats stats;
};

}  // namespace qpbw::algebra
