#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qpbw/algebra.hpp"

namespace qpbw::cache {

inline constexpr int kSchemaVersion = 1;

/// File name for a (rank, word, weight) table: digest of the key tuple.
std::filesystem::path table_path(const std::filesystem::path& dir, int rank,
                                 const weyl::Word& word, const weyl::Root& weight);

/// Loads a cached table; returns nothing when the file is missing, keyed
/// differently, schema-versioned differently, or fails its checksum.  A
/// corrupted file is never used.
std::optional<algebra::TransitionTable> load_table(const std::filesystem::path& dir, int rank,
                                                   const weyl::Word& word,
                                                   const weyl::Root& weight);

/// Atomically writes a table (tmp file + rename).
void store_table(const std::filesystem::path& dir, int rank,
                 const algebra::TransitionTable& table);

}  // namespace qpbw::cache
