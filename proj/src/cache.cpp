#include "qpbw/cache.hpp"

#include <fstream>

#include "qpbw/serialize.hpp"

namespace qpbw::cache {

namespace {

std::string key_string(int rank, const weyl::Word& word, const weyl::Root& weight) {
  serialize::json key{{"version", kSchemaVersion},
                      {"rank", rank},
                      {"word", serialize::to_json(word)},
                      {"weight", serialize::to_json(weight)}};
  return key.dump();
}

}  // namespace

std::filesystem::path table_path(const std::filesystem::path& dir, int rank,
                                 const weyl::Word& word, const weyl::Root& weight) {
  return dir / ("table_" + serialize::digest_hex(key_string(rank, word, weight)) + ".json");
}

std::optional<algebra::TransitionTable> load_table(const std::filesystem::path& dir, int rank,
                                                   const weyl::Word& word,
                                                   const weyl::Root& weight) {
  auto path = table_path(dir, rank, word, weight);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  serialize::json j;
  try {
    in >> j;
    if (j.at("version").get<int>() != kSchemaVersion) return std::nullopt;
    if (j.at("key").get<std::string>() != key_string(rank, word, weight)) return std::nullopt;
    const std::string payload = j.at("payload").dump();
    if (j.at("checksum").get<std::string>() != serialize::digest_hex(payload))
      return std::nullopt;
    return serialize::table_from_json(j.at("payload"), rank);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_table(const std::filesystem::path& dir, int rank,
                 const algebra::TransitionTable& table) {
  std::filesystem::create_directories(dir);
  serialize::json payload = serialize::to_json(table);
  serialize::json j{{"version", kSchemaVersion},
                    {"key", key_string(rank, table.word, table.weight)},
                    {"payload", payload},
                    {"checksum", serialize::digest_hex(payload.dump())}};
  auto path = table_path(dir, rank, table.word, table.weight);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qpbw::cache
