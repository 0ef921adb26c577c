#pragma once

#include <string>

#include <json.hpp>

#include "qgl1/sparse.hpp"

namespace qgl1 {

/// JSON wire format. Vectors serialize as an object mapping decimal index
/// strings to exact rational strings ("p/q", or "p" when q = 1), with keys
/// emitted in ascending numeric order so that equal values serialize to
/// identical bytes:
///
///   {"1":"1","3":"-1/2","4":"-1/2"}
///
/// Parsing accepts keys in any order and re-normalizes.
using Json = nlohmann::ordered_json;

template <class Tag>
Json to_json(const FlatMap<Tag>& v) {
  Json out = Json::object();
  for (const auto& [index, value] : v.entries()) {
    out[std::to_string(index)] = to_string(value);
  }
  return out;
}

/// Parses {"index":"rational", ...}. Throws Error("BadVector") on malformed
/// keys and Error("BadRational") on malformed values.
template <class Tag>
FlatMap<Tag> flat_map_from_json(const Json& object);

SparseVec sparse_vec_from_json(const Json& object);
CoeffMap coeff_map_from_json(const Json& object);

/// Parses a decimal object key into a 1-based index.
Index parse_index_string(const std::string& key);

std::string dump_line(const Json& value);
Json parse_json(const std::string& text);

}  // namespace qgl1
