#include "qgl1/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace qgl1 {

Index parse_index_string(const std::string& key) {
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    throw Error("BadVector", "non-numeric index key '" + key + "'");
  }
  Index index = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
  if (ec != std::errc() || ptr != key.data() + key.size() || index < 1) {
    throw Error("BadVector", "index key '" + key + "' out of range");
  }
  return index;
}

template <class Tag>
FlatMap<Tag> flat_map_from_json(const Json& object) {
  if (!object.is_object()) {
    throw Error("BadVector", "expected a JSON object of index -> rational");
  }
  std::vector<typename FlatMap<Tag>::Entry> entries;
  entries.reserve(object.size());
  for (const auto& [key, value] : object.items()) {
    if (!value.is_string()) {
      throw Error("BadVector", "value for index " + key + " must be a rational string");
    }
    entries.emplace_back(parse_index_string(key),
                         parse_rational(value.template get<std::string>()));
  }
  return FlatMap<Tag>::from_entries(std::move(entries));
}

template SparseVec flat_map_from_json<CoordTag>(const Json&);
template CoeffMap flat_map_from_json<BasisTag>(const Json&);

SparseVec sparse_vec_from_json(const Json& object) {
  return flat_map_from_json<CoordTag>(object);
}

CoeffMap coeff_map_from_json(const Json& object) {
  return flat_map_from_json<BasisTag>(object);
}

std::string dump_line(const Json& value) { return value.dump(); }

Json parse_json(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw Error("BadJson", "malformed JSON input");
  }
  return parsed;
}

}  // namespace qgl1
