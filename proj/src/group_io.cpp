#include "galct/group_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "galct/errors.hpp"

namespace galct {

namespace {

using nlohmann::ordered_json;

const ordered_json& require(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace

GroupRecord parse_group_json(std::string_view text, GroupOptions options) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");

  const auto& name_v = require(doc, "name");
  if (!name_v.is_string()) throw ParseError("name: expected a string");
  const std::int64_t degree = as_int(require(doc, "degree"), "degree");
  if (degree < 1 || degree > std::numeric_limits<Point>::max())
    throw ParseError("degree: must be a positive integer");

  const auto& gens_v = require(doc, "generators");
  if (!gens_v.is_array()) throw ParseError("generators: expected an array");
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < gens_v.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    const auto& row = gens_v[g];
    if (!row.is_array()) throw ParseError(where + ": expected an array");
    if (row.size() != static_cast<std::size_t>(degree))
      throw InvalidPermutation(where + ": has " + std::to_string(row.size()) +
                               " images, expected degree " + std::to_string(degree));
    std::vector<Point> images(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string at = where + "[" + std::to_string(j) + "]";
      const std::int64_t v = as_int(row[j], at);
      if (v < 0 || v >= degree)
        throw InvalidPermutation(at + ": image " + std::to_string(v) + " out of range [0, " +
                                 std::to_string(degree) + ")");
      images[j] = static_cast<Point>(v);
    }
    if (auto defect = permutation_defect(images); !defect.empty())
      throw InvalidPermutation(where + ": " + defect);
    gens.emplace_back(std::move(images));
  }

  std::vector<std::string> tags;
  if (auto it = doc.find("tags"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("tags: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw ParseError("tags[" + std::to_string(i) + "]: expected a string");
      tags.push_back((*it)[i].get<std::string>());
    }
  }

  std::optional<ExpectedCounts> expected;
  if (auto it = doc.find("expected"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("expected: expected an object");
    ExpectedCounts ec;
    for (const auto& [key, value] : it->items()) {
      if (key == "provenance") {
        if (!value.is_string()) throw ParseError("expected.provenance: expected a string");
        ec.provenance = value.get<std::string>();
      } else {
        ec.values[key] = as_int(value, "expected." + key);
      }
    }
    expected = std::move(ec);
  }

  auto group = PermGroup::from_generators(static_cast<std::size_t>(degree), std::move(gens),
                                          name_v.get<std::string>(), options);
  return GroupRecord{std::move(group), std::move(tags), std::move(expected)};
}

GroupRecord load_group_file(const std::filesystem::path& path, GroupOptions options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group_json(buf.str(), options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const InvalidPermutation& e) {
    throw InvalidPermutation(path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json group_to_json(const PermGroup& group, const std::vector<std::string>& tags,
                                     const std::optional<ExpectedCounts>& expected) {
  ordered_json out;
  out["name"] = group.name();
  out["degree"] = group.degree();
  ordered_json gens = ordered_json::array();
  for (const auto& g : group.generators()) gens.push_back(g.images());
  out["generators"] = std::move(gens);
  out["tags"] = tags;
  if (expected) {
    ordered_json e;
    for (const auto& [k, v] : expected->values) e[k] = v;
    if (!expected->provenance.empty()) e["provenance"] = expected->provenance;
    out["expected"] = std::move(e);
  }
  return out;
}

}  // namespace galct
