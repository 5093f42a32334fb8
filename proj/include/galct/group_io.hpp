#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "galct/perm_group.hpp"

namespace galct {

/// Fixture numbers attached to an ingested group, e.g. "rational_classes".
struct ExpectedCounts {
  std::map<std::string, std::int64_t> values;
  std::string provenance;
};

struct GroupRecord {
  PermGroup group;
  std::vector<std::string> tags;
  std::optional<ExpectedCounts> expected;
};

/// Parses a group document
///   {"name": str, "degree": int, "generators": [[int, ...], ...],
///    "tags": [str], "expected": {str: int, "provenance": str}}
/// with 0-based images. "tags" and "expected" are optional. Throws ParseError
/// naming the offending field (and line/column for syntax errors), or
/// InvalidPermutation naming the generator.
GroupRecord parse_group_json(std::string_view text, GroupOptions options = {});
GroupRecord load_group_file(const std::filesystem::path& path, GroupOptions options = {});

nlohmann::ordered_json group_to_json(const PermGroup& group,
                                     const std::vector<std::string>& tags = {},
                                     const std::optional<ExpectedCounts>& expected = std::nullopt);

}  // namespace galct
