#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace galct {

enum class Status { Pass, Fail, NotApplicable };

std::string_view to_string(Status s) noexcept;

/// Result of one checker on one input. Fail carries the offending data in
/// `witness`; NotApplicable names the unmet hypothesis there.
struct CheckOutcome {
  std::string group;
  std::string check;
  Status status = Status::NotApplicable;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();

  static CheckOutcome pass(std::string group, std::string check, nlohmann::ordered_json witness = {});
  static CheckOutcome fail(std::string group, std::string check, nlohmann::ordered_json witness);
  static CheckOutcome not_applicable(std::string group, std::string check, std::string reason,
                                     nlohmann::ordered_json witness = {});
};

/// {"group": ..., "check": ..., "status": ..., "witness": {...}}
nlohmann::ordered_json to_json(const CheckOutcome& outcome);

}  // namespace galct
