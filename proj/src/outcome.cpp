#include "galct/outcome.hpp"

namespace galct {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::NotApplicable: return "NotApplicable";
  }
  return "?";
}

namespace {

nlohmann::ordered_json object_or_empty(nlohmann::ordered_json w) {
  return w.is_null() ? nlohmann::ordered_json::object() : std::move(w);
}

}  // namespace

CheckOutcome CheckOutcome::pass(std::string group, std::string check, nlohmann::ordered_json witness) {
  return {std::move(group), std::move(check), Status::Pass, object_or_empty(std::move(witness))};
}

CheckOutcome CheckOutcome::fail(std::string group, std::string check, nlohmann::ordered_json witness) {
  return {std::move(group), std::move(check), Status::Fail, object_or_empty(std::move(witness))};
}

CheckOutcome CheckOutcome::not_applicable(std::string group, std::string check, std::string reason,
                                          nlohmann::ordered_json witness) {
  auto w = object_or_empty(std::move(witness));
  w["reason"] = std::move(reason);
  return {std::move(group), std::move(check), Status::NotApplicable, std::move(w)};
}

nlohmann::ordered_json to_json(const CheckOutcome& o) {
  nlohmann::ordered_json j;
  j["group"] = o.group;
  j["check"] = o.check;
  j["status"] = std::string(to_string(o.status));
  j["witness"] = o.witness;
  return j;
}

}  // namespace galct
