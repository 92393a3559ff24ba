#include "nsalg/report.hpp"

#include <algorithm>

namespace nsalg {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "info";
}

CheckReport CheckReport::pass(std::string name, std::string anchor, std::string params) {
  return {std::move(name), std::move(anchor), Status::Pass, std::nullopt, std::move(params)};
}

CheckReport CheckReport::fail(std::string name, std::string anchor, std::string params, std::string witness) {
  return {std::move(name), std::move(anchor), Status::Fail, std::move(witness), std::move(params)};
}

CheckReport CheckReport::info(std::string name, std::string anchor, std::string params,
                              std::optional<std::string> witness) {
  return {std::move(name), std::move(anchor), Status::Info, std::move(witness), std::move(params)};
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const CheckReport& r) { return r.status == Status::Fail; });
}

}  // namespace nsalg
