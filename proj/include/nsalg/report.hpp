#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nsalg {

enum class Status { Pass, Fail, Info };

std::string to_string(Status s);

/// One named check outcome. A failing report always carries a witness.
struct CheckReport {
  std::string name;
  std::string anchor;  // the formula the check certifies
  Status status = Status::Pass;
  std::optional<std::string> witness;
  std::string params;

  static CheckReport pass(std::string name, std::string anchor, std::string params);
  static CheckReport fail(std::string name, std::string anchor, std::string params, std::string witness);
  static CheckReport info(std::string name, std::string anchor, std::string params,
                          std::optional<std::string> witness = std::nullopt);
};

/// Stable sort by name.
void sort_reports(std::vector<CheckReport>& reports);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace nsalg
