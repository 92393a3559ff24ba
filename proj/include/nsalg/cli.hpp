#pragma once

#include "nsalg/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nsalg::cli {

/// Full command line without the program name. Exit codes: 0 when every
/// executed check passes, 1 when any fails, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Canonical JSON document for a report list.
std::string to_json(const std::string& command, const std::vector<std::string>& args,
                    const std::vector<CheckReport>& reports, const std::string& table = "");

std::string to_text(const std::vector<CheckReport>& reports);

}  // namespace nsalg::cli
