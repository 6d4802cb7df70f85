#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace endstool {

/// Bad flags or arguments; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one subcommand (arguments without the program name) and returns
/// its report. Library input errors surface as UsageError.
Report execute(const std::vector<std::string>& args);

/// The whole CLI contract: report on `out` (JSON or CSV), human table on
/// `err` unless --quiet; exit 0 when everything verified, 1 on any
/// refutation, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace endstool
