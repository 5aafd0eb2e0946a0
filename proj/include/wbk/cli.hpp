#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace wbk {

enum class Status { Pass, Fail, Info };
std::string_view to_string(Status s);

struct Report {
  std::string command;
  Status status = Status::Info;
  std::vector<std::string> lines;
  nlohmann::json witnesses;  // null when absent
  /// Set for usage and parse errors.
  bool usage_error = false;

  /// 0 on pass/info, 1 on a mathematical failure, 2 on usage/parse errors.
  int exit_code() const;
};

struct Invocation {
  std::string command;
  /// Series kind for `series`; empty otherwise.
  std::string argument;
  /// Catalog names ("catalog:<name>") or file paths, in command-line order.
  std::vector<std::string> sources;
  std::optional<std::size_t> limit;
  std::uint64_t seed = 0;
  std::string subset;
  /// Ascending chain for `sandwich`: subsets separated by '|'.
  std::string chain;
};

const std::vector<std::string>& command_names();

Report run(const Invocation& invocation);

/// "text": one record per line. "json": the Report fields as one object.
std::string render(const Report& report, std::string_view format);

}  // namespace wbk
