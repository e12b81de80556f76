// Copyright 2026 The Delphi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace delphi {

struct ProcessResult {
  int exit_code = -1;
  /// Terminated by a signal (other than our own timeout kill).
  std::optional<int> signal;
  bool timed_out = false;
  std::string out;
  std::string err;
  double seconds = 0;
};

struct ProcessOptions {
  std::optional<std::chrono::milliseconds> timeout;
  /// Added to (or overriding) the inherited environment.
  std::vector<std::pair<std::string, std::string>> env;
  std::string stdin_text;
};

/// Runs argv[0] (PATH lookup for bare names) to completion. Throws
/// std::system_error if the process cannot be started.
ProcessResult run_process(const std::vector<std::string>& argv, const ProcessOptions& opts = {});

/// Relative paths containing '/' are anchored at `base_dir`; bare names are
/// taken from `base_dir` if such a file exists, else left for PATH lookup.
std::string resolve_executable(const std::string& path, const std::filesystem::path& base_dir);

/// Splits a command line on whitespace, honouring single and double quotes.
std::vector<std::string> split_command(std::string_view cmd);

}  // namespace delphi
