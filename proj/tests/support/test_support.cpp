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


#include "test_support.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>

#include <unistd.h>

namespace delphi::testing {

std::filesystem::path oracle_dir() { return DELPHI_ORACLE_DIR; }
std::string oracle(const std::string& name) { return (oracle_dir() / name).string(); }
std::filesystem::path bench_dir() { return DELPHI_BENCH_DIR; }
std::filesystem::path cli_path() { return DELPHI_CLI; }

void put_oracles_on_path() {
  const std::string dir = oracle_dir().string();
  const char* cur = std::getenv("PATH");
  std::string path = cur ? cur : "";
  if (path.rfind(dir + ":", 0) == 0) return;
  path = dir + ":" + path;
  ::setenv("PATH", path.c_str(), 1);
}

BackendConfig z3_config(const std::string& logic) {
  BackendConfig c;
  c.command = {DELPHI_Z3, "-in"};
  c.logic = logic;
  c.timeout = std::chrono::milliseconds(60000);
  return c;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("delphi-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::filesystem::path TempDir::write(const std::string& name, const std::string& text) const {
  auto p = path_ / name;
  std::ofstream(p) << text;
  return p;
}

bool trial_division_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_square_brute(std::int64_t n) {
  for (std::int64_t r = 0; r <= n; ++r)
    if (r * r == n) return true;
  return false;
}

bool is_triangle_brute(std::int64_t n) {
  for (std::int64_t k = 0; k <= n; ++k)
    if (k * (k + 1) / 2 == n) return true;
  return false;
}

}  // namespace delphi::testing
