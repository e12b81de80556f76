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


// isprime / issquare / istriangle, selected at build time.

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

bool parse(const char* s, long long& out) {
  std::string t(s);
  bool neg = false;
  if (t.rfind("(-", 0) == 0 && t.back() == ')') {
    neg = true;
    t = t.substr(2, t.size() - 3);
  }
  while (!t.empty() && t.front() == ' ') t.erase(t.begin());
  while (!t.empty() && t.back() == ' ') t.pop_back();
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) return false;
  out = std::strtoll(t.c_str(), nullptr, 10);
  if (neg) out = -out;
  return true;
}

bool prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool square(long long n) {
  if (n < 0) return false;
  long long r = 0;
  while (r * r < n) ++r;
  return r * r == n;
}

bool triangle(long long n) {
  if (n < 0) return false;
  long long k = 0, t = 0;
  while (t < n) t += ++k;
  return t == n;
}

}  // namespace

int main(int argc, char** argv) {
  long long n = 0;
  if (argc != 2 || !parse(argv[1], n)) {
    std::fprintf(stderr, "usage: %s <Int>\n", argv[0]);
    return 2;
  }
#if DELPHI_NUMBER_ORACLE == 0
  bool r = prime(n);
#elif DELPHI_NUMBER_ORACLE == 1
  bool r = square(n);
#else
  bool r = triangle(n);
#endif
  std::puts(r ? "true" : "false");
  return 0;
}
