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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace delphi {

/// Sorts compare by structural equality.
class Sort {
 public:
  enum class Kind { Bool, Int, Real, BitVec, String, Fn };

  /// Bool.
  Sort() = default;

  static Sort boolean() { return Sort(Kind::Bool); }
  static Sort integer() { return Sort(Kind::Int); }
  static Sort real() { return Sort(Kind::Real); }
  static Sort string() { return Sort(Kind::String); }
  static Sort bitvec(std::uint32_t width);
  static Sort function(std::vector<Sort> domain, Sort codomain);

  Kind kind() const noexcept { return kind_; }
  bool is_bool() const noexcept { return kind_ == Kind::Bool; }
  bool is_int() const noexcept { return kind_ == Kind::Int; }
  bool is_real() const noexcept { return kind_ == Kind::Real; }
  bool is_bitvec() const noexcept { return kind_ == Kind::BitVec; }
  bool is_string() const noexcept { return kind_ == Kind::String; }
  bool is_function() const noexcept { return kind_ == Kind::Fn; }

  /// Bit width; only meaningful for BitVec.
  std::uint32_t width() const noexcept { return width_; }
  std::span<const Sort> domain() const;
  const Sort& codomain() const;

  /// SMT-LIB spelling; Fn sorts print as `(-> S1 ... Sn S)`.
  std::string to_string() const;

  friend bool operator==(const Sort& a, const Sort& b) {
    return a.kind_ == b.kind_ && a.width_ == b.width_ && a.parts_ == b.parts_;
  }

 private:
  explicit Sort(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Bool;
  std::uint32_t width_ = 0;
  std::vector<Sort> parts_;  // Fn: domain..., codomain
};

}  // namespace delphi
