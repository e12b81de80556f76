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

#include "delphi/sort.hpp"

#include "delphi/error.hpp"

namespace delphi {

Sort Sort::bitvec(std::uint32_t width) {
  if (width == 0) throw Error(ErrorKind::SortError, "bit-vector width must be positive");
  Sort s(Kind::BitVec);
  s.width_ = width;
  return s;
}

Sort Sort::function(std::vector<Sort> domain, Sort codomain) {
  if (domain.empty()) throw Error(ErrorKind::SortError, "function sort needs a non-empty domain");
  Sort s(Kind::Fn);
  s.parts_ = std::move(domain);
  s.parts_.push_back(std::move(codomain));
  return s;
}

std::span<const Sort> Sort::domain() const {
  if (kind_ != Kind::Fn) return {};
  return std::span<const Sort>(parts_.data(), parts_.size() - 1);
}

const Sort& Sort::codomain() const {
  if (kind_ != Kind::Fn) return *this;
  return parts_.back();
}

std::string Sort::to_string() const {
  switch (kind_) {
    case Kind::Bool: return "Bool";
    case Kind::Int: return "Int";
    case Kind::Real: return "Real";
    case Kind::String: return "String";
    case Kind::BitVec: return "(_ BitVec " + std::to_string(width_) + ")";
    case Kind::Fn: {
      std::string out = "(->";
      for (const Sort& p : parts_) out += " " + p.to_string();
      return out + ")";
    }
  }
  return "?";
}

}  // namespace delphi
