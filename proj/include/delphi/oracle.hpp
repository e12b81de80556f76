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
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "delphi/term.hpp"

namespace delphi {

/// In-process stand-in for an oracle executable.
using OracleFunction = std::function<std::vector<Value>(std::span<const Value>)>;

struct OracleInterface {
  std::string name;
  std::vector<SortedVar> query;
  std::vector<SortedVar> response;
  std::optional<Term> assumption_gen;
  std::optional<Term> constraint_gen;
  /// Resolved executable path (or a bare name looked up on PATH).
  std::string executable;
  /// When set, called instead of spawning `executable`.
  OracleFunction function;
  /// The oracle symbol this interface defines, if it is definitional.
  std::optional<std::string> defines;

  bool definitional() const { return defines.has_value(); }
  /// Index of the response variable on the right of the defining equality.
  std::size_t defining_output() const;
  /// Sort of the defined oracle symbol (Fn sort, or codomain if 0-ary).
  Sort symbol_sort() const;
};

/// Builds the interface of `(declare-oracle-fun name (domain) codomain path)`.
OracleInterface definitional_interface(const std::string& symbol, std::vector<Sort> domain,
                                       Sort codomain, std::string executable);

/// Checks the structural invariants of an interface: generator variables are
/// within ȳ∪z̄, and a definitional α has the shape (= (θ y1 .. yj) z).
void validate_interface(const OracleInterface& i);

struct OracleCallRecord {
  std::string interface;
  std::vector<Value> inputs;
  std::vector<Value> outputs;
  double seconds = 0;
  /// Served from the memo without running the oracle.
  bool cached = false;
};

class AssumptionSet {
 public:
  struct Entry {
    std::string symbol;
    std::vector<Value> inputs;
    Value output;

    /// (= (θ c̄) d)
    Term as_term() const;
  };

  std::optional<Value> lookup(const std::string& symbol, std::span<const Value> inputs) const;
  /// Returns false if the entry was already present; throws FunctionalViolation
  /// when a different output is already recorded for the same application.
  bool insert(const std::string& symbol, std::vector<Value> inputs, Value output);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  /// Conjunction of all entries in insertion order (`true` when empty).
  Term conjunction() const;

 private:
  struct Key {
    std::string symbol;
    std::vector<Value> inputs;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  std::vector<Entry> entries_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
};

struct OracleOptions {
  std::chrono::milliseconds timeout{10000};
  std::optional<std::uint64_t> seed;
};

/// Invokes oracles over the process protocol and memoizes definitional calls.
/// Thread-safe.
class OracleRuntime {
 public:
  explicit OracleRuntime(OracleOptions options = {});

  std::vector<Value> call(const OracleInterface& i, std::span<const Value> inputs) {
    return query(i, inputs).outputs;
  }
  /// Like call, also reporting timing and whether the memo answered.
  OracleCallRecord query(const OracleInterface& i, std::span<const Value> inputs);

  /// Number of actual oracle invocations (memo hits excluded).
  std::size_t invocations() const;
  std::size_t invocations(const std::string& interface) const;
  std::vector<OracleCallRecord> records() const;

  const OracleOptions& options() const { return options_; }

 private:
  std::vector<Value> invoke(const OracleInterface& i, std::span<const Value> inputs);

  OracleOptions options_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, std::vector<std::string>>, std::vector<Value>> memo_;
  std::vector<OracleCallRecord> records_;
  std::map<std::string, std::size_t> invocations_;
};

/// One argv slot per input; Fn-sorted inputs become a define-fun named after
/// the query variable.
std::vector<std::string> encode_oracle_arguments(const OracleInterface& i,
                                                 std::span<const Value> inputs);

/// Parses oracle stdout into one value per response variable.
std::vector<Value> decode_oracle_response(const OracleInterface& i, std::string_view text);

struct GeneratedFormulas {
  std::optional<Term> assumption;
  std::optional<Term> constraint;
};

GeneratedFormulas instantiate_generators(const OracleInterface& i, std::span<const Value> inputs,
                                         std::span<const Value> outputs);

}  // namespace delphi
