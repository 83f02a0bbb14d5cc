// Copyright 2026 The supex Authors
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

#ifndef SUPEX_TYPES_HPP_
#define SUPEX_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace supex {

/// Dense index of a state within its owning automaton.
using StateId = std::int32_t;

/// Dense index of an action within an alphabet.
using ActionId = std::int32_t;

/// A finite sequence of actions; the empty vector is the empty string.
using ActionString = std::vector<ActionId>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument or contract violation by the caller.
struct UsageError : Error {
  using Error::Error;
};

/// Malformed input text; carries a 1-based line number.
struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// A bounded enumeration exceeded its resource cap. Partial results are
/// never returned; callers must raise the cap or shrink the query.
struct OracleOverflowError : Error {
  using Error::Error;
};

/// Ordered set of action labels. Action ids are positions in this order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(ActionId a) const;
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<ActionId> find(std::string_view label) const;
  /// Like find() but throws UsageError for unknown labels.
  ActionId require(std::string_view label) const;

  bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ActionId> index_;
};

/// Renders an action string as space-separated labels ("" for the empty string).
std::string format_action_string(const Alphabet& alphabet, const ActionString& l);

/// Parses whitespace-separated labels into an action string.
ActionString parse_action_string(const Alphabet& alphabet, std::string_view text);

}  // namespace supex

#endif  // SUPEX_TYPES_HPP_
