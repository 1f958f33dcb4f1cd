// Copyright 2026 The latpar Authors
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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "latpar/errors.hpp"

namespace latpar {

class FeatureStructure;
using FsPtr = std::shared_ptr<const FeatureStructure>;

// Named placeholder. Variables with the same name inside one structure (or
// inside one unification problem) denote the same value.
struct Variable {
  std::string name;  // without the leading '?'
  bool operator==(const Variable& o) const { return name == o.name; }
};

// Atoms are case-sensitive tokens or integers; the two kinds never unify.
using Atom = std::variant<std::string, std::int64_t>;

// A value slot: an atom, an unbound variable, or a nested structure.
using Value = std::variant<Atom, Variable, FsPtr>;

bool value_equal(const Value& a, const Value& b);

// Raised by substitute() when the binding set contains a cycle
// (e.g. ?x -> ?y, ?y -> ?x).
class CyclicBindingError : public Error {
 public:
  using Error::Error;
};

// Nested attribute-value matrix. Attributes are unique per level; values are
// immutable once the structure is handed out, so structures can be shared
// freely across threads.
class FeatureStructure {
 public:
  FeatureStructure() = default;

  // Build-time mutator; returns *this so fixtures can chain calls.
  FeatureStructure& set(std::string attr, Value v);

  const Value* find(std::string_view attr) const;
  // Resolves a dotted path ("thehour.value"). Returns nullptr when a step is
  // missing or an intermediate value is not a nested structure.
  const Value* at_path(std::string_view dotted) const;

  const std::map<std::string, Value>& slots() const { return slots_; }
  bool empty() const { return slots_.empty(); }

  bool operator==(const FeatureStructure& o) const;
  bool operator!=(const FeatureStructure& o) const { return !(*this == o); }

  // Stable bracketed text form ("[type:dm_marker, value:yes]"); used for
  // packing keys and diagnostics.
  std::string canonical() const;

  // JSON AVM form: an object whose keys are attributes; atoms are JSON
  // strings or integers; variables are strings starting with '?'.
  static FeatureStructure from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  static Value value_from_json(const nlohmann::json& j);
  static nlohmann::json value_to_json(const Value& v);

  // True when no variable occurs anywhere in the structure.
  bool ground() const;

 private:
  std::map<std::string, Value> slots_;
};

// Convenience constructors for values.
Value atom(std::string token);
Value atom(const char* token);
Value atom(std::int64_t n);
Value var(std::string name);
Value nested(FeatureStructure fs);

std::string value_canonical(const Value& v);

using Bindings = std::map<std::string, Value>;

// Most general structure subsumed by both inputs: union of attributes,
// shared attributes unified recursively, variables bound consistently
// across both arguments. Failure is a normal outcome, not an error.
std::optional<FeatureStructure> unify(const FeatureStructure& a,
                                      const FeatureStructure& b);

// True iff every attribute path/atom of `general` is present in `specific`
// with a compatible value. Variables in `general` act as consistent
// wildcards; a variable in `specific` satisfies nothing but a variable.
bool subsumes(const FeatureStructure& general,
              const FeatureStructure& specific);

// Replaces every bound variable (transitively); unbound variables are kept.
// Throws CyclicBindingError when resolution loops.
FeatureStructure substitute(const FeatureStructure& fs, const Bindings& b);
Value substitute_value(const Value& v, const Bindings& b);

}  // namespace latpar
