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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latpar/errors.hpp"
#include "latpar/feature_structure.hpp"

namespace latpar {

// Lexicalized categorial grammar: every entry carries its syntactic
// category, an ordered valence list of argument slots, and a semantic
// recipe. Composition is plain binary function application — a functor
// consumes its first remaining slot from a saturated adjacent argument and
// splices the argument's semantics into its recipe.

struct Category {
  std::string major;
  bool operator==(const Category& o) const { return major == o.major; }
};

enum class Direction { Left, Right };

std::string to_string(Direction d);

struct ArgSlot {
  Direction direction = Direction::Right;
  std::string cat;       // required major category of the argument
  std::string sem_var;   // variable in the recipe bound by the argument
  // Optional dotted path into the argument's semantics; empty means the
  // whole semantic structure is bound to sem_var.
  std::vector<std::string> sem_path;
};

struct LexicalEntry {
  std::string form;
  Category cat;
  std::vector<ArgSlot> valence;
  FeatureStructure sem;
};

// A (possibly partial) analysis: category, the argument slots still to be
// consumed, the semantics composed so far.
struct Constituent {
  Category cat;
  std::vector<ArgSlot> remaining;  // front = next slot to consume
  FeatureStructure sem;
  int consumed = 0;
  int total_valence = 0;

  bool saturated() const { return remaining.empty(); }
};

using Lexicon = std::vector<LexicalEntry>;

class MalformedEntryError : public Error {
 public:
  MalformedEntryError(int index, const std::string& what)
      : Error("lexicon entry " + std::to_string(index) + ": " + what),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class UnknownDirectionError : public Error {
 public:
  using Error::Error;
};

class DanglingSemVarError : public Error {
 public:
  using Error::Error;
};

// Loads a JSON array of entries:
//   {"form": "um", "cat": "prep",
//    "valence": [{"direction": "right", "cat": "np", "sem_var": "?t"}],
//    "sem": {"type": "time", "thehour": "?t"}}
// A slot may carry "sem_path": "value" (dotted) to bind sem_var to a
// sub-value of the argument's semantics instead of the whole structure.
// Duplicate (form, cat) pairs are allowed (homonyms). Saturated entries must
// have variable-free semantics; every slot variable must occur in the
// recipe.
Lexicon load_lexicon(std::istream& in);

Constituent lexical_constituent(const LexicalEntry& e);

// Function application. `side` is the direction of the functor's first
// remaining slot; the argument must be saturated, of the required category,
// and adjacent on that side. Failure is normal control flow during parsing.
std::optional<Constituent> apply(const Constituent& functor,
                                 const Constituent& argument, Direction side);

// All entries for a surface form (may be empty).
std::vector<const LexicalEntry*> entries_for(const Lexicon& lex,
                                             const std::string& word);

}  // namespace latpar
