// Copyright 2026 The rigsgs Authors
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

// Completion of a relation system, verification, minimalization,
// autoreduction and the word-problem decision.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigsgs/composition.hpp"
#include "rigsgs/rewrite.hpp"

namespace rigsgs {

struct CompletionLimits {
  /// New relations whose leading monomial exceeds this total degree are
  /// discarded and the run is marked truncated.
  std::uint32_t max_degree = 24;
  /// Compositions processed before giving up.
  std::uint64_t max_steps = 200'000;
  /// Tie-break among equal ambiguities: insertion order when empty,
  /// otherwise a pseudo-random key drawn from this seed.
  std::optional<std::uint64_t> seed;
};

enum class CompletionStatus : std::uint8_t { Complete, Truncated };

const char* status_name(CompletionStatus status);

struct CompletionStats {
  std::uint64_t pairs_examined = 0;
  std::uint64_t compositions = 0;
  std::uint64_t relations_added = 0;
  std::uint64_t discarded = 0;
  std::uint64_t max_ambiguity_degree = 0;
};

struct CompletionReport {
  System basis;
  CompletionStatus status = CompletionStatus::Complete;
  CompletionStats stats;
  CompletionLimits limits;
};

struct VerifyResult {
  bool ok = true;
  std::size_t pairs_examined = 0;
  std::vector<CompositionRecord> compositions;
  /// Indices into `compositions` with their surviving normal forms.
  std::vector<std::pair<std::size_t, Polynomial>> witnesses;
};

VerifyResult verify(const System& s);

/// Throws ErrorKind::InvalidArgument on a zero relation. When every input
/// is a binomial, every relation added is checked to be one as well.
CompletionReport complete(const System& input, const CompletionLimits& limits = {});

/// Drops relations whose leading monomial contains an occurrence of another
/// kept relation's leading monomial (ascending scan, first kept).
System minimalize(const System& s);
/// Reduces every tail against the other relations until nothing changes;
/// output sorted ascending by leading monomial.
System autoreduce(const System& s);
/// minimalize followed by autoreduce.
System reduced_basis(const System& s);

enum class Decision : std::uint8_t { Equal, Distinct, Unknown };

const char* decision_name(Decision d);

struct EqResult {
  Decision decision = Decision::Unknown;
  Polynomial nf_u;
  Polynomial nf_v;
};

EqResult decide_eq(const RigMonomial& u, const RigMonomial& v,
                   const CompletionReport& report);

}  // namespace rigsgs
