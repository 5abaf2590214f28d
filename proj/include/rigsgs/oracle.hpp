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

// Bounded congruence closure by breadth-first search. It shares only the
// multiset arithmetic with the rewriting engine: occurrence matching and
// context application are implemented separately here.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rigsgs/ordering.hpp"
#include "rigsgs/terms.hpp"

namespace rigsgs {

/// What `max_degree` bounds: the sum of component degrees, or the degree of
/// each component separately.
enum class DegreeMeasure : std::uint8_t { Total, PerComponent };

struct OracleBounds {
  std::uint32_t max_degree = 10;
  DegreeMeasure measure = DegreeMeasure::Total;
  std::uint32_t max_len = 8;
  std::uint64_t max_expansions = 100'000;
};

using RelationPair = std::pair<RigMonomial, RigMonomial>;

/// One rewrite `left*side*right + pad` to `left*other*right + pad`.
struct OracleStep {
  RigMonomial from;
  RigMonomial to;
  std::size_t relation = 0;
  bool forward = true;  // first side replaced by second
  BaseMonomial left;
  BaseMonomial right;
  RigMonomial pad;
};

enum class ClosureVerdict : std::uint8_t { Congruent, NotFoundWithinBounds };

struct ClosureResult {
  ClosureVerdict verdict = ClosureVerdict::NotFoundWithinBounds;
  std::vector<OracleStep> path;  // u to v when congruent
  std::uint64_t expansions = 0;
  bool exhausted = false;        // expansion budget hit
};

/// All single-step neighbours of m within the bounds.
std::vector<OracleStep> oracle_neighbours(const RigMonomial& m,
                                          const std::vector<RelationPair>& rels,
                                          const RigOrder& order,
                                          std::size_t letters,
                                          const OracleBounds& bounds);

ClosureResult closure_eq(const RigMonomial& u, const RigMonomial& v,
                         const std::vector<RelationPair>& rels,
                         const RigOrder& order, std::size_t letters,
                         const OracleBounds& bounds = {});

std::vector<RigMonomial> closure_class(const RigMonomial& u,
                                       const std::vector<RelationPair>& rels,
                                       const RigOrder& order,
                                       std::size_t letters,
                                       const OracleBounds& bounds = {});

/// Checks every step of a path against the relations and chains from u to v.
bool replay_path(const std::vector<OracleStep>& path, const RigMonomial& u,
                 const RigMonomial& v, const std::vector<RelationPair>& rels,
                 const RigOrder& order);

/// Congruence on (N, +) generated by `pairs`, explored on [0, ceiling] and
/// reported as a class label for each value in [0, bound].
std::vector<std::uint32_t> nat_closure_labels(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
    std::uint32_t bound, std::uint32_t ceiling);

}  // namespace rigsgs
