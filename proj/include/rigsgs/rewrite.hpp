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

// Occurrences of leading monomials, elimination of leading terms, certified
// normal forms and enumeration of irreducible monomials.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rigsgs/ordering.hpp"
#include "rigsgs/terms.hpp"

namespace rigsgs {

/// The site `left * [] * right + pad`. Applied to a rig monomial m it yields
/// (sum over components c of m of left*c*right) + pad; applied to theta it
/// yields pad. `right` stays 1 in commutative mode.
struct Context {
  BaseMonomial left;
  BaseMonomial right;
  RigMonomial pad;

  friend bool operator==(const Context&, const Context&) = default;
};

RigMonomial apply_context(const Context& c, const RigMonomial& m,
                          const RigOrder& order);
Polynomial apply_context(const Context& c, const Polynomial& f,
                         const RigOrder& order);

/// An ordered list of monic, nonzero relations over one alphabet and order.
/// Relation ids are positions in `relations`.
struct System {
  Alphabet alphabet;
  RigOrder order;
  std::vector<Polynomial> relations;

  Mode mode() const { return order.mode(); }

  /// Makes every relation monic; throws on a zero relation.
  static System make(Alphabet alphabet, RigOrder order,
                     std::vector<Polynomial> relations);
};

struct Occurrence {
  std::size_t relation = 0;
  Context context;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Every (relation, context) with context[leading(relation)] == m, ordered by
/// relation id, then left, then right under the base order.
std::vector<Occurrence> find_occurrences(const RigMonomial& m, const System& s);
/// The first occurrence in that order, if any.
std::optional<Occurrence> first_occurrence(const RigMonomial& m,
                                           const System& s);
/// Occurrences of the leading monomial of one relation only.
std::vector<Occurrence> occurrences_of(const RigMonomial& m,
                                       const RigMonomial& lead,
                                       std::size_t relation_id,
                                       const RigOrder& order);
bool is_irreducible(const RigMonomial& m, const System& s);

/// f - lc(f) * occ.context[relation]. Throws ErrorKind::NoOccurrence unless
/// the occurrence matches the leading monomial of f.
Polynomial elt(const Polynomial& f, const Occurrence& occ, const System& s);

struct ReductionStep {
  Rational coeff;
  std::size_t relation = 0;
  Context context;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct NormalForm {
  Polynomial nf;
  ReductionTrace trace;
};

inline constexpr std::uint64_t kDefaultReductionBudget = 1'000'000;

/// Full reduction, greatest reducible monomial first. Throws
/// ErrorKind::BudgetExhausted after `budget` eliminations.
NormalForm normal_form(const Polynomial& f, const System& s,
                       std::uint64_t budget = kDefaultReductionBudget);
Polynomial reduce(const Polynomial& f, const System& s,
                  std::uint64_t budget = kDefaultReductionBudget);

/// Sum of coeff_i * context_i[relation_i] over the trace.
Polynomial replay(const ReductionTrace& trace, const System& s);

/// All rig monomials with total degree <= max_degree and at most max_len
/// components, ascending by the rig order.
std::vector<RigMonomial> enumerate_monomials(Mode mode, std::size_t letters,
                                             const RigOrder& order,
                                             std::uint32_t max_degree,
                                             std::uint32_t max_len);

/// Irreducible monomials within the bounds, each once, ascending.
std::vector<RigMonomial> enum_irr(const System& s, std::uint32_t max_degree,
                                  std::uint32_t max_len);

}  // namespace rigsgs
