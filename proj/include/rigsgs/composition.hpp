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

// Compositions (critical pairs) of two monic relations.
//
// Commutative mode: for each component pair (p of lead f, q of lead g) with
// a*p = b*q = lcm(p, q), the ambiguity is w = lcm_circ(a*lead f, b*lead g) and
// the S-polynomial is a*f + u - b*g + v where w = a*lead f + u = b*lead g + v.
//
// Noncommutative mode: intersections (p = b*o, q = o*a with a, b, o
// nonempty, giving f*a + u - b*g + v) and inclusions (p = a*q*b, giving
// f + u - a*g*b + v). Separated placements are not enumerated.

#pragma once

#include <cstddef>
#include <vector>

#include "rigsgs/rewrite.hpp"

namespace rigsgs {

enum class CompositionKind : std::uint8_t { Intersection, Inclusion, Commutative };

const char* composition_kind_name(CompositionKind kind);

struct CompositionRecord {
  std::size_t f_id = 0;
  std::size_t g_id = 0;
  CompositionKind kind = CompositionKind::Commutative;
  BaseMonomial site_f;  // component of lead f
  BaseMonomial site_g;  // component of lead g
  Context f_context;    // w = f_context[lead f]
  Context g_context;    // w = g_context[lead g]
  RigMonomial ambiguity;
  Polynomial spoly;     // f_context[f] - g_context[g]
};

struct CompositionSet {
  std::vector<CompositionRecord> records;
  std::size_t pairs_examined = 0;
};

/// Throws ErrorKind::NotMonic on non-monic input. Zero S-polynomials are
/// dropped; records are deduplicated by their contexts.
CompositionSet comm_compositions(const Polynomial& f, std::size_t f_id,
                                 const Polynomial& g, std::size_t g_id,
                                 const RigOrder& order);
CompositionSet nc_compositions(const Polynomial& f, std::size_t f_id,
                               const Polynomial& g, std::size_t g_id,
                               const RigOrder& order);
/// Dispatches on the order's mode.
CompositionSet compositions(const Polynomial& f, std::size_t f_id,
                            const Polynomial& g, std::size_t g_id,
                            const RigOrder& order);

/// Every composition of every ordered pair (i, j), including i == j.
CompositionSet all_compositions(const System& s);

/// True iff h reduces to zero modulo s. Throws ErrorKind::NotBelowAmbiguity
/// unless h is zero or leading(h) < w. The reduced remainder is written to
/// `witness` when non-null.
bool is_trivial(const Polynomial& h, const System& s, const RigMonomial& w,
                Polynomial* witness = nullptr);

}  // namespace rigsgs
