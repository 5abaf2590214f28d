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

// Presentation files, semiring expressions and canonical printing.
//
// File format, one directive per line (`#` starts a comment):
//
//   mode: commutative | noncommutative
//   vars: x y ...          declaration order = ascending precedence
//   order: wtlex | deglenrlex | deglex
//   rel: EXPR = EXPR
//
// Expressions: `+` is the additive operation, juxtaposition or `*` is the
// product, `^n` a power, `0` the additive identity, `1` the empty monomial.
// Identifiers may end in `'`.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigsgs/composition.hpp"
#include "rigsgs/ordering.hpp"
#include "rigsgs/rewrite.hpp"
#include "rigsgs/terms.hpp"

namespace rigsgs {

struct Presentation {
  Mode mode = Mode::Commutative;
  Alphabet alphabet;
  BaseOrderKind order_kind = BaseOrderKind::DegLex;
  std::vector<std::pair<RigMonomial, RigMonomial>> relations;

  RigOrder order() const { return RigOrder(mode, order_kind); }
};

/// Throws ErrorKind::Parse.
RigMonomial parse_expr(std::string_view text, Mode mode,
                       const Alphabet& alphabet, const RigOrder& order);
RigMonomial parse_expr(std::string_view text, const Presentation& p);

/// Throws ErrorKind::Parse.
Presentation parse_presentation(std::string_view text);

/// Relations lhs - rhs, made monic under the presentation's order.
System to_system(const Presentation& p);
/// A presentation whose relations are the binomials of `s` (lhs = leading).
Presentation from_system(const System& s);

std::string render(const BaseMonomial& b, Mode mode, const Alphabet& alphabet);
std::string render(const RigMonomial& m, Mode mode, const Alphabet& alphabet);
std::string render(const Polynomial& f, Mode mode, const Alphabet& alphabet);

/// Left and right sides of a relation: leading monomial and the negated tail
/// for binomials, the whole polynomial and "0" otherwise.
std::pair<std::string, std::string> render_relation(const Polynomial& f,
                                                    const System& s);
/// One `lhs = rhs` line per relation.
std::string render_basis(const System& s);
std::string render_presentation(const Presentation& p);
/// One step per line: `coeff * (left) [rel #k] (right) + pad`.
std::string render_trace(const ReductionTrace& t, const System& s);
/// `(#f, #g) kind w = ... spoly = ...`
std::string render_composition(const CompositionRecord& r, const System& s);

std::string render_rational(const Rational& q);

}  // namespace rigsgs
