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

// Monomial orders on rig monomials.
//
// The base order is degree first, then a lexicographic tiebreak on letters
// (left-to-right, or right-to-left for the inverse deg-lex used with the
// integer-ring presentation). Rig monomials are compared by the multiset
// extension: sort components descending, compare lexicographically, and a
// proper prefix is smaller. theta (the empty sequence) is the minimum.
//
// Contexts act on every component by a strictly monotone map and add the same
// pad to both sides, so this extension is compatible with context
// application.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rigsgs/terms.hpp"

namespace rigsgs {

enum class BaseOrderKind : std::uint8_t {
  DegLex,       // degree, then left-to-right (commutative: exponent vectors)
  DegRightLex,  // degree, then right-to-left letter comparison
};

class RigOrder {
 public:
  RigOrder() = default;
  RigOrder(Mode mode, BaseOrderKind kind);

  Mode mode() const { return mode_; }
  BaseOrderKind kind() const { return kind_; }

  std::strong_ordering compare_base(const BaseMonomial& a,
                                    const BaseMonomial& b) const;
  std::strong_ordering compare(const RigMonomial& m,
                               const RigMonomial& n) const;

  bool less_base(const BaseMonomial& a, const BaseMonomial& b) const {
    return compare_base(a, b) < 0;
  }
  bool less(const RigMonomial& m, const RigMonomial& n) const {
    return compare(m, n) < 0;
  }

  friend bool operator==(const RigOrder&, const RigOrder&) = default;

 private:
  Mode mode_ = Mode::Commutative;
  BaseOrderKind kind_ = BaseOrderKind::DegLex;
};

/// Comparator for ordered containers: ascending by the rig order.
struct RigLess {
  const RigOrder* order;
  bool operator()(const RigMonomial& a, const RigMonomial& b) const {
    return order->less(a, b);
  }
};

/// Keyword used in presentation files: `wtlex` (commutative),
/// `deglenrlex` / `deglex` (noncommutative).
std::string order_keyword(Mode mode, BaseOrderKind kind);
std::optional<BaseOrderKind> parse_order_keyword(Mode mode,
                                                 std::string_view keyword);
BaseOrderKind default_order_kind(Mode mode);

struct LeadingTerm {
  RigMonomial monomial;
  Rational coeff;
};

/// Throws ErrorKind::NoLeadingTerm on the zero polynomial.
LeadingTerm leading(const Polynomial& f, const RigOrder& order);
Polynomial make_monic(const Polynomial& f, const RigOrder& order);
bool is_monic(const Polynomial& f);

}  // namespace rigsgs
