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

#include "rigsgs/ordering.hpp"

#include <algorithm>

#include "rigsgs/error.hpp"

namespace rigsgs {

RigOrder::RigOrder(Mode mode, BaseOrderKind kind) : mode_(mode), kind_(kind) {
  if (mode == Mode::Commutative && kind != BaseOrderKind::DegLex) {
    throw Error(ErrorKind::InvalidArgument,
                "commutative mode supports only the wtlex order");
  }
}

std::strong_ordering RigOrder::compare_base(const BaseMonomial& a,
                                            const BaseMonomial& b) const {
  const auto& x = a.data();
  const auto& y = b.data();
  if (mode_ == Mode::Commutative) {
    std::uint32_t da = degree(mode_, a);
    std::uint32_t db = degree(mode_, b);
    if (da != db) return da <=> db;
    // Highest-precedence generator decides first.
    std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = n; i-- > 0;) {
      std::uint32_t ex = i < x.size() ? x[i] : 0;
      std::uint32_t ey = i < y.size() ? y[i] : 0;
      if (ex != ey) return ex <=> ey;
    }
    return std::strong_ordering::equal;
  }
  if (x.size() != y.size()) return x.size() <=> y.size();
  if (kind_ == BaseOrderKind::DegLex) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) return x[i] <=> y[i];
    }
  } else {
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] != y[i]) return x[i] <=> y[i];
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering RigOrder::compare(const RigMonomial& m,
                                       const RigMonomial& n) const {
  // Walk both descending sequences from the greatest component.
  const auto& a = m.runs();
  const auto& b = n.runs();
  std::size_t i = a.size();
  std::size_t j = b.size();
  while (i > 0 && j > 0) {
    const Run& ra = a[i - 1];
    const Run& rb = b[j - 1];
    auto c = compare_base(ra.base, rb.base);
    if (c != 0) return c;
    if (ra.count != rb.count) {
      // The longer run places `base` where the other sequence has something
      // smaller or has ended.
      return ra.count <=> rb.count;
    }
    --i;
    --j;
  }
  if (i == 0 && j == 0) return std::strong_ordering::equal;
  return i == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string order_keyword(Mode mode, BaseOrderKind kind) {
  if (mode == Mode::Commutative) return "wtlex";
  return kind == BaseOrderKind::DegLex ? "deglex" : "deglenrlex";
}

std::optional<BaseOrderKind> parse_order_keyword(Mode mode,
                                                 std::string_view keyword) {
  if (mode == Mode::Commutative) {
    if (keyword == "wtlex") return BaseOrderKind::DegLex;
    return std::nullopt;
  }
  if (keyword == "deglenrlex") return BaseOrderKind::DegRightLex;
  if (keyword == "deglex") return BaseOrderKind::DegLex;
  return std::nullopt;
}

BaseOrderKind default_order_kind(Mode mode) {
  return mode == Mode::Commutative ? BaseOrderKind::DegLex
                                   : BaseOrderKind::DegRightLex;
}

LeadingTerm leading(const Polynomial& f, const RigOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::NoLeadingTerm, "no leading term");
  // f may have been canonicalized under a different order.
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.less(best->monomial, t.monomial)) best = &t;
  }
  return {best->monomial, best->coeff};
}

Polynomial make_monic(const Polynomial& f, const RigOrder& order) {
  LeadingTerm lt = leading(f, order);
  if (lt.coeff == 1) return f;
  return scale(f, Rational(1) / lt.coeff);
}

bool is_monic(const Polynomial& f) {
  return !f.is_zero() && f.terms().front().coeff == 1;
}

}  // namespace rigsgs
