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

#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "rigsgs/frontend.hpp"
#include "rigsgs/presets.hpp"

namespace fx {

using namespace rigsgs;

/// One commutative variable x.
inline const Presentation& cx() {
  static const Presentation p = parse_presentation("mode: commutative\nvars: x\n");
  return p;
}
/// Commutative x, y with y above x.
inline const Presentation& cxy() {
  static const Presentation p = parse_presentation("mode: commutative\nvars: x y\n");
  return p;
}
/// Words over x, y with y above x.
inline const Presentation& wxy() {
  static const Presentation p = parse_presentation("mode: noncommutative\nvars: x y\n");
  return p;
}
/// The integer-polynomial alphabet over generators y < x.
inline const Presentation& znc() {
  static const Presentation p = znc_basis({"y", "x"});
  return p;
}

inline RigMonomial m(const Presentation& p, const std::string& e) { return parse_expr(e, p); }
inline RigMonomial m(const std::string& e) { return parse_expr(e, cx()); }

/// Sum of coefficient * monomial.
inline Polynomial poly(const Presentation& p,
                       std::initializer_list<std::pair<Rational, std::string>> terms) {
  std::vector<Term> ts;
  for (const auto& [c, e] : terms) ts.push_back({parse_expr(e, p), c});
  return Polynomial::from_terms(std::move(ts), p.order());
}

inline System fl() { return to_system(*preset("fiore-leinster").basis); }
inline System blass() { return to_system(*preset("blass").basis); }

inline std::string show(const RigMonomial& x, const Presentation& p = cx()) {
  return render(x, p.mode, p.alphabet);
}
inline std::string show(const Polynomial& f, const System& s) {
  return render(f, s.mode(), s.alphabet);
}

}  // namespace fx
