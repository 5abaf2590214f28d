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

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "properties.hpp"
#include "rigsgs/error.hpp"
#include "testkit.hpp"

using namespace rigsgs;
using fx::m;

TEST_SUITE("ordering") {

TEST_CASE("comparisons from the one-variable bases") {
  const RigOrder o = fx::cx().order();
  CHECK(o.compare(m("1 + x^2"), m("x")) > 0);
  CHECK(o.compare(m("x + x^3"), m("1 + x^2")) > 0);
  CHECK(o.compare(RigMonomial{}, m("1")) < 0);
  CHECK(o.compare(m("x^3"), m("x + x")) > 0);
  CHECK(o.compare(m("x + x"), m("x")) > 0);
}

TEST_CASE("inverse-marked words under right-to-left comparison") {
  const auto& p = fx::znc();
  CHECK(p.order().compare(m(p, "x' y'"), m(p, "x y")) > 0);
  CHECK(p.order().compare(m(p, "x y'"), m(p, "x' y")) > 0);
  CHECK(p.order().compare(m(p, "x + x'"), RigMonomial{}) > 0);
}

TEST_CASE("letter precedence follows declaration order") {
  const auto& p = fx::znc();
  const RigOrder o = p.order();
  // e' < y < y' < x < x'
  CHECK(o.compare(m(p, "e'"), m(p, "y")) < 0);
  CHECK(o.compare(m(p, "y"), m(p, "y'")) < 0);
  CHECK(o.compare(m(p, "y'"), m(p, "x")) < 0);
  CHECK(o.compare(m(p, "x"), m(p, "x'")) < 0);
  CHECK(o.compare(m(p, "1"), m(p, "e'")) < 0);
}

TEST_CASE("leading term and monic scaling") {
  const auto& p = fx::cx();
  const RigOrder o = p.order();
  LeadingTerm a = leading(fx::poly(p, {{1, "1 + x^2"}, {-1, "x"}}), o);
  CHECK(a.monomial == m("1 + x^2"));
  CHECK(a.coeff == 1);
  LeadingTerm b = leading(fx::poly(p, {{1, "0"}}), o);
  CHECK(b.monomial.is_theta());
  const auto& z = fx::znc();
  CHECK(leading(fx::poly(z, {{1, "x + x'"}, {-1, "0"}}), z.order()).monomial == m(z, "x + x'"));
  CHECK_THROWS_AS(leading(Polynomial{}, o), Error);

  CHECK(make_monic(fx::poly(p, {{2, "x"}, {-2, "0"}}), o) == fx::poly(p, {{1, "x"}, {-1, "0"}}));
  Polynomial monic = fx::poly(p, {{1, "1 + x^2"}, {-1, "x"}});
  CHECK(make_monic(monic, o) == monic);
  CHECK(make_monic(fx::poly(p, {{-1, "x^5"}, {1, "1 + x^4"}}), o) ==
        fx::poly(p, {{1, "x^5"}, {-1, "1 + x^4"}}));
  CHECK(is_monic(monic));
  CHECK_THROWS_AS(make_monic(Polynomial{}, o), Error);
}

TEST_CASE("printed left sides of the preset bases lead") {
  std::vector<Presentation> bases = {*preset("fiore-leinster").basis, *preset("blass").basis,
                                     fx::znc()};
  for (const auto& b : bases) {
    const RigOrder o = b.order();
    for (const auto& [lhs, rhs] : b.relations) {
      INFO(render(lhs, b.mode, b.alphabet), " = ", render(rhs, b.mode, b.alphabet));
      CHECK(o.compare(lhs, rhs) > 0);
    }
  }
}

TEST_CASE("order keywords") {
  CHECK(order_keyword(Mode::Commutative, BaseOrderKind::DegLex) == "wtlex");
  CHECK(order_keyword(Mode::Noncommutative, BaseOrderKind::DegRightLex) == "deglenrlex");
  CHECK(parse_order_keyword(Mode::Noncommutative, "deglex") == BaseOrderKind::DegLex);
  CHECK_FALSE(parse_order_keyword(Mode::Commutative, "deglenrlex").has_value());
  CHECK(default_order_kind(Mode::Noncommutative) == BaseOrderKind::DegRightLex);
  CHECK_THROWS_AS(RigOrder(Mode::Commutative, BaseOrderKind::DegRightLex), Error);
}

TEST_CASE("base order agrees with its definition") {
  testkit::Rng rng(5);
  for (auto kind : {BaseOrderKind::DegLex, BaseOrderKind::DegRightLex}) {
    for (auto mode : {Mode::Commutative, Mode::Noncommutative}) {
      if (mode == Mode::Commutative && kind != BaseOrderKind::DegLex) continue;
      RigOrder o(mode, kind);
      for (int i = 0; i < 2000; ++i) {
        BaseMonomial a = testkit::random_base(rng, mode, 3, 4);
        BaseMonomial b = testkit::random_base(rng, mode, 3, 4);
        int c = o.compare_base(a, b) < 0 ? -1 : o.compare_base(a, b) > 0 ? 1 : 0;
        REQUIRE(c == testkit::ref_compare_base(mode, kind, a, b));
      }
    }
  }
}

TEST_CASE("order axioms and context compatibility on 10^4 cases") {
  testkit::Sweep s = testkit::ordering_sweep(2024, 10000);
  INFO(s.first_failure);
  CHECK(s.ok());
}

TEST_CASE("descending chains inside a bound are finite") {
  const RigOrder o = fx::cx().order();
  auto all = enumerate_monomials(Mode::Commutative, 1, o, 6, 4);
  REQUIRE(!all.empty());
  for (std::size_t i = 1; i < all.size(); ++i) REQUIRE(o.compare(all[i - 1], all[i]) < 0);
  testkit::Rng rng(3);
  for (int walk = 0; walk < 200; ++walk) {
    std::size_t pos = rng.below(static_cast<std::uint32_t>(all.size()));
    std::size_t steps = 0;
    while (pos > 0) {
      pos = rng.below(static_cast<std::uint32_t>(pos));  // strictly smaller element
      ++steps;
    }
    CHECK(steps < all.size());
  }
}

}  // TEST_SUITE
