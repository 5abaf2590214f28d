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

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "rigsgs/oracle.hpp"
#include "testkit.hpp"

using namespace rigsgs;
using fx::m;

namespace {

std::vector<RelationPair> blass_rels() { return preset("blass").defining.relations; }

bool contains(const std::vector<RigMonomial>& v, const RigMonomial& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("one defining step") {
  OracleBounds b;
  b.max_degree = 4;
  ClosureResult r = closure_eq(m("x"), m("1 + x^2"), blass_rels(), fx::cx().order(), 1, b);
  CHECK(r.verdict == ClosureVerdict::Congruent);
  CHECK(r.path.size() == 1);
  CHECK(replay_path(r.path, m("x"), m("1 + x^2"), blass_rels(), fx::cx().order()));
}

TEST_CASE("seven trees are one tree") {
  OracleBounds b;
  b.max_degree = 9;
  b.measure = DegreeMeasure::PerComponent;
  b.max_expansions = 2'000'000;
  ClosureResult r = closure_eq(m("x^7"), m("x"), blass_rels(), fx::cx().order(), 1, b);
  REQUIRE(r.verdict == ClosureVerdict::Congruent);
  CHECK(replay_path(r.path, m("x^7"), m("x"), blass_rels(), fx::cx().order()));
}

TEST_CASE("summed degree bound keeps x^7 isolated") {
  // Each rewrite of x^7 lands on x^6 + x^8, and every further step from
  // there keeps the summed degree above 18.
  OracleBounds b;
  b.max_degree = 14;
  auto cls = closure_class(m("x^7"), blass_rels(), fx::cx().order(), 1, b);
  CHECK(cls.size() == 2);
  CHECK(contains(cls, m("x^6 + x^8")));
}

TEST_CASE("reflexivity") {
  ClosureResult r = closure_eq(m("1 + x^3"), m("1 + x^3"), blass_rels(), fx::cx().order(), 1);
  CHECK(r.verdict == ClosureVerdict::Congruent);
  CHECK(r.path.empty());
}

TEST_CASE("congruence classes") {
  const auto& p = fx::cx();
  std::vector<RelationPair> nat = {{m("1 + 1 + 1 + 1"), m("1 + 1")}};
  OracleBounds b;
  b.max_degree = 6;
  b.measure = DegreeMeasure::PerComponent;
  auto cls = closure_class(m("1 + 1 + 1 + 1"), nat, p.order(), 1, b);
  CHECK(contains(cls, m("1 + 1")));
  CHECK(contains(cls, m("1 + 1 + 1 + 1 + 1 + 1")));
  CHECK_FALSE(contains(cls, m("1 + 1 + 1")));

  CHECK(closure_class(RigMonomial{}, blass_rels(), p.order(), 1) == std::vector<RigMonomial>{RigMonomial{}});

  OracleBounds six;
  six.max_degree = 6;
  auto xc = closure_class(m("x"), blass_rels(), p.order(), 1, six);
  CHECK(contains(xc, m("1 + x^2")));
  CHECK(contains(xc, m("1 + x + x^3")));
  // x + x is a different normal form, so x never reaches its image.
  CHECK_FALSE(contains(xc, m("1 + 1 + x^2 + x^2")));
}

TEST_CASE("symmetry within shared bounds") {
  const RigOrder o = fx::cx().order();
  OracleBounds b;
  b.max_degree = 6;
  auto cls = closure_class(m("x"), blass_rels(), o, 1, b);
  for (const auto& v : cls) {
    INFO(fx::show(v));
    ClosureResult back = closure_eq(v, m("x"), blass_rels(), o, 1, b);
    CHECK(back.verdict == ClosureVerdict::Congruent);
    CHECK(replay_path(back.path, v, m("x"), blass_rels(), o));
  }
}

TEST_CASE("word relations") {
  const auto& p = fx::wxy();
  std::vector<RelationPair> rels = {{m(p, "x y"), m(p, "y x")}};
  const RigOrder o = p.order();
  ClosureResult r = closure_eq(m(p, "x x y + y"), m(p, "y x x + y"), rels, o, 2);
  CHECK(r.verdict == ClosureVerdict::Congruent);
  CHECK(r.path.size() == 2);
  CHECK(replay_path(r.path, m(p, "x x y + y"), m(p, "y x x + y"), rels, o));
  CHECK(closure_eq(m(p, "x x"), m(p, "y y"), rels, o, 2).verdict ==
        ClosureVerdict::NotFoundWithinBounds);
}

TEST_CASE("expansion budget is reported") {
  OracleBounds b;
  b.max_degree = 12;
  b.max_expansions = 3;
  ClosureResult r = closure_eq(m("x"), m("x^2"), blass_rels(), fx::cx().order(), 1, b);
  CHECK(r.verdict == ClosureVerdict::NotFoundWithinBounds);
  CHECK(r.exhausted);
}

TEST_CASE("oracle and engine agree on the completed one-variable systems") {
  OracleBounds b;
  b.max_degree = 6;
  for (const char* name : {"fiore-leinster", "blass"}) {
    Preset pr = preset(name);
    CompletionReport rep = complete(to_system(pr.defining));
    const RigOrder o = rep.basis.order;
    auto all = enumerate_monomials(Mode::Commutative, 1, o, 4, 3);
    for (const auto& u : all) {
      auto cls = closure_class(u, pr.defining.relations, o, 1, b);
      for (const auto& v : all) {
        INFO(name, ": ", fx::show(u), " vs ", fx::show(v));
        // Oracle congruence implies engine equality.
        if (contains(cls, v)) REQUIRE(decide_eq(u, v, rep).decision == Decision::Equal);
      }
    }
  }
}

TEST_CASE("union-find labels on the naturals") {
  auto labels = nat_closure_labels({{4, 2}, {5, 2}}, 10, 20);
  CHECK(labels[2] == labels[3]);
  CHECK(labels[2] == labels[9]);
  CHECK(labels[0] != labels[1]);
  CHECK(labels[1] != labels[2]);
}

}  // TEST_SUITE
