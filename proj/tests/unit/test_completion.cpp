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
#include "properties.hpp"
#include "rigsgs/error.hpp"
#include "testkit.hpp"

using namespace rigsgs;
using fx::m;

namespace {

System one_relation(const char* lhs, const char* rhs) {
  const auto& p = fx::cx();
  return System::make(p.alphabet, p.order(), {fx::poly(p, {{1, lhs}, {-1, rhs}})});
}

}  // namespace

TEST_SUITE("completion") {

TEST_CASE("verify the printed bases") {
  CHECK(verify(fx::fl()).ok);
  CHECK(verify(fx::blass()).ok);
  CHECK(verify(to_system(znc_basis({"y", "x"}, true))).ok);
}

TEST_CASE("verify reports a surviving composition") {
  VerifyResult r = verify(one_relation("1 + x^2", "x"));
  CHECK_FALSE(r.ok);
  CHECK(r.pairs_examined == 4);
  REQUIRE_FALSE(r.witnesses.empty());
  const auto& p = fx::cx();
  Polynomial want = fx::poly(p, {{1, "x + x^4"}, {-1, "1 + x^3"}});
  bool found = false;
  for (const auto& [idx, nf] : r.witnesses) {
    CHECK(idx < r.compositions.size());
    if (make_monic(nf, p.order()) == want) found = true;
  }
  CHECK(found);
}

TEST_CASE("completion of the one-variable presentations") {
  CompletionReport a = complete(to_system(preset("fiore-leinster").defining));
  CHECK(a.status == CompletionStatus::Complete);
  CHECK(testkit::relation_set(a.basis) == testkit::relation_set(fx::fl()));
  CHECK(verify(a.basis).ok);

  CompletionReport b = complete(to_system(preset("blass").defining));
  CHECK(b.status == CompletionStatus::Complete);
  CHECK(testkit::relation_set(b.basis) == testkit::relation_set(fx::blass()));
  CHECK(b.stats.pairs_examined > 0);
  CHECK(b.stats.relations_added > 0);
}

TEST_CASE("truncated completion keeps the prefix of the infinite basis") {
  CompletionLimits lim;
  lim.max_degree = 6;
  CompletionReport r = complete(one_relation("1 + x", "x"), lim);
  CHECK(r.status == CompletionStatus::Truncated);
  CHECK(r.stats.discarded > 0);
  CHECK(testkit::relation_set(r.basis) == testkit::relation_set(to_system(absorbing_prefix(6))));
  CHECK(r.basis.relations.size() == 6);
}

TEST_CASE("step limit truncates") {
  CompletionLimits lim;
  lim.max_steps = 1;
  CHECK(complete(to_system(preset("blass").defining), lim).status == CompletionStatus::Truncated);
}

TEST_CASE("zero relation is rejected") {
  const auto& p = fx::cx();
  CHECK_THROWS_AS(System::make(p.alphabet, p.order(), {Polynomial{}}), Error);
}

TEST_CASE("minimalize") {
  System fl = fx::fl();
  System extra = fl;
  extra.relations.push_back(make_monic(fx::poly(fx::cx(), {{1, "x^5"}, {-1, "x + x + x^3"}}), fl.order));
  CHECK(testkit::relation_set(minimalize(extra)) == testkit::relation_set(fl));
  CHECK(testkit::relation_set(minimalize(fx::blass())) == testkit::relation_set(fx::blass()));
  System single = one_relation("1 + x^2", "x");
  CHECK(minimalize(single).relations == single.relations);
}

TEST_CASE("autoreduce") {
  const auto& p = fx::cx();
  System two = System::make(p.alphabet, p.order(),
                            {fx::poly(p, {{1, "1 + x^2"}, {-1, "x"}}),
                             fx::poly(p, {{1, "x + x^4"}, {-1, "1 + x^3"}})});
  CHECK(testkit::relation_set(autoreduce(two)) == testkit::relation_set(two));
  System single = one_relation("1 + x^2", "x");
  CHECK(autoreduce(single).relations == single.relations);

  // A tail reducible by another relation gets rewritten.
  System tail = System::make(p.alphabet, p.order(),
                             {fx::poly(p, {{1, "x^3"}, {-1, "1 + x^2"}}),
                              fx::poly(p, {{1, "1 + x^2"}, {-1, "x"}})});
  System reduced = autoreduce(tail);
  CHECK(testkit::relation_set(reduced).count("x^3 = x") == 1);
}

TEST_CASE("reduced bases are pairwise occurrence-free and tail-irreducible") {
  for (const System& s : {fx::fl(), fx::blass(), to_system(znc_basis({"y", "x"}, true))}) {
    for (std::size_t i = 0; i < s.relations.size(); ++i) {
      System rest = s;
      rest.relations.erase(rest.relations.begin() + static_cast<std::ptrdiff_t>(i));
      for (const auto& t : s.relations[i].terms()) {
        INFO(fx::show(s.relations[i], s));
        CHECK(is_irreducible(t.monomial, rest));
      }
    }
  }
}

TEST_CASE("word problem decisions") {
  CompletionReport b = complete(to_system(preset("blass").defining));
  CHECK(decide_eq(m("x^7"), m("x"), b).decision == Decision::Equal);
  CHECK(decide_eq(m("x^2"), m("x"), b).decision == Decision::Distinct);
  CHECK(decide_eq(m("x"), m("1 + x^2"), b).decision == Decision::Equal);

  CompletionLimits lim;
  lim.max_degree = 6;
  CompletionReport t = complete(one_relation("1 + x", "x"), lim);
  REQUIRE(t.status == CompletionStatus::Truncated);
  CHECK(decide_eq(m("x^7"), m("1 + x^7"), t).decision == Decision::Unknown);
  CHECK(decide_eq(m("x^3"), m("1 + x^3"), t).decision == Decision::Equal);
}

TEST_CASE("reduced basis does not depend on input order or seed") {
  testkit::Rng rng(77);
  for (const char* name : {"fiore-leinster", "blass", "nat", "znc"}) {
    Preset pr = preset(name);
    System base = to_system(pr.defining);
    const std::string want = render_basis(complete(base).basis);
    System known = pr.basis ? to_system(*pr.basis) : base;
    for (int trial = 0; trial < 6; ++trial) {
      System input = base;
      for (const auto& f : known.relations) {
        if (rng.coin()) input.relations.push_back(f);
      }
      std::shuffle(input.relations.begin(), input.relations.end(), rng.engine());
      CompletionLimits lim;
      lim.seed = rng.below(1u << 30);
      INFO(name, " trial ", trial);
      CHECK(render_basis(complete(input, lim).basis) == want);
    }
  }
}

TEST_CASE("binomial inputs complete to binomials") {
  testkit::Sweep s = testkit::binomial_sweep(5, 30);
  INFO(s.first_failure);
  CHECK(s.ok());
}

}  // TEST_SUITE
