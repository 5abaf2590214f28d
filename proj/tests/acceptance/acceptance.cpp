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

// Acceptance runner: one PASS/FAIL line per criterion, with timings and
// indented evidence lines. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "properties.hpp"
#include "rigsgs/oracle.hpp"
#include "rigsgs/presets.hpp"
#include "testkit.hpp"

using namespace rigsgs;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
    pass = pass && ok;
  }
  void info(const std::string& what) { notes.push_back("info  " + what); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

const Presentation& one_var() {
  static const Presentation p = parse_presentation("mode: commutative\nvars: x\n");
  return p;
}
RigMonomial mx(const std::string& e) { return parse_expr(e, one_var()); }

std::string show_set_diff(const std::set<std::string>& got, const std::set<std::string>& want) {
  std::string out;
  for (const auto& s : got) {
    if (!want.count(s)) out += " +[" + s + "]";
  }
  for (const auto& s : want) {
    if (!got.count(s)) out += " -[" + s + "]";
  }
  return out.empty() ? "identical" : out;
}

void basis_equals(Outcome& o, const System& got, const System& want, const std::string& label) {
  auto g = testkit::relation_set(got);
  auto w = testkit::relation_set(want);
  o.require(g == w, label + ": " + std::to_string(g.size()) + " relations, " + show_set_diff(g, w));
}

void family_agreement(Outcome& o, const System& basis, Family fam) {
  auto irr = enum_irr(basis, 12, 6);
  std::vector<RigMonomial> fam_set;
  for (const auto& x : enumerate_monomials(Mode::Commutative, 1, basis.order, 12, 6)) {
    if (family_member(x, fam)) fam_set.push_back(x);
  }
  std::size_t missing = 0;
  std::size_t extra = 0;
  std::set<RigMonomial, RigLess> a(irr.begin(), irr.end(), RigLess{&basis.order});
  std::set<RigMonomial, RigLess> b(fam_set.begin(), fam_set.end(), RigLess{&basis.order});
  for (const auto& x : a) extra += b.count(x) ? 0 : 1;
  for (const auto& x : b) missing += a.count(x) ? 0 : 1;
  o.require(extra == 0 && missing == 0,
            std::to_string(a.size()) + " irreducibles, " + std::to_string(b.size()) +
                " family members, " + std::to_string(extra) + " only irreducible, " +
                std::to_string(missing) + " only in family");
}

IntPoly random_int_poly(testkit::Rng& rng) {
  IntPoly p;
  const std::uint32_t terms = 1 + rng.below(4);
  for (std::uint32_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> w(rng.below(4));
    for (auto& g : w) g = rng.below(2);
    std::int64_t c = static_cast<std::int64_t>(rng.below(6)) - 3;
    if (c >= 0) ++c;  // [-3, 3] without 0
    p = int_add(p, IntPoly{{{w, c}}});
  }
  return p;
}

// Runs the integer-word checks against one instantiated basis.
void integer_words(Outcome& o, const System& s, const std::string& label, bool strict) {
  auto record = [&](bool ok, const std::string& what) {
    if (strict) {
      o.require(ok, label + ": " + what);
    } else {
      o.info(label + ": " + what + (ok ? " [holds]" : " [fails]"));
    }
  };
  VerifyResult v = verify(s);
  std::string vnote = std::to_string(v.compositions.size()) + " compositions, " +
                      std::to_string(v.witnesses.size()) + " non-trivial";
  if (!v.witnesses.empty()) {
    vnote += "; first survivor " + render(v.witnesses.front().second, s.mode(), s.alphabet);
  }
  record(v.ok, "verify (" + std::to_string(s.relations.size()) + " relations): " + vnote);

  std::size_t bad = 0;
  std::string first_bad;
  auto irr = enum_irr(s, 4, 3);
  for (const auto& x : irr) {
    if (!family_member(x, Family::IntegerWords)) {
      if (bad++ == 0) first_bad = render(x, s.mode(), s.alphabet);
    }
  }
  record(bad == 0, "irreducibles within degree 4 keep marks on first letters (" +
                       std::to_string(irr.size()) + " checked, " + std::to_string(bad) +
                       " off-shape" + (bad ? ", e.g. " + first_bad : std::string()) + ")");

  testkit::Rng rng(57);
  std::size_t sigma_bad = 0;
  for (int i = 0; i < 100; ++i) {
    IntPoly p = random_int_poly(rng);
    IntPoly q = random_int_poly(rng);
    if (!sigma_check(p, q, s).ok()) ++sigma_bad;
  }
  record(sigma_bad == 0, "image map respects sum and product on 100 random pairs (" +
                             std::to_string(sigma_bad) + " mismatches)");
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> cs;

  cs.push_back({1, "Fiore-Leinster basis verifies", 5.0, [](Outcome& o) {
    System b = to_system(*preset("fiore-leinster").basis);
    VerifyResult v = verify(b);
    o.require(v.ok, std::to_string(v.compositions.size()) + " compositions, " +
                        std::to_string(v.witnesses.size()) + " non-trivial");
  }});

  cs.push_back({2, "Fiore-Leinster completion gives the five relations", 10.0, [](Outcome& o) {
    Preset p = preset("fiore-leinster");
    CompletionReport r = complete(to_system(p.defining));
    o.require(r.status == CompletionStatus::Complete, std::string("status ") + status_name(r.status));
    basis_equals(o, r.basis, to_system(*p.basis), "reduced basis");
  }});

  cs.push_back({3, "Blass basis verifies and completion gives it", 10.0, [](Outcome& o) {
    Preset p = preset("blass");
    VerifyResult v = verify(to_system(*p.basis));
    o.require(v.ok, "verify: " + std::to_string(v.witnesses.size()) + " non-trivial");
    CompletionReport r = complete(to_system(p.defining));
    o.require(r.status == CompletionStatus::Complete, std::string("status ") + status_name(r.status));
    basis_equals(o, r.basis, to_system(*p.basis), "reduced basis");
  }});

  cs.push_back({4, "Fiore-Leinster irreducibles match the closed-form family", 10.0, [](Outcome& o) {
    family_agreement(o, to_system(*preset("fiore-leinster").basis), Family::FioreLeinster);
  }});

  cs.push_back({5, "Blass irreducibles match the closed-form family", 10.0, [](Outcome& o) {
    family_agreement(o, to_system(*preset("blass").basis), Family::Blass);
  }});

  cs.push_back({6, "alternative Blass normal form by transport", 20.0, [](Outcome& o) {
    CompletionReport r = complete(to_system(preset("blass").defining));
    auto dom = blass_family_truncation(4);
    TransportResult t = transport_check(dom, blass_alternative_map, r);
    o.require(t.injective, "injective on " + std::to_string(dom.size()) + " members");
    o.require(t.congruent, "every member congruent to its image");
    o.require(t.distinct, "images pairwise non-congruent");
  }});

  cs.push_back({7, "seven trees in one", 30.0, [](Outcome& o) {
    Preset p = preset("blass");
    CompletionReport r = complete(to_system(p.defining));
    o.require(decide_eq(mx("x^7"), mx("x"), r).decision == Decision::Equal, "x^7 = x by normal forms");
    for (int k = 2; k <= 6; ++k) {
      std::string e = "x^" + std::to_string(k);
      o.require(decide_eq(mx(e), mx("x"), r).decision == Decision::Distinct, e + " != x");
    }
    const RigOrder order = p.defining.order();
    const auto& rels = p.defining.relations;
    OracleBounds b;
    b.max_degree = 9;
    b.measure = DegreeMeasure::PerComponent;
    ClosureResult c = closure_eq(mx("x^7"), mx("x"), rels, order, 1, b);
    bool congruent = c.verdict == ClosureVerdict::Congruent;
    o.require(congruent, "closure under x = 1 + x^2, each summand of degree <= 9: " +
                             std::to_string(c.path.size()) + " steps, " +
                             std::to_string(c.expansions) + " expansions");
    o.require(congruent && replay_path(c.path, mx("x^7"), mx("x"), rels, order), "witness path replays");

    OracleBounds total;
    total.max_degree = 9;
    ClosureResult t = closure_eq(mx("x^7"), mx("x"), rels, order, 1, total);
    o.info(std::string("summed degree <= 9 on the defining relation: ") +
           (t.verdict == ClosureVerdict::Congruent ? "congruent" : "not found") +
           " (x^7 alone already has degree 7 and every step reaches 14)");
    std::vector<RelationPair> basis_rels;
    for (const auto& f : r.basis.relations) {
      basis_rels.emplace_back(f.terms()[0].monomial, f.terms()[1].monomial);
    }
    ClosureResult viab = closure_eq(mx("x^7"), mx("x"), basis_rels, order, 1);
    o.require(viab.verdict == ClosureVerdict::Congruent &&
                  replay_path(viab.path, mx("x^7"), mx("x"), basis_rels, order),
              "closure over the completed relations, default bounds: " +
                  std::to_string(viab.path.size()) + " steps");

    CompletionReport fl = complete(to_system(preset("fiore-leinster").defining));
    o.require(decide_eq(mx("x^5"), mx("x"), fl).decision == Decision::Equal,
              "x^5 = x under Fiore-Leinster");
  }});

  cs.push_back({8, "integer noncommutative polynomials over {x, y}", 30.0, [](Outcome& o) {
    integer_words(o, to_system(znc_basis({"y", "x"})), "stated relations", true);
    System amended = to_system(znc_basis({"y", "x"}, true));
    integer_words(o, amended, "stated relations + e' e' = 1", false);
    CompletionReport r = complete(to_system(znc_basis({"y", "x"})));
    o.info(std::string("completing the stated relations: ") + status_name(r.status) + ", " +
           std::to_string(r.basis.relations.size()) + " relations, " +
           (testkit::relation_set(r.basis) == testkit::relation_set(amended)
                ? "equal to stated + e' e' = 1"
                : "differs from stated + e' e' = 1"));
  }});

  cs.push_back({9, "every congruence on the naturals has one generator", 20.0, [](Outcome& o) {
    testkit::Rng rng(9);
    std::size_t multi = 0;
    std::size_t mismatch = 0;
    std::size_t trivial = 0;
    std::string first;
    for (int i = 0; i < 50; ++i) {
      std::vector<NatPair> pairs(1 + rng.below(4));
      std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;
      for (auto& pr : pairs) {
        pr = {rng.below(9), rng.below(9)};
        raw.emplace_back(pr.n, pr.m);
      }
      std::optional<NatPair> g;
      try {
        auto all = nat_basis_pairs(pairs);
        if (all.size() > 1) {
          ++multi;
          continue;
        }
        g = nat_congruence_generator(pairs);
      } catch (const std::exception& e) {
        ++multi;
        if (first.empty()) first = e.what();
        continue;
      }
      if (!g) ++trivial;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> one;
      if (g) one.emplace_back(g->n, g->m);
      auto want = nat_closure_labels(raw, 16, 64);
      auto got = nat_closure_labels(one, 16, 64);
      bool same = true;
      for (std::uint32_t a = 0; a <= 16; ++a) {
        for (std::uint32_t b = 0; b <= 16; ++b) {
          if ((want[a] == want[b]) != (got[a] == got[b])) same = false;
        }
      }
      if (!same) {
        ++mismatch;
        if (first.empty()) {
          first = "generator " + (g ? std::to_string(g->n) + "~" + std::to_string(g->m) : "none");
        }
      }
    }
    o.require(multi == 0, "reduced basis holds at most one numeric relation (" +
                              std::to_string(multi) + " exceptions)");
    o.require(mismatch == 0, "closure of the generator equals closure of the input on {0..16} (" +
                                 std::to_string(mismatch) + " mismatches" +
                                 (first.empty() ? "" : ", " + first) + ")");
    o.info(std::to_string(trivial) + " of 50 sets generate the identity congruence");
  }});

  cs.push_back({10, "the non-Noetherian chain", 20.0, [](Outcome& o) {
    const auto& p = one_var();
    CompletionLimits lim;
    lim.max_degree = 10;
    System in = System::make(p.alphabet, p.order(),
                             {Polynomial::from_terms({{mx("1 + x"), 1}, {mx("x"), -1}}, p.order())});
    CompletionReport r = complete(in, lim);
    o.require(r.status == CompletionStatus::Truncated, std::string("status ") + status_name(r.status));
    basis_equals(o, r.basis, to_system(absorbing_prefix(10)), "truncated basis vs 1 + x^n = x^n, n <= 10");
    auto chain = noetherian_chain_demo(5);
    bool strict = chain.size() == 5;
    for (const auto& lvl : chain) strict = strict && lvl.strict;
    o.require(strict, "levels 1..5 strict (1 + x^(n+1) outside the n-th ideal)");
  }});

  cs.push_back({11, "reduced basis is unique", 60.0, [](Outcome& o) {
    testkit::Rng rng(11);
    for (const char* name : {"fiore-leinster", "blass", "nat", "znc", "example-5-9"}) {
      Preset pr = preset(name);
      CompletionLimits lim;
      if (!pr.basis) lim.max_degree = 8;
      System base = to_system(pr.defining);
      System extra = pr.basis ? to_system(*pr.basis) : to_system(absorbing_prefix(4));
      std::set<std::string> outputs;
      for (int trial = 0; trial < 10; ++trial) {
        System input = base;
        for (const auto& f : extra.relations) {
          if (rng.coin()) input.relations.push_back(f);
        }
        std::shuffle(input.relations.begin(), input.relations.end(), rng.engine());
        CompletionLimits run = lim;
        run.seed = rng.below(1u << 30);
        CompletionReport r = complete(input, run);
        outputs.insert(std::string(status_name(r.status)) + "\n" + render_basis(r.basis));
      }
      o.require(outputs.size() == 1, std::string(name) + ": " + std::to_string(outputs.size()) +
                                         " distinct outputs over 10 runs");
    }
  }});

  cs.push_back({12, "property suites", 60.0, [](Outcome& o) {
    auto run = [&](const char* label, const testkit::Sweep& s) {
      o.require(s.ok(), std::string(label) + ": " + std::to_string(s.cases) + " cases, " +
                            std::to_string(s.failures) + " failures" +
                            (s.first_failure.empty() ? "" : " (" + s.first_failure + ")"));
    };
    run("ordering axioms and context compatibility", testkit::ordering_sweep(31337, 10000));
    run("semiring laws", testkit::algebra_sweep(4242, 3000));
    run("trace replay", testkit::trace_sweep(2718, 1500));
    run("compositions below ambiguities", testkit::composition_sweep(1618, 300));
    run("binomial closure", testkit::binomial_sweep(1414, 60));
  }});

  return cs;
}

}  // namespace

int main() {
  int failed = 0;
  auto start_all = std::chrono::steady_clock::now();
  for (const auto& c : criteria()) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.require(false, "over time budget of " + std::to_string(static_cast<int>(c.budget_s)) + " s");
    }
    std::printf("%s  %2d  %s  (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    for (const auto& n : o.notes) std::printf("          %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_all).count();
  std::printf("%d of 12 criteria passed (%.2f s)\n", 12 - failed, total);
  return failed == 0 ? 0 : 1;
}
