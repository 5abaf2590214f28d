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

#include "rigsgs/presets.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rigsgs/error.hpp"
#include "rigsgs/oracle.hpp"

namespace rigsgs {

namespace {

const char* kFioreLeinster =
    "mode: commutative\nvars: x\norder: wtlex\nrel: x = 1 + x + x^2\n";
const char* kFioreLeinsterBasis =
    "mode: commutative\nvars: x\norder: wtlex\n"
    "rel: x^4 = 1 + 1 + x^2\n"
    "rel: x + x^3 = 1 + x^2\n"
    "rel: 1 + x + x^2 = x\n"
    "rel: 1 + x^2 + x^2 = x^2\n"
    "rel: 1 + x^2 + x^3 = x^3\n";
const char* kBlass = "mode: commutative\nvars: x\norder: wtlex\nrel: x = 1 + x^2\n";
const char* kBlassBasis =
    "mode: commutative\nvars: x\norder: wtlex\n"
    "rel: 1 + x^2 = x\n"
    "rel: x + x^4 = 1 + x^3\n"
    "rel: x^5 = 1 + x^4\n"
    "rel: 1 + x^3 + x^3 = x^3\n"
    "rel: 1 + x^3 + x^4 = x^4\n";
const char* kNat = "mode: commutative\nvars: x\norder: wtlex\nrel: x = 1\n";
const char* kExample59 = "mode: commutative\nvars: x\norder: wtlex\nrel: 1 + x = x\n";

const RigOrder& comm_order() {
  static const RigOrder order(Mode::Commutative, BaseOrderKind::DegLex);
  return order;
}

BaseMonomial xpow(std::uint32_t k) {
  return k == 0 ? BaseMonomial{} : BaseMonomial::exponents({k});
}

// Rig monomial in one commutative variable from (exponent, count) pairs.
RigMonomial xmono(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> parts) {
  std::vector<BaseMonomial> comps;
  for (auto [e, c] : parts) {
    for (std::uint32_t i = 0; i < c; ++i) comps.push_back(xpow(e));
  }
  return RigMonomial::from_components(std::move(comps), comm_order());
}

// Exponent histogram of a one-variable monomial; nullopt if another
// variable occurs.
std::optional<std::map<std::uint32_t, std::uint32_t>> histogram(const RigMonomial& m) {
  std::map<std::uint32_t, std::uint32_t> h;
  for (const auto& r : m.runs()) {
    const auto& d = r.base.data();
    if (d.size() > 1) return std::nullopt;
    h[d.empty() ? 0 : d[0]] += r.count;
  }
  return h;
}

bool support_within(const std::map<std::uint32_t, std::uint32_t>& h,
                    std::initializer_list<std::uint32_t> allowed) {
  for (const auto& [e, c] : h) {
    if (std::find(allowed.begin(), allowed.end(), e) == allowed.end()) return false;
  }
  return true;
}

std::uint32_t count(const std::map<std::uint32_t, std::uint32_t>& h, std::uint32_t e) {
  auto it = h.find(e);
  return it == h.end() ? 0 : it->second;
}

std::string trim_copy(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

bool plain_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fiore-leinster", "blass", "znc", "nat", "example-5-9"};
}

Presentation znc_basis(const std::vector<std::string>& generators,
                       bool unit_square) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!plain_identifier(g) || g == "e" || !seen.insert(g).second) {
      throw Error(ErrorKind::InvalidArgument, "invalid znc generator '" + g + "'");
    }
  }
  if (generators.empty()) {
    throw Error(ErrorKind::InvalidArgument, "znc needs at least one generator");
  }
  std::string text = "mode: noncommutative\nvars: e'";
  for (const auto& g : generators) text += " " + g + " " + g + "'";
  text += "\norder: deglenrlex\n";
  for (const auto& x : generators) text += "rel: " + x + " + " + x + "' = 0\n";
  text += "rel: 1 + e' = 0\n";
  for (const auto& x : generators) {
    for (const auto& y : generators) text += "rel: " + x + "' " + y + "' = " + x + " " + y + "\n";
  }
  for (const auto& x : generators) {
    for (const auto& y : generators) text += "rel: " + x + " " + y + "' = " + x + "' " + y + "\n";
  }
  for (const auto& x : generators) {
    text += "rel: " + x + " e' = " + x + "'\n";
    text += "rel: " + x + "' e' = " + x + "\n";
  }
  for (const auto& x : generators) {
    text += "rel: e' " + x + " = " + x + "'\n";
    text += "rel: e' " + x + "' = " + x + "\n";
  }
  if (unit_square) text += "rel: e' e' = 1\n";
  return parse_presentation(text);
}

Presentation absorbing_prefix(std::uint32_t n) {
  std::string text = "mode: commutative\nvars: x\norder: wtlex\n";
  for (std::uint32_t k = 1; k <= n; ++k) {
    text += "rel: 1 + x^" + std::to_string(k) + " = x^" + std::to_string(k) + "\n";
  }
  return parse_presentation(text);
}

Preset preset(std::string_view name) {
  Preset p;
  p.name = std::string(name);
  if (name == "fiore-leinster") {
    p.summary = "x = 1 + x + x^2 (five-relation reduced basis)";
    p.defining = parse_presentation(kFioreLeinster);
    p.basis = parse_presentation(kFioreLeinsterBasis);
  } else if (name == "blass") {
    p.summary = "x = 1 + x^2 (five-relation reduced basis)";
    p.defining = parse_presentation(kBlass);
    p.basis = parse_presentation(kBlassBasis);
  } else if (name == "nat") {
    p.summary = "the natural numbers, x = 1";
    p.defining = parse_presentation(kNat);
    p.basis = p.defining;
  } else if (name == "example-5-9") {
    p.summary = "1 + x = x; reduced basis {1 + x^n = x^n : n >= 1} is infinite";
    p.defining = parse_presentation(kExample59);
  } else if (name == "znc" || (name.size() > 5 && name.substr(0, 4) == "znc(" &&
                               name.back() == ')')) {
    std::vector<std::string> gens;
    if (name == "znc") {
      gens = {"y", "x"};
    } else {
      std::string inner(name.substr(4, name.size() - 5));
      std::stringstream ss(inner);
      std::string g;
      while (std::getline(ss, g, ',')) gens.push_back(trim_copy(g));
    }
    p.summary = "integer noncommutative polynomials; generators ascending";
    p.defining = znc_basis(gens);
    p.basis = p.defining;
  } else {
    throw Error(ErrorKind::UnknownPreset, "unknown preset '" + std::string(name) + "'");
  }
  return p;
}

bool family_member(const RigMonomial& m, Family fam) {
  if (fam == Family::IntegerWords) {
    for (const auto& r : m.runs()) {
      const auto& w = r.base.data();
      if (w.empty()) continue;
      if (w[0] == 0 && w.size() != 1) return false;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] % 2 == 0) return false;  // e' or a marked generator
      }
    }
    return true;
  }
  auto h = histogram(m);
  if (!h) return false;
  switch (fam) {
    case Family::FioreLeinster:
      return (support_within(*h, {0, 2}) && count(*h, 2) == 1 && count(*h, 0) >= 1) ||
             support_within(*h, {0, 1}) || support_within(*h, {0, 3}) ||
             support_within(*h, {1, 2}) || support_within(*h, {2, 3});
    case Family::Blass:
      return support_within(*h, {0, 1}) || support_within(*h, {1, 2}) ||
             support_within(*h, {2, 3}) || support_within(*h, {3, 4}) ||
             (support_within(*h, {0, 3}) && count(*h, 3) <= 1) ||
             support_within(*h, {0, 4});
    case Family::BlassAlternative:
      return (support_within(*h, {0, 2, 4}) && count(*h, 2) == 1 && count(*h, 4) == 1) ||
             support_within(*h, {0, 2}) || support_within(*h, {2, 4}) ||
             support_within(*h, {0, 4});
    case Family::IntegerWords:
      break;
  }
  return false;
}

std::vector<RigMonomial> blass_family_truncation(std::uint32_t max_param) {
  std::vector<RigMonomial> out;
  for (std::uint32_t t = 0; t <= 3; ++t) {
    for (std::uint32_t n = 0; n <= max_param; ++n) {
      for (std::uint32_t m = 0; m <= max_param; ++m) {
        out.push_back(xmono({{t, n}, {t + 1, m}}));
      }
    }
  }
  for (std::uint32_t n = 0; n <= max_param; ++n) {
    out.push_back(xmono({{0, n}, {3, 1}}));
    for (std::uint32_t m = 0; m <= max_param; ++m) out.push_back(xmono({{0, n}, {4, m}}));
  }
  std::sort(out.begin(), out.end(), RigLess{&comm_order()});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RigMonomial blass_alternative_map(const RigMonomial& u) {
  auto h = histogram(u);
  if (!h) throw Error(ErrorKind::InvalidArgument, "not a one-variable monomial");
  auto c = [&](std::uint32_t e) { return count(*h, e); };
  // Overlapping parameterizations give the same image.
  if (support_within(*h, {0, 1})) return xmono({{0, c(0) + c(1)}, {2, c(1)}});
  if (support_within(*h, {1, 2})) return xmono({{0, c(1)}, {2, c(1) + c(2)}});
  if (support_within(*h, {2, 3})) return xmono({{2, c(2) + c(3)}, {4, c(3)}});
  if (support_within(*h, {3, 4})) return xmono({{2, c(3)}, {4, c(3) + c(4)}});
  if (support_within(*h, {0, 3}) && c(3) == 1) return xmono({{0, c(0)}, {2, 1}, {4, 1}});
  if (support_within(*h, {0, 4})) return u;
  throw Error(ErrorKind::InvalidArgument, "monomial outside the Blass family");
}

TransportResult transport_check(
    const std::vector<RigMonomial>& domain,
    const std::function<RigMonomial(const RigMonomial&)>& map,
    const CompletionReport& report) {
  TransportResult out;
  const RigOrder& order = report.basis.order;
  std::vector<RigMonomial> images;
  images.reserve(domain.size());
  for (const auto& u : domain) images.push_back(map(u));

  std::map<RigMonomial, std::size_t, RigLess> first_pre{RigLess{&order}};
  for (std::size_t i = 0; i < domain.size(); ++i) {
    auto [it, fresh] = first_pre.emplace(images[i], i);
    if (!fresh && domain[it->second] != domain[i]) out.injective = false;
    if (decide_eq(domain[i], images[i], report).decision != Decision::Equal) {
      out.congruent = false;
    }
  }
  if (report.status != CompletionStatus::Complete) {
    out.distinct = false;
    return out;
  }
  std::vector<std::string> forms;
  for (const auto& [img, idx] : first_pre) {
    Polynomial nf = reduce(Polynomial::monomial(img), report.basis);
    forms.push_back(render(nf, report.basis.mode(), report.basis.alphabet));
  }
  std::sort(forms.begin(), forms.end());
  if (std::adjacent_find(forms.begin(), forms.end()) != forms.end()) out.distinct = false;
  return out;
}

std::vector<NatPair> nat_basis_pairs(const std::vector<NatPair>& pairs) {
  Presentation p = parse_presentation(kNat);
  for (const auto& pr : pairs) {
    if (pr.n == pr.m) continue;
    p.relations.emplace_back(RigMonomial::single(BaseMonomial{}, pr.n),
                             RigMonomial::single(BaseMonomial{}, pr.m));
  }
  CompletionReport rep = complete(to_system(p));
  if (rep.status != CompletionStatus::Complete) {
    throw Error(ErrorKind::BudgetExhausted, "completion on the naturals truncated");
  }
  const RigMonomial x = RigMonomial::single(BaseMonomial::exponents({1}));
  const RigMonomial one = RigMonomial::single(BaseMonomial{});
  auto ones = [](const RigMonomial& m) -> std::optional<std::uint32_t> {
    if (m.is_theta()) return 0;
    if (m.runs().size() == 1 && m.runs()[0].base.is_one()) return m.runs()[0].count;
    return std::nullopt;
  };
  std::vector<NatPair> out;
  for (const auto& f : rep.basis.relations) {
    if (!is_binomial(f)) throw Error(ErrorKind::Internal, "non-binomial relation");
    const RigMonomial& lhs = f.terms()[0].monomial;
    const RigMonomial& rhs = f.terms()[1].monomial;
    if (lhs == x && rhs == one) continue;
    auto n = ones(lhs);
    auto m = ones(rhs);
    if (!n || !m) throw Error(ErrorKind::Internal, "unexpected relation shape");
    out.push_back({*n, *m});
  }
  return out;
}

std::optional<NatPair> nat_congruence_generator(const std::vector<NatPair>& pairs) {
  auto all = nat_basis_pairs(pairs);
  if (all.size() > 1) {
    throw Error(ErrorKind::Internal, "reduced basis has more than one generator");
  }
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<ChainLevel> noetherian_chain_demo(std::uint32_t depth) {
  std::vector<ChainLevel> out;
  for (std::uint32_t n = 1; n <= depth; ++n) {
    System s = to_system(absorbing_prefix(n));
    RigMonomial w = xmono({{0, 1}, {n + 1, 1}});
    out.push_back({n, w, is_irreducible(w, s)});
  }
  return out;
}

IntPoly int_add(const IntPoly& p, const IntPoly& q) {
  IntPoly r = p;
  for (const auto& [w, c] : q.terms) {
    auto& slot = r.terms[w];
    slot += c;
    if (slot == 0) r.terms.erase(w);
  }
  return r;
}

IntPoly int_mul(const IntPoly& p, const IntPoly& q) {
  IntPoly r;
  for (const auto& [a, ca] : p.terms) {
    for (const auto& [b, cb] : q.terms) {
      std::vector<std::uint32_t> w = a;
      w.insert(w.end(), b.begin(), b.end());
      auto& slot = r.terms[w];
      slot += ca * cb;
      if (slot == 0) r.terms.erase(w);
    }
  }
  return r;
}

RigMonomial sigma(const IntPoly& p, const RigOrder& order) {
  std::vector<BaseMonomial> comps;
  for (const auto& [w, c] : p.terms) {
    std::vector<std::uint32_t> letters;
    for (auto g : w) letters.push_back(1 + 2 * g);
    if (c < 0) {
      if (letters.empty()) {
        letters.push_back(0);
      } else {
        letters[0] += 1;
      }
    }
    std::int64_t k = c < 0 ? -c : c;
    for (std::int64_t i = 0; i < k; ++i) comps.push_back(BaseMonomial::word(letters));
  }
  return RigMonomial::from_components(std::move(comps), order);
}

SigmaResult sigma_check(const IntPoly& p, const IntPoly& q, const System& basis) {
  const RigOrder& order = basis.order;
  auto nf = [&](const RigMonomial& m) { return reduce(Polynomial::monomial(m), basis); };
  RigMonomial sp = sigma(p, order);
  RigMonomial sq = sigma(q, order);
  SigmaResult r;
  r.product = nf(times(sp, sq, order)) == nf(sigma(int_mul(p, q), order));
  r.sum = nf(circ(sp, sq, order)) == nf(sigma(int_add(p, q), order));
  return r;
}

// ---------------------------------------------------------------------------
// Demos

namespace {

struct Log {
  std::string text;
  bool pass = true;
  void check(bool ok, const std::string& what) {
    text += std::string(ok ? "PASS " : "FAIL ") + what + "\n";
    pass = pass && ok;
  }
  void note(const std::string& s) { text += "     " + s + "\n"; }
};

bool same_basis(const System& a, const System& b) {
  return render_basis(reduced_basis(a)) == render_basis(reduced_basis(b));
}

void demo_one_generator(Log& log, const std::string& name) {
  Preset p = preset(name);
  System basis = to_system(*p.basis);
  log.check(verify(basis).ok, name + ": every composition of the stated basis is trivial");
  CompletionReport rep = complete(to_system(p.defining));
  log.check(rep.status == CompletionStatus::Complete && same_basis(rep.basis, basis),
            name + ": completion of the defining relation gives the stated basis");
  log.text += render_basis(rep.basis);
}

EqResult eq_in(const CompletionReport& rep, const std::string& a, const std::string& b) {
  Presentation p = from_system(rep.basis);
  return decide_eq(parse_expr(a, p), parse_expr(b, p), rep);
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"fiore-leinster", "blass", "seven-trees", "blass-alternative", "znc", "nat", "example-5-9"};
}

DemoResult run_demo(std::string_view name) {
  Log log;
  if (name == "fiore-leinster") {
    demo_one_generator(log, "fiore-leinster");
    CompletionReport rep = complete(to_system(preset(name).defining));
    log.check(eq_in(rep, "x^5", "x").decision == Decision::Equal, "x^5 = x");
  } else if (name == "blass") {
    demo_one_generator(log, "blass");
    CompletionReport rep = complete(to_system(preset(name).defining));
    log.check(eq_in(rep, "x^7", "x").decision == Decision::Equal, "x^7 = x");
    for (int k = 2; k <= 6; ++k) {
      log.check(eq_in(rep, "x^" + std::to_string(k), "x").decision == Decision::Distinct,
                "x^" + std::to_string(k) + " != x");
    }
  } else if (name == "seven-trees") {
    Preset p = preset("blass");
    CompletionReport rep = complete(to_system(p.defining));
    log.check(eq_in(rep, "x^7", "x").decision == Decision::Equal, "normal forms of x^7 and x agree");
    RigMonomial u = parse_expr("x^7", p.defining);
    RigMonomial v = parse_expr("x", p.defining);
    // Every step from x^7 under x = 1 + x^2 raises the summed degree to 14,
    // so the search bounds each summand's degree instead.
    const auto& rels = p.defining.relations;
    OracleBounds b;
    b.max_degree = 9;
    b.measure = DegreeMeasure::PerComponent;
    auto res = closure_eq(u, v, rels, p.defining.order(), 1, b);
    bool congruent = res.verdict == ClosureVerdict::Congruent;
    log.check(congruent, "breadth-first closure connects x^7 and x (" +
                             std::to_string(res.path.size()) + " steps)");
    log.check(congruent && replay_path(res.path, u, v, rels, p.defining.order()),
              "witness path replays");
    for (const auto& s : res.path) {
      log.note(render(s.from, Mode::Commutative, p.defining.alphabet) + "  ->  " +
               render(s.to, Mode::Commutative, p.defining.alphabet));
    }
  } else if (name == "blass-alternative") {
    CompletionReport rep = complete(to_system(preset("blass").defining));
    auto dom = blass_family_truncation(4);
    auto t = transport_check(dom, blass_alternative_map, rep);
    log.check(t.injective, "map is injective on " + std::to_string(dom.size()) + " members");
    log.check(t.congruent, "every member is congruent to its image");
    log.check(t.distinct, "images are pairwise non-congruent");
  } else if (name == "znc") {
    Presentation lit = znc_basis({"y", "x"});
    VerifyResult v = verify(to_system(lit));
    log.check(v.ok, "stated relations over {x, y}: every composition trivial (" +
                        std::to_string(v.witnesses.size()) + " non-trivial)");
    if (!v.witnesses.empty()) {
      System s = to_system(lit);
      log.note("first witness: " +
               render(v.witnesses.front().second, s.mode(), s.alphabet));
    }
    Presentation amended = znc_basis({"y", "x"}, true);
    log.check(verify(to_system(amended)).ok,
              "with e' e' = 1 added: every composition trivial");
  } else if (name == "nat") {
    auto show = [](const std::optional<NatPair>& g) {
      return g ? "(" + std::to_string(g->n) + ", " + std::to_string(g->m) + ")"
               : std::string("none");
    };
    auto g1 = nat_congruence_generator({{3, 1}});
    log.check(g1 == NatPair{3, 1}, "{(3,1)} -> " + show(g1));
    auto g2 = nat_congruence_generator({{4, 2}, {5, 2}});
    log.check(g2 == NatPair{3, 2}, "{(4,2), (5,2)} -> " + show(g2));
    auto g3 = nat_congruence_generator({{2, 2}});
    log.check(!g3.has_value(), "{(2,2)} -> " + show(g3));
  } else if (name == "example-5-9") {
    CompletionLimits lim;
    lim.max_degree = 10;
    CompletionReport rep = complete(to_system(preset(name).defining), lim);
    log.check(rep.status == CompletionStatus::Truncated, "completion truncates");
    log.check(same_basis(rep.basis, to_system(absorbing_prefix(10))),
              "basis is {1 + x^n = x^n : n <= 10}");
    log.text += render_basis(rep.basis);
    for (const auto& lvl : noetherian_chain_demo(5)) {
      log.check(lvl.strict, "level " + std::to_string(lvl.level) + ": " +
                                render(lvl.witness, Mode::Commutative, Alphabet({"x"})) +
                                " is not in the smaller ideal");
    }
  } else {
    throw Error(ErrorKind::UnknownPreset, "unknown demo '" + std::string(name) + "'");
  }
  return {log.pass, log.text};
}

}  // namespace rigsgs
