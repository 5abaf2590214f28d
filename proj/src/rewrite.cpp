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

#include "rigsgs/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "rigsgs/error.hpp"

namespace rigsgs {

RigMonomial apply_context(const Context& c, const RigMonomial& m,
                          const RigOrder& order) {
  if (m.is_theta()) return c.pad;
  // left * [] * right is strictly monotone, so the runs stay canonical.
  std::vector<Run> runs;
  runs.reserve(m.runs().size());
  for (const auto& r : m.runs()) {
    runs.push_back({multiply(order.mode(), c.left, r.base, c.right), r.count});
  }
  return circ(RigMonomial::from_canonical_runs(std::move(runs)), c.pad, order);
}

Polynomial apply_context(const Context& c, const Polynomial& f,
                         const RigOrder& order) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    terms.push_back({apply_context(c, t.monomial, order), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms), order);
}

System System::make(Alphabet alphabet, RigOrder order,
                    std::vector<Polynomial> relations) {
  System s{std::move(alphabet), order, {}};
  s.relations.reserve(relations.size());
  for (auto& r : relations) {
    if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero relation");
    // Re-sort under this order before normalizing.
    Polynomial sorted = Polynomial::from_terms(r.terms(), order);
    s.relations.push_back(make_monic(sorted, order));
  }
  return s;
}

namespace {

bool context_less(const Context& a, const Context& b, const RigOrder& order) {
  auto c = order.compare_base(a.left, b.left);
  if (c != 0) return c < 0;
  return order.less_base(a.right, b.right);
}

}  // namespace

std::vector<Occurrence> occurrences_of(const RigMonomial& m,
                                       const RigMonomial& lead,
                                       std::size_t relation_id,
                                       const RigOrder& order) {
  std::vector<Occurrence> out;
  if (lead.is_theta()) {
    out.push_back({relation_id, Context{{}, {}, m}});
    return out;
  }
  if (lead.circ_length() > m.circ_length()) return out;
  const Mode mode = order.mode();
  const BaseMonomial& anchor = lead.runs().back().base;
  const std::uint32_t anchor_degree = degree(mode, anchor);

  std::vector<Context> candidates;
  for (const auto& r : m.runs()) {
    if (degree(mode, r.base) < anchor_degree) continue;
    if (mode == Mode::Commutative) {
      if (divides(anchor, r.base)) {
        candidates.push_back({quotient(r.base, anchor), {}, {}});
      }
    } else {
      const std::size_t n = r.base.data().size();
      const std::size_t k = anchor.data().size();
      for (std::size_t pos : subword_positions(r.base, anchor)) {
        candidates.push_back(
            {subword(r.base, 0, pos), subword(r.base, pos + k, n - pos - k), {}});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const Context& a, const Context& b) {
              return context_less(a, b, order);
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  for (auto& c : candidates) {
    RigMonomial image = apply_context(c, lead, order);
    if (!includes(m, image, order)) continue;
    c.pad = difference(m, image, order);
    out.push_back({relation_id, std::move(c)});
  }
  return out;
}

std::vector<Occurrence> find_occurrences(const RigMonomial& m, const System& s) {
  std::vector<Occurrence> out;
  for (std::size_t i = 0; i < s.relations.size(); ++i) {
    auto lead = leading(s.relations[i], s.order).monomial;
    auto occ = occurrences_of(m, lead, i, s.order);
    out.insert(out.end(), std::make_move_iterator(occ.begin()),
               std::make_move_iterator(occ.end()));
  }
  return out;
}

std::optional<Occurrence> first_occurrence(const RigMonomial& m,
                                           const System& s) {
  for (std::size_t i = 0; i < s.relations.size(); ++i) {
    const RigMonomial& lead = s.relations[i].terms().front().monomial;
    auto occ = occurrences_of(m, lead, i, s.order);
    if (!occ.empty()) return std::move(occ.front());
  }
  return std::nullopt;
}

bool is_irreducible(const RigMonomial& m, const System& s) {
  return !first_occurrence(m, s).has_value();
}

Polynomial elt(const Polynomial& f, const Occurrence& occ, const System& s) {
  if (f.is_zero() || occ.relation >= s.relations.size()) {
    throw Error(ErrorKind::NoOccurrence, "occurrence does not match");
  }
  LeadingTerm lt = leading(f, s.order);
  const Polynomial& rel = s.relations[occ.relation];
  Polynomial image = apply_context(occ.context, rel, s.order);
  if (image.is_zero() ||
      leading(image, s.order).monomial != lt.monomial) {
    throw Error(ErrorKind::NoOccurrence,
                "occurrence does not match the leading monomial");
  }
  return subtract(f, scale(image, lt.coeff), s.order);
}

NormalForm normal_form(const Polynomial& f, const System& s,
                       std::uint64_t budget) {
  std::map<RigMonomial, Rational, RigLess> rest{RigLess{&s.order}};
  for (const auto& t : f.terms()) {
    Rational& c = rest[t.monomial];
    c += t.coeff;
    if (c == 0) rest.erase(t.monomial);
  }
  NormalForm out;
  std::vector<Term> irreducible;  // descending
  std::uint64_t steps = 0;
  while (!rest.empty()) {
    auto it = std::prev(rest.end());
    RigMonomial m = it->first;
    Rational c = it->second;
    rest.erase(it);
    auto occ = first_occurrence(m, s);
    if (!occ) {
      irreducible.push_back({std::move(m), std::move(c)});
      continue;
    }
    if (++steps > budget) {
      throw Error(ErrorKind::BudgetExhausted, "reduction budget exhausted");
    }
    Polynomial image =
        apply_context(occ->context, s.relations[occ->relation], s.order);
    if (image.terms().front().monomial != m) {
      throw Error(ErrorKind::Internal, "context image lost its leading term");
    }
    for (std::size_t i = 1; i < image.size(); ++i) {
      const Term& t = image.terms()[i];
      Rational& slot = rest[t.monomial];
      slot -= c * t.coeff;
      if (slot == 0) rest.erase(t.monomial);
    }
    out.trace.steps.push_back({std::move(c), occ->relation, occ->context});
  }
  out.nf = Polynomial::from_canonical_terms(std::move(irreducible));
  return out;
}

Polynomial reduce(const Polynomial& f, const System& s, std::uint64_t budget) {
  return normal_form(f, s, budget).nf;
}

Polynomial replay(const ReductionTrace& trace, const System& s) {
  Polynomial acc;
  for (const auto& step : trace.steps) {
    Polynomial image =
        apply_context(step.context, s.relations.at(step.relation), s.order);
    acc = add(acc, scale(image, step.coeff), s.order);
  }
  return acc;
}

namespace {

// Depth-first enumeration of multisets drawn from `bases` (ascending) with
// nondecreasing indices. `keep` prunes a node and its whole subtree.
void grow(const std::vector<BaseMonomial>& bases,
          const std::vector<std::uint32_t>& degrees, std::size_t from,
          std::uint64_t degree_left, std::uint32_t len_left,
          std::vector<Run>& runs,
          const std::function<bool(const RigMonomial&)>& keep,
          std::vector<RigMonomial>& out) {
  RigMonomial current = RigMonomial::from_canonical_runs(runs);
  if (!keep(current)) return;
  out.push_back(std::move(current));
  if (len_left == 0) return;
  for (std::size_t i = from; i < bases.size(); ++i) {
    if (degrees[i] > degree_left) continue;
    bool extend = !runs.empty() && runs.back().base == bases[i];
    if (extend) {
      ++runs.back().count;
    } else {
      runs.push_back({bases[i], 1});
    }
    grow(bases, degrees, i, degree_left - degrees[i], len_left - 1, runs, keep,
         out);
    if (extend) {
      --runs.back().count;
    } else {
      runs.pop_back();
    }
  }
}

std::vector<RigMonomial> enumerate(
    Mode mode, std::size_t letters, const RigOrder& order,
    std::uint32_t max_degree, std::uint32_t max_len,
    const std::function<bool(const RigMonomial&)>& keep) {
  auto bases = base_monomials_up_to(mode, letters, max_degree);
  std::sort(bases.begin(), bases.end(),
            [&](const BaseMonomial& a, const BaseMonomial& b) {
              return order.less_base(a, b);
            });
  std::vector<std::uint32_t> degrees;
  degrees.reserve(bases.size());
  for (const auto& b : bases) degrees.push_back(degree(mode, b));
  std::vector<RigMonomial> out;
  std::vector<Run> runs;
  grow(bases, degrees, 0, max_degree, max_len, runs, keep, out);
  std::sort(out.begin(), out.end(), RigLess{&order});
  return out;
}

}  // namespace

std::vector<RigMonomial> enumerate_monomials(Mode mode, std::size_t letters,
                                             const RigOrder& order,
                                             std::uint32_t max_degree,
                                             std::uint32_t max_len) {
  return enumerate(mode, letters, order, max_degree, max_len,
                   [](const RigMonomial&) { return true; });
}

std::vector<RigMonomial> enum_irr(const System& s, std::uint32_t max_degree,
                                  std::uint32_t max_len) {
  // Sub-multisets of irreducible monomials are irreducible, so a reducible
  // node prunes its subtree.
  return enumerate(s.mode(), s.alphabet.size(), s.order, max_degree, max_len,
                   [&](const RigMonomial& m) { return is_irreducible(m, s); });
}

}  // namespace rigsgs
