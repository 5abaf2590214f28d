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

#include "rigsgs/completion.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "rigsgs/error.hpp"

namespace rigsgs {

const char* status_name(CompletionStatus status) {
  return status == CompletionStatus::Complete ? "Complete" : "Truncated";
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Equal:
      return "EQUAL";
    case Decision::Distinct:
      return "DISTINCT";
    case Decision::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

VerifyResult verify(const System& s) {
  VerifyResult out;
  CompositionSet all = all_compositions(s);
  out.pairs_examined = all.pairs_examined;
  out.compositions = std::move(all.records);
  for (std::size_t i = 0; i < out.compositions.size(); ++i) {
    const auto& r = out.compositions[i];
    Polynomial rest;
    if (!is_trivial(r.spoly, s, r.ambiguity, &rest)) {
      out.ok = false;
      out.witnesses.emplace_back(i, std::move(rest));
    }
  }
  return out;
}

namespace {

struct Pending {
  CompositionRecord record;
  std::uint64_t key = 0;
  std::uint64_t seq = 0;
};

class Worklist {
 public:
  Worklist(const RigOrder& order, std::optional<std::uint64_t> seed)
      : order_(order), seeded_(seed.has_value()), rng_(seed.value_or(0)) {}

  // Heap comparator: true when a is processed after b.
  auto later() const {
    return [this](const Pending& a, const Pending& b) {
      auto c = order_.compare(a.record.ambiguity, b.record.ambiguity);
      if (c != 0) return c > 0;
      if (a.key != b.key) return a.key > b.key;
      return a.seq > b.seq;
    };
  }

  void push(CompositionRecord r) {
    std::uint64_t seq = next_++;
    std::uint64_t key = seeded_ ? rng_() : seq;
    items_.push_back({std::move(r), key, seq});
    std::push_heap(items_.begin(), items_.end(), later());
  }

  Pending pop() {
    std::pop_heap(items_.begin(), items_.end(), later());
    Pending p = std::move(items_.back());
    items_.pop_back();
    return p;
  }

  bool empty() const { return items_.empty(); }

 private:
  const RigOrder& order_;
  bool seeded_;
  std::mt19937_64 rng_;
  std::uint64_t next_ = 0;
  std::vector<Pending> items_;
};

}  // namespace

CompletionReport complete(const System& input, const CompletionLimits& limits) {
  CompletionReport report;
  report.limits = limits;
  const RigOrder& order = input.order;
  const bool binomials =
      std::all_of(input.relations.begin(), input.relations.end(),
                  [](const Polynomial& f) { return is_binomial(f); });

  System work{input.alphabet, order, {}};
  Worklist queue(order, limits.seed);
  bool truncated = false;

  auto enqueue_pairs = [&](std::size_t k) {
    const Polynomial& fk = work.relations[k];
    for (std::size_t j = 0; j <= k; ++j) {
      auto a = compositions(fk, k, work.relations[j], j, order);
      report.stats.pairs_examined += a.pairs_examined;
      for (auto& r : a.records) queue.push(std::move(r));
      // Commutative compositions of (j, k) mirror those of (k, j).
      if (j == k || order.mode() == Mode::Commutative) continue;
      auto b = compositions(work.relations[j], j, fk, k, order);
      report.stats.pairs_examined += b.pairs_examined;
      for (auto& r : b.records) queue.push(std::move(r));
    }
  };

  auto adjoin = [&](Polynomial f) {
    if (binomials && !is_binomial(f)) {
      throw Error(ErrorKind::Internal,
                  "completion of binomials produced a non-binomial");
    }
    work.relations.push_back(std::move(f));
    enqueue_pairs(work.relations.size() - 1);
  };

  for (const auto& f : input.relations) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero relation");
    Polynomial r = reduce(f, work);
    if (r.is_zero()) continue;
    adjoin(make_monic(r, order));
  }

  std::uint64_t steps = 0;
  while (!queue.empty()) {
    if (steps >= limits.max_steps) {
      truncated = true;
      break;
    }
    ++steps;
    Pending p = queue.pop();
    ++report.stats.compositions;
    report.stats.max_ambiguity_degree =
        std::max(report.stats.max_ambiguity_degree,
                 total_degree(p.record.ambiguity, order.mode()));
    Polynomial r = reduce(p.record.spoly, work);
    if (r.is_zero()) continue;
    r = make_monic(r, order);
    if (total_degree(leading(r, order).monomial, order.mode()) >
        limits.max_degree) {
      truncated = true;
      ++report.stats.discarded;
      continue;
    }
    ++report.stats.relations_added;
    adjoin(std::move(r));
  }

  report.status =
      truncated ? CompletionStatus::Truncated : CompletionStatus::Complete;
  report.basis = reduced_basis(work);
  return report;
}

namespace {

std::vector<std::size_t> ascending_by_lead(const System& s) {
  std::vector<RigMonomial> leads;
  leads.reserve(s.relations.size());
  for (const auto& f : s.relations) leads.push_back(leading(f, s.order).monomial);
  std::vector<std::size_t> idx(s.relations.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return s.order.less(leads[a], leads[b]);
  });
  return idx;
}

}  // namespace

System minimalize(const System& s) {
  System out{s.alphabet, s.order, {}};
  std::vector<RigMonomial> kept_leads;
  for (std::size_t i : ascending_by_lead(s)) {
    RigMonomial lead = leading(s.relations[i], s.order).monomial;
    bool redundant = false;
    for (std::size_t k = 0; k < kept_leads.size() && !redundant; ++k) {
      redundant = !occurrences_of(lead, kept_leads[k], k, s.order).empty();
    }
    if (redundant) continue;
    kept_leads.push_back(lead);
    out.relations.push_back(s.relations[i]);
  }
  return out;
}

System autoreduce(const System& s) {
  System cur = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.relations.size(); ++i) {
      System others{cur.alphabet, cur.order, {}};
      for (std::size_t j = 0; j < cur.relations.size(); ++j) {
        if (j != i) others.relations.push_back(cur.relations[j]);
      }
      Polynomial r = reduce(cur.relations[i], others);
      if (r.is_zero()) {
        throw Error(ErrorKind::Internal, "autoreduce on a non-minimal system");
      }
      r = make_monic(r, cur.order);
      if (!(r == cur.relations[i])) {
        cur.relations[i] = std::move(r);
        changed = true;
      }
    }
  }
  System out{cur.alphabet, cur.order, {}};
  for (std::size_t i : ascending_by_lead(cur)) {
    out.relations.push_back(cur.relations[i]);
  }
  return out;
}

System reduced_basis(const System& s) { return autoreduce(minimalize(s)); }

EqResult decide_eq(const RigMonomial& u, const RigMonomial& v,
                   const CompletionReport& report) {
  EqResult out;
  out.nf_u = reduce(Polynomial::monomial(u), report.basis);
  out.nf_v = reduce(Polynomial::monomial(v), report.basis);
  if (out.nf_u == out.nf_v) {
    out.decision = Decision::Equal;
  } else if (report.status == CompletionStatus::Complete) {
    out.decision = Decision::Distinct;
  } else {
    out.decision = Decision::Unknown;
  }
  return out;
}

}  // namespace rigsgs
