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

#include "rigsgs/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

namespace rigsgs {

namespace {

struct Site {
  BaseMonomial left;
  BaseMonomial right;
  RigMonomial pad;
};

BaseMonomial wrap(Mode mode, const BaseMonomial& a, const BaseMonomial& c,
                  const BaseMonomial& b) {
  if (mode == Mode::Commutative) return multiply(mode, a, c);
  std::vector<std::uint32_t> w = a.data();
  w.insert(w.end(), c.data().begin(), c.data().end());
  w.insert(w.end(), b.data().begin(), b.data().end());
  return BaseMonomial::word(std::move(w));
}

RigMonomial image(const RigMonomial& side, const BaseMonomial& a,
                  const BaseMonomial& b, const RigOrder& order) {
  std::vector<BaseMonomial> comps;
  for (const auto& c : side.components()) {
    comps.push_back(wrap(order.mode(), a, c, b));
  }
  return RigMonomial::from_components(std::move(comps), order);
}

// Every site at which `side` occurs inside m. A theta side occurs everywhere;
// its multipliers are enumerated up to `multiplier_degree`.
std::vector<Site> sites(const RigMonomial& side, const RigMonomial& m,
                        const RigOrder& order, std::size_t letters,
                        std::uint32_t multiplier_degree) {
  const Mode mode = order.mode();
  std::vector<Site> out;
  if (side.is_theta()) {
    auto bases = base_monomials_up_to(mode, letters, multiplier_degree);
    for (const auto& a : bases) {
      if (mode == Mode::Commutative) {
        out.push_back({a, {}, m});
        continue;
      }
      for (const auto& b : bases) {
        if (a.data().size() + b.data().size() <= multiplier_degree) {
          out.push_back({a, b, m});
        }
      }
    }
    return out;
  }
  std::set<std::pair<BaseMonomial, BaseMonomial>> candidates;
  for (const auto& c : m.runs()) {
    for (const auto& p : side.runs()) {
      if (mode == Mode::Commutative) {
        if (divides(p.base, c.base)) {
          candidates.emplace(quotient(c.base, p.base), BaseMonomial{});
        }
        continue;
      }
      const auto& cw = c.base.data();
      const auto& pw = p.base.data();
      if (pw.size() > cw.size()) continue;
      for (std::size_t i = 0; i + pw.size() <= cw.size(); ++i) {
        bool hit = true;
        for (std::size_t k = 0; k < pw.size() && hit; ++k) hit = cw[i + k] == pw[k];
        if (!hit) continue;
        candidates.emplace(
            BaseMonomial::word({cw.begin(), cw.begin() + static_cast<std::ptrdiff_t>(i)}),
            BaseMonomial::word({cw.begin() + static_cast<std::ptrdiff_t>(i + pw.size()),
                                cw.end()}));
      }
    }
  }
  for (const auto& [a, b] : candidates) {
    RigMonomial img = image(side, a, b, order);
    if (!includes(m, img, order)) continue;
    out.push_back({a, b, difference(m, img, order)});
  }
  return out;
}

std::uint64_t max_component_degree(const RigMonomial& m, Mode mode) {
  std::uint64_t d = 0;
  for (const auto& r : m.runs()) d = std::max<std::uint64_t>(d, degree(mode, r.base));
  return d;
}

std::uint64_t measured(const RigMonomial& m, Mode mode, DegreeMeasure measure) {
  return measure == DegreeMeasure::Total ? total_degree(m, mode)
                                         : max_component_degree(m, mode);
}

bool within(const RigMonomial& m, Mode mode, const OracleBounds& bounds) {
  return m.circ_length() <= bounds.max_len &&
         measured(m, mode, bounds.measure) <= bounds.max_degree;
}

using Visited = std::unordered_map<RigMonomial, std::ptrdiff_t, RigMonomialHash>;

OracleStep inverse(const OracleStep& s) {
  OracleStep r = s;
  std::swap(r.from, r.to);
  r.forward = !s.forward;
  return r;
}

}  // namespace

std::vector<OracleStep> oracle_neighbours(const RigMonomial& m,
                                          const std::vector<RelationPair>& rels,
                                          const RigOrder& order,
                                          std::size_t letters,
                                          const OracleBounds& bounds) {
  const Mode mode = order.mode();
  std::vector<OracleStep> out;
  const std::uint64_t deg_m = measured(m, mode, DegreeMeasure::Total);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (int dir = 0; dir < 2; ++dir) {
      const RigMonomial& src = dir == 0 ? rels[i].first : rels[i].second;
      const RigMonomial& dst = dir == 0 ? rels[i].second : rels[i].first;
      std::uint32_t slack = 0;
      if (src.is_theta() && !dst.is_theta()) {
        if (bounds.measure == DegreeMeasure::Total) {
          // Inserting dst under multipliers of degree d costs deg(dst) +
          // d * |dst| degrees.
          std::uint64_t base = deg_m + total_degree(dst, mode);
          if (base > bounds.max_degree) continue;
          slack = static_cast<std::uint32_t>((bounds.max_degree - base) /
                                             dst.circ_length());
        } else {
          std::uint64_t top = max_component_degree(dst, mode);
          if (top > bounds.max_degree) continue;
          slack = static_cast<std::uint32_t>(bounds.max_degree - top);
        }
      }
      for (auto& site : sites(src, m, order, letters, slack)) {
        RigMonomial next = circ(image(dst, site.left, site.right, order),
                                site.pad, order);
        if (next == m || !within(next, mode, bounds)) continue;
        out.push_back({m, std::move(next), i, dir == 0, std::move(site.left),
                       std::move(site.right), std::move(site.pad)});
      }
    }
  }
  return out;
}

ClosureResult closure_eq(const RigMonomial& u, const RigMonomial& v,
                         const std::vector<RelationPair>& rels,
                         const RigOrder& order, std::size_t letters,
                         const OracleBounds& bounds) {
  ClosureResult out;
  if (u == v) {
    out.verdict = ClosureVerdict::Congruent;
    return out;
  }
  // Two trees; parent index -1 marks a root.
  std::vector<OracleStep> steps;
  Visited seen[2];
  std::vector<RigMonomial> frontier[2] = {{u}, {v}};
  seen[0][u] = -1;
  seen[1][v] = -1;

  auto chain = [&](int side, const RigMonomial& end) {
    std::vector<OracleStep> c;
    std::ptrdiff_t p = seen[side].at(end);
    while (p >= 0) {
      c.push_back(steps[static_cast<std::size_t>(p)]);
      p = seen[side].at(c.back().from);
    }
    return c;  // steps ordered from `end` back to the root
  };

  while (!frontier[0].empty() && !frontier[1].empty()) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<RigMonomial> next;
    for (const auto& m : frontier[side]) {
      if (out.expansions >= bounds.max_expansions) {
        out.exhausted = true;
        return out;
      }
      ++out.expansions;
      for (auto& s : oracle_neighbours(m, rels, order, letters, bounds)) {
        if (seen[side].count(s.to)) continue;
        steps.push_back(s);
        seen[side][s.to] = static_cast<std::ptrdiff_t>(steps.size() - 1);
        if (seen[1 - side].count(s.to)) {
          RigMonomial meet = s.to;
          auto from_u = chain(0, meet);
          std::reverse(from_u.begin(), from_u.end());
          auto from_v = chain(1, meet);
          for (auto& st : from_v) from_u.push_back(inverse(st));
          out.path = std::move(from_u);
          out.verdict = ClosureVerdict::Congruent;
          return out;
        }
        next.push_back(std::move(s.to));
      }
    }
    frontier[side] = std::move(next);
  }
  return out;
}

std::vector<RigMonomial> closure_class(const RigMonomial& u,
                                       const std::vector<RelationPair>& rels,
                                       const RigOrder& order,
                                       std::size_t letters,
                                       const OracleBounds& bounds) {
  std::unordered_map<RigMonomial, bool, RigMonomialHash> seen{{u, true}};
  std::deque<RigMonomial> queue{u};
  std::vector<RigMonomial> out{u};
  std::uint64_t expansions = 0;
  while (!queue.empty() && expansions < bounds.max_expansions) {
    RigMonomial m = std::move(queue.front());
    queue.pop_front();
    ++expansions;
    for (auto& s : oracle_neighbours(m, rels, order, letters, bounds)) {
      if (seen.emplace(s.to, true).second) {
        out.push_back(s.to);
        queue.push_back(std::move(s.to));
      }
    }
  }
  std::sort(out.begin(), out.end(), RigLess{&order});
  return out;
}

bool replay_path(const std::vector<OracleStep>& path, const RigMonomial& u,
                 const RigMonomial& v, const std::vector<RelationPair>& rels,
                 const RigOrder& order) {
  RigMonomial cur = u;
  for (const auto& s : path) {
    if (s.relation >= rels.size() || !(s.from == cur)) return false;
    const RigMonomial& src = s.forward ? rels[s.relation].first : rels[s.relation].second;
    const RigMonomial& dst = s.forward ? rels[s.relation].second : rels[s.relation].first;
    if (circ(image(src, s.left, s.right, order), s.pad, order) != s.from) return false;
    if (circ(image(dst, s.left, s.right, order), s.pad, order) != s.to) return false;
    cur = s.to;
  }
  return cur == v;
}

std::vector<std::uint32_t> nat_closure_labels(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
    std::uint32_t bound, std::uint32_t ceiling) {
  ceiling = std::max(ceiling, bound);
  std::vector<std::uint32_t> parent(ceiling + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto [a, b] : pairs) {
    // k + a ~ k + b for every k that keeps both inside the window.
    for (std::uint32_t k = 0; k + std::max(a, b) <= ceiling; ++k) {
      std::uint32_t x = find(k + a);
      std::uint32_t y = find(k + b);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<std::uint32_t> labels(bound + 1);
  for (std::uint32_t i = 0; i <= bound; ++i) labels[i] = find(i);
  return labels;
}

}  // namespace rigsgs
