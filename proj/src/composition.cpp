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

#include "rigsgs/composition.hpp"

#include <algorithm>

#include "rigsgs/error.hpp"

namespace rigsgs {

const char* composition_kind_name(CompositionKind kind) {
  switch (kind) {
    case CompositionKind::Intersection:
      return "intersection";
    case CompositionKind::Inclusion:
      return "inclusion";
    case CompositionKind::Commutative:
      return "commutative";
  }
  return "?";
}

namespace {

void require_monic(const Polynomial& f, const RigOrder& order) {
  if (f.is_zero() || leading(f, order).coeff != 1) {
    throw Error(ErrorKind::NotMonic, "composition of a non-monic polynomial");
  }
}

bool same_sites(const CompositionRecord& r, const Context& fc,
                const Context& gc) {
  return r.f_context.left == fc.left && r.f_context.right == fc.right &&
         r.g_context.left == gc.left && r.g_context.right == gc.right;
}

// Completes the record from the multiplier parts of both contexts and appends
// it unless it repeats an earlier site or its S-polynomial vanishes.
void emit(CompositionSet& out, const Polynomial& f, std::size_t f_id,
          const Polynomial& g, std::size_t g_id, CompositionKind kind,
          const BaseMonomial& p, const BaseMonomial& q, Context fc, Context gc,
          const RigOrder& order) {
  for (const auto& r : out.records) {
    if (same_sites(r, fc, gc)) return;
  }
  RigMonomial lf = leading(f, order).monomial;
  RigMonomial lg = leading(g, order).monomial;
  RigMonomial fa = apply_context(fc, lf, order);
  RigMonomial bg = apply_context(gc, lg, order);
  LcmCirc l = lcm_circ(fa, bg, order);
  fc.pad = l.u;
  gc.pad = l.v;
  Polynomial spoly = subtract(apply_context(fc, f, order),
                              apply_context(gc, g, order), order);
  if (spoly.is_zero()) return;
  if (!order.less(leading(spoly, order).monomial, l.w)) {
    throw Error(ErrorKind::Internal, "S-polynomial not below its ambiguity");
  }
  out.records.push_back({f_id, g_id, kind, p, q, std::move(fc), std::move(gc),
                         std::move(l.w), std::move(spoly)});
}

}  // namespace

CompositionSet comm_compositions(const Polynomial& f, std::size_t f_id,
                                 const Polynomial& g, std::size_t g_id,
                                 const RigOrder& order) {
  require_monic(f, order);
  require_monic(g, order);
  CompositionSet out;
  const auto fs = leading(f, order).monomial.components();
  const auto gs = leading(g, order).monomial.components();
  for (const auto& p : fs) {
    for (const auto& q : gs) {
      ++out.pairs_examined;
      BaseMonomial l = lcm(p, q);
      emit(out, f, f_id, g, g_id, CompositionKind::Commutative, p, q,
           Context{quotient(l, p), {}, {}}, Context{quotient(l, q), {}, {}},
           order);
    }
  }
  return out;
}

CompositionSet nc_compositions(const Polynomial& f, std::size_t f_id,
                               const Polynomial& g, std::size_t g_id,
                               const RigOrder& order) {
  require_monic(f, order);
  require_monic(g, order);
  CompositionSet out;
  const RigMonomial lf = leading(f, order).monomial;
  const RigMonomial lg = leading(g, order).monomial;
  const auto& fr = lf.runs();
  const auto& gr = lg.runs();
  for (const auto& pr : fr) {
    for (const auto& qr : gr) {
      ++out.pairs_examined;
      const BaseMonomial& p = pr.base;
      const BaseMonomial& q = qr.base;
      const std::size_t np = p.data().size();
      const std::size_t nq = q.data().size();
      // p = b*o, q = o*a with o, a, b nonempty.
      for (std::size_t k = 1; k < std::min(np, nq); ++k) {
        if (std::equal(p.data().end() - static_cast<std::ptrdiff_t>(k),
                       p.data().end(), q.data().begin())) {
          BaseMonomial a = subword(q, k, nq - k);
          BaseMonomial b = subword(p, 0, np - k);
          emit(out, f, f_id, g, g_id, CompositionKind::Intersection, p, q,
               Context{{}, a, {}}, Context{b, {}, {}}, order);
        }
      }
      // p = a*q*b.
      for (std::size_t pos : subword_positions(p, q)) {
        BaseMonomial a = subword(p, 0, pos);
        BaseMonomial b = subword(p, pos + nq, np - pos - nq);
        emit(out, f, f_id, g, g_id, CompositionKind::Inclusion, p, q,
             Context{}, Context{a, b, {}}, order);
      }
    }
  }
  return out;
}

CompositionSet compositions(const Polynomial& f, std::size_t f_id,
                            const Polynomial& g, std::size_t g_id,
                            const RigOrder& order) {
  if (order.mode() == Mode::Commutative) {
    return comm_compositions(f, f_id, g, g_id, order);
  }
  return nc_compositions(f, f_id, g, g_id, order);
}

CompositionSet all_compositions(const System& s) {
  CompositionSet out;
  for (std::size_t i = 0; i < s.relations.size(); ++i) {
    for (std::size_t j = 0; j < s.relations.size(); ++j) {
      auto part = compositions(s.relations[i], i, s.relations[j], j, s.order);
      out.pairs_examined += part.pairs_examined;
      out.records.insert(out.records.end(),
                         std::make_move_iterator(part.records.begin()),
                         std::make_move_iterator(part.records.end()));
    }
  }
  return out;
}

bool is_trivial(const Polynomial& h, const System& s, const RigMonomial& w,
                Polynomial* witness) {
  if (h.is_zero()) {
    if (witness) *witness = Polynomial{};
    return true;
  }
  if (!s.order.less(leading(h, s.order).monomial, w)) {
    throw Error(ErrorKind::NotBelowAmbiguity, "not below ambiguity");
  }
  Polynomial r = reduce(h, s);
  bool trivial = r.is_zero();
  if (witness) *witness = std::move(r);
  return trivial;
}

}  // namespace rigsgs
