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

#include "rigsgs/terms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

#include "rigsgs/error.hpp"
#include "rigsgs/ordering.hpp"

namespace rigsgs {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate generator '" + names_[i] + "'");
      }
    }
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// BaseMonomial

BaseMonomial BaseMonomial::word(std::vector<std::uint32_t> letters) {
  BaseMonomial b;
  b.data_ = std::move(letters);
  return b;
}

BaseMonomial BaseMonomial::exponents(std::vector<std::uint32_t> exps) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
  BaseMonomial b;
  b.data_ = std::move(exps);
  return b;
}

BaseMonomial BaseMonomial::generator(Mode mode, Letter letter) {
  if (mode == Mode::Noncommutative) return word({letter});
  std::vector<std::uint32_t> e(letter + 1, 0);
  e[letter] = 1;
  return exponents(std::move(e));
}

std::uint32_t degree(Mode mode, const BaseMonomial& m) {
  if (mode == Mode::Noncommutative) {
    return static_cast<std::uint32_t>(m.data().size());
  }
  return std::accumulate(m.data().begin(), m.data().end(), std::uint32_t{0});
}

BaseMonomial multiply(Mode mode, const BaseMonomial& a, const BaseMonomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<std::uint32_t> out;
  if (mode == Mode::Noncommutative) {
    out.reserve(a.data().size() + b.data().size());
    out.insert(out.end(), a.data().begin(), a.data().end());
    out.insert(out.end(), b.data().begin(), b.data().end());
    return BaseMonomial::word(std::move(out));
  }
  out.assign(std::max(a.data().size(), b.data().size()), 0);
  for (std::size_t i = 0; i < a.data().size(); ++i) out[i] += a.data()[i];
  for (std::size_t i = 0; i < b.data().size(); ++i) out[i] += b.data()[i];
  return BaseMonomial::exponents(std::move(out));
}

BaseMonomial multiply(Mode mode, const BaseMonomial& a, const BaseMonomial& c,
                      const BaseMonomial& b) {
  if (mode == Mode::Commutative) return multiply(mode, multiply(mode, a, c), b);
  std::vector<std::uint32_t> out;
  out.reserve(a.data().size() + c.data().size() + b.data().size());
  out.insert(out.end(), a.data().begin(), a.data().end());
  out.insert(out.end(), c.data().begin(), c.data().end());
  out.insert(out.end(), b.data().begin(), b.data().end());
  return BaseMonomial::word(std::move(out));
}

bool divides(const BaseMonomial& a, const BaseMonomial& c) {
  const auto& ea = a.data();
  const auto& ec = c.data();
  if (ea.size() > ec.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > ec[i]) return false;
  }
  return true;
}

BaseMonomial quotient(const BaseMonomial& c, const BaseMonomial& a) {
  if (!divides(a, c)) {
    throw Error(ErrorKind::InvalidArgument, "quotient: divisor does not divide");
  }
  std::vector<std::uint32_t> out = c.data();
  for (std::size_t i = 0; i < a.data().size(); ++i) out[i] -= a.data()[i];
  return BaseMonomial::exponents(std::move(out));
}

BaseMonomial lcm(const BaseMonomial& a, const BaseMonomial& b) {
  std::vector<std::uint32_t> out(std::max(a.data().size(), b.data().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < a.data().size() ? a.data()[i] : 0;
    std::uint32_t y = i < b.data().size() ? b.data()[i] : 0;
    out[i] = std::max(x, y);
  }
  return BaseMonomial::exponents(std::move(out));
}

std::vector<std::size_t> subword_positions(const BaseMonomial& text,
                                           const BaseMonomial& pattern) {
  const auto& t = text.data();
  const auto& p = pattern.data();
  std::vector<std::size_t> out;
  if (p.size() > t.size()) return out;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i) {
    if (std::equal(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>(i))) {
      out.push_back(i);
    }
  }
  return out;
}

BaseMonomial subword(const BaseMonomial& w, std::size_t from, std::size_t len) {
  const auto& d = w.data();
  return BaseMonomial::word(
      std::vector<std::uint32_t>(d.begin() + static_cast<std::ptrdiff_t>(from),
                                 d.begin() + static_cast<std::ptrdiff_t>(from + len)));
}

std::vector<BaseMonomial> base_monomials_up_to(Mode mode, std::size_t letters,
                                               std::uint32_t max_degree) {
  std::vector<BaseMonomial> out;
  out.push_back(BaseMonomial{});
  if (letters == 0) return out;
  if (mode == Mode::Noncommutative) {
    std::vector<std::vector<std::uint32_t>> layer{{}};
    for (std::uint32_t d = 1; d <= max_degree; ++d) {
      std::vector<std::vector<std::uint32_t>> next;
      next.reserve(layer.size() * letters);
      for (const auto& w : layer) {
        for (std::uint32_t l = 0; l < letters; ++l) {
          auto v = w;
          v.push_back(l);
          out.push_back(BaseMonomial::word(v));
          next.push_back(std::move(v));
        }
      }
      layer = std::move(next);
    }
    return out;
  }
  out.clear();
  std::vector<std::uint32_t> e(letters, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i,
                                                             std::uint32_t left) {
    if (i == letters) {
      out.push_back(BaseMonomial::exponents(e));
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

// ---------------------------------------------------------------------------
// RigMonomial

namespace {

// Merges two canonical run lists; `combine` decides the output count.
template <typename Combine>
std::vector<Run> merge_runs(const std::vector<Run>& a, const std::vector<Run>& b,
                            const RigOrder& order, Combine combine) {
  std::vector<Run> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) {
      c = std::strong_ordering::greater;
    } else if (j == b.size()) {
      c = std::strong_ordering::less;
    } else {
      c = order.compare_base(a[i].base, b[j].base);
    }
    if (c < 0) {
      if (auto k = combine(a[i].count, 0u)) out.push_back({a[i].base, k});
      ++i;
    } else if (c > 0) {
      if (auto k = combine(0u, b[j].count)) out.push_back({b[j].base, k});
      ++j;
    } else {
      if (auto k = combine(a[i].count, b[j].count)) out.push_back({a[i].base, k});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RigMonomial RigMonomial::from_components(std::vector<BaseMonomial> components,
                                         const RigOrder& order) {
  std::sort(components.begin(), components.end(),
            [&](const BaseMonomial& a, const BaseMonomial& b) {
              return order.less_base(a, b);
            });
  RigMonomial m;
  for (auto& c : components) {
    if (!m.runs_.empty() && m.runs_.back().base == c) {
      ++m.runs_.back().count;
    } else {
      m.runs_.push_back({std::move(c), 1});
    }
  }
  return m;
}

RigMonomial RigMonomial::from_canonical_runs(std::vector<Run> runs) {
  RigMonomial m;
  m.runs_ = std::move(runs);
  return m;
}

RigMonomial RigMonomial::single(BaseMonomial base, std::uint32_t count) {
  RigMonomial m;
  if (count > 0) m.runs_.push_back({std::move(base), count});
  return m;
}

std::size_t RigMonomial::circ_length() const {
  std::size_t n = 0;
  for (const auto& r : runs_) n += r.count;
  return n;
}

std::vector<BaseMonomial> RigMonomial::components() const {
  std::vector<BaseMonomial> out;
  out.reserve(circ_length());
  for (const auto& r : runs_) {
    for (std::uint32_t k = 0; k < r.count; ++k) out.push_back(r.base);
  }
  return out;
}

std::uint32_t RigMonomial::count_of(const BaseMonomial& b,
                                    const RigOrder& order) const {
  auto it = std::lower_bound(runs_.begin(), runs_.end(), b,
                             [&](const Run& r, const BaseMonomial& x) {
                               return order.less_base(r.base, x);
                             });
  if (it != runs_.end() && it->base == b) return it->count;
  return 0;
}

std::size_t RigMonomialHash::operator()(const RigMonomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& r : m.runs()) {
    mix(r.count);
    mix(r.base.data().size());
    for (auto x : r.base.data()) mix(x);
  }
  return h;
}

RigMonomial circ(const RigMonomial& m, const RigMonomial& n,
                 const RigOrder& order) {
  if (m.is_theta()) return n;
  if (n.is_theta()) return m;
  return RigMonomial::from_canonical_runs(merge_runs(
      m.runs(), n.runs(), order,
      [](std::uint32_t a, std::uint32_t b) { return a + b; }));
}

RigMonomial times(const RigMonomial& m, const RigMonomial& n,
                  const RigOrder& order) {
  if (m.is_theta() || n.is_theta()) return RigMonomial{};
  std::vector<BaseMonomial> comps;
  comps.reserve(m.circ_length() * n.circ_length());
  for (const auto& a : m.runs()) {
    for (const auto& b : n.runs()) {
      BaseMonomial p = multiply(order.mode(), a.base, b.base);
      for (std::uint32_t k = 0; k < a.count * b.count; ++k) comps.push_back(p);
    }
  }
  return RigMonomial::from_components(std::move(comps), order);
}

RigMonomial power(const RigMonomial& m, std::uint32_t n, const RigOrder& order) {
  RigMonomial acc = RigMonomial::single(BaseMonomial{});
  for (std::uint32_t i = 0; i < n; ++i) acc = times(acc, m, order);
  return acc;
}

bool includes(const RigMonomial& m, const RigMonomial& n, const RigOrder& order) {
  const auto& a = m.runs();
  const auto& b = n.runs();
  std::size_t i = 0;
  for (const auto& r : b) {
    while (i < a.size() && order.less_base(a[i].base, r.base)) ++i;
    if (i == a.size() || a[i].base != r.base || a[i].count < r.count) {
      return false;
    }
    ++i;
  }
  return true;
}

RigMonomial difference(const RigMonomial& m, const RigMonomial& n,
                       const RigOrder& order) {
  if (!includes(m, n, order)) {
    throw Error(ErrorKind::InvalidArgument,
                "multiset difference of a non-included monomial");
  }
  return RigMonomial::from_canonical_runs(merge_runs(
      m.runs(), n.runs(), order,
      [](std::uint32_t a, std::uint32_t b) { return a - b; }));
}

LcmCirc lcm_circ(const RigMonomial& m, const RigMonomial& n,
                 const RigOrder& order) {
  LcmCirc out;
  out.w = RigMonomial::from_canonical_runs(merge_runs(
      m.runs(), n.runs(), order,
      [](std::uint32_t a, std::uint32_t b) { return std::max(a, b); }));
  out.u = difference(out.w, m, order);
  out.v = difference(out.w, n, order);
  return out;
}

std::uint64_t total_degree(const RigMonomial& m, Mode mode) {
  std::uint64_t d = 0;
  for (const auto& r : m.runs()) {
    d += static_cast<std::uint64_t>(degree(mode, r.base)) * r.count;
  }
  return d;
}

Measures measures(const RigMonomial& m, Mode mode) {
  Measures out;
  out.circ_len = m.circ_length();
  out.total_degree = total_degree(m, mode);
  for (const auto& r : m.runs()) out.support.push_back(r.base);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::monomial(RigMonomial m, Rational coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const RigOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.less(b.monomial, a.monomial);
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_canonical_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::binomial(const RigMonomial& lhs, const RigMonomial& rhs,
                                const RigOrder& order) {
  return from_terms({{lhs, 1}, {rhs, -1}}, order);
}

Rational Polynomial::coeff_of(const RigMonomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return 0;
}

std::vector<RigMonomial> Polynomial::support() const {
  std::vector<RigMonomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.monomial);
  return out;
}

Polynomial add(const Polynomial& f, const Polynomial& g, const RigOrder& order) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) {
      c = std::strong_ordering::less;
    } else if (j == b.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = order.compare(a[i].monomial, b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].coeff + b[j].coeff;
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_canonical_terms(std::move(out));
}

Polynomial negate(const Polynomial& f) { return scale(f, -1); }

Polynomial scale(const Polynomial& f, const Rational& c) {
  if (c == 0) return {};
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.coeff *= c;
  return Polynomial::from_canonical_terms(std::move(out));
}

Polynomial subtract(const Polynomial& f, const Polynomial& g,
                    const RigOrder& order) {
  return add(f, negate(g), order);
}

Polynomial circ_ext(const Polynomial& f, const Polynomial& g,
                    const RigOrder& order) {
  std::vector<Term> out;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      out.push_back({circ(a.monomial, b.monomial, order), a.coeff * b.coeff});
    }
  }
  return Polynomial::from_terms(std::move(out), order);
}

Polynomial times_ext(const Polynomial& f, const Polynomial& g,
                     const RigOrder& order) {
  std::vector<Term> out;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      out.push_back({times(a.monomial, b.monomial, order), a.coeff * b.coeff});
    }
  }
  return Polynomial::from_terms(std::move(out), order);
}

bool is_binomial(const Polynomial& f) {
  if (f.size() != 2) return false;
  const auto& t = f.terms();
  return (t[0].coeff == 1 && t[1].coeff == -1) ||
         (t[0].coeff == -1 && t[1].coeff == 1);
}

}  // namespace rigsgs
