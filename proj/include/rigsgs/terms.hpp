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

// Words, commutative monomials, rig monomials (finite multisets of base
// monomials) and polynomials of the semiring algebra over the rationals.
//
// A rig monomial u1 + u2 + ... + un is stored as a run-length list of
// (component, multiplicity) pairs sorted ascending by the active base order.
// The empty list is theta, the additive identity of the free semiring. The
// canonical form therefore depends on the order, so every operation that
// builds a rig monomial takes the RigOrder it canonicalizes under.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rigsgs {

using Rational = boost::multiprecision::cpp_rational;
using Letter = std::uint32_t;

enum class Mode : std::uint8_t { Commutative, Noncommutative };

class RigOrder;

/// Generators of the free (commutative) monoid. Index = precedence rank,
/// ascending.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// A word (noncommutative mode) or an exponent vector without trailing zeros
/// (commutative mode). The empty payload is the monoid identity 1 in both.
class BaseMonomial {
 public:
  BaseMonomial() = default;

  static BaseMonomial word(std::vector<std::uint32_t> letters);
  static BaseMonomial exponents(std::vector<std::uint32_t> exps);
  static BaseMonomial generator(Mode mode, Letter letter);

  const std::vector<std::uint32_t>& data() const { return data_; }
  bool is_one() const { return data_.empty(); }

  // Structural order, used only for containers; not a monomial order.
  friend auto operator<=>(const BaseMonomial&, const BaseMonomial&) = default;
  friend bool operator==(const BaseMonomial&, const BaseMonomial&) = default;

 private:
  std::vector<std::uint32_t> data_;
};

std::uint32_t degree(Mode mode, const BaseMonomial& m);
BaseMonomial multiply(Mode mode, const BaseMonomial& a, const BaseMonomial& b);
BaseMonomial multiply(Mode mode, const BaseMonomial& a, const BaseMonomial& c,
                      const BaseMonomial& b);

/// Commutative divisibility a | c.
bool divides(const BaseMonomial& a, const BaseMonomial& c);
/// c / a for a | c (commutative).
BaseMonomial quotient(const BaseMonomial& c, const BaseMonomial& a);
/// lcm of two commutative monomials.
BaseMonomial lcm(const BaseMonomial& a, const BaseMonomial& b);
/// Start positions of `pattern` inside word `text` (empty pattern matches at
/// every position 0..|text|).
std::vector<std::size_t> subword_positions(const BaseMonomial& text,
                                           const BaseMonomial& pattern);
/// Subword [from, from + len) of a word.
BaseMonomial subword(const BaseMonomial& w, std::size_t from, std::size_t len);

/// All base monomials of degree <= max_degree over `letters` generators.
std::vector<BaseMonomial> base_monomials_up_to(Mode mode, std::size_t letters,
                                               std::uint32_t max_degree);

struct Run {
  BaseMonomial base;
  std::uint32_t count = 0;

  friend auto operator<=>(const Run&, const Run&) = default;
  friend bool operator==(const Run&, const Run&) = default;
};

class RigMonomial {
 public:
  /// theta
  RigMonomial() = default;

  /// Builds the canonical form of the multiset of `components`.
  static RigMonomial from_components(std::vector<BaseMonomial> components,
                                     const RigOrder& order);
  /// `runs` must already be canonical (ascending, distinct, counts > 0).
  static RigMonomial from_canonical_runs(std::vector<Run> runs);
  static RigMonomial single(BaseMonomial base, std::uint32_t count = 1);

  const std::vector<Run>& runs() const { return runs_; }
  bool is_theta() const { return runs_.empty(); }
  std::size_t circ_length() const;
  /// Components with multiplicity, ascending.
  std::vector<BaseMonomial> components() const;
  std::uint32_t count_of(const BaseMonomial& b, const RigOrder& order) const;

  friend auto operator<=>(const RigMonomial&, const RigMonomial&) = default;
  friend bool operator==(const RigMonomial&, const RigMonomial&) = default;

 private:
  std::vector<Run> runs_;
};

struct RigMonomialHash {
  std::size_t operator()(const RigMonomial& m) const noexcept;
};

RigMonomial circ(const RigMonomial& m, const RigMonomial& n,
                 const RigOrder& order);
RigMonomial times(const RigMonomial& m, const RigMonomial& n,
                  const RigOrder& order);
/// u^n under `times`; power 0 is the singleton {1}.
RigMonomial power(const RigMonomial& m, std::uint32_t n, const RigOrder& order);

/// True iff n is a sub-multiset of m.
bool includes(const RigMonomial& m, const RigMonomial& n, const RigOrder& order);
/// m - n as multisets; n must be included in m.
RigMonomial difference(const RigMonomial& m, const RigMonomial& n,
                       const RigOrder& order);

struct LcmCirc {
  RigMonomial w;
  RigMonomial u;  // w = m + u
  RigMonomial v;  // w = n + v
};
LcmCirc lcm_circ(const RigMonomial& m, const RigMonomial& n,
                 const RigOrder& order);

struct Measures {
  std::size_t circ_len = 0;
  std::uint64_t total_degree = 0;
  std::vector<BaseMonomial> support;
};
Measures measures(const RigMonomial& m, Mode mode);
std::uint64_t total_degree(const RigMonomial& m, Mode mode);

struct Term {
  RigMonomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite linear combination of rig monomials with nonzero rational
/// coefficients, terms sorted descending by the order it was built under.
/// The empty polynomial is 0, which is different from 1*theta.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial monomial(RigMonomial m, Rational coeff = 1);
  /// Canonicalizes arbitrary terms: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(std::vector<Term> terms, const RigOrder& order);
  /// `terms` must already be canonical (descending, distinct, nonzero).
  static Polynomial from_canonical_terms(std::vector<Term> terms);
  /// lhs - rhs
  static Polynomial binomial(const RigMonomial& lhs, const RigMonomial& rhs,
                             const RigOrder& order);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of m (0 if absent).
  Rational coeff_of(const RigMonomial& m) const;
  std::vector<RigMonomial> support() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g, const RigOrder& order);
Polynomial subtract(const Polynomial& f, const Polynomial& g,
                    const RigOrder& order);
Polynomial negate(const Polynomial& f);
Polynomial scale(const Polynomial& f, const Rational& c);
Polynomial circ_ext(const Polynomial& f, const Polynomial& g,
                    const RigOrder& order);
Polynomial times_ext(const Polynomial& f, const Polynomial& g,
                     const RigOrder& order);

/// True iff f = m - n for monomials m != n (coefficients exactly +1 and -1).
bool is_binomial(const Polynomial& f);

}  // namespace rigsgs
