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

// Built-in presentations and the checkers that go with them:
//
//   fiore-leinster   x = 1 + x + x^2
//   blass            x = 1 + x^2
//   znc, znc(a,b..)  integer noncommutative polynomials as a semiring
//   nat              x = 1
//   example-5-9      1 + x = x (no finite reduced basis)

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigsgs/completion.hpp"
#include "rigsgs/frontend.hpp"

namespace rigsgs {

struct Preset {
  std::string name;
  std::string summary;
  Presentation defining;
  /// The known reduced basis, when finite.
  std::optional<Presentation> basis;
};

std::vector<std::string> preset_names();
/// Throws ErrorKind::UnknownPreset.
Preset preset(std::string_view name);

/// Generators in ascending precedence. The alphabet is e' (the negated unit)
/// followed by g, g' for each generator g. With `unit_square` the relation
/// e' e' = 1 is appended to the basis.
Presentation znc_basis(const std::vector<std::string>& generators,
                       bool unit_square = false);

/// {1 + x^k = x^k : 1 <= k <= n}
Presentation absorbing_prefix(std::uint32_t n);

// ---------------------------------------------------------------------------
// Normal-form families (closed-form tests, independent of the engine).

enum class Family : std::uint8_t {
  FioreLeinster,    // x = 1 + x + x^2
  Blass,            // x = 1 + x^2, leading-term normal form
  BlassAlternative, // x = 1 + x^2, the form built from 1, x^2, x^4
  IntegerWords,     // znc alphabet: marks only on first letters
};

bool family_member(const RigMonomial& m, Family fam);

/// Members of the Blass family with every parameter <= max_param, each once,
/// ascending.
std::vector<RigMonomial> blass_family_truncation(std::uint32_t max_param);

/// The explicit bijection from the Blass family onto the alternative one.
/// Throws ErrorKind::InvalidArgument outside the Blass family.
RigMonomial blass_alternative_map(const RigMonomial& u);

struct TransportResult {
  bool injective = true;
  bool congruent = true;  // u ~ map(u) for all u
  bool distinct = true;   // images pairwise non-congruent
  bool ok() const { return injective && congruent && distinct; }
};

TransportResult transport_check(
    const std::vector<RigMonomial>& domain,
    const std::function<RigMonomial(const RigMonomial&)>& map,
    const CompletionReport& report);

// ---------------------------------------------------------------------------
// Congruences on the natural numbers.

struct NatPair {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  friend bool operator==(const NatPair&, const NatPair&) = default;
};

/// Completes {x = 1} together with 1^n = 1^m for every input pair and
/// returns the relations of the reduced basis that are not x = 1, as pairs
/// with n > m. Throws ErrorKind::BudgetExhausted on truncation.
std::vector<NatPair> nat_basis_pairs(const std::vector<NatPair>& pairs);
/// The single generator, none for the identity congruence. Throws
/// ErrorKind::Internal when the reduced basis has more than one.
std::optional<NatPair> nat_congruence_generator(const std::vector<NatPair>& pairs);

// ---------------------------------------------------------------------------
// Strictness of the ideal chain generated by 1 + x^i.

struct ChainLevel {
  std::uint32_t level = 0;
  RigMonomial witness;  // 1 + x^(level+1)
  bool strict = false;  // witness irreducible by 1 + x^i, i <= level
};

std::vector<ChainLevel> noetherian_chain_demo(std::uint32_t depth);

// ---------------------------------------------------------------------------
// Integer noncommutative polynomials and their image in the znc semiring.

/// Words over generator indices (ascending precedence) with integer
/// coefficients; zero coefficients are never stored.
struct IntPoly {
  std::map<std::vector<std::uint32_t>, std::int64_t> terms;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly int_add(const IntPoly& p, const IntPoly& q);
IntPoly int_mul(const IntPoly& p, const IntPoly& q);

/// |c| copies of the word per term, first letter marked when c < 0 (the
/// empty word maps to 1 or e'); the zero polynomial maps to theta.
RigMonomial sigma(const IntPoly& p, const RigOrder& order);

struct SigmaResult {
  bool product = false;
  bool sum = false;
  bool ok() const { return product && sum; }
};

/// Compares normal forms of sigma(p)*sigma(q) with sigma(p*q) and of
/// sigma(p)+sigma(q) with sigma(p+q) modulo `basis`.
SigmaResult sigma_check(const IntPoly& p, const IntPoly& q, const System& basis);

// ---------------------------------------------------------------------------

struct DemoResult {
  bool pass = false;
  std::string report;
};

std::vector<std::string> demo_names();
/// Throws ErrorKind::UnknownPreset.
DemoResult run_demo(std::string_view name);

}  // namespace rigsgs
