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

#include "rigsgs/rigsgs.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rigsgs/completion.hpp"
#include "rigsgs/error.hpp"
#include "rigsgs/frontend.hpp"
#include "rigsgs/oracle.hpp"
#include "rigsgs/presets.hpp"

struct rig_presentation {
  rigsgs::Presentation value;
};

struct rig_report {
  rigsgs::Presentation source;
  rigsgs::CompletionReport value;
};

namespace {

thread_local std::string last_error;

rig_status status_of(rigsgs::ErrorKind kind) {
  using rigsgs::ErrorKind;
  switch (kind) {
    case ErrorKind::Parse:
      return RIG_ERR_PARSE;
    case ErrorKind::InvalidArgument:
      return RIG_ERR_INVALID_ARGUMENT;
    case ErrorKind::NoLeadingTerm:
      return RIG_ERR_NO_LEADING_TERM;
    case ErrorKind::NoOccurrence:
      return RIG_ERR_NO_OCCURRENCE;
    case ErrorKind::NotBelowAmbiguity:
      return RIG_ERR_NOT_BELOW_AMBIGUITY;
    case ErrorKind::BudgetExhausted:
      return RIG_ERR_BUDGET_EXHAUSTED;
    case ErrorKind::NotMonic:
      return RIG_ERR_NOT_MONIC;
    case ErrorKind::UnknownPreset:
      return RIG_ERR_UNKNOWN_PRESET;
    case ErrorKind::Internal:
      return RIG_ERR_INTERNAL;
  }
  return RIG_ERR_INTERNAL;
}

rig_status fail(rig_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
rig_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return RIG_OK;
  } catch (const rigsgs::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RIG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RIG_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

rig_status null_argument() {
  return fail(RIG_ERR_INVALID_ARGUMENT, "null argument");
}

std::string render_m(const rigsgs::RigMonomial& m, const rigsgs::Presentation& p) {
  return rigsgs::render(m, p.mode, p.alphabet);
}

std::string stats_lines(const rigsgs::CompletionReport& r) {
  std::ostringstream os;
  os << "# status: " << rigsgs::status_name(r.status) << '\n'
     << "# relations: " << r.basis.relations.size() << '\n'
     << "# pairs examined: " << r.stats.pairs_examined << '\n'
     << "# compositions: " << r.stats.compositions << '\n'
     << "# relations added: " << r.stats.relations_added << '\n'
     << "# discarded: " << r.stats.discarded << '\n'
     << "# max ambiguity degree: " << r.stats.max_ambiguity_degree << '\n';
  return os.str();
}

// A normal form that is a single monomial with coefficient 1 prints as that
// monomial, anything else as a polynomial.
std::string render_nf(const rigsgs::Polynomial& f, const rigsgs::System& s) {
  const auto& t = f.terms();
  if (t.size() == 1 && t.front().coeff == 1) {
    return rigsgs::render(t.front().monomial, s.mode(), s.alphabet);
  }
  return rigsgs::render(f, s.mode(), s.alphabet);
}

// A presentation over the same alphabet carrying the basis as relations.
rigsgs::Presentation basis_presentation(const rig_report& r) {
  rigsgs::Presentation out = rigsgs::from_system(r.value.basis);
  out.order_kind = r.source.order_kind;
  return out;
}

}  // namespace

extern "C" {

const char* rig_version(void) { return "0.1.0"; }

const char* rig_status_message(rig_status status) {
  switch (status) {
    case RIG_OK:
      return "ok";
    case RIG_ERR_PARSE:
      return "parse error";
    case RIG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case RIG_ERR_NO_LEADING_TERM:
      return "no leading term";
    case RIG_ERR_NO_OCCURRENCE:
      return "no occurrence";
    case RIG_ERR_NOT_BELOW_AMBIGUITY:
      return "composition not below its ambiguity";
    case RIG_ERR_BUDGET_EXHAUSTED:
      return "budget exhausted";
    case RIG_ERR_NOT_MONIC:
      return "relation not monic";
    case RIG_ERR_UNKNOWN_PRESET:
      return "unknown preset";
    case RIG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* rig_last_error(void) { return last_error.c_str(); }

void rig_string_free(char* s) { std::free(s); }

void rig_limits_default(rig_limits* out) {
  if (out == nullptr) return;
  rigsgs::CompletionLimits d;
  out->max_degree = d.max_degree;
  out->max_steps = d.max_steps;
  out->has_seed = 0;
  out->seed = 0;
}

void rig_oracle_bounds_default(rig_oracle_bounds* out) {
  if (out == nullptr) return;
  rigsgs::OracleBounds d;
  out->max_degree = d.max_degree;
  out->per_component = d.measure == rigsgs::DegreeMeasure::PerComponent;
  out->max_len = d.max_len;
  out->max_expansions = d.max_expansions;
}

rig_status rig_presentation_parse(const char* text, rig_presentation** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new rig_presentation{rigsgs::parse_presentation(text)};
  });
}

rig_status rig_presentation_preset(const char* name, int basis,
                                   rig_presentation** out) {
  if (name == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    rigsgs::Preset p = rigsgs::preset(name);
    if (basis != 0 && !p.basis) {
      throw rigsgs::Error(rigsgs::ErrorKind::InvalidArgument,
                          "preset '" + p.name + "' has no finite reduced basis");
    }
    *out = new rig_presentation{basis != 0 ? *p.basis : p.defining};
  });
}

void rig_presentation_free(rig_presentation* p) { delete p; }

rig_status rig_presentation_render(const rig_presentation* p, char** out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = dup(rigsgs::render_presentation(p->value)); });
}

rig_status rig_preset_names(char** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    std::string s;
    for (const auto& n : rigsgs::preset_names()) s += n + '\n';
    *out = dup(s);
  });
}

rig_status rig_verify(const rig_presentation* p, int list_ambiguities,
                      int* is_basis, char** report) {
  if (p == nullptr || is_basis == nullptr || report == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    rigsgs::System s = rigsgs::to_system(p->value);
    rigsgs::VerifyResult v = rigsgs::verify(s);
    std::ostringstream os;
    os << (v.ok ? "GS basis: yes" : "GS basis: no") << '\n'
       << "relations: " << s.relations.size() << '\n'
       << "pairs examined: " << v.pairs_examined << '\n'
       << "compositions: " << v.compositions.size() << '\n'
       << "non-trivial: " << v.witnesses.size() << '\n';
    if (list_ambiguities != 0) {
      for (const auto& r : v.compositions) {
        os << rigsgs::render_composition(r, s) << '\n';
      }
    }
    for (const auto& [i, nf] : v.witnesses) {
      os << "witness: " << rigsgs::render_composition(v.compositions[i], s)
         << " reduces to " << rigsgs::render(nf, s.mode(), s.alphabet) << '\n';
    }
    std::string text = os.str();
    *report = dup(text);
    *is_basis = v.ok ? 1 : 0;
  });
}

rig_status rig_reduce_basis(const rig_presentation* p, char** out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    rigsgs::System s = rigsgs::reduced_basis(rigsgs::to_system(p->value));
    rigsgs::Presentation q = rigsgs::from_system(s);
    q.order_kind = p->value.order_kind;
    *out = dup(rigsgs::render_presentation(q));
  });
}

rig_status rig_oracle_eq(const rig_presentation* p, const char* u,
                         const char* v, const rig_oracle_bounds* bounds,
                         int* congruent, char** report) {
  if (p == nullptr || u == nullptr || v == nullptr || congruent == nullptr ||
      report == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    const rigsgs::Presentation& pres = p->value;
    rigsgs::RigMonomial a = rigsgs::parse_expr(u, pres);
    rigsgs::RigMonomial b = rigsgs::parse_expr(v, pres);
    rigsgs::OracleBounds ob;
    if (bounds != nullptr) {
      ob.max_degree = bounds->max_degree;
      ob.measure = bounds->per_component != 0 ? rigsgs::DegreeMeasure::PerComponent
                                              : rigsgs::DegreeMeasure::Total;
      ob.max_len = bounds->max_len;
      ob.max_expansions = bounds->max_expansions;
    }
    rigsgs::ClosureResult r = rigsgs::closure_eq(
        a, b, pres.relations, pres.order(), pres.alphabet.size(), ob);
    std::ostringstream os;
    const bool found = r.verdict == rigsgs::ClosureVerdict::Congruent;
    if (found) {
      os << "CONGRUENT, " << r.path.size() << " steps\n";
      for (const auto& st : r.path) {
        os << render_m(st.from, pres) << "  ->  " << render_m(st.to, pres)
           << "  [rel #" << st.relation << (st.forward ? "" : " reversed")
           << "]\n";
      }
    } else {
      os << "NOT FOUND within bounds ("
         << (ob.measure == rigsgs::DegreeMeasure::Total ? "total" : "summand")
         << " degree " << ob.max_degree << ", length "
         << ob.max_len << ", " << r.expansions << " expansions"
         << (r.exhausted ? ", budget exhausted" : ", search space exhausted")
         << ")\n";
    }
    std::string text = os.str();
    *report = dup(text);
    *congruent = found ? 1 : 0;
  });
}

rig_status rig_complete(const rig_presentation* p, const rig_limits* limits,
                        rig_report** out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    rigsgs::CompletionLimits lim;
    if (limits != nullptr) {
      lim.max_degree = limits->max_degree;
      lim.max_steps = limits->max_steps;
      if (limits->has_seed != 0) lim.seed = limits->seed;
    }
    auto r = rigsgs::complete(rigsgs::to_system(p->value), lim);
    *out = new rig_report{p->value, std::move(r)};
  });
}

void rig_report_free(rig_report* r) { delete r; }

int rig_report_is_complete(const rig_report* r) {
  return r != nullptr && r->value.status == rigsgs::CompletionStatus::Complete;
}

size_t rig_report_basis_size(const rig_report* r) {
  return r == nullptr ? 0 : r->value.basis.relations.size();
}

rig_status rig_report_text(const rig_report* r, char** out) {
  if (r == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = dup(stats_lines(r->value) +
               rigsgs::render_presentation(basis_presentation(*r)));
  });
}

rig_status rig_report_json(const rig_report* r, char** out) {
  if (r == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    using nlohmann::ordered_json;
    const rigsgs::System& s = r->value.basis;
    ordered_json j;
    j["status"] = rigsgs::status_name(r->value.status);
    j["mode"] = s.mode() == rigsgs::Mode::Commutative ? "commutative"
                                                       : "noncommutative";
    j["order"] = rigsgs::order_keyword(s.mode(), r->source.order_kind);
    j["vars"] = s.alphabet.names();
    ordered_json basis = ordered_json::array();
    for (const auto& f : s.relations) {
      auto [lhs, rhs] = rigsgs::render_relation(f, s);
      basis.push_back({{"lhs", lhs}, {"rhs", rhs}});
    }
    j["basis"] = std::move(basis);
    const auto& st = r->value.stats;
    j["stats"] = {{"pairs_examined", st.pairs_examined},
                  {"compositions", st.compositions},
                  {"relations_added", st.relations_added},
                  {"discarded", st.discarded},
                  {"max_ambiguity_degree", st.max_ambiguity_degree}};
    j["limits"] = {{"max_degree", r->value.limits.max_degree},
                   {"max_steps", r->value.limits.max_steps}};
    *out = dup(j.dump(2) + "\n");
  });
}

rig_status rig_report_presentation(const rig_report* r, rig_presentation** out) {
  if (r == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new rig_presentation{basis_presentation(*r)}; });
}

rig_status rig_normal_form(const rig_report* r, const char* expr, int trace,
                           char** out) {
  if (r == nullptr || expr == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const rigsgs::System& s = r->value.basis;
    rigsgs::RigMonomial m = rigsgs::parse_expr(expr, r->source);
    rigsgs::NormalForm nf =
        rigsgs::normal_form(rigsgs::Polynomial::monomial(m), s);
    std::string text = render_nf(nf.nf, s) + '\n';
    if (trace != 0) text += rigsgs::render_trace(nf.trace, s);
    *out = dup(text);
  });
}

rig_status rig_decide_eq(const rig_report* r, const char* u, const char* v,
                         rig_decision* decision, char** report) {
  if (r == nullptr || u == nullptr || v == nullptr || decision == nullptr ||
      report == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    const rigsgs::System& s = r->value.basis;
    rigsgs::EqResult e = rigsgs::decide_eq(rigsgs::parse_expr(u, r->source),
                                           rigsgs::parse_expr(v, r->source),
                                           r->value);
    std::string nu = render_nf(e.nf_u, s);
    std::string nv = render_nf(e.nf_v, s);
    std::string text = rigsgs::decision_name(e.decision);
    if (e.decision == rigsgs::Decision::Equal) {
      text += ", nf = " + nu + '\n';
    } else {
      text += ", nf = " + nu + " vs " + nv + '\n';
    }
    *report = dup(text);
    *decision = static_cast<rig_decision>(e.decision);
  });
}

rig_status rig_irr(const rig_report* r, uint32_t max_degree, uint32_t max_len,
                   char** out) {
  if (r == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const rigsgs::System& s = r->value.basis;
    std::string text;
    for (const auto& m : rigsgs::enum_irr(s, max_degree, max_len)) {
      text += rigsgs::render(m, s.mode(), s.alphabet) + '\n';
    }
    *out = dup(text);
  });
}

rig_status rig_demo_names(char** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    std::string s;
    for (const auto& n : rigsgs::demo_names()) s += n + '\n';
    *out = dup(s);
  });
}

rig_status rig_demo(const char* name, int* pass, char** report) {
  if (name == nullptr || pass == nullptr || report == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    rigsgs::DemoResult d = rigsgs::run_demo(name);
    *report = dup(d.report);
    *pass = d.pass ? 1 : 0;
  });
}

}  // extern "C"
