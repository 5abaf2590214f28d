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

// Command-line front end over the C interface.
//
// Exit codes: 0 success, equal or verified; 1 distinct or not a basis;
// 2 unknown or truncated; 64 usage; 65 bad input; 66 unreadable file;
// 70 internal error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rigsgs/rigsgs.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;
constexpr int kExitUnknown = 2;

// Thrown to leave a command with a given exit code after printing `message`.
struct Exit {
  int code;
  std::string message;
};

int exit_code_for(rig_status s) {
  switch (s) {
    case RIG_OK:
      return 0;
    case RIG_ERR_BUDGET_EXHAUSTED:
      return kExitUnknown;
    case RIG_ERR_UNKNOWN_PRESET:
      return kExitUsage;
    case RIG_ERR_INTERNAL:
    case RIG_ERR_NOT_BELOW_AMBIGUITY:
      return kExitSoftware;
    default:
      return kExitData;
  }
}

void check(rig_status s) {
  if (s == RIG_OK) return;
  std::string detail = rig_last_error();
  throw Exit{exit_code_for(s), detail.empty() ? rig_status_message(s) : detail};
}

struct StringDeleter {
  void operator()(char* p) const { rig_string_free(p); }
};
struct PresentationDeleter {
  void operator()(rig_presentation* p) const { rig_presentation_free(p); }
};
struct ReportDeleter {
  void operator()(rig_report* r) const { rig_report_free(r); }
};
using String = std::unique_ptr<char, StringDeleter>;
using PresentationPtr = std::unique_ptr<rig_presentation, PresentationDeleter>;
using ReportPtr = std::unique_ptr<rig_report, ReportDeleter>;

void print(const String& s) { std::fputs(s.get(), stdout); }

PresentationPtr load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitNoInput, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  rig_presentation* p = nullptr;
  rig_status s = rig_presentation_parse(buf.str().c_str(), &p);
  if (s != RIG_OK) {
    throw Exit{exit_code_for(s), path + ": " + rig_last_error()};
  }
  return PresentationPtr(p);
}

struct CompletionFlags {
  rig_limits limits{};
  CompletionFlags() { rig_limits_default(&limits); }
};

ReportPtr run_completion(const rig_presentation* p, const CompletionFlags& f) {
  rig_report* r = nullptr;
  check(rig_complete(p, &f.limits, &r));
  return ReportPtr(r);
}

// Exit status for results that depend on a completion being finished.
int completion_code(const rig_report* r) {
  if (rig_report_is_complete(r)) return 0;
  std::fputs("note: completion truncated; result is relative to a partial basis\n",
             stderr);
  return kExitUnknown;
}

void add_completion_flags(CLI::App* cmd, CompletionFlags& f,
                          const std::string& degree_flag) {
  cmd->add_option(degree_flag, f.limits.max_degree,
                  "Discard new relations whose leading monomial exceeds this degree")
      ->capture_default_str();
  cmd->add_option("--max-steps", f.limits.max_steps,
                  "Compositions processed before giving up")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-Shirshov bases for presentations of semirings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rig_version());

  std::string file, expr1, expr2, name;
  bool json = false, list = false, trace = false, basis = false;
  bool per_summand = false;
  CompletionFlags cf;
  std::uint32_t irr_degree = 8, irr_len = 4;
  rig_oracle_bounds ob{};
  rig_oracle_bounds_default(&ob);

  auto* complete = app.add_subcommand("complete", "Complete a presentation to a reduced basis");
  complete->add_option("FILE", file, "Presentation file")->required();
  add_completion_flags(complete, cf, "--max-deg");
  complete->add_flag("--json", json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Check that the relations form a basis as given");
  verify->add_option("FILE", file, "Presentation file")->required();
  verify->add_flag("--list-ambiguities", list, "List every composition");

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("FILE", file, "Presentation file")->required();
  nf->add_option("EXPR", expr1, "Semiring expression")->required();
  nf->add_flag("--trace", trace, "Print every rewrite step");
  add_completion_flags(nf, cf, "--max-deg");

  auto* eq = app.add_subcommand("eq", "Decide whether two expressions are congruent");
  eq->add_option("FILE", file, "Presentation file")->required();
  eq->add_option("EXPR1", expr1, "Semiring expression")->required();
  eq->add_option("EXPR2", expr2, "Semiring expression")->required();
  add_completion_flags(eq, cf, "--max-deg");

  auto* irr = app.add_subcommand("irr", "List irreducible monomials");
  irr->add_option("FILE", file, "Presentation file")->required();
  irr->add_option("--max-deg", irr_degree, "Total degree bound")->capture_default_str();
  irr->add_option("--max-len", irr_len, "Number of summands bound")->capture_default_str();
  add_completion_flags(irr, cf, "--completion-max-deg");

  auto* reduce = app.add_subcommand("reduce-basis", "Minimize and interreduce the relations as given");
  reduce->add_option("FILE", file, "Presentation file")->required();

  auto* oracle = app.add_subcommand("oracle-eq", "Bounded breadth-first congruence search");
  oracle->add_option("FILE", file, "Presentation file")->required();
  oracle->add_option("EXPR1", expr1, "Semiring expression")->required();
  oracle->add_option("EXPR2", expr2, "Semiring expression")->required();
  oracle->add_option("--max-deg", ob.max_degree, "Total degree bound")->capture_default_str();
  oracle->add_flag("--per-summand", per_summand,
                   "Bound the degree of each summand instead of the sum");
  oracle->add_option("--max-len", ob.max_len, "Number of summands bound")->capture_default_str();
  oracle->add_option("--max-expansions", ob.max_expansions, "Search budget")->capture_default_str();

  auto* preset = app.add_subcommand("preset", "Print a built-in presentation");
  preset->add_option("NAME", name, "Preset name, or 'list'")->required();
  preset->add_flag("--basis", basis, "Print the known reduced basis instead");

  auto* demo = app.add_subcommand("demo", "Run a built-in scenario");
  demo->add_option("NAME", name, "Scenario name, or 'list'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    String out;
    char* raw = nullptr;
    if (complete->parsed()) {
      PresentationPtr p = load(file);
      ReportPtr r = run_completion(p.get(), cf);
      check(json ? rig_report_json(r.get(), &raw) : rig_report_text(r.get(), &raw));
      out.reset(raw);
      print(out);
      return rig_report_is_complete(r.get()) ? 0 : kExitUnknown;
    }
    if (verify->parsed()) {
      PresentationPtr p = load(file);
      int ok = 0;
      check(rig_verify(p.get(), list ? 1 : 0, &ok, &raw));
      out.reset(raw);
      print(out);
      return ok ? 0 : 1;
    }
    if (nf->parsed()) {
      PresentationPtr p = load(file);
      ReportPtr r = run_completion(p.get(), cf);
      check(rig_normal_form(r.get(), expr1.c_str(), trace ? 1 : 0, &raw));
      out.reset(raw);
      print(out);
      return completion_code(r.get());
    }
    if (eq->parsed()) {
      PresentationPtr p = load(file);
      ReportPtr r = run_completion(p.get(), cf);
      rig_decision d = RIG_UNKNOWN;
      check(rig_decide_eq(r.get(), expr1.c_str(), expr2.c_str(), &d, &raw));
      out.reset(raw);
      print(out);
      return d == RIG_EQUAL ? 0 : d == RIG_DISTINCT ? 1 : kExitUnknown;
    }
    if (irr->parsed()) {
      PresentationPtr p = load(file);
      ReportPtr r = run_completion(p.get(), cf);
      check(rig_irr(r.get(), irr_degree, irr_len, &raw));
      out.reset(raw);
      print(out);
      return completion_code(r.get());
    }
    if (reduce->parsed()) {
      PresentationPtr p = load(file);
      check(rig_reduce_basis(p.get(), &raw));
      out.reset(raw);
      print(out);
      return 0;
    }
    if (oracle->parsed()) {
      PresentationPtr p = load(file);
      int congruent = 0;
      ob.per_component = per_summand ? 1 : 0;
      check(rig_oracle_eq(p.get(), expr1.c_str(), expr2.c_str(), &ob, &congruent, &raw));
      out.reset(raw);
      print(out);
      return congruent ? 0 : kExitUnknown;
    }
    if (preset->parsed()) {
      if (name == "list") {
        check(rig_preset_names(&raw));
      } else {
        rig_presentation* p = nullptr;
        check(rig_presentation_preset(name.c_str(), basis ? 1 : 0, &p));
        PresentationPtr owned(p);
        check(rig_presentation_render(owned.get(), &raw));
      }
      out.reset(raw);
      print(out);
      return 0;
    }
    if (demo->parsed()) {
      if (name == "list") {
        check(rig_demo_names(&raw));
        out.reset(raw);
        print(out);
        return 0;
      }
      int pass = 0;
      check(rig_demo(name.c_str(), &pass, &raw));
      out.reset(raw);
      print(out);
      return pass ? 0 : 1;
    }
  } catch (const Exit& e) {
    std::cerr << "rigsgs: " << e.message << '\n';
    return e.code;
  }
  return kExitUsage;
}
