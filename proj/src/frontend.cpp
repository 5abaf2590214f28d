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

#include "rigsgs/frontend.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "rigsgs/error.hpp"

namespace rigsgs {

namespace {

constexpr std::uint32_t kMaxExponent = 4096;

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  std::size_t i = 1;
  while (i < s.size() && ident_char(s[i])) ++i;
  while (i < s.size() && s[i] == '\'') ++i;
  return i == s.size();
}

[[noreturn]] void parse_error(const std::string& msg) {
  throw Error(ErrorKind::Parse, msg);
}

enum class Tok : std::uint8_t { Ident, Number, Plus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      while (i < s.size() && s[i] == '\'') ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) != 0) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k = Tok::End;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        parse_error("unexpected character '" + std::string(1, c) +
                    "' at position " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::string_view text, Mode mode, const Alphabet& alphabet,
             const RigOrder& order)
      : toks_(tokenize(text)), mode_(mode), alphabet_(alphabet), order_(order) {}

  RigMonomial parse() {
    if (peek().kind == Tok::End) parse_error("empty expression");
    RigMonomial m = expr();
    if (peek().kind != Tok::End) unexpected();
    return m;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  [[noreturn]] void unexpected() const {
    const Token& t = peek();
    if (t.kind == Tok::End) parse_error("unexpected end of expression");
    parse_error("unexpected '" + t.text + "' at position " + std::to_string(t.pos));
  }

  bool starts_atom() const {
    Tok k = peek().kind;
    return k == Tok::Ident || k == Tok::Number || k == Tok::LParen;
  }

  RigMonomial expr() {
    RigMonomial m = term();
    while (peek().kind == Tok::Plus) {
      next();
      m = circ(m, term(), order_);
    }
    return m;
  }

  RigMonomial term() {
    RigMonomial m = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
      } else if (!starts_atom()) {
        break;
      }
      m = times(m, factor(), order_);
    }
    return m;
  }

  RigMonomial factor() {
    RigMonomial a = atom();
    while (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Number) unexpected();
      const std::string& digits = next().text;
      std::uint32_t n = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc{} || n > kMaxExponent) {
        parse_error("exponent out of range: " + digits);
      }
      if (n == 0 && a.is_theta()) parse_error("0^0 is undefined");
      a = power(a, n, order_);
    }
    return a;
  }

  RigMonomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        if (t.text == "0") return RigMonomial{};
        if (t.text == "1") return RigMonomial::single(BaseMonomial{});
        parse_error("only the constants 0 and 1 are allowed, got " + t.text);
      }
      case Tok::Ident: {
        next();
        auto l = alphabet_.find(t.text);
        if (!l) parse_error("unknown symbol '" + t.text + "'");
        return RigMonomial::single(BaseMonomial::generator(mode_, *l));
      }
      case Tok::LParen: {
        next();
        RigMonomial m = expr();
        if (peek().kind != Tok::RParen) unexpected();
        next();
        return m;
      }
      default:
        unexpected();
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Mode mode_;
  const Alphabet& alphabet_;
  const RigOrder& order_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

RigMonomial parse_expr(std::string_view text, Mode mode,
                       const Alphabet& alphabet, const RigOrder& order) {
  return ExprParser(text, mode, alphabet, order).parse();
}

RigMonomial parse_expr(std::string_view text, const Presentation& p) {
  RigOrder order = p.order();
  return parse_expr(text, p.mode, p.alphabet, order);
}

Presentation parse_presentation(std::string_view text) {
  std::optional<Mode> mode;
  std::optional<std::vector<std::string>> vars;
  std::optional<std::string> order_kw;
  std::vector<std::pair<std::size_t, std::string>> rels;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (colon == std::string_view::npos) parse_error(where() + "expected 'key: value'");
    std::string_view key = trim(line.substr(0, colon));
    std::string_view value = trim(line.substr(colon + 1));
    if (key == "mode") {
      if (mode) parse_error(where() + "duplicate mode");
      if (value == "commutative") {
        mode = Mode::Commutative;
      } else if (value == "noncommutative") {
        mode = Mode::Noncommutative;
      } else {
        parse_error(where() + "unknown mode '" + std::string(value) + "'");
      }
    } else if (key == "vars") {
      if (vars) parse_error(where() + "duplicate vars");
      vars = split_ws(value);
      for (const auto& v : *vars) {
        if (!valid_identifier(v)) parse_error(where() + "invalid symbol '" + v + "'");
      }
    } else if (key == "order") {
      if (order_kw) parse_error(where() + "duplicate order");
      order_kw = std::string(value);
    } else if (key == "rel") {
      rels.emplace_back(line_no, std::string(value));
    } else {
      parse_error(where() + "unknown directive '" + std::string(key) + "'");
    }
  }

  if (!mode) parse_error("missing 'mode:' line");
  if (!vars) parse_error("missing 'vars:' line");
  Presentation p;
  p.mode = *mode;
  try {
    p.alphabet = Alphabet(*vars);
  } catch (const Error& e) {
    parse_error(e.what());
  }
  if (order_kw) {
    auto kind = parse_order_keyword(p.mode, *order_kw);
    if (!kind) {
      parse_error("order '" + *order_kw + "' is not available in " +
                  (p.mode == Mode::Commutative ? "commutative" : "noncommutative") +
                  " mode");
    }
    p.order_kind = *kind;
  } else {
    p.order_kind = default_order_kind(p.mode);
  }
  RigOrder order = p.order();
  for (const auto& [no, body] : rels) {
    auto eq = body.find('=');
    if (eq == std::string::npos || body.find('=', eq + 1) != std::string::npos) {
      parse_error("line " + std::to_string(no) + ": relation needs exactly one '='");
    }
    RigMonomial lhs, rhs;
    try {
      lhs = parse_expr(std::string_view(body).substr(0, eq), p.mode, p.alphabet, order);
      rhs = parse_expr(std::string_view(body).substr(eq + 1), p.mode, p.alphabet, order);
    } catch (const Error& e) {
      parse_error("line " + std::to_string(no) + ": " + e.what());
    }
    if (lhs == rhs) {
      parse_error("line " + std::to_string(no) + ": relation with identical sides");
    }
    p.relations.emplace_back(std::move(lhs), std::move(rhs));
  }
  return p;
}

System to_system(const Presentation& p) {
  RigOrder order = p.order();
  std::vector<Polynomial> rels;
  rels.reserve(p.relations.size());
  for (const auto& [l, r] : p.relations) {
    rels.push_back(Polynomial::binomial(l, r, order));
  }
  return System::make(p.alphabet, order, std::move(rels));
}

Presentation from_system(const System& s) {
  Presentation p;
  p.mode = s.mode();
  p.alphabet = s.alphabet;
  p.order_kind = s.order.kind();
  for (const auto& f : s.relations) {
    if (!is_binomial(f)) {
      throw Error(ErrorKind::InvalidArgument,
                  "only binomial relations have a presentation form");
    }
    const auto& t = f.terms();
    bool first_positive = t[0].coeff == 1;
    p.relations.emplace_back(first_positive ? t[0].monomial : t[1].monomial,
                             first_positive ? t[1].monomial : t[0].monomial);
  }
  return p;
}

std::string render(const BaseMonomial& b, Mode mode, const Alphabet& alphabet) {
  if (b.is_one()) return "1";
  std::string out;
  auto emit = [&](Letter l, std::uint32_t k) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(l);
    if (k > 1) out += '^' + std::to_string(k);
  };
  const auto& d = b.data();
  if (mode == Mode::Commutative) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] > 0) emit(static_cast<Letter>(i), d[i]);
    }
    return out;
  }
  std::size_t i = 0;
  while (i < d.size()) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    emit(d[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return out;
}

std::string render(const RigMonomial& m, Mode mode, const Alphabet& alphabet) {
  if (m.is_theta()) return "0";
  std::string out;
  for (const auto& r : m.runs()) {
    std::string base = render(r.base, mode, alphabet);
    for (std::uint32_t k = 0; k < r.count; ++k) {
      if (!out.empty()) out += " + ";
      out += base;
    }
  }
  return out;
}

std::string render_rational(const Rational& q) { return q.str(); }

std::string render(const Polynomial& f, Mode mode, const Alphabet& alphabet) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = t.coeff < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += render_rational(mag) + "*";
    out += "(" + render(t.monomial, mode, alphabet) + ")";
    first = false;
  }
  return out;
}

std::pair<std::string, std::string> render_relation(const Polynomial& f,
                                                    const System& s) {
  if (is_binomial(f)) {
    const auto& t = f.terms();
    std::size_t pos = t[0].coeff == 1 ? 0 : 1;
    return {render(t[pos].monomial, s.mode(), s.alphabet),
            render(t[1 - pos].monomial, s.mode(), s.alphabet)};
  }
  return {render(f, s.mode(), s.alphabet), "0"};
}

std::string render_basis(const System& s) {
  std::string out;
  for (const auto& f : s.relations) {
    auto [l, r] = render_relation(f, s);
    out += l + " = " + r + "\n";
  }
  return out;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "mode: ";
  out += p.mode == Mode::Commutative ? "commutative" : "noncommutative";
  out += "\nvars:";
  for (const auto& n : p.alphabet.names()) out += " " + n;
  out += "\norder: " + order_keyword(p.mode, p.order_kind) + "\n";
  for (const auto& [l, r] : p.relations) {
    out += "rel: " + render(l, p.mode, p.alphabet) + " = " +
           render(r, p.mode, p.alphabet) + "\n";
  }
  return out;
}

std::string render_trace(const ReductionTrace& t, const System& s) {
  std::string out;
  for (const auto& step : t.steps) {
    out += render_rational(step.coeff) + " * (" +
           render(step.context.left, s.mode(), s.alphabet) + ") [rel #" +
           std::to_string(step.relation) + "] (" +
           render(step.context.right, s.mode(), s.alphabet) + ") + " +
           render(step.context.pad, s.mode(), s.alphabet) + "\n";
  }
  return out;
}

std::string render_composition(const CompositionRecord& r, const System& s) {
  return "(#" + std::to_string(r.f_id) + ", #" + std::to_string(r.g_id) + ") " +
         composition_kind_name(r.kind) +
         " w = " + render(r.ambiguity, s.mode(), s.alphabet) +
         " spoly = " + render(r.spoly, s.mode(), s.alphabet);
}

}  // namespace rigsgs
