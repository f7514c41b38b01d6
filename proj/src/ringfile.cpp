#include "socle/ringfile.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace socle {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, Equals, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col});
      advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        throw ParseError(line, col + (j - i), "missing '*' between number and identifier");
      }
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Equals; break;
      default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), line, col});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  const Token& peek() const { return t_[p_]; }
  Token next() { return t_[p_ < t_.size() - 1 ? p_++ : p_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return next();
  }
  [[noreturn]] static void fail(const Token& at, const std::string& msg) { throw ParseError(at.line, at.column, msg); }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }

  Polynomial expr(const RingPtr& R) {
    Polynomial acc = term(R);
    for (;;) {
      if (accept(Tok::Plus)) {
        acc = acc + term(R);
      } else if (accept(Tok::Minus)) {
        acc = acc - term(R);
      } else {
        return acc;
      }
    }
  }

  std::vector<Polynomial> list(const RingPtr& R) {
    std::vector<Polynomial> out;
    out.push_back(expr(R));
    while (accept(Tok::Comma)) {
      skip_newlines();
      out.push_back(expr(R));
    }
    return out;
  }

private:
  Polynomial term(const RingPtr& R) {
    Polynomial acc = unary(R);
    for (;;) {
      if (accept(Tok::Star)) {
        acc = acc * unary(R);
      } else if (peek().kind == Tok::Slash) {
        Token at = next();
        Polynomial d = unary(R);
        if (d.is_zero() || d.size() != 1 || !d.lead_monomial().is_one()) fail(at, "division only by a nonzero constant");
        acc = acc.scaled(Scalar(R->field(), 1) / d.lead_coeff());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary(const RingPtr& R) {
    if (accept(Tok::Minus)) return -unary(R);
    if (accept(Tok::Plus)) return unary(R);
    return power(R);
  }

  Polynomial power(const RingPtr& R) {
    Polynomial base = atom(R);
    if (accept(Tok::Caret)) {
      Token e = expect(Tok::Int, "exponent");
      if (e.text.size() > 5 || std::stoul(e.text) > 65535) fail(e, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Polynomial atom(const RingPtr& R) {
    const Token tok = next();
    switch (tok.kind) {
      case Tok::Int:
        return Polynomial::constant(R, Scalar(R->field(), mpz_class(tok.text)));
      case Tok::Ident: {
        auto idx = R->index_of(tok.text);
        if (!idx) fail(tok, "unknown identifier '" + tok.text + "'");
        return Polynomial::variable(R, *idx);
      }
      case Tok::LParen: {
        Polynomial p = expr(R);
        expect(Tok::RParen, "')'");
        return p;
      }
      default:
        fail(tok, "expected a number, variable or '(', found " + describe(tok));
    }
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& R, std::string_view text) {
  Parser p(lex(text));
  Polynomial f = p.expr(R);
  if (p.peek().kind != Tok::End) Parser::fail(p.peek(), "unexpected " + describe(p.peek()));
  return f;
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& R, std::string_view text) {
  Parser p(lex(text));
  p.skip_newlines();
  if (p.peek().kind == Tok::End) return {};
  auto out = p.list(R);
  p.skip_newlines();
  if (p.peek().kind != Tok::End) Parser::fail(p.peek(), "unexpected " + describe(p.peek()));
  return out;
}

const NamedIdeal* RingFile::find(const std::string& name) const {
  for (const auto& i : ideals) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

RingFile parse_ring_file(std::string_view text) {
  Parser p(lex(text));
  RingSpec spec;
  bool have_field = false, have_vars = false, have_weights = false, have_quotient = false;
  RingFile out;
  auto ring = [&](const Token& at) {
    if (!out.ring) {
      if (!have_vars) Parser::fail(at, "'vars' must come before polynomials");
      if (!have_weights) spec.weights.assign(spec.names.size(), 1);
      try {
        out.ring = Ring::make(spec);
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        Parser::fail(at, e.what());
      }
    }
    return out.ring;
  };
  auto end_statement = [&] {
    if (p.peek().kind != Tok::Newline && p.peek().kind != Tok::End) {
      Parser::fail(p.peek(), "unexpected " + describe(p.peek()));
    }
  };

  for (;;) {
    p.skip_newlines();
    if (p.peek().kind == Tok::End) break;
    Token kw = p.expect(Tok::Ident, "a statement keyword");
    if (kw.text == "field") {
      if (have_field) Parser::fail(kw, "duplicate 'field' statement");
      if (out.ring || have_vars) Parser::fail(kw, "'field' must come before 'vars'");
      Token f = p.expect(Tok::Ident, "QQ or FP");
      if (f.text == "QQ" || f.text == "qq") {
        spec.field = Field::rationals();
      } else if (f.text == "FP" || f.text == "fp") {
        Token n = p.expect(Tok::Int, "a prime modulus");
        try {
          spec.field = Field::parse("fp:" + n.text);
        } catch (const InputError& e) {
          Parser::fail(n, e.what());
        }
      } else {
        Parser::fail(f, "unknown field '" + f.text + "' (expected QQ or FP <prime>)");
      }
      have_field = true;
    } else if (kw.text == "vars") {
      if (have_vars) Parser::fail(kw, "duplicate 'vars' statement");
      std::set<std::string> seen;
      while (p.peek().kind == Tok::Ident) {
        Token v = p.next();
        static const std::set<std::string> reserved = {"field", "vars", "weights", "quotient", "ideal"};
        if (reserved.count(v.text)) Parser::fail(v, "'" + v.text + "' is a keyword");
        if (!seen.insert(v.text).second) Parser::fail(v, "duplicate variable '" + v.text + "'");
        spec.names.push_back(v.text);
        p.accept(Tok::Comma);
      }
      if (spec.names.empty()) Parser::fail(p.peek(), "'vars' needs at least one name");
      if (spec.names.size() > kMaxVars) Parser::fail(kw, "too many variables");
      have_vars = true;
    } else if (kw.text == "weights") {
      if (!have_vars) Parser::fail(kw, "'weights' must come after 'vars'");
      if (have_weights || out.ring) Parser::fail(kw, "'weights' must come once, before any polynomial");
      while (p.peek().kind == Tok::Int) {
        Token w = p.next();
        if (w.text.size() > 6) Parser::fail(w, "weight too large");
        unsigned long v = std::stoul(w.text);
        if (v < 1) Parser::fail(w, "weights must be >= 1");
        spec.weights.push_back(static_cast<std::uint32_t>(v));
        p.accept(Tok::Comma);
      }
      if (spec.weights.size() != spec.names.size()) {
        Parser::fail(kw, std::to_string(spec.weights.size()) + " weights given for " +
                             std::to_string(spec.names.size()) + " variables");
      }
      have_weights = true;
    } else if (kw.text == "quotient") {
      if (have_quotient) Parser::fail(kw, "duplicate 'quotient' statement");
      auto R = ring(kw);
      out.quotient = p.list(R);
      have_quotient = true;
    } else if (kw.text == "ideal") {
      auto R = ring(kw);
      Token name = p.expect(Tok::Ident, "an ideal name");
      if (R->index_of(name.text)) Parser::fail(name, "ideal name '" + name.text + "' clashes with a variable");
      if (out.find(name.text)) Parser::fail(name, "ideal '" + name.text + "' bound twice");
      p.expect(Tok::Equals, "'='");
      out.ideals.push_back({name.text, p.list(R)});
    } else {
      Parser::fail(kw, "unknown statement '" + kw.text + "'");
    }
    end_statement();
  }
  if (!have_vars) throw ParseError(1, 1, "missing 'vars' statement");
  ring(Token{Tok::End, "", 1, 1});
  return out;
}

namespace {
std::string join(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string();
  }
  return s;
}
}  // namespace

std::string print_ring_file(const RingFile& file) {
  const Ring& R = *file.ring;
  std::string s;
  s += R.field().is_rational() ? "field QQ\n" : "field FP " + std::to_string(R.field().modulus()) + "\n";
  s += "vars";
  for (const auto& n : R.names()) s += " " + n;
  s += "\nweights";
  for (auto w : R.weights()) s += " " + std::to_string(w);
  s += "\n";
  if (!file.quotient.empty()) s += "quotient " + join(file.quotient) + "\n";
  for (const auto& i : file.ideals) s += "ideal " + i.name + " = " + join(i.gens) + "\n";
  return s;
}

bool structurally_equal(const RingFile& a, const RingFile& b) {
  if (!a.ring->same_as(*b.ring)) return false;
  if (a.quotient != b.quotient) return false;
  if (a.ideals.size() != b.ideals.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    if (a.ideals[i].name != b.ideals[i].name || a.ideals[i].gens != b.ideals[i].gens) return false;
  }
  return true;
}

}  // namespace socle
