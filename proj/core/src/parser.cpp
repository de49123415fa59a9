#include "cohen/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "cohen/errors.hpp"

namespace cohen {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E')) {
        throw ParseError(ParseErrorKind::lexical, start, "decimal literals are not supported; use a/b");
      }
      out.push_back({Tok::number, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(c)) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      if (word != "q" && word != "p" && word != "qh" && word != "ph" && word != "hbar" && word != "i" &&
          word != "pi") {
        throw ParseError(ParseErrorKind::lexical, start, "unknown identifier '" + word + "'");
      }
      out.push_back({Tok::ident, start, std::move(word)});
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
      out.push_back({Tok::minus, start, "-"});
      i += 3;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw ParseError(ParseErrorKind::lexical, start, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({kind, start, std::string(1, s[i])});
    ++i;
  }
  out.push_back({Tok::end, s.size(), ""});
  return out;
}

template <class Poly>
class Parser {
 public:
  Parser(std::string_view text, ParseMode mode) : tokens_(lex(text)), mode_(mode) {}

  Poly run() {
    Poly result = expr();
    const Token& t = peek();
    if (t.kind == Tok::rparen) throw ParseError(ParseErrorKind::unbalanced_parentheses, t.offset, "unmatched ')'");
    if (t.kind != Tok::end) unexpected(t);
    return result;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] static void unexpected(const Token& t) {
    if (t.kind == Tok::end) throw ParseError(ParseErrorKind::unexpected_token, t.offset, "unexpected end of input");
    throw ParseError(ParseErrorKind::unexpected_token, t.offset, "unexpected '" + t.text + "'");
  }

  Poly expr() {
    Poly sum = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool negate = take().kind == Tok::minus;
      Poly rhs = term();
      if (negate) {
        sum -= rhs;
      } else {
        sum += rhs;
      }
    }
    return sum;
  }

  Poly term() {
    Poly product = factor();
    while (peek().kind == Tok::star) {
      take();
      product = product * factor();
    }
    return product;
  }

  Poly factor() {
    bool negate = false;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      if (take().kind == Tok::minus) negate = !negate;
    }
    Poly base = primary();
    if (peek().kind == Tok::caret) {
      take();
      const Token& sign_or_digits = peek();
      bool negative = false;
      if (sign_or_digits.kind == Tok::minus) {
        negative = true;
        take();
      }
      const Token& digits = peek();
      if (digits.kind != Tok::number) {
        throw ParseError(ParseErrorKind::non_integer_exponent, digits.offset, "exponent must be an integer literal");
      }
      take();
      if (peek().kind == Tok::slash) {
        throw ParseError(ParseErrorKind::non_integer_exponent, digits.offset, "exponent must be an integer literal");
      }
      if (digits.text.size() > 6) {
        throw ParseError(ParseErrorKind::unexpected_token, digits.offset, "exponent too large");
      }
      const int e = std::stoi(digits.text);
      if (negative && e != 0) {
        base = reciprocal(base, sign_or_digits.offset);
      }
      base = pow(base, e);
    }
    return negate ? -base : base;
  }

  // Negative powers are only meaningful for nonzero single-grade constants such
  // as hbar or 2*pi.
  static Poly reciprocal(const Poly& base, std::size_t minus_offset) {
    if (base.size() == 1 && base.terms().begin()->first == Monomial{0, 0}) {
      if (auto scalar = base.terms().begin()->second.as_scalar()) {
        return Poly::constant(ScalarSum(*scalar).reciprocal());
      }
    }
    throw ParseError(ParseErrorKind::negative_exponent, minus_offset,
                     "negative exponents apply only to single-term constants");
  }

  Poly primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::number: {
        Rational value(t.text, 10);
        if (peek().kind == Tok::slash) {
          take();
          const Token& den = take();
          if (den.kind != Tok::number) unexpected(den);
          Rational d(den.text, 10);
          if (d == 0) throw ParseError(ParseErrorKind::unexpected_token, den.offset, "zero denominator");
          value /= d;
        }
        return Poly::constant(ScalarSum(GaussianRational(value)));
      }
      case Tok::ident:
        return identifier(t);
      case Tok::lparen: {
        Poly inner = expr();
        if (peek().kind != Tok::rparen) {
          if (peek().kind == Tok::end) {
            throw ParseError(ParseErrorKind::unbalanced_parentheses, t.offset, "unclosed '('");
          }
          unexpected(peek());
        }
        take();
        return inner;
      }
      case Tok::rparen:
        throw ParseError(ParseErrorKind::unbalanced_parentheses, t.offset, "unmatched ')'");
      default:
        unexpected(t);
    }
  }

  Poly identifier(const Token& t) {
    const bool op_mode = mode_ == ParseMode::operator_mode;
    if (t.text == "q" || t.text == "p") {
      if (op_mode) {
        throw ParseError(ParseErrorKind::phase_variable_in_operator_mode, t.offset,
                         "phase-space variable '" + t.text + "' in operator expression; use qh/ph");
      }
      return t.text == "q" ? Poly::monomial(1, 0) : Poly::monomial(0, 1);
    }
    if (t.text == "qh" || t.text == "ph") {
      if (!op_mode) {
        throw ParseError(ParseErrorKind::operator_in_phase_mode, t.offset,
                         "operator '" + t.text + "' in phase-space expression; use q/p");
      }
      return t.text == "qh" ? Poly::monomial(1, 0) : Poly::monomial(0, 1);
    }
    if (t.text == "hbar") return Poly::constant(ScalarSum::hbar());
    if (t.text == "i") return Poly::constant(ScalarSum(GaussianRational::i()));
    // pi = (2 pi) / 2
    return Poly::constant(ScalarSum(GaussianRational(Rational(1, 2)), Grade{0, 1}));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseMode mode_;
};

}  // namespace

std::variant<OperatorPoly, PhasePoly> parse(std::string_view text, ParseMode mode) {
  if (mode == ParseMode::operator_mode) return parse_operator(text);
  return parse_phase(text);
}

OperatorPoly parse_operator(std::string_view text) {
  return Parser<OperatorPoly>(text, ParseMode::operator_mode).run();
}

PhasePoly parse_phase(std::string_view text) { return Parser<PhasePoly>(text, ParseMode::phase_mode).run(); }

}  // namespace cohen
