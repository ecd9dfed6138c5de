#include "msk/poly_parser.hpp"

#include <cctype>

#include "msk/errors.hpp"

namespace msk {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial out(static_cast<int>(vars_.size()));
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = take_sign().value_or(1);
    out += term().scaled(sign);
    skip_ws();
    while (!at_end()) {
      auto s = take_sign();
      if (!s) fail("expected '+' or '-'");
      out += term().scaled(*s);
      skip_ws();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("polynomial parse error at column " + std::to_string(pos_ + 1) +
                      ": " + what + " in '" + text_ + "'");
  }

  std::optional<int> take_sign() {
    skip_ws();
    if (at_end()) return std::nullopt;
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    return std::nullopt;
  }

  Polynomial term() {
    Polynomial out = factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      out = out * factor();
      skip_ws();
    }
    return out;
  }

  Polynomial factor() {
    skip_ws();
    if (at_end()) fail("expected a factor");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_factor();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident_factor();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Polynomial rational_factor() {
    std::string num = digits();
    std::string den;
    if (!at_end() && peek() == '/') {
      ++pos_;
      den = digits();
    }
    Rational q = parse_rational(den.empty() ? num : num + "/" + den);
    return Polynomial::constant(static_cast<int>(vars_.size()), q);
  }

  Polynomial ident_factor() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    int var = -1;
    for (std::size_t v = 0; v < vars_.size(); ++v)
      if (vars_[v] == name) var = static_cast<int>(v);
    if (var < 0) {
      pos_ = start;
      fail("unknown coordinate '" + name + "'");
    }
    unsigned exp = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::string e = digits();
      if (e.size() > 6) fail("exponent out of range");
      exp = static_cast<unsigned>(std::stoul(e));
      if (exp == 0) fail("exponent must be positive");
    }
    Polynomial::Exponents exps(vars_.size(), 0);
    exps[static_cast<std::size_t>(var)] = exp;
    return Polynomial::monomial(static_cast<int>(vars_.size()), std::move(exps), 1);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

}  // namespace msk
