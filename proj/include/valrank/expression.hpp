#pragma once

// Small arithmetic grammar used for command-line scalars:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | identifier | '(' expr ')'
// The caller supplies the meaning of integers, identifiers and division.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "valrank/error.hpp"

namespace valrank {

template <class T>
struct ExprContext {
  std::function<T(const mpz_class&)> integer;
  std::function<T(const std::string&)> variable;
  std::function<T(const T&, const T&)> divide;
  std::function<T(const T&, std::int64_t)> power;
};

namespace detail {

template <class T>
class ExprParser {
 public:
  ExprParser(const std::string& text, const ExprContext<T>& ctx) : s_(text), ctx_(ctx) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "cannot parse '" + s_ + "' at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v = term();
    while (true) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  T term() {
    T v = unary();
    while (true) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) v = ctx_.divide(v, unary());
      else return v;
    }
  }
  T unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  T power() {
    T base = atom();
    if (!eat('^')) return base;
    const bool negative = eat('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("exponent must be an integer");
    if (pos_ - start > 9) error("exponent too large");
    const std::int64_t e = std::stoll(s_.substr(start, pos_ - start));
    return ctx_.power(base, negative ? -e : e);
  }
  T atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ctx_.integer(mpz_class(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return ctx_.variable(s_.substr(start, pos_ - start));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  const ExprContext<T>& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class T>
T parse_expression(const std::string& text, const ExprContext<T>& ctx) {
  return detail::ExprParser<T>(text, ctx).parse();
}

/// Repeated squaring; negative exponents go through `invert`.
template <class T>
T integer_power(const T& base, std::int64_t e, const T& one, const std::function<T(const T&)>& invert) {
  T b = e < 0 ? invert(base) : base;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  T acc = one;
  while (k) {
    if (k & 1) acc = acc * b;
    b = b * b;
    k >>= 1;
  }
  return acc;
}

/// Splits on `sep` outside any (), [] or {} nesting; surrounding blanks are trimmed.
std::vector<std::string> split_top_level(const std::string& text, char sep);

}  // namespace valrank
