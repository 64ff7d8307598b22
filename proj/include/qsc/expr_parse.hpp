#pragma once

#include "qsc/laurent.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Recursive-descent parser for sums of products over a ring T that contains
// the Laurent polynomials. Grammar:
//   expr   := [+|-] term ((+|-) term)*
//   term   := factor (* factor)*
//   factor := atom [^ int]
//   atom   := integer | q | name '[' label ']' | '(' expr ')'
// Exponents may be written 3, -1, {-1} or (-1); negative exponents are only
// allowed on q. The Unicode minus sign is accepted as '-'.
template <class T>
class ExprParser {
 public:
  using Symbol = std::function<T(std::string_view name, std::string_view label)>;

  ExprParser(std::string_view text, Symbol symbol) : symbol_(std::move(symbol)) {
    src_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
        src_ += '-';
        i += 2;
      } else {
        src_ += text[i];
      }
    }
  }

  T parse() {
    T v = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + src_ + "\"");
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  T expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    T acc = term();
    if (neg) acc = T(LaurentPoly(-1)) * acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  T term() {
    T acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(src_.substr(start, pos_ - start));
  }

  int exponent() {
    char close = '\0';
    if (eat('{')) close = '}';
    else if (eat('(')) close = ')';
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    long long e = integer();
    if (close && !eat(close)) fail("unbalanced exponent");
    return static_cast<int>(neg ? -e : e);
  }

  T factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      T inner = expr();
      if (!eat(')')) fail("expected ')'");
      return power(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return power(T(LaurentPoly(Integer(src_.substr(start, pos_ - start).c_str()))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string name = src_.substr(start, pos_ - start);
      if (name == "q" && peek() != '[') {
        int e = eat('^') ? exponent() : 1;
        return T(LaurentPoly::q_pow(e));
      }
      if (!eat('[')) fail("expected '[' after generator name");
      std::size_t lstart = pos_;
      while (pos_ < src_.size() && src_[pos_] != ']') ++pos_;
      if (pos_ == src_.size()) fail("expected ']'");
      std::string label = src_.substr(lstart, pos_ - lstart);
      ++pos_;
      try {
        return power(symbol_(name, label));
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    fail("expected a factor");
  }

  T power(T base) {
    if (!eat('^')) return base;
    int e = exponent();
    if (e < 0) fail("negative exponent on a non-unit");
    T acc = T(LaurentPoly(1));
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
  }

  std::string src_;
  std::size_t pos_ = 0;
  Symbol symbol_;
};

}  // namespace qsc
