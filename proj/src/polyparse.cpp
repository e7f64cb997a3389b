#include <cctype>

#include "sintpts/io.hpp"

namespace sintpts {

namespace {

// Recursive descent: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := ('-'|'+') factor | atom ('^' integer)?.
class Parser {
 public:
  Parser(const std::string& s, unsigned nvars, std::vector<std::string> names)
      : s_(s), nvars_(nvars), names_(std::move(names)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse polynomial \"" + s_ + "\" at column " + std::to_string(pos_ + 1) + ": " +
                          why);
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

  MultiPoly expr() {
    MultiPoly p = term();
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  MultiPoly term() {
    MultiPoly p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else {
        // Implicit product such as 2x or 3(x+1).
        skip();
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
          p = p * factor();
        else
          return p;
      }
    }
  }
  MultiPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      // a/b binds as a single literal; division by anything else is rejected.
      std::size_t save = pos_;
      if (eat('/')) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) den = digits();
        else {
          pos_ = save;
          fail("only literal denominators are allowed");
        }
        if (den == 0) fail("zero denominator");
      }
      return MultiPoly::constant(nvars_, make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (unsigned i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return MultiPoly::variable(nvars_, i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  unsigned nvars_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, unsigned nvars, const std::vector<std::string>& names) {
  std::vector<std::string> n = names.empty() ? default_var_names(nvars) : names;
  if (n.size() != nvars) throw ValidationError("variable name list does not match the arity");
  return Parser(text, nvars, n).parse();
}

}  // namespace sintpts
