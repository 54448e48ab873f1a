#include "time_expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace symwalk::cli {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : text_(normalise(text)), n_(n) {}

  Real parse() {
    Real v = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_) + "'");
    return v;
  }

 private:
  // "·" (U+00B7) is accepted as a multiplication sign.
  static std::string normalise(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (static_cast<unsigned char>(s[i]) == 0xC2 && i + 1 < s.size() &&
          static_cast<unsigned char>(s[i + 1]) == 0xB7) {
        out += '*';
        ++i;
      } else {
        out += s[i];
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("time expression \"" + text_ + "\": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  Real sum() {
    Real v = product();
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }

  Real product() {
    Real v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) {
        const Real d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else if (starts_factor()) v *= unary();
      else return v;
    }
  }

  Real unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }

  Real atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (eat('(')) {
      Real v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E') &&
          pos_ + 1 < text_.size() &&
          (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '-' ||
           text_[pos_ + 1] == '+')) {
        ++pos_;
        if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      const std::string literal = text_.substr(start, pos_ - start);
      try {
        return Real(literal);
      } catch (const std::exception&) {
        fail("bad number '" + literal + "'");
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string word = text_.substr(start, pos_ - start);
    const Real n = n_;
    if (word == "n") return n;
    if (word == "logn") return log(n);
    if (word == "nlogn") return n * log(n);
    fail("unknown token '" + word + "'");
  }

  std::string text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Real eval_time_expr(const std::string& text, int n) { return Parser(text, n).parse(); }

std::vector<Real> eval_time_list(const std::string& text, int n) {
  std::vector<Real> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(eval_time_expr(item, n));
  if (out.empty()) throw std::invalid_argument("empty time list");
  return out;
}

}  // namespace symwalk::cli
