#include "taxicab/exprparse.hpp"

#include <cctype>
#include <cstdlib>

#include "taxicab/errors.hpp"

namespace taxicab {

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t bits) : text_(text), bits_(bits) {}

  Ball parse() {
    Ball v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw DomainError("expression: trailing input at '" + text_.substr(pos_) + "'");
    return v;
  }

 private:
  Ball expr() {
    Ball v = term();
    for (;;) {
      skip_ws();
      if (consume('+'))
        v = v + term();
      else if (consume('-'))
        v = v - term();
      else
        return v;
    }
  }

  Ball term() {
    Ball v = factor();
    for (;;) {
      skip_ws();
      if (consume('*'))
        v = v * factor();
      else if (consume('/'))
        v = v / factor();
      else
        return v;
    }
  }

  Ball factor() {
    skip_ws();
    if (consume('-')) return -factor();
    Ball v = primary();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      bool neg = consume('-');
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      if (digits.empty()) throw DomainError("expression: '^' needs an integer exponent");
      long e = std::strtol(digits.c_str(), nullptr, 10);
      v = v.pow(neg ? -e : e);
    }
    return v;
  }

  Ball primary() {
    skip_ws();
    if (consume('(')) {
      Ball v = expr();
      expect(')');
      return v;
    }
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      // scientific suffix
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t mark = pos_++;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        } else {
          pos_ = mark;  // the 'e' belongs to something else
        }
      }
      return Ball::from_decimal(text_.substr(start, pos_ - start), bits_);
    }
    std::string name = identifier();
    if (name.empty()) throw DomainError("expression: expected a value at position " +
                                        std::to_string(pos_));
    skip_ws();
    if (consume('(')) {
      Ball arg = expr();
      expect(')');
      if (name == "log") return arg.log_val();
      if (name == "exp") return arg.exp_val();
      if (name == "abs") return arg.abs_val();
      if (name == "sqrt") return arg.sqrt_val();
      throw DomainError("expression: unknown function '" + name + "'");
    }
    return constant(constant_from_name(name), bits_);
  }

  std::string identifier() {
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    return name;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c))
      throw DomainError(std::string("expression: expected '") + c + "'");
  }

  const std::string& text_;
  std::size_t bits_;
  std::size_t pos_ = 0;
};

}  // namespace

Ball eval_expression(const std::string& text, std::size_t bits) {
  return Parser(text, bits).parse();
}

}  // namespace taxicab
