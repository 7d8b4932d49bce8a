#include "tsl/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace tsl::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  double run() {
    const double value = expression();
    skip_spaces();
    if (pos_ != src_.size()) {
      throw ExprError("unexpected trailing input at position " +
                      std::to_string(pos_) + " in '" + std::string(src_) +
                      "'");
    }
    return value;
  }

 private:
  double expression() {
    double value = term();
    for (;;) {
      skip_spaces();
      if (consume('+')) {
        value += term();
      } else if (consume('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  double term() {
    double value = unary();
    for (;;) {
      skip_spaces();
      if (consume('*')) {
        value *= unary();
      } else if (consume('/')) {
        value /= unary();
      } else {
        return value;
      }
    }
  }

  double unary() {
    skip_spaces();
    if (consume('-')) return -unary();
    if (consume('+')) return unary();
    return primary();
  }

  double primary() {
    skip_spaces();
    if (consume('(')) {
      const double value = expression();
      expect(')');
      return value;
    }
    if (pos_ < src_.size() &&
        (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
         src_[pos_] == '.')) {
      return number();
    }
    if (pos_ < src_.size() &&
        std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      return identifier();
    }
    throw ExprError("expected a number, 'pi', 'cos(..)', 'sqrt(..)' or '(' " +
                    where());
  }

  double number() {
    const char* begin = src_.data() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) throw ExprError("malformed number " + where());
    pos_ += static_cast<std::size_t>(end - begin);
    return value;
  }

  double identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "pi") return std::numbers::pi_v<double>;
    if (name == "cos" || name == "sqrt") {
      skip_spaces();
      expect('(');
      const double arg = expression();
      expect(')');
      return name == "cos" ? std::cos(arg) : std::sqrt(arg);
    }
    throw ExprError("unknown identifier '" + std::string(name) + "' " +
                    where());
  }

  void skip_spaces() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_spaces();
    if (!consume(c)) {
      throw ExprError("expected '" + std::string(1, c) + "' " + where());
    }
  }

  std::string where() const {
    return "at position " + std::to_string(pos_) + " in '" +
           std::string(src_) + "'";
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

double evaluate(std::string_view source) { return Parser(source).run(); }

}  // namespace tsl::expr
