#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsl::expr {

struct ExprError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Evaluates a constant arithmetic expression: numbers, + - * /,
/// parentheses, unary sign, the constant pi, and the functions cos and
/// sqrt. Enough to pass irrational parameters like "cos(pi/20)" or
/// "-sqrt(2)/2" on the command line. Throws ExprError on malformed
/// input.
double evaluate(std::string_view source);

}  // namespace tsl::expr
