#pragma once

#include <string>

#include "taxicab/ballreal.hpp"

namespace taxicab {

// Evaluates a real-valued expression to a certified ball. Grammar:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | primary ('^' integer)?
//   primary := number | constant | fn '(' expr ')' | '(' expr ')'
//   fn      := log | exp | abs | sqrt
// Constants: alpha, abs_beta, sqrt5, log_alpha, log5, log_abs_beta,
// log_5sqrt5. Numbers are exact decimal literals ("0.25", "1.5e3").
// Throws DomainError on syntax errors or domain violations.
Ball eval_expression(const std::string& text, std::size_t bits);

}  // namespace taxicab
