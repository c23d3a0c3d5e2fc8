#pragma once

#include "suspzeta/motivic.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace suspzeta {

enum class RenderMode { Canonical, Latex };

/// Deterministic integer-cleared rendering, denominator kept factored:
/// "(3*s + 7)/((15*s + 7)*(s + 1))". Canonical mode round-trips through
/// parse_rational_expr.
std::string format_rational_function(const RationalFunction& x, RenderMode mode = RenderMode::Canonical,
                                     std::string_view var = "s");

std::string format_motivic(const MotivicExpression& x, RenderMode mode = RenderMode::Canonical);

struct ExprParseError : std::runtime_error {
    ExprParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Small expression grammar: integers, the variable symbol, + - * / ^ and
/// parentheses.
RationalFunction parse_rational_expr(std::string_view text, std::string_view var = "s");

} // namespace suspzeta
