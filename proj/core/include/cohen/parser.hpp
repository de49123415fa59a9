#pragma once

#include <string_view>
#include <variant>

#include "cohen/polynomial.hpp"

namespace cohen {

/// Operator mode reads qh / ph with a noncommutative product; phase mode reads q / p.
enum class ParseMode { operator_mode, phase_mode };

/// Parses an expression in the grammar of docs/grammar.md. Operator words are
/// brought into standard order. Throws ParseError carrying a byte offset.
std::variant<OperatorPoly, PhasePoly> parse(std::string_view text, ParseMode mode);

OperatorPoly parse_operator(std::string_view text);
PhasePoly parse_phase(std::string_view text);

}  // namespace cohen
