#pragma once

// Internal JSON helpers shared by the document readers and writers.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv::detail {

/// Parses JSON but keeps every floating-point literal as its source lexeme
/// (stored as a string), so "0.7" and 0.7 both reach Rational::parse intact.
/// Syntax errors become ParseError carrying the 1-based line number.
nlohmann::json parse_exact_json(std::string_view text);

/// Accepts a string token or an integer / preserved-decimal number.
Rational rational_from_json(const nlohmann::json& value, const std::string& where);

std::string quote(std::string_view text);
std::string rational_array(const std::vector<Rational>& values);
std::string string_array(const std::vector<std::string>& values);

}  // namespace fairdiv::detail
