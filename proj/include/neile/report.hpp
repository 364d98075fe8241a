#pragma once

// Text and JSON forms shared by the CLI and the verification suite.

#include <string>
#include <string_view>

#include <json.hpp>

#include "neile/hyperbolic.hpp"
#include "neile/oracle.hpp"

namespace neile {

inline constexpr const char* kVersion = "1.0.0";

/// Parses "re,im", "re+imi", "re-imi", "imi" or "re". Throws ParseError.
Complex parse_complex(std::string_view text);

/// "re,im" with 17 significant digits; parse_complex round-trips it exactly.
std::string format_complex(Complex z);

/// Shortest form for people: 6 significant digits, "a+bi" or "a".
std::string format_complex_human(Complex z);
std::string format_real(double x, int digits);

nlohmann::json to_json(const OracleReport& r);
nlohmann::json to_json(const SuiteReport& r);

}  // namespace neile
