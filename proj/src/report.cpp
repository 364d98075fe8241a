#include "neile/report.hpp"

#include <charconv>
#include <cstdio>

#include "neile/errors.hpp"

namespace neile {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw ParseError("invalid complex literal '" + std::string(whole) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    if (const auto comma = text.find(','); comma != std::string_view::npos) {
        return {parse_real(trim(text.substr(0, comma)), whole), parse_real(trim(text.substr(comma + 1)), whole)};
    }
    if (!text.empty() && (text.back() == 'i' || text.back() == 'j')) {
        text.remove_suffix(1);
        // Split at the last sign that is not an exponent sign.
        std::size_t split = std::string_view::npos;
        for (std::size_t k = text.size(); k-- > 1;) {
            if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string_view::npos) {
            if (text.empty() || text == "+") return {0.0, 1.0};
            if (text == "-") return {0.0, -1.0};
            return {0.0, parse_real(text, whole)};
        }
        std::string_view im = text.substr(split);
        const double re = parse_real(text.substr(0, split), whole);
        if (im == "+") return {re, 1.0};
        if (im == "-") return {re, -1.0};
        return {re, parse_real(im, whole)};
    }
    return {parse_real(text, whole), 0.0};
}

std::string format_real(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x == 0.0 ? 0.0 : x);
    return buf;
}

std::string format_complex(Complex z) {
    return format_real(z.real(), 17) + "," + format_real(z.imag(), 17);
}

std::string format_complex_human(Complex z) {
    const double re = z.real(), im = z.imag();
    if (std::abs(im) <= 1e-15 * std::max(1.0, std::abs(re))) return format_real(re, 6);
    return format_real(re, 6) + (im < 0 ? "-" : "+") + format_real(std::abs(im), 6) + "i";
}

nlohmann::json to_json(const OracleReport& r) {
    return nlohmann::json{{"quantity", r.quantity},       {"closed_form", r.closed_form},
                          {"oracle_value", r.oracle_value}, {"abs_gap", r.abs_gap},
                          {"tolerance", r.tolerance},     {"samples", r.samples},
                          {"seed", r.seed},               {"pass", r.pass},
                          {"details", r.details}};
}

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& x : r.reports) reports.push_back(to_json(x));
    return nlohmann::json{{"profile", r.profile}, {"seed", r.seed}, {"pass", r.pass}, {"reports", reports}};
}

}  // namespace neile
