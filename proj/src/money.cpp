#include "treasury/money.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "treasury/errors.hpp"

namespace treasury {

double round_cents(double v) {
    return std::round(v * 100.0) / 100.0;
}

std::string format_money(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
    // trim ASCII whitespace
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw input_error("empty number");
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw input_error("bad number: '" + std::string(text) + "'");
    return v;
}

} // namespace treasury
