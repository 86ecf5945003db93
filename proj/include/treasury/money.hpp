#pragma once

#include <string>
#include <string_view>

namespace treasury {

/// Rounds to the nearest cent. Internal math stays at full double precision;
/// only report boundaries round.
double round_cents(double v);

/// Fixed two decimals with a '.' decimal point regardless of locale.
std::string format_money(double v);

/// Shortest round-trip representation, locale independent.
std::string format_number(double v);

/// Locale-independent number parse. Throws input_error on junk or overflow.
double parse_number(std::string_view text);

} // namespace treasury
