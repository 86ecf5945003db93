#include "treasury/speculative.hpp"

#include "treasury/errors.hpp"

namespace treasury::speculative {

void SpeculativeInputs::validate() const {
    if (units <= 0.0) throw input_error("units must be positive");
    if (price <= 0.0) throw input_error("price must be positive");
    if (daily_price_stddev < 0.0) throw input_error("price stddev must be non-negative");
    if (up_probability < 0.0 || up_probability > 1.0)
        throw input_error("up probability must be in [0,1]");
    if (annual_rate < 0.0) throw input_error("annual rate must be non-negative");
    if (day_count <= 0) throw input_error("day count must be positive");
}

double expected_benefit(const SpeculativeInputs& in) {
    in.validate();
    // Down move: tomorrow's price sits one stddev below the long-run value,
    // so buying saves stddev x price per unit; realised tomorrow, discounted
    // one day. Up move: nothing is bought above the long-run value.
    const double one_day_discount = 1.0 + in.annual_rate / in.day_count;
    const double down_payoff =
        in.daily_price_stddev * in.price * in.units / one_day_discount;
    const double down_probability = 1.0 - in.up_probability;
    return down_payoff * down_probability;
}

double daily_capital_cost(double units, double price, double annual_rate,
                          int day_count) {
    if (units <= 0.0) throw input_error("units must be positive");
    if (price <= 0.0) throw input_error("price must be positive");
    if (annual_rate < 0.0) throw input_error("annual rate must be non-negative");
    if (day_count <= 0) throw input_error("day count must be positive");
    return (annual_rate / day_count) * units * price;
}

SpeculativeVerdict speculative_verdict(const SpeculativeInputs& in) {
    const double benefit = expected_benefit(in);
    const double cost = daily_capital_cost(in.units, in.price, in.annual_rate, in.day_count);
    return {benefit, cost, benefit > cost};
}

} // namespace treasury::speculative
