#pragma once

namespace treasury::speculative {

struct SpeculativeInputs {
    double units = 0.0;              // purchasable quantity of the asset
    double price = 0.0;              // current price, equal to the long-run value
    double daily_price_stddev = 0.0; // fraction of price, e.g. 0.04
    double up_probability = 0.5;
    double annual_rate = 0.0;
    int day_count = 360;

    void validate() const;
};

struct SpeculativeVerdict {
    double expected_benefit = 0.0; // per day
    double daily_cost = 0.0;       // per day
    bool hold = false;             // expected_benefit > daily_cost
};

/// One-day value of staying liquid: a down move lets the firm buy below the
/// long-run value (payoff discounted one day), an up move is declined and
/// pays nothing. Returns the probability-weighted sum.
double expected_benefit(const SpeculativeInputs& in);

/// Opportunity cost of the cash tied up for one day.
double daily_capital_cost(double units, double price, double annual_rate,
                          int day_count);

SpeculativeVerdict speculative_verdict(const SpeculativeInputs& in);

} // namespace treasury::speculative
