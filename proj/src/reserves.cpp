#include "treasury/reserves.hpp"

#include <cmath>
#include <numbers>

#include "treasury/errors.hpp"
#include "treasury/valuation.hpp"

namespace treasury::reserves {

namespace {

// Shared core of the safety-stock and low-cash-level formulas. They differ
// only in what plays the rate, lot size and unit value; with unit_value = 1
// the two are bitwise identical.
ReserveLevel gaussian_reserve(double rate_like, double lot_size, double unit_value,
                              double flow_sum, double stddev, double shortage_cost) {
    if (stddev == 0.0) return {0.0, false};
    const double arg = rate_like * lot_size * stddev * unit_value *
                       std::sqrt(2.0 * std::numbers::pi) / (flow_sum * shortage_cost);
    if (arg >= 1.0) return {0.0, true}; // radicand would go non-positive
    return {std::sqrt(-2.0 * stddev * stddev * std::log(arg)), false};
}

} // namespace

void SafetyStockInputs::validate() const {
    if (holding_cost_rate <= 0.0) throw input_error("holding cost rate must be positive");
    if (order_quantity <= 0.0) throw input_error("order quantity must be positive");
    if (unit_price <= 0.0) throw input_error("unit price must be positive");
    if (demand <= 0.0) throw input_error("demand must be positive");
    if (usage_stddev < 0.0) throw input_error("usage stddev must be non-negative");
    if (stockout_cost <= 0.0) throw input_error("stockout cost must be positive");
}

void LclInputs::validate() const {
    if (capital_rate_per_day <= 0.0) throw input_error("capital rate must be positive");
    if (avg_transfer <= 0.0) throw input_error("average transfer must be positive");
    if (flow_sum <= 0.0) throw input_error("flow sum must be positive");
    if (daily_flow_stddev < 0.0) throw input_error("flow stddev must be non-negative");
    if (cash_shortage_cost <= 0.0) throw input_error("shortage cost must be positive");
}

ReserveLevel safety_stock(const SafetyStockInputs& in) {
    in.validate();
    return gaussian_reserve(in.holding_cost_rate, in.order_quantity, in.unit_price,
                            in.demand, in.usage_stddev, in.stockout_cost);
}

ReserveLevel lcl(const LclInputs& in) {
    in.validate();
    return gaussian_reserve(in.capital_rate_per_day, in.avg_transfer, 1.0,
                            in.flow_sum, in.daily_flow_stddev, in.cash_shortage_cost);
}

double daily_rate(double annual_rate, int day_count) {
    if (day_count <= 0) throw input_error("day count must be positive");
    return annual_rate / day_count;
}

ValueImpact lcl_value_impact(double lcl_new, double lcl_old, double annual_rate,
                             double tax_rate) {
    if (tax_rate < 0.0 || tax_rate > 1.0) throw input_error("tax rate must be in [0,1]");
    const double nwc_growth = lcl_new - lcl_old;
    const double yearly_alt_cost = nwc_growth * annual_rate;
    // Time-zero outlay of the tied-up funds, then the after-tax cost stream
    // discounted forever.
    const double deltas[2] = {-nwc_growth, -yearly_alt_cost * (1.0 - tax_rate)};
    const double value_change =
        valuation::delta_value(deltas, valuation::ValuationContext::perpetuity(annual_rate));
    return {nwc_growth, yearly_alt_cost, value_change};
}

} // namespace treasury::reserves
