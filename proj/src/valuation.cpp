#include "treasury/valuation.hpp"

#include <algorithm>
#include <cmath>

#include "treasury/errors.hpp"

namespace treasury::valuation {

namespace {
constexpr double kComponentTolerance = 0.01; // cent-level rounding slack
}

void BalanceSheetSnapshot::validate() const {
    for (double f : {current_assets, current_liabilities, receivables, inventory, cash, payables})
        if (f < 0.0) throw input_error("balance sheet fields must be non-negative");
    const double components = receivables + inventory + cash;
    // Components are optional; once any is given the asset side must reconcile.
    if (components > 0.0 && std::abs(current_assets - components) > kComponentTolerance)
        throw input_error("current assets do not match receivables + inventory + cash");
}

void PeriodFinancials::validate() const {
    if (tax_rate < 0.0 || tax_rate > 1.0) throw input_error("tax rate must be in [0,1]");
    if (non_cash_expenses < 0.0) throw input_error("non-cash expenses must be non-negative");
}

ValuationContext ValuationContext::finite(double rate, int periods) {
    ValuationContext ctx;
    ctx.discount_rate = rate;
    ctx.horizon = periods;
    ctx.validate();
    return ctx;
}

ValuationContext ValuationContext::perpetuity(double rate) {
    ValuationContext ctx;
    ctx.discount_rate = rate;
    ctx.validate();
    return ctx;
}

void ValuationContext::validate() const {
    if (discount_rate <= 0.0) throw domain_error("discount rate must be positive");
    if (horizon && *horizon < 1) throw input_error("finite horizon must be at least one period");
}

double net_working_capital(const BalanceSheetSnapshot& b) {
    b.validate();
    return b.current_assets - b.current_liabilities;
}

double fcff(const PeriodFinancials& p) {
    p.validate();
    const double operating = p.cash_revenue - p.fixed_costs - p.variable_costs - p.non_cash_expenses;
    return operating * (1.0 - p.tax_rate) + p.non_cash_expenses - p.nwc_growth - p.capex;
}

double delta_value(std::span<const double> deltas, const ValuationContext& ctx) {
    ctx.validate();
    if (ctx.is_perpetuity()) {
        if (deltas.empty() || deltas.size() > 2)
            throw input_error("perpetuity takes a level delta plus an optional time-zero delta");
        const double time_zero = deltas.size() == 2 ? deltas[0] : 0.0;
        const double level = deltas.back();
        return time_zero + level / ctx.discount_rate;
    }
    if (deltas.empty()) throw input_error("finite horizon needs one delta per period");
    if (static_cast<int>(deltas.size()) != *ctx.horizon)
        throw input_error("delta count does not match the horizon");
    double value = 0.0;
    double factor = 1.0;
    for (double d : deltas) {
        factor /= 1.0 + ctx.discount_rate;
        value += d * factor;
    }
    return value;
}

std::vector<RankedStrategy> compare_strategies(std::span<const StrategyVariant> variants) {
    if (variants.size() < 2) throw input_error("need at least two variants to compare");
    const auto horizon = variants.front().periods.size();
    if (horizon == 0) throw input_error("variants need at least one period");
    for (const auto& v : variants)
        if (v.periods.size() != horizon)
            throw input_error("variant horizons are misaligned");

    struct Row {
        std::string label;
        double dv;
        double rate;
    };
    std::vector<Row> rows;
    rows.reserve(variants.size());
    for (const auto& v : variants) {
        std::vector<double> flows;
        flows.reserve(v.periods.size());
        for (const auto& p : v.periods) flows.push_back(fcff(p));
        const double dv = delta_value(
            flows, ValuationContext::finite(v.discount_rate, static_cast<int>(horizon)));
        rows.push_back({v.label, dv, v.discount_rate});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.dv != b.dv) return a.dv > b.dv;
        if (a.rate != b.rate) return a.rate < b.rate;
        return a.label < b.label;
    });
    std::vector<RankedStrategy> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back({std::move(r.label), r.dv});
    return out;
}

} // namespace treasury::valuation
