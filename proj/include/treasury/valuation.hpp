#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treasury::valuation {

/// Balance-sheet extract for net working capital. Component fields may be
/// left at zero when only the aggregates are known; when any component is
/// supplied, the asset side must add up to current_assets within a cent.
struct BalanceSheetSnapshot {
    double current_assets = 0.0;
    double current_liabilities = 0.0;
    double receivables = 0.0;
    double inventory = 0.0;
    double cash = 0.0;
    double payables = 0.0;

    void validate() const;
};

/// One period's operating figures for free cash flow to firm.
struct PeriodFinancials {
    double cash_revenue = 0.0;
    double fixed_costs = 0.0;
    double variable_costs = 0.0;
    double non_cash_expenses = 0.0;
    double tax_rate = 0.0; // effective rate in [0,1]
    double nwc_growth = 0.0;
    double capex = 0.0;

    void validate() const;
};

/// Discounting context: a per-period rate plus either a finite period count
/// or a perpetuity.
struct ValuationContext {
    double discount_rate = 0.0;
    std::optional<int> horizon; // nullopt = perpetuity

    static ValuationContext finite(double rate, int periods);
    static ValuationContext perpetuity(double rate);

    bool is_perpetuity() const { return !horizon.has_value(); }
    void validate() const;
};

/// A working-capital stance: its per-period figures and its own cost of
/// capital (riskier stances carry a higher rate).
struct StrategyVariant {
    std::string label;
    std::vector<PeriodFinancials> periods;
    double discount_rate = 0.0;
};

struct RankedStrategy {
    std::string label;
    double delta_value = 0.0;
};

double net_working_capital(const BalanceSheetSnapshot& b);

double fcff(const PeriodFinancials& p);

/// Discounted sum of cash-flow deltas.
/// Finite horizon: exactly one delta per period t = 1..n.
/// Perpetuity: {level} or {time_zero, level}; returns time_zero + level/rate.
/// Tax scaling of perpetuity levels is the caller's business; this is a pure
/// discounter.
double delta_value(std::span<const double> deltas, const ValuationContext& ctx);

/// Ranks variants by their discounted FCFF sum, best first. Ties break toward
/// the lower discount rate, then the lexicographically smaller label.
std::vector<RankedStrategy> compare_strategies(std::span<const StrategyVariant> variants);

} // namespace treasury::valuation
