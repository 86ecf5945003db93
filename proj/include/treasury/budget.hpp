#pragma once

#include <string>
#include <vector>

namespace treasury::budget {

enum class Granularity { week, biweek, month };

Granularity parse_granularity(const std::string& name);
std::string granularity_name(Granularity g);

struct FixedObligation {
    std::string label; // tax, interest, ...
    double amount = 0.0;
    int due_period = 0; // 0-based index into the horizon
};

/// Everything a cash budget is built from. Collections are banded by lag in
/// periods: collection_profile[d] is the fraction of a period's sales
/// collected d periods later; any shortfall from 1 is bad debt.
struct BudgetAssumptions {
    Granularity granularity = Granularity::month;
    std::vector<std::string> period_labels; // optional; generated when empty
    std::vector<double> sales;
    std::vector<double> purchases;          // optional; zeros when empty
    std::vector<double> collection_profile; // fractions by lag, sum <= 1
    std::vector<FixedObligation> obligations;
    std::vector<double> prior_sales;        // pre-horizon sales, oldest first; feeds lag tails
    double opening_balance = 0.0;

    int horizon() const { return static_cast<int>(sales.size()); }
    void validate() const;
};

struct BudgetPeriod {
    std::string label;
    double inflows = 0.0;
    double outflows = 0.0;
    double net_flow = 0.0;
    double closing_balance = 0.0;
    double bad_debt = 0.0; // sales share the profile never collects
};

struct CashBudget {
    Granularity granularity = Granularity::month;
    double opening_balance = 0.0;
    double carried_tail_inflows = 0.0; // collections sourced from pre-horizon sales
    std::vector<BudgetPeriod> periods;
};

CashBudget build_budget(const BudgetAssumptions& a);

struct SliceObligation {
    std::string label;
    double amount = 0.0;
};

/// One new period appended when the budget rolls forward.
struct PeriodSlice {
    std::string label;
    double sales = 0.0;
    double purchases = 0.0;
    std::vector<SliceObligation> obligations;
};

struct RollResult {
    BudgetAssumptions assumptions; // shifted window, dropped-period tails carried
    CashBudget budget;
};

/// Drops the oldest period (its net flow settles into the opening balance and
/// its sales keep collecting through the carried tail), appends the slice and
/// rebuilds. The horizon length never changes.
RollResult roll_budget(const CashBudget& current, const BudgetAssumptions& a,
                       const PeriodSlice& next);

} // namespace treasury::budget
