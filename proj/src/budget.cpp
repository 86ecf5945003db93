#include "treasury/budget.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "treasury/errors.hpp"

namespace treasury::budget {

Granularity parse_granularity(const std::string& name) {
    if (name == "week") return Granularity::week;
    if (name == "biweek") return Granularity::biweek;
    if (name == "month") return Granularity::month;
    throw input_error("unknown granularity: '" + name + "' (week|biweek|month)");
}

std::string granularity_name(Granularity g) {
    switch (g) {
        case Granularity::week: return "week";
        case Granularity::biweek: return "biweek";
        case Granularity::month: return "month";
    }
    return "month";
}

void BudgetAssumptions::validate() const {
    if (sales.empty()) throw input_error("budget needs at least one period");
    if (!period_labels.empty() && period_labels.size() != sales.size())
        throw input_error("period labels do not match the horizon");
    if (!purchases.empty() && purchases.size() != sales.size())
        throw input_error("purchase schedule does not match the horizon");
    for (double s : sales)
        if (s < 0.0 || !std::isfinite(s)) throw input_error("sales must be finite and non-negative");
    for (double p : purchases)
        if (p < 0.0 || !std::isfinite(p)) throw input_error("purchases must be finite and non-negative");
    for (double s : prior_sales)
        if (s < 0.0 || !std::isfinite(s)) throw input_error("prior sales must be finite and non-negative");
    double mass = 0.0;
    for (double f : collection_profile) {
        if (f < 0.0 || f > 1.0) throw input_error("collection fractions must be in [0,1]");
        mass += f;
    }
    if (mass > 1.0 + 1e-9) throw input_error("collection profile must sum to at most 1");
    for (const auto& o : obligations) {
        if (o.amount < 0.0) throw input_error("obligation amounts must be non-negative");
        if (o.due_period < 0 || o.due_period >= horizon())
            throw input_error("obligation due period outside the horizon");
    }
}

namespace {

std::string default_label(Granularity g, int index) {
    switch (g) {
        case Granularity::week: return "w" + std::to_string(index + 1);
        case Granularity::biweek: return "b" + std::to_string(index + 1);
        case Granularity::month: return "m" + std::to_string(index + 1);
    }
    return "p" + std::to_string(index + 1);
}

} // namespace

CashBudget build_budget(const BudgetAssumptions& a) {
    a.validate();
    const int n = a.horizon();
    const int lags = static_cast<int>(a.collection_profile.size());
    const double profile_mass =
        std::accumulate(a.collection_profile.begin(), a.collection_profile.end(), 0.0);
    const double bad_debt_share = std::max(0.0, 1.0 - profile_mass);

    CashBudget b;
    b.granularity = a.granularity;
    b.opening_balance = a.opening_balance;
    b.periods.reserve(n);

    double balance = a.opening_balance;
    for (int t = 0; t < n; ++t) {
        double inflow = 0.0;
        for (int lag = 0; lag < lags; ++lag) {
            const int src = t - lag;
            if (src >= 0) {
                inflow += a.collection_profile[lag] * a.sales[src];
            } else {
                // Collections still arriving from sales booked before the
                // horizon; the carried tail keeps roll conservation honest.
                const int j = static_cast<int>(a.prior_sales.size()) + src;
                if (j < 0) continue;
                const double tail = a.collection_profile[lag] * a.prior_sales[j];
                inflow += tail;
                b.carried_tail_inflows += tail;
            }
        }
        double outflow = a.purchases.empty() ? 0.0 : a.purchases[t];
        for (const auto& o : a.obligations)
            if (o.due_period == t) outflow += o.amount;

        BudgetPeriod p;
        p.label = a.period_labels.empty() ? default_label(a.granularity, t) : a.period_labels[t];
        p.inflows = inflow;
        p.outflows = outflow;
        p.net_flow = inflow - outflow;
        balance += p.net_flow;
        p.closing_balance = balance;
        p.bad_debt = a.sales[t] * bad_debt_share;
        b.periods.push_back(std::move(p));
    }
    return b;
}

RollResult roll_budget(const CashBudget& current, const BudgetAssumptions& a,
                       const PeriodSlice& next) {
    a.validate();
    if (static_cast<int>(current.periods.size()) != a.horizon())
        throw input_error("budget and assumptions horizons differ");
    if (next.purchases < 0.0 || next.sales < 0.0)
        throw input_error("slice figures must be non-negative");

    BudgetAssumptions r = a;
    // The dropped period is history now: its net flow settles into the
    // opening balance and its sales feed later collections via prior_sales.
    r.opening_balance = a.opening_balance + current.periods.front().net_flow;
    r.prior_sales.push_back(a.sales.front());
    const int keep = std::max(0, static_cast<int>(a.collection_profile.size()) - 1);
    if (static_cast<int>(r.prior_sales.size()) > keep)
        r.prior_sales.erase(r.prior_sales.begin(),
                            r.prior_sales.end() - keep);

    r.sales.erase(r.sales.begin());
    r.sales.push_back(next.sales);
    if (!r.purchases.empty()) {
        r.purchases.erase(r.purchases.begin());
        r.purchases.push_back(next.purchases);
    } else if (next.purchases != 0.0) {
        r.purchases.assign(r.sales.size(), 0.0);
        r.purchases.back() = next.purchases;
    }
    if (!r.period_labels.empty()) {
        r.period_labels.erase(r.period_labels.begin());
        r.period_labels.push_back(next.label);
    }

    std::vector<FixedObligation> shifted;
    shifted.reserve(a.obligations.size() + next.obligations.size());
    for (const auto& o : a.obligations)
        if (o.due_period >= 1) shifted.push_back({o.label, o.amount, o.due_period - 1});
    for (const auto& o : next.obligations)
        shifted.push_back({o.label, o.amount, a.horizon() - 1});
    r.obligations = std::move(shifted);

    RollResult result;
    result.budget = build_budget(r);
    result.assumptions = std::move(r);
    return result;
}

} // namespace treasury::budget
