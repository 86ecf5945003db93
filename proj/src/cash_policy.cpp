#include "treasury/cash_policy.hpp"

#include <cmath>

#include "treasury/errors.hpp"

namespace treasury::cash_policy {

void BaumolParams::validate() const {
    if (period_demand <= 0.0) throw input_error("period demand must be positive");
    if (transfer_cost <= 0.0) throw input_error("transfer cost must be positive");
    if (rate <= 0.0) throw input_error("rate must be positive");
}

BaumolResult baumol_optimal(const BaumolParams& p) {
    p.validate();
    const double c_star = std::sqrt(2.0 * p.transfer_cost * p.period_demand / p.rate);
    return {c_star, p.period_demand / c_star, c_star / 2.0};
}

BaumolResult beranek_optimal(const BaumolParams& p) {
    // Same trade-off with the roles mirrored: inflows pile up and each sweep
    // into securities costs transfer_cost, so the optimal lot size is the same.
    return baumol_optimal(p);
}

PolicyAction baumol_step(double balance, double daily_outflow, double c_star) {
    if (c_star <= 0.0) throw input_error("c_star must be positive");
    const double post = balance - daily_outflow;
    if (post <= 0.0)
        return {ActionKind::transfer_to_cash, c_star, post + c_star};
    return {ActionKind::none, 0.0, post};
}

PolicyAction beranek_step(double balance, double daily_inflow, double c_star) {
    if (c_star <= 0.0) throw input_error("c_star must be positive");
    const double post = balance + daily_inflow;
    if (post >= c_star)
        return {ActionKind::transfer_from_cash, post, 0.0};
    return {ActionKind::none, 0.0, post};
}

void MillerOrrParams::validate() const {
    if (lower_limit < 0.0) throw input_error("lower limit must be non-negative");
    if (transfer_cost <= 0.0) throw input_error("transfer cost must be positive");
    if (daily_rate <= 0.0) throw input_error("daily rate must be positive");
    if (daily_variance < 0.0) throw input_error("daily variance must be non-negative");
}

MillerOrrLevels miller_orr_levels(const MillerOrrParams& p) {
    p.validate();
    const double spread =
        std::cbrt(3.0 * p.transfer_cost * p.daily_variance / (4.0 * p.daily_rate));
    if (spread == 0.0) return {p.lower_limit, p.lower_limit}; // zero variance collapses the band
    const double target = p.lower_limit + spread;
    return {target, 3.0 * target - 2.0 * p.lower_limit};
}

PolicyAction miller_orr_step(double balance, const MillerOrrLevels& levels,
                             double lower_limit) {
    if (!(lower_limit <= levels.target && levels.target <= levels.upper))
        throw input_error("levels must satisfy lower <= target <= upper");
    if (balance >= levels.upper) {
        const double amount = balance - levels.target;
        if (amount == 0.0) return {ActionKind::none, 0.0, balance};
        return {ActionKind::transfer_from_cash, amount, levels.target};
    }
    if (balance <= lower_limit) {
        const double amount = levels.target - balance;
        if (amount == 0.0) return {ActionKind::none, 0.0, balance};
        return {ActionKind::transfer_to_cash, amount, levels.target};
    }
    return {ActionKind::none, 0.0, balance};
}

void StoneParams::validate() const {
    miller_orr.validate();
    const double target = miller_orr_levels(miller_orr).target;
    if (!(outer_lower <= inner_lower && inner_lower <= target && target <= inner_upper &&
          inner_upper <= outer_upper))
        throw input_error("stone limits must nest: H0 <= inner_lower <= target <= inner_upper <= H1");
    if (lookahead_days < 0) throw input_error("lookahead must be non-negative");
}

StoneParams stone_defaults(const MillerOrrParams& p, double inner_fraction,
                           int lookahead_days) {
    if (inner_fraction < 0.0 || inner_fraction > 1.0)
        throw input_error("inner fraction must be in [0,1]");
    const auto levels = miller_orr_levels(p);
    StoneParams s;
    s.miller_orr = p;
    s.outer_lower = p.lower_limit;
    s.outer_upper = levels.upper;
    s.inner_lower = levels.target - inner_fraction * (levels.target - p.lower_limit);
    s.inner_upper = levels.target + inner_fraction * (levels.upper - levels.target);
    s.lookahead_days = lookahead_days;
    s.validate();
    return s;
}

PolicyAction stone_step(double balance, const StoneParams& p,
                        std::span<const double> forecast) {
    p.validate();
    if (static_cast<int>(forecast.size()) < p.lookahead_days)
        throw input_error("forecast shorter than the lookahead window");
    if (balance > p.outer_lower && balance < p.outer_upper)
        return {ActionKind::none, 0.0, balance};

    // Outer limit touched: project the balance to the end of the window.
    double projected = balance;
    for (int i = 0; i < p.lookahead_days; ++i) projected += forecast[i];
    if (projected > p.inner_upper || projected < p.inner_lower) {
        const double target = miller_orr_levels(p.miller_orr).target;
        if (balance > target)
            return {ActionKind::transfer_from_cash, balance - target, target};
        if (balance < target)
            return {ActionKind::transfer_to_cash, target - balance, target};
    }
    return {ActionKind::none, 0.0, balance}; // expected to drift back on its own
}

} // namespace treasury::cash_policy
