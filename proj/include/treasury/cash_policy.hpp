#pragma once

#include <span>

namespace treasury::cash_policy {

/// Inputs shared by the one-sided transfer-sizing models.
struct BaumolParams {
    double period_demand = 0.0; // total cash moved over the planning period
    double transfer_cost = 0.0; // fixed cost per securities transaction
    double rate = 0.0;          // opportunity rate for the same period

    void validate() const;
};

struct BaumolResult {
    double optimal_cash = 0.0;
    double transfers_per_period = 0.0; // real-valued; ceil only in reports
    double avg_balance = 0.0;
};

enum class ActionKind { none, transfer_to_cash, transfer_from_cash };

struct PolicyAction {
    ActionKind kind = ActionKind::none;
    double amount = 0.0;           // always >= 0; 0 iff kind == none
    double resulting_balance = 0.0; // end-of-day balance after flow and action
};

/// Optimal transfer size sqrt(2FP/k); each transfer is twice the average
/// balance it sustains, and P/C* transfers cover the period demand.
BaumolResult baumol_optimal(const BaumolParams& p);

/// Mirror image for inflow-dominated firms: cash accumulates and is swept
/// into securities in lots of the same optimal size.
BaumolResult beranek_optimal(const BaumolParams& p);

/// Refills to c_star just before the day's outflow would empty the account.
PolicyAction baumol_step(double balance, double daily_outflow, double c_star);

/// Sweeps the whole balance to securities once it accumulates to c_star.
PolicyAction beranek_step(double balance, double daily_inflow, double c_star);

struct MillerOrrParams {
    double lower_limit = 0.0;    // management-chosen floor, >= 0
    double transfer_cost = 0.0;
    double daily_rate = 0.0;
    // Variance of the daily net operating flows as they arrive, before any
    // policy action; estimate it from pre-action history. 0 collapses the band.
    double daily_variance = 0.0;

    void validate() const;
};

struct MillerOrrLevels {
    double target = 0.0;
    double upper = 0.0; // 3*target - 2*lower
};

MillerOrrLevels miller_orr_levels(const MillerOrrParams& p);

/// Restore-to-target when the balance touches either edge of the band.
PolicyAction miller_orr_step(double balance, const MillerOrrLevels& levels,
                             double lower_limit);

/// Two-band control: outer limits merely arm a decision, inner limits plus a
/// short forecast decide whether a transfer actually fires.
struct StoneParams {
    MillerOrrParams miller_orr;
    double outer_lower = 0.0; // H0
    double outer_upper = 0.0; // H1
    double inner_lower = 0.0;
    double inner_upper = 0.0;
    int lookahead_days = 5; // 0 means no lookahead: the projected level is the balance itself

    void validate() const;
};

/// Outer band on the control limits, inner band pulled toward the target by
/// inner_fraction of each half-width.
StoneParams stone_defaults(const MillerOrrParams& p, double inner_fraction = 0.8,
                           int lookahead_days = 5);

/// On an outer-limit touch, projects the balance lookahead_days ahead using
/// the forecast; transfers back to the target only if the projection still
/// sits beyond an inner limit. Each touch evaluates the forecast it is given,
/// so callers refresh the window every day.
PolicyAction stone_step(double balance, const StoneParams& p,
                        std::span<const double> forecast);

} // namespace treasury::cash_policy
