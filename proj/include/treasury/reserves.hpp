#pragma once

namespace treasury::reserves {

constexpr int kDefaultDayCount = 360;

/// Inventory buffer sizing inputs.
struct SafetyStockInputs {
    double holding_cost_rate = 0.0; // fraction of unit value per period
    double order_quantity = 0.0;    // units per order
    double unit_price = 0.0;        // money per unit
    double demand = 0.0;            // units per period
    double usage_stddev = 0.0;      // units
    double stockout_cost = 0.0;     // money per shortage

    void validate() const;
};

/// Precautionary cash sizing inputs. The capital rate is per day; the flow
/// sum covers whatever reporting period the caller uses. The two bases are
/// taken as given and not reconciled here.
struct LclInputs {
    double capital_rate_per_day = 0.0;
    double avg_transfer = 0.0;        // typical size of one cash transfer
    double flow_sum = 0.0;            // sum of all inflows and outflows in the period
    double daily_flow_stddev = 0.0;
    double cash_shortage_cost = 0.0;

    void validate() const;
};

/// A reserve level plus a flag for the degenerate parameter region where the
/// log argument reaches 1: volatility and shortage costs are then too small
/// to justify holding anything, and the level is reported as 0.
struct ReserveLevel {
    double value = 0.0;
    bool degenerate = false;
};

ReserveLevel safety_stock(const SafetyStockInputs& in);

/// Low cash level: the precautionary floor implied by daily flow volatility.
/// Zero volatility yields a zero reserve.
ReserveLevel lcl(const LclInputs& in);

/// Annual rate under a day-count convention, 360 by default.
double daily_rate(double annual_rate, int day_count = kDefaultDayCount);

struct ValueImpact {
    double nwc_growth = 0.0;     // change in tied-up working capital
    double yearly_alt_cost = 0.0; // nwc_growth x annual rate
    double value_change = 0.0;   // perpetuity-discounted effect on firm value
};

/// Chains a precautionary-level move into working-capital growth, the yearly
/// opportunity cost of the tied-up funds, and the perpetuity value change
/// (time-zero outlay plus the discounted after-tax cost stream).
ValueImpact lcl_value_impact(double lcl_new, double lcl_old,
                             double annual_rate, double tax_rate);

} // namespace treasury::reserves
