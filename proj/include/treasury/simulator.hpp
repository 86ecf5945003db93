#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "treasury/cash_policy.hpp"

namespace treasury::simulator {

struct FlowPoint {
    int day = 0;
    double net_flow = 0.0;
};

struct CashFlowStream {
    std::vector<FlowPoint> points; // day indices strictly increasing
    std::string source;

    void validate() const;
};

struct BaumolPolicy {
    double c_star = 0.0;
};

struct BeranekPolicy {
    double c_star = 0.0;
};

struct MillerOrrPolicy {
    cash_policy::MillerOrrParams params;
};

enum class StoneForecastMode { true_flows, provided };

struct StonePolicy {
    cash_policy::StoneParams params;
    StoneForecastMode forecast = StoneForecastMode::true_flows;
    std::vector<double> provided_forecast; // one per stream point when provided
};

using PolicySpec =
    std::variant<BaumolPolicy, BeranekPolicy, MillerOrrPolicy, StonePolicy>;

struct SimulationConfig {
    std::string label = "policy";
    PolicySpec policy;
    double opening_balance = 0.0;
    double holding_rate = 0.0;  // per day, accrued on positive end-of-day balances
    double transfer_cost = 0.0; // per action
    double shortage_cost = 0.0; // flat per day spent below the floor
    double shortage_rate = 0.0; // optional extra per unit of shortfall
    std::optional<double> lcl_floor; // precautionary floor; shortage applies below max(0, floor)

    void validate() const;
};

struct ActionRecord {
    int day = 0;
    cash_policy::ActionKind kind = cash_policy::ActionKind::none;
    double amount = 0.0;
    double balance_after = 0.0;
};

struct CostBreakdown {
    double holding = 0.0;
    double transfer = 0.0;
    double shortage = 0.0;
    double total = 0.0;
};

struct SimulationReport {
    std::string label;
    std::vector<double> balances; // end of day, one per stream point
    std::vector<ActionRecord> actions;
    CostBreakdown costs;
    int transfer_count = 0;
    int days_below_floor = 0;
};

/// Replays the stream one day at a time: flow first, then the policy step,
/// then cost accrual. Deterministic for identical inputs.
SimulationReport simulate(const CashFlowStream& stream, const SimulationConfig& cfg);

enum class StreamKind { constant_out, constant_in, seasonal, gaussian, mean_reverting };

StreamKind parse_stream_kind(const std::string& name);
std::string stream_kind_name(StreamKind k);

struct StreamParams {
    double amount = 0.0;         // constant kinds: per-day magnitude
    double mean = 0.0;           // gaussian: flow mean
    double stddev = 0.0;         // gaussian / mean_reverting: innovation stddev
    double monthly_inflow = 0.0; // seasonal: lump arriving each cycle
    double daily_outflow = 0.0;  // seasonal: daily drain
    int period_days = 30;        // seasonal: cycle length
    double anchor = 0.0;         // mean_reverting: level the cumulative sum reverts to
    double reversion = 0.2;      // mean_reverting: pull per day, in [0,1]
};

/// Synthetic daily net-flow streams. Seeded with mt19937_64 and a fixed
/// Box-Muller transform (no library distributions), so a given
/// (kind, params, seed) reproduces the same stream on any platform.
CashFlowStream generate_stream(StreamKind kind, const StreamParams& params,
                               std::uint64_t seed, int days);

enum class Forecastability { full, short_horizon, none };
enum class ModelKind { baumol, beranek, miller_orr, stone };

Forecastability parse_forecastability(const std::string& name);
std::string model_name(ModelKind m);

struct ModelAdvice {
    ModelKind model;
    std::string rationale;
};

/// Picks the cash model matching how far ahead flows can be forecast and
/// which direction dominates.
ModelAdvice advise_model(const CashFlowStream& stream, Forecastability f);

/// Runs every config over the stream; cheapest total cost first, ties broken
/// by fewer transfers.
std::vector<SimulationReport> compare_policies(const CashFlowStream& stream,
                                               std::span<const SimulationConfig> configs);

} // namespace treasury::simulator
