#include "treasury/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "treasury/errors.hpp"

namespace treasury::simulator {

void CashFlowStream::validate() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].net_flow))
            throw input_error("stream flows must be finite");
        if (i > 0 && points[i].day <= points[i - 1].day)
            throw input_error("stream day indices must be strictly increasing");
    }
}

void SimulationConfig::validate() const {
    if (holding_rate < 0.0) throw input_error("holding rate must be non-negative");
    if (transfer_cost < 0.0) throw input_error("transfer cost must be non-negative");
    if (shortage_cost < 0.0) throw input_error("shortage cost must be non-negative");
    if (shortage_rate < 0.0) throw input_error("shortage rate must be non-negative");
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BaumolPolicy> || std::is_same_v<T, BeranekPolicy>) {
                if (p.c_star <= 0.0) throw input_error("c_star must be positive");
            } else if constexpr (std::is_same_v<T, MillerOrrPolicy>) {
                p.params.validate();
            } else {
                p.params.validate();
                if (p.forecast == StoneForecastMode::provided && p.provided_forecast.empty())
                    throw input_error("stone policy needs a forecast source");
            }
        },
        policy);
}

namespace {

// Lookahead flows for the stone policy on day index i. Pads with zero past
// the end of whatever source it reads from.
std::vector<double> stone_forecast(const CashFlowStream& stream, const StonePolicy& p,
                                   std::size_t i) {
    const auto n = static_cast<std::size_t>(p.params.lookahead_days);
    std::vector<double> fc(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = i + 1 + j;
        if (p.forecast == StoneForecastMode::true_flows) {
            if (k < stream.points.size()) fc[j] = stream.points[k].net_flow;
        } else {
            if (k < p.provided_forecast.size()) fc[j] = p.provided_forecast[k];
        }
    }
    return fc;
}

} // namespace

SimulationReport simulate(const CashFlowStream& stream, const SimulationConfig& cfg) {
    stream.validate();
    if (stream.points.empty()) throw input_error("stream is empty");
    cfg.validate();
    if (const auto* st = std::get_if<StonePolicy>(&cfg.policy);
        st && st->forecast == StoneForecastMode::provided &&
        st->provided_forecast.size() < stream.points.size())
        throw input_error("provided forecast shorter than the stream");

    cash_policy::MillerOrrLevels mo_levels{};
    double mo_lower = 0.0;
    if (const auto* mo = std::get_if<MillerOrrPolicy>(&cfg.policy)) {
        mo_levels = cash_policy::miller_orr_levels(mo->params);
        mo_lower = mo->params.lower_limit;
    }

    SimulationReport report;
    report.label = cfg.label;
    report.balances.reserve(stream.points.size());
    const double floor = std::max(0.0, cfg.lcl_floor.value_or(0.0));

    double balance = cfg.opening_balance;
    for (std::size_t i = 0; i < stream.points.size(); ++i) {
        const auto& pt = stream.points[i];
        cash_policy::PolicyAction act{};
        if (const auto* b = std::get_if<BaumolPolicy>(&cfg.policy)) {
            act = pt.net_flow < 0.0
                      ? cash_policy::baumol_step(balance, -pt.net_flow, b->c_star)
                      : cash_policy::PolicyAction{cash_policy::ActionKind::none, 0.0,
                                                  balance + pt.net_flow};
        } else if (const auto* b = std::get_if<BeranekPolicy>(&cfg.policy)) {
            act = pt.net_flow > 0.0
                      ? cash_policy::beranek_step(balance, pt.net_flow, b->c_star)
                      : cash_policy::PolicyAction{cash_policy::ActionKind::none, 0.0,
                                                  balance + pt.net_flow};
        } else if (std::holds_alternative<MillerOrrPolicy>(cfg.policy)) {
            act = cash_policy::miller_orr_step(balance + pt.net_flow, mo_levels, mo_lower);
        } else {
            const auto& st = std::get<StonePolicy>(cfg.policy);
            const auto fc = stone_forecast(stream, st, i);
            act = cash_policy::stone_step(balance + pt.net_flow, st.params, fc);
        }

        balance = act.resulting_balance;
        if (act.kind != cash_policy::ActionKind::none) {
            report.actions.push_back({pt.day, act.kind, act.amount, balance});
            report.costs.transfer += cfg.transfer_cost;
        }
        if (balance > 0.0) report.costs.holding += cfg.holding_rate * balance;
        if (balance < floor) {
            ++report.days_below_floor;
            report.costs.shortage += cfg.shortage_cost + cfg.shortage_rate * (floor - balance);
        }
        report.balances.push_back(balance);
    }
    report.costs.total = report.costs.holding + report.costs.transfer + report.costs.shortage;
    report.transfer_count = static_cast<int>(report.actions.size());
    return report;
}

namespace {

// Uniform in (0,1] from the top 53 bits; no library distributions so the
// sequence is identical everywhere for a given seed.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Box-Muller, cosine branch only.
double next_normal(std::mt19937_64& rng) {
    const double u1 = next_uniform(rng);
    const double u2 = next_uniform(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

StreamKind parse_stream_kind(const std::string& name) {
    if (name == "constant_out") return StreamKind::constant_out;
    if (name == "constant_in") return StreamKind::constant_in;
    if (name == "seasonal") return StreamKind::seasonal;
    if (name == "gaussian") return StreamKind::gaussian;
    if (name == "mean_reverting") return StreamKind::mean_reverting;
    throw input_error("unknown stream kind: '" + name + "'");
}

std::string stream_kind_name(StreamKind k) {
    switch (k) {
        case StreamKind::constant_out: return "constant_out";
        case StreamKind::constant_in: return "constant_in";
        case StreamKind::seasonal: return "seasonal";
        case StreamKind::gaussian: return "gaussian";
        case StreamKind::mean_reverting: return "mean_reverting";
    }
    return "unknown";
}

CashFlowStream generate_stream(StreamKind kind, const StreamParams& params,
                               std::uint64_t seed, int days) {
    if (days < 1) throw input_error("days must be at least 1");
    if (params.stddev < 0.0) throw input_error("stddev must be non-negative");
    if (params.amount < 0.0) throw input_error("amount must be non-negative");
    if (params.period_days < 1) throw input_error("period_days must be at least 1");
    if (params.reversion < 0.0 || params.reversion > 1.0)
        throw input_error("reversion must be in [0,1]");

    CashFlowStream s;
    s.source = stream_kind_name(kind) + " seed=" + std::to_string(seed);
    s.points.reserve(days);
    std::mt19937_64 rng(seed);
    double level = params.anchor; // mean_reverting cumulative level
    for (int d = 0; d < days; ++d) {
        double flow = 0.0;
        switch (kind) {
            case StreamKind::constant_out:
                flow = -params.amount;
                break;
            case StreamKind::constant_in:
                flow = params.amount;
                break;
            case StreamKind::seasonal:
                flow = (d % params.period_days == 0 ? params.monthly_inflow : 0.0) -
                       params.daily_outflow;
                break;
            case StreamKind::gaussian:
                flow = params.mean + params.stddev * next_normal(rng);
                break;
            case StreamKind::mean_reverting:
                flow = params.reversion * (params.anchor - level) +
                       params.stddev * next_normal(rng);
                level += flow;
                break;
        }
        s.points.push_back({d, flow});
    }
    return s;
}

Forecastability parse_forecastability(const std::string& name) {
    if (name == "full") return Forecastability::full;
    if (name == "short_horizon") return Forecastability::short_horizon;
    if (name == "none") return Forecastability::none;
    throw input_error("unknown forecastability: '" + name + "' (full|short_horizon|none)");
}

std::string model_name(ModelKind m) {
    switch (m) {
        case ModelKind::baumol: return "baumol";
        case ModelKind::beranek: return "beranek";
        case ModelKind::miller_orr: return "miller_orr";
        case ModelKind::stone: return "stone";
    }
    return "unknown";
}

ModelAdvice advise_model(const CashFlowStream& stream, Forecastability f) {
    stream.validate();
    if (stream.points.empty()) throw input_error("stream is empty");
    switch (f) {
        case Forecastability::short_horizon:
            return {ModelKind::stone,
                    "flows are only forecastable a few days ahead: check outer-limit "
                    "touches against the short forecast before transferring"};
        case Forecastability::none:
            return {ModelKind::miller_orr,
                    "flows are unpredictable: react only at the control-band limits "
                    "and restore the target balance"};
        case Forecastability::full:
            break;
    }
    double total = 0.0;
    for (const auto& p : stream.points) total += p.net_flow;
    if (total < 0.0)
        return {ModelKind::baumol,
                "flows are predictable and outflows dominate: refill cash from "
                "securities in optimally sized lots"};
    if (total > 0.0)
        return {ModelKind::beranek,
                "flows are predictable and inflows dominate: sweep surpluses into "
                "securities in optimally sized lots"};
    return {ModelKind::miller_orr,
            "flows are predictable but neither direction dominates, so neither "
            "one-sided model applies: fall back to the control band"};
}

std::vector<SimulationReport> compare_policies(const CashFlowStream& stream,
                                               std::span<const SimulationConfig> configs) {
    if (configs.size() < 2) throw input_error("need at least two configs to compare");
    std::vector<SimulationReport> reports;
    reports.reserve(configs.size());
    for (const auto& cfg : configs) reports.push_back(simulate(stream, cfg));
    std::stable_sort(reports.begin(), reports.end(),
                     [](const SimulationReport& a, const SimulationReport& b) {
                         if (a.costs.total != b.costs.total)
                             return a.costs.total < b.costs.total;
                         return a.transfer_count < b.transfer_count;
                     });
    return reports;
}

} // namespace treasury::simulator
