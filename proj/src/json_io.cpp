#include "treasury/json_io.hpp"

#include "treasury/errors.hpp"
#include "treasury/money.hpp"

using nlohmann::json;

namespace treasury::cash_policy {

void to_json(json& j, const BaumolParams& p) {
    j = json{{"period_demand", p.period_demand},
             {"transfer_cost", p.transfer_cost},
             {"rate", p.rate}};
}

void from_json(const json& j, BaumolParams& p) {
    j.at("period_demand").get_to(p.period_demand);
    j.at("transfer_cost").get_to(p.transfer_cost);
    j.at("rate").get_to(p.rate);
}

void to_json(json& j, const BaumolResult& r) {
    j = json{{"optimal_cash", round_cents(r.optimal_cash)},
             {"transfers_per_period", r.transfers_per_period},
             {"avg_balance", round_cents(r.avg_balance)}};
}

void from_json(const json& j, BaumolResult& r) {
    j.at("optimal_cash").get_to(r.optimal_cash);
    j.at("transfers_per_period").get_to(r.transfers_per_period);
    j.at("avg_balance").get_to(r.avg_balance);
}

void to_json(json& j, const MillerOrrParams& p) {
    j = json{{"lower_limit", p.lower_limit},
             {"transfer_cost", p.transfer_cost},
             {"daily_rate", p.daily_rate},
             {"daily_variance", p.daily_variance}};
}

void from_json(const json& j, MillerOrrParams& p) {
    j.at("lower_limit").get_to(p.lower_limit);
    j.at("transfer_cost").get_to(p.transfer_cost);
    j.at("daily_rate").get_to(p.daily_rate);
    j.at("daily_variance").get_to(p.daily_variance);
}

void to_json(json& j, const MillerOrrLevels& l) {
    j = json{{"target", round_cents(l.target)}, {"upper", round_cents(l.upper)}};
}

void from_json(const json& j, MillerOrrLevels& l) {
    j.at("target").get_to(l.target);
    j.at("upper").get_to(l.upper);
}

void to_json(json& j, const StoneParams& p) {
    j = json{{"miller_orr", p.miller_orr}, {"outer_lower", p.outer_lower},
             {"outer_upper", p.outer_upper}, {"inner_lower", p.inner_lower},
             {"inner_upper", p.inner_upper}, {"lookahead_days", p.lookahead_days}};
}

void from_json(const json& j, StoneParams& p) {
    j.at("miller_orr").get_to(p.miller_orr);
    if (j.contains("outer_upper")) {
        j.at("outer_lower").get_to(p.outer_lower);
        j.at("outer_upper").get_to(p.outer_upper);
        j.at("inner_lower").get_to(p.inner_lower);
        j.at("inner_upper").get_to(p.inner_upper);
        p.lookahead_days = j.value("lookahead_days", 5);
    } else {
        // Limits omitted: derive the default band.
        p = stone_defaults(p.miller_orr, j.value("inner_fraction", 0.8),
                           j.value("lookahead_days", 5));
    }
}

std::string action_kind_name(ActionKind k) {
    switch (k) {
        case ActionKind::none: return "none";
        case ActionKind::transfer_to_cash: return "to_cash";
        case ActionKind::transfer_from_cash: return "from_cash";
    }
    return "none";
}

ActionKind parse_action_kind(const std::string& name) {
    if (name == "none") return ActionKind::none;
    if (name == "to_cash") return ActionKind::transfer_to_cash;
    if (name == "from_cash") return ActionKind::transfer_from_cash;
    throw input_error("unknown action kind: '" + name + "'");
}

} // namespace treasury::cash_policy

namespace treasury::reserves {

void to_json(json& j, const ValueImpact& v) {
    j = json{{"nwc_growth", round_cents(v.nwc_growth)},
             {"yearly_alt_cost", round_cents(v.yearly_alt_cost)},
             {"value_change", round_cents(v.value_change)}};
}

void from_json(const json& j, ValueImpact& v) {
    j.at("nwc_growth").get_to(v.nwc_growth);
    j.at("yearly_alt_cost").get_to(v.yearly_alt_cost);
    j.at("value_change").get_to(v.value_change);
}

} // namespace treasury::reserves

namespace treasury::speculative {

void to_json(json& j, const SpeculativeVerdict& v) {
    j = json{{"expected_benefit", round_cents(v.expected_benefit)},
             {"daily_cost", round_cents(v.daily_cost)},
             {"hold", v.hold}};
}

void from_json(const json& j, SpeculativeVerdict& v) {
    j.at("expected_benefit").get_to(v.expected_benefit);
    j.at("daily_cost").get_to(v.daily_cost);
    j.at("hold").get_to(v.hold);
}

} // namespace treasury::speculative

namespace treasury::budget {

void to_json(json& j, const FixedObligation& o) {
    j = json{{"label", o.label}, {"amount", o.amount}, {"due_period", o.due_period}};
}

void from_json(const json& j, FixedObligation& o) {
    o.label = j.value("label", "other");
    j.at("amount").get_to(o.amount);
    j.at("due_period").get_to(o.due_period);
}

void to_json(json& j, const BudgetAssumptions& a) {
    j = json{{"granularity", granularity_name(a.granularity)},
             {"period_labels", a.period_labels},
             {"sales", a.sales},
             {"purchases", a.purchases},
             {"collection_profile", a.collection_profile},
             {"obligations", a.obligations},
             {"prior_sales", a.prior_sales},
             {"opening_balance", a.opening_balance}};
}

void from_json(const json& j, BudgetAssumptions& a) {
    a.granularity = parse_granularity(j.value("granularity", "month"));
    a.period_labels = j.value("period_labels", std::vector<std::string>{});
    j.at("sales").get_to(a.sales);
    a.purchases = j.value("purchases", std::vector<double>{});
    a.collection_profile = j.value("collection_profile", std::vector<double>{});
    a.obligations = j.value("obligations", std::vector<FixedObligation>{});
    a.prior_sales = j.value("prior_sales", std::vector<double>{});
    a.opening_balance = j.value("opening_balance", 0.0);
}

void to_json(json& j, const SliceObligation& o) {
    j = json{{"label", o.label}, {"amount", o.amount}};
}

void from_json(const json& j, SliceObligation& o) {
    o.label = j.value("label", "other");
    j.at("amount").get_to(o.amount);
}

void to_json(json& j, const PeriodSlice& s) {
    j = json{{"label", s.label},
             {"sales", s.sales},
             {"purchases", s.purchases},
             {"obligations", s.obligations}};
}

void from_json(const json& j, PeriodSlice& s) {
    s.label = j.value("label", "");
    s.sales = j.value("sales", 0.0);
    s.purchases = j.value("purchases", 0.0);
    s.obligations = j.value("obligations", std::vector<SliceObligation>{});
}

void to_json(json& j, const BudgetPeriod& p) {
    j = json{{"label", p.label},
             {"inflows", round_cents(p.inflows)},
             {"outflows", round_cents(p.outflows)},
             {"net_flow", round_cents(p.net_flow)},
             {"closing_balance", round_cents(p.closing_balance)},
             {"bad_debt", round_cents(p.bad_debt)}};
}

void from_json(const json& j, BudgetPeriod& p) {
    j.at("label").get_to(p.label);
    j.at("inflows").get_to(p.inflows);
    j.at("outflows").get_to(p.outflows);
    j.at("net_flow").get_to(p.net_flow);
    j.at("closing_balance").get_to(p.closing_balance);
    j.at("bad_debt").get_to(p.bad_debt);
}

void to_json(json& j, const CashBudget& b) {
    j = json{{"granularity", granularity_name(b.granularity)},
             {"opening_balance", round_cents(b.opening_balance)},
             {"carried_tail_inflows", round_cents(b.carried_tail_inflows)},
             {"periods", b.periods}};
}

void from_json(const json& j, CashBudget& b) {
    b.granularity = parse_granularity(j.value("granularity", "month"));
    j.at("opening_balance").get_to(b.opening_balance);
    b.carried_tail_inflows = j.value("carried_tail_inflows", 0.0);
    j.at("periods").get_to(b.periods);
}

} // namespace treasury::budget

namespace treasury::simulator {

namespace {

std::string forecast_mode_name(StoneForecastMode m) {
    return m == StoneForecastMode::true_flows ? "true_flows" : "provided";
}

StoneForecastMode parse_forecast_mode(const std::string& name) {
    if (name == "true_flows") return StoneForecastMode::true_flows;
    if (name == "provided") return StoneForecastMode::provided;
    throw input_error("unknown forecast mode: '" + name + "'");
}

} // namespace

void to_json(json& j, const PolicySpec& p) {
    std::visit(
        [&j](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BaumolPolicy>) {
                j = json{{"kind", "baumol"}, {"c_star", v.c_star}};
            } else if constexpr (std::is_same_v<T, BeranekPolicy>) {
                j = json{{"kind", "beranek"}, {"c_star", v.c_star}};
            } else if constexpr (std::is_same_v<T, MillerOrrPolicy>) {
                j = v.params;
                j["kind"] = "miller_orr";
            } else {
                j = v.params;
                j["kind"] = "stone";
                j["forecast"] = forecast_mode_name(v.forecast);
                if (!v.provided_forecast.empty()) j["provided_forecast"] = v.provided_forecast;
            }
        },
        p);
}

void from_json(const json& j, PolicySpec& p) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "baumol") {
        p = BaumolPolicy{j.at("c_star").get<double>()};
    } else if (kind == "beranek") {
        p = BeranekPolicy{j.at("c_star").get<double>()};
    } else if (kind == "miller_orr") {
        MillerOrrPolicy mo;
        j.get_to(mo.params);
        p = std::move(mo);
    } else if (kind == "stone") {
        StonePolicy st;
        j.get_to(st.params);
        st.forecast = parse_forecast_mode(j.value("forecast", "true_flows"));
        st.provided_forecast = j.value("provided_forecast", std::vector<double>{});
        p = std::move(st);
    } else {
        throw input_error("unknown policy kind: '" + kind + "'");
    }
}

void to_json(json& j, const SimulationConfig& c) {
    j = json{{"label", c.label},
             {"policy", c.policy},
             {"opening_balance", c.opening_balance},
             {"holding_rate", c.holding_rate},
             {"transfer_cost", c.transfer_cost},
             {"shortage_cost", c.shortage_cost},
             {"shortage_rate", c.shortage_rate}};
    if (c.lcl_floor) j["lcl_floor"] = *c.lcl_floor;
}

void from_json(const json& j, SimulationConfig& c) {
    c.label = j.value("label", "policy");
    j.at("policy").get_to(c.policy);
    c.opening_balance = j.value("opening_balance", 0.0);
    c.holding_rate = j.value("holding_rate", 0.0);
    c.transfer_cost = j.value("transfer_cost", 0.0);
    c.shortage_cost = j.value("shortage_cost", 0.0);
    c.shortage_rate = j.value("shortage_rate", 0.0);
    if (j.contains("lcl_floor") && !j.at("lcl_floor").is_null())
        c.lcl_floor = j.at("lcl_floor").get<double>();
    else
        c.lcl_floor.reset();
}

void to_json(json& j, const ActionRecord& a) {
    j = json{{"day", a.day},
             {"kind", cash_policy::action_kind_name(a.kind)},
             {"amount", round_cents(a.amount)},
             {"balance_after", round_cents(a.balance_after)}};
}

void from_json(const json& j, ActionRecord& a) {
    j.at("day").get_to(a.day);
    a.kind = cash_policy::parse_action_kind(j.at("kind").get<std::string>());
    j.at("amount").get_to(a.amount);
    j.at("balance_after").get_to(a.balance_after);
}

void to_json(json& j, const CostBreakdown& c) {
    j = json{{"holding", round_cents(c.holding)},
             {"transfer", round_cents(c.transfer)},
             {"shortage", round_cents(c.shortage)},
             {"total", round_cents(c.total)}};
}

void from_json(const json& j, CostBreakdown& c) {
    j.at("holding").get_to(c.holding);
    j.at("transfer").get_to(c.transfer);
    j.at("shortage").get_to(c.shortage);
    j.at("total").get_to(c.total);
}

void to_json(json& j, const SimulationReport& r) {
    json balances = json::array();
    for (double b : r.balances) balances.push_back(round_cents(b));
    j = json{{"label", r.label},
             {"balances", std::move(balances)},
             {"actions", r.actions},
             {"costs", r.costs},
             {"transfer_count", r.transfer_count},
             {"days_below_floor", r.days_below_floor}};
}

void from_json(const json& j, SimulationReport& r) {
    j.at("label").get_to(r.label);
    j.at("balances").get_to(r.balances);
    r.actions = j.value("actions", std::vector<ActionRecord>{});
    j.at("costs").get_to(r.costs);
    j.at("transfer_count").get_to(r.transfer_count);
    j.at("days_below_floor").get_to(r.days_below_floor);
}

} // namespace treasury::simulator
