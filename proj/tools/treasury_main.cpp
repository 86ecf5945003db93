// treasury: command-line front end for the cash-management toolkit.
//
// Subcommands cover valuation (nwc, fcff, value), policy calculators
// (policy baumol|beranek|miller-orr|stone), reserves (lcl, safety-stock,
// lcl-impact), the speculative verdict (speculate), cash budgets
// (budget build|roll) and the day-by-day simulator (generate, simulate,
// advise, compare).
//
// Exit codes: 0 success, 1 input error, 2 domain error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treasury/budget.hpp"
#include "treasury/cash_policy.hpp"
#include "treasury/errors.hpp"
#include "treasury/json_io.hpp"
#include "treasury/money.hpp"
#include "treasury/reserves.hpp"
#include "treasury/simulator.hpp"
#include "treasury/speculative.hpp"
#include "treasury/stream_io.hpp"
#include "treasury/valuation.hpp"

using nlohmann::json;
namespace cp = treasury::cash_policy;
namespace sim = treasury::simulator;
using treasury::input_error;

namespace {

struct AppConfig {
    int day_count = 360;          // 360 or 365
    std::string format = "table"; // table | json | csv
    std::optional<double> default_rate;
    std::optional<int> horizon; // expected budget length; mismatches get a note
    std::string out = "-";
};

std::string config_path_from(int argc, char** argv) {
    for (int i = 1; i < argc - 1; ++i)
        if (std::string_view(argv[i]) == "--config") return argv[i + 1];
    for (int i = 1; i < argc; ++i) {
        std::string_view a(argv[i]);
        if (a.rfind("--config=", 0) == 0) return std::string(a.substr(9));
    }
    if (const char* env = std::getenv("TREASURY_CONFIG")) return env;
    return {};
}

AppConfig load_config(const std::string& path) {
    AppConfig cfg;
    if (path.empty()) return cfg;
    std::ifstream f(path);
    if (!f) throw input_error("cannot open config: " + path);
    json j = json::parse(f);
    cfg.day_count = j.value("day_count", 360);
    cfg.format = j.value("format", "table");
    if (j.contains("default_rate")) cfg.default_rate = j.at("default_rate").get<double>();
    if (j.contains("horizon")) cfg.horizon = j.at("horizon").get<int>();
    cfg.out = j.value("out", "-");
    if (cfg.day_count != 360 && cfg.day_count != 365)
        throw input_error("config day_count must be 360 or 365");
    if (cfg.format != "table" && cfg.format != "json" && cfg.format != "csv")
        throw input_error("config format must be table, json or csv");
    return cfg;
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw input_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw input_error("cannot write: " + path);
    f << content;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find(',', start);
        const auto piece =
            pos == std::string::npos ? text.substr(start) : text.substr(start, pos - start);
        if (!piece.empty()) out.push_back(treasury::parse_number(piece));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (out.empty()) throw input_error("empty list");
    return out;
}

using Rows = std::vector<std::pair<std::string, std::string>>;

// One result sink for the three output formats. Money already formatted by
// the caller; json carries the machine shape.
struct Emitter {
    std::string format;
    std::string out_path;

    void emit(const json& machine, const Rows& rows) const {
        std::ostringstream ss;
        if (format == "json") {
            ss << machine.dump(2) << '\n';
        } else if (format == "csv") {
            ss << "key,value\n";
            for (const auto& [k, v] : rows) ss << k << ',' << v << '\n';
        } else {
            std::size_t width = 0;
            for (const auto& [k, v] : rows) width = std::max(width, k.size());
            for (const auto& [k, v] : rows)
                ss << k << std::string(width - k.size(), ' ') << "  " << v << '\n';
        }
        sink(ss.str());
    }

    void sink(const std::string& text) const {
        if (out_path == "-")
            std::cout << text;
        else
            write_file(out_path, text);
    }
};

std::string fm(double v) { return treasury::format_money(v); }
std::string fn(double v) { return treasury::format_number(v); }

sim::CashFlowStream load_stream(const std::string& path) {
    if (path == "-") return treasury::io::read_stream_csv(std::cin, "stdin");
    std::ifstream f(path);
    if (!f) throw input_error("cannot open: " + path);
    return treasury::io::read_stream_csv(f, path);
}

json budget_json(const treasury::budget::CashBudget& b) {
    json j = b;
    if (!b.periods.empty()) j["final_balance"] = treasury::round_cents(b.periods.back().closing_balance);
    return j;
}

void emit_budget(const Emitter& em, const treasury::budget::CashBudget& b) {
    if (em.format == "json") {
        em.emit(budget_json(b), {});
        return;
    }
    std::ostringstream ss;
    if (em.format == "csv") {
        treasury::io::write_budget_csv(ss, b);
    } else {
        ss << "opening balance  " << fm(b.opening_balance) << '\n';
        if (b.carried_tail_inflows != 0.0)
            ss << "carried tail     " << fm(b.carried_tail_inflows) << '\n';
        ss << "period      inflows     outflows     net_flow      closing     bad_debt\n";
        for (const auto& p : b.periods) {
            ss << p.label;
            ss << std::string(p.label.size() < 8 ? 8 - p.label.size() : 1, ' ');
            for (double v : {p.inflows, p.outflows, p.net_flow, p.closing_balance, p.bad_debt}) {
                std::string m = fm(v);
                ss << std::string(m.size() < 12 ? 12 - m.size() : 1, ' ') << m << ' ';
            }
            ss << '\n';
        }
    }
    em.sink(ss.str());
}

json report_summary(const sim::SimulationReport& r) {
    return json{{"label", r.label},
                {"total_cost", treasury::round_cents(r.costs.total)},
                {"holding", treasury::round_cents(r.costs.holding)},
                {"transfer", treasury::round_cents(r.costs.transfer)},
                {"shortage", treasury::round_cents(r.costs.shortage)},
                {"transfer_count", r.transfer_count},
                {"days_below_floor", r.days_below_floor}};
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    try {
        const AppConfig cfg = load_config(config_path_from(argc, argv));

        CLI::App app{"treasury: cash-management toolkit"};
        app.require_subcommand(1);
        std::string config_path; // consumed in the prescan; declared so --config parses
        app.add_option("--config", config_path, "JSON config file (or env TREASURY_CONFIG)");
        Emitter em{cfg.format, cfg.out};
        app.add_option("--format", em.format, "output format: table|json|csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        app.add_option("--out", em.out_path, "output path, '-' for stdout");

        auto* sub_nwc = app.add_subcommand("nwc", "net working capital from a balance-sheet snapshot");
        sub_nwc->fallthrough();
        struct {
            double ca = 0, cl = 0, aar = 0, zap = 0, g = 0, aap = 0;
        } nwc_in;
        sub_nwc->add_option("--current-assets", nwc_in.ca, "current assets (money)")->required();
        sub_nwc->add_option("--current-liabilities", nwc_in.cl, "current liabilities (money)")->required();
        sub_nwc->add_option("--receivables", nwc_in.aar, "accounts receivable (money)");
        sub_nwc->add_option("--inventory", nwc_in.zap, "inventory (money)");
        sub_nwc->add_option("--cash", nwc_in.g, "cash and equivalents (money)");
        sub_nwc->add_option("--payables", nwc_in.aap, "accounts payable (money)");
        sub_nwc->callback([&] {
            treasury::valuation::BalanceSheetSnapshot b{nwc_in.ca, nwc_in.cl, nwc_in.aar,
                                                        nwc_in.zap, nwc_in.g, nwc_in.aap};
            const double v = treasury::valuation::net_working_capital(b);
            em.emit(json{{"nwc", treasury::round_cents(v)}}, {{"nwc", fm(v)}});
        });

        auto* sub_fcff = app.add_subcommand("fcff", "free cash flow to firm for one period");
        sub_fcff->fallthrough();
        treasury::valuation::PeriodFinancials pf;
        sub_fcff->add_option("--cash-revenue", pf.cash_revenue, "cash revenues on sales (money/period)")->required();
        sub_fcff->add_option("--fixed-costs", pf.fixed_costs, "fixed costs (money/period)");
        sub_fcff->add_option("--variable-costs", pf.variable_costs, "variable costs (money/period)");
        sub_fcff->add_option("--non-cash-expenses", pf.non_cash_expenses, "depreciation and other non-cash expenses (money/period)");
        sub_fcff->add_option("--tax-rate", pf.tax_rate, "effective tax rate (fraction in [0,1])");
        sub_fcff->add_option("--nwc-growth", pf.nwc_growth, "net working capital growth (money)");
        sub_fcff->add_option("--capex", pf.capex, "operational investment growth (money)");
        sub_fcff->callback([&] {
            const double v = treasury::valuation::fcff(pf);
            em.emit(json{{"fcff", treasury::round_cents(v)}}, {{"fcff", fm(v)}});
        });

        auto* sub_value = app.add_subcommand("value", "discounted value change of a delta stream");
        sub_value->fallthrough();
        struct {
            double rate = 0, level = 0, time_zero = 0;
            std::string deltas, deltas_file;
            bool perpetuity = false;
            bool has_time_zero = false;
        } val_in;
        auto* val_rate = sub_value->add_option("--rate", val_in.rate, "discount rate (fraction/period)");
        if (cfg.default_rate) val_rate->default_val(*cfg.default_rate); else val_rate->required();
        sub_value->add_option("--deltas", val_in.deltas, "finite horizon deltas, comma separated (money), one per period");
        sub_value->add_option("--deltas-file", val_in.deltas_file, "file with one delta per line, '-' for stdin");
        sub_value->add_flag("--perpetuity", val_in.perpetuity, "perpetuity mode: --level discounted forever");
        auto* lvl = sub_value->add_option("--level", val_in.level, "perpetuity level delta (money/period)");
        auto* tz = sub_value->add_option("--time-zero", val_in.time_zero, "one-off delta at t=0 (money)");
        sub_value->callback([&] {
            val_in.has_time_zero = tz->count() > 0;
            std::vector<double> deltas;
            treasury::valuation::ValuationContext ctx;
            if (val_in.perpetuity) {
                if (lvl->count() == 0) throw input_error("--perpetuity needs --level");
                if (val_in.has_time_zero) deltas.push_back(val_in.time_zero);
                deltas.push_back(val_in.level);
                ctx = treasury::valuation::ValuationContext::perpetuity(val_in.rate);
            } else {
                if (lvl->count() > 0 || val_in.has_time_zero)
                    throw input_error("--level and --time-zero need --perpetuity");
                if (!val_in.deltas.empty())
                    deltas = parse_list(val_in.deltas);
                else if (!val_in.deltas_file.empty()) {
                    std::istringstream lines(slurp(val_in.deltas_file));
                    std::string line;
                    while (std::getline(lines, line))
                        if (!line.empty() && line != "\r") deltas.push_back(treasury::parse_number(line));
                } else {
                    throw input_error("need --deltas, --deltas-file or --perpetuity");
                }
                ctx = treasury::valuation::ValuationContext::finite(
                    val_in.rate, static_cast<int>(deltas.size()));
            }
            const double v = treasury::valuation::delta_value(deltas, ctx);
            em.emit(json{{"delta_value", treasury::round_cents(v)}}, {{"delta_value", fm(v)}});
        });

        auto* sub_policy = app.add_subcommand("policy", "optimal levels for the cash models");
        sub_policy->require_subcommand(1);
        sub_policy->fallthrough();

        cp::BaumolParams bau;
        auto add_baumol_opts = [&](CLI::App* s) {
            s->fallthrough();
            s->add_option("--transfer-cost", bau.transfer_cost, "fixed cost per transfer (money)")->required();
            s->add_option("--demand", bau.period_demand, "total cash moved over the period (money)")->required();
            auto* r = s->add_option("--rate", bau.rate, "opportunity rate for the same period (fraction/period)");
            if (cfg.default_rate) r->default_val(*cfg.default_rate); else r->required();
        };
        auto emit_baumol = [&](const cp::BaumolResult& r) {
            json j = r;
            j["transfers_ceiled"] = std::ceil(r.transfers_per_period);
            em.emit(j, {{"optimal_cash", fm(r.optimal_cash)},
                        {"avg_balance", fm(r.avg_balance)},
                        {"transfers_per_period", fn(r.transfers_per_period)},
                        {"transfers_ceiled", fn(std::ceil(r.transfers_per_period))}});
        };
        auto* sub_bau = sub_policy->add_subcommand("baumol", "optimal refill size when outflows dominate");
        add_baumol_opts(sub_bau);
        sub_bau->callback([&] { emit_baumol(cp::baumol_optimal(bau)); });
        auto* sub_ber = sub_policy->add_subcommand("beranek", "optimal sweep size when inflows dominate");
        add_baumol_opts(sub_ber);
        sub_ber->callback([&] { emit_baumol(cp::beranek_optimal(bau)); });

        cp::MillerOrrParams mo;
        double mo_stddev = -1.0;
        auto add_mo_opts = [&](CLI::App* s) {
            s->fallthrough();
            s->add_option("--lower", mo.lower_limit, "management floor L (money)");
            s->add_option("--transfer-cost", mo.transfer_cost, "fixed cost per transfer (money)")->required();
            s->add_option("--daily-rate", mo.daily_rate, "opportunity rate (fraction/day)")->required();
            s->add_option("--daily-variance", mo.daily_variance, "variance of daily net flows (money^2)");
            s->add_option("--daily-stddev", mo_stddev, "stddev of daily net flows (money); alternative to --daily-variance");
        };
        auto resolve_variance = [&] {
            if (mo_stddev >= 0.0) mo.daily_variance = mo_stddev * mo_stddev;
        };
        auto* sub_mo = sub_policy->add_subcommand("miller-orr", "control band for unpredictable flows");
        add_mo_opts(sub_mo);
        sub_mo->callback([&] {
            resolve_variance();
            const auto l = cp::miller_orr_levels(mo);
            em.emit(json{{"lower", treasury::round_cents(mo.lower_limit)},
                         {"target", treasury::round_cents(l.target)},
                         {"upper", treasury::round_cents(l.upper)}},
                    {{"lower", fm(mo.lower_limit)}, {"target", fm(l.target)}, {"upper", fm(l.upper)}});
        });

        struct {
            double inner_fraction = 0.8;
            int lookahead = 5;
            double h0 = 0, h1 = 0, il = 0, iu = 0;
            bool explicit_limits = false;
        } stone_in;
        auto* sub_stone = sub_policy->add_subcommand("stone", "two-band limits with a short lookahead");
        add_mo_opts(sub_stone);
        sub_stone->add_option("--inner-fraction", stone_in.inner_fraction, "inner band as a fraction of each half-width (0..1)");
        sub_stone->add_option("--lookahead", stone_in.lookahead, "forecast window n (days)");
        auto* oh0 = sub_stone->add_option("--outer-lower", stone_in.h0, "H0, outer lower limit (money)");
        auto* oh1 = sub_stone->add_option("--outer-upper", stone_in.h1, "H1, outer upper limit (money)");
        auto* oil = sub_stone->add_option("--inner-lower", stone_in.il, "inner lower limit (money)");
        auto* oiu = sub_stone->add_option("--inner-upper", stone_in.iu, "inner upper limit (money)");
        sub_stone->callback([&] {
            resolve_variance();
            const int given = (oh0->count() ? 1 : 0) + (oh1->count() ? 1 : 0) +
                              (oil->count() ? 1 : 0) + (oiu->count() ? 1 : 0);
            cp::StoneParams sp;
            if (given == 4) {
                sp.miller_orr = mo;
                sp.outer_lower = stone_in.h0;
                sp.outer_upper = stone_in.h1;
                sp.inner_lower = stone_in.il;
                sp.inner_upper = stone_in.iu;
                sp.lookahead_days = stone_in.lookahead;
                sp.validate();
            } else if (given == 0) {
                sp = cp::stone_defaults(mo, stone_in.inner_fraction, stone_in.lookahead);
            } else {
                throw input_error("give all four explicit limits or none");
            }
            const auto l = cp::miller_orr_levels(mo);
            em.emit(json(sp), {{"target", fm(l.target)},
                               {"outer_lower", fm(sp.outer_lower)},
                               {"outer_upper", fm(sp.outer_upper)},
                               {"inner_lower", fm(sp.inner_lower)},
                               {"inner_upper", fm(sp.inner_upper)},
                               {"lookahead_days", std::to_string(sp.lookahead_days)}});
        });

        auto* sub_lcl = app.add_subcommand("lcl", "precautionary low cash level from flow volatility");
        sub_lcl->fallthrough();
        struct {
            double rate = 0, avg_transfer = 0, flow_sum = 0, stddev = 0, shortage = 0;
            int basis = 360, flow_period_days = 30;
        } lcl_in;
        lcl_in.basis = cfg.day_count;
        auto* lr = sub_lcl->add_option("--rate", lcl_in.rate, "annual capital rate (fraction/year)");
        if (cfg.default_rate) lr->default_val(*cfg.default_rate); else lr->required();
        sub_lcl->add_option("--basis", lcl_in.basis, "day-count convention: 360 or 365")
            ->check(CLI::IsMember({360, 365}));
        sub_lcl->add_option("--avg-transfer", lcl_in.avg_transfer, "average size of one cash transfer (money)")->required();
        sub_lcl->add_option("--flow-sum", lcl_in.flow_sum, "sum of all inflows and outflows in the period (money)")->required();
        sub_lcl->add_option("--stddev", lcl_in.stddev, "stddev of daily net flows (money)")->required();
        sub_lcl->add_option("--shortage-cost", lcl_in.shortage, "cost of running out of cash (money)")->required();
        sub_lcl->add_option("--flow-period-days", lcl_in.flow_period_days, "days covered by --flow-sum (informational)");
        sub_lcl->callback([&] {
            if (lcl_in.flow_period_days != 1)
                std::cerr << "note: capital rate is per day while the flow sum covers "
                          << lcl_in.flow_period_days << " days; both are used as given\n";
            treasury::reserves::LclInputs in{
                treasury::reserves::daily_rate(lcl_in.rate, lcl_in.basis), lcl_in.avg_transfer,
                lcl_in.flow_sum, lcl_in.stddev, lcl_in.shortage};
            const auto r = treasury::reserves::lcl(in);
            if (r.degenerate)
                std::cerr << "warning: degenerate parameter region (log argument >= 1); "
                             "volatility and shortage cost are too small to justify a reserve\n";
            em.emit(json{{"lcl", treasury::round_cents(r.value)}, {"degenerate", r.degenerate}},
                    {{"lcl", fm(r.value)}, {"degenerate", r.degenerate ? "true" : "false"}});
        });

        auto* sub_ss = app.add_subcommand("safety-stock", "inventory buffer from demand volatility");
        sub_ss->fallthrough();
        treasury::reserves::SafetyStockInputs ss_in;
        sub_ss->add_option("--holding-rate", ss_in.holding_cost_rate, "inventory holding cost (fraction of value/period)")->required();
        sub_ss->add_option("--order-qty", ss_in.order_quantity, "one order quantity (units)")->required();
        sub_ss->add_option("--unit-price", ss_in.unit_price, "inventory unit price (money/unit)")->required();
        sub_ss->add_option("--demand", ss_in.demand, "demand for inventories (units/period)")->required();
        sub_ss->add_option("--stddev", ss_in.usage_stddev, "stddev of inventory usage (units)")->required();
        sub_ss->add_option("--stockout-cost", ss_in.stockout_cost, "cost of an inventory shortage (money)")->required();
        sub_ss->callback([&] {
            const auto r = treasury::reserves::safety_stock(ss_in);
            if (r.degenerate)
                std::cerr << "warning: degenerate parameter region (log argument >= 1)\n";
            em.emit(json{{"safety_stock", treasury::round_cents(r.value)}, {"degenerate", r.degenerate}},
                    {{"safety_stock", fn(treasury::round_cents(r.value))},
                     {"degenerate", r.degenerate ? "true" : "false"}});
        });

        auto* sub_impact = app.add_subcommand("lcl-impact", "value impact of moving the precautionary level");
        sub_impact->fallthrough();
        struct {
            double lcl_new = 0, lcl_old = 0, rate = 0, tax = 0;
        } imp_in;
        sub_impact->add_option("--lcl-new", imp_in.lcl_new, "new precautionary level (money)")->required();
        sub_impact->add_option("--lcl-old", imp_in.lcl_old, "previous precautionary level (money)");
        auto* ir = sub_impact->add_option("--rate", imp_in.rate, "annual capital rate (fraction/year)");
        if (cfg.default_rate) ir->default_val(*cfg.default_rate); else ir->required();
        sub_impact->add_option("--tax", imp_in.tax, "effective tax rate (fraction in [0,1])");
        sub_impact->callback([&] {
            const auto v = treasury::reserves::lcl_value_impact(imp_in.lcl_new, imp_in.lcl_old,
                                                                imp_in.rate, imp_in.tax);
            em.emit(json(v), {{"nwc_growth", fm(v.nwc_growth)},
                              {"yearly_alt_cost", fm(v.yearly_alt_cost)},
                              {"value_change", fm(v.value_change)}});
        });

        auto* sub_spec = app.add_subcommand("speculate", "hold-or-deploy verdict for speculative cash");
        sub_spec->fallthrough();
        treasury::speculative::SpeculativeInputs spec_in;
        spec_in.day_count = cfg.day_count;
        sub_spec->add_option("--units", spec_in.units, "purchasable asset units (count)")->required();
        sub_spec->add_option("--price", spec_in.price, "current unit price (money/unit)")->required();
        sub_spec->add_option("--sigma", spec_in.daily_price_stddev, "daily price stddev (fraction, e.g. 0.04)")->required();
        auto* sr = sub_spec->add_option("--rate", spec_in.annual_rate, "annual capital rate (fraction/year)");
        if (cfg.default_rate) sr->default_val(*cfg.default_rate); else sr->required();
        sub_spec->add_option("--up-prob", spec_in.up_probability, "probability of the up move (fraction)");
        sub_spec->add_option("--basis", spec_in.day_count, "day-count convention: 360 or 365")
            ->check(CLI::IsMember({360, 365}));
        sub_spec->callback([&] {
            const auto v = treasury::speculative::speculative_verdict(spec_in);
            json j = v;
            j["verdict"] = v.hold ? "HOLD" : "DEPLOY";
            em.emit(j, {{"expected_benefit", fm(v.expected_benefit)},
                        {"daily_cost", fm(v.daily_cost)},
                        {"verdict", v.hold ? "HOLD" : "DEPLOY"}});
        });

        auto* sub_budget = app.add_subcommand("budget", "cash budgets with rolling-wave extension");
        sub_budget->require_subcommand(1);
        sub_budget->fallthrough();
        struct {
            std::string assumptions, periods_csv, profile, granularity = "month";
            double opening = 0.0;
        } bud_in;
        auto* sub_bb = sub_budget->add_subcommand("build", "build a budget from assumptions");
        sub_bb->fallthrough();
        sub_bb->add_option("--assumptions", bud_in.assumptions, "assumptions JSON file, '-' for stdin");
        sub_bb->add_option("--periods", bud_in.periods_csv, "period CSV 'period,sales[,purchases[,obligations]]'");
        sub_bb->add_option("--profile", bud_in.profile, "collection fractions by lag, e.g. 0.5,0.3,0.2");
        sub_bb->add_option("--opening", bud_in.opening, "opening balance (money)");
        sub_bb->add_option("--granularity", bud_in.granularity, "week|biweek|month");
        sub_bb->callback([&] {
            treasury::budget::BudgetAssumptions a;
            if (!bud_in.assumptions.empty()) {
                a = json::parse(slurp(bud_in.assumptions)).get<treasury::budget::BudgetAssumptions>();
            } else if (!bud_in.periods_csv.empty()) {
                if (bud_in.profile.empty()) throw input_error("--periods needs --profile");
                const auto profile = parse_list(bud_in.profile);
                std::istringstream csv(slurp(bud_in.periods_csv));
                a = treasury::io::read_assumptions_csv(
                    csv, treasury::budget::parse_granularity(bud_in.granularity), profile,
                    bud_in.opening);
            } else {
                throw input_error("need --assumptions or --periods");
            }
            if (cfg.horizon && a.horizon() != *cfg.horizon)
                std::cerr << "note: budget spans " << a.horizon()
                          << " periods, configured default is " << *cfg.horizon << "\n";
            emit_budget(em, treasury::budget::build_budget(a));
        });
        struct {
            std::string assumptions, next, emit_assumptions;
        } roll_in;
        auto* sub_br = sub_budget->add_subcommand("roll", "drop the oldest period, append a new one");
        sub_br->fallthrough();
        sub_br->add_option("--assumptions", roll_in.assumptions, "assumptions JSON file")->required();
        sub_br->add_option("--next", roll_in.next, "JSON slice for the appended period")->required();
        sub_br->add_option("--emit-assumptions", roll_in.emit_assumptions, "write the rolled assumptions here for chaining");
        sub_br->callback([&] {
            const auto a =
                json::parse(slurp(roll_in.assumptions)).get<treasury::budget::BudgetAssumptions>();
            json nj = json::parse(slurp(roll_in.next));
            if (nj.is_array()) {
                if (nj.size() != 1) throw input_error("the slice must contain exactly one period");
                nj = nj.front();
            }
            const auto slice = nj.get<treasury::budget::PeriodSlice>();
            const auto rolled = treasury::budget::roll_budget(treasury::budget::build_budget(a), a, slice);
            if (!roll_in.emit_assumptions.empty())
                write_file(roll_in.emit_assumptions, json(rolled.assumptions).dump(2) + "\n");
            emit_budget(em, rolled.budget);
        });

        auto* sub_gen = app.add_subcommand("generate", "synthetic daily net-flow stream (CSV day,net_flow)");
        sub_gen->fallthrough();
        struct {
            std::string kind = "gaussian";
            std::uint64_t seed = 42;
            int days = 0;
            sim::StreamParams p;
        } gen_in;
        sub_gen->add_option("--kind", gen_in.kind, "constant_out|constant_in|seasonal|gaussian|mean_reverting")->required();
        sub_gen->add_option("--seed", gen_in.seed, "PRNG seed (mt19937_64)");
        sub_gen->add_option("--days", gen_in.days, "number of days (count)")->required();
        sub_gen->add_option("--amount", gen_in.p.amount, "constant kinds: per-day amount (money)");
        sub_gen->add_option("--mean", gen_in.p.mean, "gaussian: mean daily flow (money)");
        sub_gen->add_option("--stddev", gen_in.p.stddev, "gaussian/mean_reverting: innovation stddev (money)");
        sub_gen->add_option("--monthly-inflow", gen_in.p.monthly_inflow, "seasonal: lump inflow per cycle (money)");
        sub_gen->add_option("--daily-outflow", gen_in.p.daily_outflow, "seasonal: daily outflow (money)");
        sub_gen->add_option("--period-days", gen_in.p.period_days, "seasonal: cycle length (days)");
        sub_gen->add_option("--anchor", gen_in.p.anchor, "mean_reverting: level the cumulative sum reverts to (money)");
        sub_gen->add_option("--reversion", gen_in.p.reversion, "mean_reverting: pull per day (fraction in [0,1])");
        sub_gen->callback([&] {
            const auto s = sim::generate_stream(sim::parse_stream_kind(gen_in.kind), gen_in.p,
                                                gen_in.seed, gen_in.days);
            std::ostringstream ss;
            treasury::io::write_stream_csv(ss, s);
            em.sink(ss.str());
        });

        auto* sub_sim = app.add_subcommand("simulate", "replay a flow stream through a policy");
        sub_sim->fallthrough();
        struct {
            std::string flows, policy, policy_json, stone_forecast = "true-flows", forecast_file;
            std::string trajectory, label = "policy";
            double c_star = 0, opening = 0, holding_rate = 0, transfer_fee = 0;
            double shortage_cost = 0, shortage_rate = 0, lcl_floor = 0;
            double inner_fraction = 0.8;
            int lookahead = 5;
        } sim_in;
        sub_sim->add_option("--flows", sim_in.flows, "stream CSV 'day,net_flow', '-' for stdin")->required();
        sub_sim->add_option("--policy", sim_in.policy, "baumol|beranek|miller-orr|stone");
        sub_sim->add_option("--policy-json", sim_in.policy_json, "policy spec JSON file (alternative to flags)");
        sub_sim->add_option("--c-star", sim_in.c_star, "baumol/beranek: refill or sweep size (money)");
        sub_sim->add_option("--lower", mo.lower_limit, "miller-orr/stone: floor L (money)");
        sub_sim->add_option("--transfer-cost", mo.transfer_cost, "miller-orr/stone: model transfer cost F (money)");
        sub_sim->add_option("--daily-rate", mo.daily_rate, "miller-orr/stone: opportunity rate (fraction/day)");
        sub_sim->add_option("--daily-variance", mo.daily_variance, "miller-orr/stone: daily flow variance (money^2)");
        sub_sim->add_option("--daily-stddev", mo_stddev, "alternative to --daily-variance (money)");
        sub_sim->add_option("--inner-fraction", sim_in.inner_fraction, "stone: inner band fraction (0..1)");
        sub_sim->add_option("--lookahead", sim_in.lookahead, "stone: forecast window (days)");
        sub_sim->add_option("--stone-forecast", sim_in.stone_forecast, "stone: true-flows|provided")
            ->check(CLI::IsMember({"true-flows", "provided"}));
        sub_sim->add_option("--forecast-file", sim_in.forecast_file, "stone: forecast CSV 'day,net_flow' aligned to the stream");
        sub_sim->add_option("--label", sim_in.label, "report label");
        sub_sim->add_option("--opening", sim_in.opening, "opening balance (money)");
        sub_sim->add_option("--holding-rate", sim_in.holding_rate, "holding cost on positive balances (fraction/day)");
        sub_sim->add_option("--transfer-fee", sim_in.transfer_fee, "accounting cost per action (money)");
        sub_sim->add_option("--shortage-cost", sim_in.shortage_cost, "flat cost per day below the floor (money)");
        sub_sim->add_option("--shortage-rate", sim_in.shortage_rate, "extra cost per unit of shortfall (fraction/day)");
        auto* floor_opt = sub_sim->add_option("--lcl-floor", sim_in.lcl_floor, "precautionary floor (money), e.g. an lcl result");
        sub_sim->add_option("--trajectory", sim_in.trajectory, "also write 'day,balance,action,amount' CSV here");
        sub_sim->callback([&] {
            const auto stream = load_stream(sim_in.flows);
            sim::SimulationConfig sc;
            sc.label = sim_in.label;
            if (!sim_in.policy_json.empty()) {
                sc.policy = json::parse(slurp(sim_in.policy_json)).get<sim::PolicySpec>();
            } else if (sim_in.policy == "baumol") {
                sc.policy = sim::BaumolPolicy{sim_in.c_star};
            } else if (sim_in.policy == "beranek") {
                sc.policy = sim::BeranekPolicy{sim_in.c_star};
            } else if (sim_in.policy == "miller-orr") {
                resolve_variance();
                sc.policy = sim::MillerOrrPolicy{mo};
            } else if (sim_in.policy == "stone") {
                resolve_variance();
                sim::StonePolicy st;
                st.params = cp::stone_defaults(mo, sim_in.inner_fraction, sim_in.lookahead);
                if (sim_in.stone_forecast == "provided") {
                    if (sim_in.forecast_file.empty())
                        throw input_error("stone with --stone-forecast provided needs --forecast-file");
                    const auto fs = load_stream(sim_in.forecast_file);
                    st.forecast = sim::StoneForecastMode::provided;
                    st.provided_forecast.reserve(fs.points.size());
                    for (const auto& p : fs.points) st.provided_forecast.push_back(p.net_flow);
                }
                sc.policy = std::move(st);
            } else if (sim_in.policy.empty()) {
                throw input_error("need --policy or --policy-json");
            } else {
                throw input_error("unknown policy: '" + sim_in.policy + "'");
            }
            sc.opening_balance = sim_in.opening;
            sc.holding_rate = sim_in.holding_rate;
            sc.transfer_cost = sim_in.transfer_fee;
            sc.shortage_cost = sim_in.shortage_cost;
            sc.shortage_rate = sim_in.shortage_rate;
            if (floor_opt->count()) sc.lcl_floor = sim_in.lcl_floor;
            const auto report = sim::simulate(stream, sc);
            if (!sim_in.trajectory.empty()) {
                std::ostringstream ss;
                treasury::io::write_trajectory_csv(ss, stream, report);
                write_file(sim_in.trajectory, ss.str());
            }
            if (em.format == "csv") {
                std::ostringstream ss;
                treasury::io::write_trajectory_csv(ss, stream, report);
                em.sink(ss.str());
            } else if (em.format == "json") {
                em.emit(json(report), {});
            } else {
                em.emit(json{}, {{"label", report.label},
                                 {"days", std::to_string(report.balances.size())},
                                 {"final_balance", fm(report.balances.back())},
                                 {"holding_cost", fm(report.costs.holding)},
                                 {"transfer_cost", fm(report.costs.transfer)},
                                 {"shortage_cost", fm(report.costs.shortage)},
                                 {"total_cost", fm(report.costs.total)},
                                 {"transfer_count", std::to_string(report.transfer_count)},
                                 {"days_below_floor", std::to_string(report.days_below_floor)}});
            }
        });

        auto* sub_adv = app.add_subcommand("advise", "recommend a cash model for a stream");
        sub_adv->fallthrough();
        struct {
            std::string flows, forecastable;
        } adv_in;
        sub_adv->add_option("--flows", adv_in.flows, "stream CSV, '-' for stdin")->required();
        sub_adv->add_option("--forecastable", adv_in.forecastable, "full|short_horizon|none")->required();
        sub_adv->callback([&] {
            const auto advice = sim::advise_model(load_stream(adv_in.flows),
                                                  sim::parse_forecastability(adv_in.forecastable));
            em.emit(json{{"model", sim::model_name(advice.model)}, {"rationale", advice.rationale}},
                    {{"model", sim::model_name(advice.model)}, {"rationale", advice.rationale}});
        });

        auto* sub_cmp = app.add_subcommand("compare", "rank policy configs on one stream by total cost");
        sub_cmp->fallthrough();
        struct {
            std::string flows, configs;
        } cmp_in;
        sub_cmp->add_option("--flows", cmp_in.flows, "stream CSV, '-' for stdin")->required();
        sub_cmp->add_option("--configs", cmp_in.configs, "JSON array of simulation configs")->required();
        sub_cmp->callback([&] {
            const auto stream = load_stream(cmp_in.flows);
            const auto configs =
                json::parse(slurp(cmp_in.configs)).get<std::vector<sim::SimulationConfig>>();
            const auto reports = sim::compare_policies(stream, configs);
            if (em.format == "json") {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(report_summary(r));
                em.emit(arr, {});
                return;
            }
            std::ostringstream ss;
            if (em.format == "csv") {
                ss << "rank,label,total_cost,holding,transfer,shortage,transfer_count,days_below_floor\n";
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    const auto& r = reports[i];
                    ss << i + 1 << ',' << r.label << ',' << fm(r.costs.total) << ','
                       << fm(r.costs.holding) << ',' << fm(r.costs.transfer) << ','
                       << fm(r.costs.shortage) << ',' << r.transfer_count << ','
                       << r.days_below_floor << '\n';
                }
            } else {
                ss << "rank  label                 total_cost  transfers  below_floor\n";
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    const auto& r = reports[i];
                    std::string label = r.label.size() > 20 ? r.label.substr(0, 20) : r.label;
                    ss << i + 1 << "     " << label << std::string(22 - label.size(), ' ')
                       << fm(r.costs.total) << "  " << r.transfer_count << "  "
                       << r.days_below_floor << '\n';
                }
            }
            em.sink(ss.str());
        });

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            std::cerr << e.what() << "\nrun with --help for usage\n";
            return 1;
        }
        return 0;
    } catch (const treasury::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const treasury::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
