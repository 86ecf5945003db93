#include "treasury/stream_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "treasury/errors.hpp"
#include "treasury/money.hpp"

namespace treasury::io {

namespace {

bool starts_numeric(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.';
    }
    return false;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

int parse_int(std::string_view text, int line_no) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    int v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw input_error("line " + std::to_string(line_no) + ": bad integer '" +
                          std::string(text) + "'");
    return v;
}

} // namespace

simulator::CashFlowStream read_stream_csv(std::istream& in, const std::string& source_tag) {
    simulator::CashFlowStream s;
    s.source = source_tag;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (line_no == 1 && !starts_numeric(line)) continue; // header
        const auto cells = split_csv(line);
        if (cells.size() != 2)
            throw input_error("line " + std::to_string(line_no) +
                              ": expected 'day,net_flow'");
        s.points.push_back({parse_int(cells[0], line_no), parse_number(cells[1])});
    }
    s.validate();
    return s;
}

void write_stream_csv(std::ostream& out, const simulator::CashFlowStream& s) {
    out << "day,net_flow\n";
    for (const auto& p : s.points)
        out << p.day << ',' << format_money(p.net_flow) << '\n';
}

void write_trajectory_csv(std::ostream& out, const simulator::CashFlowStream& s,
                          const simulator::SimulationReport& r) {
    if (s.points.size() != r.balances.size())
        throw input_error("report does not match the stream");
    out << "day,balance,action,amount\n";
    std::size_t next_action = 0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        const int day = s.points[i].day;
        std::string action = "none";
        double amount = 0.0;
        if (next_action < r.actions.size() && r.actions[next_action].day == day) {
            action = r.actions[next_action].kind == cash_policy::ActionKind::transfer_to_cash
                         ? "to_cash"
                         : "from_cash";
            amount = r.actions[next_action].amount;
            ++next_action;
        }
        out << day << ',' << format_money(r.balances[i]) << ',' << action << ','
            << format_money(amount) << '\n';
    }
}

budget::BudgetAssumptions read_assumptions_csv(std::istream& in,
                                               budget::Granularity granularity,
                                               std::span<const double> collection_profile,
                                               double opening_balance) {
    budget::BudgetAssumptions a;
    a.granularity = granularity;
    a.collection_profile.assign(collection_profile.begin(), collection_profile.end());
    a.opening_balance = opening_balance;
    std::string line;
    int line_no = 0;
    int period = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (line_no == 1 && line.find("sales") != std::string::npos) continue; // header
        auto cells = split_csv(line);
        if (cells.size() < 2 || cells.size() > 4)
            throw input_error("line " + std::to_string(line_no) +
                              ": expected 'period,sales[,purchases[,obligations]]'");
        std::string_view label = cells[0];
        while (!label.empty() && label.back() == '\r') label.remove_suffix(1);
        a.period_labels.emplace_back(label);
        a.sales.push_back(parse_number(cells[1]));
        a.purchases.push_back(cells.size() >= 3 ? parse_number(cells[2]) : 0.0);
        if (cells.size() >= 4) {
            const double due = parse_number(cells[3]);
            if (due != 0.0) a.obligations.push_back({"other", due, period});
        }
        ++period;
    }
    a.validate();
    return a;
}

void write_budget_csv(std::ostream& out, const budget::CashBudget& b) {
    out << "period,inflows,outflows,net_flow,closing_balance,bad_debt\n";
    for (const auto& p : b.periods)
        out << p.label << ',' << format_money(p.inflows) << ',' << format_money(p.outflows)
            << ',' << format_money(p.net_flow) << ',' << format_money(p.closing_balance)
            << ',' << format_money(p.bad_debt) << '\n';
}

} // namespace treasury::io
