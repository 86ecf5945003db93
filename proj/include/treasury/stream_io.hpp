#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "treasury/budget.hpp"
#include "treasury/simulator.hpp"

namespace treasury::io {

/// CSV "day,net_flow". A header row is optional on input. Money is written
/// with two decimals.
simulator::CashFlowStream read_stream_csv(std::istream& in, const std::string& source_tag);
void write_stream_csv(std::ostream& out, const simulator::CashFlowStream& s);

/// CSV "day,balance,action,amount", one row per simulated day, for plotting.
void write_trajectory_csv(std::ostream& out, const simulator::CashFlowStream& s,
                          const simulator::SimulationReport& r);

/// CSV "period,sales,purchases,obligations", one row per period. The profile,
/// opening balance and granularity travel outside the table.
budget::BudgetAssumptions read_assumptions_csv(std::istream& in,
                                               budget::Granularity granularity,
                                               std::span<const double> collection_profile,
                                               double opening_balance);

/// CSV "period,inflows,outflows,net_flow,closing_balance,bad_debt".
void write_budget_csv(std::ostream& out, const budget::CashBudget& b);

} // namespace treasury::io
