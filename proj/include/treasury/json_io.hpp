#pragma once

#include <json.hpp>

#include "treasury/budget.hpp"
#include "treasury/cash_policy.hpp"
#include "treasury/reserves.hpp"
#include "treasury/simulator.hpp"
#include "treasury/speculative.hpp"

// JSON bindings for config files and machine-readable reports. Reports round
// money to cents at this boundary; configs keep full precision.

namespace treasury::cash_policy {

void to_json(nlohmann::json& j, const BaumolParams& p);
void from_json(const nlohmann::json& j, BaumolParams& p);
void to_json(nlohmann::json& j, const BaumolResult& r);
void from_json(const nlohmann::json& j, BaumolResult& r);
void to_json(nlohmann::json& j, const MillerOrrParams& p);
void from_json(const nlohmann::json& j, MillerOrrParams& p);
void to_json(nlohmann::json& j, const MillerOrrLevels& l);
void from_json(const nlohmann::json& j, MillerOrrLevels& l);
void to_json(nlohmann::json& j, const StoneParams& p);
void from_json(const nlohmann::json& j, StoneParams& p);

std::string action_kind_name(ActionKind k);
ActionKind parse_action_kind(const std::string& name);

} // namespace treasury::cash_policy

namespace treasury::reserves {

void to_json(nlohmann::json& j, const ValueImpact& v);
void from_json(const nlohmann::json& j, ValueImpact& v);

} // namespace treasury::reserves

namespace treasury::speculative {

void to_json(nlohmann::json& j, const SpeculativeVerdict& v);
void from_json(const nlohmann::json& j, SpeculativeVerdict& v);

} // namespace treasury::speculative

namespace treasury::budget {

void to_json(nlohmann::json& j, const FixedObligation& o);
void from_json(const nlohmann::json& j, FixedObligation& o);
void to_json(nlohmann::json& j, const BudgetAssumptions& a);
void from_json(const nlohmann::json& j, BudgetAssumptions& a);
void to_json(nlohmann::json& j, const SliceObligation& o);
void from_json(const nlohmann::json& j, SliceObligation& o);
void to_json(nlohmann::json& j, const PeriodSlice& s);
void from_json(const nlohmann::json& j, PeriodSlice& s);
void to_json(nlohmann::json& j, const BudgetPeriod& p);
void from_json(const nlohmann::json& j, BudgetPeriod& p);
void to_json(nlohmann::json& j, const CashBudget& b);
void from_json(const nlohmann::json& j, CashBudget& b);

} // namespace treasury::budget

namespace treasury::simulator {

// PolicySpec is tagged by "kind": baumol | beranek | miller_orr | stone.
// A stone policy without explicit limits gets the default band; optional
// "inner_fraction" (default 0.8) and "lookahead_days" (default 5) shape it.
void to_json(nlohmann::json& j, const PolicySpec& p);
void from_json(const nlohmann::json& j, PolicySpec& p);
void to_json(nlohmann::json& j, const SimulationConfig& c);
void from_json(const nlohmann::json& j, SimulationConfig& c);
void to_json(nlohmann::json& j, const ActionRecord& a);
void from_json(const nlohmann::json& j, ActionRecord& a);
void to_json(nlohmann::json& j, const CostBreakdown& c);
void from_json(const nlohmann::json& j, CostBreakdown& c);
void to_json(nlohmann::json& j, const SimulationReport& r);
void from_json(const nlohmann::json& j, SimulationReport& r);

} // namespace treasury::simulator
