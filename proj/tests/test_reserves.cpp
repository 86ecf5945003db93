#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "treasury/errors.hpp"
#include "treasury/reserves.hpp"
#include "treasury/valuation.hpp"

using namespace treasury;
using namespace treasury::reserves;
using testutil::uniform;

namespace {

// Case-style worked inputs: daily 18%/360 rate, monthly flow sum.
LclInputs case_inputs() {
    return {0.18 / 360.0, 27250.0, 817477.0, 35466.0, 5000.0};
}

// Independent evaluation of the reserve formula for cross-checks.
double direct_lcl(const LclInputs& in) {
    const double arg = in.capital_rate_per_day * in.avg_transfer * in.daily_flow_stddev *
                       std::sqrt(2.0 * std::numbers::pi) /
                       (in.flow_sum * in.cash_shortage_cost);
    return std::sqrt(-2.0 * in.daily_flow_stddev * in.daily_flow_stddev * std::log(arg));
}

} // namespace

TEST_CASE("precautionary level reproduces the worked case within 0.1%") {
    const auto r = lcl(case_inputs());
    CHECK_FALSE(r.degenerate);
    CHECK(std::abs(r.value - 142961.42) <= 0.001 * 142961.42);
}

TEST_CASE("zero volatility needs no reserve") {
    auto in = case_inputs();
    in.daily_flow_stddev = 0.0;
    const auto r = lcl(in);
    CHECK(r.value == 0.0);
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("doubling the shortage cost raises the level") {
    const auto base = lcl(case_inputs());
    auto in = case_inputs();
    in.cash_shortage_cost *= 2.0;
    const auto r = lcl(in);
    CHECK(r.value > base.value);
    CHECK(r.value == doctest::Approx(direct_lcl(in)).epsilon(1e-12));
}

TEST_CASE("degenerate region flags and returns zero") {
    // Huge rate and transfer against a tiny shortage cost push the log
    // argument past 1.
    LclInputs in{0.9, 1e9, 10.0, 1e6, 0.01};
    const auto r = lcl(in);
    CHECK(r.degenerate);
    CHECK(r.value == 0.0);
}

TEST_CASE("level vanishes as volatility vanishes") {
    auto in = case_inputs();
    in.daily_flow_stddev = 1e-6 * 35466.0;
    const auto r = lcl(in);
    CHECK_FALSE(r.degenerate);
    CHECK(r.value < 1.0);
}

TEST_CASE("safety stock mirrors the cash formula on mapped inputs") {
    // holding rate, order quantity and unit price play the parts of the daily
    // rate and the average transfer; unit price 1 makes the two coincide.
    SafetyStockInputs in{0.0005, 27250.0, 1.0, 817477.0, 35466.0, 5000.0};
    const auto r = safety_stock(in);
    CHECK_FALSE(r.degenerate);
    CHECK(std::abs(r.value - 142961.42) <= 0.001 * 142961.42);
}

TEST_CASE("safety stock zero-volatility and degenerate cases") {
    SafetyStockInputs quiet{0.01, 100.0, 2.0, 1e5, 0.0, 500.0};
    CHECK(safety_stock(quiet).value == 0.0);

    SafetyStockInputs degenerate{0.5, 1000.0, 10.0, 100.0, 1000.0, 1.0};
    const auto r = safety_stock(degenerate);
    CHECK(r.degenerate);
    CHECK(r.value == 0.0);
}

TEST_CASE("structural twins: lcl equals safety stock at unit price") {
    std::mt19937_64 rng(201);
    for (int i = 0; i < 200; ++i) {
        const double k = uniform(rng, 1e-5, 0.01);
        const double g = uniform(rng, 1e2, 1e6);
        const double p = uniform(rng, 1e4, 1e8);
        const double s = uniform(rng, 1.0, 1e5);
        const double kb = uniform(rng, 1.0, 1e5);
        const auto via_cash = lcl({k, g, p, s, kb});
        const auto via_stock = safety_stock({k, g, 1.0, p, s, kb});
        CHECK(via_cash.value == via_stock.value);
        CHECK(via_cash.degenerate == via_stock.degenerate);
    }
}

TEST_CASE("radicand matches its log-expanded form") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 100; ++i) {
        LclInputs in{uniform(rng, 1e-5, 0.01), uniform(rng, 1e2, 1e6),
                     uniform(rng, 1e5, 1e8), uniform(rng, 10.0, 1e5),
                     uniform(rng, 10.0, 1e5)};
        const auto r = lcl(in);
        if (r.degenerate || r.value == 0.0) continue;
        const double s = in.daily_flow_stddev;
        const double expanded =
            -2.0 * s * s *
            (std::log(in.capital_rate_per_day) + std::log(in.avg_transfer) + std::log(s) +
             0.5 * std::log(2.0 * std::numbers::pi) - std::log(in.flow_sum) -
             std::log(in.cash_shortage_cost));
        CHECK(r.value * r.value == doctest::Approx(expanded).epsilon(1e-9));
    }
}

TEST_CASE("monotonicity in each driver") {
    std::mt19937_64 rng(203);
    int checked = 0;
    while (checked < 200) {
        LclInputs in{uniform(rng, 1e-5, 0.005), uniform(rng, 1e3, 1e5),
                     uniform(rng, 1e6, 1e8), uniform(rng, 1e2, 1e4),
                     uniform(rng, 1e2, 1e4)};
        const auto base = lcl(in);
        if (base.degenerate) continue;
        ++checked;

        auto higher_shortage = in;
        higher_shortage.cash_shortage_cost *= uniform(rng, 1.5, 4.0);
        CHECK(lcl(higher_shortage).value >= base.value);

        auto higher_flow = in;
        higher_flow.flow_sum *= uniform(rng, 1.5, 4.0);
        CHECK(lcl(higher_flow).value >= base.value);

        auto higher_rate = in;
        higher_rate.capital_rate_per_day *= uniform(rng, 1.5, 4.0);
        CHECK(lcl(higher_rate).value <= base.value);

        auto bigger_transfer = in;
        bigger_transfer.avg_transfer *= uniform(rng, 1.5, 4.0);
        CHECK(lcl(bigger_transfer).value <= base.value);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(lcl({0.0, 1, 1, 1, 1}), input_error);
    CHECK_THROWS_AS(lcl({0.001, -1, 1, 1, 1}), input_error);
    CHECK_THROWS_AS(lcl({0.001, 1, 0, 1, 1}), input_error);
    CHECK_THROWS_AS(lcl({0.001, 1, 1, -1, 1}), input_error);
    CHECK_THROWS_AS(lcl({0.001, 1, 1, 1, 0}), input_error);
    CHECK_THROWS_AS(safety_stock({0, 1, 1, 1, 1, 1}), input_error);
    CHECK_THROWS_AS(daily_rate(0.18, 0), input_error);
}

TEST_CASE("day-count conversion") {
    CHECK(daily_rate(0.18) == doctest::Approx(0.0005).epsilon(1e-12));
    CHECK(daily_rate(0.18, 360) == 0.18 / 360.0);
    CHECK(daily_rate(0.365, 365) == doctest::Approx(0.001).epsilon(1e-12));
}

TEST_CASE("value impact of establishing the worked-case reserve") {
    const auto v = lcl_value_impact(142961.42, 0.0, 0.18, 0.2);
    CHECK(v.nwc_growth == doctest::Approx(142961.42).epsilon(1e-12));
    CHECK(std::abs(v.yearly_alt_cost - 25733.0) < 1.0);
    CHECK(std::abs(v.value_change - (-257330.0)) < 5.0);
}

TEST_CASE("no movement, no impact") {
    const auto v = lcl_value_impact(5000.0, 5000.0, 0.18, 0.2);
    CHECK(v.nwc_growth == 0.0);
    CHECK(v.yearly_alt_cost == 0.0);
    CHECK(v.value_change == 0.0);
}

TEST_CASE("untaxed impact matches plain perpetuity arithmetic") {
    const auto v = lcl_value_impact(100000.0, 50000.0, 0.10, 0.0);
    CHECK(v.nwc_growth == doctest::Approx(50000.0));
    CHECK(v.yearly_alt_cost == doctest::Approx(5000.0));
    CHECK(v.value_change == doctest::Approx(-100000.0).epsilon(1e-12));

    // Cross-check through the discounter itself.
    const std::vector<double> deltas{-50000.0, -5000.0};
    CHECK(v.value_change ==
          valuation::delta_value(deltas, valuation::ValuationContext::perpetuity(0.10)));
}

TEST_CASE("raising the precautionary level always costs value") {
    std::mt19937_64 rng(204);
    for (int i = 0; i < 100; ++i) {
        const double old_level = uniform(rng, 0, 1e5);
        const double new_level = old_level + uniform(rng, 1.0, 1e5);
        const double rate = uniform(rng, 0.01, 0.5);
        const double tax = uniform(rng, 0.0, 1.0);
        const auto v = lcl_value_impact(new_level, old_level, rate, tax);
        CHECK(v.value_change < 0.0);
        CHECK(std::signbit(v.value_change) != std::signbit(v.nwc_growth));
    }
}

TEST_CASE("impact error paths") {
    CHECK_THROWS_AS(lcl_value_impact(1, 0, 0.0, 0.2), treasury::domain_error);
    CHECK_THROWS_AS(lcl_value_impact(1, 0, -0.1, 0.2), treasury::domain_error);
    CHECK_THROWS_AS(lcl_value_impact(1, 0, 0.1, 1.2), input_error);
}
