#include "doctest.h"

#include <cmath>

#include "iscover/composite.hpp"
#include "iscover/errors.hpp"
#include "iscover/instgen.hpp"
#include "iscover/oracles.hpp"
#include "iscover/verify.hpp"

#include "support/builders.hpp"

using namespace iscover;
using namespace iscover::testsupport;

namespace {

const std::vector<std::vector<int>> kSets{{1, 2}, {2, 3}, {3}};
const std::vector<Rational> kUnitCosts{Rational(1), Rational(1), Rational(1)};

struct SizeSquared final : Objective {
    long long value(const PairSet& s) const override {
        auto n = static_cast<long long>(s.size());
        return n * n;
    }
};

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("submodularity checker") {
    std::vector<QRPair> ground{{0, 0}, {1, 0}, {2, 0}, {3, 0}};

    SUBCASE("modular functions satisfy diminishing returns with equality") {
        auto f = modular_table_objective({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}});
        CHECK(check_submodular_monotone(*f, ground).passed());
    }

    SUBCASE("squared cardinality is caught with a one-element witness") {
        SizeSquared f;
        auto res = check_submodular_monotone(f, ground);
        REQUIRE(res.kind == SubmodularCheckResult::Kind::not_submodular);
        CHECK(res.set_a.empty());
        CHECK(res.set_b.size() == 1);
    }

    SUBCASE("offset functions fail normalization") {
        auto f = modular_table_objective({{0, 0, 1}});
        auto shifted_up = sum_objective({f});
        struct PlusOne final : Objective {
            long long value(const PairSet& s) const override {
                return static_cast<long long>(s.size()) + 1;
            }
        } g;
        CHECK(check_submodular_monotone(g, ground).kind ==
              SubmodularCheckResult::Kind::not_normalized);
        CHECK(check_submodular_monotone(*shift_to_zero(std::make_shared<PlusOne>()), ground)
                  .passed());
    }

    SUBCASE("ground sets past the limit are refused") {
        auto f = modular_table_objective({});
        std::vector<QRPair> big;
        for (int i = 0; i < 13; ++i) big.push_back({i, 0});
        CHECK_THROWS_AS(check_submodular_monotone(*f, big), size_limit_error);
    }
}

TEST_CASE("brute GCC") {
    SUBCASE("plain set cover") {
        Instance inst = reduce_set_cover_single_h(kSets, kUnitCosts);
        CHECK(brute_gcc(inst) == Rational(2));
    }

    SUBCASE("naive-greedy gap instance") {
        Instance thm5 = gen_naive_greedy_counterexample(3, Rational(1), Rational(10));
        CHECK(brute_gcc(thm5) == Rational(2));
    }

    SUBCASE("identification gap instance: one cheap query beats every table") {
        Instance thm6 = gen_identify_hard_instance(5, Rational(1), Rational(10));
        CHECK(brute_gcc(thm6) == Rational(1));
    }

    SUBCASE("infeasible instances have infinite GCC") {
        Instance hopeless = make_instance(1, 1, 1, one_response(1, 1), {Rational(1)},
                                          {modular_table_objective({{0, 0, 1}})}, 3);
        CHECK_FALSE(brute_gcc(hopeless).has_value());
    }

    SUBCASE("limits are enforced") {
        Instance line = gen_threshold_line(4);  // 16 queries
        CHECK_THROWS_AS(brute_gcc(line), size_limit_error);
    }
}

TEST_CASE("brute optimal adaptive cost") {
    SUBCASE("threshold line is binary search") {
        CHECK(brute_optimal_adaptive_cost(gen_threshold_line(3)) == Rational(3));
    }

    SUBCASE("plain set cover equals the set-cover optimum") {
        Instance inst = reduce_set_cover_single_h(kSets, kUnitCosts);
        CHECK(brute_optimal_adaptive_cost(inst) == Rational(2));
    }

    SUBCASE("infeasible instances have no strategy") {
        Instance hopeless = make_instance(1, 1, 1, one_response(1, 1), {Rational(1)},
                                          {modular_table_objective({{0, 0, 1}})}, 3);
        CHECK_FALSE(brute_optimal_adaptive_cost(hopeless).has_value());
    }
}

TEST_CASE("brute optimal non-adaptive cost") {
    SUBCASE("threshold line needs every separating query") {
        CHECK(brute_optimal_nonadaptive_cost(gen_threshold_line(3)) == Rational(7));
    }

    SUBCASE("single-response instances gain nothing from adaptivity") {
        Instance thm5 = gen_naive_greedy_counterexample(3, Rational(1), Rational(10));
        CHECK(brute_optimal_nonadaptive_cost(thm5) == brute_optimal_adaptive_cost(thm5));
        Instance multi = reduce_set_cover_multi_h(kSets, kUnitCosts);
        CHECK(brute_optimal_nonadaptive_cost(multi) == brute_optimal_adaptive_cost(multi));
    }
}

TEST_CASE("audit_bounds on the paper gap instances") {
    SUBCASE("naive-greedy gap instance") {
        Instance thm5 = gen_naive_greedy_counterexample(3, Rational(1), Rational(10));
        BoundReport report = audit_bounds(thm5);
        CHECK(report.all_ok());
        CHECK(report.greedy_cost == Rational(2));
        CHECK(report.gcc == Rational(2));
        CHECK(report.bound_value == doctest::Approx(2 * (1 + std::log(6.0))));
    }

    SUBCASE("identification gap instance") {
        Instance thm6 = gen_identify_hard_instance(5, Rational(1), Rational(10));
        BoundReport report = audit_bounds(thm6);
        CHECK(report.all_ok());
        CHECK(report.greedy_cost == Rational(1));
        CHECK(report.gcc == Rational(1));
        CHECK(report.optimal_adaptive_cost == Rational(1));

        // The identify-first baseline blows through the greedy guarantee:
        // cost 41 against a bound of 1 + ln(5).
        Rational ltc_worst(0);
        for (HypothesisId h = 0; h < 5; ++h) {
            auto policy = learn_then_cover_policy(thm6);
            auto oracle = adversarial_oracle(thm6, h);
            ltc_worst = std::max(ltc_worst, run_policy(thm6, *policy, *oracle, 20).total_cost);
        }
        CHECK(ltc_worst == Rational(41));
        CHECK(ltc_worst.to_double() > report.bound_value);
    }

    SUBCASE("threshold line") {
        BoundReport report = audit_bounds(gen_threshold_line(3));
        CHECK(report.all_ok());
        CHECK(report.greedy_cost == Rational(3));
        CHECK(report.optimal_adaptive_cost == Rational(3));
        CHECK(report.optimal_nonadaptive_cost == Rational(7));
    }
}

TEST_CASE("cover cost chain on random instances") {
    // GCC <= C* <= non-adaptive optimum, with infinities agreeing.
    Rng rng(314);
    int feasible_seen = 0;
    for (int round = 0; round < 40; ++round) {
        RandomInstanceOptions opt;
        opt.max_queries = 4;
        opt.ensure_feasible = round % 2 == 0;
        Instance inst = random_instance(rng, opt);
        auto gcc = brute_gcc(inst);
        auto adaptive = brute_optimal_adaptive_cost(inst);
        auto nonadaptive = brute_optimal_nonadaptive_cost(inst);

        CHECK(gcc.has_value() == adaptive.has_value());
        if (adaptive) {
            REQUIRE(gcc.has_value());
            CHECK(*gcc <= *adaptive);
            REQUIRE(nonadaptive.has_value());
            CHECK(*adaptive <= *nonadaptive);
            ++feasible_seen;
        }
    }
    CHECK(feasible_seen >= 20);
}

TEST_CASE("optimal adaptive cost is antitone in the threshold") {
    Rng rng(2718);
    int compared = 0;
    for (int round = 0; round < 30 || compared < 10; ++round) {
        RandomInstanceOptions opt;
        opt.max_queries = 4;
        opt.ensure_feasible = true;
        Instance inst = random_instance(rng, opt);
        if (inst.alpha < 2) continue;
        Instance relaxed = inst;
        relaxed.alpha = inst.alpha - 1;
        auto strict_cost = brute_optimal_adaptive_cost(inst);
        auto relaxed_cost = brute_optimal_adaptive_cost(relaxed);
        REQUIRE(strict_cost.has_value());
        REQUIRE(relaxed_cost.has_value());
        CHECK(*relaxed_cost <= *strict_cost);
        ++compared;
        if (round > 200) break;
    }
    CHECK(compared >= 10);
}

}  // TEST_SUITE
