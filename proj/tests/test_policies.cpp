#include "doctest.h"

#include <set>

#include "iscover/composite.hpp"
#include "iscover/errors.hpp"
#include "iscover/instgen.hpp"
#include "iscover/oracles.hpp"
#include "iscover/policies.hpp"

#include "support/builders.hpp"

using namespace iscover;
using namespace iscover::testsupport;

namespace {

Rational run_cost(const Instance& inst, Policy& p, Oracle& o) {
    return run_policy(inst, p, o, default_step_limit(inst)).total_cost;
}

Rational worst_over_targets(const Instance& inst, const std::string& policy_name) {
    Rational worst(0);
    for (HypothesisId h = 0; h < inst.hypothesis_count(); ++h) {
        auto policy = make_policy(policy_name, inst);
        auto oracle = adversarial_oracle(inst, h);
        worst = std::max(worst, run_cost(inst, *policy, *oracle));
    }
    return worst;
}

}  // namespace

TEST_SUITE("policies") {

TEST_CASE("worst_case_gain on the naive-greedy gap instance") {
    Instance thm5 = gen_naive_greedy_counterexample(3, Rational(1), Rational(10));

    SUBCASE("a cheap saturating query gains the full truncation") {
        WorstCaseGain g = worst_case_gain(thm5, PairSet{}, 0);
        CHECK(g.scaled_gain == 3);
        CHECK(g.cost == Rational(1));
    }

    SUBCASE("an expensive unit query gains one per hypothesis") {
        WorstCaseGain g = worst_case_gain(thm5, PairSet{}, 2);
        CHECK(g.scaled_gain == 2);
        CHECK(g.cost == Rational(10));
    }

    SUBCASE("already-present pairs gain nothing") {
        PairSet s;
        s.insert(2, 0);
        CHECK(worst_case_gain(thm5, s, 2).scaled_gain == 0);
    }

    SUBCASE("unknown queries are rejected") {
        CHECK_THROWS_AS(worst_case_gain(thm5, PairSet{}, 9), parameter_error);
    }
}

TEST_CASE("greedy on the identification gap instance asks the one cheap query") {
    Instance thm6 = gen_identify_hard_instance(5, Rational(1), Rational(10));
    CHECK(worst_case_gain(thm6, PairSet{}, 5).scaled_gain == 5);
    CHECK(worst_case_gain(thm6, PairSet{}, 0).scaled_gain == 1);

    for (HypothesisId target = 0; target < 5; ++target) {
        auto policy = greedy_policy(thm6);
        auto oracle = adversarial_oracle(thm6, target);
        Transcript t = run_policy(thm6, *policy, *oracle, 20);
        CHECK(t.steps == std::vector<QRPair>{{5, 0}});
        CHECK(t.total_cost == Rational(1));
    }
}

TEST_CASE("greedy binary-searches the threshold line") {
    Instance line = gen_threshold_line(3);
    for (HypothesisId target = 0; target < 8; ++target) {
        auto policy = greedy_policy(line);
        auto oracle = adversarial_oracle(line, target);
        Transcript t = run_policy(line, *policy, *oracle, 20);
        CHECK(t.steps.size() == 3);
    }
}

TEST_CASE("each greedy step strictly increases the scaled composite") {
    Rng rng(404);
    for (int round = 0; round < 30; ++round) {
        RandomInstanceOptions opt;
        opt.ensure_feasible = true;
        Instance inst = random_instance(rng, opt);
        auto target = static_cast<HypothesisId>(rng.below(inst.hypothesis_count()));
        auto policy = greedy_policy(inst);
        auto oracle = adversarial_oracle(inst, target);
        Transcript t = run_policy(inst, *policy, *oracle, default_step_limit(inst));
        CHECK(static_cast<long long>(t.steps.size()) <= inst.alpha * inst.hypothesis_count());

        PairSet s;
        long long value = 0;
        for (const auto& [q, r] : t.steps) {
            s.insert(q, r);
            long long next = f_bar_scaled(inst, s).value;
            CHECK(next >= value + 1);
            value = next;
        }
    }
}

TEST_CASE("naive greedy coincides with greedy when there is nothing to learn") {
    // Single hypothesis, two queries: the composite and the plain objective
    // rank queries identically.
    Instance inst = make_instance(
        1, 2, 1, one_response(1, 2), {Rational(2), Rational(3)},
        {sum_objective({modular_table_objective({{0, 0, 2}, {1, 0, 3}})})}, 5);
    auto g = greedy_policy(inst);
    auto n = naive_greedy_policy(inst);
    auto o1 = adversarial_oracle(inst, 0);
    auto o2 = adversarial_oracle(inst, 0);
    Transcript a = run_policy(inst, *g, *o1, 10);
    Transcript b = run_policy(inst, *n, *o2, 10);
    CHECK(a.steps == b.steps);
}

TEST_CASE("naive greedy signals infeasibility once every query is asked") {
    // Covering needs both cheap queries, but each has worst-case gain zero,
    // and alpha is unreachable.
    Instance inst = make_instance(1, 1, 1, one_response(1, 1), {Rational(1)},
                                  {modular_table_objective({{0, 0, 1}})}, 2);
    auto policy = naive_greedy_policy(inst);
    auto oracle = adversarial_oracle(inst, 0);
    CHECK_THROWS_AS(run_policy(inst, *policy, *oracle, 10), infeasible_error);
}

TEST_CASE("learn then cover") {
    SUBCASE("pays for full identification on the identification gap instance") {
        Instance thm6 = gen_identify_hard_instance(5, Rational(1), Rational(10));
        CHECK(worst_over_targets(thm6, "learn-then-cover") == Rational(41));

        // Worst target: the adversary eliminates one hypothesis at a time.
        auto policy = learn_then_cover_policy(thm6);
        auto oracle = adversarial_oracle(thm6, 4);
        Transcript t = run_policy(thm6, *policy, *oracle, 20);
        CHECK(t.steps ==
              std::vector<QRPair>{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {5, 0}});
        CHECK(t.total_cost == Rational(41));
    }

    SUBCASE("identification alone already covers the threshold line") {
        Instance line = gen_threshold_line(3);
        for (HypothesisId target : {0, 3, 7}) {
            auto policy = learn_then_cover_policy(line);
            auto oracle = adversarial_oracle(line, target);
            Transcript t = run_policy(line, *policy, *oracle, 20);
            CHECK(t.steps.size() == 3);  // no covering queries needed
        }
    }

    SUBCASE("single hypothesis degenerates to greedy set cover") {
        std::vector<std::vector<int>> sets{{1, 2}, {2, 3}, {3}};
        std::vector<Rational> costs{Rational(1), Rational(1), Rational(1)};
        Instance inst = reduce_set_cover_single_h(sets, costs);
        auto policy = learn_then_cover_policy(inst);
        auto oracle = adversarial_oracle(inst, 0);
        Transcript t = run_policy(inst, *policy, *oracle, 10);

        std::vector<int> expected = reference_greedy_set_cover(sets, costs);
        std::vector<int> got;
        for (const auto& [q, r] : t.steps) got.push_back(q);
        CHECK(got == expected);
    }

    SUBCASE("an emptied version space is an inconsistent-oracle error") {
        Instance line = gen_threshold_line(2);
        std::vector<ResponseId> lying(4, 1);
        lying[0] = 0;  // contradicts every hypothesis
        auto policy = learn_then_cover_policy(line);
        auto oracle = table_oracle(lying);
        CHECK_THROWS_AS(run_policy(line, *policy, *oracle, 20), inconsistent_oracle_error);
    }
}

TEST_CASE("cover all") {
    SUBCASE("threshold line needs every separating query") {
        Instance line = gen_threshold_line(3);
        std::vector<QueryId> plan = cover_all_plan(line);
        CHECK(plan.size() == 7);
        CHECK(std::set<QueryId>(plan.begin(), plan.end()) ==
              std::set<QueryId>{1, 2, 3, 4, 5, 6, 7});

        // The policy replays the plan regardless of responses.
        auto policy = cover_all_policy(line);
        auto oracle = random_consistent_oracle(line, 2, 5);
        Transcript t = run_policy(line, *policy, *oracle, 20);
        std::vector<QueryId> asked;
        for (const auto& [q, r] : t.steps) asked.push_back(q);
        CHECK(asked == plan);
    }

    SUBCASE("cartoon network is covered by the four hub ads") {
        CartoonExample cartoon = gen_cartoon();
        std::vector<QueryId> plan = cover_all_plan(cartoon.instance);
        CHECK(plan.size() == 4);
        CHECK(std::set<QueryId>(plan.begin(), plan.end()) ==
              std::set<QueryId>{CartoonExample::a1, CartoonExample::x, CartoonExample::c1,
                                CartoonExample::w});
    }

    SUBCASE("response-free instances reduce to greedy set cover on the sum") {
        Instance thm5 = gen_naive_greedy_counterexample(3, Rational(1), Rational(10));
        CHECK(cover_all_plan(thm5) == std::vector<QueryId>{0, 1});
    }

    SUBCASE("unreachable coverage is infeasible") {
        Instance hopeless = make_instance(1, 1, 1, one_response(1, 1), {Rational(1)},
                                          {modular_table_objective({{0, 0, 1}})}, 3);
        CHECK_THROWS_AS(cover_all_plan(hopeless), infeasible_error);
    }
}

TEST_CASE("policy names") {
    Instance thm5 = gen_naive_greedy_counterexample(3, Rational(1), Rational(10));
    for (const char* name : {"greedy", "naive-greedy", "learn-then-cover", "cover-all"})
        CHECK(make_policy(name, thm5) != nullptr);
    CHECK_THROWS_AS(make_policy("simulated-annealing", thm5), parameter_error);
}

TEST_CASE("transcripts are deterministic for a fixed oracle") {
    Instance line = gen_threshold_line(3);
    for (const char* name : {"greedy", "naive-greedy", "learn-then-cover", "cover-all"}) {
        auto p1 = make_policy(name, line);
        auto p2 = make_policy(name, line);
        auto o1 = adversarial_oracle(line, 6);
        auto o2 = adversarial_oracle(line, 6);
        Transcript a = run_policy(line, *p1, *o1, 50);
        Transcript b = run_policy(line, *p2, *o2, 50);
        CHECK(a.steps == b.steps);
    }
}

}  // TEST_SUITE
