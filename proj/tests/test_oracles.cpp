#include "doctest.h"

#include "iscover/composite.hpp"
#include "iscover/errors.hpp"
#include "iscover/instgen.hpp"
#include "iscover/oracles.hpp"
#include "iscover/policies.hpp"

#include "support/builders.hpp"

using namespace iscover;
using namespace iscover::testsupport;

TEST_SUITE("oracles") {

TEST_CASE("adversarial oracle") {
    Instance line = gen_threshold_line(3);

    SUBCASE("singleton response sets are forced") {
        // The first query is valid-1 under every hypothesis.
        auto oracle = adversarial_oracle(line, 0);
        CHECK(oracle->respond(line, 0, PairSet{}) == 1);
    }

    SUBCASE("the bottom hypothesis forces 0 on the middle query") {
        auto oracle = adversarial_oracle(line, 0);
        CHECK(oracle->respond(line, 4, PairSet{}) == 0);
    }

    SUBCASE("ties break to the smallest response id") {
        // Both responses are valid and give the same composite value.
        Instance inst = make_instance(2, 1, 2, {{{0, 1}, {0, 1}}}, {Rational(1)},
                                      {modular_table_objective({{0, 0, 1}, {0, 1, 1}}),
                                       modular_table_objective({{0, 0, 1}, {0, 1, 1}})},
                                      2);
        auto oracle = adversarial_oracle(inst, 0);
        CHECK(oracle->respond(inst, 0, PairSet{}) == 0);
    }

    SUBCASE("single-response instances have no choices") {
        Instance thm5 = gen_naive_greedy_counterexample(3, Rational(1), Rational(10));
        auto oracle = adversarial_oracle(thm5, 1);
        CHECK(oracle->respond(thm5, 3, PairSet{}) == 0);
    }

    SUBCASE("target must exist") {
        CHECK_THROWS_AS(adversarial_oracle(line, 8), parameter_error);
    }
}

TEST_CASE("adversarial responses minimize the composite value") {
    Rng rng(31);
    for (int round = 0; round < 30; ++round) {
        Instance inst = random_instance(rng);
        auto target = static_cast<HypothesisId>(rng.below(inst.hypothesis_count()));
        auto oracle = adversarial_oracle(inst, target);
        PairSet s;
        for (int step = 0; step < 4; ++step) {
            auto q = static_cast<QueryId>(rng.below(inst.query_count()));
            ResponseId got = oracle->respond(inst, q, s);
            const auto& valid = inst.qs().valid_responses(q, target);
            REQUIRE(std::find(valid.begin(), valid.end(), got) != valid.end());
            for (ResponseId r : valid)
                CHECK(f_bar_scaled(inst, s.with(q, got)).value <=
                      f_bar_scaled(inst, s.with(q, r)).value);
            s.insert(q, got);
        }
    }
}

TEST_CASE("table oracle") {
    Instance line = gen_threshold_line(3);

    SUBCASE("a constant-0 table walks the version space down to the bottom") {
        auto oracle = table_oracle(std::vector<ResponseId>(8, 0));
        PairSet s;
        s.insert(4, oracle->respond(line, 4, s));
        CHECK(version_space(line, s) == std::vector<HypothesisId>{0, 1, 2, 3});
        for (QueryId q = 1; q < 8; ++q) s.insert(q, oracle->respond(line, q, s));
        CHECK(version_space(line, s) == std::vector<HypothesisId>{0});
    }

    SUBCASE("tables inconsistent with every hypothesis satisfy vacuously") {
        // Answering 0 to the first query contradicts the whole line.
        std::vector<ResponseId> t(8, 1);
        t[0] = 0;
        auto oracle = table_oracle(t);
        PairSet s;
        s.insert(0, oracle->respond(line, 0, s));
        CHECK(version_space(line, s).empty());
        CHECK(f_bar_satisfied(line, s));
    }

    SUBCASE("a table agreeing with a hypothesis matches the consistent oracle") {
        // Valid sets are singletons here, so h0's answers are a table.
        std::vector<ResponseId> agree;
        for (QueryId q = 0; q < 8; ++q) agree.push_back(line.qs().valid_responses(q, 0).front());
        auto as_table = table_oracle(agree);
        auto consistent = random_consistent_oracle(line, 0, 4);

        auto p1 = greedy_policy(line);
        auto p2 = greedy_policy(line);
        Transcript a = run_policy(line, *p1, *as_table, 50);
        Transcript b = run_policy(line, *p2, *consistent, 50);
        CHECK(a.steps == b.steps);
        CHECK(a.total_cost == b.total_cost);
    }

    SUBCASE("missing entries are protocol errors") {
        auto oracle = table_oracle({0, 0});
        CHECK_THROWS_AS(oracle->respond(line, 5, PairSet{}), protocol_error);
    }
}

TEST_CASE("random consistent oracle") {
    Instance line = gen_threshold_line(3);

    SUBCASE("same seed, same transcript") {
        for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
            auto p1 = greedy_policy(line);
            auto p2 = greedy_policy(line);
            auto o1 = random_consistent_oracle(line, 5, seed);
            auto o2 = random_consistent_oracle(line, 5, seed);
            Transcript a = run_policy(line, *p1, *o1, 50);
            Transcript b = run_policy(line, *p2, *o2, 50);
            CHECK(a.steps == b.steps);
        }
    }

    SUBCASE("responses stay within the target's valid sets") {
        Rng rng(8);
        Instance inst = random_instance(rng);
        auto oracle = random_consistent_oracle(inst, 0, 99);
        PairSet s;
        for (int step = 0; step < 20; ++step) {
            auto q = static_cast<QueryId>(rng.below(inst.query_count()));
            ResponseId r = oracle->respond(inst, q, s);
            const auto& valid = inst.qs().valid_responses(q, 0);
            CHECK(std::find(valid.begin(), valid.end(), r) != valid.end());
            s.insert(q, r);
        }
    }

    SUBCASE("two-response draws are near uniform") {
        // One query, one hypothesis, both responses valid.
        Instance inst = make_instance(1, 1, 2, {{{0, 1}}}, {Rational(1)},
                                      {modular_table_objective({{0, 0, 1}, {0, 1, 1}})}, 1);
        auto oracle = random_consistent_oracle(inst, 0, 2718);
        int ones = 0;
        const int draws = 10000;
        for (int i = 0; i < draws; ++i) ones += oracle->respond(inst, 0, PairSet{});
        CHECK(ones > draws * 0.45);
        CHECK(ones < draws * 0.55);
    }
}

}  // TEST_SUITE
