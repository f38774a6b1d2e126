#include "iscover/experiment.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "iscover/errors.hpp"
#include "iscover/oracles.hpp"
#include "iscover/policies.hpp"
#include "iscover/rng.hpp"
#include "iscover/stats.hpp"

namespace iscover {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            throw parameter_error("class spec: bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw parameter_error("class spec: empty parameter list");
    return out;
}

}  // namespace

ClassSpec ClassSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);

    ClassSpec spec;
    if (name == "clusters") {
        spec.kind = Kind::clusters;
        spec.sizes = params.empty() ? std::vector<int>{10, 20, 30, 40} : parse_int_list(params);
    } else if (name == "noisy-clusters") {
        spec.kind = Kind::noisy_clusters;
        auto values = parse_int_list(params);
        if (values.size() != 2)
            throw parameter_error("class spec: noisy-clusters needs <clusters>,<variants>");
        spec.k = values[0];
        spec.variants = values[1];
    } else if (name == "balls") {
        spec.kind = Kind::balls;
        auto values = parse_int_list(params);
        if (values.size() != 2) throw parameter_error("class spec: balls needs <count>,<radius>");
        spec.count = values[0];
        spec.radius = values[1];
    } else if (name == "expanded-clusters") {
        spec.kind = Kind::expanded_clusters;
        auto values = parse_int_list(params);
        if (values.size() != 1) throw parameter_error("class spec: expanded-clusters needs <k>");
        spec.k = values[0];
    } else {
        throw parameter_error("unknown class spec: " + text);
    }
    return spec;
}

std::string ClassSpec::str() const {
    switch (kind) {
        case Kind::clusters: {
            std::string out = "clusters:";
            for (std::size_t i = 0; i < sizes.size(); ++i)
                out += (i ? "," : "") + std::to_string(sizes[i]);
            return out;
        }
        case Kind::noisy_clusters:
            return "noisy-clusters:" + std::to_string(k) + "," + std::to_string(variants);
        case Kind::balls:
            return "balls:" + std::to_string(count) + "," + std::to_string(radius);
        case Kind::expanded_clusters:
            return "expanded-clusters:" + std::to_string(k);
    }
    return "?";
}

double ExperimentResult::mean(std::size_t policy) const {
    double total = 0;
    for (long long c : query_counts[policy]) total += static_cast<double>(c);
    return total / trials;
}

double ExperimentResult::stddev(std::size_t policy) const {
    if (trials < 2) return 0.0;
    double m = mean(policy);
    double ss = 0;
    for (long long c : query_counts[policy]) {
        double d = static_cast<double>(c) - m;
        ss += d * d;
    }
    return std::sqrt(ss / (trials - 1));
}

ExperimentResult run_experiment(const Graph& g, const ClassSpec& spec,
                                const std::vector<std::string>& policies, int trials,
                                std::uint64_t seed, const std::string& dataset_name) {
    if (trials < 1) throw parameter_error("run_experiment: trials must be >= 1");
    if (policies.empty()) throw parameter_error("run_experiment: no policies given");

    ExperimentResult result;
    result.dataset = dataset_name;
    result.class_name = spec.str();
    result.policies = policies;
    result.trials = trials;
    result.query_counts.assign(policies.size(), {});

    // Fixed classes are built once; the noisy family rebuilds around the
    // per-trial target.
    HypothesisClass fixed_class;
    Instance fixed_instance;
    bool fixed = spec.kind != ClassSpec::Kind::noisy_clusters;
    HypothesisClass noisy_base;
    switch (spec.kind) {
        case ClassSpec::Kind::clusters:
            fixed_class = gen_clusters_class(g, spec.sizes, seed);
            break;
        case ClassSpec::Kind::balls:
            fixed_class = gen_balls(g, spec.count, spec.radius, seed);
            break;
        case ClassSpec::Kind::expanded_clusters:
            fixed_class = gen_expanded_clusters(g, spec.k, seed);
            break;
        case ClassSpec::Kind::noisy_clusters:
            noisy_base = partition_clusters(g, spec.k, seed);
            break;
    }
    if (fixed) fixed_instance = build_dominating_instance(g, fixed_class);

    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = mix_seed(seed, static_cast<std::uint64_t>(trial));
        Rng target_rng(mix_seed(seed, (1ull << 32) + static_cast<std::uint64_t>(trial)));

        Instance inst;
        HypothesisId target;
        if (fixed) {
            inst = fixed_instance;
            target = static_cast<HypothesisId>(target_rng.below(fixed_class.groups.size()));
        } else {
            target = static_cast<HypothesisId>(target_rng.below(noisy_base.groups.size()));
            HypothesisClass noisy =
                gen_noisy_variants(noisy_base, target, spec.variants, trial_seed);
            inst = build_dominating_instance(g, noisy);
        }

        for (std::size_t p = 0; p < policies.size(); ++p) {
            auto policy = make_policy(policies[p], inst);
            auto oracle = random_consistent_oracle(inst, target, trial_seed);
            Transcript t = run_policy(inst, *policy, *oracle, default_step_limit(inst));
            result.query_counts[p].push_back(static_cast<long long>(t.steps.size()));
        }
    }
    return result;
}

std::string experiment_csv(const ExperimentResult& result) {
    auto fmt = [](double v) {
        if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return std::string(buf);
    };

    std::string out = "dataset,class,policy,trials,mean,std";
    for (const auto& name : result.policies) out += ",t_vs_" + name + ",sig01_vs_" + name;
    out += "\n";

    std::vector<std::vector<double>> counts(result.policies.size());
    for (std::size_t p = 0; p < result.policies.size(); ++p)
        for (long long c : result.query_counts[p]) counts[p].push_back(static_cast<double>(c));

    for (std::size_t p = 0; p < result.policies.size(); ++p) {
        out += result.dataset + "," + result.class_name + "," + result.policies[p] + "," +
               std::to_string(result.trials) + "," + fmt(result.mean(p)) + "," +
               fmt(result.stddev(p));
        for (std::size_t other = 0; other < result.policies.size(); ++other) {
            if (other == p || result.trials < 2) {  // no differences to test
                out += ",0.0000,no";
                continue;
            }
            PairedTResult t = paired_t_test(counts[p], counts[other]);
            out += "," + fmt(t.t) + "," + (t.significant_at_p01 ? "yes" : "no");
        }
        out += "\n";
    }
    return out;
}

}  // namespace iscover
