#include "iscover/cli_app.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "iscover/errors.hpp"
#include "iscover/experiment.hpp"
#include "iscover/instgen.hpp"
#include "iscover/json_io.hpp"
#include "iscover/oracles.hpp"
#include "iscover/policies.hpp"

namespace iscover {

namespace {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::domain_error& e) {
        throw parameter_error(e.what());
    } catch (...) {
        throw parameter_error("bad rational '" + text + "' (use n or n/d)");
    }
}

// "1,2;2,3;3" -> {{1,2},{2,3},{3}}
std::vector<std::vector<int>> parse_sets(const std::string& text) {
    std::vector<std::vector<int>> sets;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> items;
        std::stringstream ss(group);
        std::string item;
        while (std::getline(ss, item, ','))
            try {
                items.push_back(std::stoi(item));
            } catch (...) {
                throw parameter_error("bad set item '" + item + "'");
            }
        sets.push_back(std::move(items));
    }
    if (sets.empty()) throw parameter_error("no sets given");
    return sets;
}

std::unique_ptr<Oracle> make_oracle(const std::string& name, const Instance& inst,
                                    std::optional<HypothesisId> target, std::uint64_t seed) {
    auto need_target = [&](const char* who) {
        if (!target) throw parameter_error(std::string(who) + " oracle requires --target");
        return *target;
    };
    if (name == "adversarial") return adversarial_oracle(inst, need_target("adversarial"));
    if (name.rfind("random", 0) == 0) {
        std::uint64_t oracle_seed = seed;
        if (name.size() > 6 && name[6] == ':') oracle_seed = std::stoull(name.substr(7));
        return random_consistent_oracle(inst, need_target("random"), oracle_seed);
    }
    if (name.rfind("table:", 0) == 0)
        return table_oracle(load_table_file(name.substr(6), inst.query_count()));
    throw parameter_error("unknown oracle: " + name +
                          " (use adversarial, random[:<seed>], or table:<file>)");
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& fallback) {
    if (out_path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interactive submodular set cover toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Run one policy against one oracle on an instance");
    std::string instance_path, policy_name = "greedy", oracle_name = "adversarial";
    std::optional<int> target;
    std::uint64_t seed = 0;
    int step_limit = 0;
    solve->add_option("instance", instance_path, "Instance JSON file")->required();
    solve->add_option("--policy", policy_name,
                      "greedy | naive-greedy | learn-then-cover | cover-all");
    solve->add_option("--oracle", oracle_name, "adversarial | random[:<seed>] | table:<file>");
    solve->add_option("--target", target, "Target hypothesis id for consistent oracles");
    solve->add_option("--seed", seed, "Seed for random oracles");
    solve->add_option("--step-limit", step_limit, "Abort after this many queries");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Brute-force bound audit of an instance");
    std::string verify_path;
    verify_cmd->add_option("instance", verify_path, "Instance JSON file")->required();

    // gen-instance
    auto* gen = app.add_subcommand("gen-instance", "Emit a constructed instance as JSON");
    std::string gen_name, gen_out, gen_sets = "1,2;2,3;3", gen_cheap = "1", gen_expensive = "10",
                gen_costs;
    long long gen_alpha = 3;
    int gen_n = 5, gen_k = 3;
    gen->add_option("name", gen_name,
                    "naive-greedy-counterexample | identify-hard | threshold-line | "
                    "set-cover-single | set-cover-multi | cartoon")
        ->required();
    gen->add_option("-o,--out", gen_out, "Output file (default stdout)");
    gen->add_option("--alpha", gen_alpha, "Threshold (naive-greedy-counterexample)");
    gen->add_option("--n", gen_n, "Hypothesis count (identify-hard)");
    gen->add_option("--k", gen_k, "log2 hypothesis count (threshold-line)");
    gen->add_option("--cheap", gen_cheap, "Cheap query cost, n or n/d");
    gen->add_option("--expensive", gen_expensive, "Expensive query cost, n or n/d");
    gen->add_option("--sets", gen_sets, "Set system, e.g. '1,2;2,3;3' (set-cover reductions)");
    gen->add_option("--costs", gen_costs, "Per-set costs, e.g. '1;1;1' (set-cover reductions)");

    // gen-class
    auto* gen_class = app.add_subcommand("gen-class", "Emit a hypothesis class as JSON");
    std::string class_graph, class_spec_text = "clusters:10,20,30,40", class_out;
    std::uint64_t class_seed = 0;
    gen_class->add_option("graph", class_graph, "Edge list file")->required();
    gen_class->add_option("--class", class_spec_text,
                          "clusters:<k,...> | balls:<count>,<radius> | expanded-clusters:<k>");
    gen_class->add_option("--seed", class_seed, "Generator seed");
    gen_class->add_option("-o,--out", class_out, "Output file (default stdout)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Multi-trial policy comparison on a network");
    std::string exp_graph, exp_class = "clusters:10,20,30,40", exp_out, exp_dataset;
    std::vector<std::string> exp_policies;
    int exp_trials = 100;
    std::uint64_t exp_seed = 0;
    exp->add_option("graph", exp_graph, "Edge list file")->required();
    exp->add_option("--class", exp_class,
                    "clusters:<k,...> | noisy-clusters:<k>,<m> | balls:<count>,<radius> | "
                    "expanded-clusters:<k>");
    exp->add_option("--policy", exp_policies, "Policy to run (repeatable)");
    exp->add_option("--trials", exp_trials, "Number of trials");
    exp->add_option("--seed", exp_seed, "Experiment seed");
    exp->add_option("--dataset", exp_dataset, "Dataset label for the CSV (default: graph path)");
    exp->add_option("--out", exp_out, "Output file (default stdout)");

    std::vector<const char*> argv;
    argv.push_back("iscover");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*solve) {
            Instance inst = load_instance_file(instance_path);
            auto policy = make_policy(policy_name, inst);
            auto oracle = make_oracle(oracle_name, inst, target, seed);
            int limit = step_limit > 0 ? step_limit : default_step_limit(inst);
            Transcript t = run_policy(inst, *policy, *oracle, limit);
            out << transcript_to_json(inst, t).dump(2) << "\n";
            return 0;
        }
        if (*verify_cmd) {
            Instance inst = load_instance_file(verify_path);
            BoundReport report = audit_bounds(inst);
            out << bound_report_to_json(report).dump(2) << "\n";
            return report.all_ok() ? 0 : 2;
        }
        if (*gen) {
            Instance inst;
            if (gen_name == "naive-greedy-counterexample")
                inst = gen_naive_greedy_counterexample(gen_alpha, parse_rational(gen_cheap),
                                                       parse_rational(gen_expensive));
            else if (gen_name == "identify-hard")
                inst = gen_identify_hard_instance(gen_n, parse_rational(gen_cheap),
                                                  parse_rational(gen_expensive));
            else if (gen_name == "threshold-line")
                inst = gen_threshold_line(gen_k);
            else if (gen_name == "set-cover-single" || gen_name == "set-cover-multi") {
                auto sets = parse_sets(gen_sets);
                std::vector<Rational> costs(sets.size(), Rational(1));
                if (!gen_costs.empty()) {
                    costs.clear();
                    std::stringstream ss(gen_costs);
                    std::string item;
                    while (std::getline(ss, item, ';')) costs.push_back(parse_rational(item));
                }
                inst = gen_name == "set-cover-single" ? reduce_set_cover_single_h(sets, costs)
                                                      : reduce_set_cover_multi_h(sets, costs);
            } else if (gen_name == "cartoon")
                inst = gen_cartoon().instance;
            else
                throw parameter_error("unknown instance generator: " + gen_name);
            write_output(instance_to_json(inst).dump(2) + "\n", gen_out, out);
            return 0;
        }
        if (*gen_class) {
            Graph g = parse_edge_list_file(class_graph);
            ClassSpec spec = ClassSpec::parse(class_spec_text);
            HypothesisClass hc;
            switch (spec.kind) {
                case ClassSpec::Kind::clusters:
                    hc = gen_clusters_class(g, spec.sizes, class_seed);
                    break;
                case ClassSpec::Kind::balls:
                    hc = gen_balls(g, spec.count, spec.radius, class_seed);
                    break;
                case ClassSpec::Kind::expanded_clusters:
                    hc = gen_expanded_clusters(g, spec.k, class_seed);
                    break;
                case ClassSpec::Kind::noisy_clusters:
                    throw parameter_error(
                        "noisy-clusters is rebuilt per trial; use it with `experiment`");
            }
            write_output(class_to_json(hc).dump(2) + "\n", class_out, out);
            return 0;
        }
        if (*exp) {
            if (exp_policies.empty())
                exp_policies = {"greedy", "learn-then-cover", "cover-all"};
            Graph g = parse_edge_list_file(exp_graph);
            ClassSpec spec = ClassSpec::parse(exp_class);
            ExperimentResult result =
                run_experiment(g, spec, exp_policies, exp_trials, exp_seed,
                               exp_dataset.empty() ? exp_graph : exp_dataset);
            write_output(experiment_csv(result), exp_out, out);
            return 0;
        }
    } catch (const infeasible_error& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const nontermination_error& e) {
        err << "non-termination: " << e.what() << "\n";
        return 2;
    } catch (const inconsistent_oracle_error& e) {
        err << "inconsistent oracle: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace iscover
