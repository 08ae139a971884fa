#include "qig/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qig/errors.hpp"

namespace qig {

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QIG_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw BadValue(std::string("QIG_SEED: not a valid seed: '") + env + "'");
        }
    }
    return 42;
}

void validate_common(const CliConfig& cfg) {
    for (int n : cfg.n_values)
        if (n < 2) throw BadValue("--n: must be >= 2, got " + std::to_string(n));
    if (cfg.trials < -1) throw BadValue("--trials: must be >= 0");
    if (!cfg.f_name.empty()) find_f(cfg.f_name);  // UnknownName with the token
    if (!cfg.g_name.empty()) find_g(cfg.g_name);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const CliConfig& cfg, const std::string& payload) {
    if (cfg.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + cfg.output_path + "'");
    out << payload;
    if (!out) throw IoError("failed writing output file '" + cfg.output_path + "'");
}

nlohmann::json parse_input_json(const CliConfig& cfg) {
    if (cfg.input_path.empty()) throw BadValue("--input: required for compute commands");
    const std::string text = read_file(cfg.input_path);
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw BadValue("input file '" + cfg.input_path + "' is not valid JSON");
    return j;
}

struct MetricInput {
    UnfoldedPoint m;
    TangentVectorM x;
    TangentVectorM y;
};

MetricInput load_metric_input(const CliConfig& cfg) {
    const nlohmann::json j = parse_input_json(cfg);
    if (!j.is_object() || !j.contains("m") || !j.contains("x"))
        throw BadValue("metric input: expected {\"m\": point, \"x\": tangent[, \"y\": tangent]}");
    UnfoldedPoint m = point_from_json(j.at("m"));
    TangentVectorM x = tangent_from_json(j.at("x"));
    TangentVectorM y = j.contains("y") ? tangent_from_json(j.at("y")) : x;
    return {std::move(m), std::move(x), std::move(y)};
}

int run_compute_metric(const CliConfig& cfg) {
    const MonotoneF& f = find_f(cfg.f_name.empty() ? "sld" : cfg.f_name);
    const MetricInput in = load_metric_input(cfg);
    const double value = pullback_metric(in.m, in.x, in.y, f);
    if (cfg.format == "csv") {
        write_output(cfg, "command,f,value\ncompute-metric," + f.name + "," +
                              format_double(value) + "\n");
    } else {
        nlohmann::ordered_json out;
        out["schema"] = 1;
        out["command"] = "compute-metric";
        out["f"] = f.name;
        out["value"] = value;
        write_output(cfg, out.dump(2) + "\n");
    }
    return 0;
}

int run_compute_split(const CliConfig& cfg) {
    const MonotoneF& f = find_f(cfg.f_name.empty() ? "sld" : cfg.f_name);
    const MetricInput in = load_metric_input(cfg);
    const SplitMetricValue value = split_metric(in.m, in.x, in.y, f);
    if (cfg.format == "csv") {
        write_output(cfg, "command,f,classical,quantum,total\ncompute-split," + f.name + "," +
                              format_double(value.classical) + "," +
                              format_double(value.quantum) + "," + format_double(value.total) +
                              "\n");
    } else {
        nlohmann::ordered_json out;
        out["schema"] = 1;
        out["command"] = "compute-split";
        out["f"] = f.name;
        out["classical"] = value.classical;
        out["quantum"] = value.quantum;
        out["total"] = value.total;
        write_output(cfg, out.dump(2) + "\n");
    }
    return 0;
}

int run_compute_entropy(const CliConfig& cfg) {
    const ConvexG& g = find_g(cfg.g_name.empty() ? "mlog" : cfg.g_name);
    const nlohmann::json j = parse_input_json(cfg);
    if (!j.is_object() || !j.contains("rho") || !j.contains("sigma"))
        throw BadValue("entropy input: expected {\"rho\": matrix, \"sigma\": matrix}");
    const DensityMatrix rho(matrix_from_json(j.at("rho")));
    const DensityMatrix sigma(matrix_from_json(j.at("sigma")));
    const double value = relative_g_entropy(rho, sigma, g);
    if (cfg.format == "csv") {
        write_output(cfg, "command,g,value\ncompute-entropy," + g.name + "," +
                              format_double(value) + "\n");
    } else {
        nlohmann::ordered_json out;
        out["schema"] = 1;
        out["command"] = "compute-entropy";
        out["g"] = g.name;
        out["value"] = value;
        write_output(cfg, out.dump(2) + "\n");
    }
    return 0;
}

SuiteConfig suite_config_from(const CliConfig& cfg, Suite suite) {
    SuiteConfig sc;
    sc.suite = suite;
    sc.n_values = cfg.n_values;
    sc.trials = cfg.trials;
    sc.seed = cfg.seed;
    sc.step = cfg.step;
    sc.tol = cfg.tol;
    return sc;
}

int run_verify(const CliConfig& cfg) {
    std::vector<std::pair<std::string, std::vector<TrialReport>>> results;
    if (cfg.suite == "all") {
        for (const std::string& name : suite_names())
            results.emplace_back(name, run_suite(suite_config_from(cfg, suite_from_name(name))));
    } else {
        results.emplace_back(cfg.suite, run_suite(suite_config_from(cfg, suite_from_name(cfg.suite))));
    }
    bool pass = true;
    for (const auto& [name, reports] : results) pass = pass && all_pass(reports);

    if (cfg.format == "csv") {
        std::string payload = "suite,trial,seed,n,f,g,check,value,reference,abs_error,tolerance,pass\n";
        for (const auto& [name, reports] : results) {
            const std::string block = reports_to_csv(reports, name);
            payload += block.substr(block.find('\n') + 1);  // drop the per-block header
        }
        write_output(cfg, payload);
    } else {
        nlohmann::ordered_json out;
        out["schema"] = 1;
        out["command"] = "verify";
        out["suite"] = cfg.suite;
        out["seed"] = cfg.seed;
        if (cfg.suite == "all") {
            nlohmann::ordered_json suites = nlohmann::ordered_json::array();
            for (const auto& [name, reports] : results) {
                nlohmann::ordered_json sj;
                sj["suite"] = name;
                sj["reports"] = reports_to_json(reports);
                sj["pass"] = all_pass(reports);
                suites.push_back(std::move(sj));
            }
            out["suites"] = std::move(suites);
        } else {
            out["reports"] = reports_to_json(results.front().second);
        }
        out["pass"] = pass;
        write_output(cfg, out.dump(2) + "\n");
    }
    return pass ? 0 : 1;
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
    CliConfig cfg;
    cfg.seed = default_seed();

    CLI::App app{"monotone quantum metrics on the unfolded state space"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed (default: QIG_SEED env or 42)");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", cfg.output_path, "write the report to this file");
    };

    CLI::App* metric = app.add_subcommand("compute-metric", "pulled-back monotone metric value");
    metric->add_option("--f", cfg.f_name, "monotone function name");
    metric->add_option("--input", cfg.input_path, "JSON input file")->required();
    add_common(metric);

    CLI::App* split = app.add_subcommand("compute-split", "classical/quantum split of the metric");
    split->add_option("--f", cfg.f_name, "monotone function name");
    split->add_option("--input", cfg.input_path, "JSON input file")->required();
    add_common(split);

    CLI::App* entropy = app.add_subcommand("compute-entropy", "relative g-entropy of two states");
    entropy->add_option("--g", cfg.g_name, "convex function name");
    entropy->add_option("--input", cfg.input_path, "JSON input file")->required();
    add_common(entropy);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("suite", cfg.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_choices));
    verify->add_option("--n", cfg.n_values, "dimension(s), repeatable");
    verify->add_option("--trials", cfg.trials, "trial count (suite default if omitted)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--step", cfg.step, "finite-difference step (hessian suite)");
    verify->add_option("--tol", cfg.tol, "override the suite's primary tolerance");
    add_common(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        throw;
    } catch (const CLI::ExtrasError& e) {
        throw UnknownFlag(e.what());
    } catch (const CLI::ConversionError& e) {
        throw BadValue(e.what());
    } catch (const CLI::ValidationError& e) {
        throw BadValue(e.what());
    } catch (const CLI::RequiredError& e) {
        throw BadValue(e.what());
    } catch (const CLI::ParseError& e) {
        throw BadValue(e.what());
    }

    if (metric->parsed()) cfg.command = Command::compute_metric;
    else if (split->parsed()) cfg.command = Command::compute_split;
    else if (entropy->parsed()) cfg.command = Command::compute_entropy;
    else cfg.command = Command::verify;

    validate_common(cfg);
    return cfg;
}

int run(const CliConfig& cfg) {
    switch (cfg.command) {
        case Command::compute_metric: return run_compute_metric(cfg);
        case Command::compute_split: return run_compute_split(cfg);
        case Command::compute_entropy: return run_compute_entropy(cfg);
        case Command::verify: return run_verify(cfg);
    }
    throw ConfigError("unknown command");
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        const CliConfig cfg = parse_args(args);
        return run(cfg);
    } catch (const CLI::CallForHelp&) {
        std::cout << "usage: qig <compute-metric|compute-split|compute-entropy|verify> [options]\n"
                     "       qig verify <suite|all> [--n N ...] [--trials T] [--seed S]\n"
                     "                  [--step H] [--tol T] [--format json|csv] [--output FILE]\n"
                     "suites:";
        for (const std::string& s : suite_names()) std::cout << ' ' << s;
        std::cout << "\nfunctions: --f sld|wy|kmb|rld   --g mlog|xlogx|sqrt2\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace qig
