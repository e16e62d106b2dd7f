// graphgen: generate, verify, and benchmark simple random graphs with
// prescribed asymptotic degree distributions.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "randgraph/bench.hpp"
#include "randgraph/config_model.hpp"
#include "randgraph/dgrd.hpp"
#include "randgraph/errors.hpp"
#include "randgraph/grg.hpp"
#include "randgraph/spec_parse.hpp"
#include "randgraph/verify.hpp"

namespace {

using namespace randgraph;

struct ModelArgs {
    std::string model;
    std::string dist_spec;
    std::string weights_spec;
    std::string recipe_spec;
    std::int64_t n = 1000;
    double a = 0.5;
    double beta = 1.0;
    double alpha = 0.0;  // heavy-tail exponent; 0 means finite-mean regime
    std::uint64_t seed = 1;
    int threads = 1;
    std::string parity = "remove-stub";
    std::int64_t max_attempts = 10000;
    bool keep_degrees = false;
    std::string save_weights;
    std::string load_weights;
};

struct RunResult {
    SimpleGraph graph = SimpleGraph::empty(0);
    verify::ReportFields report;
    std::optional<DegreeDistribution> target;
    bool heavy_tail = false;
};

void add_model_options(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("--model", args.model, "erased-config|repeated-config|truncated-config|grg|grg-fast|dgrd")
        ->required();
    cmd->add_option("--dist", args.dist_spec, "degree distribution spec");
    cmd->add_option("--weights", args.weights_spec, "weight law spec (grg models)");
    cmd->add_option("--recipe", args.recipe_spec,
                    "dgrd recipe: poisson:MU | mixedpoisson:<mix-spec> | compoundpoisson:LAMBDA,<summand-spec>");
    cmd->add_option("--n", args.n, "vertex count")->required();
    cmd->add_option("--a", args.a, "truncation exponent in (0,1) (truncated-config)");
    cmd->add_option("--beta", args.beta, "edge odds scaling exponent (grg models)");
    cmd->add_option("--alpha", args.alpha, "heavy-tail exponent of the weight law (grg verify)");
    cmd->add_option("--seed", args.seed, "global 64-bit seed");
    cmd->add_option("--threads", args.threads, "worker threads (grg pair sweep)");
    cmd->add_option("--max-attempts", args.max_attempts, "repeated-config retry budget");
    cmd->add_flag("--keep-degrees", args.keep_degrees,
                  "repeated-config: fix the degree draw, retry only the pairing");
    cmd->add_option("--parity", args.parity, "odd stub-sum fix: remove-stub|regenerate");
    cmd->add_option("--save-weights", args.save_weights, "dump sampled weights to a file");
    cmd->add_option("--load-weights", args.load_weights, "read weights from a file instead of sampling");
}

config_model::ParityPolicy parse_parity(const std::string& policy) {
    if (policy == "remove-stub") return config_model::ParityPolicy::remove_stub;
    if (policy == "regenerate") return config_model::ParityPolicy::regenerate;
    throw UsageError("unknown parity policy `" + policy + "`");
}

DegreeDistribution required_dist(const ModelArgs& args) {
    if (args.dist_spec.empty()) {
        throw UsageError("--dist is required for model `" + args.model + "`");
    }
    return parse_distribution(args.dist_spec);
}

grg::WeightSequence make_weights(const ModelArgs& args, const MixingLaw& law) {
    if (!args.load_weights.empty()) {
        std::ifstream in(args.load_weights);
        if (!in) throw UsageError("cannot read weights file `" + args.load_weights + "`");
        auto w = grg::read_weights(in, args.beta);
        if (w.size() != args.n) {
            throw UsageError("weights file holds " + std::to_string(w.size()) +
                             " entries, --n is " + std::to_string(args.n));
        }
        return w;
    }
    RandomStream rng = substream(args.seed, streams::kWeights);
    auto w = grg::sample_weights(law, args.n, args.beta, rng);
    if (!args.save_weights.empty()) {
        std::ofstream out(args.save_weights);
        if (!out) throw UsageError("cannot write weights file `" + args.save_weights + "`");
        grg::write_weights(out, w);
    }
    return w;
}

RunResult run_model(const ModelArgs& args) {
    RunResult result;
    result.report.model = args.model;
    result.report.n = args.n;
    result.report.seed = args.seed;
    const auto parity = parse_parity(args.parity);

    if (args.model == "erased-config" || args.model == "truncated-config" ||
        args.model == "repeated-config") {
        const auto F = required_dist(args);
        RandomStream rng = substream(args.seed, streams::kDegrees);
        if (args.model == "erased-config") {
            if (!F.mean_is_finite()) {
                std::cerr << "warning: degree law has infinite mean; erased degrees will "
                             "run below the target law (consider truncated-config)\n";
            }
            auto [g, report] = config_model::erased(F, args.n, parity, rng);
            result.graph = std::move(g);
            result.report.erasure_fraction = verify::erasure_fraction(report);
        } else if (args.model == "truncated-config") {
            auto [g, report] = config_model::truncated_erased(F, args.n, args.a, parity, rng);
            result.graph = std::move(g);
            result.report.erasure_fraction = verify::erasure_fraction(report);
        } else {
            if (!F.second_moment_finite()) {
                std::cerr << "warning: degree law has infinite second moment; the repeated "
                             "model may need unboundedly many attempts\n";
            }
            config_model::RepeatedOptions opts;
            opts.max_attempts = args.max_attempts;
            opts.redraw_degrees = !args.keep_degrees;
            auto [g, report] = config_model::repeated(F, args.n, parity, opts, rng);
            result.graph = std::move(g);
            result.report.erasure_fraction = verify::erasure_fraction(report);
            result.report.attempts = report.attempts;
        }
        result.target = F;
        return result;
    }

    if (args.model == "grg" || args.model == "grg-fast") {
        if (args.weights_spec.empty()) {
            throw UsageError("--weights is required for model `" + args.model + "`");
        }
        const auto law = parse_mixing_law(args.weights_spec);
        const auto w = make_weights(args, law);
        if (args.model == "grg" && args.threads > 1) {
            result.graph = grg::grg_exact_parallel(w, args.seed, args.threads);
        } else {
            RandomStream rng = substream(args.seed, streams::kEdges);
            result.graph =
                args.model == "grg" ? grg::grg_exact(w, rng) : grg::grg_fast(w, rng);
        }
        if (args.alpha > 0.0) {
            const auto tail = law.pareto_tail();
            if (!tail) {
                throw UsageError("--alpha needs a pareto weight law to pin the tail constant");
            }
            result.target = grg_limit_pmf(law, grg::HeavyTailRegime{args.alpha, tail->c});
            result.heavy_tail = true;
        } else {
            result.target = grg_limit_pmf(law, grg::FiniteMeanRegime{});
        }
        return result;
    }

    if (args.model == "dgrd") {
        DegreeDistribution source = DegreeDistribution::point_mass(0);
        if (!args.recipe_spec.empty()) {
            const auto pos = args.recipe_spec.find(':');
            if (pos == std::string::npos) {
                throw UsageError("malformed recipe `" + args.recipe_spec + "`");
            }
            const auto name = args.recipe_spec.substr(0, pos);
            const auto body = args.recipe_spec.substr(pos + 1);
            if (name == "poisson") {
                const auto intended = parse_distribution(args.recipe_spec);
                source = dgrd::poisson_source(intended.mean());
                result.target = intended;
            } else if (name == "mixedpoisson") {
                const auto q = parse_mixing_law(body);
                source = dgrd::mixed_poisson_source(q);
                result.target = mixed_poisson(q, 1.0);
            } else if (name == "compoundpoisson") {
                const auto comma = body.find(',');
                if (comma == std::string::npos) {
                    throw UsageError("compoundpoisson recipe needs LAMBDA,<summand-spec>");
                }
                char* end = nullptr;
                const double lambda = std::strtod(body.c_str(), &end);
                if (end != body.c_str() + comma) {
                    throw UsageError("bad lambda in recipe `" + args.recipe_spec + "`");
                }
                const auto summand = parse_distribution(body.substr(comma + 1));
                source = dgrd::compound_poisson_source(lambda, summand);
                result.target = compound_poisson(lambda, summand);
            } else {
                throw UsageError("unknown recipe `" + name + "`");
            }
        } else {
            source = required_dist(args);
            result.target = dgrd::target(source);
        }
        RandomStream rng = substream(args.seed, streams::kTargets);
        result.graph = dgrd::generate(source, args.n, rng);
        return result;
    }

    throw UsageError("unknown model `" + args.model + "`");
}

void write_graph(const ModelArgs& args, const std::string& out_path, const SimpleGraph& g) {
    if (out_path.empty()) {
        write_edge_list(std::cout, g);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write `" + out_path + "`");
    write_edge_list(out, g);
    (void)args;
}

void write_report_to(const std::string& path, const verify::ReportFields& fields) {
    if (path.empty() || path == "-") {
        verify::write_report(std::cout, fields);
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write `" + path + "`");
    verify::write_report(out, fields);
}

int run(int argc, char** argv) {
    CLI::App app{"simple random graphs with prescribed degree distributions"};
    app.require_subcommand(1);

    ModelArgs gen_args;
    std::string gen_out;
    std::string gen_report;
    auto* gen = app.add_subcommand("generate", "generate a graph and write an edge list");
    add_model_options(gen, gen_args);
    gen->add_option("--out", gen_out, "edge list path (stdout when omitted)");
    gen->add_option("--report", gen_report, "write the key=value run report here");

    ModelArgs ver_args;
    std::string ver_out;
    std::string ver_report;
    auto* ver = app.add_subcommand(
        "verify", "generate, then report the TV distance to the analytic target");
    add_model_options(ver, ver_args);
    ver->add_option("--out", ver_out, "also write the edge list here");
    ver->add_option("--report", ver_report, "report path (stdout when omitted)");

    std::vector<std::string> bench_models = bench::known_models();
    std::vector<std::int64_t> bench_grid;
    std::uint64_t bench_seed = 1;
    int bench_reps = 3;
    auto* ben = app.add_subcommand("bench", "time the generators over an n-grid");
    ben->add_option("--models", bench_models, "models to time");
    ben->add_option("--grid", bench_grid, "override the n-grid");
    ben->add_option("--seed", bench_seed, "seed");
    ben->add_option("--reps", bench_reps, "repetitions per point (median)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error=usage " << e.what() << "\n";
        return 2;
    }

    if (gen->parsed()) {
        const auto result = run_model(gen_args);
        write_graph(gen_args, gen_out, result.graph);
        if (!gen_report.empty()) write_report_to(gen_report, result.report);
        return 0;
    }

    if (ver->parsed()) {
        auto result = run_model(ver_args);
        const auto empirical = verify::empirical_distribution(result.graph);
        result.report.tv = verify::tv_distance(empirical, *result.target);
        if (result.heavy_tail) {
            try {
                result.report.tail_slope = verify::tail_exponent(empirical, 10, 100);
            } catch (const InvalidParameterError&) {
                // ccdf vanished inside the decade; omit the key
            }
        }
        if (!ver_out.empty()) write_graph(ver_args, ver_out, result.graph);
        write_report_to(ver_report, result.report);
        return 0;
    }

    std::printf("%-16s %10s %10s %12s\n", "model", "n", "seconds", "edges");
    for (const auto& model : bench_models) {
        const auto grid = bench_grid.empty() ? bench::default_grid(model) : bench_grid;
        for (const auto n : grid) {
            const auto row = bench::run_once(model, n, bench_seed, bench_reps);
            std::printf("%-16s %10lld %10.3f %12lld\n", row.model.c_str(),
                        static_cast<long long>(row.n), row.seconds,
                        static_cast<long long>(row.edges));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const randgraph::Error& e) {
        std::cerr << "error=" << e.code() << " " << e.what() << "\n";
        return e.exit_status();
    } catch (const std::exception& e) {
        std::cerr << "error=internal " << e.what() << "\n";
        return 1;
    }
}
