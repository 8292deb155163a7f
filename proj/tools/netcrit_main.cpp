// netcrit: network-criticality calculator for r-nearest-neighbor cycle and
// torus topologies, expected-Laplacian ring models, and the asymmetric ring.
//
// Subcommands:
//   tau       single-point criticality queries
//   sweep     figure presets / custom grids to CSV
//   validate  closed-form vs dense-pseudoinverse comparison
//   optimize  radius selection under power or criticality bounds
//   walk-sim  Monte-Carlo random-walk betweenness
//
// Exit codes: 0 success, 1 validation mismatch, 2 usage error,
// 3 degenerate model.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>

#include "netcrit/criticality.hpp"
#include "netcrit/format.hpp"
#include "netcrit/optimizer.hpp"
#include "netcrit/sweep.hpp"
#include "netcrit/validate.hpp"

namespace {

using namespace netcrit;

void print_value(const CriticalityValue& value) {
    std::cout << "tau=" << format_double(value.tau)
              << " imag_residue=" << format_double(value.imag_residue)
              << " excluded_zeros=" << value.excluded_zeros << "\n";
}

std::vector<double> parse_range(const std::string& text) {
    // lo:hi[:step], inclusive grid
    std::vector<double> parts;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = std::min(text.find(':', begin), text.size());
        parts.push_back(std::stod(text.substr(begin, end - begin)));
        begin = end + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) throw SpecError("range must be lo:hi[:step]");
    const double lo = parts[0], hi = parts[1];
    const double step = parts.size() == 3 ? parts[2] : 1.0;
    if (step <= 0.0 || hi < lo) throw SpecError("range must satisfy lo <= hi, step > 0");
    std::vector<double> values;
    for (double v = lo; v <= hi + 1e-12; v += step) values.push_back(v);
    return values;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SpecError("cannot open output path '" + path + "'");
    return out;
}

void write_table(const SweepTable& table, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        write_csv(table, std::cout);
    } else {
        auto out = open_output(out_path);
        write_csv(table, out);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"network criticality toolkit"};
    app.require_subcommand(1);

    // --- tau ---------------------------------------------------------------
    auto* tau_cmd = app.add_subcommand("tau", "compute tau for one model instance");
    tau_cmd->require_subcommand(1);
    int n = 0, r = 1;
    std::vector<int> dims;
    double q = 1.0, p = 0.0, eps = 1.0;

    auto* tau_cycle = tau_cmd->add_subcommand("cycle", "r-nearest-neighbor cycle");
    tau_cycle->add_option("--n", n, "node count")->required();
    tau_cycle->add_option("--r", r, "neighbor radius");

    auto* tau_torus = tau_cmd->add_subcommand("torus", "two-dimensional torus");
    tau_torus->add_option("--dims", dims, "k1,k2")->required()->delimiter(',');
    tau_torus->add_option("--r", r, "neighbor radius");

    auto* tau_mdtorus = tau_cmd->add_subcommand("mdtorus", "m-dimensional torus");
    tau_mdtorus->add_option("--dims", dims, "k1,k2[,...]")->required()->delimiter(',');
    tau_mdtorus->add_option("--r", r, "neighbor radius");

    auto* tau_random = tau_cmd->add_subcommand("random-ring", "expected Laplacian, links up with probability q");
    tau_random->add_option("--n", n, "node count")->required();
    tau_random->add_option("--q", q, "link probability")->required();

    auto* tau_failure = tau_cmd->add_subcommand("failure-ring", "expected Laplacian, ring links fail with probability p");
    tau_failure->add_option("--n", n, "node count")->required();
    tau_failure->add_option("--p", p, "failure probability")->required();

    auto* tau_switching = tau_cmd->add_subcommand("switching-ring", "expected Laplacian, neighbors re-drawn each slot");
    tau_switching->add_option("--n", n, "node count")->required();

    auto* tau_asym = tau_cmd->add_subcommand("asym-ring", "directed ring with backward weight eps");
    tau_asym->add_option("--n", n, "node count")->required();
    tau_asym->add_option("--eps", eps, "backward link weight")->required();

    // --- sweep -------------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
    std::string preset, model, sweep_param, values_list, range_text, out_path;
    bool include_oracle = false;
    std::size_t oracle_cap = kDefaultOracleCap;
    int stride = 10;
    int fixed_n = 0, fixed_r = 1;
    double fixed_q = 0.5, fixed_p = 0.5, fixed_eps = 1.0;
    auto* preset_opt = sweep_cmd->add_option("--preset", preset, "fig4..fig11");
    auto* custom_flag = sweep_cmd->add_flag("--custom", "custom single-parameter sweep");
    sweep_cmd->add_option("--model", model, "model for --custom");
    sweep_cmd->add_option("--param", sweep_param, "swept parameter: n|r|q|p|eps");
    sweep_cmd->add_option("--values", values_list, "comma-separated grid values");
    sweep_cmd->add_option("--range", range_text, "lo:hi[:step] grid");
    sweep_cmd->add_option("--n", fixed_n, "fixed node count");
    sweep_cmd->add_option("--r", fixed_r, "fixed neighbor radius");
    sweep_cmd->add_option("--dims", dims, "fixed torus dims")->delimiter(',');
    sweep_cmd->add_option("--q", fixed_q, "fixed link probability");
    sweep_cmd->add_option("--p", fixed_p, "fixed failure probability");
    sweep_cmd->add_option("--eps", fixed_eps, "fixed backward weight");
    sweep_cmd->add_flag("--include-oracle", include_oracle, "add oracle_tau,rel_err columns");
    sweep_cmd->add_option("--oracle-cap", oracle_cap, "oracle node cap");
    sweep_cmd->add_option("--stride", stride, "fig6 grid stride");
    sweep_cmd->add_option("--out", out_path, "output CSV path ('-' = stdout)");

    // --- validate ----------------------------------------------------------
    auto* validate_cmd = app.add_subcommand("validate", "closed form vs oracle");
    std::string scope = "all";
    std::size_t cap = 64;
    validate_cmd->add_option("--scope", scope, "cycle|torus|stochastic|asymmetric|all");
    validate_cmd->add_option("--cap", cap, "node cap for the grids");

    // --- optimize ----------------------------------------------------------
    auto* optimize_cmd = app.add_subcommand("optimize", "radius selection under constraints");
    std::string mode = "min-tau";
    double alpha = 2.0, p_max = 0.0, tau_max = 0.0;
    int r_max = 1;
    optimize_cmd->add_option("--mode", mode, "min-tau|min-power")->required();
    optimize_cmd->add_option("--n", n, "cycle node count");
    optimize_cmd->add_option("--dims", dims, "torus dims")->delimiter(',');
    optimize_cmd->add_option("--alpha", alpha, "path-loss exponent");
    optimize_cmd->add_option("--rmax", r_max, "largest radius to consider")->required();
    auto* pmax_opt = optimize_cmd->add_option("--pmax", p_max, "per-node power bound (min-tau)");
    auto* taumax_opt = optimize_cmd->add_option("--taumax", tau_max, "criticality bound (min-power)");
    optimize_cmd->add_option("--out", out_path, "frontier CSV path");

    // --- walk-sim ----------------------------------------------------------
    auto* walk_cmd = app.add_subcommand("walk-sim", "Monte-Carlo random-walk betweenness");
    int walks_per_pair = 1000;
    std::uint64_t seed = 1;
    walk_cmd->add_option("--n", n, "cycle node count");
    walk_cmd->add_option("--dims", dims, "torus dims")->delimiter(',');
    walk_cmd->add_option("--r", r, "neighbor radius");
    walk_cmd->add_option("--walks-per-pair", walks_per_pair, "walks per ordered pair");
    walk_cmd->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (tau_cmd->parsed()) {
        if (tau_cycle->parsed()) print_value(tau_cycle_closed_form(n, r));
        if (tau_torus->parsed() || tau_mdtorus->parsed())
            print_value(tau_torus_closed_form(TopologySpec::torus(dims, r)));
        if (tau_random->parsed()) print_value(tau_random_links(n, q));
        if (tau_failure->parsed()) print_value(tau_link_failures(n, p));
        if (tau_switching->parsed()) print_value(tau_neighbor_switching(n));
        if (tau_asym->parsed()) print_value(tau_asymmetric_ring({n, eps}));
        return 0;
    }

    if (sweep_cmd->parsed()) {
        SweepOptions options{include_oracle, oracle_cap, stride};
        if (!preset_opt->empty()) {
            write_table(run_preset(preset, options), out_path);
        } else if (custom_flag->count() > 0) {
            CustomSweep custom;
            custom.model = model;
            custom.sweep_param = sweep_param;
            if (!range_text.empty()) {
                custom.values = parse_range(range_text);
            } else if (!values_list.empty()) {
                std::size_t begin = 0;
                while (begin <= values_list.size()) {
                    const std::size_t end = std::min(values_list.find(',', begin), values_list.size());
                    custom.values.push_back(std::stod(values_list.substr(begin, end - begin)));
                    begin = end + 1;
                }
            }
            custom.n = fixed_n;
            custom.r = fixed_r;
            custom.dims = dims;
            custom.q = fixed_q;
            custom.p = fixed_p;
            custom.eps = fixed_eps;
            custom.options = options;
            write_table(run_custom(custom), out_path);
        } else {
            throw SpecError("sweep needs --preset or --custom");
        }
        return 0;
    }

    if (validate_cmd->parsed()) {
        bool all_ok = true;
        for (const ValidationOutcome& outcome : run_validation(scope, cap)) {
            std::cout << "scope=" << outcome.scope << " points=" << outcome.points
                      << " max_rel_err=" << format_double(outcome.max_rel_err)
                      << " max_imag_residue=" << format_double(outcome.max_imag_residue)
                      << " worst=\"" << outcome.worst_case << "\" "
                      << (outcome.ok() ? "OK" : "FAIL") << "\n";
            for (const std::string& failure : outcome.failures)
                std::cout << "  mismatch: " << failure << "\n";
            all_ok = all_ok && outcome.ok();
        }
        return all_ok ? 0 : 1;
    }

    if (optimize_cmd->parsed()) {
        OptimizationProblem problem;
        if (!dims.empty())
            problem.topology = TopologySpec::torus(dims, 1);
        else if (n > 0)
            problem.topology = TopologySpec::cycle(n, 1);
        else
            throw SpecError("optimize needs --n or --dims");
        if (mode == "min-tau") {
            problem.mode = OptimizeMode::min_tau;
            if (pmax_opt->empty()) throw SpecError("min-tau mode needs --pmax");
        } else if (mode == "min-power") {
            problem.mode = OptimizeMode::min_power;
            if (taumax_opt->empty()) throw SpecError("min-power mode needs --taumax");
        } else {
            throw SpecError("mode must be min-tau or min-power");
        }
        problem.r_max = r_max;
        problem.p_max = p_max;
        problem.tau_max = tau_max;
        problem.power = PowerModel{alpha};

        const OptimizationResult result = solve(problem);
        const auto total_nodes = problem.topology.node_count();
        std::cout << "feasible=" << (result.feasible ? "true" : "false");
        if (result.feasible)
            std::cout << " r_star=" << result.r_star << " tau=" << format_double(result.tau_at_r)
                      << " power_per_node=" << format_double(result.power_at_r)
                      << " power_total=" << format_double(result.power_at_r * static_cast<double>(total_nodes));
        std::cout << "\n";
        if (!out_path.empty()) {
            auto out = open_output(out_path);
            out << "# netcrit optimize frontier mode=" << mode << " alpha=" << format_double(alpha) << "\n";
            out << "r,tau,power,feasible\n";
            for (const FrontierPoint& point : result.frontier)
                out << point.r << ',' << format_double(point.tau) << ',' << format_double(point.power)
                    << ',' << (point.feasible ? "true" : "false") << "\n";
        }
        return 0;
    }

    if (walk_cmd->parsed()) {
        TopologySpec spec = dims.empty() ? TopologySpec::cycle(n, r) : TopologySpec::torus(dims, r);
        const WalkStatistics stats = simulate_walk_betweenness(spec, walks_per_pair, seed);
        double mean = 0.0;
        for (double eta : stats.node_criticality) mean += eta;
        mean /= static_cast<double>(stats.node_criticality.size());
        double variance = 0.0;
        for (double eta : stats.node_criticality) variance += (eta - mean) * (eta - mean);
        variance /= static_cast<double>(stats.node_criticality.size());
        std::cout << "# walks=" << stats.walk_count << " seed=" << stats.seed
                  << " mean_walk_length=" << format_double(stats.mean_walk_length)
                  << " criticality_cov=" << format_double(std::sqrt(variance) / mean) << "\n";
        std::cout << "node,betweenness,weight,criticality\n";
        for (std::size_t k = 0; k < stats.node_betweenness.size(); ++k)
            std::cout << k << ',' << format_double(stats.node_betweenness[k]) << ','
                      << format_double(stats.node_weight[k]) << ','
                      << format_double(stats.node_criticality[k]) << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const netcrit::DegenerateModelError& e) {
        std::cerr << "degenerate model: " << e.what() << "\n";
        return 3;
    } catch (const netcrit::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
