#include "netcrit/sweep.hpp"

#include <cmath>
#include <functional>

#include "netcrit/criticality.hpp"
#include "netcrit/format.hpp"
#include "netcrit/parallel.hpp"
#include "netcrit/stochastic.hpp"

namespace netcrit {

namespace {

struct RowJob {
    std::string model;
    std::vector<std::string> params;
    std::size_t nodes = 0;
    std::function<double()> tau;
    std::function<double()> oracle;  // unset when no oracle route exists
};

std::string dims_label(const std::vector<int>& dims) {
    std::string label;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) label += 'x';
        label += std::to_string(dims[i]);
    }
    return label;
}

RowJob cycle_job(int n, int r) {
    return {"cycle",
            {std::to_string(n), std::to_string(r)},
            static_cast<std::size_t>(n),
            [n, r] { return tau_cycle_closed_form(n, r).tau; },
            [n, r] { return pinv_trace_tau(build_laplacian(TopologySpec::cycle(n, r))).tau; }};
}

RowJob torus_job(std::vector<int> dims, int r) {
    TopologySpec spec = TopologySpec::torus(dims, r);
    return {dims.size() == 2 ? "torus" : "mdtorus",
            {dims_label(dims), std::to_string(r)},
            spec.node_count(),
            [spec] { return tau_torus_closed_form(spec).tau; },
            [spec] { return pinv_trace_tau(build_laplacian(spec)).tau; }};
}

SweepTable evaluate(std::vector<RowJob> jobs, const SweepOptions& options, SweepTable table) {
    table.with_oracle = options.include_oracle;
    table.rows.resize(jobs.size());
    detail::parallel_for_index(jobs.size(), [&](std::size_t i) {
        ResultRow& row = table.rows[i];
        row.model = std::move(jobs[i].model);
        row.params = std::move(jobs[i].params);
        row.tau = jobs[i].tau();
        if (options.include_oracle && jobs[i].oracle && jobs[i].nodes <= options.oracle_cap) {
            row.oracle_tau = jobs[i].oracle();
            row.rel_err = std::abs(row.tau - *row.oracle_tau) / std::abs(*row.oracle_tau);
        }
    });
    return table;
}

std::vector<RowJob> ring_model_jobs(double q, double p) {
    std::vector<RowJob> jobs;
    for (int n = 5; n <= 100; n += 5) {
        jobs.push_back({"cycle",
                        {std::to_string(n), "", ""},
                        static_cast<std::size_t>(n),
                        [n] { return tau_cycle_closed_form(n, 1).tau; },
                        [n] { return pinv_trace_tau(build_laplacian(TopologySpec::cycle(n, 1))).tau; }});
        jobs.push_back({"random-ring",
                        {std::to_string(n), format_double(q), ""},
                        static_cast<std::size_t>(n),
                        [n, q] { return tau_random_links(n, q).tau; },
                        [n, q] {
                            return pinv_trace_tau(build_laplacian(StochasticRingModel::random_links(n, q))).tau;
                        }});
        jobs.push_back({"failure-ring",
                        {std::to_string(n), "", format_double(p)},
                        static_cast<std::size_t>(n),
                        [n, p] { return tau_link_failures(n, p).tau; },
                        [n, p] {
                            return pinv_trace_tau(build_laplacian(StochasticRingModel::link_failures(n, p))).tau;
                        }});
        jobs.push_back({"switching-ring",
                        {std::to_string(n), "", ""},
                        static_cast<std::size_t>(n),
                        [n] { return tau_neighbor_switching(n).tau; },
                        [n] {
                            return pinv_trace_tau(build_laplacian(StochasticRingModel::neighbor_switching(n))).tau;
                        }});
    }
    return jobs;
}

}  // namespace

SweepTable run_preset(std::string_view name, const SweepOptions& options) {
    SweepTable table;
    std::vector<RowJob> jobs;

    if (name == "fig4") {
        table.comments = {"netcrit sweep preset=fig4 model=cycle r=1 n=10..300 step 10"};
        table.param_columns = {"n", "r"};
        for (int n = 10; n <= 300; n += 10) jobs.push_back(cycle_job(n, 1));
    } else if (name == "fig5") {
        table.comments = {"netcrit sweep preset=fig5 model=cycle n=300 r=1..149"};
        table.param_columns = {"n", "r"};
        for (int r = 1; r <= 149; ++r) jobs.push_back(cycle_job(300, r));
    } else if (name == "fig6") {
        const int stride = options.stride < 1 ? 1 : options.stride;
        table.comments = {"netcrit sweep preset=fig6 model=torus r=2 k1,k2=10..300 stride=" +
                          std::to_string(stride)};
        table.param_columns = {"dims", "r"};
        for (int k1 = 10; k1 <= 300; k1 += stride)
            for (int k2 = 10; k2 <= 300; k2 += stride) jobs.push_back(torus_job({k1, k2}, 2));
    } else if (name == "fig7") {
        table.comments = {"netcrit sweep preset=fig7 model=torus k1=k2=300 r=1..20"};
        table.param_columns = {"dims", "r"};
        for (int r = 1; r <= 20; ++r) jobs.push_back(torus_job({300, 300}, r));
    } else if (name == "fig8") {
        table.comments = {"netcrit sweep preset=fig8 dims prefix of 16x18x20x22, m=1..4, r=1..7"};
        table.param_columns = {"dims", "m", "r", "n"};
        const std::vector<int> all_dims{16, 18, 20, 22};
        for (int m = 1; m <= 4; ++m) {
            const std::vector<int> dims(all_dims.begin(), all_dims.begin() + m);
            for (int r = 1; r <= 7; ++r) {
                RowJob job = m == 1 ? cycle_job(dims[0], r) : torus_job(dims, r);
                job.params = {dims_label(dims), std::to_string(m), std::to_string(r),
                              std::to_string(job.nodes)};
                jobs.push_back(std::move(job));
            }
        }
    } else if (name == "fig9" || name == "fig10") {
        const double prob = name == "fig9" ? 0.2 : 0.7;
        table.comments = {"netcrit sweep preset=" + std::string(name) +
                          " ring models vs n, p=q=" + format_double(prob)};
        table.param_columns = {"n", "q", "p"};
        jobs = ring_model_jobs(prob, prob);
    } else if (name == "fig11") {
        table.comments = {"netcrit sweep preset=fig11 model=asym-ring n=20..100 step 10, eps=0..1 step 0.25"};
        table.param_columns = {"n", "eps"};
        for (int n = 20; n <= 100; n += 10)
            for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                jobs.push_back({"asym-ring",
                                {std::to_string(n), format_double(eps)},
                                static_cast<std::size_t>(n),
                                [n, eps] { return tau_asymmetric_ring({n, eps}).tau; },
                                [n, eps] {
                                    return pinv_trace_tau(build_laplacian(AsymmetricRingSpec{n, eps})).tau;
                                }});
            }
    } else {
        throw SpecError("unknown sweep preset '" + std::string(name) + "'");
    }

    return evaluate(std::move(jobs), options, std::move(table));
}

SweepTable run_custom(const CustomSweep& sweep) {
    if (sweep.values.empty()) throw SpecError("custom sweep needs a nonempty value grid");

    SweepTable table;
    table.comments = {"netcrit sweep custom model=" + sweep.model + " param=" + sweep.sweep_param};
    std::vector<RowJob> jobs;

    const auto as_int = [](double v, const char* what) {
        const int i = static_cast<int>(std::llround(v));
        if (std::abs(v - i) > 1e-9) throw SpecError(std::string(what) + " grid must be integral");
        return i;
    };

    for (double value : sweep.values) {
        int n = sweep.n;
        int r = sweep.r;
        double q = sweep.q;
        double p = sweep.p;
        double eps = sweep.eps;
        if (sweep.sweep_param == "n")
            n = as_int(value, "n");
        else if (sweep.sweep_param == "r")
            r = as_int(value, "r");
        else if (sweep.sweep_param == "q")
            q = value;
        else if (sweep.sweep_param == "p")
            p = value;
        else if (sweep.sweep_param == "eps")
            eps = value;
        else
            throw SpecError("unknown sweep parameter '" + sweep.sweep_param + "'");

        if (sweep.model == "cycle") {
            table.param_columns = {"n", "r"};
            jobs.push_back(cycle_job(n, r));
        } else if (sweep.model == "torus" || sweep.model == "mdtorus") {
            if (sweep.sweep_param != "r") throw SpecError("torus sweeps support only the r parameter");
            table.param_columns = {"dims", "r"};
            jobs.push_back(torus_job(sweep.dims, r));
        } else if (sweep.model == "random-ring") {
            table.param_columns = {"n", "q"};
            jobs.push_back({"random-ring",
                            {std::to_string(n), format_double(q)},
                            static_cast<std::size_t>(n),
                            [n, q] { return tau_random_links(n, q).tau; },
                            [n, q] {
                                return pinv_trace_tau(build_laplacian(StochasticRingModel::random_links(n, q))).tau;
                            }});
        } else if (sweep.model == "failure-ring") {
            table.param_columns = {"n", "p"};
            jobs.push_back({"failure-ring",
                            {std::to_string(n), format_double(p)},
                            static_cast<std::size_t>(n),
                            [n, p] { return tau_link_failures(n, p).tau; },
                            [n, p] {
                                return pinv_trace_tau(build_laplacian(StochasticRingModel::link_failures(n, p))).tau;
                            }});
        } else if (sweep.model == "switching-ring") {
            table.param_columns = {"n"};
            jobs.push_back({"switching-ring",
                            {std::to_string(n)},
                            static_cast<std::size_t>(n),
                            [n] { return tau_neighbor_switching(n).tau; },
                            [n] {
                                return pinv_trace_tau(build_laplacian(StochasticRingModel::neighbor_switching(n))).tau;
                            }});
        } else if (sweep.model == "asym-ring") {
            table.param_columns = {"n", "eps"};
            jobs.push_back({"asym-ring",
                            {std::to_string(n), format_double(eps)},
                            static_cast<std::size_t>(n),
                            [n, eps] { return tau_asymmetric_ring({n, eps}).tau; },
                            [n, eps] {
                                return pinv_trace_tau(build_laplacian(AsymmetricRingSpec{n, eps})).tau;
                            }});
        } else {
            throw SpecError("unknown sweep model '" + sweep.model + "'");
        }
    }

    return evaluate(std::move(jobs), sweep.options, std::move(table));
}

void write_csv(const SweepTable& table, std::ostream& out) {
    for (const std::string& comment : table.comments) out << "# " << comment << "\n";
    out << "model";
    for (const std::string& column : table.param_columns) out << ',' << column;
    out << ",tau";
    if (table.with_oracle) out << ",oracle_tau,rel_err";
    out << "\n";
    for (const ResultRow& row : table.rows) {
        out << row.model;
        for (const std::string& cell : row.params) out << ',' << cell;
        out << ',' << format_double(row.tau);
        if (table.with_oracle) {
            out << ',';
            if (row.oracle_tau) out << format_double(*row.oracle_tau);
            out << ',';
            if (row.rel_err) out << format_double(*row.rel_err);
        }
        out << "\n";
    }
}

}  // namespace netcrit
