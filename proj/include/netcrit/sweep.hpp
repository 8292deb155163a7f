#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "netcrit/oracle.hpp"
#include "netcrit/types.hpp"

namespace netcrit {

// One CSV row: model identifier, parameter cells (aligned with
// SweepTable::param_columns), tau, and the oracle columns when requested and
// the point fits under the oracle cap.
struct ResultRow {
    std::string model;
    std::vector<std::string> params;
    double tau = 0.0;
    std::optional<double> oracle_tau;
    std::optional<double> rel_err;
};

struct SweepTable {
    std::vector<std::string> comments;       // emitted as leading '# ' lines
    std::vector<std::string> param_columns;  // columns between model and tau
    std::vector<ResultRow> rows;             // deterministic grid order
    bool with_oracle = false;
};

struct SweepOptions {
    bool include_oracle = false;
    std::size_t oracle_cap = kDefaultOracleCap;
    int stride = 10;  // fig6 surface decimation
};

// Figure presets with their fixed parameters baked in:
//   fig4: cycle tau vs n (r = 1)            fig5: cycle tau vs r (n = 300)
//   fig6: torus tau vs (k1, k2) (r = 2)     fig7: torus tau vs r (k = 300x300)
//   fig8: tau vs dimension count (16,18,20,22)
//   fig9/fig10: ring models tau vs n (p = q = 0.2 / 0.7)
//   fig11: asymmetric ring tau vs (n, eps)
SweepTable run_preset(std::string_view name, const SweepOptions& options = {});

// Single-parameter custom sweep over one model.
struct CustomSweep {
    std::string model;        // cycle|torus|mdtorus|random-ring|failure-ring|switching-ring|asym-ring
    std::string sweep_param;  // n|r|q|p|eps
    std::vector<double> values;
    int n = 0;
    int r = 1;
    std::vector<int> dims;
    double q = 0.5;
    double p = 0.5;
    double eps = 1.0;
    SweepOptions options;
};

SweepTable run_custom(const CustomSweep& sweep);

// '#' metadata comments, one header line, LF endings, shortest round-trip
// float formatting; byte-identical for identical inputs.
void write_csv(const SweepTable& table, std::ostream& out);

}  // namespace netcrit
