#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rmscd/graph.hpp"
#include "rmscd/medoid_shift.hpp"
#include "rmscd/metrics.hpp"
#include "rmscd/rms.hpp"

namespace rmscd {

enum class Objective { modularity, nmi };

Objective parse_objective(const std::string& name);
std::string objective_name(Objective o);

// Reproduction tolerances for the reported targets.
inline constexpr double kNmiTolerance = 0.08;
inline constexpr double kModularityTolerance = 0.05;
inline constexpr int kClusterTolerance = 2;

struct SweepRow {
    double param = 0.0;
    int num_clusters = 0;
    double modularity = 0.0;
    std::optional<double> nmi;
    double wall_ms = 0.0;

    double objective_value(Objective o) const;
};

struct SweepResult {
    std::vector<SweepRow> rows;    // sorted by param
    std::size_t best_index = 0;    // argmax of objective, ties to smallest param
    Objective objective = Objective::modularity;

    // Per-row clusterings, kept only on request (invariant spot checks).
    std::vector<Clustering> clusterings;

    const SweepRow& best_row() const { return rows[best_index]; }
};

struct SweepOptions {
    int threads = 1;
    TieRule tie_rule = TieRule::lowest_index;
    bool keep_clusterings = false;
    bool measure_time = true;
};

// Runs RMS for every k in [k_min, k_max] (clamped to [1, n-1]) and records
// cluster counts, modularity and, when truth is given, NMI.
SweepResult sweep_k(const Graph& g, int k_min, int k_max, Objective objective,
                    const GroundTruth* truth = nullptr, const SweepOptions& opts = {});

// Same recording contract for the medoid-shift baseline over a radius list.
SweepResult sweep_radius(const Graph& g, const std::vector<double>& radii,
                         DistanceTransform transform, Objective objective,
                         const GroundTruth* truth = nullptr, const SweepOptions& opts = {},
                         ShiftKernel kernel = ShiftKernel::exp_half);

// Evenly spread quantiles of the off-diagonal distance distribution plus 0;
// the baseline sweeps radius directly instead of guessing foreign scales.
std::vector<double> default_radius_grid(const DistanceMatrix& d, int count);

// header: param,clusters,modularity,nmi,wall_ms. Timing cells are left empty
// unless requested so identical inputs produce byte-identical output.
void write_sweep_csv(const SweepResult& r, std::ostream& out, bool include_timings = false);

struct DatasetReport {
    std::string name;
    bool skipped = false;
    std::string skip_reason;

    int nodes = 0;
    int edges = 0;
    bool weighted = false;
    std::string metric;  // "nmi" or "modularity"

    std::optional<int> paper_k;
    std::optional<double> paper_value;
    std::optional<int> paper_clusters;

    std::optional<double> value_at_paper_k;
    std::optional<int> clusters_at_paper_k;

    std::optional<double> best_k;
    std::optional<double> best_value;
    std::optional<int> best_clusters;

    std::optional<double> baseline_best_radius;
    std::optional<double> baseline_best_value;
    std::optional<int> baseline_best_clusters;

    std::optional<bool> value_ok;     // |computed - paper| within tolerance
    std::optional<bool> clusters_ok;  // |computed - paper| within kClusterTolerance
    double value_tolerance = 0.0;
};

struct TieRuleSensitivityRow {
    std::string dataset;
    std::string tie_rule;
    double value = 0.0;
    int clusters = 0;
};

struct ReproduceReport {
    std::vector<DatasetReport> datasets;
    std::vector<TieRuleSensitivityRow> tie_rule_appendix;  // present when a target missed
    bool all_targets_met = true;
};

// Loads every dataset named by <dir>/manifest.json, runs RMS at the
// configured k plus a surrounding sweep and the baseline radius sweep, and
// compares against the recorded reference values. Missing files are reported
// as skipped. When any tolerance misses, every reported dataset is re-run
// under the alternate prefer_self tie rule into the appendix.
ReproduceReport reproduce_tables(const std::string& dataset_dir, int threads = 1);

}  // namespace rmscd
