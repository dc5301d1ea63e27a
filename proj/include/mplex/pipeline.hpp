#ifndef MPLEX_PIPELINE_HPP
#define MPLEX_PIPELINE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mplex/degree_stats.hpp"
#include "mplex/graph.hpp"
#include "mplex/ingest.hpp"

namespace mplex {

struct PipelineConfig {
    std::string input_path;
    std::string out_dir;
    std::vector<EdgeKind> layers = {EdgeKind::Work, EdgeKind::Alliance};
    DanglingPolicy policy = DanglingPolicy::materialize_stub;
    bool giant_component_only = true;

    bool centrality = true;
    int top_k = 5;

    bool communities = true;
    int cuts = 1;

    bool cliques = true;
    int clique_min_size = 2;
    bool include_trivial_cliques = false;

    bool fit = true;
    FitMethod fit_method = FitMethod::LogLogLeastSquares;
    int fit_k_min = 1;

    bool layout = true;
    bool seed_set = false;
    std::uint64_t seed = 0;
    int layout_iterations = 500;
};

// Reads a JSON config file with the same keys the CLI flags set. Unknown keys
// are rejected.
PipelineConfig config_from_json_file(const std::string& path);

// Runs every enabled analysis per selected layer and writes report.txt plus
// per-layer CSV/GraphML artifacts into out_dir (write-to-temp, atomic
// rename). Diagnostics go to `log`; returns a process exit status.
int run_pipeline(const PipelineConfig& config, std::ostream& log);

} // namespace mplex

#endif
