#include "mplex/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mplex/layout.hpp"
#include "mplex/report.hpp"
#include "mplex/serialize.hpp"

namespace mplex {

namespace fs = std::filesystem;

namespace {

void validate(const PipelineConfig& config) {
    if (config.input_path.empty()) fail(errc::config_error, "no input file given");
    if (config.out_dir.empty()) fail(errc::config_error, "no output directory given");
    if (config.layers.empty()) fail(errc::config_error, "no layers selected");
    if (config.communities && config.cuts < 1)
        fail(errc::config_error, "communities enabled with cuts < 1");
    if (config.centrality && config.top_k < 1)
        fail(errc::config_error, "centrality enabled with top < 1");
    if (config.layout && !config.seed_set)
        fail(errc::config_error, "layout enabled but no seed given");
    if (config.layout && config.layout_iterations < 1)
        fail(errc::config_error, "layout enabled with iterations < 1");
    if (config.fit && config.fit_k_min < 1) fail(errc::config_error, "fit k_min must be >= 1");
}

// Artifacts appear atomically: full content lands in a dot-temp first.
void write_file(const fs::path& path, const std::string& content) {
    fs::path tmp = path.parent_path() / ("." + path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) fail(errc::io_error, "cannot write '" + tmp.string() + "'");
        out << content;
    }
    fs::rename(tmp, path);
}

struct LayerArtifacts {
    ReportLayer report;
    std::vector<std::pair<std::string, std::string>> files;  // (filename, content)
};

LayerArtifacts analyze_layer(const MultiplexNetwork& net, EdgeKind kind, const PipelineConfig& config) {
    LayerArtifacts out;
    const std::string prefix = to_string(kind);

    LayerGraph full = layer(net, kind);
    LayerGraph analyzed = config.giant_component_only ? giant_component(full) : full;
    auto names = net.names_map();

    out.report.kind = kind;
    out.report.layer_nodes = full.node_count();
    out.report.layer_edges = full.edge_count();
    out.report.analyzed_nodes = analyzed.node_count();
    out.report.used_giant_component = config.giant_component_only;

    ExportAnnotations ann;
    std::optional<RankedTable> table;
    std::optional<Partition> gn_partition;
    std::optional<LayoutResult> positions;

    if (config.centrality) {
        table = ranked_table(analyzed, config.top_k);
        out.report.centrality = table;
        out.files.emplace_back(prefix + "_centrality.csv", centrality_csv(analyzed, *table));
        ann.centrality = &*table;
    }

    if (config.communities) {
        GNDendrogram gn = girvan_newman(analyzed, config.cuts);
        gn_partition = gn.splits.back().partition;
        out.report.gn = std::move(gn);
        out.files.emplace_back(prefix + "_communities_gn.csv", partition_csv(*gn_partition));

        SpectralBisection spectral = fiedler_bisection(analyzed);
        out.files.emplace_back(prefix + "_communities_fiedler.csv", partition_csv(spectral.partition));
        if (out.report.gn->splits.front().partition.block_count() == 2)
            out.report.gn_vs_spectral =
                compare_partitions(out.report.gn->splits.front().partition, spectral.partition);
        out.report.spectral = std::move(spectral);
        ann.partition = &*gn_partition;
    }

    if (config.cliques) {
        CliqueSet cliques = maximum_cliques(full, config.include_trivial_cliques);
        if (cliques.size_of_maximum >= config.clique_min_size) {
            auto comps = connected_components(full);
            for (const auto& clique : cliques.cliques) {
                int where = -1;
                for (size_t c = 0; c < comps.size() && where < 0; ++c)
                    if (std::binary_search(comps[c].begin(), comps[c].end(), clique.front()))
                        where = static_cast<int>(c);
                out.report.component_of_clique.push_back(where);
            }
            out.report.max_cliques = std::move(cliques);
        }
    }

    if (config.fit) {
        DegreeDistribution dist = degree_distribution(analyzed);
        if (config.fit_method == FitMethod::LogLogLeastSquares) {
            PowerLawFit fit = fit_power_law_ls(dist, config.fit_k_min);
            out.report.fit_ls = fit;
            out.files.emplace_back(prefix + "_fit.csv", fit_csv(fit_table(dist, fit)));
        } else {
            std::vector<int> degrees;
            for (int i = 0; i < analyzed.node_count(); ++i) degrees.push_back(analyzed.degree(i));
            PowerLawFit fit = fit_power_law_mle(degrees, config.fit_k_min);
            out.report.fit_mle = fit;
            out.files.emplace_back(prefix + "_fit.csv", fit_csv(fit_table(dist, fit)));
        }
    }

    if (config.layout) {
        positions = force_layout(analyzed, config.seed, config.layout_iterations);
        ann.layout = &*positions;
    }

    out.files.emplace_back(prefix + ".graphml", to_graphml(analyzed, names, ann));
    return out;
}

} // namespace

PipelineConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open config '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) fail(errc::config_error, "config is not a JSON object");

    PipelineConfig config;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "input") config.input_path = value.get<std::string>();
            else if (key == "out_dir") config.out_dir = value.get<std::string>();
            else if (key == "layers") {
                config.layers.clear();
                for (const auto& token : value) {
                    auto kind = edge_kind_from_string(token.get<std::string>());
                    if (!kind) fail(errc::config_error, "unknown layer '" + token.get<std::string>() + "'");
                    config.layers.push_back(*kind);
                }
            } else if (key == "policy") {
                std::string p = value.get<std::string>();
                if (p == "reject") config.policy = DanglingPolicy::reject;
                else if (p == "drop") config.policy = DanglingPolicy::drop;
                else if (p == "materialize-stub") config.policy = DanglingPolicy::materialize_stub;
                else fail(errc::config_error, "unknown dangling policy '" + p + "'");
            } else if (key == "giant_component") config.giant_component_only = value.get<bool>();
            else if (key == "centrality") config.centrality = value.get<bool>();
            else if (key == "top") config.top_k = value.get<int>();
            else if (key == "communities") config.communities = value.get<bool>();
            else if (key == "cuts") config.cuts = value.get<int>();
            else if (key == "cliques") config.cliques = value.get<bool>();
            else if (key == "clique_min_size") config.clique_min_size = value.get<int>();
            else if (key == "include_trivial_cliques") config.include_trivial_cliques = value.get<bool>();
            else if (key == "fit") config.fit = value.get<bool>();
            else if (key == "fit_method") {
                std::string m = value.get<std::string>();
                if (m == "ls") config.fit_method = FitMethod::LogLogLeastSquares;
                else if (m == "mle") config.fit_method = FitMethod::MaximumLikelihood;
                else fail(errc::config_error, "unknown fit method '" + m + "'");
            } else if (key == "kmin") config.fit_k_min = value.get<int>();
            else if (key == "layout") config.layout = value.get<bool>();
            else if (key == "seed") {
                config.seed = value.get<std::uint64_t>();
                config.seed_set = true;
            } else if (key == "iters") config.layout_iterations = value.get<int>();
            else fail(errc::config_error, "unknown config key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            fail(errc::config_error, "config key '" + key + "': " + e.what());
        }
    }
    return config;
}

int run_pipeline(const PipelineConfig& config, std::ostream& log) {
    validate(config);
    if (!fs::exists(config.input_path))
        fail(errc::io_error, "input file '" + config.input_path + "' does not exist");

    auto records = load_records(config.input_path);
    auto [net, summary] = resolve(records, config.policy);
    log << "resolved " << net.node_count() << " nodes, " << net.total_edge_count() << " edges\n";

    fs::create_directories(config.out_dir);

    ReportBundle bundle;
    bundle.summary = summary;

    bool failed = false;
    for (EdgeKind kind : config.layers) {
        try {
            LayerArtifacts artifacts = analyze_layer(net, kind, config);
            for (const auto& [filename, content] : artifacts.files)
                write_file(fs::path(config.out_dir) / filename, content);
            bundle.layers.push_back(std::move(artifacts.report));
            log << "layer " << to_string(kind) << ": " << artifacts.files.size() << " artifact(s)\n";
        } catch (const Error& e) {
            failed = true;
            log << "layer " << to_string(kind) << " failed: " << e.what() << "\n";
        }
    }

    try {
        write_file(fs::path(config.out_dir) / "report.txt", render_report(bundle));
    } catch (const Error& e) {
        failed = true;
        log << "report not written: " << e.what() << "\n";
    }
    return failed ? 1 : 0;
}

} // namespace mplex
