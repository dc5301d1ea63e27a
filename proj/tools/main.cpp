// mplex — multiplex relationship-network analysis toolkit.
//
// Subcommands: ingest, summary, centrality, communities, cliques, fit,
// layout, report, pipeline. Logs go to stderr; data goes to stdout or files.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mplex/centrality.hpp"
#include "mplex/clique.hpp"
#include "mplex/community.hpp"
#include "mplex/degree_stats.hpp"
#include "mplex/graph.hpp"
#include "mplex/ingest.hpp"
#include "mplex/layout.hpp"
#include "mplex/pipeline.hpp"
#include "mplex/report.hpp"
#include "mplex/serialize.hpp"

namespace {

using namespace mplex;

struct CommonArgs {
    std::string input;
    std::string layer_name = "alliance";
    std::string policy_name = "materialize-stub";
    bool giant = true;
};

void add_input_flags(CLI::App* cmd, CommonArgs& args, bool with_layer = true, bool required = true) {
    auto* opt = cmd->add_option("--input,-i", args.input,
                                "input records (JSONL profiles or source,target,kind CSV)");
    if (required) opt->required();
    if (with_layer)
        cmd->add_option("--layer", args.layer_name, "relationship layer: work|alliance|friendship|family|rivalry");
    cmd->add_option("--policy", args.policy_name, "dangling-reference policy: reject|drop|materialize-stub");
}

void add_component_flags(CLI::App* cmd, CommonArgs& args) {
    auto* gc = cmd->add_flag("--giant-component", "analyze the layer's giant component (default)");
    auto* full = cmd->add_flag("--full-layer", "analyze the whole layer including isolates");
    gc->excludes(full);
    cmd->callback([&args, gc, full]() {
        if (full->count()) args.giant = false;
        if (gc->count()) args.giant = true;
    });
}

DanglingPolicy parse_policy(const std::string& name) {
    if (name == "reject") return DanglingPolicy::reject;
    if (name == "drop") return DanglingPolicy::drop;
    if (name == "materialize-stub") return DanglingPolicy::materialize_stub;
    fail(errc::config_error, "unknown dangling policy '" + name + "'");
}

EdgeKind parse_layer(const std::string& name) {
    auto kind = edge_kind_from_string(name);
    if (!kind) fail(errc::config_error, "unknown layer '" + name + "'");
    return *kind;
}

MultiplexNetwork load_network(const CommonArgs& args, IngestSummary* summary_out = nullptr) {
    auto records = load_records(args.input);
    auto [net, summary] = resolve(records, parse_policy(args.policy_name));
    if (summary_out) *summary_out = summary;
    return net;
}

LayerGraph analysis_graph(const MultiplexNetwork& net, const CommonArgs& args) {
    LayerGraph full = layer(net, parse_layer(args.layer_name));
    return args.giant ? giant_component(full) : full;
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot write '" + path + "'");
    out << content;
}

int cmd_ingest(const CommonArgs& args, const std::string& out_path) {
    auto records = load_records(args.input);
    auto [net, summary] = resolve(records, parse_policy(args.policy_name));
    std::cerr << "parsed " << records.size() << " record(s); network has " << net.node_count()
              << " node(s), " << net.total_edge_count() << " edge(s)\n";
    for (const auto& d : summary.dangling_references)
        std::cerr << "dangling: " << d.source << " -> " << d.target << " (" << to_string(d.kind) << ")\n";
    if (!out_path.empty()) {
        std::ostringstream normalized;
        write_profiles(records, normalized);
        write_or_print(out_path, normalized.str());
    }
    return 0;
}

int cmd_summary(const CommonArgs& args) {
    IngestSummary summary;
    load_network(args, &summary);
    std::cout << summary_table(summary);
    return 0;
}

int cmd_centrality(const CommonArgs& args, const std::string& metric, int top,
                   const std::string& csv_path) {
    MultiplexNetwork net = load_network(args);
    LayerGraph g = analysis_graph(net, args);

    if (metric == "all") {
        RankedTable table = ranked_table(g, top);
        std::cout << ranked_table_text(table);
        if (!csv_path.empty()) write_or_print(csv_path, centrality_csv(g, table));
        return 0;
    }

    CentralityScores scores = [&] {
        if (metric == "degree") return degree_centrality(g);
        if (metric == "betweenness") return betweenness(g);
        if (metric == "closeness") return closeness(g);
        if (metric == "eigenvector") return eigencentrality(g);
        fail(errc::config_error, "unknown metric '" + metric + "'");
    }();

    std::vector<std::pair<PersonId, double>> rows;
    for (int i = 0; i < g.node_count(); ++i) rows.emplace_back(g.node(i), scores.values[static_cast<size_t>(i)]);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    rows.resize(std::min<size_t>(rows.size(), static_cast<size_t>(top)));
    size_t width = 4;
    for (const auto& [id, _] : rows) width = std::max(width, id.size());
    std::cout << metric_label(scores.metric) << " (" << scores.normalization << ")\n";
    std::ostringstream csv;
    csv << "node," << metric << "\n";
    for (const auto& [id, value] : rows) {
        std::string padded = id;
        padded.resize(width, ' ');
        char buf[64];
        if (scores.metric == Metric::Degree)
            std::snprintf(buf, sizeof buf, "%.0f", value);
        else
            std::snprintf(buf, sizeof buf, "%.3f", value);
        std::cout << "  " << padded << "  " << buf << "\n";
        csv << id << "," << format_double(value) << "\n";
    }
    if (!csv_path.empty()) write_or_print(csv_path, csv.str());
    return 0;
}

int cmd_communities(const CommonArgs& args, const std::string& method, int cuts,
                    const std::string& csv_path, const std::string& dot_path) {
    if (args.input.empty()) fail(errc::config_error, "no input file given (--input)");
    MultiplexNetwork net = load_network(args);
    LayerGraph full = layer(net, parse_layer(args.layer_name));
    LayerGraph g = args.giant ? giant_component(full) : full;

    auto print_partition = [&](const Partition& p) {
        if (!dot_path.empty()) {
            ExportAnnotations ann;
            ann.partition = &p;
            write_or_print(dot_path, to_dot(g, net.names_map(), ann));
        }
        std::cout << "blocks:";
        for (size_t i = 0; i < p.community_sizes.size(); ++i) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3f", p.fractions[i]);
            std::cout << " " << p.community_sizes[i] << " (" << buf << ")";
        }
        std::cout << "\n";
        if (g.node_count() != full.node_count()) {
            std::cout << "of full layer:";
            for (int s : p.community_sizes) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.3f",
                              static_cast<double>(s) / static_cast<double>(full.node_count()));
                std::cout << " " << buf;
            }
            std::cout << "\n";
        }
        if (!csv_path.empty()) write_or_print(csv_path, partition_csv(p));
    };

    if (method == "girvan-newman") {
        GNDendrogram gn = girvan_newman(g, cuts);
        for (size_t i = 0; i < gn.splits.size(); ++i)
            std::cout << "split " << (i + 1) << ": removed " << gn.splits[i].removed_edge.first
                      << " -- " << gn.splits[i].removed_edge.second << "\n";
        std::cout << "edges removed: " << gn.edges_removed_total << "\n";
        print_partition(gn.splits.back().partition);
    } else if (method == "fiedler") {
        SpectralBisection sb = fiedler_bisection(g);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", sb.fiedler_value);
        std::cout << "lambda_2: " << buf << "\n";
        if (sb.degenerate_spectrum) std::cerr << "warning: (near) degenerate lambda_2\n";
        print_partition(sb.partition);
    } else {
        fail(errc::config_error, "unknown method '" + method + "'");
    }
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    std::ifstream a(path_a), b(path_b);
    if (!a) fail(errc::io_error, "cannot open '" + path_a + "'");
    if (!b) fail(errc::io_error, "cannot open '" + path_b + "'");
    Partition p = parse_partition_csv(a);
    Partition q = parse_partition_csv(b);
    PartitionComparison cmp = compare_partitions(p, q);
    std::cout << "migrations: " << cmp.migrations << "\n";
    for (auto [pb, qb] : cmp.matched_blocks)
        std::cout << "matched: " << pb << " <-> " << qb << "\n";
    return 0;
}

int cmd_cliques(const CommonArgs& args, bool maximum_only, int min_size, bool include_trivial) {
    MultiplexNetwork net = load_network(args);
    // Cliques are read off the full layer; components are reported per clique.
    LayerGraph g = layer(net, parse_layer(args.layer_name));
    CliqueSet cs = maximum_only ? maximum_cliques(g, include_trivial) : maximal_cliques(g, include_trivial);

    auto comps = connected_components(g);
    auto component_of = [&](const PersonId& id) {
        for (size_t c = 0; c < comps.size(); ++c)
            if (std::binary_search(comps[c].begin(), comps[c].end(), id)) return static_cast<int>(c);
        return -1;
    };

    int shown = 0;
    for (const auto& clique : cs.cliques) {
        if (static_cast<int>(clique.size()) < min_size) continue;
        ++shown;
        std::cout << "[component " << (component_of(clique.front()) + 1) << "]";
        for (const auto& id : clique) std::cout << " " << id;
        std::cout << "\n";
    }
    std::cerr << shown << " clique(s), maximum size " << cs.size_of_maximum << "\n";

    CliqueSet maxes = maximum_only ? cs : maximum_cliques(g, include_trivial);
    if (maxes.cliques.size() >= 2) {
        std::cout << "overlap matrix (maximum cliques)\n";
        for (size_t i = 0; i < maxes.cliques.size(); ++i) {
            for (size_t j = 0; j < maxes.cliques.size(); ++j) {
                auto [count, _] = clique_overlap(maxes.cliques[i], maxes.cliques[j]);
                std::cout << (j ? " " : "") << count;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_fit(const CommonArgs& args, const std::string& method, int k_min, bool log_coords,
            bool log_bin, const std::string& csv_path) {
    MultiplexNetwork net = load_network(args);
    LayerGraph g = analysis_graph(net, args);
    DegreeDistribution dist = degree_distribution(g);

    PowerLawFit fit;
    if (method == "ls") {
        fit = log_bin ? fit_power_law_ls_points(log_binned(dist), k_min) : fit_power_law_ls(dist, k_min);
    } else if (method == "mle") {
        std::vector<int> degrees;
        for (int i = 0; i < g.node_count(); ++i) degrees.push_back(g.degree(i));
        fit = fit_power_law_mle(degrees, k_min);
    } else {
        fail(errc::config_error, "unknown fit method '" + method + "'");
    }

    char gamma[64], goodness[64];
    std::snprintf(gamma, sizeof gamma, "%.3f", fit.gamma);
    std::snprintf(goodness, sizeof goodness, "%.3f", fit.goodness);
    std::cout << "method: " << to_string(fit.method) << "\n";
    std::cout << "gamma: " << gamma << "\n";
    std::cout << (fit.method == FitMethod::LogLogLeastSquares ? "R^2: " : "KS: ") << goodness << "\n";
    std::cout << "k_min: " << fit.k_min << "\n";
    if (!csv_path.empty()) write_or_print(csv_path, fit_csv(fit_table(dist, fit, log_coords)));
    return 0;
}

int cmd_layout(const CommonArgs& args, std::uint64_t seed, int iters, const std::string& out_path) {
    MultiplexNetwork net = load_network(args);
    LayerGraph g = analysis_graph(net, args);
    LayoutResult result = force_layout(g, seed, iters);
    ExportAnnotations ann;
    ann.layout = &result;
    write_or_print(out_path, to_graphml(g, net.names_map(), ann));
    return 0;
}

int cmd_report(const CommonArgs& args, bool all_layers, std::vector<std::string> layer_names, int top,
               int cuts, const std::string& out_path) {
    IngestSummary summary;
    MultiplexNetwork net = load_network(args, &summary);

    std::vector<EdgeKind> kinds;
    if (all_layers) {
        for (EdgeKind kind : kAllEdgeKinds)
            if (net.edge_count(kind) > 0) kinds.push_back(kind);
    } else {
        if (layer_names.empty()) layer_names.push_back(args.layer_name);
        for (const auto& name : layer_names) kinds.push_back(parse_layer(name));
    }

    PipelineConfig config;
    config.top_k = top;
    config.cuts = cuts;
    config.giant_component_only = args.giant;
    config.layout = false;

    ReportBundle bundle;
    bundle.summary = summary;
    for (EdgeKind kind : kinds) {
        ReportLayer entry;
        entry.kind = kind;
        LayerGraph full = layer(net, kind);
        LayerGraph g = args.giant ? giant_component(full) : full;
        entry.layer_nodes = full.node_count();
        entry.layer_edges = full.edge_count();
        entry.analyzed_nodes = g.node_count();
        entry.used_giant_component = args.giant;
        try {
            entry.centrality = ranked_table(g, top);
            GNDendrogram gn = girvan_newman(g, cuts);
            SpectralBisection sb = fiedler_bisection(g);
            if (gn.splits.front().partition.block_count() == 2)
                entry.gn_vs_spectral = compare_partitions(gn.splits.front().partition, sb.partition);
            entry.gn = std::move(gn);
            entry.spectral = std::move(sb);
            CliqueSet cliques = maximum_cliques(full);
            auto comps = connected_components(full);
            for (const auto& clique : cliques.cliques)
                for (size_t c = 0; c < comps.size(); ++c)
                    if (std::binary_search(comps[c].begin(), comps[c].end(), clique.front())) {
                        entry.component_of_clique.push_back(static_cast<int>(c));
                        break;
                    }
            entry.max_cliques = std::move(cliques);
            entry.fit_ls = fit_power_law_ls(degree_distribution(g));
            try {
                std::vector<int> degrees;
                for (int i = 0; i < g.node_count(); ++i) degrees.push_back(g.degree(i));
                entry.fit_mle = fit_power_law_mle(degrees, 1);
            } catch (const Error&) {
                // InsufficientSupport / InvalidExponent: the LS fit stands alone
            }
        } catch (const Error& e) {
            std::cerr << "layer " << to_string(kind) << ": " << e.what() << "\n";
        }
        bundle.layers.push_back(std::move(entry));
    }
    write_or_print(out_path, render_report(bundle));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplex relationship-network analysis toolkit"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* ingest = app.add_subcommand("ingest", "parse and validate records, report diagnostics");
    std::string ingest_out;
    add_input_flags(ingest, args, false);
    ingest->add_option("-o,--out", ingest_out, "write normalized JSONL records here");

    auto* summary = app.add_subcommand("summary", "per-kind edge and giant-component tallies");
    add_input_flags(summary, args, false);

    auto* centrality = app.add_subcommand("centrality", "centrality rankings for one layer");
    std::string metric = "all";
    int top = 5;
    std::string centrality_csv_path;
    add_input_flags(centrality, args);
    add_component_flags(centrality, args);
    centrality->add_option("--metric", metric, "degree|betweenness|closeness|eigenvector|all");
    centrality->add_option("--top", top, "rows per metric");
    centrality->add_option("-o,--out", centrality_csv_path, "also write the full score table as CSV");

    auto* communities = app.add_subcommand("communities", "edge-removal or spectral partitioning");
    std::string method = "girvan-newman";
    int cuts = 1;
    std::string communities_csv_path;
    // --input stays optional at parse time so `communities compare` can run
    // without it; cmd_communities checks it by hand
    add_input_flags(communities, args, true, false);
    add_component_flags(communities, args);
    communities->add_option("--method", method, "girvan-newman|fiedler");
    communities->add_option("--cuts", cuts, "number of split events to record");
    communities->add_option("-o,--out", communities_csv_path, "write node,community CSV here");
    std::string communities_dot_path;
    communities->add_option("--dot", communities_dot_path,
                            "write DOT colored by community, node width by degree");

    auto* compare = communities->add_subcommand("compare", "count migrations between two partition CSVs");
    std::vector<std::string> compare_paths;
    compare->add_option("csvs", compare_paths, "two node,community CSV files")->expected(2);

    auto* cliques = app.add_subcommand("cliques", "maximal/maximum clique inventory (full layer)");
    bool maximum_only = false;
    bool include_trivial = false;
    int min_size = 2;
    add_input_flags(cliques, args);
    cliques->add_flag("--maximum-only", maximum_only, "only maximum-cardinality cliques");
    cliques->add_option("--min-size", min_size, "hide cliques smaller than this");
    cliques->add_flag("--include-trivial", include_trivial, "list isolated nodes as size-1 cliques");

    auto* fit = app.add_subcommand("fit", "power-law degree-distribution fit");
    std::string fit_method = "ls";
    int k_min = 1;
    bool log_coords = false;
    bool log_bin = false;
    std::string fit_csv_path;
    add_input_flags(fit, args);
    add_component_flags(fit, args);
    fit->add_option("--method", fit_method, "ls|mle");
    fit->add_option("--kmin", k_min, "smallest degree included in the fit");
    fit->add_flag("--log", log_coords, "emit the CSV table in log10 coordinates");
    fit->add_flag("--log-bin", log_bin, "least-squares fit on logarithmically binned frequencies");
    fit->add_option("-o,--out", fit_csv_path, "write k,p_k,fitted CSV here");

    auto* layout = app.add_subcommand("layout", "force-directed positions as GraphML");
    std::uint64_t seed = 0;
    int iters = 500;
    std::string layout_out;
    add_input_flags(layout, args);
    add_component_flags(layout, args);
    layout->add_option("--seed", seed, "placement seed")->required();
    layout->add_option("--iters", iters, "iterations");
    layout->add_option("-o,--out", layout_out, "output GraphML path");

    auto* report = app.add_subcommand("report", "full text report across layers");
    bool all_layers = false;
    std::vector<std::string> report_layers;
    int report_top = 5;
    int report_cuts = 1;
    std::string report_out;
    add_input_flags(report, args, false);
    add_component_flags(report, args);
    report->add_flag("--all", all_layers, "every layer that has edges");
    report->add_option("--layer", report_layers, "specific layer(s)");
    report->add_option("--top", report_top, "centrality rows per metric");
    report->add_option("--cuts", report_cuts, "girvan-newman split events");
    report->add_option("-o,--out", report_out, "output path");

    auto* pipeline = app.add_subcommand("pipeline", "ingest, analyze and export everything");
    PipelineConfig pconfig;
    std::string config_path;
    std::string pipeline_policy;
    std::vector<std::string> pipeline_layers;
    bool no_centrality = false, no_communities = false, no_cliques = false, no_fit = false,
         no_layout = false;
    auto* p_input = pipeline->add_option("--input,-i", pconfig.input_path, "input records");
    auto* p_out = pipeline->add_option("--out-dir", pconfig.out_dir, "artifact directory");
    auto* p_layers = pipeline->add_option("--layer", pipeline_layers, "layer(s) to analyze");
    auto* p_policy = pipeline->add_option("--policy", pipeline_policy, "reject|drop|materialize-stub");
    auto* p_gc = pipeline->add_flag("--giant-component", "analyze giant components (default)");
    auto* p_full = pipeline->add_flag("--full-layer", "analyze whole layers");
    p_gc->excludes(p_full);
    pipeline->add_flag("--no-centrality", no_centrality, "skip centrality");
    pipeline->add_flag("--no-communities", no_communities, "skip community detection");
    pipeline->add_flag("--no-cliques", no_cliques, "skip clique enumeration");
    pipeline->add_flag("--no-fit", no_fit, "skip power-law fitting");
    pipeline->add_flag("--no-layout", no_layout, "skip force layout");
    auto* p_top = pipeline->add_option("--top", pconfig.top_k, "centrality rows per metric");
    auto* p_cuts = pipeline->add_option("--cuts", pconfig.cuts, "girvan-newman split events");
    auto* p_min_size = pipeline->add_option("--min-size", pconfig.clique_min_size, "minimum clique size reported");
    std::string pipeline_fit_method;
    auto* p_fit_method = pipeline->add_option("--fit-method", pipeline_fit_method, "ls|mle");
    auto* p_kmin = pipeline->add_option("--kmin", pconfig.fit_k_min, "fit degree cutoff");
    std::uint64_t pipeline_seed = 0;
    auto* p_seed = pipeline->add_option("--seed", pipeline_seed, "layout seed");
    auto* p_iters = pipeline->add_option("--iters", pconfig.layout_iterations, "layout iterations");
    pipeline->add_option("--config", config_path, "JSON config file (flags win on conflict)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ingest->parsed()) return cmd_ingest(args, ingest_out);
        if (summary->parsed()) return cmd_summary(args);
        if (centrality->parsed()) return cmd_centrality(args, metric, top, centrality_csv_path);
        if (communities->parsed()) {
            if (compare->parsed()) return cmd_compare(compare_paths[0], compare_paths[1]);
            return cmd_communities(args, method, cuts, communities_csv_path, communities_dot_path);
        }
        if (cliques->parsed()) return cmd_cliques(args, maximum_only, min_size, include_trivial);
        if (fit->parsed()) return cmd_fit(args, fit_method, k_min, log_coords, log_bin, fit_csv_path);
        if (layout->parsed()) return cmd_layout(args, seed, iters, layout_out);
        if (report->parsed())
            return cmd_report(args, all_layers, report_layers, report_top, report_cuts, report_out);
        if (pipeline->parsed()) {
            PipelineConfig config;
            if (!config_path.empty()) config = config_from_json_file(config_path);
            if (p_input->count()) config.input_path = pconfig.input_path;
            if (p_out->count()) config.out_dir = pconfig.out_dir;
            if (p_layers->count()) {
                config.layers.clear();
                for (const auto& name : pipeline_layers) config.layers.push_back(parse_layer(name));
            }
            if (p_policy->count()) config.policy = parse_policy(pipeline_policy);
            if (p_gc->count()) config.giant_component_only = true;
            if (p_full->count()) config.giant_component_only = false;
            if (no_centrality) config.centrality = false;
            if (no_communities) config.communities = false;
            if (no_cliques) config.cliques = false;
            if (no_fit) config.fit = false;
            if (no_layout) config.layout = false;
            if (p_top->count()) config.top_k = pconfig.top_k;
            if (p_cuts->count()) config.cuts = pconfig.cuts;
            if (p_min_size->count()) config.clique_min_size = pconfig.clique_min_size;
            if (p_fit_method->count())
                config.fit_method = pipeline_fit_method == "mle" ? FitMethod::MaximumLikelihood
                                                                 : FitMethod::LogLogLeastSquares;
            if (p_kmin->count()) config.fit_k_min = pconfig.fit_k_min;
            if (p_seed->count()) {
                config.seed = pipeline_seed;
                config.seed_set = true;
            }
            if (p_iters->count()) config.layout_iterations = pconfig.layout_iterations;
            return run_pipeline(config, std::cerr);
        }
    } catch (const mplex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
