#include "mplex/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace mplex {

namespace {

std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string fraction_list(const std::vector<int>& sizes, int denom) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i) out << ", ";
        out << fmt3(static_cast<double>(sizes[i]) / static_cast<double>(denom));
    }
    out << "]";
    return out.str();
}

std::string size_list(const std::vector<int>& sizes) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i) out << ", ";
        out << sizes[i];
    }
    out << "]";
    return out.str();
}

void render_layer(std::ostringstream& out, const ReportLayer& layer) {
    std::string title = std::string("layer: ") + to_string(layer.kind);
    out << title << "\n" << std::string(title.size(), '-') << "\n";
    out << "nodes: " << layer.layer_nodes << ", edges: " << layer.layer_edges;
    if (layer.used_giant_component)
        out << "; analyzed subgraph: giant component, " << layer.analyzed_nodes << " nodes ("
            << fmt3(static_cast<double>(layer.analyzed_nodes) / static_cast<double>(layer.layer_nodes))
            << " of layer)";
    else
        out << "; analyzed subgraph: full layer";
    out << "\n";

    if (layer.centrality) {
        out << "\ntop centrality (k = " << layer.centrality->k << ")\n";
        out << ranked_table_text(*layer.centrality);
    }

    if (layer.gn) {
        out << "\ngirvan-newman (" << layer.gn->splits.size() << " split(s), "
            << layer.gn->edges_removed_total << " edge(s) removed)\n";
        for (size_t i = 0; i < layer.gn->splits.size(); ++i) {
            const auto& split = layer.gn->splits[i];
            out << "split " << (i + 1) << ": removed " << split.removed_edge.first << " -- "
                << split.removed_edge.second << " -> sizes " << size_list(split.partition.community_sizes)
                << ", fractions " << fraction_list(split.partition.community_sizes, layer.analyzed_nodes);
            if (layer.analyzed_nodes != layer.layer_nodes)
                out << "; of full layer "
                    << fraction_list(split.partition.community_sizes, layer.layer_nodes);
            out << "\n";
        }
    }

    if (layer.spectral) {
        out << "\nfiedler bisection\n";
        out << "lambda_2 = " << fmt3(layer.spectral->fiedler_value) << ", blocks "
            << size_list(layer.spectral->partition.community_sizes) << ", fractions "
            << fraction_list(layer.spectral->partition.community_sizes, layer.analyzed_nodes);
        if (layer.analyzed_nodes != layer.layer_nodes)
            out << "; of full layer "
                << fraction_list(layer.spectral->partition.community_sizes, layer.layer_nodes);
        out << "\n";
        if (layer.spectral->degenerate_spectrum)
            out << "warning: lambda_2 is (near) degenerate; first eigenvector in deterministic order used\n";
        if (layer.gn_vs_spectral)
            out << "gn first cut vs fiedler: " << layer.gn_vs_spectral->migrations << " node(s) migrate\n";
    }

    if (layer.max_cliques) {
        const auto& cs = *layer.max_cliques;
        out << "\nmaximum cliques (" << cs.cliques.size() << " of size " << cs.size_of_maximum
            << ", on the full layer)\n";
        for (size_t i = 0; i < cs.cliques.size(); ++i) {
            out << "  #" << (i + 1);
            if (i < layer.component_of_clique.size())
                out << " [component " << (layer.component_of_clique[i] + 1) << "]";
            for (const auto& id : cs.cliques[i]) out << " " << id;
            out << "\n";
        }
        if (cs.cliques.size() >= 2) {
            out << "pairwise overlap\n";
            for (size_t i = 0; i < cs.cliques.size(); ++i)
                for (size_t j = i + 1; j < cs.cliques.size(); ++j) {
                    auto [count, fraction] = clique_overlap(cs.cliques[i], cs.cliques[j]);
                    out << "  #" << (i + 1) << " & #" << (j + 1) << ": " << count << " nodes ("
                        << fmt3(fraction) << ")\n";
                }
            std::vector<PersonId> mutual = cs.cliques.front();
            for (size_t i = 1; i < cs.cliques.size(); ++i) {
                std::vector<PersonId> next;
                std::set_intersection(mutual.begin(), mutual.end(), cs.cliques[i].begin(),
                                      cs.cliques[i].end(), std::back_inserter(next));
                mutual = std::move(next);
            }
            out << "mutual intersection: " << mutual.size() << " node(s)";
            for (const auto& id : mutual) out << " " << id;
            out << "\n";
        }
        if (!cs.membership_counts.empty()) {
            out << "membership counts:";
            for (const auto& [id, count] : cs.membership_counts) out << " " << id << "=" << count;
            out << "\n";
        }
    }

    if (layer.fit_ls || layer.fit_mle) {
        out << "\npower-law fit\n";
        if (layer.fit_ls)
            out << "ls:  gamma = " << fmt3(layer.fit_ls->gamma) << ", R^2 = " << fmt3(layer.fit_ls->goodness)
                << ", k_min = " << layer.fit_ls->k_min << "\n";
        if (layer.fit_mle)
            out << "mle: gamma = " << fmt3(layer.fit_mle->gamma) << ", KS = "
                << fmt3(layer.fit_mle->goodness) << ", k_min = " << layer.fit_mle->k_min << "\n";
    }
}

} // namespace

std::string render_report(const ReportBundle& bundle) {
    bool any = false;
    for (const auto& layer : bundle.layers) any = any || layer.has_analysis();
    if (!any) fail(errc::empty_bundle, "no analysis results to report");

    std::ostringstream out;
    out << "multiplex analysis report\n";
    out << "=========================\n";
    if (bundle.summary) {
        out << "\ninput summary\n";
        out << summary_table(*bundle.summary);
    }
    for (const auto& layer : bundle.layers) {
        out << "\n";
        render_layer(out, layer);
    }
    return out.str();
}

} // namespace mplex
