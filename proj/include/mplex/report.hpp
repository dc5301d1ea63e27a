#ifndef MPLEX_REPORT_HPP
#define MPLEX_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "mplex/centrality.hpp"
#include "mplex/clique.hpp"
#include "mplex/community.hpp"
#include "mplex/degree_stats.hpp"
#include "mplex/ingest.hpp"

namespace mplex {

struct ReportLayer {
    EdgeKind kind = EdgeKind::Work;
    int layer_nodes = 0;
    int layer_edges = 0;
    int analyzed_nodes = 0;
    bool used_giant_component = false;

    std::optional<RankedTable> centrality;
    std::optional<GNDendrogram> gn;
    std::optional<SpectralBisection> spectral;
    std::optional<PartitionComparison> gn_vs_spectral;

    // Cliques always come from the full layer; component_of_clique marks the
    // layer component (by connected_components order) each one lies in.
    std::optional<CliqueSet> max_cliques;
    std::vector<int> component_of_clique;

    std::optional<PowerLawFit> fit_ls;
    std::optional<PowerLawFit> fit_mle;

    bool has_analysis() const {
        return centrality || gn || spectral || max_cliques || fit_ls || fit_mle;
    }
};

struct ReportBundle {
    std::optional<IngestSummary> summary;
    std::vector<ReportLayer> layers;
};

// Plain-text report; every float printed with 3 decimals. Throws EmptyBundle
// when no layer carries any analysis.
std::string render_report(const ReportBundle& bundle);

} // namespace mplex

#endif
