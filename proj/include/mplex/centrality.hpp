#ifndef MPLEX_CENTRALITY_HPP
#define MPLEX_CENTRALITY_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mplex/graph.hpp"

namespace mplex {

enum class Metric : int { Degree = 0, Betweenness = 1, Closeness = 2, Eigenvector = 3 };

inline constexpr int kMetricCount = 4;
inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::Degree, Metric::Betweenness, Metric::Closeness, Metric::Eigenvector};

// Table 1 uses these as column heads.
const char* metric_label(Metric m);

struct CentralityScores {
    Metric metric;
    std::vector<double> values;  // aligned with LayerGraph::nodes()
    std::string normalization;

    double at(const LayerGraph& g, const PersonId& id) const { return values[static_cast<size_t>(g.require(id))]; }
};

// Raw degree counts, matching Table 1's integer entries.
CentralityScores degree_centrality(const LayerGraph& g);

// Brandes accumulation over per-source BFS passes, normalized by
// (n-1)(n-2)/2. Pair passes run in parallel; the reduction order is fixed by
// problem size, so results do not depend on the thread count.
CentralityScores betweenness(const LayerGraph& g);

// C(v) = (n-1) / sum of BFS distances. Whole graph must be connected.
CentralityScores closeness(const LayerGraph& g);

// Principal eigenvector of A, power iteration on A + I, entries >= 0,
// Euclidean norm 1, residual ||Ax - lambda x|| <= tol.
CentralityScores eigencentrality(const LayerGraph& g, double tol = 1e-10, int max_iter = 10000);

struct RankedTable {
    int k = 0;
    // top[metric] = up to k (node, score) rows, score descending, ties by id.
    std::array<std::vector<std::pair<PersonId, double>>, kMetricCount> top;
    // Full per-node scores (aligned with the graph) for CSV export.
    std::array<std::vector<double>, kMetricCount> scores;
};

RankedTable ranked_table(const LayerGraph& g, int k);

// Formats one RankedTable as an aligned text block, Table-1 shaped.
std::string ranked_table_text(const RankedTable& table);

} // namespace mplex

#endif
