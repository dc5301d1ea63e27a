#ifndef MPLEX_DETAIL_BRANDES_HPP
#define MPLEX_DETAIL_BRANDES_HPP

#include <algorithm>
#include <vector>

#include "mplex/graph.hpp"

namespace mplex::detail {

// Maps an unordered node pair to its position in LayerGraph::edges() order.
class EdgeIndexer {
public:
    explicit EdgeIndexer(const LayerGraph& g);

    int edge_count() const { return row_start_.back(); }
    int operator()(int u, int v) const;

private:
    const LayerGraph* g_;
    std::vector<int> row_start_;
};

// Splits sources into chunks whose boundaries depend only on the source
// count, accumulates each chunk into its own slot vector, then sums slots in
// chunk order. Result is therefore identical for any OpenMP thread count.
template <typename PassFn>
std::vector<double> accumulate_source_passes(int slots, int sources, PassFn&& pass) {
    const int chunk = std::max(32, (sources + 255) / 256);
    const int nchunks = std::max(1, (sources + chunk - 1) / chunk);
    std::vector<std::vector<double>> partial(
        static_cast<size_t>(nchunks), std::vector<double>(static_cast<size_t>(slots), 0.0));
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < nchunks; ++c) {
        const int lo = c * chunk;
        const int hi = std::min(sources, lo + chunk);
        for (int s = lo; s < hi; ++s) pass(s, partial[static_cast<size_t>(c)]);
    }
    std::vector<double> total(static_cast<size_t>(slots), 0.0);
    for (const auto& p : partial)
        for (int i = 0; i < slots; ++i) total[static_cast<size_t>(i)] += p[static_cast<size_t>(i)];
    return total;
}

// Single-source shortest-path pass; adds the source's dependency onto every
// other node into sink (ordered-pair convention, caller halves the sum).
void brandes_node_pass(const LayerGraph& g, int source, std::vector<double>& sink);

// Same pass accumulating per-edge dependencies, sink indexed by EdgeIndexer.
void brandes_edge_pass(const LayerGraph& g, const EdgeIndexer& index, int source,
                       std::vector<double>& sink);

} // namespace mplex::detail

#endif
