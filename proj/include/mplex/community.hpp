#ifndef MPLEX_COMMUNITY_HPP
#define MPLEX_COMMUNITY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mplex/graph.hpp"

namespace mplex {

struct Partition {
    std::map<PersonId, int> assignment;   // node -> dense community index
    std::vector<int> community_sizes;
    std::vector<double> fractions;        // size / n

    int block_count() const { return static_cast<int>(community_sizes.size()); }
    std::vector<std::vector<PersonId>> blocks() const;
};

// Blocks get dense indices ordered by size descending, ties by smallest
// contained id.
Partition partition_from_blocks(const std::vector<std::vector<PersonId>>& blocks);

// Unnormalized shortest-path counts over unordered pairs, aligned with
// g.edges(). Per-source passes run in parallel with a thread-count-independent
// reduction.
std::vector<double> edge_betweenness(const LayerGraph& g);

struct GnSplit {
    std::pair<PersonId, PersonId> removed_edge;  // the removal that caused the split
    Partition partition;
};

struct GNDendrogram {
    std::vector<GnSplit> splits;
    int edges_removed_total = 0;
};

// Repeatedly removes the max-betweenness edge (ties: lexicographically
// smallest endpoint pair) and records a dendrogram entry at every component
// split, until `stop` splits happened.
GNDendrogram girvan_newman(const LayerGraph& g, int stop);

struct SpectralBisection {
    double fiedler_value = 0.0;
    std::map<PersonId, double> fiedler_vector;  // sign-fixed: first nonzero entry (by id) >= 0
    Partition partition;                        // block 0 = non-negative block
    bool degenerate_spectrum = false;           // lambda2 multiplicity > 1 (reported, not fatal)
};

// Laplacian L = D - A, Fiedler pair by dense symmetric eigendecomposition,
// sign partition with zeros joining the non-negative block.
SpectralBisection fiedler_bisection(const LayerGraph& g, double tol = 1e-8);

struct PartitionComparison {
    int migrations = 0;
    std::vector<std::pair<int, int>> matched_blocks;  // (p block, q block)
};

// Matches blocks to maximize total overlap (exact for 2x2, greedy beyond) and
// counts nodes whose matched block differs.
PartitionComparison compare_partitions(const Partition& p, const Partition& q);

} // namespace mplex

#endif
