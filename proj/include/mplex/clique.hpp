#ifndef MPLEX_CLIQUE_HPP
#define MPLEX_CLIQUE_HPP

#include <map>
#include <utility>
#include <vector>

#include "mplex/graph.hpp"

namespace mplex {

struct CliqueSet {
    // Node lists sorted ascending; cliques ordered by size descending, then
    // lexicographically.
    std::vector<std::vector<PersonId>> cliques;
    int size_of_maximum = 0;
    // How many maximum cliques contain each node (nodes in none are absent).
    std::map<PersonId, int> membership_counts;
};

// Exact maximal-clique enumeration (pivoting branch and bound). Size-1
// cliques (isolated nodes) are listed only when include_trivial is set.
CliqueSet maximal_cliques(const LayerGraph& g, bool include_trivial = false);

// The maximum-cardinality subset of the maximal cliques.
CliqueSet maximum_cliques(const LayerGraph& g, bool include_trivial = false);

// (intersection size, intersection / max(|a|,|b|)).
std::pair<int, double> clique_overlap(const std::vector<PersonId>& a, const std::vector<PersonId>& b);

} // namespace mplex

#endif
