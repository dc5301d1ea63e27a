#ifndef MPLEX_GRAPH_HPP
#define MPLEX_GRAPH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mplex/error.hpp"

namespace mplex {

// Opaque person token. Ordering is plain lexicographic; every deterministic
// tie-break in the toolkit reduces to this.
using PersonId = std::string;

enum class EdgeKind : int { Work = 0, Alliance = 1, Friendship = 2, Family = 3, Rivalry = 4 };

inline constexpr int kEdgeKindCount = 5;
inline constexpr std::array<EdgeKind, kEdgeKindCount> kAllEdgeKinds = {
    EdgeKind::Work, EdgeKind::Alliance, EdgeKind::Friendship, EdgeKind::Family, EdgeKind::Rivalry};

const char* to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(const std::string& token);

// One relationship layer as a simple undirected graph. Nodes are kept sorted
// by PersonId and addressed by dense index; adjacency lists are sorted, have
// no self loops and no duplicates.
class LayerGraph {
public:
    LayerGraph(EdgeKind kind, std::vector<PersonId> nodes,
               const std::vector<std::pair<int, int>>& edges);

    EdgeKind kind() const { return kind_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<PersonId>& nodes() const { return nodes_; }
    const PersonId& node(int i) const { return nodes_[static_cast<size_t>(i)]; }

    // Dense index of an id, or -1 when absent.
    int index_of(const PersonId& id) const;
    // Same, but throws unknown_node.
    int require(const PersonId& id) const;

    const std::vector<int>& neighbors(int i) const { return adj_[static_cast<size_t>(i)]; }
    bool adjacent(int i, int j) const;
    int degree(int i) const { return static_cast<int>(adj_[static_cast<size_t>(i)].size()); }

    // All edges as (u, v) index pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    EdgeKind kind_;
    std::vector<PersonId> nodes_;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Node registry plus the five typed edge layers. Immutable once built.
class MultiplexNetwork {
public:
    MultiplexNetwork(std::vector<PersonId> ids, std::vector<std::string> names,
                     std::array<std::vector<std::pair<int, int>>, kEdgeKindCount> layers);

    int node_count() const { return static_cast<int>(ids_.size()); }
    const std::vector<PersonId>& ids() const { return ids_; }
    const std::string& name_of(int i) const { return names_[static_cast<size_t>(i)]; }
    bool has_node(const PersonId& id) const { return index_of(id) >= 0; }
    int index_of(const PersonId& id) const;

    const std::vector<std::pair<int, int>>& edge_indices(EdgeKind kind) const {
        return layers_[static_cast<size_t>(static_cast<int>(kind))];
    }
    int edge_count(EdgeKind kind) const {
        return static_cast<int>(edge_indices(kind).size());
    }
    int total_edge_count() const;

    std::map<PersonId, std::string> names_map() const;

private:
    std::vector<PersonId> ids_;          // sorted ascending
    std::vector<std::string> names_;     // parallel to ids_
    std::array<std::vector<std::pair<int, int>>, kEdgeKindCount> layers_;  // u < v, sorted
};

MultiplexNetwork build_network(const std::vector<std::pair<PersonId, std::string>>& nodes,
                               const std::vector<std::tuple<PersonId, PersonId, EdgeKind>>& edges);

// Extracts one layer. Every network node is present, including isolates.
LayerGraph layer(const MultiplexNetwork& net, EdgeKind kind);

// Components sorted by size descending, ties by smallest contained PersonId.
// Each component is a sorted list of PersonIds.
std::vector<std::vector<PersonId>> connected_components(const LayerGraph& g);

// Induced subgraph on the largest component (ties by smallest contained id).
LayerGraph giant_component(const LayerGraph& g);

int degree(const LayerGraph& g, const PersonId& v);
std::map<PersonId, int> degree_sequence(const LayerGraph& g);

// Bin k -> number of v's neighbors whose degree is k.
std::map<int, int> neighbor_degree_histogram(const LayerGraph& g, const PersonId& v);

} // namespace mplex

#endif
