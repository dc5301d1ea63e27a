#include "mplex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace mplex {

const char* to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Work: return "work";
        case EdgeKind::Alliance: return "alliance";
        case EdgeKind::Friendship: return "friendship";
        case EdgeKind::Family: return "family";
        case EdgeKind::Rivalry: return "rivalry";
    }
    return "?";
}

std::optional<EdgeKind> edge_kind_from_string(const std::string& token) {
    for (EdgeKind k : kAllEdgeKinds)
        if (token == to_string(k)) return k;
    return std::nullopt;
}

LayerGraph::LayerGraph(EdgeKind kind, std::vector<PersonId> nodes,
                       const std::vector<std::pair<int, int>>& edges)
    : kind_(kind), nodes_(std::move(nodes)) {
    for (size_t i = 1; i < nodes_.size(); ++i)
        if (!(nodes_[i - 1] < nodes_[i]))
            fail(errc::config_error, "layer nodes must be strictly ascending by id");
    adj_.assign(nodes_.size(), {});
    const int n = node_count();
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::unknown_endpoint, "edge index out of range");
        if (u == v) fail(errc::self_loop, "self loop at index " + std::to_string(u));
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    int deg_sum = 0;
    for (const auto& nbrs : adj_) deg_sum += static_cast<int>(nbrs.size());
    edge_count_ = deg_sum / 2;
}

int LayerGraph::index_of(const PersonId& id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
    if (it == nodes_.end() || *it != id) return -1;
    return static_cast<int>(it - nodes_.begin());
}

int LayerGraph::require(const PersonId& id) const {
    int i = index_of(id);
    if (i < 0) fail(errc::unknown_node, "no node '" + id + "' in graph");
    return i;
}

bool LayerGraph::adjacent(int i, int j) const {
    const auto& nbrs = adj_[static_cast<size_t>(i)];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::vector<std::pair<int, int>> LayerGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

MultiplexNetwork::MultiplexNetwork(std::vector<PersonId> ids, std::vector<std::string> names,
                                   std::array<std::vector<std::pair<int, int>>, kEdgeKindCount> layers)
    : ids_(std::move(ids)), names_(std::move(names)), layers_(std::move(layers)) {
    if (ids_.size() != names_.size()) fail(errc::config_error, "ids and names differ in length");
    for (size_t i = 1; i < ids_.size(); ++i)
        if (!(ids_[i - 1] < ids_[i])) fail(errc::config_error, "network ids must be strictly ascending");
}

int MultiplexNetwork::index_of(const PersonId& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

int MultiplexNetwork::total_edge_count() const {
    int total = 0;
    for (const auto& l : layers_) total += static_cast<int>(l.size());
    return total;
}

std::map<PersonId, std::string> MultiplexNetwork::names_map() const {
    std::map<PersonId, std::string> out;
    for (size_t i = 0; i < ids_.size(); ++i) out[ids_[i]] = names_[i];
    return out;
}

MultiplexNetwork build_network(const std::vector<std::pair<PersonId, std::string>>& nodes,
                               const std::vector<std::tuple<PersonId, PersonId, EdgeKind>>& edges) {
    std::vector<std::pair<PersonId, std::string>> sorted_nodes = nodes;
    std::sort(sorted_nodes.begin(), sorted_nodes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    sorted_nodes.erase(std::unique(sorted_nodes.begin(), sorted_nodes.end(),
                                   [](const auto& a, const auto& b) { return a.first == b.first; }),
                       sorted_nodes.end());

    std::vector<PersonId> ids;
    std::vector<std::string> names;
    ids.reserve(sorted_nodes.size());
    names.reserve(sorted_nodes.size());
    for (auto& [id, name] : sorted_nodes) {
        if (id.empty()) fail(errc::unknown_endpoint, "empty PersonId in node list");
        ids.push_back(id);
        names.push_back(name);
    }

    auto index_of = [&](const PersonId& id) {
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        if (it == ids.end() || *it != id) return -1;
        return static_cast<int>(it - ids.begin());
    };

    std::array<std::set<std::pair<int, int>>, kEdgeKindCount> layer_sets;
    for (const auto& [a, b, kind] : edges) {
        if (a == b) fail(errc::self_loop, "self loop on '" + a + "'");
        int u = index_of(a);
        int v = index_of(b);
        if (u < 0) fail(errc::unknown_endpoint, "edge references missing node '" + a + "'");
        if (v < 0) fail(errc::unknown_endpoint, "edge references missing node '" + b + "'");
        if (u > v) std::swap(u, v);
        layer_sets[static_cast<size_t>(static_cast<int>(kind))].insert({u, v});
    }

    std::array<std::vector<std::pair<int, int>>, kEdgeKindCount> layers;
    for (size_t k = 0; k < layer_sets.size(); ++k)
        layers[k].assign(layer_sets[k].begin(), layer_sets[k].end());

    return MultiplexNetwork(std::move(ids), std::move(names), std::move(layers));
}

LayerGraph layer(const MultiplexNetwork& net, EdgeKind kind) {
    return LayerGraph(kind, net.ids(), net.edge_indices(kind));
}

namespace {

// Component index lists in discovery-from-smallest-id order.
std::vector<std::vector<int>> component_index_sets(const LayerGraph& g) {
    const int n = g.node_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<size_t>(start)] >= 0) continue;
        std::vector<int> members;
        std::queue<int> q;
        comp[static_cast<size_t>(start)] = static_cast<int>(comps.size());
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            members.push_back(u);
            for (int w : g.neighbors(u)) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = static_cast<int>(comps.size());
                    q.push(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    // Size descending; discovery order already breaks ties by smallest id.
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return comps;
}

} // namespace

std::vector<std::vector<PersonId>> connected_components(const LayerGraph& g) {
    std::vector<std::vector<PersonId>> out;
    for (const auto& members : component_index_sets(g)) {
        std::vector<PersonId> ids;
        ids.reserve(members.size());
        for (int i : members) ids.push_back(g.node(i));
        out.push_back(std::move(ids));
    }
    return out;
}

LayerGraph giant_component(const LayerGraph& g) {
    if (g.node_count() == 0) fail(errc::empty_graph, "giant_component of empty graph");
    auto comps = component_index_sets(g);
    const std::vector<int>& keep = comps.front();

    std::vector<int> remap(static_cast<size_t>(g.node_count()), -1);
    std::vector<PersonId> nodes;
    nodes.reserve(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        remap[static_cast<size_t>(keep[i])] = static_cast<int>(i);
        nodes.push_back(g.node(keep[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);
    return LayerGraph(g.kind(), std::move(nodes), edges);
}

int degree(const LayerGraph& g, const PersonId& v) { return g.degree(g.require(v)); }

std::map<PersonId, int> degree_sequence(const LayerGraph& g) {
    std::map<PersonId, int> out;
    for (int i = 0; i < g.node_count(); ++i) out[g.node(i)] = g.degree(i);
    return out;
}

std::map<int, int> neighbor_degree_histogram(const LayerGraph& g, const PersonId& v) {
    int i = g.require(v);
    std::map<int, int> hist;
    for (int w : g.neighbors(i)) hist[g.degree(w)] += 1;
    return hist;
}

} // namespace mplex
