#ifndef MPLEX_SERIALIZE_HPP
#define MPLEX_SERIALIZE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mplex/centrality.hpp"
#include "mplex/community.hpp"
#include "mplex/degree_stats.hpp"
#include "mplex/graph.hpp"
#include "mplex/layout.hpp"

namespace mplex {

// Shortest representation that round-trips the exact double.
std::string format_double(double v);

struct DocNode {
    PersonId id;
    std::vector<std::pair<std::string, std::string>> data;  // key order as declared
};

struct DocEdge {
    PersonId source;
    PersonId target;
    std::vector<std::pair<std::string, std::string>> data;
};

struct GraphKey {
    std::string id;
    std::string domain;  // "node" or "edge"
    std::string type;    // graphml attr.type
    bool operator==(const GraphKey&) const = default;
};

struct GraphDocument {
    std::vector<GraphKey> keys;
    std::vector<DocNode> nodes;
    std::vector<DocEdge> edges;
};

// Canonical GraphML text; write_graphml(parse_graphml(x)) == x for our own
// output.
std::string write_graphml(const GraphDocument& doc);
GraphDocument parse_graphml(const std::string& text);

struct ExportAnnotations {
    const Partition* partition = nullptr;
    const RankedTable* centrality = nullptr;  // per-node score arrays aligned with the graph
    const LayoutResult* layout = nullptr;
};

std::string to_graphml(const LayerGraph& g, const std::map<PersonId, std::string>& names,
                       const ExportAnnotations& ann = {});
std::string to_graphml(const MultiplexNetwork& net);

// DOT with degree-proportional widths; community-indexed fill colors when a
// partition is attached.
std::string to_dot(const LayerGraph& g, const std::map<PersonId, std::string>& names,
                   const ExportAnnotations& ann = {});
std::pair<std::vector<PersonId>, std::vector<std::pair<PersonId, PersonId>>> parse_dot(
    const std::string& text);

// Fixed headers: node,degree,betweenness,closeness,eigenvector.
std::string centrality_csv(const LayerGraph& g, const RankedTable& table);
std::map<PersonId, std::array<double, kMetricCount>> parse_centrality_csv(std::istream& in);

// Fixed header: node,community.
std::string partition_csv(const Partition& p);
Partition parse_partition_csv(std::istream& in);

// Fixed header: k,p_k,fitted.
std::string fit_csv(const std::vector<std::tuple<double, double, double>>& rows);
std::vector<std::tuple<double, double, double>> parse_fit_csv(std::istream& in);

} // namespace mplex

#endif
