#include "mplex/serialize.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <sstream>

namespace mplex {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string xml_unescape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size();) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        auto expect = [&](const char* entity, char value) {
            size_t len = std::string(entity).size();
            if (s.compare(i, len, entity) == 0) {
                out += value;
                i += len;
                return true;
            }
            return false;
        };
        if (!expect("&amp;", '&') && !expect("&lt;", '<') && !expect("&gt;", '>') &&
            !expect("&quot;", '"') && !expect("&apos;", '\''))
            out += s[i++];
    }
    return out;
}

// Value of attribute `name="..."` inside one tag line; empty if absent.
std::string tag_attr(const std::string& line, const std::string& name) {
    std::string needle = name + "=\"";
    size_t at = line.find(needle);
    if (at == std::string::npos) return {};
    size_t start = at + needle.size();
    size_t end = line.find('"', start);
    if (end == std::string::npos) return {};
    return xml_unescape(line.substr(start, end - start));
}

std::string trimmed(const std::string& line) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    size_t b = line.find_last_not_of(" \t\r");
    return line.substr(a, b - a + 1);
}

} // namespace

std::string write_graphml(const GraphDocument& doc) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    for (const auto& key : doc.keys)
        out << "  <key id=\"" << xml_escape(key.id) << "\" for=\"" << key.domain
            << "\" attr.name=\"" << xml_escape(key.id) << "\" attr.type=\"" << key.type << "\"/>\n";
    out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (const auto& node : doc.nodes) {
        if (node.data.empty()) {
            out << "    <node id=\"" << xml_escape(node.id) << "\"/>\n";
            continue;
        }
        out << "    <node id=\"" << xml_escape(node.id) << "\">\n";
        for (const auto& [key, value] : node.data)
            out << "      <data key=\"" << xml_escape(key) << "\">" << xml_escape(value) << "</data>\n";
        out << "    </node>\n";
    }
    for (const auto& edge : doc.edges) {
        if (edge.data.empty()) {
            out << "    <edge source=\"" << xml_escape(edge.source) << "\" target=\""
                << xml_escape(edge.target) << "\"/>\n";
            continue;
        }
        out << "    <edge source=\"" << xml_escape(edge.source) << "\" target=\""
            << xml_escape(edge.target) << "\">\n";
        for (const auto& [key, value] : edge.data)
            out << "      <data key=\"" << xml_escape(key) << "\">" << xml_escape(value) << "</data>\n";
        out << "    </edge>\n";
    }
    out << "  </graph>\n";
    out << "</graphml>\n";
    return out.str();
}

GraphDocument parse_graphml(const std::string& text) {
    GraphDocument doc;
    std::istringstream in(text);
    std::string raw;
    DocNode* open_node = nullptr;
    DocEdge* open_edge = nullptr;
    while (std::getline(in, raw)) {
        std::string line = trimmed(raw);
        if (line.rfind("<key ", 0) == 0) {
            doc.keys.push_back({tag_attr(line, "id"), tag_attr(line, "for"), tag_attr(line, "attr.type")});
        } else if (line.rfind("<node ", 0) == 0) {
            doc.nodes.push_back({tag_attr(line, "id"), {}});
            open_node = line.find("/>") == std::string::npos ? &doc.nodes.back() : nullptr;
            open_edge = nullptr;
        } else if (line.rfind("<edge ", 0) == 0) {
            doc.edges.push_back({tag_attr(line, "source"), tag_attr(line, "target"), {}});
            open_edge = line.find("/>") == std::string::npos ? &doc.edges.back() : nullptr;
            open_node = nullptr;
        } else if (line.rfind("<data ", 0) == 0) {
            size_t open = line.find('>');
            size_t close = line.rfind("</data>");
            if (open == std::string::npos || close == std::string::npos || close < open)
                fail(errc::malformed_record, "unparseable data element: " + line);
            std::string key = tag_attr(line.substr(0, open + 1), "key");
            std::string value = xml_unescape(line.substr(open + 1, close - open - 1));
            if (open_node)
                open_node->data.emplace_back(key, value);
            else if (open_edge)
                open_edge->data.emplace_back(key, value);
            else
                fail(errc::malformed_record, "data element outside node or edge");
        } else if (line == "</node>") {
            open_node = nullptr;
        } else if (line == "</edge>") {
            open_edge = nullptr;
        }
    }
    return doc;
}

namespace {

void check_annotations(const LayerGraph& g, const ExportAnnotations& ann) {
    const int n = g.node_count();
    if (ann.partition) {
        if (static_cast<int>(ann.partition->assignment.size()) != n)
            fail(errc::annotation_mismatch, "partition covers a different node set");
        for (const auto& [id, _] : ann.partition->assignment)
            if (g.index_of(id) < 0)
                fail(errc::annotation_mismatch, "partition references unknown node '" + id + "'");
    }
    if (ann.centrality) {
        for (const auto& scores : ann.centrality->scores)
            if (static_cast<int>(scores.size()) != n)
                fail(errc::annotation_mismatch, "centrality scores do not match node count");
    }
    if (ann.layout && static_cast<int>(ann.layout->positions.size()) != n)
        fail(errc::annotation_mismatch, "layout positions do not match node count");
}

const std::string& name_of(const std::map<PersonId, std::string>& names, const PersonId& id) {
    auto it = names.find(id);
    if (it == names.end()) fail(errc::annotation_mismatch, "no display name for '" + id + "'");
    return it->second;
}

} // namespace

std::string to_graphml(const LayerGraph& g, const std::map<PersonId, std::string>& names,
                       const ExportAnnotations& ann) {
    check_annotations(g, ann);
    GraphDocument doc;
    doc.keys.push_back({"name", "node", "string"});
    if (ann.partition) doc.keys.push_back({"community", "node", "int"});
    if (ann.centrality) {
        doc.keys.push_back({"dc", "node", "double"});
        doc.keys.push_back({"bc", "node", "double"});
        doc.keys.push_back({"cc", "node", "double"});
        doc.keys.push_back({"ec", "node", "double"});
    }
    if (ann.layout) {
        doc.keys.push_back({"x", "node", "double"});
        doc.keys.push_back({"y", "node", "double"});
    }
    doc.keys.push_back({"kind", "edge", "string"});

    for (int i = 0; i < g.node_count(); ++i) {
        DocNode node{g.node(i), {}};
        node.data.emplace_back("name", name_of(names, g.node(i)));
        if (ann.partition)
            node.data.emplace_back("community", std::to_string(ann.partition->assignment.at(g.node(i))));
        if (ann.centrality) {
            static constexpr std::array<const char*, kMetricCount> keys = {"dc", "bc", "cc", "ec"};
            for (int m = 0; m < kMetricCount; ++m)
                node.data.emplace_back(keys[static_cast<size_t>(m)],
                                       format_double(ann.centrality->scores[static_cast<size_t>(m)][static_cast<size_t>(i)]));
        }
        if (ann.layout) {
            node.data.emplace_back("x", format_double(ann.layout->positions[static_cast<size_t>(i)].x));
            node.data.emplace_back("y", format_double(ann.layout->positions[static_cast<size_t>(i)].y));
        }
        doc.nodes.push_back(std::move(node));
    }
    for (auto [u, v] : g.edges())
        doc.edges.push_back({g.node(u), g.node(v), {{"kind", to_string(g.kind())}}});
    return write_graphml(doc);
}

std::string to_graphml(const MultiplexNetwork& net) {
    GraphDocument doc;
    doc.keys.push_back({"name", "node", "string"});
    doc.keys.push_back({"kind", "edge", "string"});
    for (int i = 0; i < net.node_count(); ++i)
        doc.nodes.push_back({net.ids()[static_cast<size_t>(i)], {{"name", net.name_of(i)}}});
    for (EdgeKind kind : kAllEdgeKinds)
        for (auto [u, v] : net.edge_indices(kind))
            doc.edges.push_back({net.ids()[static_cast<size_t>(u)], net.ids()[static_cast<size_t>(v)],
                                 {{"kind", to_string(kind)}}});
    return write_graphml(doc);
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string to_dot(const LayerGraph& g, const std::map<PersonId, std::string>& names,
                   const ExportAnnotations& ann) {
    check_annotations(g, ann);
    static constexpr std::array<const char*, 12> palette = {
        "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
        "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3dcf", "#ffff99", "#b15928"};
    std::ostringstream out;
    out << "graph G {\n";
    if (ann.partition) out << "  node [style=filled];\n";
    for (int i = 0; i < g.node_count(); ++i) {
        char width[32];
        std::snprintf(width, sizeof width, "%.2f", 0.2 + 0.05 * g.degree(i));
        out << "  \"" << dot_quote(g.node(i)) << "\" [label=\"" << dot_quote(name_of(names, g.node(i)))
            << "\", width=" << width;
        if (ann.partition) {
            int block = ann.partition->assignment.at(g.node(i));
            out << ", fillcolor=\"" << palette[static_cast<size_t>(block) % palette.size()] << "\"";
        }
        out << "];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  \"" << dot_quote(g.node(u)) << "\" -- \"" << dot_quote(g.node(v)) << "\";\n";
    out << "}\n";
    return out.str();
}

std::pair<std::vector<PersonId>, std::vector<std::pair<PersonId, PersonId>>> parse_dot(
    const std::string& text) {
    std::vector<PersonId> nodes;
    std::vector<std::pair<PersonId, PersonId>> edges;
    std::istringstream in(text);
    std::string raw;
    auto quoted = [](const std::string& s, size_t from, size_t* end) -> std::string {
        size_t a = s.find('"', from);
        if (a == std::string::npos) return {};
        std::string value;
        size_t i = a + 1;
        while (i < s.size() && s[i] != '"') {
            if (s[i] == '\\' && i + 1 < s.size()) ++i;
            value += s[i++];
        }
        *end = i + 1;
        return value;
    };
    while (std::getline(in, raw)) {
        std::string line = trimmed(raw);
        if (line.empty() || line[0] != '"') continue;
        size_t after = 0;
        std::string first = quoted(line, 0, &after);
        // an edge line has `--` between the quoted endpoints, before any
        // attribute bracket (labels may legitimately contain dashes)
        size_t bracket = line.find('[', after);
        size_t dash = line.find("--", after);
        if (dash == std::string::npos || (bracket != std::string::npos && dash > bracket)) {
            nodes.push_back(first);
        } else {
            size_t ignored = 0;
            std::string second = quoted(line, dash, &ignored);
            edges.emplace_back(first, second);
        }
    }
    return {std::move(nodes), std::move(edges)};
}

std::string centrality_csv(const LayerGraph& g, const RankedTable& table) {
    std::ostringstream out;
    out << "node,degree,betweenness,closeness,eigenvector\n";
    for (int i = 0; i < g.node_count(); ++i) {
        out << g.node(i);
        for (int m = 0; m < kMetricCount; ++m)
            out << "," << format_double(table.scores[static_cast<size_t>(m)][static_cast<size_t>(i)]);
        out << "\n";
    }
    return out.str();
}

std::map<PersonId, std::array<double, kMetricCount>> parse_centrality_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(errc::malformed_record, "empty centrality CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "node,degree,betweenness,closeness,eigenvector")
        fail(errc::malformed_record, "bad centrality CSV header");
    std::map<PersonId, std::array<double, kMetricCount>> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string id, field;
        if (!std::getline(ls, id, ',')) fail(errc::malformed_record, "line " + std::to_string(line_no));
        std::array<double, kMetricCount> vals{};
        for (int m = 0; m < kMetricCount; ++m) {
            if (!std::getline(ls, field, ','))
                fail(errc::malformed_record, "line " + std::to_string(line_no) + ": expected 5 fields");
            vals[static_cast<size_t>(m)] = std::stod(field);
        }
        out[id] = vals;
    }
    return out;
}

std::string partition_csv(const Partition& p) {
    std::ostringstream out;
    out << "node,community\n";
    for (const auto& [id, block] : p.assignment) out << id << "," << block << "\n";
    return out.str();
}

Partition parse_partition_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(errc::malformed_record, "empty partition CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "node,community") fail(errc::malformed_record, "bad partition CSV header");
    Partition p;
    int max_block = -1;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t comma = line.rfind(',');
        if (comma == std::string::npos || comma == 0)
            fail(errc::malformed_record, "line " + std::to_string(line_no) + ": expected node,community");
        PersonId id = line.substr(0, comma);
        int block = std::stoi(line.substr(comma + 1));
        if (block < 0) fail(errc::malformed_record, "line " + std::to_string(line_no) + ": negative community");
        if (!p.assignment.emplace(id, block).second)
            fail(errc::duplicate_id, "'" + id + "' appears twice in partition CSV");
        max_block = std::max(max_block, block);
    }
    p.community_sizes.assign(static_cast<size_t>(max_block) + 1, 0);
    for (const auto& [_, block] : p.assignment) p.community_sizes[static_cast<size_t>(block)] += 1;
    for (int s : p.community_sizes) {
        if (s == 0) fail(errc::malformed_record, "partition CSV has a gap in community indices");
        p.fractions.push_back(static_cast<double>(s) / static_cast<double>(p.assignment.size()));
    }
    return p;
}

std::string fit_csv(const std::vector<std::tuple<double, double, double>>& rows) {
    std::ostringstream out;
    out << "k,p_k,fitted\n";
    for (const auto& [k, p, fitted] : rows)
        out << format_double(k) << "," << format_double(p) << "," << format_double(fitted) << "\n";
    return out.str();
}

std::vector<std::tuple<double, double, double>> parse_fit_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(errc::malformed_record, "empty fit CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "k,p_k,fitted") fail(errc::malformed_record, "bad fit CSV header");
    std::vector<std::tuple<double, double, double>> out;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string a, b, c;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
            fail(errc::malformed_record, "fit CSV row needs 3 fields");
        out.emplace_back(std::stod(a), std::stod(b), std::stod(c));
    }
    return out;
}

} // namespace mplex
