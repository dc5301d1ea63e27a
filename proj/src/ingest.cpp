#include "mplex/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace mplex {

namespace {

using nlohmann::json;

ProfileRecord record_from_json(const json& j, int line_no) {
    auto malformed = [line_no](const std::string& why) -> void {
        fail(errc::malformed_record, "line " + std::to_string(line_no) + ": " + why);
    };

    if (!j.is_object()) malformed("record is not an object");
    for (const auto& [key, _] : j.items()) {
        if (key != "id" && key != "name" && key != "url" && key != "relations")
            malformed("unknown field '" + key + "'");
    }
    if (!j.contains("id") || !j["id"].is_string()) malformed("missing string field 'id'");
    if (!j.contains("name") || !j["name"].is_string()) malformed("missing string field 'name'");

    ProfileRecord rec;
    rec.id = j["id"].get<std::string>();
    rec.name = j["name"].get<std::string>();
    if (rec.id.empty()) malformed("empty id");
    if (j.contains("url")) {
        if (!j["url"].is_string()) malformed("'url' must be a string");
        rec.url = j["url"].get<std::string>();
    }
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) malformed("'relations' must be an array");
        for (const auto& r : j["relations"]) {
            if (!r.is_object() || !r.contains("target") || !r.contains("kind") ||
                !r["target"].is_string() || !r["kind"].is_string())
                malformed("relation entries need string 'target' and 'kind'");
            for (const auto& [key, _] : r.items())
                if (key != "target" && key != "kind")
                    malformed("unknown relation field '" + key + "'");
            std::string kind_token = r["kind"].get<std::string>();
            auto kind = edge_kind_from_string(kind_token);
            if (!kind)
                fail(errc::unknown_relation_kind,
                     "line " + std::to_string(line_no) + ": '" + kind_token + "'");
            PersonId target = r["target"].get<std::string>();
            if (target == rec.id) malformed("relation targets its own record");
            if (target.empty()) malformed("empty relation target");
            rec.relations.push_back({std::move(target), *kind});
        }
    }
    return rec;
}

} // namespace

std::vector<ProfileRecord> parse_profiles(std::istream& in) {
    std::vector<ProfileRecord> records;
    std::set<PersonId> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            fail(errc::malformed_record, "line " + std::to_string(line_no) + ": invalid JSON");
        ProfileRecord rec = record_from_json(j, line_no);
        if (!seen.insert(rec.id).second) fail(errc::duplicate_id, "'" + rec.id + "'");
        records.push_back(std::move(rec));
    }
    return records;
}

void write_profiles(const std::vector<ProfileRecord>& records, std::ostream& out) {
    for (const auto& rec : records) {
        json j;
        j["id"] = rec.id;
        j["name"] = rec.name;
        if (!rec.url.empty()) j["url"] = rec.url;
        json rels = json::array();
        for (const auto& r : rec.relations)
            rels.push_back({{"target", r.target}, {"kind", to_string(r.kind)}});
        j["relations"] = std::move(rels);
        out << j.dump() << "\n";
    }
}

std::vector<ProfileRecord> parse_edge_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) fail(errc::malformed_record, "empty CSV input");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "source,target,kind")
        fail(errc::malformed_record, "line 1: expected header 'source,target,kind'");

    // Record per distinct id, relations attached to the source side.
    std::map<PersonId, ProfileRecord> by_id;
    auto touch = [&](const PersonId& id) -> ProfileRecord& {
        auto [it, inserted] = by_id.try_emplace(id);
        if (inserted) {
            it->second.id = id;
            it->second.name = id;
        }
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string source, target, kind_token;
        if (!std::getline(ls, source, ',') || !std::getline(ls, target, ',') ||
            !std::getline(ls, kind_token))
            fail(errc::malformed_record, "line " + std::to_string(line_no) + ": expected 3 fields");
        auto kind = edge_kind_from_string(kind_token);
        if (!kind)
            fail(errc::unknown_relation_kind,
                 "line " + std::to_string(line_no) + ": '" + kind_token + "'");
        if (source == target)
            fail(errc::malformed_record, "line " + std::to_string(line_no) + ": self edge");
        if (source.empty() || target.empty())
            fail(errc::malformed_record, "line " + std::to_string(line_no) + ": empty id");
        touch(source).relations.push_back({target, *kind});
        touch(target);
    }
    std::vector<ProfileRecord> records;
    records.reserve(by_id.size());
    for (auto& [_, rec] : by_id) records.push_back(std::move(rec));
    return records;
}

std::vector<ProfileRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open '" + path + "'");
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
        in.get();
        c = in.peek();
    }
    if (c == '{') return parse_profiles(in);
    return parse_edge_csv(in);
}

std::pair<MultiplexNetwork, IngestSummary> resolve(const std::vector<ProfileRecord>& records,
                                                   DanglingPolicy policy) {
    std::vector<std::pair<PersonId, std::string>> nodes;
    std::set<PersonId> known;
    for (const auto& rec : records) {
        nodes.emplace_back(rec.id, rec.name);
        known.insert(rec.id);
    }

    std::vector<DanglingRef> dangling;
    std::set<PersonId> stubs;
    std::vector<std::tuple<PersonId, PersonId, EdgeKind>> edges;
    for (const auto& rec : records) {
        for (const auto& rel : rec.relations) {
            if (!known.count(rel.target)) {
                switch (policy) {
                    case DanglingPolicy::reject:
                        fail(errc::dangling_reference,
                             "'" + rec.id + "' -> '" + rel.target + "' (" + to_string(rel.kind) + ")");
                    case DanglingPolicy::drop:
                        dangling.push_back({rec.id, rel.target, rel.kind});
                        continue;
                    case DanglingPolicy::materialize_stub:
                        dangling.push_back({rec.id, rel.target, rel.kind});
                        stubs.insert(rel.target);
                        break;
                }
            }
            edges.emplace_back(rec.id, rel.target, rel.kind);
        }
    }
    for (const auto& id : stubs) nodes.emplace_back(id, id);

    MultiplexNetwork net = build_network(nodes, edges);
    IngestSummary summary = summarize(net);
    summary.dangling_references = std::move(dangling);
    return {std::move(net), std::move(summary)};
}

IngestSummary summarize(const MultiplexNetwork& net) {
    IngestSummary s;
    s.node_count = net.node_count();
    for (EdgeKind kind : kAllEdgeKinds) {
        s.edges_per_kind[kind] = net.edge_count(kind);
        if (net.node_count() == 0) {
            s.giant_component_per_kind[kind] = 0;
        } else {
            auto comps = connected_components(layer(net, kind));
            s.giant_component_per_kind[kind] = comps.empty() ? 0 : static_cast<int>(comps.front().size());
        }
    }
    return s;
}

std::string summary_table(const IngestSummary& summary) {
    std::ostringstream out;
    out << "nodes: " << summary.node_count << "\n";
    out << "kind        edges  giant-component\n";
    int total = 0;
    for (EdgeKind kind : kAllEdgeKinds) {
        std::string name = to_string(kind);
        name.resize(10, ' ');
        std::string edges = std::to_string(summary.edges_per_kind.at(kind));
        out << name << "  " << std::string(5 - std::min<size_t>(5, edges.size()), ' ') << edges
            << "  " << summary.giant_component_per_kind.at(kind) << "\n";
        total += summary.edges_per_kind.at(kind);
    }
    out << "total edges: " << total << "\n";
    if (!summary.dangling_references.empty()) {
        out << "dangling references: " << summary.dangling_references.size() << "\n";
        for (const auto& d : summary.dangling_references)
            out << "  " << d.source << " -> " << d.target << " (" << to_string(d.kind) << ")\n";
    }
    return out.str();
}

} // namespace mplex
