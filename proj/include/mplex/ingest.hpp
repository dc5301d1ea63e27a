#ifndef MPLEX_INGEST_HPP
#define MPLEX_INGEST_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mplex/graph.hpp"

namespace mplex {

struct Relation {
    PersonId target;
    EdgeKind kind;

    bool operator==(const Relation&) const = default;
};

struct ProfileRecord {
    PersonId id;
    std::string name;
    std::string url;  // optional, empty when absent
    std::vector<Relation> relations;

    bool operator==(const ProfileRecord&) const = default;
};

enum class DanglingPolicy { reject, drop, materialize_stub };

struct DanglingRef {
    PersonId source;
    PersonId target;
    EdgeKind kind;
};

struct IngestSummary {
    int node_count = 0;
    std::map<EdgeKind, int> edges_per_kind;
    std::map<EdgeKind, int> giant_component_per_kind;
    std::vector<DanglingRef> dangling_references;
};

// One JSON object per line: {"id":..., "name":..., "url":..., "relations":[{"target":...,"kind":...}]}.
// Records come back in input order. Unknown fields, duplicate ids, unknown
// relation kinds and self-targeting relations are rejected.
std::vector<ProfileRecord> parse_profiles(std::istream& in);

// Inverse of parse_profiles for valid record lists (round-trips exactly).
void write_profiles(const std::vector<ProfileRecord>& records, std::ostream& out);

// Plain edge list with header "source,target,kind"; nodes are inferred and
// named after their ids.
std::vector<ProfileRecord> parse_edge_csv(std::istream& in);

// Reads either format, sniffing JSONL by a leading '{'.
std::vector<ProfileRecord> load_records(const std::string& path);

std::pair<MultiplexNetwork, IngestSummary> resolve(const std::vector<ProfileRecord>& records,
                                                   DanglingPolicy policy = DanglingPolicy::materialize_stub);

IngestSummary summarize(const MultiplexNetwork& net);

// Human-readable per-kind tally table (Fig. 1/Fig. 2 style numbers).
std::string summary_table(const IngestSummary& summary);

} // namespace mplex

#endif
