#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mplex/ingest.hpp"
#include "mplex/layout.hpp"
#include "mplex/serialize.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mplex;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0, at = 0;
    while ((at = text.find(needle, at)) != std::string::npos) {
        ++count;
        at += needle.size();
    }
    return count;
}

std::map<PersonId, std::string> id_names(const LayerGraph& g) {
    std::map<PersonId, std::string> names;
    for (const auto& id : g.nodes()) names[id] = id;
    return names;
}

} // namespace

TEST_CASE("graphml has one element per node and edge") {
    auto g = oracle::make_graph(2, {{0, 1}});
    std::string xml = to_graphml(g, id_names(g));
    CHECK(count_occurrences(xml, "<node id=") == 2);
    CHECK(count_occurrences(xml, "<edge source=") == 1);
    CHECK(count_occurrences(xml, "<data key=\"kind\">work</data>") == 1);
}

TEST_CASE("partition annotation lands on every node") {
    auto g = oracle::make_graph(3, {{0, 1}, {1, 2}});
    Partition p = partition_from_blocks({{"n00", "n01"}, {"n02"}});
    ExportAnnotations ann;
    ann.partition = &p;
    std::string xml = to_graphml(g, id_names(g), ann);
    CHECK(count_occurrences(xml, "<data key=\"community\">0</data>") == 2);
    CHECK(count_occurrences(xml, "<data key=\"community\">1</data>") == 1);
}

TEST_CASE("export, reimport, export is byte identical") {
    auto g = oracle::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Partition p = partition_from_blocks({{"n00", "n01"}, {"n02", "n03"}});
    auto layout = force_layout(g, 4, 50);
    RankedTable table = ranked_table(g, 2);
    ExportAnnotations ann;
    ann.partition = &p;
    ann.centrality = &table;
    ann.layout = &layout;
    std::string first = to_graphml(g, id_names(g), ann);
    std::string second = write_graphml(parse_graphml(first));
    CHECK(first == second);
}

TEST_CASE("graphml escapes markup in names") {
    auto g = oracle::make_graph(2, {{0, 1}});
    std::map<PersonId, std::string> names = {{"n00", "A <&> \"Q\" 'B'"}, {"n01", "plain"}};
    std::string xml = to_graphml(g, names);
    CHECK(xml.find("A &lt;&amp;&gt; &quot;Q&quot; &apos;B&apos;") != std::string::npos);
    auto doc = parse_graphml(xml);
    CHECK(doc.nodes[0].data[0].second == "A <&> \"Q\" 'B'");
}

TEST_CASE("annotation mismatches are rejected") {
    auto g = oracle::make_graph(3, {{0, 1}, {1, 2}});
    Partition wrong = partition_from_blocks({{"n00", "n01"}});
    ExportAnnotations ann;
    ann.partition = &wrong;
    CHECK_ERRC(to_graphml(g, id_names(g), ann), errc::annotation_mismatch);

    auto layout = force_layout(oracle::make_graph(2, {{0, 1}}), 1, 10);
    ExportAnnotations ann2;
    ann2.layout = &layout;
    CHECK_ERRC(to_graphml(g, id_names(g), ann2), errc::annotation_mismatch);
}

TEST_CASE("multiplex graphml round-trips through the ingest CSV path") {
    std::ifstream in(fixture_path());
    REQUIRE(in.good());
    auto [net, _] = resolve(parse_profiles(in), DanglingPolicy::reject);

    auto doc = parse_graphml(to_graphml(net));
    std::ostringstream csv;
    csv << "source,target,kind\n";
    for (const auto& edge : doc.edges) csv << edge.source << "," << edge.target << "," << edge.data[0].second << "\n";
    std::istringstream csv_in(csv.str());
    auto [again, __] = resolve(parse_edge_csv(csv_in), DanglingPolicy::reject);

    CHECK(again.ids() == net.ids());
    for (EdgeKind kind : kAllEdgeKinds) CHECK(again.edge_indices(kind) == net.edge_indices(kind));
}

TEST_CASE("dot output counts statements and parses back") {
    auto g = oracle::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    std::string dot = to_dot(g, id_names(g));
    CHECK(count_occurrences(dot, "[label=") == 3);
    CHECK(count_occurrences(dot, " -- ") == 3);
    CHECK(dot.find("fillcolor") == std::string::npos);

    auto [nodes, edges] = parse_dot(dot);
    CHECK(nodes == std::vector<PersonId>{"n00", "n01", "n02"});
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == std::pair<PersonId, PersonId>{"n00", "n01"});

    Partition p = partition_from_blocks({{"n00", "n01"}, {"n02"}});
    ExportAnnotations ann;
    ann.partition = &p;
    std::string colored = to_dot(g, id_names(g), ann);
    CHECK(count_occurrences(colored, "fillcolor=") == 3);
    // width grows with degree
    CHECK(colored.find("width=0.30") != std::string::npos);
}

TEST_CASE("dot survives hostile display names") {
    auto g = oracle::make_graph(2, {{0, 1}});
    std::map<PersonId, std::string> names = {{"n00", "A -- \"B\" \\ C"}, {"n01", "x"}};
    auto [nodes, edges] = parse_dot(to_dot(g, names));
    CHECK(nodes == std::vector<PersonId>{"n00", "n01"});
    REQUIRE(edges.size() == 1);
    CHECK(edges[0] == std::pair<PersonId, PersonId>{"n00", "n01"});
}

TEST_CASE("centrality CSV has the exact contract header") {
    auto g = oracle::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto table = ranked_table(g, 2);
    std::string csv = centrality_csv(g, table);
    CHECK(csv.rfind("node,degree,betweenness,closeness,eigenvector\n", 0) == 0);
    std::istringstream in(csv);
    auto parsed = parse_centrality_csv(in);
    CHECK(parsed.size() == 3);
    CHECK(parsed.at("n00")[0] == 2.0);
}

TEST_CASE("partition CSV round-trips") {
    Partition p = partition_from_blocks({{"a", "b"}, {"c"}});
    std::string csv = partition_csv(p);
    CHECK(csv == "node,community\na,0\nb,0\nc,1\n");
    std::istringstream in(csv);
    Partition q = parse_partition_csv(in);
    CHECK(q.assignment == p.assignment);
    CHECK(q.community_sizes == p.community_sizes);
    CHECK(partition_csv(q) == csv);

    std::istringstream gap("node,community\na,0\nb,2\n");
    CHECK_ERRC(parse_partition_csv(gap), errc::malformed_record);
}

TEST_CASE("fit CSV round-trips at full precision") {
    std::vector<std::tuple<double, double, double>> rows = {
        {1.0, 0.6666666666666666, 0.6666666666666666}, {2.0, 0.25, 0.1666671234e-5}};
    std::string csv = fit_csv(rows);
    CHECK(csv.rfind("k,p_k,fitted\n", 0) == 0);
    std::istringstream in(csv);
    auto parsed = parse_fit_csv(in);
    REQUIRE(parsed.size() == 2);
    CHECK(std::get<1>(parsed[0]) == 0.6666666666666666);
    CHECK(std::get<2>(parsed[1]) == 0.1666671234e-5);
}

TEST_CASE("format_double survives the round trip") {
    for (double v : {0.0, 1.0, -1.5, 2.0 / 3.0, 1e-17, 123456789.123456789, 5e300}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}
