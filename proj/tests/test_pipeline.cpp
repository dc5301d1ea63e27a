#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mplex/pipeline.hpp"
#include "mplex/report.hpp"
#include "mplex/serialize.hpp"
#include "test_util.hpp"

using namespace mplex;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "mplex_cli_test";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(MPLEX_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    int raw = std::system(cmd.c_str());
    CliResult r;
    r.status = raw < 0 ? raw : WEXITSTATUS(raw);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("mplex_test_" + tag);
    fs::remove_all(dir);
    return dir;
}

PipelineConfig fixture_config(const fs::path& out_dir) {
    PipelineConfig config;
    config.input_path = fixture_path();
    config.out_dir = out_dir.string();
    config.layers = {EdgeKind::Alliance, EdgeKind::Work};
    config.seed = 7;
    config.seed_set = true;
    config.layout_iterations = 200;
    return config;
}

} // namespace

TEST_CASE("pipeline produces the full artifact set for each layer") {
    fs::path dir = fresh_dir("artifacts");
    std::ostringstream log;
    CHECK(run_pipeline(fixture_config(dir), log) == 0);

    for (const std::string prefix : {"alliance", "work"}) {
        CHECK(fs::exists(dir / (prefix + "_centrality.csv")));
        CHECK(fs::exists(dir / (prefix + "_communities_gn.csv")));
        CHECK(fs::exists(dir / (prefix + "_communities_fiedler.csv")));
        CHECK(fs::exists(dir / (prefix + "_fit.csv")));
        CHECK(fs::exists(dir / (prefix + ".graphml")));
    }
    CHECK(fs::exists(dir / "report.txt"));
    // no leftover temp files
    for (const auto& entry : fs::directory_iterator(dir))
        CHECK(entry.path().filename().string().front() != '.');
}

TEST_CASE("pipeline validates configuration before touching the filesystem") {
    fs::path dir = fresh_dir("badconfig");
    auto config = fixture_config(dir);
    config.cuts = 0;
    std::ostringstream log;
    CHECK_ERRC(run_pipeline(config, log), errc::config_error);
    CHECK(!fs::exists(dir));

    auto no_seed = fixture_config(fresh_dir("noseed"));
    no_seed.seed_set = false;
    CHECK_ERRC(run_pipeline(no_seed, log), errc::config_error);
}

TEST_CASE("pipeline reports missing input by path") {
    auto config = fixture_config(fresh_dir("missing"));
    config.input_path = "/nonexistent/records.jsonl";
    std::ostringstream log;
    try {
        run_pipeline(config, log);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::io_error);
        CHECK(std::string(e.what()).find("/nonexistent/records.jsonl") != std::string::npos);
    }
}

TEST_CASE("a failing layer does not disturb other layers' artifacts") {
    fs::path dir = fresh_dir("partial");
    auto config = fixture_config(dir);
    // the family layer's giant component is two nodes; the power-law fit
    // cannot find three support points and the layer fails
    config.layers = {EdgeKind::Alliance, EdgeKind::Family};
    std::ostringstream log;
    CHECK(run_pipeline(config, log) == 1);
    CHECK(log.str().find("family") != std::string::npos);
    CHECK(fs::exists(dir / "alliance_centrality.csv"));
    CHECK(fs::exists(dir / "report.txt"));
    CHECK(!fs::exists(dir / "family_centrality.csv"));

    std::ifstream gml(dir / "alliance.graphml");
    std::ostringstream buf;
    buf << gml.rdbuf();
    CHECK(!parse_graphml(buf.str()).nodes.empty());
}

TEST_CASE("report values match the per-analysis outputs verbatim") {
    fs::path dir = fresh_dir("verbatim");
    std::ostringstream log;
    REQUIRE(run_pipeline(fixture_config(dir), log) == 0);
    std::string report = slurp(dir / "report.txt");

    // the same library calls the report was built from
    auto records = load_records(fixture_path());
    auto [net, summary] = resolve(records);
    LayerGraph g = giant_component(layer(net, EdgeKind::Alliance));
    auto table = ranked_table(g, 5);
    auto gn = girvan_newman(g, 1);
    auto fit = fit_power_law_ls(degree_distribution(g), 1);

    std::string table_text = ranked_table_text(table);
    std::istringstream lines(table_text);
    std::string line;
    while (std::getline(lines, line)) CHECK(report.find(line) != std::string::npos);

    char gamma[64];
    std::snprintf(gamma, sizeof gamma, "%.3f", fit.gamma);
    CHECK(report.find(std::string("gamma = ") + gamma) != std::string::npos);

    CHECK(report.find(summary_table(summary)) != std::string::npos);
    CHECK(report.find("removed " + gn.splits[0].removed_edge.first + " -- " +
                      gn.splits[0].removed_edge.second) != std::string::npos);
}

TEST_CASE("render_report rejects an empty bundle") {
    ReportBundle bundle;
    CHECK_ERRC(render_report(bundle), errc::empty_bundle);
    bundle.layers.emplace_back();  // layer entry with no analyses attached
    CHECK_ERRC(render_report(bundle), errc::empty_bundle);
}

TEST_CASE("a centrality-only bundle renders one table with the four metric heads") {
    auto records = load_records(fixture_path());
    auto [net, _] = resolve(records);
    LayerGraph g = giant_component(layer(net, EdgeKind::Alliance));
    ReportLayer entry;
    entry.kind = EdgeKind::Alliance;
    entry.layer_nodes = 45;
    entry.layer_edges = 54;
    entry.analyzed_nodes = g.node_count();
    entry.used_giant_component = true;
    entry.centrality = ranked_table(g, 2);
    ReportBundle bundle;
    bundle.layers.push_back(std::move(entry));
    std::string report = render_report(bundle);
    for (const char* head : {"Degree", "Betweenness", "Closeness", "Eigencentrality"})
        CHECK(report.find(head) != std::string::npos);
    CHECK(report.find("girvan-newman") == std::string::npos);
}

TEST_CASE("config file parses and rejects unknown keys") {
    fs::path dir = fs::temp_directory_path() / "mplex_test_cfg";
    fs::create_directories(dir);
    fs::path good = dir / "good.json";
    std::ofstream(good) << R"({"input":"x.jsonl","out_dir":"out","layers":["work"],"cuts":3,)"
                        << R"("fit_method":"mle","seed":11,"giant_component":false})";
    auto config = config_from_json_file(good.string());
    CHECK(config.input_path == "x.jsonl");
    CHECK(config.layers == std::vector<EdgeKind>{EdgeKind::Work});
    CHECK(config.cuts == 3);
    CHECK(config.fit_method == FitMethod::MaximumLikelihood);
    CHECK(config.seed == 11);
    CHECK(config.seed_set);
    CHECK(!config.giant_component_only);

    fs::path bad = dir / "bad.json";
    std::ofstream(bad) << R"({"input":"x.jsonl","colour":"red"})";
    CHECK_ERRC(config_from_json_file(bad.string()), errc::config_error);
}

TEST_CASE("cli: help enumerates the documented flags") {
    CHECK(run_cli("--help").out.find("pipeline") != std::string::npos);
    auto centrality = run_cli("centrality --help");
    for (const std::string flag : {"--input", "--layer", "--metric", "--top", "--giant-component",
                                   "--full-layer", "--policy"})
        CHECK_MESSAGE(centrality.out.find(flag) != std::string::npos, flag);
    auto communities = run_cli("communities --help");
    for (const std::string flag : {"--method", "--cuts"})
        CHECK_MESSAGE(communities.out.find(flag) != std::string::npos, flag);
    auto cliques = run_cli("cliques --help");
    for (const std::string flag : {"--maximum-only", "--min-size", "--include-trivial"})
        CHECK_MESSAGE(cliques.out.find(flag) != std::string::npos, flag);
    auto fit = run_cli("fit --help");
    for (const std::string flag : {"--method", "--kmin", "--log"})
        CHECK_MESSAGE(fit.out.find(flag) != std::string::npos, flag);
    auto layout = run_cli("layout --help");
    for (const std::string flag : {"--seed", "--iters"})
        CHECK_MESSAGE(layout.out.find(flag) != std::string::npos, flag);
    auto pipeline = run_cli("pipeline --help");
    for (const std::string flag : {"--out-dir", "--config", "--seed"})
        CHECK_MESSAGE(pipeline.out.find(flag) != std::string::npos, flag);
}

TEST_CASE("cli: ingest normalizes records to canonical JSONL") {
    fs::path dir = fs::temp_directory_path() / "mplex_test_ingest";
    fs::create_directories(dir);
    auto r = run_cli("ingest --input " + fixture_path() + " -o " + (dir / "normalized.jsonl").string());
    CHECK(r.status == 0);
    CHECK(r.err.find("45 record(s)") != std::string::npos);
    std::ifstream in(dir / "normalized.jsonl");
    CHECK(parse_profiles(in).size() == 45);
}

TEST_CASE("cli: missing input names the path and exits nonzero") {
    auto r = run_cli("summary --input /no/such/file.jsonl");
    CHECK(r.status != 0);
    CHECK(r.err.find("/no/such/file.jsonl") != std::string::npos);
}

TEST_CASE("cli: communities with cuts=0 is a config error before any work") {
    auto r = run_cli("pipeline --input " + fixture_path() + " --out-dir /tmp/mplex_cuts0 --cuts 0 --seed 1");
    CHECK(r.status != 0);
    CHECK(r.err.find("ConfigError") != std::string::npos);
    CHECK(!fs::exists("/tmp/mplex_cuts0"));
}

TEST_CASE("cli: flags win over the config file") {
    fs::path dir = fs::temp_directory_path() / "mplex_test_flagwin";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::path cfg = dir / "config.json";
    std::ofstream(cfg) << R"({"input":")" << fixture_path() << R"(","out_dir":")"
                       << (dir / "from_config").string()
                       << R"(","layers":["alliance"],"seed":7,"iters":50,"cliques":false})";
    auto r = run_cli("pipeline --config " + cfg.string() + " --out-dir " + (dir / "from_flag").string());
    CHECK(r.status == 0);
    CHECK(fs::exists(dir / "from_flag" / "report.txt"));
    CHECK(!fs::exists(dir / "from_config"));
}

TEST_CASE("cli: analysis subcommands emit parseable artifacts") {
    fs::path dir = fs::temp_directory_path() / "mplex_test_cli_out";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string base = " --input " + fixture_path() + " --layer alliance ";

    auto c = run_cli("centrality" + base + "--metric all --top 3 -o " + (dir / "cent.csv").string());
    CHECK(c.status == 0);
    CHECK(c.out.find("Eigencentrality") != std::string::npos);
    std::ifstream cent(dir / "cent.csv");
    CHECK(parse_centrality_csv(cent).size() == 45);

    auto f = run_cli("fit" + base + "--method ls --kmin 1 --log -o " + (dir / "fit.csv").string());
    CHECK(f.status == 0);
    CHECK(f.out.find("gamma:") != std::string::npos);
    std::ifstream fit_file(dir / "fit.csv");
    CHECK(!parse_fit_csv(fit_file).empty());
    // the MLE path needs 50 samples; the 45-node fixture reports that plainly
    auto too_small = run_cli("fit" + base + "--method mle");
    CHECK(too_small.status != 0);
    CHECK(too_small.err.find("InsufficientSupport") != std::string::npos);

    auto l = run_cli("layout" + base + "--seed 3 --iters 50 -o " + (dir / "layout.graphml").string());
    CHECK(l.status == 0);
    std::string xml = slurp(dir / "layout.graphml");
    auto doc = parse_graphml(xml);
    CHECK(doc.nodes.size() == 45);
    CHECK(write_graphml(doc) == xml);

    auto g = run_cli("communities" + base + "--method girvan-newman --cuts 1 -o " +
                     (dir / "part.csv").string() + " --dot " + (dir / "part.dot").string());
    CHECK(g.status == 0);
    std::ifstream part(dir / "part.csv");
    CHECK(parse_partition_csv(part).block_count() == 2);
    auto [dot_nodes, dot_edges] = parse_dot(slurp(dir / "part.dot"));
    CHECK(dot_nodes.size() == 45);
    CHECK(dot_edges.size() == 54);

    auto r = run_cli("report --input " + fixture_path() + " --all --top 2 -o " + (dir / "report.txt").string());
    CHECK(r.status == 0);
    std::string report = slurp(dir / "report.txt");
    for (const char* kind : {"work", "alliance", "friendship", "family", "rivalry"})
        CHECK(report.find(std::string("layer: ") + kind) != std::string::npos);
}

TEST_CASE("cli: compare subcommand reports migrations") {
    fs::path dir = fs::temp_directory_path() / "mplex_test_compare";
    fs::create_directories(dir);
    std::ofstream(dir / "p.csv") << "node,community\na,0\nb,0\nc,0\nd,1\n";
    std::ofstream(dir / "q.csv") << "node,community\na,0\nb,0\nc,1\nd,1\n";
    auto r = run_cli("communities compare " + (dir / "p.csv").string() + " " + (dir / "q.csv").string());
    CHECK(r.status == 0);
    CHECK(r.out.find("migrations: 1") != std::string::npos);
}
