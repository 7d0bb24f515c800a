#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "plab/cli.hpp"

using namespace plab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    TempDir() {
        path = fs::temp_directory_path() /
               ("plab-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }

    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }

    std::string file(const std::string& name) const { return (path / name).string(); }

    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json run_to_json(ExperimentConfig cfg, const TempDir& dir, const std::string& name) {
    cfg.out = dir.file(name);
    REQUIRE(run_experiment(cfg) == 0);
    return Json::parse(slurp(cfg.out));
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out);
    out << content;
}

}  // namespace

TEST_CASE("partitions and tableaux round-trip through JSON", "[json]") {
    for (const auto& parts : std::vector<std::vector<int>>{{}, {1}, {4, 2, 1}}) {
        Partition p(parts);
        CHECK(partition_from_json(partition_json(p)) == p);
    }
    CHECK_THROWS_AS(partition_from_json(Json{{"a", 1}}), validation_error);
    CHECK_THROWS_AS(partition_from_json(Json::array({1, "x"})), validation_error);
    CHECK_THROWS_AS(partition_from_json(Json::array({1, 2})), validation_error);

    auto t = StandardTableau::from_rows({{1, 3, 4}, {2, 6}, {5}});
    CHECK(tableau_from_json(tableau_json(t)) == t);
    CHECK_THROWS_AS(tableau_from_json(Json::array({Json::array({1, 2}), 3})), validation_error);
    CHECK_THROWS_AS(tableau_from_json(Json::array({Json::array({1, 3})})), validation_error);

    MonotoneNumbering m{{{0, 0}, {0, 1}, {1, 0}}};
    auto back = numbering_from_json(numbering_json(m));
    CHECK(back == m);
    CHECK_THROWS_AS(numbering_from_json(Json(3)), validation_error);
}

TEST_CASE("measure emits weights in both formats", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "measure";
    cfg.n = 4;
    Json doc = run_to_json(cfg, dir, "measure.json");
    CHECK(doc["command"] == "measure");
    CHECK(doc["n"] == 4);
    CHECK(doc["weights"].size() == 5);
    CHECK(doc["weights"]["[3,1]"] == "3/8");
    CHECK(doc["total"] == "1/1");

    cfg.format = "csv";
    cfg.out = dir.file("measure.csv");
    REQUIRE(run_experiment(cfg) == 0);
    const std::string csv = slurp(cfg.out);
    CHECK(csv.rfind("partition,weight\n", 0) == 0);
    CHECK(csv.find("\"[3,1]\",3/8\n") != std::string::npos);
    CHECK(csv.find("\"[2,2]\",1/6\n") != std::string::npos);
}

TEST_CASE("sample emits replayable tableaux", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "sample";
    cfg.n = 6;
    cfg.trials = 3;
    Json doc = run_to_json(cfg, dir, "sample.json");
    CHECK(doc["exact_weights"] == true);
    CHECK(doc["seed"] == kDefaultSeed);
    REQUIRE(doc["samples"].size() == 3);
    for (const auto& s : doc["samples"]) {
        StandardTableau t = tableau_from_json(s["tableau"]);
        CHECK(t.size() == 6);
        CHECK(partition_from_json(s["shape"]) == t.shape());
    }
    Json again = run_to_json(cfg, dir, "sample2.json");
    CHECK(doc == again);

    cfg.format = "csv";
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
}

TEST_CASE("coherence and prefix-dist report exact values", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "coherence";
    cfg.n = 6;
    Json doc = run_to_json(cfg, dir, "coherence.json");
    CHECK(doc["holds"] == true);
    CHECK(doc["witness"].is_null());

    ExperimentConfig pd;
    pd.command = "prefix-dist";
    pd.shape = "[3,2]";
    pd.k = 2;
    Json dist = run_to_json(pd, dir, "prefix.json");
    CHECK(dist["distance_to_level"] == "1/10");
    CHECK(dist["weights"]["[[1,2]]"] == "3/5");
    CHECK(dist["weights"]["[[1],[2]]"] == "2/5");
}

TEST_CASE("plgraph covers the built-in and explicit graphs", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "plgraph";
    cfg.up_to = 3;
    cfg.emit_graph = dir.file("young.graph.json");
    Json young = run_to_json(cfg, dir, "young.json");
    CHECK(young["graph"] == "young");
    CHECK(young["holds"] == true);
    CHECK(young["masses"] == Json::array({"1", "1", "2", "6", "24"}));

    ExperimentConfig pas;
    pas.command = "plgraph";
    pas.pascal = true;
    pas.up_to = 5;
    Json pascal = run_to_json(pas, dir, "pascal.json");
    CHECK(pascal["holds"] == false);
    CHECK(pascal["witness"]["vertex"] == "2,0");
    CHECK(pascal["witness"]["expected"] == "3/10");
    CHECK(pascal["witness"]["actual"] == "1/4");
    CHECK(pascal["masses"] == Json::array({"1", "2", "6", "20"}));

    ExperimentConfig file_graph;
    file_graph.command = "plgraph";
    file_graph.graph = dir.file("young.graph.json");
    file_graph.up_to = 2;
    Json from_file = run_to_json(file_graph, dir, "fromfile.json");
    CHECK(from_file["holds"] == true);

    file_graph.pascal = true;
    CHECK_THROWS_AS(run_experiment(file_graph), validation_error);
}

TEST_CASE("numberings and density expose the poset bridge", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "numberings";
    cfg.n = 3;
    Json doc = run_to_json(cfg, dir, "numberings.json");
    CHECK(doc["count"] == 4);
    REQUIRE(doc["numberings"].size() == 4);
    auto z2 = lattice_z2();
    for (const auto& nj : doc["numberings"])
        CHECK(is_monotone_numbering(*z2, numbering_from_json(nj)));

    spit(dir.file("numbering.json"), numbering_json(numbering_from_json(doc["numberings"][1])).dump());
    ExperimentConfig den;
    den.command = "density";
    den.numbering_file = dir.file("numbering.json");
    den.ideal = "rows=0";
    Json density = run_to_json(den, dir, "density.json");
    CHECK(density["n"] == 3);
    CHECK(density["count"].get<long long>() >= 1);

    ExperimentConfig sampled;
    sampled.command = "density";
    sampled.n = 40;
    sampled.ideal = "whole";
    Json whole = run_to_json(sampled, dir, "density2.json");
    CHECK(whole["density"] == 1.0);
    CHECK(whole["n"] == 40);

    spit(dir.file("bad.json"), "[[0,1],[0,0]]");
    den.numbering_file = dir.file("bad.json");
    CHECK_THROWS_AS(run_experiment(den), validation_error);
}

TEST_CASE("transfer accepts inline and file tableaux", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "transfer";
    cfg.tableau = "[[1,2],[3,4]]";
    Json doc = run_to_json(cfg, dir, "transfer.json");
    CHECK(doc["output"] == Json::parse("[[1,3],[2]]"));
    CHECK(doc["shape_after"] == Json::parse("[2,1]"));

    spit(dir.file("t.json"), "[[1,3],[2]]");
    cfg.tableau = "@" + dir.file("t.json");
    Json from_file = run_to_json(cfg, dir, "transfer2.json");
    CHECK(from_file["output"] == Json::parse("[[1,2]]"));

    cfg.tableau = "[[1,2],";
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
    cfg.tableau = "@" + dir.file("missing.json");
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
}

TEST_CASE("qs-test reports pass at a comfortable size", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "qs-test";
    cfg.k = 2;
    cfg.n = 60;
    cfg.trials = 1000;
    Json doc = run_to_json(cfg, dir, "qs.json");
    CHECK(doc["pass"] == true);
    CHECK(doc["critical_1pct"] == 6.6349);
    CHECK(doc["counts"].size() == 2);
}

TEST_CASE("tp-check flags the documented counterexample", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "tp-check";
    cfg.coeffs = "1,1,2";
    cfg.order = 2;
    cfg.window = 8;
    Json doc = run_to_json(cfg, dir, "tp.json");
    CHECK(doc["totally_positive"] == false);
    CHECK(doc["witness"]["rows"] == Json::array({1, 2}));
    CHECK(doc["witness"]["value"] == "-1/1");
    REQUIRE(doc["coefficients"].size() == 8);
    CHECK(doc["coefficients"][3] == "0/1");

    cfg.coeffs = "exp";
    cfg.order = 3;
    Json clean = run_to_json(cfg, dir, "tp-exp.json");
    CHECK(clean["totally_positive"] == true);
    CHECK(clean["witness"].is_null());

    spit(dir.file("coeffs.json"), "[\"1\", \"1/2\", 3]");
    cfg.coeffs = "@" + dir.file("coeffs.json");
    cfg.order = 1;
    Json from_file = run_to_json(cfg, dir, "tp-file.json");
    CHECK(from_file["coefficients"][1] == "1/2");
    CHECK(from_file["coefficients"][2] == "3/1");

    cfg.coeffs = "1,x";
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
    cfg.coeffs = "";
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
}

TEST_CASE("thoma and chargf expand their parameterizations", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "thoma";
    cfg.alpha = "1";
    cfg.beta = "";
    cfg.gamma = "0";
    cfg.order = 4;
    Json doc = run_to_json(cfg, dir, "thoma.json");
    CHECK(doc["coefficients"] == Json::array({"1/1", "1/1", "0/1", "0/1", "0/1"}));

    cfg.alpha = "1/2";
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);

    ExperimentConfig gf;
    gf.command = "chargf";
    gf.chi = "1";
    gf.order = 5;
    Json chargf = run_to_json(gf, dir, "chargf.json");
    CHECK(chargf["coefficients"] ==
          Json::array({"1/1", "1/1", "1/2", "1/6", "1/24", "1/120"}));
}

TEST_CASE("statistics commands emit both formats", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "first-row";
    cfg.n = 100;
    cfg.trials = 5;
    Json doc = run_to_json(cfg, dir, "firstrow.json");
    CHECK(doc["per_trial"].size() == 5);
    CHECK(doc["mean_ratio"].get<double>() > 0.0);

    cfg.format = "csv";
    cfg.out = dir.file("firstrow.csv");
    REQUIRE(run_experiment(cfg) == 0);
    const std::string csv = slurp(cfg.out);
    CHECK(csv.rfind("trial,first_row,rows\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

    ExperimentConfig sub;
    sub.command = "sublinearity";
    sub.sizes = "25,100";
    sub.trials = 10;
    Json subdoc = run_to_json(sub, dir, "sub.json");
    REQUIRE(subdoc["mean_fraction"].size() == 2);
    CHECK(subdoc["mean_fraction"][1].get<double>() < subdoc["mean_fraction"][0].get<double>());
    CHECK(subdoc["strictly_decreasing"] == true);

    sub.sizes = "25,x";
    CHECK_THROWS_AS(run_experiment(sub), validation_error);
}

TEST_CASE("dispatch validates commands, formats, and caps", "[cli]") {
    ExperimentConfig cfg;
    cfg.command = "nonsense";
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
    cfg.command = "measure";
    cfg.n = 4;
    cfg.format = "yaml";
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
    cfg.format = "json";
    cfg.n = global_caps().enumeration + 1;
    CHECK_THROWS_AS(run_experiment(cfg), resource_limit_error);
    cfg.n = -1;
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
}

TEST_CASE("output lands atomically in the target directory", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "measure";
    cfg.n = 3;
    cfg.out = dir.file("out.json");
    spit(cfg.out, "stale");
    REQUIRE(run_experiment(cfg) == 0);
    CHECK(Json::parse(slurp(cfg.out))["n"] == 3);
    int entries = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        ++entries;
        CHECK(e.path().filename().string().find(".tmp.") == std::string::npos);
    }
    CHECK(entries == 1);

    cfg.out = (dir.path / "no-such-dir" / "out.json").string();
    CHECK_THROWS_AS(run_experiment(cfg), validation_error);
}

TEST_CASE("the selftest command reports all diagnostics", "[cli]") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.command = "selftest";
    cfg.out = dir.file("selftest.json");
    REQUIRE(run_experiment(cfg) == 0);
    Json doc = Json::parse(slurp(cfg.out));
    CHECK(doc["all_pass"] == true);
    CHECK(doc["items"].size() == 9);
}
