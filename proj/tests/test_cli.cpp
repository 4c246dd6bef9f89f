// End-to-end checks of the installed binary. The test runner exports
// MLLCD_BIN; every case shells out through popen and inspects exit status,
// stdout bytes, and on-disk artifacts.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_bin() {
    const char* bin = std::getenv("MLLCD_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "MLLCD_BIN must point at the mllcd binary");
    return bin;
}

std::string data_path(const std::string& name) {
    return std::string(MLLCD_TEST_DATA_DIR) + "/" + name;
}

struct RunResult {
    int code;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + cli_bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "mllcd_cli_XXXXXX").string();
        REQUIRE(mkdtemp(tmpl.data()) != nullptr);
        path = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string bridge() { return data_path("bridge.edges"); }

}  // namespace

TEST_CASE("cli detect emits the expected json document") {
    auto res = run_cli("detect --graph " + bridge() + " --seed a");
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.output);

    CHECK(j["meta"]["tool"] == "mllcd");
    CHECK(j["meta"].size() == 2);  // tool + version, nothing volatile
    CHECK(j["beta"] == 0.0);
    CHECK(j["seed"] == "a");
    CHECK(j["community"] == nlohmann::json({"a", "b", "c"}));
    CHECK(j["size"] == 3);
    CHECK(j["lc"] == "inf");
    CHECK(j["lc_int"].get<double>() == doctest::Approx(5.0 / 9.0));
    CHECK(j["lc_ext"].get<double>() == 0.0);
    CHECK(j["per_layer_edges"]["L1"] == 3);
    REQUIRE(j["trace"].size() == 2);
    CHECK(j["trace"][0]["accepted"] == "b");
    CHECK(j["trace"][0]["lc"].get<double>() == doctest::Approx(4.0 / 3.0));
    CHECK(j["trace"][0]["shell_size"] == 1);
    CHECK(j["trace"][1]["accepted"] == "c");
    CHECK(j["trace"][1]["lc"] == "inf");
    CHECK(j["rejected"] == 1);
    CHECK(j["termination"] == "shell_exhausted");
}

TEST_CASE("cli detect output is byte-stable and matches the checked-in golden") {
    std::string cmd = "detect --graph " + bridge() + " --seed a --beta 0.3";
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    REQUIRE(first.code == 0);
    CHECK(first.output == second.output);

    auto golden = slurp(data_path("bridge_detect.json"));
    CHECK(first.output == golden);
}

TEST_CASE("cli detect supports text and csv renderings") {
    auto text = run_cli("detect --graph " + bridge() + " --seed a --output-format text");
    REQUIRE(text.code == 0);
    CHECK(text.output.find("community (3): a b c") != std::string::npos);
    CHECK(text.output.find("lc: inf") != std::string::npos);
    CHECK(text.output.find("termination: shell_exhausted") != std::string::npos);

    auto csv = run_cli("detect --graph " + bridge() + " --seed a --output-format csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.output.rfind("step,accepted,lc,shell_size\n", 0) == 0);
    CHECK(csv.output.find("\n1,b,") != std::string::npos);
    CHECK(csv.output.find("\n2,c,inf,") != std::string::npos);
}

TEST_CASE("cli detect honours --output and --debug-verify") {
    TempDir tmp;
    auto res = run_cli("detect --graph " + bridge() + " --seed a --debug-verify --output " +
                       tmp.file("out.json"));
    REQUIRE(res.code == 0);
    CHECK(res.output.empty());
    auto j = nlohmann::json::parse(slurp(tmp.file("out.json")));
    CHECK(j["community"] == nlohmann::json({"a", "b", "c"}));
}

TEST_CASE("cli sweep produces a report plus csv artifacts") {
    TempDir tmp;
    auto res = run_cli("sweep --graph " + bridge() +
                       " --betas -1,0,1 --workers 2 --csv-dir " + tmp.path.string());
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["grid"] == nlohmann::json({-1.0, 0.0, 1.0}));
    CHECK(j["seeds"].size() == 6);
    for (const auto& row : j["per_beta"]) {
        CHECK(row["size_mean"].get<double>() == doctest::Approx(3.0));
        CHECK(row["size_stddev"].get<double>() == doctest::Approx(0.0));
    }
    for (const auto& row : j["cross_beta_jaccard"])
        for (const auto& v : row) CHECK(v.get<double>() == doctest::Approx(1.0));

    auto sizes = slurp(tmp.file("sizes.csv"));
    CHECK(sizes.rfind("beta,seed,size\n", 0) == 0);
    CHECK(sizes.find("\n0,a,3\n") != std::string::npos);
    CHECK(slurp(tmp.file("layers.csv")).rfind("beta,seed,layers_covered\n", 0) == 0);
    CHECK(slurp(tmp.file("jaccard.csv")).rfind("beta_a,beta_b,mean_jaccard\n", 0) == 0);
}

TEST_CASE("cli sweep is deterministic across worker counts and env override") {
    std::string cmd = "sweep --graph " + bridge() + " --betas default";
    auto serial = run_cli(cmd + " --workers 1");
    auto parallel = run_cli(cmd + " --workers 4");
    auto via_env = run_cli(cmd, "MLLCD_WORKERS=3 ");
    REQUIRE(serial.code == 0);
    CHECK(serial.output == parallel.output);
    CHECK(serial.output == via_env.output);
}

TEST_CASE("cli stats reports structural metrics") {
    auto res = run_cli("stats --graph " + bridge() + " --community a,b,c --community d,e,f");
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.output);
    REQUIRE(j["communities"].size() == 2);
    CHECK(j["communities"][0]["size"] == 3);
    CHECK(j["communities"][0]["layers_covered"] == 1);
    CHECK(j["communities"][0]["per_layer_clustering"]["L1"].get<double>() ==
          doctest::Approx(1.0));
    CHECK(j["size_mean"].get<double>() == doctest::Approx(3.0));
    CHECK(j["size_stddev"].get<double>() == doctest::Approx(0.0));

    auto csv = run_cli("stats --graph " + bridge() +
                       " --community a,b,c --output-format csv");
    CHECK(csv.output.rfind("community,size,layers_covered,edge_stddev\n", 0) == 0);
}

TEST_CASE("cli compare reports pairwise overlap") {
    auto res = run_cli("compare --graph " + bridge() +
                       " --community a,b,c --community b,c,d");
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["jaccard"][0][0].get<double>() == doctest::Approx(1.0));
    CHECK(j["jaccard"][0][1].get<double>() == doctest::Approx(0.5));
    CHECK(j["jaccard"][1][0].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("cli generate writes a loadable multiplex and recovers planted cliques") {
    TempDir tmp;
    std::string gen = "generate --communities 2 --size 4 --layers 2 --p-in 1 --p-out 0"
                      " --rng-seed 7 --output " +
                      tmp.file("g.edges") + " --truth " + tmp.file("truth.json");
    auto res = run_cli(gen);
    REQUIRE(res.code == 0);

    auto truth = nlohmann::json::parse(slurp(tmp.file("truth.json")));
    CHECK(truth.size() == 8);
    CHECK(truth["n0"] == 0);
    CHECK(truth["n7"] == 1);

    auto detect = run_cli("detect --graph " + tmp.file("g.edges") + " --seed n5");
    REQUIRE(detect.code == 0);
    auto j = nlohmann::json::parse(detect.output);
    CHECK(j["community"] == nlohmann::json({"n4", "n5", "n6", "n7"}));

    // same rng seed, same bytes
    auto again = run_cli("generate --communities 2 --size 4 --layers 2 --p-in 1 --p-out 0"
                         " --rng-seed 7 --output -");
    CHECK(again.output == slurp(tmp.file("g.edges")));
}

TEST_CASE("cli maps failure categories onto distinct exit codes") {
    TempDir tmp;

    auto missing = run_cli("detect --graph " + tmp.file("nope.edges") + " --seed a");
    CHECK(missing.code == 2);
    CHECK(missing.output.find("error: file:") != std::string::npos);

    std::ofstream(tmp.file("bad.edges")) << "L1 a b\nL1 a\n";
    auto malformed = run_cli("detect --graph " + tmp.file("bad.edges") + " --seed a");
    CHECK(malformed.code == 3);
    CHECK(malformed.output.find("error: parse: line 2") != std::string::npos);

    auto unknown = run_cli("detect --graph " + bridge() + " --seed zz");
    CHECK(unknown.code == 4);
    CHECK(unknown.output.find("error: seed: unknown entity 'zz'") != std::string::npos);

    auto bad_beta = run_cli("detect --graph " + bridge() + " --seed a --beta 1.5");
    CHECK(bad_beta.code == 5);
    CHECK(bad_beta.output.find("error: beta: must lie in [-1, 1]") != std::string::npos);

    auto nan_beta = run_cli("detect --graph " + bridge() + " --seed a --beta abc");
    CHECK(nan_beta.code == 5);

    auto sweep_beta = run_cli("sweep --graph " + bridge() + " --betas 0,2");
    CHECK(sweep_beta.code == 5);
}

TEST_CASE("cli warns about collapsed duplicates and dropped weights") {
    TempDir tmp;
    std::ofstream(tmp.file("dup.edges")) << "L1 a b\nL1 b a\nL1 b c\n";
    auto dup = run_cli("detect --graph " + tmp.file("dup.edges") + " --seed a --output " +
                       tmp.file("out.json"));
    REQUIRE(dup.code == 0);
    CHECK(dup.output.find("warning: collapsed 1 duplicate edge line(s)") != std::string::npos);

    std::ofstream(tmp.file("w.edges")) << "L1 a b 0.7\nL1 b c 1.0\n";
    auto weighted = run_cli("detect --graph " + tmp.file("w.edges") +
                            " --input-format multinet --seed a --output " +
                            tmp.file("out2.json"));
    REQUIRE(weighted.code == 0);
    CHECK(weighted.output.find("warning: ignored weights on 2 line(s)") != std::string::npos);
}
