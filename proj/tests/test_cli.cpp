#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "scx/cli.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

const std::string kData = SCX_TEST_DATA;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run scx_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = scx::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

} // namespace

TEST_CASE("spectrum of K4")
{
    const auto r = scx_run({"spectrum", "--graph", data("k4.edges"), "--k", "0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const std::vector<double> want{0, 4, 4, 4};
    REQUIRE(j["eigenvalues"].size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK_THAT(j["eigenvalues"][i].get<double>(), WithinAbs(want[i], 1e-9));
    CHECK_THAT(j["mu_k"].get<double>(), WithinAbs(4.0, 1e-9));
    for (const auto& v : j["reduced_eigenvalues"]) CHECK_THAT(v.get<double>(), WithinAbs(4.0, 1e-9));
    CHECK_THAT(j["lambda2"].get<double>(), WithinAbs(4.0, 1e-9));
    CHECK_THAT(r.err, ContainsSubstring("scx "));
}

TEST_CASE("spectrum table rounds to six digits")
{
    const auto r = scx_run({"--no-banner", "spectrum", "--complex", data("hollow_triangle.faces"), "--k", "1", "--format", "table"});
    REQUIRE(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("zero_count 1"));
    CHECK(r.err.empty());
}

TEST_CASE("betti of the hollow triangle")
{
    const auto r = scx_run({"betti", "--complex", data("hollow_triangle.faces"), "--k", "1", "--no-banner"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "1\n");
    const auto h = scx_run({"betti", "--complex", data("hollow_triangle.faces"), "--k", "1", "--hodge", "--format", "json"});
    REQUIRE(h.code == 0);
    const auto j = nlohmann::json::parse(h.out);
    CHECK(j["betti"] == 1);
    CHECK(j["hodge_kernel_dim"] == 1);
}

TEST_CASE("betti of a neighborhood complex built from a graph file")
{
    const auto r = scx_run({"nbhd", "--graph", data("c5.edges"), "--k", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["f_vector"] == nlohmann::json::array({5, 5}));
    CHECK(j["betti"]["value"] == 1);
}

TEST_CASE("build writes a face list that reads back")
{
    const auto r = scx_run({"build", "--graph", data("k4.edges"), "--max-dim", "3", "--no-banner"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto x = scx::read_face_list(in);
    CHECK(x == scx::clique_complex(scx::Graph::complete(4), 3));
}

TEST_CASE("bounds report")
{
    const auto r = scx_run({"bounds", "--complex", data("full_triangle.faces"), "--sub", data("hollow_triangle.faces"), "--k",
                            "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    bool saw_sub = false;
    for (const auto& rep : j["reports"]) {
        CHECK(rep["holds"] == true);
        if (rep["name"] == "subcomplex") {
            saw_sub = true;
            CHECK_THAT(rep["residual"].get<double>(), WithinAbs(0.0, 1e-9));
        }
    }
    CHECK(saw_sub);
    for (const auto& c : j["certificates"])
        if (c["name"] == "subcomplex") CHECK(c["condition_holds"] == false);

    const auto t = scx_run({"bounds", "--complex", data("hollow_triangle.faces"), "--k", "1", "--no-banner"});
    REQUIRE(t.code == 0);
    CHECK_THAT(t.out, ContainsSubstring("general"));
    CHECK_THAT(t.out, ContainsSubstring("n/a"));
}

TEST_CASE("input errors exit with 1 and a line number")
{
    auto r = scx_run({"spectrum", "--graph", data("bad_vertex.edges"), "--k", "0"});
    CHECK(r.code == 1);
    CHECK_THAT(r.err, ContainsSubstring("line 4"));

    r = scx_run({"betti", "--complex", data("bad_token.faces"), "--k", "0"});
    CHECK(r.code == 1);
    CHECK_THAT(r.err, ContainsSubstring("line 3"));

    r = scx_run({"betti", "--complex", data("missing.faces"), "--k", "0"});
    CHECK(r.code == 1);

    r = scx_run({"betti", "--graph", data("k4.edges"), "--complex", data("hollow_triangle.faces"), "--k", "0"});
    CHECK(r.code == 1);

    r = scx_run({"frobnicate"});
    CHECK(r.code == 1);

    r = scx_run({"betti", "--complex", data("hollow_triangle.faces")});
    CHECK(r.code == 1);
}

TEST_CASE("blank lines in edge lists are skipped")
{
    const auto r = scx_run({"nbhd", "--graph", data("blank_line.edges"), "--no-banner"});
    CHECK(r.code == 0);
}

TEST_CASE("budget exhaustion exits with 2")
{
    auto r = scx_run({"betti", "--graph", data("k4.edges"), "--k", "1", "--budget", "1"});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("budget"));

    ::setenv("SCX_BUDGET", "1", 1);
    r = scx_run({"betti", "--graph", data("k4.edges"), "--k", "1"});
    ::unsetenv("SCX_BUDGET");
    CHECK(r.code == 2);
}

TEST_CASE("mc requires a seed and exactly one probability")
{
    CHECK(scx_run({"mc", "--n", "10", "--k", "1", "--p", "0.5"}).code == 1);
    CHECK(scx_run({"mc", "--n", "10", "--k", "1", "--seed", "1"}).code == 1);
    CHECK(scx_run({"mc", "--n", "10", "--k", "1", "--p", "0.5", "--c", "1", "--seed", "1"}).code == 1);
    CHECK(scx_run({"mc", "--n", "10", "--k", "1", "--p", "1.5", "--seed", "1"}).code == 1);
}

TEST_CASE("mc csv output is reproducible")
{
    const std::vector<std::string> args{"mc", "--mode", "vanishing", "--n", "30", "--k", "1", "--c", "8",
                                        "--trials", "50", "--seed", "7", "--format", "csv"};
    const auto a = scx_run(args);
    const auto b = scx_run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    std::istringstream in(a.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == scx::kCsvHeader);
    int rows = 0, summary = 0;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) ++summary;
        else ++rows;
    }
    CHECK(rows == 50);
    CHECK(summary > 0);

    auto threads = args;
    threads.insert(threads.end(), {"--threads", "2"});
    CHECK(scx_run(threads).out == a.out);
}

TEST_CASE("mc json and nonvanishing mode")
{
    const std::vector<std::string> args{"mc", "--mode", "nonvanishing", "--n", "20", "--k", "1", "--alpha", "-0.75",
                                        "--trials", "10", "--seed", "3", "--format", "json", "--no-banner"};
    const auto a = scx_run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == scx_run(args).out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["trials"].size() == 10);
    CHECK(j["frequencies"].contains("lambda_r_found"));
    CHECK(j["violations"]["witness"] == 0);
    CHECK_FALSE(j["trials"][0].contains("runtime_ms"));

    auto warn = args;
    warn[8] = "-1.9";
    const auto w = scx_run(warn);
    CHECK(w.code == 0);
    CHECK_THAT(w.err, ContainsSubstring("warning"));
}
