#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kernel2d/cli.hpp"
#include "kernel2d/io.hpp"
#include "kernel2d/oracles.hpp"

using namespace kernel2d;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    const fs::path dir = fs::temp_directory_path() / "kernel2d_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << body;
    return p.string();
}

const char* kSquare = "# unit square\n0 0\n1 0\n\n1 1\n0 1\n";

}  // namespace

TEST_CASE("point files round-trip") {
    const auto pts = generate({GeneratorKind::UniformDisk, 50, 3, 0.1});
    std::stringstream ss;
    write_points(ss, pts);
    CHECK(read_points(ss) == pts);
    std::istringstream bad("1 2 3\n");
    CHECK_THROWS_AS(read_points(bad), Error);
    std::istringstream nan_line("1 nan\n");
    CHECK_THROWS_AS(read_points(nan_line), Error);
    CHECK(parse_index_list("3,1,2") == std::vector<std::size_t>{3, 1, 2});
    CHECK_THROWS_AS(parse_index_list("1,,2"), Error);
}

TEST_CASE("kernel and check commands") {
    const auto sq = temp_file("square.txt", kSquare);
    auto r = call({"kernel", "--eps", "0.1", sq});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["subset_size"] == 4);
    CHECK(doc["validity"] == true);
    CHECK(doc["command"] == "kernel");
    for (const char* key : {"eps", "n", "subset_indices", "elapsed_ms", "tool_version"}) CHECK(doc.contains(key));

    r = call({"check", "--kind", "weak", "--eps", "0.5", sq, "--subset", "0,1,2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["validity"] == true);
    r = call({"check", "--kind", "strong", "--eps", "0.01", sq, "--subset", "0,1,2"});
    CHECK(r.code == 3);
    CHECK(nlohmann::json::parse(r.out)["validity"] == false);

    r = call({"weak-kernel", "--eps", "0.5", sq, "--approx2", "--emit-points"});
    CHECK(r.code == 0);
    doc = nlohmann::json::parse(r.out);
    CHECK(doc["points"].size() == doc["subset_size"]);

    r = call({"hausdorff", "--eps", "0.75", sq});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["subset_size"] == 2);

    r = call({"core", "--eps", "0.2", sq});
    CHECK(r.code == 0);
    std::istringstream core_in(r.out);
    CHECK(read_points(core_in).size() == 4);
}

TEST_CASE("error codes") {
    const auto sq = temp_file("square.txt", kSquare);
    const auto bad = temp_file("bad.txt", "0 0\nx 1\n");
    CHECK(call({"kernel", bad}).code == 2);
    CHECK(call({"kernel", "--eps", "1.5", sq}).code == 2);
    CHECK(call({"kernel", "/nonexistent/file.txt"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({}).code == 2);
    const auto gap = temp_file("gap.txt", "0 1\n2 3\n");
    auto r = call({"arc-cover", gap});
    CHECK(r.code == 3);
    CHECK(r.err.find("NotCoverable") != std::string::npos);
    const auto empty = temp_file("empty.txt", "# nothing\n");
    CHECK(call({"kernel", empty}).code == 3);
    CHECK(call({"check", "--subset", "9", sq}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("arc cover command") {
    const auto arcs = temp_file("arcs.txt", "0 2.2\n2.1 4.3\n4.2 6.4\n1 1.1\n");
    auto r = call({"arc-cover", arcs});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["subset_size"] == 3);
    CHECK(doc["validity"] == true);
}

TEST_CASE("gen is deterministic") {
    auto a = call({"gen", "--kind", "on-circle", "--n", "8", "--seed", "1"});
    auto b = call({"gen", "--kind", "on-circle", "--n", "8", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::istringstream in(a.out);
    CHECK(read_points(in).size() == 8);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 8);
    CHECK(call({"gen", "--kind", "spiral"}).code == 2);
}

TEST_CASE("plot output") {
    const auto sq = temp_file("square.txt", kSquare);
    auto r = call({"plot", sq, "--overlay", "hull"});
    REQUIRE(r.code == 0);
    auto count = [](const std::string& s, const std::string& needle) {
        std::size_t c = 0;
        for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
        return c;
    };
    CHECK(count(r.out, "<circle class=\"point\"") == 4);
    CHECK(count(r.out, "<path") == 1);
    CHECK(count(r.out, "Z\"") == 1);
    CHECK(r.out.find("width=\"800\"") != std::string::npos);
    CHECK(call({"plot", sq, "--overlay", "hull"}).out == r.out);

    r = call({"plot", sq, "--overlay", "hull,core,kernel,spokes", "--eps", "0.2"});
    CHECK(r.code == 0);
    CHECK(count(r.out, "class=\"core\"") == 1);
    CHECK(count(r.out, "class=\"kernel\"") == 4);
    // z-order: points below hull below core below kernel markers
    CHECK(r.out.find("class=\"point\"") < r.out.find("class=\"hull\""));
    CHECK(r.out.find("class=\"hull\"") < r.out.find("class=\"core\""));
    CHECK(r.out.find("class=\"core\"") < r.out.find("class=\"kernel\""));
}

TEST_CASE("gen, kernel and check pipeline") {
    for (const char* kind : {"uniform-disk", "on-circle", "convex-position", "clustered", "collinear", "lower-bound"}) {
        for (const char* n : {"8", "64", "512"}) {
            auto g = call({"gen", "--kind", kind, "--n", n, "--seed", "4"});
            REQUIRE(g.code == 0);
            const auto file = temp_file(std::string(kind) + "_" + n + ".txt", g.out);
            auto k = call({"kernel", "--eps", "0.1", file});
            REQUIRE(k.code == 0);
            const auto doc = nlohmann::json::parse(k.out);
            CHECK(doc["validity"] == true);
            std::string list;
            for (const auto& i : doc["subset_indices"]) list += (list.empty() ? "" : ",") + std::to_string(i.get<int>());
            auto c = call({"check", "--kind", "strong", "--eps", "0.1", file, "--subset", list});
            CHECK(c.code == 0);
        }
    }
}

TEST_CASE("bench prints csv") {
    auto r = call({"bench", "--sizes", "100,200", "--eps", "0.1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,eps,size,elapsed_ms\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
}
