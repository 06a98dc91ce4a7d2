#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "bkp/cli.hpp"
#include "bkp/coords_io.hpp"

using namespace bkp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("bkpnp_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& text) const {
        const fs::path p = path / name;
        write_file(p.string(), text);
        return p.string();
    }
    std::string at(const std::string& name) const { return (path / name).string(); }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const RunConfig& c) {
    std::ostringstream out, err;
    const int code = run_command(c, out, err);
    return {code, out.str(), err.str()};
}

RunConfig npoint(const std::string& coords, int n, int w) {
    RunConfig c;
    c.command = "npoint";
    c.coords_path = coords;
    c.n = n;
    c.max_weight = w;
    return c;
}

}  // namespace

TEST_CASE("coordinate parsing") {
    const AffineB b = parse_affine_b(R"([[1, 0, "1"], [2, 1, "-3/6"]])");
    CHECK(b.at(1, 0) == 1);
    CHECK(b.at(1, 2) == Rational(1, 2));
    CHECK(parse_affine_b("[]").empty());
    CHECK_THROWS_AS(parse_affine_b("[[1, 0, 1.5]]"), InputError);
    CHECK_THROWS_AS(parse_affine_b("[[1, 0]]"), InputError);
    CHECK_THROWS_AS(parse_affine_b("{"), InputError);
    CHECK_THROWS_AS(parse_affine_b(R"([[1, 0, "x"]])"), InputError);
    CHECK_THROWS_AS(parse_affine_b(R"([[1, 1, "5"]])"), CoordinateError);
}

TEST_CASE("coordinates round-trip through the file format") {
    const AffineB b = AffineB::validate({{3, 1, Rational(-7, 4)}, {2, 0, 5}});
    CHECK(parse_affine_b(format_coordinates(b)).entries() == b.entries());
}

TEST_CASE("npoint for a_{1,0} = 1 agrees across routes") {
    TempDir tmp;
    const Run r = run(npoint(tmp.file("a10.json", R"([[1, 0, "1"]])"), 1, 5));
    REQUIRE(r.code == kExitPass);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["agree"] == true);
    REQUIRE(doc["tables"].size() == 3);
    for (const auto& [route, rows] : doc["tables"].items()) {
        std::vector<std::string> values;
        for (const auto& row : rows) values.push_back(row["value"]);
        CHECK(values == std::vector<std::string>{"-1", "0", "0"});
    }
}

TEST_CASE("npoint csv view") {
    TempDir tmp;
    RunConfig c = npoint(tmp.file("a10.json", R"([[1, 0, "1"]])"), 2, 4);
    c.format = "csv";
    c.formula = "wangyang";
    const Run r = run(c);
    CHECK(r.code == kExitPass);
    CHECK(r.out.rfind("route,indices,value\n", 0) == 0);
    CHECK(r.out.find("wangyang,1:1,-1\n") != std::string::npos);
}

TEST_CASE("empty coordinates give zero tables") {
    TempDir tmp;
    const Run r = run(npoint(tmp.file("empty.json", "[]"), 2, 6));
    REQUIRE(r.code == kExitPass);
    const auto doc = nlohmann::json::parse(r.out);
    for (const auto& [route, rows] : doc["tables"].items())
        for (const auto& row : rows) CHECK(row["value"] == "0");
}

TEST_CASE("a corrupted table is reported as a disagreement") {
    TempDir tmp;
    RunConfig c = npoint(tmp.file("a10.json", R"([[1, 0, "1"]])"), 1, 5);
    c.table_hook = [](const std::string& route, NPointTable& t) {
        if (route == "oracle") t.entries[{3}] = 4;
    };
    const Run r = run(c);
    CHECK(r.code == kExitDisagree);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["agree"] == false);
    CHECK(doc["first_difference"]["indices"] == std::vector<int>{3});
    CHECK(r.err.find("(3)") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
    TempDir tmp;
    CHECK(run(npoint(tmp.file("diag.json", R"([[2, 2, "1"]])"), 1, 5)).code == kExitInputError);
    CHECK(run(npoint(tmp.file("conflict.json", R"([[1, 0, "1"], [0, 1, "1"]])"), 1, 5)).code == kExitInputError);
    CHECK(run(npoint(tmp.file("bad.json", "not json"), 1, 5)).code == kExitInputError);
    CHECK(run(npoint(tmp.at("missing.json"), 1, 5)).code == kExitInputError);
    RunConfig c = npoint(tmp.file("ok.json", "[]"), 1, 5);
    c.formula = "nope";
    CHECK(run(c).code == kExitInputError);
    c.formula = "all";
    c.format = "xml";
    CHECK(run(c).code == kExitInputError);
    RunConfig v;
    v.command = "verify";
    v.check = "nope";
    CHECK(run(v).code == kExitInputError);
    RunConfig u;
    u.command = "frobnicate";
    CHECK(run(u).code == kExitInputError);
}

TEST_CASE("convert") {
    TempDir tmp;
    RunConfig c;
    c.command = "convert";
    c.coords_path = tmp.file("a10.json", R"([[1, 0, "1"]])");
    Run r = run(c);
    CHECK(r.code == kExitPass);
    CHECK(r.out == "[[0,0,\"-2\"],[0,1,\"2\"]]\n");

    c.coords_path = tmp.file("tri.json", R"([[0, 1, "-1"]])");
    CHECK(run(c).out == r.out);

    c.coords_path = tmp.file("empty.json", "[]");
    CHECK(run(c).out == "[]\n");
}

TEST_CASE("verify checks") {
    RunConfig c;
    c.command = "verify";
    c.check = "lemma";
    c.k = 3;
    c.seed = 11;
    Run r = run(c);
    CHECK(r.code == kExitPass);
    CHECK(nlohmann::json::parse(r.out)["all_pass"] == true);

    c.check = "square";
    c.max_weight = 6;
    CHECK(run(c).code == kExitPass);
}

TEST_CASE("identical configurations write identical files") {
    TempDir tmp;
    RunConfig c;
    c.command = "verify";
    c.suite = "full";
    c.seed = 3;
    c.out_path = tmp.at("one.json");
    CHECK(run(c).code == kExitPass);
    c.out_path = tmp.at("two.json");
    CHECK(run(c).code == kExitPass);
    CHECK(read_file(tmp.at("one.json")) == read_file(tmp.at("two.json")));

    RunConfig n = npoint(tmp.file("c.json", R"([[2, 0, "1/3"], [3, 1, "-2"]])"), 2, 7);
    n.out_path = tmp.at("t1.json");
    CHECK(run(n).code == kExitPass);
    n.out_path = tmp.at("t2.json");
    CHECK(run(n).code == kExitPass);
    CHECK(read_file(tmp.at("t1.json")) == read_file(tmp.at("t2.json")));
}
