#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "ringgray/io.hpp"

using ringgray::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"ring", "info", "--r", "9"}).code == 2);
    CHECK(call({"map", "--map", "phi5", "--r", "2", "1"}).code == 2);
    CHECK(call({"map", "--map", "phi9", "--r", "2", "1"}).code == 2);
    CHECK(call({"map", "--map", "phi4", "--r", "2", "1+q"}).code == 2);
    CHECK(call({"code", "analyze", "--gen", "/nonexistent/g.txt"}).code == 2);
    CHECK(call({"verify", "--r", "2", "--suite", "nope"}).code == 2);
    CHECK(call({"search", "--r", "2", "--n", "1", "--k", "1", "--weight", "hamming"}).code == 2);
}

TEST_CASE("help exits 0") { CHECK(call({"--help"}).code == 0); }

TEST_CASE("ring info") {
    const auto r = call({"ring", "info", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("units (8)") != std::string::npos);
    const auto j = call({"ring", "info", "--r", "1", "--json", "-"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["ideals"].size() == 3);
}

TEST_CASE("map") {
    CHECK(call({"map", "--map", "phi4", "--r", "2", "2u"}).out == "11111111\nff\n");
    CHECK(call({"map", "--map", "phi2phi3", "--r", "2", "1", "2u"}).out == "00011111\n1f\n");
    CHECK(call({"map", "--map", "phi3", "--r", "2", "3+u"}).out == "1 0\n");
}

TEST_CASE("code analyze") {
    const auto dir = std::filesystem::temp_directory_path() / "ringgray_cli_test";
    std::filesystem::create_directories(dir);
    const auto gen = (dir / "g.txt").string();
    ringgray::io::write_file_atomic(gen, "ring z4+uz4\n1 1\n");
    const auto r = call({"code", "analyze", gen, "--weight", "hom"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["image"]["min_distance"] == 8);
    CHECK_FALSE(j["weights"].contains("lee"));

    const auto big = (dir / "big.txt").string();
    ringgray::io::write_file_atomic(big, "ring z4+uz4\n1 0\n0 1\n");
    CHECK(call({"code", "analyze", "--gen", big, "--cap", "10"}).code == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify") {
    const auto r = call({"verify", "--r", "2"});
    CHECK(r.code == 0);
    const auto j = call({"verify", "--r", "3", "--suite", "isometries", "--json", "-"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["passed"] == true);
}

TEST_CASE("search is byte-identical across runs") {
    const std::vector<std::string> args{"search", "--r", "2", "--n", "3", "--k", "2", "--trials", "50", "--seed", "9"};
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto other = call({"search", "--r", "2", "--n", "3", "--k", "2", "--trials", "50", "--seed", "10"});
    CHECK(other.out != a.out);
}

}  // TEST_SUITE
