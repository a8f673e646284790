#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ringgray/errors.hpp"
#include "ringgray/io.hpp"

using namespace ringgray;
using namespace ringgray::io;

namespace {

RingElement el(std::int64_t a, std::int64_t b, int r) { return {a, b, RingParams(r)}; }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("element grammar") {
    const RingParams p(2);
    CHECK(parse_element("0", p) == el(0, 0, 2));
    CHECK(parse_element("3", p) == el(3, 0, 2));
    CHECK(parse_element("u", p) == el(0, 1, 2));
    CHECK(parse_element("2u", p) == el(0, 2, 2));
    CHECK(parse_element("1+u", p) == el(1, 1, 2));
    CHECK(parse_element("3+2u", p) == el(3, 2, 2));
    CHECK(parse_element("5", p) == el(1, 0, 2));
    CHECK(parse_element("7+6u", p) == el(3, 2, 2));
    for (const auto& x : all_elements(RingParams(3))) CHECK(parse_element(to_string(x), RingParams(3)) == x);
}

TEST_CASE("element grammar rejects malformed tokens") {
    const RingParams p(2);
    for (const char* bad : {"", "+u", "1+", "u2", "2uu", "1+2", "x", "-1", "1 + u", "2+u+1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_element(bad, p), ParseError);
    }
    try {
        parse_element("1+2v", p);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("1+2v") != std::string::npos);
        CHECK(e.column() == 4);
    }
}

TEST_CASE("matrix parse and format round trip") {
    const auto g = parse_matrix("# repetition\nring Z4+uZ4\n\n1 1   # row one\n  2u 3+u\n");
    CHECK(g.k() == 2);
    CHECK(g.n() == 2);
    CHECK(g.at(1, 1) == el(3, 1, 2));
    CHECK(format_matrix(g) == "ring z4+uz4\n1 1\n2u 3+u\n");
    CHECK(parse_matrix(format_matrix(g)) == g);
}

TEST_CASE("matrix parse errors") {
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("# only\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("ring z4+uz4\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("ring z4+uz8\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("ring z6+uz6\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 1\n"), ParseError);
    try {
        parse_matrix("ring z4+uz4\n1 1\n1 q\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
    try {
        parse_matrix("ring z4+uz4\n1 1\n1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("load and atomic write") {
    const auto dir = std::filesystem::temp_directory_path() / "ringgray_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "g.txt").string();
    write_file_atomic(path, "ring z8+uz8\n1 4u\n");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    const auto g = load_matrix(path);
    CHECK(g.params().r() == 3);
    CHECK(g.at(0, 1) == el(0, 4, 3));
    CHECK_THROWS_AS(load_matrix((dir / "missing.txt").string()), ParseError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("weight values serialise as integers when integral") {
    CHECK(weight_json(8.0).is_number_integer());
    CHECK(weight_json(8.0).get<int>() == 8);
    CHECK(weight_json(0.75).is_number_float());
}

TEST_CASE("ring info report") {
    const auto j = ring_info_json(RingParams(2), 4.0);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["units"]["count"] == 8);
    CHECK(j["radical"].size() == 8);
    CHECK(j["socle"] == nlohmann::json::array({"0", "2u"}));
    CHECK(j["ideals"].size() == 7);
    CHECK(j["generating_character_verified"] == true);
    CHECK(j["weights"]["homogeneous"]["values"]["2u"] == 8);
    CHECK(j["weights"]["lee"]["1+u"] == 3);
    const auto text = ring_info_text(RingParams(2), 4.0);
    CHECK(text.find("ideals (7)") != std::string::npos);
}

TEST_CASE("code analysis report") {
    const auto soc = analyze_code(parse_matrix("ring z4+uz4\n2u\n"), {});
    CHECK(soc["code"]["size"] == 2);
    CHECK(soc["code"]["free"] == false);
    CHECK(soc["weights"]["homogeneous"]["gamma"] == 4);
    CHECK(soc["weights"]["homogeneous"]["min_distance"] == 8);
    CHECK(soc["weights"]["lee"]["min_weight"] == 4);
    CHECK(soc["image"]["map"] == "phi4");
    CHECK(soc["image"]["min_distance"] == 8);
    CHECK(soc["image"]["linear"] == true);

    AnalysisOptions lee_only;
    lee_only.homogeneous = false;
    lee_only.map = MapId::Phi2Phi3;
    const auto full = analyze_code(parse_matrix("ring z4+uz4\n1\n"), lee_only);
    CHECK_FALSE(full["weights"].contains("homogeneous"));
    CHECK(full["image"]["size"] == 16);
    CHECK(full["image"]["min_distance"] == 1);
    CHECK(full["weights"]["lee"]["enumerator"][2] == nlohmann::json{{"weight", 2}, {"count", 6}});

    const auto zero = analyze_code(parse_matrix("ring z4+uz4\n0\n"), {});
    CHECK(zero["weights"]["lee"]["min_weight"].is_null());
    CHECK(zero["image"]["min_distance"].is_null());

    AnalysisOptions phi3;
    phi3.map = MapId::Phi3;
    CHECK_THROWS_AS(analyze_code(parse_matrix("ring z4+uz4\n1\n"), phi3), DomainError);
    CHECK(default_map(RingParams(1)) == MapId::General);
}

}  // TEST_SUITE
