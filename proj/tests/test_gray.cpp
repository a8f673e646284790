#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ringgray/errors.hpp"
#include "ringgray/gray.hpp"
#include "ringgray/weights.hpp"

using namespace ringgray;

namespace {

RingElement el(std::int64_t a, std::int64_t b, int r) { return {a, b, RingParams(r)}; }
std::string bits(const BitVector& v) { return v.to_string(); }

}  // namespace

TEST_SUITE("gray") {

TEST_CASE("map identifiers") {
    for (auto id : {MapId::Phi3, MapId::Phi2Phi3, MapId::Phi4, MapId::Phi5, MapId::General}) {
        CHECK(parse_map_id(to_string(id)) == id);
    }
    CHECK_THROWS_AS(parse_map_id("phi6"), ParseError);
}

TEST_CASE("binary expansion") {
    const auto e = BinaryExpansion::of(11, 4);
    CHECK(e.digit(1) == 1);
    CHECK(e.digit(2) == 1);
    CHECK(e.digit(3) == 0);
    CHECK(e.digit(4) == 1);
    CHECK(e.value() == 11);
}

TEST_CASE("phi3") {
    CHECK(phi3(el(3, 1, 2)) == std::array<std::uint32_t, 2>{1, 0});
    CHECK(phi3(el(0, 0, 2)) == std::array<std::uint32_t, 2>{0, 0});
    CHECK(phi3(el(2, 3, 3)) == std::array<std::uint32_t, 2>{3, 5});
}

TEST_CASE("phi2") {
    CHECK(bits(phi2(0, 1)) == "0001");
    CHECK(bits(phi2(2, 2)) == "1111");
    CHECK(bits(phi2(0, 0)) == "0000");
    CHECK_THROWS_AS(phi2(4, 0), DomainError);
    std::set<std::string> images;
    for (std::uint32_t x = 0; x < 4; ++x) {
        for (std::uint32_t y = 0; y < 4; ++y) {
            images.insert(bits(phi2(x, y)));
            CHECK(phi2(x, y).popcount() == static_cast<std::size_t>(oracle::lee_residue(x, 4) + oracle::lee_residue(y, 4)));
        }
    }
    CHECK(images.size() == 16);
}

TEST_CASE("phi2phi3") {
    CHECK(bits(phi2_phi3(el(1, 0, 2))) == "0001");
    CHECK(bits(phi2_phi3(el(0, 2, 2))) == "1111");
    CHECK(bits(phi2_phi3(el(0, 0, 2))) == "0000");
    CHECK_THROWS_AS(phi2_phi3(el(1, 0, 3)), DomainError);
    for (const auto& x : all_elements(RingParams(2))) {
        const auto [b, c] = phi3(x);
        CHECK(phi2_phi3(x) == phi2(b, c));
        CHECK(hamming_weight(phi2_phi3(x)) == lee_weight(x));
        for (const auto& y : all_elements(RingParams(2))) {
            CHECK(hamming_distance(phi2_phi3(x), phi2_phi3(y)) == lee_weight(x - y));
        }
    }
}

TEST_CASE("carlet gray map") {
    CHECK(bits(carlet_gray(1, 4)) == "00001111");
    CHECK(bits(carlet_gray(8, 4)) == "11111111");
    CHECK(bits(carlet_gray(1, 1)) == "1");
    CHECK_THROWS_AS(carlet_gray(16, 4), DomainError);
    CHECK_THROWS_AS(carlet_gray(0, 0), DomainError);
}

TEST_CASE("carlet gray map agrees with the tuple-order oracle and its weight law") {
    for (int m = 1; m <= 8; ++m) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
            const auto v = carlet_gray(x, m);
            REQUIRE(bits(v) == oracle::carlet_table(x, m));
            if (m > 6) continue;
            std::size_t expected = x == 0 ? 0 : x == (std::uint64_t{1} << (m - 1)) ? (std::size_t{1} << (m - 1))
                                                                                   : (std::size_t{1} << (m - 2));
            CHECK(v.popcount() == expected);
        }
    }
}

TEST_CASE("pack") {
    CHECK(pack(el(1, 0, 2)) == 1);
    CHECK(pack(el(0, 2, 2)) == 8);
    CHECK(pack(el(3, 5, 3)) == 43);
}

TEST_CASE("phi4") {
    CHECK(bits(phi4(el(0, 2, 2))) == "11111111");
    CHECK(bits(phi4(el(1, 0, 2))) == "00001111");
    CHECK(phi4(el(0, 0, 2)).is_zero());
    CHECK_THROWS_AS(phi4(el(0, 0, 3)), DomainError);

    std::set<std::string> images;
    bool nonlinear = false;
    for (const auto& x : all_elements(RingParams(2))) {
        CHECK(phi4(x) == carlet_gray(pack(x), 4));
        CHECK(hamming_weight(phi4(x)) == hom_weight_closed(x, 4));
        images.insert(bits(phi4(x)));
        for (const auto& y : all_elements(RingParams(2))) {
            CHECK(hamming_distance(phi4(x), phi4(y)) == hom_weight_closed(x - y, 4));
            nonlinear |= phi4(x + y) != (phi4(x) ^ phi4(y));
        }
    }
    CHECK(images.size() == 16);  // of 256 words
    CHECK(nonlinear);
}

TEST_CASE("phi4 inverse") {
    CHECK(phi4_inverse(BitVector::from_string("00001111")) == el(1, 0, 2));
    CHECK(phi4_inverse(BitVector(8)) == el(0, 0, 2));
    CHECK_FALSE(phi4_inverse(BitVector::from_string("10000000")));
    CHECK_FALSE(phi4_inverse(BitVector(4)));
    for (const auto& x : all_elements(RingParams(2))) CHECK(phi4_inverse(phi4(x)) == x);
    int in_image = 0;
    for (unsigned w = 0; w < 256; ++w) {
        BitVector v(8);
        for (int i = 0; i < 8; ++i) v.set(static_cast<std::size_t>(i), (w >> i) & 1U);
        in_image += phi4_inverse(v).has_value();
    }
    CHECK(in_image == 16);
}

TEST_CASE("phi5") {
    const auto top = phi5(el(0, 4, 3));
    CHECK(top.size() == 32);
    CHECK(top.popcount() == 32);
    CHECK(phi5(el(0, 0, 3)).is_zero());
    CHECK(phi5(el(1, 0, 3)).popcount() == 16);
    CHECK_THROWS_AS(phi5(el(1, 0, 2)), DomainError);
    std::set<BitVector> images;
    for (const auto& x : all_elements(RingParams(3))) {
        CHECK(phi5(x) == carlet_gray(pack(x), 6));
        CHECK(hamming_weight(phi5(x)) == hom_weight_closed(x, 16));
        images.insert(phi5(x));
        for (const auto& y : all_elements(RingParams(3))) {
            CHECK(hamming_distance(phi5(x), phi5(y)) == hom_weight_closed(x - y, 16));
        }
    }
    CHECK(images.size() == 64);
}

TEST_CASE("phi_general") {
    for (const auto& x : all_elements(RingParams(2))) CHECK(phi_general(x) == phi4(x));
    for (const auto& x : all_elements(RingParams(3))) CHECK(phi_general(x) == phi5(x));
    CHECK(bits(phi_general(el(0, 1, 1))) == oracle::carlet_table(2, 2));
    CHECK(bits(phi_general(el(0, 1, 1))) == "11");
    for (int r = 1; r <= 4; ++r) {
        const RingParams p(r);
        for (const auto& x : all_elements(p)) {
            CHECK(phi_general(x).size() == (std::size_t{1} << (2 * r - 1)));
            CHECK(hamming_weight(phi_general(x)) == hom_weight_closed(x, default_gamma(p)));
        }
    }
}

TEST_CASE("map_vector") {
    const std::vector<RingElement> w{el(0, 0, 2), el(0, 2, 2)};
    CHECK(bits(map_vector(w, MapId::Phi4)) == "0000000011111111");
    CHECK(map_vector(std::vector<RingElement>{}, MapId::Phi4).empty());
    CHECK(bits(map_vector(std::vector<RingElement>{el(1, 0, 2), el(1, 0, 2)}, MapId::Phi2Phi3)) == "00010001");
    CHECK_THROWS_AS(map_vector(w, MapId::Phi5), DomainError);
    CHECK_THROWS_AS(map_vector(w, MapId::Phi3), DomainError);
    CHECK(phi3_vector(w) == std::vector<std::uint32_t>{0, 0, 2, 2});
    CHECK(coordinate_length(MapId::General, RingParams(4)) == 128);
}

}  // TEST_SUITE
