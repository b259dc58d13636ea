#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "shellfill/json_io.hpp"

using namespace shellfill;
using shellfill::testing::random_simplex;

TEST_CASE("simplex round trip") {
    std::mt19937_64 rng(1);
    ModelParams p4(4);
    for (int trial = 0; trial < 50; ++trial) {
        FunctorSimplex f = random_simplex(rng, p4, {0, 2, 5});
        FunctorSimplex back = simplex_from_json(simplex_to_json(f), p4);
        CHECK(back == f);
    }
}

TEST_CASE("chain round trip and byte stability") {
    std::mt19937_64 rng(2);
    ModelParams p5(5);
    ShellSpec spec(p5, 1, 2, 3);
    FillReport fill = construct_min_fill(spec, build_shell(spec));

    std::string text = chain_to_json(fill.chain);
    FChain back = chain_from_json(text, p5);
    CHECK(back == fill.chain);
    CHECK(chain_to_json(back) == text); // canonical term order is reproducible

    // signs and multiplicities survive
    FChain doubled = fill.chain + fill.chain;
    CHECK(chain_from_json(chain_to_json(doubled), p5) == doubled);
}

TEST_CASE("malformed input is rejected with a parse error") {
    ModelParams p4(4);
    auto expect_parse_error = [&](const std::string& text) {
        try {
            chain_from_json(text, p4);
            FAIL_CHECK("no error for: " << text);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    };
    expect_parse_error("{");
    expect_parse_error("[]");
    expect_parse_error("{\"terms\": 3}");
    expect_parse_error(R"({"terms":[{"coeff":0,"simplex":{"support":[0],"levels":{"0":["0/1"]}}}]})");
    expect_parse_error(R"({"terms":[{"coeff":1,"simplex":{"support":[0],"levels":{"0":["3/2"]}}}]})");
    expect_parse_error(R"({"terms":[{"coeff":1,"simplex":{"support":[0],"levels":{"0":["2/4"]}}}]})");

    // invalid level data surfaces as a validation error, not a crash
    CHECK_THROWS_AS(
        chain_from_json(
            R"({"terms":[{"coeff":1,"simplex":{"support":[0,1],"levels":{"0":["0/1"],"1":["0/1"],"0,1":["0/1","1/4"]}}}]})",
            p4),
        Error);
}

TEST_CASE("fill report serialization") {
    ModelParams p4(4);
    ShellSpec spec(p4, 0, 1, 2);
    FillReport fill = construct_min_fill(spec, build_shell(spec));
    std::string text = fill_report_to_json(fill, 4);
    CHECK(text.find("\"method\":\"construction\"") != std::string::npos);
    CHECK(text.find("\"boundary_ok\":true") != std::string::npos);
    CHECK(text.find("\"length\":" + std::to_string(fill.length)) != std::string::npos);
}

TEST_CASE("walk sequences serialize as integer arrays") {
    ModelParams p5(5);
    ShellSpec spec(p5, 0, 0, 2);
    FillReport fill = construct_min_fill(spec, build_shell(spec));
    ShellFaces faces = one_shell_boundary(fill.chain);
    ChainWalk walk =
        extract_chain_walk(fill.chain, SignedFace{1, faces.f01}, SignedFace{-1, faces.f02}, 0);
    CHECK(walk_sequence_to_json(walk) == "[1,2,1,2,1,2]");
}
