#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "shellfill/shellfill_c.h"

namespace {

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { sf_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

std::string chain_of_report(const std::string& report) {
    return nlohmann::json::parse(report).at("chain").dump();
}

} // namespace

TEST_CASE("formula entry points") {
    int k4 = -1, len = -1;
    CHECK(sf_shell_offset(5, 0, 0, 2, &k4) == SF_OK);
    CHECK(k4 == 2);
    CHECK(sf_min_fill_length(5, 0, 0, 2, &len) == SF_OK);
    CHECK(len == 5);
    CHECK(sf_min_fill_length(1, 0, 0, 0, &len) == SF_ERR_ARG);
    CHECK(std::string(sf_last_error()).find("rotation order") != std::string::npos);
    CHECK(sf_min_fill_length(4, 0, 9, 0, &len) == SF_ERR_ARG);
}

TEST_CASE("searches") {
    int arith = 0, grid = 0;
    CHECK(sf_search_fill_arith(5, 0, 0, 2, 9, &arith) == SF_OK);
    CHECK(sf_search_fill_grid(5, 0, 0, 2, 9, &grid) == SF_OK);
    CHECK(arith == 5);
    CHECK(grid == 5);
    CHECK(sf_search_fill_arith(4, 0, 2, 0, 1, &arith) == SF_OK);
    CHECK(arith == -1); // absent under the bound
    CHECK(sf_search_fill_arith(4, 0, 0, 0, 4, &arith) == SF_ERR_ARG); // even bound
}

TEST_CASE("weak 3-amalgamation") {
    int holds = -1, witness_len = -1;
    int witness[3] = {-2, -2, -2};
    CHECK(sf_weak_three_amalgamation(4, &holds, witness, &witness_len) == SF_OK);
    CHECK(holds == 1);
    CHECK(sf_weak_three_amalgamation(5, &holds, witness, &witness_len) == SF_OK);
    CHECK(holds == 0);
    CHECK(witness[0] == 0);
    CHECK(witness[1] == 0);
    CHECK(witness[2] == 2);
    CHECK(witness_len == 5);
}

TEST_CASE("shells, fills and chain handles") {
    OwnedString shell;
    REQUIRE(sf_build_shell(5, 0, 0, 2, &shell.ptr) == SF_OK);

    OwnedString fill;
    int len = 0, ok = 0;
    REQUIRE(sf_construct_fill(5, 0, 0, 2, &fill.ptr, &len, &ok) == SF_OK);
    CHECK(len == 5);
    CHECK(ok == 1);

    OwnedString lascar;
    REQUIRE(sf_lascar_fill_shell(5, shell.str().c_str(), &lascar.ptr, &len, &ok) == SF_OK);
    CHECK(ok == 1);
    CHECK(len % 2 == 1);

    // the shell chain itself parses but is not a 2-chain with shell boundary
    sf_chain* edge_chain = nullptr;
    REQUIRE(sf_chain_parse(5, shell.str().c_str(), &edge_chain) == SF_OK);
    int has = -1;
    CHECK(sf_chain_has_shell_boundary(edge_chain, &has) == SF_OK);
    CHECK(has == 0);
    int kind = -1;
    CHECK(sf_chain_classify(edge_chain, &kind) == SF_ERR_PRECONDITION);
    sf_chain_free(edge_chain);

    // extract the fill's chain JSON from the report and classify it
    std::string chain_json = chain_of_report(fill.str());

    sf_chain* chain = nullptr;
    REQUIRE(sf_chain_parse(5, chain_json.c_str(), &chain) == SF_OK);
    long long clen = 0;
    CHECK(sf_chain_length(chain, &clen) == SF_OK);
    CHECK(clen == 5);
    CHECK(sf_chain_has_shell_boundary(chain, &has) == SF_OK);
    CHECK(has == 1);
    CHECK(sf_chain_classify(chain, &kind) == SF_OK);
    CHECK(kind == SF_KIND_RENAMEABLE);

    OwnedString std_form;
    CHECK(sf_chain_standard_form(chain, 1000, &std_form.ptr) == SF_OK);
    sf_chain* standard = nullptr;
    REQUIRE(sf_chain_parse(5, std_form.str().c_str(), &standard) == SF_OK);
    CHECK(sf_chain_length(standard, &clen) == SF_OK);
    CHECK(clen == 5);
    sf_chain_free(standard);

    OwnedString round_trip;
    CHECK(sf_chain_to_json(chain, &round_trip.ptr) == SF_OK);
    CHECK(round_trip.str() == chain_json);
    sf_chain_free(chain);
}

TEST_CASE("verdict codes") {
    // a single simplex: build via a one-term fill
    OwnedString fill;
    int len = 0, ok = 0;
    REQUIRE(sf_construct_fill(4, 0, 0, 0, &fill.ptr, &len, &ok) == SF_OK);
    REQUIRE(len == 1);
    std::string chain_json = chain_of_report(fill.str());

    sf_chain* chain = nullptr;
    REQUIRE(sf_chain_parse(4, chain_json.c_str(), &chain) == SF_OK);
    int verdict = -1;
    CHECK(sf_chain_minimal(chain, 100, &verdict) == SF_OK);
    CHECK(verdict == SF_MINIMAL_YES);
    int kind = -1;
    CHECK(sf_chain_classify(chain, &kind) == SF_OK);
    CHECK(kind == SF_KIND_NONRENAMEABLE);
    // non-renameable chains have no standard form
    char* out = nullptr;
    CHECK(sf_chain_standard_form(chain, 100, &out) == SF_ERR_PRECONDITION);
    sf_chain_free(chain);

    CHECK(sf_chain_parse(4, "{ not json", &chain) == SF_ERR_PARSE);
}
