#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "shellfill/shell.hpp"

using namespace shellfill;
using shellfill::testing::random_spec;

TEST_CASE("shell building") {
    SUBCASE("residues read back") {
        ModelParams p5(5);
        Shell1 shell = build_shell(ShellSpec(p5, 0, 0, 2));
        CHECK(sector_distance(shell.s01.top()[0], shell.s01.top()[1], p5) == 0);
        CHECK(sector_distance(shell.s02.top()[0], shell.s02.top()[1], p5) == 0);
        CHECK(sector_distance(shell.s12.top()[1], shell.s12.top()[0], p5) == 2);
    }
    SUBCASE("every spec yields a shell whose chain is a cycle") {
        std::mt19937_64 rng(1);
        for (int n = 2; n <= 8; ++n) {
            ModelParams params(n);
            for (int trial = 0; trial < 6; ++trial) {
                Shell1 shell = build_shell(random_spec(rng, params));
                CHECK(is_shell(shell.chain()));
                CHECK(boundary(shell.chain()).empty());
            }
        }
    }
    SUBCASE("residues out of range are rejected") {
        CHECK_THROWS_AS(ShellSpec(ModelParams(4), 0, 4, 0), Error);
        CHECK_THROWS_AS(ShellSpec(ModelParams(4), -1, 0, 0), Error);
    }
}

TEST_CASE("minimal fill length formula") {
    CHECK(sector_offset(ShellSpec(ModelParams(5), 0, 0, 2)) == 2);
    CHECK(min_fill_length(ShellSpec(ModelParams(5), 0, 0, 2)) == 5);
    CHECK(min_fill_length(ShellSpec(ModelParams(3), 1, 2, 0)) == 3);
    CHECK(min_fill_length(ShellSpec(ModelParams(7), 3, 4, 6)) ==
          min_fill_length(ShellSpec(ModelParams(7), 0, 0, 0)));
    SUBCASE("offset zero means a single simplex") {
        std::mt19937_64 rng(2);
        for (int n = 2; n <= 10; ++n) {
            ModelParams params(n);
            for (int k1 = 0; k1 < n; ++k1) {
                int k3 = (int)(rng() % (std::uint64_t)n);
                int k2 = ((k1 - k3) % n + n) % n;
                CHECK(min_fill_length(ShellSpec(params, k1, k2, k3)) == 1);
            }
        }
    }
    SUBCASE("always odd") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 200; ++trial) {
            ModelParams params(2 + (int)(rng() % 11));
            CHECK(min_fill_length(random_spec(rng, params)) % 2 == 1);
        }
    }
}

TEST_CASE("sector walks") {
    ModelParams p4(4);
    SUBCASE("single step hits both reachable targets") {
        for (long long target : {1, 2}) {
            SectorWalk walk = realize_sector_walk(0, {1}, target, p4);
            REQUIRE(walk.d.size() == 2);
            CHECK(sector_distance(walk.a, walk.d[0], p4) == 0);
            CHECK(sector_distance(walk.d[0], walk.d[1], p4) == 1);
            CHECK(sector_distance(walk.a, walk.d[1], p4) == target % 4);
        }
    }
    SUBCASE("targets outside the interval are rejected") {
        CHECK_THROWS_AS(realize_sector_walk(0, {1}, 0, p4), Error);
        CHECK_THROWS_AS(realize_sector_walk(0, {1}, 3, p4), Error);
        try {
            realize_sector_walk(0, {1}, 0, p4);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::OutOfRange);
        }
    }
    SUBCASE("walks longer than the rotation order are rejected") {
        CHECK_THROWS_AS(realize_sector_walk(0, {0, 0, 0, 0}, 0, p4), Error);
        try {
            realize_sector_walk(0, {0, 0, 0, 0}, 0, p4);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::TooLong);
        }
    }
    SUBCASE("every admissible target is achieved and the bounds hold") {
        std::mt19937_64 rng(4);
        for (int n = 2; n <= 8; ++n) {
            ModelParams params(n);
            for (int trial = 0; trial < 8; ++trial) {
                std::size_t m1 = 1 + rng() % (std::uint64_t)(n - 1); // at most n-1 steps
                std::vector<int> steps;
                long long total = 0;
                for (std::size_t i = 0; i < m1; ++i) {
                    steps.push_back((int)(rng() % (std::uint64_t)(2 * n)) - n);
                    total += steps.back();
                }
                int k = (int)(rng() % (std::uint64_t)n);
                for (long long target = k + total; target <= k + total + (long long)m1; ++target) {
                    SectorWalk walk = realize_sector_walk(k, steps, target, params);
                    REQUIRE(walk.d.size() == m1 + 1);
                    CHECK(sector_distance(walk.a, walk.d[0], params) == k);
                    for (std::size_t i = 0; i < m1; ++i)
                        CHECK(sector_distance(walk.d[i], walk.d[i + 1], params) ==
                              ((steps[i] % n) + n) % n);
                    // the realized endpoint lies in the two-sided window
                    int got = sector_distance(walk.a, walk.d[m1], params);
                    CHECK(got == ((target % n) + n) % n);
                    CHECK(in_cyclic_interval(got, k + total, k + total + (long long)m1, n));
                }
            }
        }
    }
}

TEST_CASE("explicit minimal fills") {
    SUBCASE("frozen lengths") {
        ModelParams p5(5);
        ShellSpec spec(p5, 0, 0, 2);
        FillReport r = construct_min_fill(spec, build_shell(spec));
        CHECK(r.length == 5);
        CHECK(r.boundary_ok);

        ShellSpec spec3(ModelParams(3), 1, 2, 0);
        FillReport r3 = construct_min_fill(spec3, build_shell(spec3));
        CHECK(r3.length == 3);
        CHECK(r3.boundary_ok);
    }
    SUBCASE("boundary is the shell exactly, for every spec up to n = 10") {
        for (int n = 2; n <= 10; ++n) {
            ModelParams params(n);
            bool all_ok = true;
            for (int k1 = 0; k1 < n; ++k1)
                for (int k2 = 0; k2 < n; ++k2)
                    for (int k3 = 0; k3 < n; ++k3) {
                        ShellSpec spec(params, k1, k2, k3);
                        Shell1 shell = build_shell(spec);
                        FillReport r = construct_min_fill(spec, shell);
                        all_ok = all_ok && r.boundary_ok &&
                                 boundary(r.chain) == shell.chain() &&
                                 r.length == min_fill_length(spec);
                    }
            CHECK(all_ok);
        }
    }
}

TEST_CASE("fill-length searches") {
    SUBCASE("frozen examples") {
        CHECK(min_fill_search(ShellSpec(ModelParams(5), 0, 0, 2), 9) == 5);
        CHECK(min_fill_search(ShellSpec(ModelParams(2), 1, 0, 1), 3) == 1);
        CHECK(min_fill_search(ShellSpec(ModelParams(4), 0, 2, 0), 1) == std::nullopt);
    }
    SUBCASE("both searches agree with the formula for n up to 4") {
        for (int n = 2; n <= 4; ++n) {
            ModelParams params(n);
            for (int k1 = 0; k1 < n; ++k1)
                for (int k2 = 0; k2 < n; ++k2)
                    for (int k3 = 0; k3 < n; ++k3) {
                        ShellSpec spec(params, k1, k2, k3);
                        auto found = min_fill_search(spec, 9);
                        REQUIRE(found.has_value());
                        CHECK(*found == min_fill_length(spec));
                    }
        }
    }
    SUBCASE("the fill length depends only on the net offset") {
        std::mt19937_64 rng(5);
        ModelParams p6(6);
        for (int trial = 0; trial < 30; ++trial) {
            ShellSpec a = random_spec(rng, p6);
            ShellSpec b = random_spec(rng, p6);
            if (sector_offset(a) != sector_offset(b)) continue;
            CHECK(min_fill_length(a) == min_fill_length(b));
            CHECK(min_fill_search_arith(a, 11) == min_fill_search_arith(b, 11));
        }
    }
    SUBCASE("even bounds are rejected") {
        CHECK_THROWS_AS(min_fill_search_arith(ShellSpec(ModelParams(4), 0, 0, 0), 4), Error);
    }
}

TEST_CASE("step-distance fills") {
    SUBCASE("pinned seven-term fill") {
        // a shell whose vertex-1 realizations are half a turn apart
        ModelParams p4(4);
        CirclePoint a(Rational(1, 8));
        CirclePoint c(Rational(0));
        CirclePoint b(Rational(5, 16));
        CirclePoint cp(Rational(1, 2));
        Shell1 shell;
        {
            FunctorSimplex::LevelMap l;
            l[{0}] = {a};
            l[{1}] = {c};
            l[{0, 1}] = {a, c};
            shell.s01 = FunctorSimplex::make({0, 1}, l, p4);
        }
        {
            FunctorSimplex::LevelMap l;
            l[{0}] = {a};
            l[{2}] = {b};
            l[{0, 2}] = {a, b};
            shell.s02 = FunctorSimplex::make({0, 2}, l, p4);
        }
        {
            FunctorSimplex::LevelMap l;
            l[{1}] = {c};
            l[{2}] = {b};
            l[{1, 2}] = {cp, b};
            shell.s12 = FunctorSimplex::make({1, 2}, l, p4);
        }
        REQUIRE(is_shell(shell.chain()));
        REQUIRE(lascar_distance(c, cp, p4) == 3);
        FillReport fill = fill_shell_lascar(shell, p4);
        CHECK(fill.length == 7);
        CHECK(fill.boundary_ok);
    }
    SUBCASE("coinciding realizations give a one-simplex fill") {
        // a shell whose s12 reuses the s01 vertex-1 point literally
        ModelParams p4(4);
        ShellSpec spec(p4, 1, 2, 0);
        Shell1 shell = build_shell(spec);
        CirclePoint a = shell.s01.top()[0];
        CirclePoint c = shell.s01.top()[1];
        CirclePoint b = shell.s02.top()[1];
        FunctorSimplex::LevelMap l;
        l[{1}] = shell.s12.level({1});
        l[{2}] = shell.s12.level({2});
        l[{1, 2}] = {c, b};
        shell.s12 = FunctorSimplex::make({1, 2}, l, p4);
        REQUIRE(is_shell(shell.chain()));
        REQUIRE(lascar_distance(c, c, p4) == 0);
        FillReport fill = fill_shell_lascar(shell, p4);
        CHECK(fill.length == 1);
        CHECK(fill.boundary_ok);
        (void)a;
    }
    SUBCASE("boundary always equals the shell") {
        std::mt19937_64 rng(6);
        for (int n = 2; n <= 8; ++n) {
            ModelParams params(n);
            bool all_ok = true;
            for (int trial = 0; trial < 50; ++trial) {
                Shell1 shell = build_shell(random_spec(rng, params));
                FillReport fill = fill_shell_lascar(shell, params);
                long long span =
                    lascar_distance(shell.s01.top()[1], shell.s12.top()[0], params);
                all_ok = all_ok && fill.boundary_ok &&
                         boundary(fill.chain) == shell.chain() && fill.length == 2 * span + 1;
            }
            CHECK(all_ok);
        }
    }
}

TEST_CASE("weak 3-amalgamation threshold") {
    CHECK(weak_three_amalgamation(ModelParams(2)).holds);
    CHECK(weak_three_amalgamation(ModelParams(3)).holds);
    CHECK(weak_three_amalgamation(ModelParams(4)).holds);
    for (int n = 5; n <= 10; ++n) {
        WeakAmalgamationReport report = weak_three_amalgamation(ModelParams(n));
        CHECK_FALSE(report.holds);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness_fill_length > 3);
        CHECK(min_fill_length(*report.witness) == report.witness_fill_length);
    }
    WeakAmalgamationReport five = weak_three_amalgamation(ModelParams(5));
    REQUIRE(five.witness.has_value());
    CHECK(five.witness->k1 == 0);
    CHECK(five.witness->k2 == 0);
    CHECK(five.witness->k3 == 2);
    CHECK(five.witness_fill_length == 5);
}

TEST_CASE("minimal fill lengths grow without bound") {
    for (int n = 2; n <= 12; ++n) {
        ModelParams params(n);
        ShellSpec spec(params, 0, 0, n / 2);
        CHECK(min_fill_length(spec) >= n - 1);
    }
}

TEST_CASE("walks back to points") {
    ModelParams p5(5);
    ShellSpec spec(p5, 0, 0, 2);
    Shell1 shell = build_shell(spec);
    FillReport fill = construct_min_fill(spec, shell);
    ShellFaces faces = one_shell_boundary(fill.chain);
    ChainWalk walk =
        extract_chain_walk(fill.chain, SignedFace{1, faces.f01}, SignedFace{-1, faces.f02}, 0);

    SUBCASE("orientation flags follow the labels") {
        WalkPoints pts = walk_to_points(walk, p5);
        REQUIRE(pts.d.size() == walk.terms.size() + 1);
        for (std::size_t i = 0; i < pts.ascending.size(); ++i)
            CHECK(pts.ascending[i] == (walk.sequence[i] < walk.sequence[i + 1]));
    }
    SUBCASE("consecutive residues satisfy the pairing rule") {
        WalkPoints pts = walk_to_points(walk, p5);
        // paired steps: each odd step inverts the previous one
        for (std::size_t i = 0; i + 1 < pts.d.size() - 1; i += 2) {
            int up = sector_distance(pts.d[i], pts.d[i + 1], p5);
            int down = sector_distance(pts.d[i + 1], pts.d[i + 2], p5);
            CHECK(((up + down + 1) % 5 + 5) % 5 == 0);
        }
    }
    SUBCASE("residues reproduce the walk's tuple types") {
        WalkPoints pts = walk_to_points(walk, p5);
        for (std::size_t i = 0; i < walk.terms.size(); ++i) {
            const FunctorSimplex& t = walk.terms[i].second;
            PointTuple realized{pts.a, pts.d[i], pts.d[i + 1]};
            if (!pts.ascending[i]) std::swap(realized[1], realized[2]);
            CHECK(same_type(t.top(), realized, p5));
        }
    }
    SUBCASE("off-center walks are rejected") {
        ChainWalk bad =
            extract_chain_walk(fill.chain, SignedFace{-1, faces.f02}, SignedFace{1, faces.f12}, 2);
        CHECK_THROWS_AS(walk_to_points(bad, p5), Error);
        try {
            walk_to_points(bad, p5);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotCentered);
        }
    }
}
