#include "shellfill/shell.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>

namespace shellfill {

namespace {

int mod_residue(long long v, int n) {
    long long r = v % n;
    return (int)(r < 0 ? r + n : r);
}

} // namespace

Shell1 build_shell(const ShellSpec& spec) {
    const ModelParams& params = spec.params;
    CirclePoint a = pick_generic({}, {}, params);
    CirclePoint c = pick_generic({{a, spec.k1}}, {}, params);
    CirclePoint b = pick_generic({{a, spec.k2}}, {c}, params);
    CirclePoint cp = pick_generic({{b, spec.k3}}, {a, c}, params);

    auto edge = [&](int u, int v, const CirclePoint& pu, const CirclePoint& pv) {
        FunctorSimplex::LevelMap levels;
        levels[{u}] = {pu};
        levels[{v}] = {pv};
        levels[{u, v}] = {pu, pv};
        return FunctorSimplex::make({u, v}, std::move(levels), params);
    };
    Shell1 shell;
    shell.s01 = edge(0, 1, a, c);
    shell.s02 = edge(0, 2, a, b);
    // The vertex-1 level is shared with s01; the top places c' there.
    {
        FunctorSimplex::LevelMap levels;
        levels[{1}] = {c};
        levels[{2}] = {b};
        levels[{1, 2}] = {cp, b};
        shell.s12 = FunctorSimplex::make({1, 2}, std::move(levels), params);
    }
    return shell;
}

int sector_offset(const ShellSpec& spec) {
    return mod_residue((long long)spec.k2 - spec.k1 + spec.k3, spec.params.n);
}

int min_fill_length(const ShellSpec& spec) {
    int k4 = sector_offset(spec);
    return std::min(2 * (spec.params.n - k4) - 1, 2 * k4 + 1);
}

namespace {

/// Realizes the walk points without the length guard; every step places the
/// next point in the overlap of the anchor sector and the step sector, which
/// is a nonempty open arc.
SectorWalk build_sector_points(int k, const std::vector<int>& steps, long long target,
                               const ModelParams& params) {
    const int n = params.n;
    long long total = 0;
    for (int s : steps) total += s;
    long long excess = target - k - total;
    if (excess < 0 || excess > (long long)steps.size())
        fail(ErrorCode::OutOfRange, "target outside the reachable interval");

    SectorWalk out;
    std::vector<CirclePoint> avoid;
    out.a = pick_generic({}, {}, params);
    avoid.push_back(out.a);
    out.d.push_back(pick_generic({{out.a, mod_residue(k, n)}}, avoid, params));
    avoid.push_back(out.d.back());

    long long v = k;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        int bump = (long long)i >= (long long)steps.size() - excess ? 1 : 0;
        v += steps[i] + bump;
        CirclePoint next = pick_generic(
            {{out.a, mod_residue(v, n)}, {out.d.back(), mod_residue(steps[i], n)}}, avoid, params);
        out.d.push_back(next);
        avoid.push_back(next);
    }
    return out;
}

} // namespace

SectorWalk realize_sector_walk(int k, const std::vector<int>& steps, long long target,
                               const ModelParams& params) {
    if ((int)steps.size() >= params.n)
        fail(ErrorCode::TooLong, "walk longer than the rotation order");
    long long total = 0;
    for (int s : steps) total += s;
    if (target < k + total || target > k + total + (long long)steps.size())
        fail(ErrorCode::OutOfRange, "target outside the reachable interval");
    return build_sector_points(k, steps, target, params);
}

FillReport construct_min_fill(const ShellSpec& spec, const Shell1& shell) {
    const ModelParams& params = spec.params;
    const int n = params.n;
    const int len = min_fill_length(spec);
    const int half = (len - 1) / 2;

    // Step sequence: paired steps cancel to -1, the last one closes at -k3-1.
    std::vector<int> steps((std::size_t)len);
    for (int i = 0; i < half; ++i) {
        steps[(std::size_t)(2 * i)] = 0;
        steps[(std::size_t)(2 * i + 1)] = -1;
    }
    steps[(std::size_t)(2 * half)] = -spec.k3 - 1;
    const long long low = -(long long)half - spec.k3 - 1;

    // Aim the end of the walk at the k2 sector; one of the two interval ends
    // is congruent to it.
    long long target;
    if (mod_residue(spec.k1 + low + len - spec.k2, n) == 0) {
        target = spec.k1 + low + len;
    } else if (mod_residue(spec.k1 + low - spec.k2, n) == 0) {
        target = spec.k1 + low;
    } else {
        fail(ErrorCode::Internal, "fill target misses the k2 sector");
    }
    SectorWalk walk = build_sector_points(spec.k1, steps, target, params);
    const auto& d = walk.d;
    const CirclePoint& a = walk.a;

    const PointTuple lvl0 = shell.s01.level({0});
    const PointTuple lvl1 = shell.s01.level({1});
    const PointTuple lvl2 = shell.s02.level({2});
    if (!(shell.s02.level({0}) == lvl0) || !(shell.s12.level({1}) == lvl1) ||
        !(shell.s12.level({2}) == lvl2))
        fail(ErrorCode::FaceMismatch, "shell edges do not share their vertex levels");

    FChain fill;
    for (int i = 0; i < len; ++i) {
        const bool even = i % 2 == 0;
        FunctorSimplex::LevelMap levels;
        levels[{0}] = lvl0;
        levels[{1}] = lvl1;
        levels[{2}] = lvl2;
        levels[{0, 1}] = i == 0 ? shell.s01.level({0, 1})
                                : PointTuple{a, d[(std::size_t)(even ? i : i + 1)]};
        levels[{0, 2}] = i == len - 1 ? shell.s02.level({0, 2})
                                      : PointTuple{a, d[(std::size_t)(even ? i + 1 : i)]};
        levels[{1, 2}] = i == len - 1
                             ? shell.s12.level({1, 2})
                             : (even ? PointTuple{d[(std::size_t)i], d[(std::size_t)(i + 1)]}
                                     : PointTuple{d[(std::size_t)(i - 1)], d[(std::size_t)i]});
        levels[{0, 1, 2}] = even ? PointTuple{a, d[(std::size_t)i], d[(std::size_t)(i + 1)]}
                                 : PointTuple{a, d[(std::size_t)(i + 1)], d[(std::size_t)i]};
        fill.add(even ? 1 : -1, FunctorSimplex::make({0, 1, 2}, std::move(levels), params));
    }

    FillReport report;
    report.chain = fill;
    report.length = fill.length();
    report.method = FillMethod::Construction;
    report.boundary_ok = boundary(fill) == shell.chain();
    return report;
}

std::optional<int> min_fill_search_arith(const ShellSpec& spec, int max_len) {
    if (max_len < 1 || max_len % 2 == 0)
        fail(ErrorCode::InvalidArgument, "search bound must be odd and positive");
    const int n = spec.params.n;
    const int k4 = sector_offset(spec);
    for (int m = 0; 2 * m + 1 <= max_len; ++m)
        for (long long t = -(long long)m - 1; t <= m; ++t)
            if (mod_residue(t - k4, n) == 0) return 2 * m + 1;
    return std::nullopt;
}

namespace {

/// Grid feasibility of walks of a fixed odd length: for the rotation order n,
/// starting sector k1 and m+1 triangle pairs, which (k2, k3) admit a walk of
/// d-points on the 1/(4n^2) grid whose up/down step residues pair off with
/// one residue -k3-1 left over and whose last point sits in sector k2.
struct GridOracle {
    static std::vector<std::vector<bool>> feasible(int n, int k1, int m) {
        static std::map<std::tuple<int, int, int>, std::vector<std::vector<bool>>> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(n, k1, m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto result = run(n, k1, m);
        cache[key] = result;
        return result;
    }

private:
    static std::vector<std::vector<bool>> run(int n, int k1, int m) {
        const int G = 4 * n * n;   // grid points per turn
        const int orbit = 4 * n;   // grid points per sector
        const int B = m + 1;       // step-count bound per residue
        const int base = 2 * B + 1;
        std::size_t dsize = 1;
        for (int i = 0; i < n; ++i) {
            dsize *= (std::size_t)base;
            if (dsize > (std::size_t(1) << 34)) fail(ErrorCode::InvalidArgument, "grid oracle range");
        }
        const std::size_t nstates = (std::size_t)G * dsize;
        if (nstates > (std::size_t(1) << 28)) fail(ErrorCode::InvalidArgument, "grid oracle range");

        std::vector<std::size_t> pw((std::size_t)n);
        pw[0] = 1;
        for (int i = 1; i < n; ++i) pw[(std::size_t)i] = pw[(std::size_t)i - 1] * (std::size_t)base;
        std::size_t zero = 0;
        for (int i = 0; i < n; ++i) zero += (std::size_t)B * pw[(std::size_t)i];

        const int last_layer = 2 * m + 1;
        std::vector<std::uint64_t> cur((nstates + 63) / 64, 0), next;
        // d_0: any grid point in sector k1 off the base orbit.
        for (int q = k1 * orbit + 1; q < (k1 + 1) * orbit; ++q)
            set_bit(cur, (std::size_t)q * dsize + zero);

        std::vector<int> digits((std::size_t)n);
        for (int layer = 1; layer <= last_layer; ++layer) {
            next.assign(cur.size(), 0);
            const int remaining = last_layer - layer;
            for (std::size_t word = 0; word < cur.size(); ++word) {
                std::uint64_t bits = cur[word];
                while (bits) {
                    int bit = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    std::size_t state = word * 64 + (std::size_t)bit;
                    const int p = (int)(state / dsize);
                    const std::size_t didx = state % dsize;
                    std::size_t rest = didx;
                    int l1 = 0;
                    for (int i = 0; i < n; ++i) {
                        digits[(std::size_t)i] = (int)(rest % (std::size_t)base) - B;
                        rest /= (std::size_t)base;
                        l1 += digits[(std::size_t)i] < 0 ? -digits[(std::size_t)i]
                                                         : digits[(std::size_t)i];
                    }
                    const bool up = layer % 2 == 1;
                    for (int q = 1; q < G; ++q) {
                        if (q % orbit == 0 || q % orbit == p % orbit) continue;
                        int res;
                        std::size_t ndidx;
                        if (up) {
                            res = (((q - p) % G + G) % G) / orbit; // shd(p, q)
                            if (digits[(std::size_t)res] >= B) continue;
                            ndidx = didx + pw[(std::size_t)res];
                        } else {
                            res = (((p - q) % G + G) % G) / orbit; // shd(q, p)
                            if (digits[(std::size_t)res] <= -B) continue;
                            ndidx = didx - pw[(std::size_t)res];
                        }
                        const int d = digits[(std::size_t)res];
                        const int nl1 = l1 + ((up ? d >= 0 : d <= 0) ? 1 : -1);
                        if (nl1 > remaining + 1) continue;
                        set_bit(next, (std::size_t)q * dsize + ndidx);
                    }
                }
            }
            cur.swap(next);
        }

        std::vector<std::vector<bool>> table((std::size_t)n, std::vector<bool>((std::size_t)n, false));
        for (std::size_t word = 0; word < cur.size(); ++word) {
            std::uint64_t bits = cur[word];
            while (bits) {
                int bit = __builtin_ctzll(bits);
                bits &= bits - 1;
                std::size_t state = word * 64 + (std::size_t)bit;
                const int q = (int)(state / dsize);
                std::size_t didx = state % dsize;
                if (didx < zero) continue;
                std::size_t delta = didx - zero;
                for (int x = 0; x < n; ++x) {
                    if (delta == pw[(std::size_t)x]) {
                        int k2 = q / orbit;
                        int k3 = ((-x - 1) % n + n) % n;
                        table[(std::size_t)k2][(std::size_t)k3] = true;
                    }
                }
            }
        }
        return table;
    }

    static void set_bit(std::vector<std::uint64_t>& bits, std::size_t idx) {
        bits[idx / 64] |= std::uint64_t(1) << (idx % 64);
    }
};

} // namespace

std::optional<int> min_fill_search_grid(const ShellSpec& spec, int max_len) {
    if (max_len < 1 || max_len % 2 == 0)
        fail(ErrorCode::InvalidArgument, "search bound must be odd and positive");
    for (int m = 0; 2 * m + 1 <= max_len; ++m) {
        auto table = GridOracle::feasible(spec.params.n, spec.k1, m);
        if (table[(std::size_t)spec.k2][(std::size_t)spec.k3]) return 2 * m + 1;
    }
    return std::nullopt;
}

std::optional<int> min_fill_search(const ShellSpec& spec, int max_len) {
    auto arith = min_fill_search_arith(spec, max_len);
    auto grid = min_fill_search_grid(spec, max_len);
    if (arith != grid) fail(ErrorCode::Internal, "fill-length searches disagree");
    return arith;
}

namespace {

struct ShellPoints {
    CirclePoint a, c, b, cp;
    bool from_tops; // whether the points are the shell's own top entries
};

ShellPoints shell_points(const Shell1& shell, const ModelParams& params) {
    ShellPoints pts;
    pts.a = shell.s01.top()[0];
    pts.c = shell.s01.top()[1];
    pts.b = shell.s02.top()[1];
    pts.cp = shell.s12.top()[0];
    pts.from_tops =
        shell.s02.top()[0] == pts.a && shell.s12.top()[1] == pts.b;
    if (pts.from_tops) return pts;

    // Tops that do not share their realizations: build one coherent quadruple
    // with the same edge types.
    int t01 = sector_distance(shell.s01.top()[0], shell.s01.top()[1], params);
    int t02 = sector_distance(shell.s02.top()[0], shell.s02.top()[1], params);
    int t12 = sector_distance(shell.s12.top()[0], shell.s12.top()[1], params);
    pts.a = pick_generic({}, {}, params);
    pts.c = pick_generic({{pts.a, t01}}, {}, params);
    pts.b = pick_generic({{pts.a, t02}}, {pts.c}, params);
    pts.cp = pick_generic({{pts.b, mod_residue(-t12 - 1, params.n)}}, {pts.a, pts.c}, params);
    return pts;
}

} // namespace

FillReport fill_shell_lascar(const Shell1& shell, const ModelParams& params) {
    if (!is_shell(shell.chain()))
        fail(ErrorCode::InvalidArgument, "input is not a shell");
    ShellPoints pts = shell_points(shell, params);
    const CirclePoint a = pts.a;
    const CirclePoint b = pts.b;
    const long long span = lascar_distance(pts.c, pts.cp, params);

    const PointTuple lvl0 = shell.s01.level({0});
    const PointTuple lvl1 = shell.s01.level({1});
    const PointTuple lvl2 = shell.s02.level({2});

    FillReport report;
    report.method = FillMethod::Lascar;

    if (span == 0) {
        FunctorSimplex::LevelMap levels;
        levels[{0}] = lvl0;
        levels[{1}] = lvl1;
        levels[{2}] = lvl2;
        levels[{0, 1}] = shell.s01.level({0, 1});
        levels[{0, 2}] = shell.s02.level({0, 2});
        levels[{1, 2}] = shell.s12.level({1, 2});
        levels[{0, 1, 2}] = {a, pts.c, b};
        report.chain = FChain::single(FunctorSimplex::make({0, 1, 2}, std::move(levels), params));
        report.length = 1;
        report.boundary_ok = boundary(report.chain) == shell.chain();
        return report;
    }

    // Adjacent path c = c_0, ..., c_span = c' along the shorter side.
    std::vector<CirclePoint> path{pts.c};
    std::vector<CirclePoint> avoid{a, b, pts.c, pts.cp};
    const Rational fwd = (pts.cp.value() - pts.c.value()).mod1();
    const bool forward = !(Rational(1) - fwd < fwd); // ties go clockwise
    const Rational sector(1, params.n);
    for (long long i = 1; i < span; ++i) {
        Rational room = sector * Rational(span - i);
        Arc step = forward ? Arc{path.back(), sector}
                           : Arc{CirclePoint(path.back().value() - sector), sector};
        Arc goal = forward ? Arc{CirclePoint(pts.cp.value() - room), room}
                           : Arc{pts.cp, room};
        Arc window;
        if (!arc_intersection(step, goal, window))
            fail(ErrorCode::Internal, "path construction lost its window");
        CirclePoint nextp = pick_in_arc(window, avoid, params);
        path.push_back(nextp);
        avoid.push_back(nextp);
    }
    path.push_back(pts.cp);

    // Witness points: e_i sees c_i and c_{i+1} in the same sector.
    std::vector<CirclePoint> witness;
    for (long long i = 0; i < span; ++i) {
        CirclePoint e = pick_generic({{path[(std::size_t)i], params.n - 1},
                                      {path[(std::size_t)i + 1], params.n - 1}},
                                     avoid, params);
        witness.push_back(e);
        avoid.push_back(e);
    }

    // Shared face data: one {0,1} edge per path point, one (c_i, e_i) and
    // (a, e_i) pair per witness.
    auto edge01 = [&](long long i) {
        return i == 0 ? shell.s01.level({0, 1}) : PointTuple{a, path[(std::size_t)i]};
    };

    FChain fill;
    auto add_pair_simplex = [&](long long i, bool plus) {
        FunctorSimplex::LevelMap levels;
        levels[{0}] = lvl0;
        levels[{1}] = lvl1;
        levels[{3}] = {witness[(std::size_t)i]};
        levels[{0, 1}] = edge01(plus ? i : i + 1);
        levels[{0, 3}] = {a, witness[(std::size_t)i]};
        levels[{1, 3}] = {path[(std::size_t)i], witness[(std::size_t)i]};
        levels[{0, 1, 3}] = {a, path[(std::size_t)(plus ? i : i + 1)], witness[(std::size_t)i]};
        fill.add(plus ? 1 : -1, FunctorSimplex::make({0, 1, 3}, std::move(levels), params));
    };
    for (long long i = 0; i + 1 < span; ++i) {
        add_pair_simplex(i, true);
        add_pair_simplex(i, false);
    }
    add_pair_simplex(span - 1, true);

    const CirclePoint e_last = witness[(std::size_t)span - 1];
    {
        FunctorSimplex::LevelMap levels; // closes the walk at the {1,2} edge
        levels[{1}] = lvl1;
        levels[{2}] = lvl2;
        levels[{3}] = {e_last};
        levels[{1, 2}] = shell.s12.level({1, 2});
        levels[{1, 3}] = {path[(std::size_t)span - 1], e_last};
        levels[{2, 3}] = {b, e_last};
        levels[{1, 2, 3}] = {pts.cp, b, e_last};
        fill.add(1, FunctorSimplex::make({1, 2, 3}, std::move(levels), params));
    }
    {
        FunctorSimplex::LevelMap levels;
        levels[{0}] = lvl0;
        levels[{2}] = lvl2;
        levels[{3}] = {e_last};
        levels[{0, 2}] = shell.s02.level({0, 2});
        levels[{0, 3}] = {a, e_last};
        levels[{2, 3}] = {b, e_last};
        levels[{0, 2, 3}] = {a, b, e_last};
        fill.add(-1, FunctorSimplex::make({0, 2, 3}, std::move(levels), params));
    }

    report.chain = fill;
    report.length = fill.length();
    report.boundary_ok = boundary(fill) == shell.chain();
    return report;
}

WeakAmalgamationReport weak_three_amalgamation(const ModelParams& params) {
    for (int k1 = 0; k1 < params.n; ++k1)
        for (int k2 = 0; k2 < params.n; ++k2)
            for (int k3 = 0; k3 < params.n; ++k3) {
                ShellSpec spec(params, k1, k2, k3);
                int len = min_fill_length(spec);
                if (len > 3) return {false, spec, len};
            }
    return {true, std::nullopt, 0};
}

WalkPoints walk_to_points(const ChainWalk& walk, const ModelParams& params) {
    if (walk.center != 0 || !validate_walk(walk))
        fail(ErrorCode::NotCentered, "walk must be centered at 0");
    if (walk.sequence.front() != 1 || walk.sequence.back() != 2)
        fail(ErrorCode::NotCentered, "walk must run from vertex 1 to vertex 2");

    WalkPoints out;
    out.a = pick_generic({}, {}, params);
    std::vector<CirclePoint> avoid{out.a};

    auto top_entry = [](const FunctorSimplex& f, int vertex) {
        return f.top()[(std::size_t)rank_in(f.support(), vertex)];
    };

    for (std::size_t i = 0; i < walk.terms.size(); ++i) {
        const FunctorSimplex& t = walk.terms[i].second;
        int cur = walk.sequence[i];
        int nxt = walk.sequence[i + 1];
        out.ascending.push_back(cur < nxt);
        CirclePoint pa = top_entry(t, 0);
        CirclePoint pc = top_entry(t, cur);
        CirclePoint pn = top_entry(t, nxt);
        if (i == 0) {
            out.d.push_back(
                pick_generic({{out.a, sector_distance(pa, pc, params)}}, avoid, params));
            avoid.push_back(out.d.back());
        }
        CirclePoint nextp = pick_generic({{out.a, sector_distance(pa, pn, params)},
                                          {out.d.back(), sector_distance(pc, pn, params)}},
                                         avoid, params);
        out.d.push_back(nextp);
        avoid.push_back(nextp);
    }
    return out;
}

} // namespace shellfill
