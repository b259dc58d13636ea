#pragma once

#include <random>

#include "shellfill/shell.hpp"

namespace shellfill::testing {

/// Deterministic point with a random-ish position: a generic pick anchored at
/// a seeded rational.
inline CirclePoint random_point(std::mt19937_64& rng, const ModelParams& params,
                                const std::vector<CirclePoint>& avoid = {}) {
    std::int64_t den = 7 + (std::int64_t)(rng() % 120);
    std::int64_t num = (std::int64_t)(rng() % (std::uint64_t)den);
    Arc arc{CirclePoint(Rational(num, den)), Rational(1, 2 * params.n)};
    return pick_in_arc(arc, avoid, params);
}

/// Random tuple of pairwise orbit-disjoint points.
inline PointTuple random_tuple(std::mt19937_64& rng, const ModelParams& params, std::size_t size,
                               std::vector<CirclePoint> avoid = {}) {
    PointTuple out;
    for (std::size_t i = 0; i < size; ++i) {
        CirclePoint p = random_point(rng, params, avoid);
        out.push_back(p);
        avoid.push_back(p);
    }
    return out;
}

/// Random simplex whose levels are restrictions of one point assignment.
inline FunctorSimplex random_simplex(std::mt19937_64& rng, const ModelParams& params,
                                     const SupportSet& support) {
    return FunctorSimplex::from_points(support, random_tuple(rng, params, support.size()), params);
}

/// Random shell spec.
inline ShellSpec random_spec(std::mt19937_64& rng, const ModelParams& params) {
    auto r = [&] { return (int)(rng() % (std::uint64_t)params.n); };
    return ShellSpec(params, r(), r(), r());
}

} // namespace shellfill::testing
