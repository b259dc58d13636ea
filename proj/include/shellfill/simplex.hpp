#pragma once

#include <map>
#include <optional>
#include <string>

#include "shellfill/chain.hpp"
#include "shellfill/circle.hpp"

namespace shellfill {

/// A simplex of the circular model presented by its level data: one point
/// tuple for every nonempty subset of the support, indexed by the subset's
/// vertices in order. Transition maps are never stored; they send the stored
/// representative for a vertex at one level to the stored representative for
/// the same vertex at the bigger level, which is an elementary map exactly
/// when the two tuples have the same type. Validation enforces that, plus
/// pairwise disjoint orbits inside every tuple. Equality of simplices (and
/// hence of faces) is literal equality of level data.
class FunctorSimplex {
public:
    using LevelMap = std::map<SupportSet, PointTuple>;

    FunctorSimplex() = default; // empty placeholder; real values come from make()

    /// Validated constructor. Throws MissingLevel / DependentLevel /
    /// IncompatibleLevels.
    static FunctorSimplex make(SupportSet support, LevelMap levels, const ModelParams& params);

    /// Levels taken as restrictions of one point assignment; always valid.
    static FunctorSimplex from_points(const SupportSet& support, const PointTuple& points,
                                      const ModelParams& params);

    const SupportSet& support() const { return support_; }
    const LevelMap& levels() const { return levels_; }
    const PointTuple& level(const SupportSet& u) const;
    const PointTuple& top() const { return level(support_); }
    int dimension() const { return (int)support_.size() - 1; }

    /// Restriction to the nonempty subset u of the support.
    FunctorSimplex face(const SupportSet& u) const;

    /// Relabels the support along sigma and transports level data.
    FunctorSimplex permuted(const Permutation& sigma) const;

    bool operator==(const FunctorSimplex& o) const {
        return support_ == o.support_ && levels_ == o.levels_;
    }
    bool operator<(const FunctorSimplex& o) const {
        if (support_ != o.support_) return support_ < o.support_;
        return levels_ < o.levels_;
    }

    /// Canonical text form, used for deterministic tie-breaks and hashes.
    std::string encoding() const;

private:
    SupportSet support_;
    LevelMap levels_;
};

using FChain = Chain<FunctorSimplex>;

/// Result of localizing a simplex at t: the functor on subsets of
/// support \ t whose value at v is the level of t union v. Levels keep the
/// t-vertices, so the value at the empty set is the level at t itself.
struct LocalizedFunctor {
    SupportSet support;
    std::map<SupportSet, PointTuple> levels; // keyed by subsets of `support`, incl. {}

    bool operator==(const LocalizedFunctor& o) const {
        return support == o.support && levels == o.levels;
    }
};

/// Localization of f at t (t must be contained in the support).
LocalizedFunctor localize(const FunctorSimplex& f, const SupportSet& t);

/// Pairwise sector residues for the top tuple of a simplex to build, keyed by
/// position pairs (i, j) with i < j within the sorted support.
struct SectorSpec {
    std::map<std::pair<int, int>, int> residues;

    static SectorSpec for_edge(int residue) {
        SectorSpec s;
        s.residues[{0, 1}] = residue;
        return s;
    }
    static SectorSpec for_triangle(int r01, int r02, int r12) {
        SectorSpec s;
        s.residues[{0, 1}] = r01;
        s.residues[{0, 2}] = r02;
        s.residues[{1, 2}] = r12;
        return s;
    }
};

/// Builds a simplex whose top tuple realizes the given pairwise sector
/// residues, reusing the supplied face data verbatim. Shared faces are keyed
/// by their support and must agree with each other and with the spec.
FunctorSimplex simplex_from_sectors(const SupportSet& support, const SectorSpec& spec,
                                    const std::map<SupportSet, FunctorSimplex>& shared_faces,
                                    const ModelParams& params);

/// Amalgamates two simplices agreeing on their common face into one simplex
/// on the union support whose restrictions reproduce both inputs literally.
/// Fresh level tuples come from deterministic generic picks.
FunctorSimplex strong_amalgam(const FunctorSimplex& f, const FunctorSimplex& g,
                              const ModelParams& params);

} // namespace shellfill
