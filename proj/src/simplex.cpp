#include "shellfill/simplex.hpp"

#include <sstream>

namespace shellfill {

namespace {

PointTuple restrict_tuple(const SupportSet& from, const PointTuple& tuple, const SupportSet& to) {
    PointTuple out;
    out.reserve(to.size());
    for (int v : to) out.push_back(tuple[(std::size_t)rank_in(from, v)]);
    return out;
}

} // namespace

FunctorSimplex FunctorSimplex::make(SupportSet support, LevelMap levels,
                                    const ModelParams& params) {
    if (support.empty() || !is_sorted_set(support))
        fail(ErrorCode::InvalidArgument, "support must be a nonempty sorted set");

    const auto subsets = nonempty_subsets(support);
    if (levels.size() != subsets.size())
        fail(ErrorCode::MissingLevel, "levels must cover exactly the nonempty subsets");
    for (const auto& u : subsets) {
        auto it = levels.find(u);
        if (it == levels.end()) fail(ErrorCode::MissingLevel, "no level for a subset");
        if (it->second.size() != u.size())
            fail(ErrorCode::MissingLevel, "level tuple length must match subset size");
    }

    // Independence inside each level: pairwise disjoint orbits.
    for (const auto& [u, tuple] : levels)
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j)
                if (same_orbit(tuple[i], tuple[j], params))
                    fail(ErrorCode::DependentLevel, "orbit collision inside a level");

    // Compatibility: for u inside v the u-level and the restricted v-level
    // must have the same type, otherwise there is no elementary transition.
    // Checking covering pairs suffices; restriction preserves type equality.
    for (const auto& [v, vtuple] : levels)
        for (const auto& [u, utuple] : levels) {
            if (u.size() + 1 != v.size() || !subset_of(u, v)) continue;
            if (!same_type(utuple, restrict_tuple(v, vtuple, u), params))
                fail(ErrorCode::IncompatibleLevels, "level types disagree under restriction");
        }

    FunctorSimplex f;
    f.support_ = std::move(support);
    f.levels_ = std::move(levels);
    return f;
}

FunctorSimplex FunctorSimplex::from_points(const SupportSet& support, const PointTuple& points,
                                           const ModelParams& params) {
    if (points.size() != support.size())
        fail(ErrorCode::InvalidArgument, "one point per support vertex required");
    LevelMap levels;
    for (const auto& u : nonempty_subsets(support)) levels[u] = restrict_tuple(support, points, u);
    return make(support, std::move(levels), params);
}

const PointTuple& FunctorSimplex::level(const SupportSet& u) const {
    auto it = levels_.find(u);
    if (it == levels_.end()) fail(ErrorCode::NotInSupport, "no such level");
    return it->second;
}

FunctorSimplex FunctorSimplex::face(const SupportSet& u) const {
    if (u.empty() || !subset_of(u, support_))
        fail(ErrorCode::NotInSupport, "face must be a nonempty subset of the support");
    FunctorSimplex out;
    out.support_ = u;
    for (const auto& [w, tuple] : levels_)
        if (subset_of(w, u)) out.levels_.emplace(w, tuple);
    return out;
}

FunctorSimplex FunctorSimplex::permuted(const Permutation& sigma) const {
    FunctorSimplex out;
    out.support_ = sigma.apply_set(support_);
    for (const auto& [u, tuple] : levels_) {
        SupportSet image = sigma.apply_set(u);
        PointTuple reordered(tuple.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            reordered[(std::size_t)rank_in(image, sigma.apply(u[i]))] = tuple[i];
        out.levels_.emplace(std::move(image), std::move(reordered));
    }
    return out;
}

std::string FunctorSimplex::encoding() const {
    std::ostringstream os;
    os << "[";
    for (int v : support_) os << v << ",";
    os << "]";
    for (const auto& [u, tuple] : levels_) {
        os << "{";
        for (int v : u) os << v << ",";
        os << ":";
        for (const auto& p : tuple) os << p.str() << ",";
        os << "}";
    }
    return os.str();
}

LocalizedFunctor localize(const FunctorSimplex& f, const SupportSet& t) {
    if (!subset_of(t, f.support()))
        fail(ErrorCode::NotInSupport, "localization set must lie in the support");
    LocalizedFunctor out;
    out.support = set_minus(f.support(), t);
    if (t.empty()) {
        out.levels[SupportSet{}] = PointTuple{};
        for (const auto& [u, tuple] : f.levels()) out.levels[u] = tuple;
        return out;
    }
    out.levels[SupportSet{}] = f.level(t);
    for (const auto& v : nonempty_subsets(out.support)) out.levels[v] = f.level(set_union(t, v));
    return out;
}

FunctorSimplex simplex_from_sectors(const SupportSet& support, const SectorSpec& spec,
                                    const std::map<SupportSet, FunctorSimplex>& shared_faces,
                                    const ModelParams& params) {
    const int n = params.n;
    const std::size_t k = support.size();
    if (k < 2 || k > 3)
        fail(ErrorCode::InvalidArgument, "sector construction supports edges and triangles");
    if (spec.residues.size() != k * (k - 1) / 2)
        fail(ErrorCode::InconsistentSpec, "one residue per position pair required");
    auto residue = [&](int i, int j) {
        auto it = spec.residues.find({i, j});
        if (it == spec.residues.end()) fail(ErrorCode::InconsistentSpec, "missing residue");
        int r = it->second % n;
        return r < 0 ? r + n : r;
    };

    if (k == 3) {
        // Composition bound: r02 must be r01 + r12 or r01 + r12 + 1 mod n.
        int gap = ((residue(0, 2) - residue(0, 1) - residue(1, 2)) % n + n) % n;
        if (gap != 0 && gap != 1)
            fail(ErrorCode::InconsistentSpec, "residues violate the composition bound");
    }

    // Realize the top tuple: first point pinned at 0, the rest by generic
    // picks constrained by every earlier point.
    PointTuple pts;
    pts.push_back(CirclePoint(Rational(0)));
    for (std::size_t j = 1; j < k; ++j) {
        std::vector<ArcConstraint> constraints;
        std::vector<CirclePoint> avoid;
        for (std::size_t i = 0; i < j; ++i) {
            constraints.push_back({pts[i], residue((int)i, (int)j)});
            avoid.push_back(pts[i]);
        }
        pts.push_back(pick_generic(constraints, avoid, params));
    }

    FunctorSimplex::LevelMap levels;
    for (const auto& u : nonempty_subsets(support)) levels[u] = restrict_tuple(support, pts, u);

    // Splice in shared face data verbatim.
    for (const auto& [fsupp, fsimplex] : shared_faces) {
        if (!subset_of(fsupp, support) || fsimplex.support() != fsupp)
            fail(ErrorCode::FaceMismatch, "shared face support mismatch");
        for (const auto& [u, tuple] : fsimplex.levels()) {
            for (const auto& [gsupp, gsimplex] : shared_faces) {
                if (gsupp == fsupp || !subset_of(u, gsupp)) continue;
                if (!(gsimplex.level(u) == tuple))
                    fail(ErrorCode::FaceMismatch, "shared faces disagree on a common subset");
            }
            levels[u] = tuple;
        }
    }

    try {
        return FunctorSimplex::make(support, std::move(levels), params);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IncompatibleLevels)
            fail(ErrorCode::FaceMismatch, "shared face data incompatible with the spec");
        throw;
    }
}

FunctorSimplex strong_amalgam(const FunctorSimplex& f, const FunctorSimplex& g,
                              const ModelParams& params) {
    const SupportSet s = f.support();
    const SupportSet t = g.support();
    const SupportSet common = set_intersection(s, t);
    if (!common.empty() && !(f.face(common) == g.face(common)))
        fail(ErrorCode::FaceMismatch, "inputs disagree on their common face");
    if (subset_of(t, s)) return f;
    if (subset_of(s, t)) return g;

    // One concrete realization of the union: the f top supplies the s
    // vertices; each remaining t vertex is picked generically under the
    // sector constraints read off the g top.
    std::map<int, CirclePoint> x;
    for (std::size_t i = 0; i < s.size(); ++i) x.emplace(s[i], f.top()[i]);
    std::vector<CirclePoint> placed;
    for (const auto& [v, p] : x) placed.push_back(p);
    for (int v : set_minus(t, s)) {
        std::vector<ArcConstraint> constraints;
        for (int w : t) {
            if (w == v || !x.count(w)) continue;
            int vi = rank_in(t, v), wi = rank_in(t, w);
            int r = sector_distance(g.top()[(std::size_t)wi], g.top()[(std::size_t)vi], params);
            constraints.push_back({x.at(w), r});
        }
        CirclePoint p = pick_generic(constraints, placed, params);
        x.emplace(v, p);
        placed.push_back(p);
    }

    const SupportSet total = set_union(s, t);
    FunctorSimplex::LevelMap levels;
    for (const auto& u : nonempty_subsets(total)) {
        if (subset_of(u, s)) {
            levels[u] = f.level(u);
        } else if (subset_of(u, t)) {
            levels[u] = g.level(u);
        } else {
            PointTuple tuple;
            for (int v : u) tuple.push_back(x.at(v));
            levels[u] = std::move(tuple);
        }
    }
    return FunctorSimplex::make(total, std::move(levels), params);
}

} // namespace shellfill
