#pragma once

#include <vector>

#include "shellfill/rational.hpp"

namespace shellfill {

/// Parameters of the circular structure: a circle with the clockwise ternary
/// order and the rotation by 1/n of a full turn. Clockwise = increasing
/// coordinate mod 1 throughout.
struct ModelParams {
    int n;

    explicit ModelParams(int rotation_order) : n(rotation_order) {
        if (n < 2) fail(ErrorCode::InvalidArgument, "rotation order must be >= 2");
    }
};

/// A point on the unit circle, stored as an exact fraction of a full turn
/// normalized into [0, 1).
class CirclePoint {
public:
    CirclePoint() : v_(0) {}
    explicit CirclePoint(const Rational& v) : v_(v.mod1()) {}
    CirclePoint(std::int64_t num, std::int64_t den) : v_(Rational(num, den).mod1()) {}

    const Rational& value() const { return v_; }

    bool operator==(const CirclePoint& o) const { return v_ == o.v_; }
    bool operator!=(const CirclePoint& o) const { return v_ != o.v_; }
    bool operator<(const CirclePoint& o) const { return v_ < o.v_; }

    std::string str() const { return v_.str(); }

private:
    Rational v_;
};

using PointTuple = std::vector<CirclePoint>;

CirclePoint rotate(const CirclePoint& p, long long i, const ModelParams& params);

/// The ternary order S: a, b, c pairwise distinct and b comes before c going
/// clockwise around the circle starting at a.
bool clockwise_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

/// The relaxed arc predicate: (x != z and S(x,y,z)) or (x == z and x != y).
/// With x == z the "arc" is the whole circle minus x.
bool arc_contains(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);

/// Unique element of p's rotation orbit with coordinate in [0, 1/n).
CirclePoint orbit_rep(const CirclePoint& p, const ModelParams& params);

bool same_orbit(const CirclePoint& a, const CirclePoint& b, const ModelParams& params);

/// Sector index of b relative to a: the unique k in [0, n) with b strictly
/// inside the arc from g^k(a) to g^{k+1}(a). Requires disjoint orbits.
int sector_distance(const CirclePoint& a, const CirclePoint& b, const ModelParams& params);

/// Whether residue v lies in the cyclic interval [lo, hi] mod n.
bool in_cyclic_interval(long long v, long long lo, long long hi, int n);

/// Canonical invariant of a tuple's atomic configuration: the cyclic sequence
/// of (tuple index, orbit exponent) labels of all orbit points read clockwise,
/// canonicalized to its lexicographically least rotation. Two tuples get equal
/// fingerprints exactly when a structure automorphism maps one to the other.
struct TypeFingerprint {
    std::vector<std::vector<std::pair<int, int>>> labels;

    bool operator==(const TypeFingerprint& o) const { return labels == o.labels; }
    bool operator<(const TypeFingerprint& o) const { return labels < o.labels; }
};

TypeFingerprint fingerprint(const PointTuple& tuple, const ModelParams& params);

bool same_type(const PointTuple& t1, const PointTuple& t2, const ModelParams& params);

/// Sector constraint for generic point selection: the chosen point must lie
/// strictly inside the arc from g^residue(anchor) to g^(residue+1)(anchor).
struct ArcConstraint {
    CirclePoint anchor;
    int residue;
};

/// Open clockwise arc from `start` of length `len` (0 < len <= 1).
struct Arc {
    CirclePoint start;
    Rational len;
};

/// Overlap of two open arcs whose lengths sum to at most a full turn, so the
/// overlap is a single (possibly empty) arc.
bool arc_intersection(const Arc& a, const Arc& b, Arc& out);

/// Deterministic pick inside an open arc: dyadic midpoints level by level,
/// first candidate whose orbit avoids every orbit in `avoid`.
CirclePoint pick_in_arc(const Arc& arc, const std::vector<CirclePoint>& avoid,
                        const ModelParams& params);

/// Deterministic generic point: intersects the constraint arcs (seeded with
/// the arc (0, 1/n) when no constraints are given) and bisects, skipping
/// candidates whose orbit meets an anchor or avoid orbit.
CirclePoint pick_generic(const std::vector<ArcConstraint>& constraints,
                         const std::vector<CirclePoint>& avoid, const ModelParams& params);

/// Least number of steps from a to b where each step stays strictly inside an
/// open 1/n arc; 0 iff a == b.
long long lascar_distance(const CirclePoint& a, const CirclePoint& b, const ModelParams& params);

} // namespace shellfill
