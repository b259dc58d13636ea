#include "shellfill/circle.hpp"

#include <algorithm>
#include <map>

namespace shellfill {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::SameOrbit: return "SameOrbit";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptyArc: return "EmptyArc";
        case ErrorCode::MixedDimension: return "MixedDimension";
        case ErrorCode::NotInSupport: return "NotInSupport";
        case ErrorCode::MissingLevel: return "MissingLevel";
        case ErrorCode::DependentLevel: return "DependentLevel";
        case ErrorCode::IncompatibleLevels: return "IncompatibleLevels";
        case ErrorCode::FaceMismatch: return "FaceMismatch";
        case ErrorCode::InconsistentSpec: return "InconsistentSpec";
        case ErrorCode::InvalidSite: return "InvalidSite";
        case ErrorCode::NotVanishing: return "NotVanishing";
        case ErrorCode::VertexInUse: return "VertexInUse";
        case ErrorCode::NotOneShellBoundary: return "NotOneShellBoundary";
        case ErrorCode::HypothesisFails: return "HypothesisFails";
        case ErrorCode::NotRenameable: return "NotRenameable";
        case ErrorCode::NotMinimal: return "NotMinimal";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::TooLong: return "TooLong";
        case ErrorCode::NotCentered: return "NotCentered";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

CirclePoint rotate(const CirclePoint& p, long long i, const ModelParams& params) {
    long long r = i % params.n;
    if (r < 0) r += params.n;
    return CirclePoint(p.value() + Rational(r, params.n));
}

bool clockwise_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
    if (a == b || b == c || a == c) return false;
    Rational ab = (b.value() - a.value()).mod1();
    Rational ac = (c.value() - a.value()).mod1();
    return ab < ac;
}

bool arc_contains(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    if (x != z) return clockwise_between(x, y, z);
    return x != y;
}

CirclePoint orbit_rep(const CirclePoint& p, const ModelParams& params) {
    Rational scaled = p.value() * Rational(params.n);
    Rational frac = scaled - Rational(scaled.floor());
    return CirclePoint(frac / Rational(params.n));
}

bool same_orbit(const CirclePoint& a, const CirclePoint& b, const ModelParams& params) {
    return orbit_rep(a, params) == orbit_rep(b, params);
}

int sector_distance(const CirclePoint& a, const CirclePoint& b, const ModelParams& params) {
    if (same_orbit(a, b, params))
        fail(ErrorCode::SameOrbit, "sector distance needs disjoint orbits");
    Rational r = (b.value() - a.value()).mod1();
    return (int)(r * Rational(params.n)).floor();
}

bool in_cyclic_interval(long long v, long long lo, long long hi, int n) {
    auto m = [n](long long x) {
        long long r = x % n;
        return r < 0 ? r + n : r;
    };
    return m(v - lo) <= m(hi - lo);
}

TypeFingerprint fingerprint(const PointTuple& tuple, const ModelParams& params) {
    // Collect all orbit points g^i(t_j) grouped by position on the circle.
    std::vector<std::pair<Rational, std::pair<int, int>>> points;
    points.reserve(tuple.size() * (std::size_t)params.n);
    for (int j = 0; j < (int)tuple.size(); ++j) {
        Rational step(1, params.n);
        Rational pos = tuple[j].value();
        for (int i = 0; i < params.n; ++i) {
            points.emplace_back(pos, std::make_pair(j, i));
            pos = (pos + step).mod1();
        }
    }
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });

    std::vector<std::vector<std::pair<int, int>>> seq;
    for (std::size_t i = 0; i < points.size();) {
        std::size_t j = i;
        std::vector<std::pair<int, int>> labels;
        while (j < points.size() && points[j].first == points[i].first)
            labels.push_back(points[j++].second);
        seq.push_back(std::move(labels));
        i = j;
    }

    // Canonical start: lexicographically least rotation of the cyclic sequence.
    TypeFingerprint best;
    const std::size_t m = seq.size();
    for (std::size_t shift = 0; shift < m; ++shift) {
        std::vector<std::vector<std::pair<int, int>>> rot;
        rot.reserve(m);
        for (std::size_t i = 0; i < m; ++i) rot.push_back(seq[(shift + i) % m]);
        if (shift == 0 || rot < best.labels) best.labels = std::move(rot);
    }
    return best;
}

bool same_type(const PointTuple& t1, const PointTuple& t2, const ModelParams& params) {
    if (t1.size() != t2.size())
        fail(ErrorCode::LengthMismatch, "tuples must have equal length");
    const std::size_t k = t1.size();
    if (k <= 1) return true; // a single 1-type

    // For tuples with pairwise disjoint orbits the sector residues determine
    // the type; fall back to the full fingerprint otherwise.
    auto disjoint = [&](const PointTuple& t) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (same_orbit(t[i], t[j], params)) return false;
        return true;
    };
    if (disjoint(t1)) {
        if (!disjoint(t2)) return false;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (sector_distance(t1[i], t1[j], params) != sector_distance(t2[i], t2[j], params))
                    return false;
        return true;
    }
    if (disjoint(t2)) return false;
    return fingerprint(t1, params) == fingerprint(t2, params);
}

bool arc_intersection(const Arc& a, const Arc& b, Arc& out) {
    Rational off_ba = (b.start.value() - a.start.value()).mod1();
    if (off_ba < a.len) {
        Rational len = std::min(a.len - off_ba, b.len);
        if (len > Rational(0)) {
            out = Arc{b.start, len};
            return true;
        }
        return false;
    }
    Rational off_ab = (a.start.value() - b.start.value()).mod1();
    if (off_ab < b.len) {
        Rational len = std::min(b.len - off_ab, a.len);
        if (len > Rational(0)) {
            out = Arc{a.start, len};
            return true;
        }
    }
    return false;
}

CirclePoint pick_in_arc(const Arc& arc, const std::vector<CirclePoint>& avoid,
                        const ModelParams& params) {
    if (!(arc.len > Rational(0))) fail(ErrorCode::EmptyArc, "empty arc");
    auto excluded = [&](const CirclePoint& cand) {
        for (const auto& p : avoid)
            if (same_orbit(cand, p, params)) return true;
        return false;
    };
    std::int64_t denom = 2;
    for (int level = 1; level <= 48; ++level) {
        for (std::int64_t m = 1; m < denom; m += 2) {
            CirclePoint cand(arc.start.value() + arc.len * Rational(m, denom));
            if (!excluded(cand)) return cand;
        }
        denom *= 2;
    }
    fail(ErrorCode::Internal, "arc bisection exhausted");
}

CirclePoint pick_generic(const std::vector<ArcConstraint>& constraints,
                         const std::vector<CirclePoint>& avoid, const ModelParams& params) {
    Rational sector(1, params.n);
    Arc arc{CirclePoint(Rational(0)), sector};
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        Arc carc{rotate(constraints[i].anchor, constraints[i].residue, params), sector};
        if (i == 0) {
            arc = carc;
            continue;
        }
        Arc next;
        if (!arc_intersection(arc, carc, next))
            fail(ErrorCode::EmptyArc, "constraint arcs have empty intersection");
        arc = next;
    }
    std::vector<CirclePoint> blocked = avoid;
    for (const auto& c : constraints) blocked.push_back(c.anchor);
    return pick_in_arc(arc, blocked, params);
}

long long lascar_distance(const CirclePoint& a, const CirclePoint& b, const ModelParams& params) {
    if (a == b) return 0;
    Rational d = (b.value() - a.value()).mod1();
    Rational theta = std::min(d, Rational(1) - d);
    Rational scaled = theta * Rational(params.n);
    // Each step moves strictly less than 1/n, so the count is the least
    // integer strictly greater than n*theta.
    return scaled.floor() + 1;
}

} // namespace shellfill
