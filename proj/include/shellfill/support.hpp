#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "shellfill/errors.hpp"

namespace shellfill {

/// Strictly increasing list of vertex labels.
using SupportSet = std::vector<int>;

inline bool is_sorted_set(const SupportSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

inline bool set_contains(const SupportSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline bool subset_of(const SupportSet& a, const SupportSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline SupportSet set_union(const SupportSet& a, const SupportSet& b) {
    SupportSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline SupportSet set_intersection(const SupportSet& a, const SupportSet& b) {
    SupportSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline SupportSet set_minus(const SupportSet& a, const SupportSet& b) {
    SupportSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Index of v within s; requires v in s.
inline int rank_in(const SupportSet& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) fail(ErrorCode::NotInSupport, "vertex not in support");
    return (int)(it - s.begin());
}

/// All nonempty subsets of s in canonical order.
std::vector<SupportSet> nonempty_subsets(const SupportSet& s);

/// Finite-support bijection of the naturals, stored by its moved points.
class Permutation {
public:
    Permutation() = default;

    /// Builds from moved pairs; validates that the map is a bijection whose
    /// moved set is closed under the map.
    explicit Permutation(const std::map<int, int>& moved);

    static Permutation transposition(int a, int b);

    int apply(int v) const {
        auto it = moved_.find(v);
        return it == moved_.end() ? v : it->second;
    }

    Permutation inverse() const;

    SupportSet apply_set(const SupportSet& s) const;

    /// Sign of the permutation of positions induced on a sorted support.
    int induced_sign(const SupportSet& s) const;

    bool is_identity() const { return moved_.empty(); }
    const std::map<int, int>& moved() const { return moved_; }

private:
    std::map<int, int> moved_;
};

/// Nonempty downward-closed family of subsets of a finite vertex set, viewed
/// as the object set of an index category.
class PrimitiveCategory {
public:
    /// Validates nonemptiness and downward closure.
    explicit PrimitiveCategory(std::set<SupportSet> sets);

    /// Downward closure of the given generators.
    static PrimitiveCategory closure_of(const std::vector<SupportSet>& generators);

    const std::set<SupportSet>& sets() const { return sets_; }
    bool contains(const SupportSet& u) const { return sets_.count(u) > 0; }

    /// Members disjoint from t.
    PrimitiveCategory disjoint_part(const SupportSet& t) const;

    /// Members k disjoint from t with t union k still a member.
    PrimitiveCategory localization(const SupportSet& t) const;

    /// {t union k : t in this, k in other}.
    PrimitiveCategory sum(const PrimitiveCategory& other) const;

    /// Whether the family splits at t: disjoint_part(t) == localization(t).
    bool splits_at(const SupportSet& t) const;

    bool operator==(const PrimitiveCategory& o) const { return sets_ == o.sets_; }

private:
    std::set<SupportSet> sets_;
};

} // namespace shellfill
