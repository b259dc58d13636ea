#include "shellfill/support.hpp"

namespace shellfill {

std::vector<SupportSet> nonempty_subsets(const SupportSet& s) {
    std::vector<SupportSet> out;
    const std::size_t k = s.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
        SupportSet u;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) u.push_back(s[i]);
        out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation::Permutation(const std::map<int, int>& moved) {
    std::set<int> keys, values;
    for (const auto& [from, to] : moved) {
        if (from < 0 || to < 0) fail(ErrorCode::InvalidArgument, "negative vertex label");
        if (from == to) continue;
        keys.insert(from);
        values.insert(to);
        moved_[from] = to;
    }
    if (keys != values)
        fail(ErrorCode::InvalidArgument, "moved pairs do not form a bijection");
}

Permutation Permutation::transposition(int a, int b) {
    if (a == b) return Permutation();
    std::map<int, int> m{{a, b}, {b, a}};
    return Permutation(m);
}

Permutation Permutation::inverse() const {
    std::map<int, int> inv;
    for (const auto& [from, to] : moved_) inv[to] = from;
    return Permutation(inv);
}

SupportSet Permutation::apply_set(const SupportSet& s) const {
    SupportSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(apply(v));
    std::sort(out.begin(), out.end());
    if (!is_sorted_set(out)) fail(ErrorCode::Internal, "permutation collapsed a support");
    return out;
}

int Permutation::induced_sign(const SupportSet& s) const {
    SupportSet image = apply_set(s);
    // Position permutation: slot j holds the rank of apply(s[j]) in the image.
    std::vector<int> pos(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) pos[j] = rank_in(image, apply(s[j]));
    int sign = 1;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j]) sign = -sign;
    return sign;
}

PrimitiveCategory::PrimitiveCategory(std::set<SupportSet> sets) : sets_(std::move(sets)) {
    if (sets_.empty()) fail(ErrorCode::InvalidArgument, "primitive category must be nonempty");
    for (const auto& s : sets_) {
        if (!is_sorted_set(s)) fail(ErrorCode::InvalidArgument, "member not a sorted set");
        for (std::size_t i = 0; i < s.size(); ++i) {
            SupportSet sub = s;
            sub.erase(sub.begin() + (long)i);
            if (!sets_.count(sub))
                fail(ErrorCode::InvalidArgument, "family is not downward closed");
        }
    }
}

PrimitiveCategory PrimitiveCategory::closure_of(const std::vector<SupportSet>& generators) {
    std::set<SupportSet> all;
    all.insert(SupportSet{});
    for (const auto& g : generators) {
        if (!is_sorted_set(g)) fail(ErrorCode::InvalidArgument, "generator not a sorted set");
        const std::size_t k = g.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
            SupportSet u;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t(1) << i)) u.push_back(g[i]);
            all.insert(std::move(u));
        }
    }
    return PrimitiveCategory(std::move(all));
}

PrimitiveCategory PrimitiveCategory::disjoint_part(const SupportSet& t) const {
    std::set<SupportSet> out;
    for (const auto& k : sets_)
        if (set_intersection(k, t).empty()) out.insert(k);
    return PrimitiveCategory(std::move(out));
}

PrimitiveCategory PrimitiveCategory::localization(const SupportSet& t) const {
    std::set<SupportSet> out;
    for (const auto& k : sets_)
        if (set_intersection(k, t).empty() && sets_.count(set_union(k, t))) out.insert(k);
    return PrimitiveCategory(std::move(out));
}

PrimitiveCategory PrimitiveCategory::sum(const PrimitiveCategory& other) const {
    std::set<SupportSet> out;
    for (const auto& t : sets_)
        for (const auto& k : other.sets_) out.insert(set_union(t, k));
    return PrimitiveCategory(std::move(out));
}

bool PrimitiveCategory::splits_at(const SupportSet& t) const {
    return disjoint_part(t) == localization(t);
}

} // namespace shellfill
