#pragma once

#include <concepts>
#include <map>

#include "shellfill/support.hpp"

namespace shellfill {

/// Contract the chain algebra needs from a simplex value: a sorted support,
/// restriction to a subset of it, relabeling along a permutation, and a
/// total order for standard forms.
template <class S>
concept SimplexLike = requires(const S& s, const SupportSet& u, const Permutation& sigma) {
    { s.support() } -> std::convertible_to<SupportSet>;
    { s.face(u) } -> std::convertible_to<S>;
    { s.permuted(sigma) } -> std::convertible_to<S>;
    { s == s } -> std::convertible_to<bool>;
    { s < s } -> std::convertible_to<bool>;
};

/// Integer formal sum of simplices, kept in standard form: coefficients are
/// nonzero and simplices pairwise distinct.
template <SimplexLike S>
class Chain {
public:
    using Terms = std::map<S, long long>;

    Chain() = default;

    static Chain single(const S& simplex, long long coeff = 1) {
        Chain c;
        c.add(coeff, simplex);
        return c;
    }

    void add(long long coeff, const S& simplex) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(simplex, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Chain operator+(const Chain& o) const {
        Chain out = *this;
        for (const auto& [s, c] : o.terms_) out.add(c, s);
        return out;
    }

    Chain operator-(const Chain& o) const {
        Chain out = *this;
        for (const auto& [s, c] : o.terms_) out.add(-c, s);
        return out;
    }

    Chain operator-() const {
        Chain out;
        for (const auto& [s, c] : terms_) out.add(-c, s);
        return out;
    }

    bool operator==(const Chain& o) const { return terms_ == o.terms_; }
    bool operator!=(const Chain& o) const { return terms_ != o.terms_; }
    bool operator<(const Chain& o) const { return terms_ < o.terms_; }

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Sum of absolute coefficients.
    long long length() const {
        long long len = 0;
        for (const auto& [s, c] : terms_) len += c < 0 ? -c : c;
        return len;
    }

    long long coeff(const S& simplex) const {
        auto it = terms_.find(simplex);
        return it == terms_.end() ? 0 : it->second;
    }

    SupportSet support() const {
        SupportSet out;
        for (const auto& [s, c] : terms_) out = set_union(out, s.support());
        return out;
    }

    const Terms& terms() const { return terms_; }

private:
    Terms terms_;
};

/// Alternating face sum; linear. All terms must share one support size >= 2.
template <SimplexLike S>
Chain<S> boundary(const Chain<S>& c) {
    std::size_t dim_size = 0;
    for (const auto& [f, coeff] : c.terms()) {
        const SupportSet s = f.support();
        if (dim_size == 0) dim_size = s.size();
        if (s.size() != dim_size)
            fail(ErrorCode::MixedDimension, "boundary of a mixed-dimension chain");
    }
    if (dim_size == 1)
        fail(ErrorCode::MixedDimension, "boundary undefined below dimension 1");
    Chain<S> out;
    for (const auto& [f, coeff] : c.terms()) {
        const SupportSet s = f.support();
        long long sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            SupportSet u = s;
            u.erase(u.begin() + (long)i);
            out.add(sign * coeff, f.face(u));
            sign = -sign;
        }
    }
    return out;
}

/// Whether c is a shell: +-(sum of (-1)^i f_i) over d+2 simplices of support
/// size d+1 whose faces agree pairwise on common supports.
template <SimplexLike S>
bool is_shell(const Chain<S>& c) {
    const std::size_t m = c.term_count();
    if (m < 3) return false;
    SupportSet total;
    for (const auto& [f, coeff] : c.terms()) {
        if (coeff != 1 && coeff != -1) return false;
        if (f.support().size() + 1 != m) return false;
        total = set_union(total, f.support());
    }
    if (total.size() != m) return false;

    // Order terms by the vertex they omit.
    std::vector<const S*> by_missing(m, nullptr);
    std::vector<long long> coeffs(m, 0);
    for (const auto& [f, coeff] : c.terms()) {
        SupportSet missing = set_minus(total, f.support());
        if (missing.size() != 1) return false;
        int idx = rank_in(total, missing[0]);
        if (by_missing[idx]) return false;
        by_missing[idx] = &f;
        coeffs[idx] = coeff;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!by_missing[i]) return false;
        long long expected = (i % 2 == 0) ? coeffs[0] : -coeffs[0];
        if (coeffs[i] != expected) return false;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            SupportSet common = set_minus(total, SupportSet{total[i], total[j]});
            if (!(by_missing[i]->face(common) == by_missing[j]->face(common))) return false;
        }
    return true;
}

/// Signed relabeling action: each term is relabeled along sigma and its
/// coefficient multiplied by the sign of the induced position permutation.
template <SimplexLike S>
Chain<S> permute_chain(const Permutation& sigma, const Chain<S>& c) {
    Chain<S> out;
    for (const auto& [f, coeff] : c.terms())
        out.add(coeff * sigma.induced_sign(f.support()), f.permuted(sigma));
    return out;
}

/// Whether every term of d appears in c with the same sign and no larger
/// magnitude.
template <SimplexLike S>
bool subchain_of(const Chain<S>& d, const Chain<S>& c) {
    for (const auto& [f, m] : d.terms()) {
        long long n = c.coeff(f);
        if (n * m <= 0) return false;
        if ((m < 0 ? -m : m) > (n < 0 ? -n : n)) return false;
    }
    return true;
}

} // namespace shellfill
