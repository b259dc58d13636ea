#include "shellfill/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace shellfill {

namespace {

/// Signed face of the term eps*f at the subset u of its support: the sign is
/// eps times (-1)^(rank of the dropped vertex).
SignedFace signed_face(int eps, const FunctorSimplex& f, const SupportSet& u) {
    SupportSet dropped = set_minus(f.support(), u);
    if (dropped.size() != 1) fail(ErrorCode::Internal, "signed_face wants a codimension-1 subset");
    int sign = rank_in(f.support(), dropped[0]) % 2 == 0 ? 1 : -1;
    return SignedFace{eps * sign, f.face(u)};
}

int sign_of(long long coeff) { return coeff < 0 ? -1 : 1; }

} // namespace

ShellFaces one_shell_boundary(const FChain& c) {
    FChain b;
    try {
        b = boundary(c);
    } catch (const Error&) {
        fail(ErrorCode::NotOneShellBoundary, "boundary undefined");
    }
    if (!is_shell(b) || b.term_count() != 3)
        fail(ErrorCode::NotOneShellBoundary, "boundary is not a 1-shell");
    SupportSet verts = b.support();
    ShellFaces out;
    out.vertices = verts;
    int orientation = 0;
    for (const auto& [f, coeff] : b.terms()) {
        SupportSet missing = set_minus(verts, f.support());
        int idx = rank_in(verts, missing[0]);
        if (idx == 0) {
            out.f12 = f;
            orientation = (int)coeff;
        } else if (idx == 1) {
            out.f02 = f;
        } else {
            out.f01 = f;
        }
    }
    out.orientation = orientation;
    return out;
}

std::vector<CrossSite> find_cross_sites(const FChain& c) {
    for (const auto& [f, coeff] : c.terms())
        if (f.support().size() != 3)
            fail(ErrorCode::InvalidArgument, "crossing sites are defined on 2-chains");

    std::vector<CrossSite> sites;
    for (auto it1 = c.terms().begin(); it1 != c.terms().end(); ++it1)
        for (auto it2 = std::next(it1); it2 != c.terms().end(); ++it2) {
            const FunctorSimplex& a1 = it1->first;
            const FunctorSimplex& a2 = it2->first;
            SupportSet common = set_intersection(a1.support(), a2.support());
            if (common.size() != 2) continue;
            if (!(a1.face(common) == a2.face(common))) continue;
            int eps1 = sign_of(it1->second);
            int eps2 = sign_of(it2->second);
            SignedFace g1 = signed_face(eps1, a1, common);
            SignedFace g2 = signed_face(eps2, a2, common);
            if (g1.sign + g2.sign != 0) continue; // common face must cancel
            CrossSite site;
            site.alpha1 = a1;
            site.alpha2 = a2;
            site.eps1 = eps1;
            site.eps2 = eps2;
            site.k1 = set_minus(a1.support(), common)[0];
            site.k2 = set_minus(a2.support(), common)[0];
            site.l1 = common[0];
            site.l2 = common[1];
            sites.push_back(std::move(site));
        }
    return sites;
}

std::string chain_hash(const FChain& c) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [f, coeff] : c.terms()) {
        mix(std::to_string(coeff));
        mix(f.encoding());
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

FChain apply_cross(const FChain& c, const CrossSite& site, const ModelParams& params,
                   const TraceSink& trace) {
    long long c1 = c.coeff(site.alpha1);
    long long c2 = c.coeff(site.alpha2);
    if (c1 * site.eps1 <= 0 || c2 * site.eps2 <= 0)
        fail(ErrorCode::InvalidSite, "site terms not present with the given signs");
    SupportSet common{site.l1, site.l2};
    if (!(site.alpha1.face(common) == site.alpha2.face(common)))
        fail(ErrorCode::InvalidSite, "site faces no longer agree");
    if (signed_face(site.eps1, site.alpha1, common).sign +
            signed_face(site.eps2, site.alpha2, common).sign !=
        0)
        fail(ErrorCode::InvalidSite, "common face does not cancel");

    FunctorSimplex mu = strong_amalgam(site.alpha1, site.alpha2, params);
    SupportSet b1s{site.k1, site.k2, site.l1};
    SupportSet b2s{site.k1, site.k2, site.l2};
    std::sort(b1s.begin(), b1s.end());
    std::sort(b2s.begin(), b2s.end());
    FunctorSimplex beta1 = mu.face(b1s);
    FunctorSimplex beta2 = mu.face(b2s);

    SupportSet all{site.k1, site.k2, site.l1, site.l2};
    std::sort(all.begin(), all.end());
    auto sgn = [&all](int v) { return rank_in(all, v) % 2 == 0 ? 1 : -1; };
    int sigma = site.eps1 * sgn(site.k2);

    FChain out = c;
    out.add(-site.eps1, site.alpha1);
    out.add(-site.eps2, site.alpha2);
    out.add(-sigma * sgn(site.l2), beta1);
    out.add(-sigma * sgn(site.l1), beta2);
    if (out.length() > c.length()) fail(ErrorCode::Internal, "crossing increased length");
    if (trace) {
        std::ostringstream os;
        os << "k1=" << site.k1 << " k2=" << site.k2 << " l1=" << site.l1 << " l2=" << site.l2;
        trace(TraceEntry{"cross", os.str(), chain_hash(c), chain_hash(out)});
    }
    return out;
}

FChain apply_rename(const FChain& c, const FChain& d, int j, int k, const TraceSink& trace) {
    if (!subchain_of(d, c) || d.empty())
        fail(ErrorCode::InvalidArgument, "renaming needs a nonempty subchain");
    if (!set_contains(d.support(), j))
        fail(ErrorCode::NotVanishing, "vertex not in the subchain support");
    if (set_contains(boundary(d).support(), j))
        fail(ErrorCode::NotVanishing, "vertex does not vanish from the subchain boundary");
    if (set_contains(c.support(), k))
        fail(ErrorCode::VertexInUse, "replacement vertex already used");
    if (k < 0) fail(ErrorCode::InvalidArgument, "vertex labels are nonnegative");

    FChain out = c - d + permute_chain(Permutation::transposition(j, k), d);
    if (trace) {
        std::ostringstream os;
        os << j << "->" << k;
        trace(TraceEntry{"rename", os.str(), chain_hash(c), chain_hash(out)});
    }
    return out;
}

FChain ChainWalk::chain() const {
    FChain out;
    for (const auto& [eps, b] : terms) out.add(eps, b);
    return out;
}

bool validate_walk(const ChainWalk& w) {
    const std::size_t m = w.terms.size();
    if (m == 0 || w.sequence.size() != m + 1) return false;
    for (int k : w.sequence)
        if (k == w.center) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (w.sequence[i] == w.sequence[i + 1]) return false;
        SupportSet expect{w.center, w.sequence[i], w.sequence[i + 1]};
        std::sort(expect.begin(), expect.end());
        if (w.terms[i].second.support() != expect) return false;
        if (w.terms[i].first != 1 && w.terms[i].first != -1) return false;
    }
    SupportSet from_supp{w.center, w.sequence.front()};
    std::sort(from_supp.begin(), from_supp.end());
    if (w.from.simplex.support() != from_supp) return false;
    if (!(signed_face(w.terms.front().first, w.terms.front().second, from_supp) == w.from))
        return false;
    SupportSet to_supp{w.center, w.sequence.back()};
    std::sort(to_supp.begin(), to_supp.end());
    if (w.to.simplex.support() != to_supp) return false;
    if (!(signed_face(w.terms.back().first, w.terms.back().second, to_supp) == w.to)) return false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        SupportSet shared{w.center, w.sequence[i + 1]};
        std::sort(shared.begin(), shared.end());
        SignedFace a = signed_face(w.terms[i].first, w.terms[i].second, shared);
        SignedFace b = signed_face(w.terms[i + 1].first, w.terms[i + 1].second, shared);
        if (a.sign + b.sign != 0 || !(a.simplex == b.simplex)) return false;
    }
    return true;
}

namespace {

struct WalkUnit {
    int eps;
    FunctorSimplex simplex;
};

struct WalkSearch {
    const FChain* chain;
    int center;
    SignedFace from, to;
    const FunctorSimplex* must_end_with;
    std::vector<WalkUnit> units;
    std::vector<int> used; // how many copies of units[i] are in the current path
    std::vector<long long> avail;
    std::vector<std::size_t> path;
    std::vector<int> labels;
    std::vector<std::size_t> best_path;
    std::vector<int> best_labels;
    std::size_t nodes = 0;

    void record_if_complete(int last_label, const SignedFace& pending) {
        SupportSet to_supp = to.simplex.support();
        SupportSet here{center, last_label};
        std::sort(here.begin(), here.end());
        if (here != to_supp) return;
        if (!(pending == to)) return;
        if (must_end_with && !(units[path.back()].simplex == *must_end_with)) return;
        if (path.size() > best_path.size()) {
            best_path = path;
            best_labels = labels;
        }
    }

    void dfs(int last_label, const SignedFace& pending) {
        if (++nodes > 2000000) fail(ErrorCode::Internal, "walk search exploded");
        record_if_complete(last_label, pending);
        SupportSet shared{center, last_label};
        std::sort(shared.begin(), shared.end());
        for (std::size_t i = 0; i < units.size(); ++i) {
            if (used[i] >= avail[i]) continue;
            const auto& u = units[i];
            if (!subset_of(shared, u.simplex.support())) continue;
            SignedFace mine = signed_face(u.eps, u.simplex, shared);
            if (mine.sign + pending.sign != 0 || !(mine.simplex == pending.simplex)) continue;
            int next_label = set_minus(u.simplex.support(), shared)[0];
            SupportSet next_supp{center, next_label};
            std::sort(next_supp.begin(), next_supp.end());
            SignedFace next_pending = signed_face(u.eps, u.simplex, next_supp);
            ++used[i];
            path.push_back(i);
            labels.push_back(next_label);
            dfs(next_label, next_pending);
            labels.pop_back();
            path.pop_back();
            --used[i];
        }
    }
};

} // namespace

ChainWalk extract_chain_walk(const FChain& c, const SignedFace& from, const SignedFace& to,
                             int center, const FunctorSimplex* must_end_with) {
    one_shell_boundary(c); // precondition: the boundary is a 1-shell

    if (from.simplex.support().size() != 2 || !set_contains(from.simplex.support(), center) ||
        to.simplex.support().size() != 2 || !set_contains(to.simplex.support(), center))
        fail(ErrorCode::InvalidArgument, "walk endpoints must be edges through the center");

    WalkSearch search;
    search.chain = &c;
    search.center = center;
    search.from = from;
    search.to = to;
    search.must_end_with = must_end_with;
    for (const auto& [f, coeff] : c.terms()) {
        if (f.support().size() != 3 || !set_contains(f.support(), center)) continue;
        search.units.push_back(WalkUnit{sign_of(coeff), f});
        search.avail.push_back(coeff < 0 ? -coeff : coeff);
    }
    // Deterministic exploration order.
    {
        std::vector<std::size_t> order(search.units.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto& ua = search.units[a];
            const auto& ub = search.units[b];
            if (ua.eps != ub.eps) return ua.eps > ub.eps;
            return ua.simplex < ub.simplex;
        });
        std::vector<WalkUnit> units;
        std::vector<long long> avail;
        for (std::size_t i : order) {
            units.push_back(search.units[i]);
            avail.push_back(search.avail[i]);
        }
        search.units = std::move(units);
        search.avail = std::move(avail);
    }
    search.used.assign(search.units.size(), 0);

    const SupportSet from_supp = from.simplex.support();
    int first_label = set_minus(from_supp, SupportSet{center})[0];
    for (std::size_t i = 0; i < search.units.size(); ++i) {
        const auto& u = search.units[i];
        if (!subset_of(from_supp, u.simplex.support())) continue;
        SignedFace start = signed_face(u.eps, u.simplex, from_supp);
        if (!(start == from)) continue;
        int next_label = set_minus(u.simplex.support(), from_supp)[0];
        SupportSet next_supp{center, next_label};
        std::sort(next_supp.begin(), next_supp.end());
        ++search.used[i];
        search.path.push_back(i);
        search.labels = {first_label, next_label};
        search.dfs(next_label, signed_face(u.eps, u.simplex, next_supp));
        search.labels.clear();
        search.path.pop_back();
        --search.used[i];
    }

    if (search.best_path.empty())
        fail(ErrorCode::NotOneShellBoundary, "no chain-walk between the given faces");

    ChainWalk walk;
    walk.center = center;
    walk.from = from;
    walk.to = to;
    walk.sequence = search.best_labels;
    for (std::size_t i : search.best_path)
        walk.terms.emplace_back(search.units[i].eps, search.units[i].simplex);
    if (!validate_walk(walk)) fail(ErrorCode::Internal, "extracted walk failed validation");
    return walk;
}

namespace {

/// One crossing of two adjacent walk terms; returns the new in-walk term and
/// the shed off-center term.
void cross_adjacent(const ChainWalk& walk, std::size_t pos, const ModelParams& params,
                    const TraceSink& trace, std::pair<int, FunctorSimplex>& new_term,
                    FChain& shed) {
    const auto& [e1, b1] = walk.terms[pos];
    const auto& [e2, b2] = walk.terms[pos + 1];
    SupportSet common = set_intersection(b1.support(), b2.support());
    CrossSite site;
    site.alpha1 = b1;
    site.alpha2 = b2;
    site.eps1 = e1;
    site.eps2 = e2;
    site.k1 = set_minus(b1.support(), common)[0];
    site.k2 = set_minus(b2.support(), common)[0];
    site.l1 = common[0];
    site.l2 = common[1];
    FChain pair;
    pair.add(e1, b1);
    pair.add(e2, b2);
    FChain replaced = apply_cross(pair, site, params, trace);
    bool found = false;
    for (const auto& [f, coeff] : replaced.terms()) {
        if (set_contains(f.support(), walk.center)) {
            new_term = {(int)coeff, f};
            found = true;
        } else {
            shed.add(coeff, f);
        }
    }
    if (!found) fail(ErrorCode::Internal, "crossing lost the centered term");
}

} // namespace

CollapseResult collapse_section(const ChainWalk& walk, std::size_t sec_begin, std::size_t sec_end,
                                const ModelParams& params, const TraceSink& trace) {
    if (sec_end >= walk.terms.size() || sec_begin > sec_end)
        fail(ErrorCode::InvalidArgument, "section indices out of range");
    if (!validate_walk(walk)) fail(ErrorCode::InvalidArgument, "input is not a chain-walk");

    const auto& seq = walk.sequence;
    bool hyp_end = true; // labels k_i != k_{sec_end+1} for i in [sec_begin, sec_end]
    for (std::size_t i = sec_begin; i <= sec_end; ++i)
        if (seq[i] == seq[sec_end + 1]) hyp_end = false;
    bool hyp_start = true; // labels k_i != k_{sec_begin} for i in [sec_begin+1, sec_end+1]
    for (std::size_t i = sec_begin + 1; i <= sec_end + 1; ++i)
        if (seq[i] == seq[sec_begin]) hyp_start = false;
    if (!hyp_end && !hyp_start)
        fail(ErrorCode::HypothesisFails, "neither section hypothesis holds");

    ChainWalk work = walk;
    CollapseResult out;
    while (sec_end > sec_begin) {
        std::size_t pos = hyp_end ? sec_end - 1 : sec_begin;
        std::pair<int, FunctorSimplex> merged{0, work.terms[pos].second};
        cross_adjacent(work, pos, params, trace, merged, out.shed);
        work.terms.erase(work.terms.begin() + (long)pos);
        work.terms[pos] = merged;
        work.sequence.erase(work.sequence.begin() + (long)pos + 1);
        --sec_end;
    }
    if (!validate_walk(work)) fail(ErrorCode::Internal, "collapse broke the walk");
    out.walk = std::move(work);
    return out;
}

namespace {

/// Shared engine for the subsummand searches: selects per-term unit counts so
/// that every tracked face balance vanishes. Faces are interned to indices so
/// the DFS works on flat vectors.
std::optional<FChain> find_balanced_subsummand(const FChain& c,
                                               const std::optional<int>& vanish_vertex) {
    struct Term {
        const FunctorSimplex* f;
        long long max_units;
        int sign;
        std::vector<std::pair<std::size_t, int>> faces; // face index, unit sign
    };
    std::vector<Term> terms;
    std::map<FunctorSimplex, std::size_t> face_ids;
    for (const auto& [f, coeff] : c.terms()) {
        if (vanish_vertex && !set_contains(f.support(), *vanish_vertex)) continue;
        Term t;
        t.f = &f;
        t.max_units = coeff < 0 ? -coeff : coeff;
        t.sign = sign_of(coeff);
        const SupportSet s = f.support();
        int sign = t.sign;
        for (std::size_t i = 0; i < s.size(); ++i) {
            SupportSet u = s;
            u.erase(u.begin() + (long)i);
            if (!vanish_vertex || set_contains(u, *vanish_vertex)) {
                auto it = face_ids.emplace(f.face(u), face_ids.size()).first;
                t.faces.emplace_back(it->second, sign);
            }
            sign = -sign;
        }
        terms.push_back(std::move(t));
    }
    if (terms.empty()) return std::nullopt;

    // Last term touching each face, for early pruning.
    std::vector<std::size_t> last_touch(face_ids.size(), 0);
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (const auto& [face, sign] : terms[i].faces) last_touch[face] = i;

    std::vector<long long> balance(face_ids.size(), 0);
    std::vector<long long> take(terms.size(), 0);
    std::size_t nodes = 0;

    std::function<bool(std::size_t, bool)> dfs = [&](std::size_t idx, bool any) -> bool {
        if (++nodes > 4000000) fail(ErrorCode::Internal, "subsummand search exploded");
        if (idx == terms.size()) return any;
        for (long long units = terms[idx].max_units; units >= 0; --units) {
            for (const auto& [face, sign] : terms[idx].faces) balance[face] += sign * units;
            bool ok = true;
            for (const auto& [face, sign] : terms[idx].faces)
                if (last_touch[face] == idx && balance[face] != 0) ok = false;
            if (ok && dfs(idx + 1, any || units > 0)) {
                take[idx] = units;
                return true;
            }
            for (const auto& [face, sign] : terms[idx].faces) balance[face] -= sign * units;
        }
        return false;
    };
    if (!dfs(0, false)) return std::nullopt;

    FChain d;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (take[i] > 0) d.add(terms[i].sign * take[i], *terms[i].f);
    return d;
}

} // namespace

std::optional<FChain> find_vanishing_subsummand(const FChain& c, int j) {
    return find_balanced_subsummand(c, j);
}

std::optional<FChain> find_zero_boundary_subsummand(const FChain& c) {
    return find_balanced_subsummand(c, std::nullopt);
}

ChainKind classify(const FChain& c) {
    one_shell_boundary(c);
    for (int j : c.support())
        if (find_vanishing_subsummand(c, j)) return ChainKind::Renameable;
    return ChainKind::NonRenameable;
}

namespace {

/// Relabels every vertex outside the shell vertices to 3,4,... in order of
/// first appearance; a composition of renamings, so an equivalence move.
FChain canonical_labels(const FChain& c, const SupportSet& keep) {
    std::vector<int> order;
    for (const auto& [f, coeff] : c.terms())
        for (int v : f.support())
            if (!set_contains(keep, v) && std::find(order.begin(), order.end(), v) == order.end())
                order.push_back(v);
    int next = keep.empty() ? 0 : keep.back() + 1;
    std::map<int, int> fwd;
    std::set<int> sources(order.begin(), order.end());
    std::set<int> targets;
    for (std::size_t i = 0; i < order.size(); ++i) targets.insert(next + (int)i);
    for (std::size_t i = 0; i < order.size(); ++i) fwd[order[i]] = next + (int)i;
    // Complete to a bijection: unmatched targets map back onto unmatched sources.
    std::vector<int> spare_targets, spare_sources;
    for (int t : targets)
        if (!sources.count(t)) spare_targets.push_back(t);
    for (int s : sources)
        if (!targets.count(s)) spare_sources.push_back(s);
    for (std::size_t i = 0; i < spare_targets.size(); ++i) fwd[spare_targets[i]] = spare_sources[i];
    Permutation sigma(fwd);
    return permute_chain(sigma, c);
}

} // namespace

MinimalityVerdict check_minimal(const FChain& c, std::size_t budget, const ModelParams& params) {
    ShellFaces faces = one_shell_boundary(c);
    if (find_zero_boundary_subsummand(c)) return MinimalityVerdict::NotMinimal;
    if (classify(c) == ChainKind::NonRenameable) return MinimalityVerdict::Minimal;

    const long long base_len = c.length();
    std::set<std::string> seen;
    std::deque<FChain> queue;
    FChain start = canonical_labels(c, faces.vertices);
    seen.insert(chain_hash(start));
    queue.push_back(start);
    std::size_t popped = 0;

    while (!queue.empty()) {
        if (++popped > budget) return MinimalityVerdict::Unknown;
        FChain state = queue.front();
        queue.pop_front();
        if (state.length() < base_len) return MinimalityVerdict::NotMinimal;
        if (find_zero_boundary_subsummand(state)) return MinimalityVerdict::NotMinimal;

        std::vector<FChain> next;
        for (const auto& site : find_cross_sites(state))
            next.push_back(apply_cross(state, site, params));
        int fresh = state.support().empty() ? 3 : state.support().back() + 1;
        for (int j : state.support())
            if (auto d = find_vanishing_subsummand(state, j))
                next.push_back(apply_rename(state, *d, j, fresh));
        for (auto& s : next) {
            FChain canon = canonical_labels(s, faces.vertices);
            if (seen.insert(chain_hash(canon)).second) queue.push_back(std::move(canon));
        }
    }
    return MinimalityVerdict::Minimal;
}

namespace {

struct CenteredChain {
    FChain chain;
    ChainWalk walk;
};

/// Rewrites the chain until it is one maximal chain-walk through the center:
/// repeatedly renames the center out of the remainder and crosses remainder
/// terms into the walk.
CenteredChain center_chain(FChain chain, int center, const SignedFace& from, const SignedFace& to,
                           const FunctorSimplex* must_end_with, const ModelParams& params,
                           const TraceSink& trace) {
    for (std::size_t guard = 0; guard < 1000; ++guard) {
        ChainWalk walk;
        bool constrained = true;
        try {
            walk = extract_chain_walk(chain, from, to, center, must_end_with);
        } catch (const Error& e) {
            // The terminal-constrained walk may only connect after more
            // remainder terms are crossed in; absorb along any walk first.
            if (!must_end_with || e.code() != ErrorCode::NotOneShellBoundary) throw;
            walk = extract_chain_walk(chain, from, to, center);
            constrained = false;
        }
        FChain rest = chain - walk.chain();
        if (rest.empty() && constrained)
            return CenteredChain{std::move(chain), std::move(walk)};
        if (rest.empty())
            fail(ErrorCode::Internal, "walk covers the chain but misses the terminal term");

        if (set_contains(rest.support(), center)) {
            if (set_contains(boundary(rest).support(), center))
                fail(ErrorCode::Internal, "remainder keeps the center in its boundary");
            int fresh = chain.support().back() + 1;
            chain = apply_rename(chain, rest, center, fresh, trace);
            continue;
        }

        // Cross one remainder term into the walk.
        std::optional<CrossSite> found;
        for (const auto& [wf, wc] : chain.terms()) {
            if (found) break;
            if (!set_contains(wf.support(), center)) continue;
            if (must_end_with && wf == *must_end_with) continue; // keep the terminal term intact
            for (const auto& [rf, rc] : rest.terms()) {
                SupportSet common = set_intersection(wf.support(), rf.support());
                if (common.size() != 2) continue;
                if (!(wf.face(common) == rf.face(common))) continue;
                int e1 = sign_of(wc), e2 = sign_of(rc);
                if (signed_face(e1, wf, common).sign + signed_face(e2, rf, common).sign != 0)
                    continue;
                CrossSite site;
                site.alpha1 = wf;
                site.alpha2 = rf;
                site.eps1 = e1;
                site.eps2 = e2;
                site.k1 = set_minus(wf.support(), common)[0];
                site.k2 = set_minus(rf.support(), common)[0];
                site.l1 = common[0];
                site.l2 = common[1];
                found = site;
                break;
            }
        }
        if (!found)
            fail(ErrorCode::NotMinimal, "cannot absorb the remainder into a centered walk");
        chain = apply_cross(chain, *found, params, trace);
    }
    fail(ErrorCode::Internal, "centering did not converge");
}

/// Plans a sequence of section collapses taking the label sequence to length
/// two, by depth-first search over label sequences.
bool plan_collapses(const std::vector<int>& seq, std::set<std::vector<int>>& visited,
                    std::vector<std::pair<std::size_t, std::size_t>>& plan, std::size_t budget) {
    if (seq.size() == 2) return true;
    if (visited.size() > budget) return false;
    if (!visited.insert(seq).second) return false;

    const std::size_t m = seq.size() - 1; // number of terms
    // Prefer long sections; they shorten the sequence fastest.
    for (std::size_t width = m - 1; width >= 1; --width) {
        for (std::size_t j = 0; j + width <= m - 1; ++j) {
            std::size_t end = j + width;
            bool hyp_end = true, hyp_start = true;
            for (std::size_t i = j; i <= end; ++i)
                if (seq[i] == seq[end + 1]) hyp_end = false;
            for (std::size_t i = j + 1; i <= end + 1; ++i)
                if (seq[i] == seq[j]) hyp_start = false;
            if (!hyp_end && !hyp_start) continue;
            std::vector<int> reduced;
            reduced.insert(reduced.end(), seq.begin(), seq.begin() + (long)j + 1);
            reduced.insert(reduced.end(), seq.begin() + (long)end + 1, seq.end());
            plan.emplace_back(j, end);
            if (plan_collapses(reduced, visited, plan, budget)) return true;
            plan.pop_back();
        }
        if (width == 1) break;
    }
    return false;
}

bool is_standard_form(const FChain& c, const ShellFaces& faces) {
    try {
        SignedFace from{1, faces.f01};
        SignedFace to{-1, faces.f02};
        ChainWalk walk = extract_chain_walk(c, from, to, faces.vertices[0]);
        if (!(walk.chain() == c)) return false;
        const auto& [eps, last] = walk.terms.back();
        if (eps != 1 || last.support() != faces.vertices) return false;
        SupportSet first_face{faces.vertices[1], faces.vertices[2]};
        return last.face(first_face) == faces.f12;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

FChain to_standard_form(const FChain& c, const ModelParams& params, std::size_t budget,
                        const TraceSink& trace) {
    ShellFaces faces = one_shell_boundary(c);
    if (faces.orientation != 1 || faces.vertices != SupportSet{0, 1, 2})
        fail(ErrorCode::NotOneShellBoundary, "standard form expects the boundary f12 - f02 + f01");
    if (classify(c) == ChainKind::NonRenameable)
        fail(ErrorCode::NotRenameable, "standard form is defined for renameable chains");
    if (find_zero_boundary_subsummand(c))
        fail(ErrorCode::NotMinimal, "standard form expects a minimal chain");
    if (is_standard_form(c, faces)) return c;

    const long long base_len = c.length();
    FChain chain = c;

    for (int attempt = 0; attempt < 4; ++attempt) {
        // Center at the top shell vertex, inflating the support first if the
        // chain lives on the shell vertices only.
        if (chain.support() == faces.vertices) {
            bool inflated = false;
            for (int j : chain.support()) {
                if (auto d = find_vanishing_subsummand(chain, j)) {
                    int fresh = chain.support().back() + 1;
                    chain = apply_rename(chain, *d, j, fresh, trace);
                    inflated = true;
                    break;
                }
            }
            if (!inflated) fail(ErrorCode::Internal, "renameable chain without a renameable part");
        }

        SignedFace from2{-1, faces.f02};
        SignedFace to2{1, faces.f12};
        CenteredChain centered = center_chain(chain, faces.vertices[2], from2, to2, nullptr,
                                              params, trace);
        chain = centered.chain;

        // Collapse the walk to a single term carrying f12 and f02.
        std::set<std::vector<int>> visited;
        std::vector<std::pair<std::size_t, std::size_t>> plan;
        if (!plan_collapses(centered.walk.sequence, visited, plan, budget)) {
            // Give the chain one more scratch vertex and retry.
            for (int j : chain.support()) {
                if (auto d = find_vanishing_subsummand(chain, j)) {
                    int fresh = chain.support().back() + 1;
                    chain = apply_rename(chain, *d, j, fresh, trace);
                    break;
                }
            }
            continue;
        }
        ChainWalk walk = centered.walk;
        FChain shed;
        for (auto [j, end] : plan) {
            CollapseResult res = collapse_section(walk, j, end, params, trace);
            walk = std::move(res.walk);
            shed = shed + res.shed;
        }
        if (walk.terms.size() != 1) fail(ErrorCode::Internal, "collapse plan left extra terms");
        FunctorSimplex cstar = walk.terms.front().second;
        chain = walk.chain() + shed;

        // Re-center at the base vertex, keeping the terminal term fixed.
        SignedFace from0{1, faces.f01};
        SignedFace to0{-1, faces.f02};
        CenteredChain final_form =
            center_chain(chain, faces.vertices[0], from0, to0, &cstar, params, trace);
        chain = final_form.chain;

        if (chain.length() != base_len || !(boundary(chain) == boundary(c)))
            fail(ErrorCode::Internal, "standard form drifted from the input");
        if (!is_standard_form(chain, faces))
            fail(ErrorCode::Internal, "standard form postcondition failed");
        return chain;
    }
    fail(ErrorCode::Internal, "standard form reduction did not converge");
}

} // namespace shellfill
