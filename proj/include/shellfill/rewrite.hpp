#pragma once

#include <functional>
#include <optional>

#include "shellfill/simplex.hpp"

namespace shellfill {

/// Signed 1-simplex, used for chain-walk endpoints.
struct SignedFace {
    int sign; // +1 or -1
    FunctorSimplex simplex;

    bool operator==(const SignedFace& o) const { return sign == o.sign && simplex == o.simplex; }
};

/// The three faces of a 1-shell boundary, by role: with shell vertices
/// v0 < v1 < v2 the boundary is orientation * (f12 - f02 + f01) where f12
/// lives on {v1,v2}, f02 on {v0,v2} and f01 on {v0,v1}.
struct ShellFaces {
    FunctorSimplex f12, f02, f01;
    int orientation;
    SupportSet vertices;
};

/// Boundary of c as a 1-shell; throws NotOneShellBoundary otherwise.
ShellFaces one_shell_boundary(const FChain& c);

/// A crossing site: two terms sharing a common face that cancels in the
/// boundary of their sum. Supports are {l1,l2,k1} and {l1,l2,k2}.
struct CrossSite {
    FunctorSimplex alpha1, alpha2;
    int eps1, eps2;
    int k1, k2, l1, l2;
};

/// All crossing sites of a 2-chain, deterministically ordered.
std::vector<CrossSite> find_cross_sites(const FChain& c);

/// Trace hook for rewrite steps: op name, site description, chain hashes.
struct TraceEntry {
    std::string op;
    std::string site;
    std::string before_hash;
    std::string after_hash;
};
using TraceSink = std::function<void(const TraceEntry&)>;

std::string chain_hash(const FChain& c);

/// Crossing operation: replaces the site pair by the two complementary faces
/// of their amalgam. Sign rule: with V = {k1,k2,l1,l2} sorted and
/// sgn(v) = (-1)^rank(v), sigma = eps1*sgn(k2) and the replacement is
/// -sigma*(sgn(l2)*beta1 + sgn(l1)*beta2), the unique boundary-preserving
/// assignment. Never increases length.
FChain apply_cross(const FChain& c, const CrossSite& site, const ModelParams& params,
                   const TraceSink& trace = nullptr);

/// Renaming operation: renames vertex j, which vanishes from the boundary of
/// the subchain d, to the fresh vertex k via the signed relabeling action.
FChain apply_rename(const FChain& c, const FChain& d, int j, int k,
                    const TraceSink& trace = nullptr);

/// An ordered signed sequence of 2-simplex terms through one center vertex
/// whose consecutive shared faces cancel, connecting two boundary faces.
struct ChainWalk {
    int center;
    std::vector<std::pair<int, FunctorSimplex>> terms; // (sign, simplex)
    std::vector<int> sequence;                         // k_0 .. k_{m+1}
    SignedFace from, to;

    FChain chain() const;
    std::size_t length() const { return terms.size(); }
};

/// Checks conditions (1)-(3) of the chain-walk definition.
bool validate_walk(const ChainWalk& w);

/// Longest chain-walk in c from `from` to `to` through `center`,
/// deterministic tie-break by smallest simplex encoding, with backtracking.
/// Requires the boundary of c to be a 1-shell. When `must_end_with` is given,
/// only walks terminating in that simplex count.
ChainWalk extract_chain_walk(const FChain& c, const SignedFace& from, const SignedFace& to,
                             int center, const FunctorSimplex* must_end_with = nullptr);

struct CollapseResult {
    ChainWalk walk;
    FChain shed; // off-center terms produced by the crossings
};

/// Collapses the section [sec_begin, sec_end] of the walk to a single term by
/// repeated crossings. Requires one of the two section hypotheses: no interior
/// label equals the section's end label, or none equals its start label.
CollapseResult collapse_section(const ChainWalk& walk, std::size_t sec_begin, std::size_t sec_end,
                                const ModelParams& params, const TraceSink& trace = nullptr);

enum class ChainKind { NonRenameable, Renameable };

/// A 2-chain with a 1-shell boundary is Renameable iff some subsummand of it
/// has a vanishing support.
ChainKind classify(const FChain& c);

/// Subsummand of c (terms containing j only) whose boundary omits j, if any.
std::optional<FChain> find_vanishing_subsummand(const FChain& c, int j);

/// Nonempty subsummand with zero boundary, if any.
std::optional<FChain> find_zero_boundary_subsummand(const FChain& c);

enum class MinimalityVerdict { Minimal, NotMinimal, Unknown };

/// Bounded exploration of the equivalence class under crossings/renamings:
/// NotMinimal on any length drop or zero-boundary subsummand, Minimal when
/// the class is exhausted clean, Unknown when the state budget runs out.
/// NonRenameable chains are minimal without search.
MinimalityVerdict check_minimal(const FChain& c, std::size_t budget, const ModelParams& params);

/// Rewrites a minimal Renameable chain into standard form: a chain-walk
/// a_0 + sum eps_i a_i + a_2n from f01 to -f02 whose last term has support
/// {0,1,2} and carries f12 as its first face.
FChain to_standard_form(const FChain& c, const ModelParams& params, std::size_t budget = 10000,
                        const TraceSink& trace = nullptr);

} // namespace shellfill
