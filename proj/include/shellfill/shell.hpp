#pragma once

#include <optional>

#include "shellfill/rewrite.hpp"

namespace shellfill {

/// Parameters of a 1-shell up to the studied invariants: the rotation order
/// and the three sector residues of its edge tuples.
struct ShellSpec {
    ModelParams params;
    int k1, k2, k3;

    ShellSpec(const ModelParams& p, int k1_, int k2_, int k3_) : params(p), k1(k1_), k2(k2_), k3(k3_) {
        if (k1 < 0 || k1 >= p.n || k2 < 0 || k2 >= p.n || k3 < 0 || k3 >= p.n)
            fail(ErrorCode::InvalidArgument, "shell residues must lie in [0, n)");
    }
};

/// A concrete 1-shell: three edges with supports {1,2}, {0,2}, {0,1} sharing
/// their singleton levels, so that s12 - s02 + s01 is a shell.
struct Shell1 {
    FunctorSimplex s12, s02, s01;

    FChain chain() const {
        FChain c;
        c.add(1, s12);
        c.add(-1, s02);
        c.add(1, s01);
        return c;
    }
};

enum class FillMethod { Construction, Oracle, Lascar };

struct FillReport {
    FChain chain;
    long long length;
    FillMethod method;
    bool boundary_ok;
};

/// Builds a shell whose edge tuples realize the spec residues:
/// s01 on [a,c] with sector k1, s02 on [a,b] with sector k2, s12 on [c',b]
/// with sector_distance(b,c') = k3. All points come from deterministic picks.
Shell1 build_shell(const ShellSpec& spec);

/// The net sector offset k4 = k2 - (k1 - k3) mod n.
int sector_offset(const ShellSpec& spec);

/// Exact minimal fill length min{2(n-k4)-1, 2k4+1}; always odd.
int min_fill_length(const ShellSpec& spec);

/// Points a, d_0..d_{m+1} with sector_distance(a,d_0) = k,
/// sector_distance(d_i,d_{i+1}) = steps[i], and sector_distance(a,d_{m+1})
/// hitting `target` mod n. Requires steps.size() < n and target inside
/// [k + sum(steps), k + sum(steps) + steps.size()].
struct SectorWalk {
    CirclePoint a;
    std::vector<CirclePoint> d;
};

SectorWalk realize_sector_walk(int k, const std::vector<int>& steps, long long target,
                               const ModelParams& params);

/// The explicit fill of length min_fill_length(spec): an alternating
/// chain-walk on support {0,1,2} whose boundary equals the shell exactly.
FillReport construct_min_fill(const ShellSpec& spec, const Shell1& shell);

/// Least odd fill length <= max_len by integer feasibility: the smallest
/// 2m+1 such that some t in [-m-1, m] is congruent to k4 mod n.
std::optional<int> min_fill_search_arith(const ShellSpec& spec, int max_len);

/// Least odd fill length <= max_len by exhaustive search over chain-walks on
/// support {0,1,2} with points on the grid of multiples of 1/(4n^2).
std::optional<int> min_fill_search_grid(const ShellSpec& spec, int max_len);

/// Runs both searches and insists they agree.
std::optional<int> min_fill_search(const ShellSpec& spec, int max_len);

/// Fills an arbitrary shell through a path of adjacent points between the two
/// vertex-1 realizations; the result has length 2N+1 with N their step
/// distance and boundary exactly the shell.
FillReport fill_shell_lascar(const Shell1& shell, const ModelParams& params);

/// Whether every shell of the structure bounds a chain of length at most 3;
/// when false, carries the lexicographically least failing spec.
struct WeakAmalgamationReport {
    bool holds;
    std::optional<ShellSpec> witness;
    int witness_fill_length;
};

WeakAmalgamationReport weak_three_amalgamation(const ModelParams& params);

/// Reads a walk centered at 0 with endpoints on vertices 1 and 2 back into
/// circle points: term i realizes [a, d_i, d_{i+1}] when its labels ascend
/// and [a, d_{i+1}, d_i] when they descend.
struct WalkPoints {
    CirclePoint a;
    std::vector<CirclePoint> d;
    std::vector<bool> ascending;
};

WalkPoints walk_to_points(const ChainWalk& walk, const ModelParams& params);

} // namespace shellfill
