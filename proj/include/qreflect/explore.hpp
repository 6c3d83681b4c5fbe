#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qreflect/gim.hpp"
#include "qreflect/ordering.hpp"
#include "qreflect/quiver.hpp"

namespace qreflect {

/// Seed together with the pi-images of its mutated reflections and its
/// L-matrix, advanced jointly one mutation at a time.  The pi images evolve
/// by matrix conjugation exactly when the word-level reflections do, so no
/// group words need to be stored.
struct PiState {
    Seed seed;
    std::vector<IntMat> pi_r;  // pi(r_i)
    IntMat l;                  // row i = l_i = pi(g_i) e_i

    static PiState initial(const Quiver& b, const Gim& a);
    void mutate(int k);
    void apply(const MutationSeq& w);
};

struct Violation {
    std::string kind;        // "pi-mismatch" | "l-mismatch" | "relation" | "b-mismatch"
    MutationSeq witness_a;   // first sequence reaching the seed
    MutationSeq witness_b;   // second sequence (empty for relation failures)
    int index = -1;          // differing reflection index, 0-based; -1 if n/a
    IntMat lhs, rhs;         // the two matrices, verbatim
    std::string detail;
};

struct VerifyReport {
    bool pass = false;
    std::size_t seeds = 0;
    std::size_t edges = 0;
    std::vector<Violation> violations;  // the first violation found, if any
};

/// Breadth-first enumeration of the labelled exchange graph reachable from
/// the initial seed [B | I], with the C-matrix as canonical seed key.
/// On rediscovery the stored pi(r_i) must match exactly and the L-matrices
/// up to row signs; at every seed the relation suite must hold:
///   b_ij = 0       =>  pi(r_i r_j)^2 = id
///   |b_ij| = 1     =>  pi(r_i r_j)^3 = id
///   b_ki = b_ij = b_jk = +-1  =>  pi(r_j r_i r_j r_k)^2 = id.
/// Layer order is by ascending mutation index, so reports are deterministic.
VerifyReport bfs_verify(const Quiver& b, const Ordering& ord, std::size_t budget = 1000000);

/// p ++ [i,j,i,j,i] ++ (reverse of p with every letter relabelled by (i,j)).
/// Requires |b_ij| = 1 at the seed reached by p from s0.
MutationSeq elementary_swap_sequence(const MutationSeq& p, int i, int j, const Seed& s0);

struct SwapReport {
    bool pass = false;
    MutationSeq walk;
    std::vector<Violation> violations;
};

/// Runs the elementary swap [i,j]_p from the initial seed and asserts the
/// result is the initial labelled seed with labels i,j transposed:
/// B' = P B P^T, C' = P C, and pi(r_k') = pi(r_{(i,j)k}) for all k.
SwapReport check_swap_effect(const Quiver& b, const Ordering& ord, const MutationSeq& p, int i,
                             int j);

/// Asserts pi(r_k) after u ++ p ++ [i,j,i,j] ++ p^-1 ++ w equals pi(r_k)
/// after u ++ w for all k.  Requires b_ij = 0 at the seed reached by u ++ p.
SwapReport check_stable_walk(const Quiver& b, const Ordering& ord, const MutationSeq& p, int i,
                             int j, const MutationSeq& u, const MutationSeq& w);

/// Matches pi(r_i), pi(r_j) and every pi(r_k) after p ++ [i,j,i,j,i] against
/// the closed-form candidates an elementary swap can produce, all evaluated
/// at the seed after p.  Requires |b_ij| = 1 there.
SwapReport check_swap_lemma_forms(const Quiver& b, const Ordering& ord, const MutationSeq& p,
                                  int i, int j);

struct FuzzReport {
    bool pass = false;
    std::uint64_t token = 0;
    int trials = 0;
    int hits = 0;  // prefixes with C = I encountered
    std::vector<Violation> violations;
    MutationSeq witness_walk;  // walk of the first violation, if any
};

/// Random mutation walks; whenever C returns to the identity, asserts that
/// every pi(r_k) equals its initial value.  Deterministic in the token.
FuzzReport random_walk_fuzz(const Quiver& b, const Ordering& ord, int length, int trials,
                            std::uint64_t token);

}  // namespace qreflect
