#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qreflect/common.hpp"

namespace qreflect {

/// Skew-symmetric exchange matrix of a quiver on vertices 0..n-1.
/// b(i,j) > 0 means b(i,j) arrows from i to j.
class Quiver {
public:
    explicit Quiver(IntMat b);

    int size() const { return b_.rows(); }
    std::int64_t at(int i, int j) const { return b_(i, j); }
    const IntMat& mat() const { return b_; }

    bool operator==(const Quiver& o) const { return b_ == o.b_; }

private:
    IntMat b_;
};

/// A labelled seed, tracked as the pair (B, C): the two blocks of the
/// extended matrix [B | C] that mutation acts on jointly.
struct Seed {
    IntMat b;
    IntMat c;

    static Seed initial(const Quiver& q) { return Seed{q.mat(), IntMat::identity(q.size())}; }
    int size() const { return b.rows(); }
    bool operator==(const Seed& o) const { return b == o.b && c == o.c; }
};

using MutationSeq = std::vector<int>;  // 0-based vertex labels

/// One mutation step on an n x n or n x 2n matrix at vertex k.
/// In the 2n-column [B | C] layout only the first n columns can satisfy
/// the column-negation test, so the C block sees the row test alone.
IntMat mutate_matrix(const IntMat& m, int k);

/// Mutation of [B | C] at k, split back into blocks.  Aborts (invariant
/// error) if the resulting C-matrix is not row-sign-coherent.
Seed mutate_seed(const Seed& s, int k);

/// Left fold of mutate_seed over w.
Seed apply_sequence(const Seed& s, const MutationSeq& w);

/// Sign of the (sign-coherent, nonzero) c-vector c_k: +1 or -1.
int c_sign(const Seed& s, int k);

/// Throws invariant_error unless every row of c is nonzero and sign-coherent.
void assert_sign_coherent(const IntMat& c);

/// Structural classification of a quiver against the type-A shape:
/// every block of the underlying graph an edge or an oriented triangle,
/// and no vertex touching more than two blocks.
struct TypeAnReport {
    bool accepted = false;
    int triangle_count = 0;   // m: oriented 3-cycles
    int non_cycle_count = 0;  // q: vertices outside every triangle
    std::vector<std::string> reasons;

    explicit operator bool() const { return accepted; }
};

TypeAnReport validate_type_an(const Quiver& b);

/// Test oracle: breadth-first search of the mutation class of B, pruned at
/// matrices with entries outside {-1,0,1}; true iff some member is an
/// orientation of the A_n path.  Desk scale only.
bool an_membership_oracle(const Quiver& b, std::size_t node_budget = 1000000);

}  // namespace qreflect
