#pragma once

#include <vector>

#include "qreflect/quiver.hpp"
#include "qreflect/reflections.hpp"

namespace qreflect {

/// Linear ordering on vertex labels; i precedes j iff rank(i) < rank(j).
class Ordering {
public:
    /// Labels listed in ascending order, e.g. {2,4,1,3,0} means 2<4<1<3<0.
    explicit Ordering(std::vector<int> ascending);

    static Ordering identity(int n);

    int size() const { return static_cast<int>(ascending_.size()); }
    int rank(int v) const { return rank_[v]; }
    bool before(int u, int v) const { return rank_[u] < rank_[v]; }
    const std::vector<int>& ascending() const { return ascending_; }

    bool operator==(const Ordering& o) const { return ascending_ == o.ascending_; }

private:
    std::vector<int> ascending_;
    std::vector<int> rank_;
};

/// Generalized intersection matrix: 2 on the diagonal, sign-symmetric off it.
class Gim {
public:
    explicit Gim(IntMat a);  // checks the three GIM axioms

    int size() const { return a_.rows(); }
    std::int64_t at(int i, int j) const { return a_(i, j); }
    const IntMat& mat() const { return a_; }

private:
    IntMat a_;
};

/// a_ij = b_ij if i < j under ord, 2 if i = j, -b_ij otherwise.
Gim build_gim(const Quiver& b, const Ordering& ord);

/// Reflection matrix of generator i: sends basis column e_j to e_j - a_ji e_i.
/// Squares to the identity.
IntMat pi_generator(const Gim& a, int i);

/// Ordered product of generator matrices; the empty word maps to I.
IntMat pi_of_word(const Gim& a, const Word& w);

/// Row i is pi(g_i) applied to e_i.
IntMat l_matrix(const Gim& a, const ReflectionState& rs);

/// True iff row_i(x) = +-row_i(y) for every i.
bool rows_equal_up_to_sign(const IntMat& x, const IntMat& y);

}  // namespace qreflect
