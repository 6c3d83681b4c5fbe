#pragma once

#include <array>
#include <vector>

#include "qreflect/gim.hpp"
#include "qreflect/quiver.hpp"

namespace qreflect {

/// An oriented 3-cycle (i,j,k) with b_ki = b_ij = b_jk = eps, stored in the
/// canonical rotation that puts the smallest vertex in position k.
struct TriangleConstraint {
    int i, j, k;
    int eps;  // +1 or -1

    bool operator==(const TriangleConstraint& o) const {
        return i == o.i && j == o.j && k == o.k && eps == o.eps;
    }

    /// The three linear orders of {i,j,k} compatible with the constraint,
    /// each as an ascending triple.
    std::vector<std::array<int, 3>> allowed_orders() const;

    /// True iff the restriction of ord to {i,j,k} is an allowed order.
    bool satisfied_by(const Ordering& ord) const;
};

/// All oriented 3-cycles of the quiver, one constraint per triangle,
/// sorted by smallest member label.
std::vector<TriangleConstraint> find_triangles(const Quiver& b);

struct OrderingCheck {
    bool valid = true;
    std::vector<TriangleConstraint> violations;

    explicit operator bool() const { return valid; }
};

OrderingCheck ordering_valid(const Quiver& b, const Ordering& ord);

/// Deterministic construction of a pseudo-acyclic ordering: walk the
/// triangle forest, seed the chain with an allowed order of the first
/// triangle, splice each next triangle at its shared vertex, then append
/// the non-cycle vertices in ascending label order.
Ordering build_pseudo_acyclic_ordering(const Quiver& b);

/// Brute force over all n! orderings filtered by ordering_valid.
std::vector<Ordering> enumerate_valid_orderings(const Quiver& b, int n_max = 7);

}  // namespace qreflect
