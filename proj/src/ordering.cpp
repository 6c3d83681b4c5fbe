#include "qreflect/ordering.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace qreflect {

std::vector<std::array<int, 3>> TriangleConstraint::allowed_orders() const {
    // The three cyclic rotations compatible with the constraint:
    //   eps = +1:  i < k < j,  j < i < k,  k < j < i
    //   eps = -1:  i < j < k,  j < k < i,  k < i < j
    if (eps > 0) return {{{i, k, j}}, {{j, i, k}}, {{k, j, i}}};
    return {{{i, j, k}}, {{j, k, i}}, {{k, i, j}}};
}

bool TriangleConstraint::satisfied_by(const Ordering& ord) const {
    for (const auto& o : allowed_orders())
        if (ord.rank(o[0]) < ord.rank(o[1]) && ord.rank(o[1]) < ord.rank(o[2])) return true;
    return false;
}

std::vector<TriangleConstraint> find_triangles(const Quiver& b) {
    const int n = b.size();
    std::vector<TriangleConstraint> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                if (b.at(x, y) == 0 || b.at(y, z) == 0 || b.at(z, x) == 0) continue;
                if (b.at(x, y) != b.at(y, z) || b.at(y, z) != b.at(z, x)) continue;  // not oriented
                // b_xy = b_yz = b_zx = eps: the rotation with the smallest
                // vertex in position k is (i,j,k) = (y,z,x).
                out.push_back(TriangleConstraint{y, z, x, static_cast<int>(b.at(x, y))});
            }
    return out;  // already ascending by smallest member (= k)
}

OrderingCheck ordering_valid(const Quiver& b, const Ordering& ord) {
    OrderingCheck check;
    for (const auto& t : find_triangles(b))
        if (!t.satisfied_by(ord)) {
            check.valid = false;
            check.violations.push_back(t);
        }
    return check;
}

namespace {

// Among the three allowed orders, the one whose first element is the
// triangle's smallest vertex.  Exactly one rotation qualifies.
std::array<int, 3> canonical_order(const TriangleConstraint& t) {
    const int lo = std::min({t.i, t.j, t.k});
    for (const auto& o : t.allowed_orders())
        if (o[0] == lo) return o;
    throw invariant_error("no allowed order starts at the smallest vertex");
}

}  // namespace

Ordering build_pseudo_acyclic_ordering(const Quiver& b) {
    const int n = b.size();
    const TypeAnReport rep = validate_type_an(b);
    if (!rep.accepted) {
        std::string why = "quiver is not of type A_n";
        if (!rep.reasons.empty()) why += ": " + rep.reasons.front();
        throw std::invalid_argument(why);
    }

    const auto triangles = find_triangles(b);
    const int m = static_cast<int>(triangles.size());

    // Triangles sharing a vertex form a forest; traverse each component from
    // its lowest-numbered triangle so every triangle after the first meets
    // the chain in exactly one vertex.
    std::vector<std::vector<int>> tri_adj(m);
    for (int a = 0; a < m; ++a)
        for (int c = a + 1; c < m; ++c) {
            const std::array<int, 3> va{triangles[a].i, triangles[a].j, triangles[a].k};
            const std::array<int, 3> vc{triangles[c].i, triangles[c].j, triangles[c].k};
            bool share = false;
            for (int u : va)
                for (int v : vc)
                    if (u == v) share = true;
            if (share) {
                tri_adj[a].push_back(c);
                tri_adj[c].push_back(a);
            }
        }

    std::vector<int> chain;
    std::vector<char> placed(n, 0), visited(m, 0);
    for (int root = 0; root < m; ++root) {
        if (visited[root]) continue;
        std::deque<int> queue{root};
        visited[root] = 1;
        while (!queue.empty()) {
            const int t = queue.front();
            queue.pop_front();
            const auto order = canonical_order(triangles[t]);

            int shared = -1;
            for (int v : order)
                if (placed[v]) {
                    if (shared != -1)
                        throw invariant_error("triangle meets the chain in two vertices");
                    shared = v;
                }
            if (shared < 0) {
                chain.insert(chain.end(), order.begin(), order.end());
            } else {
                // replace the shared vertex by the triangle's 3-chain in place
                const auto pos = std::find(chain.begin(), chain.end(), shared);
                const auto idx = pos - chain.begin();
                chain.erase(pos);
                chain.insert(chain.begin() + idx, order.begin(), order.end());
            }
            for (int v : order) placed[v] = 1;

            for (int c : tri_adj[t])
                if (!visited[c]) {
                    visited[c] = 1;
                    queue.push_back(c);
                }
        }
    }

    for (int v = 0; v < n; ++v)
        if (!placed[v]) chain.push_back(v);

    Ordering ord(chain);
    if (!ordering_valid(b, ord).valid)
        throw invariant_error("constructed ordering violates a triangle constraint");
    return ord;
}

std::vector<Ordering> enumerate_valid_orderings(const Quiver& b, int n_max) {
    const int n = b.size();
    if (n > n_max)
        throw budget_error("ordering enumeration limited to n <= " + std::to_string(n_max));
    const auto triangles = find_triangles(b);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Ordering> out;
    do {
        Ordering ord(perm);
        bool ok = true;
        for (const auto& t : triangles)
            if (!t.satisfied_by(ord)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(ord));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace qreflect
