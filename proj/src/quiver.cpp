#include "qreflect/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace qreflect {

namespace {

std::string entry_name(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Quiver::Quiver(IntMat b) : b_(std::move(b)) {
    if (b_.rows() != b_.cols()) throw std::invalid_argument("exchange matrix must be square");
    if (b_.rows() < 1) throw std::invalid_argument("exchange matrix must have n >= 1");
    for (int i = 0; i < b_.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (b_(i, j) != -b_(j, i))
                throw std::invalid_argument("matrix not skew-symmetric at " + entry_name(i, j) +
                                            "/" + entry_name(j, i));
}

IntMat mutate_matrix(const IntMat& m, int k) {
    const int n = m.rows();
    if (m.cols() != n && m.cols() != 2 * n)
        throw std::invalid_argument("mutation expects an n x n or n x 2n matrix");
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");

    IntMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = -m(i, j);
            } else {
                const std::int64_t prod = checked_mul(m(i, k), m(k, j));
                out(i, j) = checked_add(m(i, j), sgn(m(i, k)) * std::max<std::int64_t>(prod, 0));
            }
        }
    return out;
}

void assert_sign_coherent(const IntMat& c) {
    for (int i = 0; i < c.rows(); ++i) {
        bool pos = false, neg = false;
        for (int j = 0; j < c.cols(); ++j) {
            if (c(i, j) > 0) pos = true;
            if (c(i, j) < 0) neg = true;
        }
        if (pos == neg)  // zero row or mixed signs
            throw invariant_error("c-vector " + std::to_string(i + 1) +
                                  " is not sign-coherent");
    }
}

Seed mutate_seed(const Seed& s, int k) {
    const int n = s.size();
    IntMat ext(n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ext(i, j) = s.b(i, j);
            ext(i, n + j) = s.c(i, j);
        }
    ext = mutate_matrix(ext, k);
    Seed out{IntMat(n, n), IntMat(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.b(i, j) = ext(i, j);
            out.c(i, j) = ext(i, n + j);
        }
    assert_sign_coherent(out.c);
    return out;
}

Seed apply_sequence(const Seed& s, const MutationSeq& w) {
    Seed cur = s;
    for (int k : w) cur = mutate_seed(cur, k);
    return cur;
}

int c_sign(const Seed& s, int k) {
    if (k < 0 || k >= s.size()) throw std::out_of_range("c_sign index out of range");
    bool pos = false, neg = false;
    for (int j = 0; j < s.size(); ++j) {
        if (s.c(k, j) > 0) pos = true;
        if (s.c(k, j) < 0) neg = true;
    }
    if (pos == neg)
        throw invariant_error("c-vector " + std::to_string(k + 1) + " is zero or mixed-sign");
    return pos ? 1 : -1;
}

namespace {

// Blocks (biconnected components) of the underlying simple graph, as edge
// sets, via the classic lowpoint DFS.
struct BlockFinder {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> depth, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;

    explicit BlockFinder(const std::vector<std::vector<int>>& a)
        : adj(a), depth(a.size(), -1), low(a.size(), 0) {}

    void dfs(int v, int parent) {
        low[v] = depth[v];
        for (int u : adj[v]) {
            if (u == parent) continue;
            if (depth[u] < 0) {
                stack.emplace_back(v, u);
                depth[u] = depth[v] + 1;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= depth[v]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(v, u)) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (depth[u] < depth[v]) {
                stack.emplace_back(v, u);
                low[v] = std::min(low[v], depth[u]);
            }
        }
    }
};

bool is_path_orientation(const IntMat& b) {
    const int n = b.rows();
    if (n == 1) return true;
    std::vector<int> deg(n, 0);
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (b(i, j) != 0) {
                if (b(i, j) != 1 && b(i, j) != -1) return false;
                ++deg[i];
                ++deg[j];
                ++edges;
            }
    if (edges != n - 1) return false;
    int leaves = 0;
    for (int i = 0; i < n; ++i) {
        if (deg[i] == 0 || deg[i] > 2) return false;
        if (deg[i] == 1) ++leaves;
    }
    return leaves == 2;
}

}  // namespace

TypeAnReport validate_type_an(const Quiver& q) {
    const int n = q.size();
    TypeAnReport rep;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.at(i, j) < -1 || q.at(i, j) > 1) {
                rep.reasons.push_back("entry " + entry_name(i, j) + " = " +
                                      std::to_string(q.at(i, j)) + " outside {-1,0,1}");
                return rep;
            }

    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.at(i, j) != 0) adj[i].push_back(j);

    // connectivity
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push_back(u);
            }
    }
    if (reached != n) {
        rep.reasons.push_back("underlying graph is disconnected");
        return rep;
    }

    BlockFinder bf(adj);
    bf.depth[0] = 0;
    bf.dfs(0, -1);

    std::vector<int> blocks_at(n, 0);        // blocks touching each vertex
    std::vector<char> in_triangle(n, 0);
    for (const auto& block : bf.blocks) {
        std::set<int> verts;
        for (auto [u, v] : block) {
            verts.insert(u);
            verts.insert(v);
        }
        for (int v : verts) ++blocks_at[v];
        if (block.size() == 1) continue;  // bridge edge
        if (verts.size() != 3 || block.size() != 3) {
            rep.reasons.push_back(
                "a 2-connected piece with " + std::to_string(verts.size()) +
                " vertices is neither an edge nor a triangle (cycles longer than 3, chords, "
                "shared triangle edges, or cycles of cycles)");
            return rep;
        }
        auto it = verts.begin();
        const int a = *it++, b2 = *it++, c = *it;
        // cyclically oriented iff b_ab = b_bc = b_ca (common value +-1)
        const bool oriented = q.at(a, b2) == q.at(b2, c) && q.at(b2, c) == q.at(c, a);
        if (!oriented) {
            rep.reasons.push_back("triangle {" + std::to_string(a + 1) + "," +
                                  std::to_string(b2 + 1) + "," + std::to_string(c + 1) +
                                  "} is not cyclically oriented");
            return rep;
        }
        ++rep.triangle_count;
        for (int v : verts) in_triangle[v] = 1;
    }

    for (int v = 0; v < n; ++v) {
        if (blocks_at[v] > 2) {
            rep.reasons.push_back("vertex " + std::to_string(v + 1) + " touches " +
                                  std::to_string(blocks_at[v]) +
                                  " blocks (max 2: degree or branching too high)");
            return rep;
        }
    }

    for (int v = 0; v < n; ++v)
        if (!in_triangle[v]) ++rep.non_cycle_count;
    rep.accepted = true;
    return rep;
}

bool an_membership_oracle(const Quiver& q, std::size_t node_budget) {
    const int n = q.size();

    // Any member of a type-A_n mutation class has entries in {-1,0,1}, so
    // matrices outside that range are recorded but never expanded.  The
    // pruned search space is then finite even for non-A_n input.
    auto in_range = [n](const IntMat& b) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b(i, j) < -1 || b(i, j) > 1) return false;
        return true;
    };

    std::set<std::vector<std::int64_t>> seen;
    std::deque<IntMat> frontier;
    seen.insert(q.mat().data());
    if (is_path_orientation(q.mat())) return true;
    if (in_range(q.mat())) frontier.push_back(q.mat());

    while (!frontier.empty()) {
        IntMat b = std::move(frontier.front());
        frontier.pop_front();
        for (int k = 0; k < n; ++k) {
            IntMat next = mutate_matrix(b, k);
            if (!seen.insert(next.data()).second) continue;
            if (seen.size() > node_budget)
                throw budget_error("mutation-class search exceeded node budget");
            if (is_path_orientation(next)) return true;
            if (in_range(next)) frontier.push_back(std::move(next));
        }
    }
    return false;
}

}  // namespace qreflect
