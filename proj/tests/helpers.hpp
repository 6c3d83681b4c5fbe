#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "qreflect/explore.hpp"
#include "qreflect/gim.hpp"
#include "qreflect/ordering.hpp"
#include "qreflect/quiver.hpp"
#include "qreflect/reflections.hpp"

namespace qtest {

using namespace qreflect;

inline IntMat mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    IntMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (std::int64_t x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

/// 1 -> 2 -> ... -> n
inline Quiver path_quiver(int n) {
    IntMat b(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        b(i, i + 1) = 1;
        b(i + 1, i) = -1;
    }
    return Quiver(std::move(b));
}

/// 1 -> 2 -> 3 -> 1
inline Quiver triangle_quiver() {
    return Quiver(mat({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
}

/// Independent transcription of the mutation rule, kept deliberately apart
/// from the library implementation it checks.
inline IntMat naive_mutate(const IntMat& m, int k) {
    IntMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = -m(i, j);
            } else {
                const std::int64_t p = m(i, k) * m(k, j);
                std::int64_t s = m(i, k) > 0 ? 1 : m(i, k) < 0 ? -1 : 0;
                out(i, j) = m(i, j) + s * (p > 0 ? p : 0);
            }
        }
    return out;
}

/// A member of the A_n mutation class: the path matrix after `steps` random
/// mutations.
inline Quiver random_an_quiver(int n, std::mt19937_64& rng, int steps = 24) {
    IntMat b = path_quiver(n).mat();
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < steps; ++s) b = mutate_matrix(b, pick(rng));
    return Quiver(std::move(b));
}

inline MutationSeq random_seq(int n, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    MutationSeq w(len);
    for (int& x : w) x = pick(rng);
    return w;
}

inline Ordering random_ordering(int n, std::mt19937_64& rng) {
    std::vector<int> asc(n);
    for (int i = 0; i < n; ++i) asc[i] = i;
    std::shuffle(asc.begin(), asc.end(), rng);
    return Ordering(std::move(asc));
}

}  // namespace qtest
