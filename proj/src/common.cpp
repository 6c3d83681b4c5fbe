#include "qreflect/common.hpp"

namespace qreflect {

std::int64_t determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    // Bareiss fraction-free elimination: every division below is exact.
    IntMat a = m;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                const std::int64_t num =
                    checked_add(checked_mul(a(i, j), a(k, k)), -checked_mul(a(i, k), a(k, j)));
                a(i, j) = num / prev;
            }
        prev = a(k, k);
    }
    return checked_mul(sign, a(n - 1, n - 1));
}

}  // namespace qreflect
