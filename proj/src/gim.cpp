#include "qreflect/gim.hpp"

#include <algorithm>
#include <numeric>

namespace qreflect {

Ordering::Ordering(std::vector<int> ascending) : ascending_(std::move(ascending)) {
    const int n = static_cast<int>(ascending_.size());
    rank_.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        const int v = ascending_[p];
        if (v < 0 || v >= n || rank_[v] != -1)
            throw std::invalid_argument("ordering is not a permutation of the labels");
        rank_[v] = p;
    }
}

Ordering Ordering::identity(int n) {
    std::vector<int> asc(n);
    std::iota(asc.begin(), asc.end(), 0);
    return Ordering(std::move(asc));
}

Gim::Gim(IntMat a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols()) throw std::invalid_argument("GIM must be square");
    for (int i = 0; i < a_.rows(); ++i) {
        if (a_(i, i) != 2) throw std::invalid_argument("GIM diagonal entries must be 2");
        for (int j = 0; j < a_.cols(); ++j)
            if (sgn(a_(i, j)) != sgn(a_(j, i)))
                throw std::invalid_argument("GIM off-diagonal entries must be sign-symmetric");
    }
}

Gim build_gim(const Quiver& b, const Ordering& ord) {
    const int n = b.size();
    if (ord.size() != n) throw std::invalid_argument("ordering size does not match quiver");
    IntMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                a(i, j) = 2;
            else
                a(i, j) = ord.before(i, j) ? b.at(i, j) : -b.at(i, j);
        }
    return Gim(std::move(a));
}

IntMat pi_generator(const Gim& a, int i) {
    const int n = a.size();
    if (i < 0 || i >= n) throw std::out_of_range("generator index out of range");
    // I + A_i where the (i,k)-entry of A_i is -a_ki: column e_j goes to
    // e_j - a_ji e_i.
    IntMat m = IntMat::identity(n);
    for (int k = 0; k < n; ++k) m(i, k) = checked_add(m(i, k), -a.at(k, i));
    return m;
}

IntMat pi_of_word(const Gim& a, const Word& w) {
    IntMat m = IntMat::identity(a.size());
    for (int x : w.letters()) {
        if (x >= a.size()) throw std::out_of_range("word letter exceeds rank");
        m = m * pi_generator(a, x);
    }
    return m;
}

IntMat l_matrix(const Gim& a, const ReflectionState& rs) {
    const int n = a.size();
    if (rs.size() != n) throw std::invalid_argument("state size does not match GIM");
    IntMat l(n, n);
    for (int i = 0; i < n; ++i) {
        const IntMat p = pi_of_word(a, rs.g[i]);
        for (int r = 0; r < n; ++r) l(i, r) = p(r, i);  // column i of pi(g_i), laid as row i
    }
    return l;
}

bool rows_equal_up_to_sign(const IntMat& x, const IntMat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (int i = 0; i < x.rows(); ++i) {
        bool plus = true, minus = true;
        for (int j = 0; j < x.cols(); ++j) {
            if (x(i, j) != y(i, j)) plus = false;
            if (x(i, j) != -y(i, j)) minus = false;
        }
        if (!plus && !minus) return false;
    }
    return true;
}

}  // namespace qreflect
