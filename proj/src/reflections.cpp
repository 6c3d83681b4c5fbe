#include "qreflect/reflections.hpp"

#include <algorithm>

namespace qreflect {

Word::Word(std::vector<int> letters) {
    letters_.reserve(letters.size());
    for (int x : letters) {
        if (x < 0) throw std::invalid_argument("negative generator index");
        if (!letters_.empty() && letters_.back() == x)
            letters_.pop_back();
        else
            letters_.push_back(x);
    }
}

Word Word::inverse() const {
    Word out;
    out.letters_.assign(letters_.rbegin(), letters_.rend());
    return out;
}

Word operator*(const Word& a, const Word& b) {
    Word out;
    out.letters_ = a.letters_;
    for (int x : b.letters_) {
        if (!out.letters_.empty() && out.letters_.back() == x)
            out.letters_.pop_back();
        else
            out.letters_.push_back(x);
    }
    return out;
}

Word word_mul(const Word& a, const Word& b) { return a * b; }
Word word_inv(const Word& a) { return a.inverse(); }

ReflectionState ReflectionState::initial(int n) {
    ReflectionState rs;
    rs.r.reserve(n);
    rs.g.assign(n, Word{});
    for (int i = 0; i < n; ++i) rs.r.push_back(Word::generator(i));
    return rs;
}

void ReflectionState::check_conjugator_consistency() const {
    for (int i = 0; i < size(); ++i) {
        const Word expect = g[i] * Word::generator(i) * g[i].inverse();
        if (r[i] != expect)
            throw invariant_error("r_" + std::to_string(i + 1) +
                                  " != g_i s_i g_i^-1 after an operation");
    }
}

ReflectionState mutate_reflections(const ReflectionState& rs, const Seed& s, int k) {
    const int n = s.size();
    if (k < 0 || k >= n) throw std::out_of_range("reflection mutation index out of range");
    const int ck = c_sign(s, k);

    ReflectionState out = rs;
    for (int i = 0; i < n; ++i) {
        const std::int64_t bik = s.b(i, k);
        if (bik != 0 && sgn(bik) == ck) {
            out.r[i] = rs.r[k] * rs.r[i] * rs.r[k];
            out.g[i] = rs.r[k] * rs.g[i];
        }
    }
    out.check_conjugator_consistency();
    return out;
}

std::pair<Seed, ReflectionState> apply_sequence_with_reflections(const Seed& s,
                                                                 const ReflectionState& rs,
                                                                 const MutationSeq& w) {
    Seed seed = s;
    ReflectionState state = rs;
    for (int k : w) {
        state = mutate_reflections(state, seed, k);
        seed = mutate_seed(seed, k);
    }
    return {seed, state};
}

}  // namespace qreflect
