#pragma once

#include <utility>
#include <vector>

#include "qreflect/quiver.hpp"

namespace qreflect {

/// Reduced word in the universal Coxeter group on n generators (the free
/// product of n copies of Z/2: s_i^2 = 1 is the only relation).  Letters
/// are 0-based generator indices; no two adjacent letters are equal.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);  // reduces its argument

    static Word generator(int i) { return Word(std::vector<int>{i}); }

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    /// Every generator is an involution, so the inverse is the reversed word.
    Word inverse() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return letters_ != o.letters_; }

    friend Word operator*(const Word& a, const Word& b);

private:
    std::vector<int> letters_;
};

Word word_mul(const Word& a, const Word& b);
Word word_inv(const Word& a);

/// Per-index reflection words r_i with their conjugators g_i, satisfying
/// r_i = g_i s_i g_i^{-1} at all times.
struct ReflectionState {
    std::vector<Word> r;
    std::vector<Word> g;

    static ReflectionState initial(int n);
    int size() const { return static_cast<int>(r.size()); }

    /// Re-asserts r_i = g_i s_i g_i^{-1}; throws invariant_error otherwise.
    void check_conjugator_consistency() const;

    bool operator==(const ReflectionState& o) const { return r == o.r && g == o.g; }
};

/// One reflection-mutation step at k, reading the condition from the seed
/// BEFORE it is mutated: r_i <- r_k r_i r_k and g_i <- r_k g_i whenever
/// b_ik != 0 and sgn(b_ik) equals the sign of c_k.
ReflectionState mutate_reflections(const ReflectionState& rs, const Seed& s, int k);

/// Interleaved fold: at each step update reflections from the current seed,
/// then mutate the seed.
std::pair<Seed, ReflectionState> apply_sequence_with_reflections(const Seed& s,
                                                                 const ReflectionState& rs,
                                                                 const MutationSeq& w);

}  // namespace qreflect
