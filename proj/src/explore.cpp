#include "qreflect/explore.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

namespace qreflect {

PiState PiState::initial(const Quiver& b, const Gim& a) {
    if (a.size() != b.size()) throw std::invalid_argument("GIM size does not match quiver");
    PiState st{Seed::initial(b), {}, IntMat::identity(b.size())};
    st.pi_r.reserve(b.size());
    for (int i = 0; i < b.size(); ++i) st.pi_r.push_back(pi_generator(a, i));
    return st;
}

void PiState::mutate(int k) {
    const int n = seed.size();
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
    const int ck = c_sign(seed, k);
    const IntMat& rk = pi_r[k];

    std::vector<char> affected(n, 0);
    for (int i = 0; i < n; ++i)
        if (seed.b(i, k) != 0 && sgn(seed.b(i, k)) == ck) affected[i] = 1;

    for (int i = 0; i < n; ++i) {
        if (!affected[i]) continue;
        pi_r[i] = rk * pi_r[i] * rk;
        // l_i <- pi(r_k) l_i, with l_i stored as row i
        std::vector<std::int64_t> next(n, 0);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                next[r] = checked_add(next[r], checked_mul(rk(r, c), l(i, c)));
        for (int r = 0; r < n; ++r) l(i, r) = next[r];
    }
    seed = mutate_seed(seed, k);
}

void PiState::apply(const MutationSeq& w) {
    for (int k : w) mutate(k);
}

namespace {

IntMat pow2(const IntMat& m) { return m * m; }
IntMat pow3(const IntMat& m) { return m * m * m; }

std::string label(int v) { return std::to_string(v + 1); }

/// The per-seed relation suite.
std::optional<Violation> relation_violation(const Seed& s, const std::vector<IntMat>& pi_r) {
    const int n = s.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::int64_t bij = s.b(i, j);
            const IntMat prod = pi_r[i] * pi_r[j];
            if (bij == 0) {
                const IntMat sq = pow2(prod);
                if (!sq.is_identity())
                    return Violation{"relation", {}, {}, -1, sq, IntMat::identity(n),
                                     "pi(r_" + label(i) + " r_" + label(j) +
                                         ")^2 != id although b_" + label(i) + label(j) + " = 0"};
            } else if (bij == 1 || bij == -1) {
                const IntMat cu = pow3(prod);
                if (!cu.is_identity())
                    return Violation{"relation", {}, {}, -1, cu, IntMat::identity(n),
                                     "pi(r_" + label(i) + " r_" + label(j) +
                                         ")^3 != id although |b_" + label(i) + label(j) + "| = 1"};
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                const std::int64_t e = s.b(k, i);
                if (e == 0 || std::abs(e) != 1) continue;
                if (s.b(i, j) != e || s.b(j, k) != e) continue;
                const IntMat sq = pow2(pi_r[j] * pi_r[i] * pi_r[j] * pi_r[k]);
                if (!sq.is_identity())
                    return Violation{"relation", {}, {}, -1, sq, IntMat::identity(n),
                                     "pi(r_" + label(j) + " r_" + label(i) + " r_" + label(j) +
                                         " r_" + label(k) + ")^2 != id on the oriented triangle (" +
                                         label(i) + "," + label(j) + "," + label(k) + ")"};
            }
    return std::nullopt;
}

struct SeedRecord {
    Seed seed;
    std::vector<IntMat> pi_r;
    IntMat l;
    int parent;      // record index, -1 at the root
    int step;        // mutation label leading here from the parent
};

MutationSeq witness_of(const std::vector<SeedRecord>& records, int idx) {
    MutationSeq w;
    for (int cur = idx; records[cur].parent >= 0; cur = records[cur].parent)
        w.push_back(records[cur].step);
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

VerifyReport bfs_verify(const Quiver& b, const Ordering& ord, std::size_t budget) {
    const int n = b.size();
    const Gim a = build_gim(b, ord);

    VerifyReport rep;
    std::vector<SeedRecord> records;
    std::map<std::vector<std::int64_t>, int> by_c;

    PiState root = PiState::initial(b, a);
    records.push_back(SeedRecord{root.seed, root.pi_r, root.l, -1, -1});
    by_c.emplace(root.seed.c.data(), 0);

    if (auto v = relation_violation(root.seed, root.pi_r)) {
        v->witness_a = {};
        rep.seeds = 1;
        rep.violations.push_back(std::move(*v));
        return rep;
    }

    for (std::size_t head = 0; head < records.size(); ++head) {
        for (int k = 0; k < n; ++k) {
            PiState st{records[head].seed, records[head].pi_r, records[head].l};
            st.mutate(k);

            const auto it = by_c.find(st.seed.c.data());
            if (it == by_c.end()) {
                if (records.size() >= budget)
                    throw budget_error("exchange-graph search exceeded node budget of " +
                                       std::to_string(budget));
                const int idx = static_cast<int>(records.size());
                records.push_back(
                    SeedRecord{st.seed, st.pi_r, st.l, static_cast<int>(head), k});
                by_c.emplace(st.seed.c.data(), idx);
                ++rep.edges;

                assert_sign_coherent(st.seed.c);
                if (const auto d = determinant(st.seed.c); d != 1 && d != -1)
                    throw invariant_error("|det C| != 1 at a discovered seed");
                if (auto v = relation_violation(st.seed, st.pi_r)) {
                    v->witness_a = witness_of(records, idx);
                    rep.seeds = records.size();
                    rep.violations.push_back(std::move(*v));
                    return rep;
                }
            } else {
                const SeedRecord& stored = records[it->second];
                if (it->second > static_cast<int>(head)) ++rep.edges;

                MutationSeq here = witness_of(records, static_cast<int>(head));
                here.push_back(k);
                if (stored.seed.b != st.seed.b) {
                    rep.seeds = records.size();
                    rep.violations.push_back(Violation{
                        "b-mismatch", witness_of(records, it->second), std::move(here), -1,
                        stored.seed.b, st.seed.b, "equal C-matrices with different B-matrices"});
                    return rep;
                }
                for (int i = 0; i < n; ++i)
                    if (stored.pi_r[i] != st.pi_r[i]) {
                        rep.seeds = records.size();
                        rep.violations.push_back(Violation{
                            "pi-mismatch", witness_of(records, it->second), std::move(here), i,
                            stored.pi_r[i], st.pi_r[i],
                            "pi(r_" + label(i) + ") differs between two walks to the same seed"});
                        return rep;
                    }
                if (!rows_equal_up_to_sign(stored.l, st.l)) {
                    rep.seeds = records.size();
                    rep.violations.push_back(Violation{
                        "l-mismatch", witness_of(records, it->second), std::move(here), -1,
                        stored.l, st.l, "L-matrices differ beyond row signs at the same seed"});
                    return rep;
                }
            }
        }
    }

    rep.pass = true;
    rep.seeds = records.size();
    return rep;
}

MutationSeq elementary_swap_sequence(const MutationSeq& p, int i, int j, const Seed& s0) {
    const int n = s0.size();
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
        throw std::invalid_argument("swap needs two distinct vertex labels in range");
    const Seed at_p = apply_sequence(s0, p);
    const std::int64_t bij = at_p.b(i, j);
    if (bij != 1 && bij != -1)
        throw std::invalid_argument("no elementary swap: |b_ij| != 1 at the seed reached by p");

    MutationSeq walk = p;
    walk.insert(walk.end(), {i, j, i, j, i});
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        int v = *it;
        if (v == i)
            v = j;
        else if (v == j)
            v = i;
        walk.push_back(v);
    }
    return walk;
}

SwapReport check_swap_effect(const Quiver& b, const Ordering& ord, const MutationSeq& p, int i,
                             int j) {
    const int n = b.size();
    const Gim a = build_gim(b, ord);
    SwapReport rep;
    rep.walk = elementary_swap_sequence(p, i, j, Seed::initial(b));

    PiState init = PiState::initial(b, a);
    PiState st = init;
    st.apply(rep.walk);

    auto swapped = [&](int v) { return v == i ? j : v == j ? i : v; };

    IntMat expect_b(n, n), expect_c(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            expect_b(r, c) = b.at(swapped(r), swapped(c));
            expect_c(r, c) = swapped(r) == c ? 1 : 0;
        }
    if (st.seed.b != expect_b)
        rep.violations.push_back(Violation{"b-mismatch", rep.walk, {}, -1, st.seed.b, expect_b,
                                           "B after the swap is not the transposed original"});
    if (st.seed.c != expect_c)
        rep.violations.push_back(Violation{"c-mismatch", rep.walk, {}, -1, st.seed.c, expect_c,
                                           "C after the swap is not the transposition matrix"});
    for (int k = 0; k < n; ++k)
        if (st.pi_r[k] != init.pi_r[swapped(k)]) {
            rep.violations.push_back(
                Violation{"pi-mismatch", rep.walk, {}, k, st.pi_r[k], init.pi_r[swapped(k)],
                          "pi(r_" + label(k) + ") after the swap != pi(r_" + label(swapped(k)) +
                              ") before it"});
            break;
        }
    rep.pass = rep.violations.empty();
    return rep;
}

SwapReport check_stable_walk(const Quiver& b, const Ordering& ord, const MutationSeq& p, int i,
                             int j, const MutationSeq& u, const MutationSeq& w) {
    const int n = b.size();
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
        throw std::invalid_argument("stable walk needs two distinct vertex labels in range");
    const Gim a = build_gim(b, ord);

    MutationSeq up = u;
    up.insert(up.end(), p.begin(), p.end());
    if (apply_sequence(Seed::initial(b), up).b(i, j) != 0)
        throw std::invalid_argument("no stable walk: b_ij != 0 at the seed reached by u ++ p");

    SwapReport rep;
    rep.walk = up;
    rep.walk.insert(rep.walk.end(), {i, j, i, j});
    rep.walk.insert(rep.walk.end(), p.rbegin(), p.rend());
    rep.walk.insert(rep.walk.end(), w.begin(), w.end());

    MutationSeq direct = u;
    direct.insert(direct.end(), w.begin(), w.end());

    PiState with_detour = PiState::initial(b, a);
    with_detour.apply(rep.walk);
    PiState without = PiState::initial(b, a);
    without.apply(direct);

    for (int k = 0; k < n; ++k)
        if (with_detour.pi_r[k] != without.pi_r[k]) {
            rep.violations.push_back(Violation{
                "pi-mismatch", rep.walk, direct, k, with_detour.pi_r[k], without.pi_r[k],
                "pi(r_" + label(k) + ") changed across a stable walk"});
            break;
        }
    rep.pass = rep.violations.empty();
    return rep;
}

SwapReport check_swap_lemma_forms(const Quiver& b, const Ordering& ord, const MutationSeq& p,
                                  int i, int j) {
    const int n = b.size();
    const Gim a = build_gim(b, ord);
    SwapReport rep;
    rep.walk = elementary_swap_sequence(p, i, j, Seed::initial(b));  // also checks |b_ij^p| = 1

    PiState at_p = PiState::initial(b, a);
    at_p.apply(p);
    PiState after = at_p;
    after.apply({i, j, i, j, i});

    const IntMat& ri = at_p.pi_r[i];
    const IntMat& rj = at_p.pi_r[j];
    const IntMat rij3 = pow3(ri * rj);
    const IntMat rji3 = pow3(rj * ri);

    auto match = [&](const IntMat& actual, const std::vector<IntMat>& candidates) {
        return std::any_of(candidates.begin(), candidates.end(),
                           [&](const IntMat& c) { return c == actual; });
    };

    if (!match(after.pi_r[i], {rij3 * rj, rji3 * rj}))
        rep.violations.push_back(Violation{"form-mismatch", rep.walk, p, i, after.pi_r[i], ri,
                                           "pi(r_i) after the swap matches no closed form"});
    if (!match(after.pi_r[j], {rij3 * ri, rji3 * ri}))
        rep.violations.push_back(Violation{"form-mismatch", rep.walk, p, j, after.pi_r[j], rj,
                                           "pi(r_j) after the swap matches no closed form"});

    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const IntMat& rk = at_p.pi_r[k];
        const bool ki = at_p.seed.b(k, i) != 0;
        const bool kj = at_p.seed.b(k, j) != 0;
        std::vector<IntMat> candidates;
        std::string case_name;
        if (!ki && !kj) {
            case_name = "(A)";
            candidates = {rk};
        } else if (!ki && kj) {
            case_name = "(B)";
            candidates = {rk, rij3 * rk * rji3, rji3 * rk * rij3, pow2(ri * rk) * rk,
                          rij3 * pow2(ri * rk) * rk * rji3};
        } else if (ki && !kj) {
            case_name = "(C)";
            candidates = {rk, rij3 * rk * rji3, rji3 * rk * rij3, pow2(rj * rk) * rk,
                          rij3 * pow2(rj * rk) * rk * rji3};
        } else {
            case_name = "(D)";
            candidates = {rk, pow2(rj * ri * rj * rk) * rk};
        }
        if (!match(after.pi_r[k], candidates)) {
            rep.violations.push_back(
                Violation{"form-mismatch", rep.walk, p, k, after.pi_r[k], rk,
                          "pi(r_" + label(k) + ") matches no case-" + case_name + " candidate"});
            break;
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

FuzzReport random_walk_fuzz(const Quiver& b, const Ordering& ord, int length, int trials,
                            std::uint64_t token) {
    const int n = b.size();
    const Gim a = build_gim(b, ord);
    const PiState init = PiState::initial(b, a);

    FuzzReport rep;
    rep.token = token;
    rep.trials = trials;
    std::mt19937_64 rng(token);
    std::uniform_int_distribution<int> pick(0, n - 1);

    for (int t = 0; t < trials; ++t) {
        PiState st = init;
        MutationSeq walk;
        for (int step = 0; step < length; ++step) {
            const int k = pick(rng);
            st.mutate(k);
            walk.push_back(k);
            if (!st.seed.c.is_identity()) continue;
            ++rep.hits;
            for (int m = 0; m < n; ++m)
                if (st.pi_r[m] != init.pi_r[m]) {
                    if (rep.violations.empty()) rep.witness_walk = walk;
                    rep.violations.push_back(
                        Violation{"pi-mismatch", walk, {}, m, st.pi_r[m], init.pi_r[m],
                                  "pi(r_" + label(m) + ") not restored although C = I"});
                    break;
                }
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace qreflect
