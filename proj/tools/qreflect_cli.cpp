// Command-line surface for the mutation/reflection engine.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <json.hpp>
#include <random>
#include <string>

#include "qreflect/explore.hpp"
#include "qreflect/io.hpp"
#include "qreflect/ordering.hpp"

using json = nlohmann::json;
using namespace qreflect;

namespace {

json matrix_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json seq_json(const MutationSeq& w) {
    json out = json::array();
    for (int x : w) out.push_back(x + 1);
    return out;
}

json ordering_json(const Ordering& ord) {
    return seq_json(MutationSeq(ord.ascending().begin(), ord.ascending().end()));
}

json violation_json(const Violation& v) {
    json out{{"kind", v.kind},
             {"witness_a", seq_json(v.witness_a)},
             {"witness_b", seq_json(v.witness_b)},
             {"lhs", matrix_json(v.lhs)},
             {"rhs", matrix_json(v.rhs)},
             {"detail", v.detail}};
    if (v.index >= 0) out["index"] = v.index + 1;
    return out;
}

void print_violation(const Violation& v) {
    std::cout << "violation kind: " << v.kind << "\n";
    std::cout << "witness: " << (v.witness_a.empty() ? "(empty)" : format_sequence(v.witness_a))
              << "\n";
    if (!v.witness_b.empty())
        std::cout << "second witness: " << format_sequence(v.witness_b) << "\n";
    if (v.index >= 0) std::cout << "index: " << v.index + 1 << "\n";
    std::cout << "lhs:\n" << format_matrix(v.lhs);
    std::cout << "rhs:\n" << format_matrix(v.rhs);
    std::cout << "detail: " << v.detail << "\n";
}

struct Common {
    std::string quiver_path;
    std::string seq_text;
    std::string ordering_text;
    std::string pair_text;
    std::string pre_text;
    std::string post_text;
    std::size_t budget = 1000000;
    int trials = 100;
    int len = 32;
    std::string token_text;
    bool as_json = false;
};

Ordering resolve_ordering(const Quiver& q, const std::string& text) {
    if (text.empty()) return build_pseudo_acyclic_ordering(q);
    Ordering ord = parse_ordering(text, q.size());
    if (!ordering_valid(q, ord).valid)
        std::cerr << "warning: ordering " << format_ordering(ord)
                  << " violates a triangle constraint; expect verification failures\n";
    return ord;
}

std::pair<int, int> parse_pair(const std::string& text, int n) {
    const MutationSeq v = parse_sequence(text, n);
    if (v.size() != 2 || v[0] == v[1])
        throw std::invalid_argument("--pair needs two distinct labels, e.g. --pair 1,2");
    return {v[0], v[1]};
}

int cmd_mutate(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const Seed s = apply_sequence(Seed::initial(q), parse_sequence(o.seq_text, q.size()));
    if (o.as_json)
        std::cout << json{{"b", matrix_json(s.b)}, {"c", matrix_json(s.c)}}.dump(2) << "\n";
    else
        std::cout << "B:\n" << format_matrix(s.b) << "C:\n" << format_matrix(s.c);
    return 0;
}

int cmd_reflections(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const Ordering ord = resolve_ordering(q, o.ordering_text);
    const Gim a = build_gim(q, ord);
    const auto w = parse_sequence(o.seq_text, q.size());
    const auto [seed, state] =
        apply_sequence_with_reflections(Seed::initial(q), ReflectionState::initial(q.size()), w);
    (void)seed;
    const IntMat l = l_matrix(a, state);

    if (o.as_json) {
        json pi = json::array(), r = json::array(), g = json::array();
        for (int i = 0; i < q.size(); ++i) {
            pi.push_back(matrix_json(pi_of_word(a, state.r[i])));
            r.push_back(format_word(state.r[i]));
            g.push_back(format_word(state.g[i]));
        }
        std::cout << json{{"ordering", ordering_json(ord)},
                          {"r", std::move(r)},
                          {"g", std::move(g)},
                          {"gim", matrix_json(a.mat())},
                          {"pi", std::move(pi)},
                          {"L", matrix_json(l)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "ordering: " << format_ordering(ord) << "\n";
    for (int i = 0; i < q.size(); ++i)
        std::cout << "r_" << i + 1 << " = " << format_word(state.r[i]) << "\n";
    for (int i = 0; i < q.size(); ++i)
        std::cout << "g_" << i + 1 << " = " << format_word(state.g[i]) << "\n";
    for (int i = 0; i < q.size(); ++i)
        std::cout << "pi(r_" << i + 1 << "):\n" << format_matrix(pi_of_word(a, state.r[i]));
    std::cout << "L:\n" << format_matrix(l);
    return 0;
}

int cmd_gim(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const Ordering ord = resolve_ordering(q, o.ordering_text);
    const Gim a = build_gim(q, ord);
    if (o.as_json)
        std::cout << json{{"ordering", ordering_json(ord)}, {"gim", matrix_json(a.mat())}}.dump(2)
                  << "\n";
    else
        std::cout << "ordering: " << format_ordering(ord) << "\n" << format_matrix(a.mat());
    return 0;
}

int cmd_ordering(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const auto rep = validate_type_an(q);
    if (!rep.accepted) {
        std::cerr << "not a type A_n quiver:\n";
        for (const auto& r : rep.reasons) std::cerr << "  " << r << "\n";
        return 2;
    }
    const Ordering ord = build_pseudo_acyclic_ordering(q);
    const auto triangles = find_triangles(q);
    if (o.as_json) {
        json tris = json::array();
        for (const auto& t : triangles)
            tris.push_back(json{{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1}, {"eps", t.eps}});
        std::cout << json{{"ordering", ordering_json(ord)},
                          {"triangles", std::move(tris)},
                          {"non_cycle_vertices", rep.non_cycle_count}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "ordering: " << format_ordering(ord) << "\n";
    std::cout << "triangles: " << triangles.size() << "\n";
    for (std::size_t t = 0; t < triangles.size(); ++t)
        std::cout << "triangle " << t + 1 << ": (i,j,k) = (" << triangles[t].i + 1 << ","
                  << triangles[t].j + 1 << "," << triangles[t].k + 1
                  << "), eps = " << (triangles[t].eps > 0 ? "+1" : "-1") << "\n";
    std::cout << "non-cycle vertices: " << rep.non_cycle_count << "\n";
    return 0;
}

int cmd_validate(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const auto rep = validate_type_an(q);
    if (o.as_json) {
        std::cout << json{{"accepted", rep.accepted},
                          {"triangles", rep.triangle_count},
                          {"non_cycle_vertices", rep.non_cycle_count},
                          {"reasons", rep.reasons}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "accepted: " << (rep.accepted ? "yes" : "no") << "\n";
        if (rep.accepted) {
            std::cout << "triangles: " << rep.triangle_count << "\n";
            std::cout << "non-cycle vertices: " << rep.non_cycle_count << "\n";
        }
        for (const auto& r : rep.reasons) std::cout << "reason: " << r << "\n";
    }
    return rep.accepted ? 0 : 2;
}

int cmd_verify(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const Ordering ord = resolve_ordering(q, o.ordering_text);
    const VerifyReport rep = bfs_verify(q, ord, o.budget);
    if (o.as_json) {
        json viols = json::array();
        for (const auto& v : rep.violations) viols.push_back(violation_json(v));
        std::cout << json{{"verdict", rep.pass ? "pass" : "fail"},
                          {"ordering", ordering_json(ord)},
                          {"seeds", rep.seeds},
                          {"edges", rep.edges},
                          {"violations", std::move(viols)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "ordering: " << format_ordering(ord) << "\n";
        std::cout << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
        std::cout << "seeds: " << rep.seeds << "\n";
        std::cout << "edges: " << rep.edges << "\n";
        for (const auto& v : rep.violations) print_violation(v);
    }
    return rep.pass ? 0 : 1;
}

int report_swap(const Common& o, const SwapReport& rep) {
    if (o.as_json) {
        json viols = json::array();
        for (const auto& v : rep.violations) viols.push_back(violation_json(v));
        std::cout << json{{"verdict", rep.pass ? "pass" : "fail"},
                          {"walk", seq_json(rep.walk)},
                          {"violations", std::move(viols)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "walk: " << format_sequence(rep.walk) << "\n";
        std::cout << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& v : rep.violations) print_violation(v);
    }
    return rep.pass ? 0 : 1;
}

int cmd_swap(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const auto [i, j] = parse_pair(o.pair_text, q.size());
    const Ordering ord = resolve_ordering(q, o.ordering_text);
    return report_swap(o, check_swap_effect(q, ord, parse_sequence(o.seq_text, q.size()), i, j));
}

int cmd_stable_walk(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const auto [i, j] = parse_pair(o.pair_text, q.size());
    const Ordering ord = resolve_ordering(q, o.ordering_text);
    return report_swap(o, check_stable_walk(q, ord, parse_sequence(o.seq_text, q.size()), i, j,
                                            parse_sequence(o.pre_text, q.size()),
                                            parse_sequence(o.post_text, q.size())));
}

int cmd_fuzz(const Common& o) {
    const Quiver q = load_quiver_file(o.quiver_path);
    const Ordering ord = resolve_ordering(q, o.ordering_text);
    const std::uint64_t token =
        o.token_text.empty() ? std::random_device{}() : std::stoull(o.token_text);
    const FuzzReport rep = random_walk_fuzz(q, ord, o.len, o.trials, token);
    if (o.as_json) {
        json viols = json::array();
        for (const auto& v : rep.violations) viols.push_back(violation_json(v));
        std::cout << json{{"verdict", rep.pass ? "pass" : "fail"},
                          {"token", rep.token},
                          {"trials", rep.trials},
                          {"hits", rep.hits},
                          {"violations", std::move(viols)},
                          {"witness", seq_json(rep.witness_walk)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "token: " << rep.token << "\n";
        std::cout << "trials: " << rep.trials << "\n";
        std::cout << "hits: " << rep.hits << "\n";
        std::cout << "violations: " << rep.violations.size() << "\n";
        if (!rep.pass) {
            std::cout << "witness walk: " << format_sequence(rep.witness_walk) << "\n";
            print_violation(rep.violations.front());
        }
    }
    return rep.pass ? 0 : 1;
}

int cmd_counterexample(const Common& o) {
    // the oriented triangle 1 -> 2 -> 3 -> 1, mutated at 2
    IntMat b(3, 3);
    b(0, 1) = 1, b(1, 2) = 1, b(2, 0) = 1;
    b(1, 0) = -1, b(2, 1) = -1, b(0, 2) = -1;
    const Quiver tri(std::move(b));
    const auto [seed, state] =
        apply_sequence_with_reflections(Seed::initial(tri), ReflectionState::initial(3), {1});
    (void)seed;

    std::vector<Ordering> passing, failing;
    std::vector<std::pair<Ordering, IntMat>> witnesses;
    std::vector<int> perm{0, 1, 2};
    do {
        const Ordering ord(perm);
        const Gim a = build_gim(tri, ord);
        const IntMat prod = pi_of_word(a, state.r[0]) * pi_of_word(a, state.r[2]);
        const IntMat square = prod * prod;
        if (square.is_identity()) {
            passing.push_back(ord);
        } else {
            failing.push_back(ord);
            witnesses.emplace_back(ord, square);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (o.as_json) {
        json pass = json::array(), fail = json::array(), wits = json::array();
        for (const auto& ord : passing) pass.push_back(format_ordering(ord));
        for (const auto& ord : failing) fail.push_back(format_ordering(ord));
        for (const auto& [ord, m] : witnesses)
            wits.push_back(json{{"ordering", format_ordering(ord)}, {"square", matrix_json(m)}});
        std::cout << json{{"passing", std::move(pass)},
                          {"failing", std::move(fail)},
                          {"witnesses", std::move(wits)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "passing orderings:";
    for (const auto& ord : passing) std::cout << " " << format_ordering(ord);
    std::cout << "\nfailing orderings:";
    for (const auto& ord : failing) std::cout << " " << format_ordering(ord);
    std::cout << "\n";
    for (const auto& [ord, m] : witnesses)
        std::cout << "ordering " << format_ordering(ord) << ": (pi(r_1) pi(r_3))^2 =\n"
                  << format_matrix(m);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quiver mutation, mutated reflections, and exchange-graph verification"};
    app.require_subcommand(1);
    Common o;

    auto add_quiver = [&](CLI::App* sub) {
        sub->add_option("quiver", o.quiver_path, "quiver file")->required();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.as_json, "JSON output"); };
    auto add_ordering = [&](CLI::App* sub) {
        sub->add_option("--ordering", o.ordering_text,
                        "linear ordering, ascending labels like 1,3,2");
    };
    auto add_seq = [&](CLI::App* sub) {
        sub->add_option("--seq", o.seq_text, "mutation sequence like 1,2,1");
    };

    auto* mutate = app.add_subcommand("mutate", "mutate [B | C] along a sequence");
    add_quiver(mutate), add_seq(mutate), add_json(mutate);

    auto* refl = app.add_subcommand("reflections", "reflection words, pi matrices, L-matrix");
    add_quiver(refl), add_seq(refl), add_ordering(refl), add_json(refl);

    auto* gim = app.add_subcommand("gim", "GIM of a quiver under an ordering");
    add_quiver(gim), add_ordering(gim), add_json(gim);

    auto* ordc = app.add_subcommand("ordering", "construct a pseudo-acyclic ordering");
    add_quiver(ordc), add_json(ordc);

    auto* val = app.add_subcommand("validate-an", "structural type-A_n validation");
    add_quiver(val), add_json(val);

    auto* verify = app.add_subcommand("verify", "exhaustive labelled exchange-graph check");
    add_quiver(verify), add_ordering(verify), add_json(verify);
    verify->add_option("--budget", o.budget, "node budget");

    auto* swap = app.add_subcommand("swap", "run one elementary swap and check its effect");
    add_quiver(swap), add_seq(swap), add_ordering(swap), add_json(swap);
    swap->add_option("--pair", o.pair_text, "the two labels to swap, like 1,2")->required();

    auto* stable = app.add_subcommand("stable-walk", "check a stable walk leaves pi unchanged");
    add_quiver(stable), add_seq(stable), add_ordering(stable), add_json(stable);
    stable->add_option("--pair", o.pair_text, "the commuting pair i,j")->required();
    stable->add_option("--pre", o.pre_text, "prefix sequence u");
    stable->add_option("--post", o.post_text, "suffix sequence w");

    auto* fuzz = app.add_subcommand("fuzz", "random walks; pi images must return with C = I");
    add_quiver(fuzz), add_ordering(fuzz), add_json(fuzz);
    fuzz->add_option("--len", o.len, "walk length");
    fuzz->add_option("--trials", o.trials, "number of walks");
    fuzz->add_option("--token", o.token_text, "reproducibility token");

    auto* counter =
        app.add_subcommand("counterexample", "orderings that break the triangle, with witnesses");
    add_json(counter);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mutate->parsed()) return cmd_mutate(o);
        if (refl->parsed()) return cmd_reflections(o);
        if (gim->parsed()) return cmd_gim(o);
        if (ordc->parsed()) return cmd_ordering(o);
        if (val->parsed()) return cmd_validate(o);
        if (verify->parsed()) return cmd_verify(o);
        if (swap->parsed()) return cmd_swap(o);
        if (stable->parsed()) return cmd_stable_walk(o);
        if (fuzz->parsed()) return cmd_fuzz(o);
        if (counter->parsed()) return cmd_counterexample(o);
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
