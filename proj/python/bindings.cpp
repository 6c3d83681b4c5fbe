#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "qreflect/explore.hpp"
#include "qreflect/io.hpp"
#include "qreflect/ordering.hpp"

namespace py = pybind11;
using namespace qreflect;

// The python surface speaks 1-based vertex labels and plain nested lists,
// consistent with the CLI and file formats.

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

IntMat to_mat(const Rows& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Rows from_mat(const IntMat& m) {
    Rows rows(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

MutationSeq to_seq(const std::vector<int>& labels, int n) {
    MutationSeq out;
    out.reserve(labels.size());
    for (int x : labels) {
        if (x < 1 || x > n) throw std::out_of_range("label out of range 1..n");
        out.push_back(x - 1);
    }
    return out;
}

std::vector<int> from_seq(const MutationSeq& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int x : w) out.push_back(x + 1);
    return out;
}

Ordering to_ordering(const Quiver& q, const std::vector<int>& asc) {
    return Ordering(to_seq(asc, q.size()));
}

Ordering ordering_or_built(const Quiver& q, const std::vector<int>& asc) {
    if (asc.empty()) return build_pseudo_acyclic_ordering(q);
    return to_ordering(q, asc);
}

py::dict violation_dict(const Violation& v) {
    py::dict d;
    d["kind"] = v.kind;
    d["witness_a"] = from_seq(v.witness_a);
    d["witness_b"] = from_seq(v.witness_b);
    d["index"] = v.index >= 0 ? py::object(py::int_(v.index + 1)) : py::object(py::none());
    d["lhs"] = from_mat(v.lhs);
    d["rhs"] = from_mat(v.rhs);
    d["detail"] = v.detail;
    return d;
}

py::list violations_list(const std::vector<Violation>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(violation_dict(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_qreflect, m) {
    m.doc() = "exact quiver mutation, mutated reflections, and exchange-graph verification";

    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<invariant_error>(m, "InvariantError", PyExc_AssertionError);
    py::register_exception<overflow_error>(m, "OverflowError", PyExc_OverflowError);

    py::class_<Quiver>(m, "Quiver")
        .def(py::init([](const Rows& rows) { return Quiver(to_mat(rows)); }), py::arg("b"))
        .def_property_readonly("n", &Quiver::size)
        .def_property_readonly("b", [](const Quiver& q) { return from_mat(q.mat()); })
        .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
        .def("__repr__", [](const Quiver& q) {
            return "Quiver(n=" + std::to_string(q.size()) + ")";
        });

    m.def("load_quiver", &load_quiver_file, py::arg("path"),
          "read a quiver file (comments, n, then the rows of B)");

    m.def(
        "mutate",
        [](const Rows& rows, int k) {
            const IntMat mtx = to_mat(rows);
            if (k < 1 || k > mtx.rows()) throw std::out_of_range("label out of range 1..n");
            return from_mat(mutate_matrix(mtx, k - 1));
        },
        py::arg("m"), py::arg("k"), "one mutation of an n x n or n x 2n matrix at label k");

    m.def(
        "apply_sequence",
        [](const Quiver& q, const std::vector<int>& seq) {
            const Seed s = apply_sequence(Seed::initial(q), to_seq(seq, q.size()));
            py::dict d;
            d["b"] = from_mat(s.b);
            d["c"] = from_mat(s.c);
            return d;
        },
        py::arg("quiver"), py::arg("seq"), "mutate [B | I] along a sequence of 1-based labels");

    m.def(
        "reflections",
        [](const Quiver& q, const std::vector<int>& seq, const std::vector<int>& ordering) {
            const Ordering ord = ordering_or_built(q, ordering);
            const Gim a = build_gim(q, ord);
            const auto [seed, state] = apply_sequence_with_reflections(
                Seed::initial(q), ReflectionState::initial(q.size()), to_seq(seq, q.size()));
            py::dict d;
            d["b"] = from_mat(seed.b);
            d["c"] = from_mat(seed.c);
            py::list r, g, pi;
            for (int i = 0; i < q.size(); ++i) {
                r.append(format_word(state.r[i]));
                g.append(format_word(state.g[i]));
                pi.append(from_mat(pi_of_word(a, state.r[i])));
            }
            d["r"] = r;
            d["g"] = g;
            d["pi"] = pi;
            d["gim"] = from_mat(a.mat());
            d["L"] = from_mat(l_matrix(a, state));
            d["ordering"] = from_seq(MutationSeq(ord.ascending().begin(), ord.ascending().end()));
            return d;
        },
        py::arg("quiver"), py::arg("seq"), py::arg("ordering") = std::vector<int>{},
        "reflection words r_i, conjugators g_i, pi matrices, GIM and L-matrix");

    m.def(
        "validate_type_an",
        [](const Quiver& q) {
            const auto rep = validate_type_an(q);
            py::dict d;
            d["accepted"] = rep.accepted;
            d["triangles"] = rep.triangle_count;
            d["non_cycle_vertices"] = rep.non_cycle_count;
            d["reasons"] = rep.reasons;
            return d;
        },
        py::arg("quiver"));

    m.def(
        "an_membership",
        [](const Quiver& q, std::size_t budget) { return an_membership_oracle(q, budget); },
        py::arg("quiver"), py::arg("budget") = std::size_t{1000000},
        "BFS oracle: is the quiver mutation-equivalent to an A_n path");

    m.def(
        "build_ordering",
        [](const Quiver& q) {
            const Ordering ord = build_pseudo_acyclic_ordering(q);
            return from_seq(MutationSeq(ord.ascending().begin(), ord.ascending().end()));
        },
        py::arg("quiver"), "construct the canonical pseudo-acyclic ordering");

    m.def(
        "ordering_valid",
        [](const Quiver& q, const std::vector<int>& ordering) {
            return static_cast<bool>(ordering_valid(q, to_ordering(q, ordering)).valid);
        },
        py::arg("quiver"), py::arg("ordering"));

    m.def(
        "enumerate_valid_orderings",
        [](const Quiver& q, int n_max) {
            py::list out;
            for (const auto& ord : enumerate_valid_orderings(q, n_max))
                out.append(from_seq(MutationSeq(ord.ascending().begin(), ord.ascending().end())));
            return out;
        },
        py::arg("quiver"), py::arg("n_max") = 7);

    m.def(
        "gim",
        [](const Quiver& q, const std::vector<int>& ordering) {
            return from_mat(build_gim(q, ordering_or_built(q, ordering)).mat());
        },
        py::arg("quiver"), py::arg("ordering") = std::vector<int>{});

    m.def(
        "bfs_verify",
        [](const Quiver& q, const std::vector<int>& ordering, std::size_t budget) {
            const auto rep = bfs_verify(q, ordering_or_built(q, ordering), budget);
            py::dict d;
            d["verdict"] = rep.pass ? "pass" : "fail";
            d["seeds"] = rep.seeds;
            d["edges"] = rep.edges;
            d["violations"] = violations_list(rep.violations);
            return d;
        },
        py::arg("quiver"), py::arg("ordering") = std::vector<int>{},
        py::arg("budget") = std::size_t{1000000},
        "enumerate the labelled exchange graph, checking pi consistency on\n"
        "rediscovery and the relation suite at every seed");

    m.def(
        "swap_effect",
        [](const Quiver& q, const std::vector<int>& p, int i, int j,
           const std::vector<int>& ordering) {
            if (i < 1 || i > q.size() || j < 1 || j > q.size())
                throw std::out_of_range("label out of range 1..n");
            const auto rep = check_swap_effect(q, ordering_or_built(q, ordering),
                                               to_seq(p, q.size()), i - 1, j - 1);
            py::dict d;
            d["verdict"] = rep.pass ? "pass" : "fail";
            d["walk"] = from_seq(rep.walk);
            d["violations"] = violations_list(rep.violations);
            return d;
        },
        py::arg("quiver"), py::arg("p"), py::arg("i"), py::arg("j"),
        py::arg("ordering") = std::vector<int>{});

    m.def(
        "stable_walk",
        [](const Quiver& q, const std::vector<int>& p, int i, int j, const std::vector<int>& u,
           const std::vector<int>& w, const std::vector<int>& ordering) {
            if (i < 1 || i > q.size() || j < 1 || j > q.size())
                throw std::out_of_range("label out of range 1..n");
            const auto rep =
                check_stable_walk(q, ordering_or_built(q, ordering), to_seq(p, q.size()), i - 1,
                                  j - 1, to_seq(u, q.size()), to_seq(w, q.size()));
            py::dict d;
            d["verdict"] = rep.pass ? "pass" : "fail";
            d["walk"] = from_seq(rep.walk);
            d["violations"] = violations_list(rep.violations);
            return d;
        },
        py::arg("quiver"), py::arg("p"), py::arg("i"), py::arg("j"),
        py::arg("u") = std::vector<int>{}, py::arg("w") = std::vector<int>{},
        py::arg("ordering") = std::vector<int>{});

    m.def(
        "swap_lemma_forms",
        [](const Quiver& q, const std::vector<int>& p, int i, int j,
           const std::vector<int>& ordering) {
            if (i < 1 || i > q.size() || j < 1 || j > q.size())
                throw std::out_of_range("label out of range 1..n");
            const auto rep = check_swap_lemma_forms(q, ordering_or_built(q, ordering),
                                                    to_seq(p, q.size()), i - 1, j - 1);
            py::dict d;
            d["verdict"] = rep.pass ? "pass" : "fail";
            d["walk"] = from_seq(rep.walk);
            d["violations"] = violations_list(rep.violations);
            return d;
        },
        py::arg("quiver"), py::arg("p"), py::arg("i"), py::arg("j"),
        py::arg("ordering") = std::vector<int>{});

    m.def(
        "fuzz",
        [](const Quiver& q, const std::vector<int>& ordering, int length, int trials,
           std::uint64_t token) {
            const auto rep = random_walk_fuzz(q, ordering_or_built(q, ordering), length, trials,
                                              token);
            py::dict d;
            d["verdict"] = rep.pass ? "pass" : "fail";
            d["token"] = rep.token;
            d["trials"] = rep.trials;
            d["hits"] = rep.hits;
            d["violations"] = violations_list(rep.violations);
            d["witness"] = from_seq(rep.witness_walk);
            return d;
        },
        py::arg("quiver"), py::arg("ordering") = std::vector<int>{}, py::arg("length") = 32,
        py::arg("trials") = 100, py::arg("token") = std::uint64_t{1},
        "seeded random walks; pi images must be restored whenever C returns to I");
}
