#include "qreflect/io.hpp"

#include <fstream>
#include <sstream>

namespace qreflect {

namespace {

std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& what) {
    std::istringstream ss(text);
    std::vector<std::int64_t> out;
    std::int64_t x;
    while (ss >> x) out.push_back(x);
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw std::invalid_argument("unreadable " + what + ": '" + text + "'");
    return out;
}

std::vector<int> split_labels(const std::string& text, int n, const std::string& what) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        long v;
        try {
            v = std::stol(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad label '" + part + "' in " + what);
        }
        if (pos != part.size()) throw std::invalid_argument("bad label '" + part + "' in " + what);
        if (v < 1 || v > n)
            throw std::invalid_argument("label " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(n) + " in " + what);
        out.push_back(static_cast<int>(v - 1));
    }
    return out;
}

}  // namespace

Quiver parse_quiver(std::istream& in) {
    const auto lines = data_lines(in);
    if (lines.empty()) throw std::invalid_argument("empty quiver file");

    const auto head = parse_ints(lines[0], "vertex count");
    if (head.size() != 1 || head[0] < 1)
        throw std::invalid_argument("first data line must be the vertex count n >= 1");
    const int n = static_cast<int>(head[0]);
    if (static_cast<int>(lines.size()) != n + 1)
        throw std::invalid_argument("expected " + std::to_string(n) + " matrix rows, found " +
                                    std::to_string(lines.size() - 1));

    IntMat b(n, n);
    for (int i = 0; i < n; ++i) {
        const auto row = parse_ints(lines[i + 1], "matrix row " + std::to_string(i + 1));
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix row " + std::to_string(i + 1) + " has " +
                                        std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(n));
        for (int j = 0; j < n; ++j) b(i, j) = row[j];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b(i, j) != -b(j, i))
                throw std::invalid_argument(
                    "matrix not skew-symmetric: b(" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") = " + std::to_string(b(i, j)) + " but b(" +
                    std::to_string(j + 1) + "," + std::to_string(i + 1) + ") = " +
                    std::to_string(b(j, i)));
    return Quiver(std::move(b));
}

Quiver load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open quiver file '" + path + "'");
    return parse_quiver(in);
}

std::string format_matrix(const IntMat& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += std::to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

IntMat parse_matrix(std::istream& in, int rows, int cols) {
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!(in >> m(i, j))) throw std::invalid_argument("unreadable matrix entry");
    return m;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (p) out += ',';
        out += std::to_string(w.letters()[p] + 1);
    }
    return out;
}

Word parse_word(const std::string& text, int n) {
    if (text == "e" || text.empty()) return Word{};
    return Word(split_labels(text, n, "word"));
}

std::string format_sequence(const MutationSeq& w) {
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (p) out += ',';
        out += std::to_string(w[p] + 1);
    }
    return out;
}

MutationSeq parse_sequence(const std::string& text, int n) {
    if (text.empty()) return {};
    return split_labels(text, n, "mutation sequence");
}

std::string format_ordering(const Ordering& ord) {
    MutationSeq asc(ord.ascending().begin(), ord.ascending().end());
    return format_sequence(asc);
}

Ordering parse_ordering(const std::string& text, int n) {
    auto labels = split_labels(text, n, "ordering");
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("ordering must list all " + std::to_string(n) + " labels");
    return Ordering(std::move(labels));
}

}  // namespace qreflect
