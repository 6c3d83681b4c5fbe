#pragma once

#include <iosfwd>
#include <string>

#include "qreflect/gim.hpp"
#include "qreflect/ordering.hpp"
#include "qreflect/quiver.hpp"
#include "qreflect/reflections.hpp"

namespace qreflect {

// Text formats.  Vertex labels are 1-based everywhere outside the library:
// in quiver files, serialized words, mutation sequences and orderings.

/// Quiver file: optional '#' comment lines, a line with n, then n rows of n
/// space-separated integers.  Rejects non-skew-symmetric input naming the
/// offending entry pair.
Quiver parse_quiver(std::istream& in);
Quiver load_quiver_file(const std::string& path);

/// n rows of space-separated integers.
std::string format_matrix(const IntMat& m);
IntMat parse_matrix(std::istream& in, int rows, int cols);

/// Comma-separated 1-based generator indices; the empty word is "e".
std::string format_word(const Word& w);
Word parse_word(const std::string& text, int n);

/// Comma-separated 1-based labels; the empty sequence is "".
std::string format_sequence(const MutationSeq& w);
MutationSeq parse_sequence(const std::string& text, int n);

/// Labels in ascending order, e.g. "3,5,2,4,1" means 3<5<2<4<1.
std::string format_ordering(const Ordering& ord);
Ordering parse_ordering(const std::string& text, int n);

}  // namespace qreflect
