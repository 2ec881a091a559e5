#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chordal {

/// The two coefficient fields used throughout.  Characteristic-sensitive
/// statements are checked over both; "every field" claims are desk-proxied
/// by the pair.
enum class FieldTag { GF2, Rational };

inline const char* field_name(FieldTag f) { return f == FieldTag::GF2 ? "GF(2)" : "Q"; }

/// Dense integer matrix, row-major.  Boundary matrices only ever hold
/// -1/0/+1 but rank() accepts arbitrary int entries.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

/// Exact rank.  GF(2) uses word-packed row reduction; the rational rank uses
/// fraction-free (Bareiss) elimination, in 128-bit arithmetic while entries
/// stay small and in big integers afterwards.  No floating point.
int rank(const IntMatrix& m, FieldTag field);

int rank_gf2(const IntMatrix& m);
int rank_rational(const IntMatrix& m);

/// Row-reduced GF(2) basis of the nullspace of m (vectors over columns).
/// Each vector is packed into u64 words, cols <= 64 * words.
std::vector<std::vector<std::uint64_t>> nullspace_gf2(const IntMatrix& m);

}  // namespace chordal
