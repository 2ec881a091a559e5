#pragma once

#include <map>
#include <optional>
#include <utility>

#include "chordal/complex.hpp"
#include "chordal/linalg.hpp"

namespace chordal {

/// ∂_i of the augmented oriented chain complex: rows are (i-1)-faces, columns
/// are i-faces, signs alternate under the fixed ascending vertex order.
/// i = 0 gives the augmentation row (∂_0 maps vertices onto ∅).
struct BoundaryMatrix {
    std::vector<Mask> row_faces;
    std::vector<Mask> col_faces;
    IntMatrix m;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& d, int i);

/// dim H̃_i(Δ; K) for -1 <= i <= dim Δ.  For VOID the profile is {-1: 0} by
/// convention; for {∅} it is {-1: 1}.
struct HomologyProfile {
    std::map<int, int> dims;

    int dim(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }
    bool trivial_from(int lo) const {
        for (auto& [i, h] : dims)
            if (i >= lo && h != 0) return false;
        return true;
    }
    bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile reduced_homology(const SimplicialComplex& d, FieldTag field);

/// Fröberg test for I(complement(C)), specialized to clique complexes:
/// linear resolution over K  ⟺  H̃_i(Δ(C)_W; K) = 0 for every W ⊆ V, i >= d.
/// A complete clutter has the zero ideal; that case is reported separately.
enum class LinRes { TriviallyLinear, Yes, No };

struct LinResResult {
    LinRes value = LinRes::No;
    std::optional<std::pair<Mask, int>> witness;  // (W, i) with nonzero homology

    bool holds() const { return value != LinRes::No; }
};

LinResResult has_linear_resolution(const Clutter& c, FieldTag field);

/// Graded Betti numbers of I_Δ by the Hochster subset-homology sweep:
/// β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-2}(Δ_W; K).
struct BettiTable {
    std::map<std::pair<int, int>, long long> beta;  // (i, j) -> β_{ij}

    long long at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
    long long total(int i) const {
        long long s = 0;
        for (auto& [ij, b] : beta)
            if (ij.first == i) s += b;
        return s;
    }
    int max_i() const {
        int m = -1;
        for (auto& [ij, b] : beta)
            if (b != 0) m = std::max(m, ij.first);
        return m;
    }
    /// True iff supported on the single diagonal j = i + t.
    bool concentrated_on(int t) const {
        for (auto& [ij, b] : beta)
            if (b != 0 && ij.second != ij.first + t) return false;
        return true;
    }
    bool operator==(const BettiTable&) const = default;
};

BettiTable graded_betti(const SimplicialComplex& d, FieldTag field);

}  // namespace chordal
