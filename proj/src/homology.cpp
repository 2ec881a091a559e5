#include "chordal/homology.hpp"

#include <stdexcept>

namespace chordal {

BoundaryMatrix boundary_matrix(const SimplicialComplex& d, int i) {
    if (d.is_void() || i < -1 || i > d.dim())
        throw std::invalid_argument("boundary index out of range");
    BoundaryMatrix b;
    if (i >= 0) b.row_faces = d.faces_of_dim(i - 1);
    b.col_faces = d.faces_of_dim(i);
    b.m = IntMatrix(static_cast<int>(b.row_faces.size()), static_cast<int>(b.col_faces.size()));
    if (i < 0) return b;  // ∂_{-1} is the zero map out of ⟨∅⟩
    std::map<Mask, int> row_index;
    for (std::size_t r = 0; r < b.row_faces.size(); ++r) row_index[b.row_faces[r]] = static_cast<int>(r);
    for (std::size_t c = 0; c < b.col_faces.size(); ++c) {
        Mask f = b.col_faces[c];
        int sign = 1;
        for (int v : vertices_of(f)) {
            b.m.at(row_index.at(f & ~bit(v)), static_cast<int>(c)) = sign;
            sign = -sign;
        }
    }
    return b;
}

HomologyProfile reduced_homology(const SimplicialComplex& d, FieldTag field) {
    HomologyProfile p;
    if (d.is_void()) {
        p.dims[-1] = 0;
        return p;
    }
    const int top = d.dim();
    // f[i+1] = number of i-faces, ranks[i+1] = rank ∂_i, for i = -1 .. top.
    std::vector<std::size_t> nfaces(static_cast<std::size_t>(top) + 2);
    std::vector<int> ranks(static_cast<std::size_t>(top) + 2, 0);
    nfaces[0] = 1;  // the empty face
    for (int i = 0; i <= top; ++i) {
        BoundaryMatrix b = boundary_matrix(d, i);
        nfaces[static_cast<std::size_t>(i) + 1] = b.col_faces.size();
        ranks[static_cast<std::size_t>(i) + 1] = rank(b.m, field);
    }
    for (int i = -1; i <= top; ++i) {
        int nullity = static_cast<int>(nfaces[static_cast<std::size_t>(i) + 1]) - ranks[static_cast<std::size_t>(i) + 1];
        int img = i + 1 <= top ? ranks[static_cast<std::size_t>(i) + 2] : 0;
        p.dims[i] = nullity - img;
    }
    return p;
}

LinResResult has_linear_resolution(const Clutter& c, FieldTag field) {
    if (c.is_complete()) return {LinRes::TriviallyLinear, std::nullopt};
    const int d = c.dim();
    LinResResult res{LinRes::Yes, std::nullopt};
    bool failed = false;
    // W in increasing size, ascending within a size; restrictions with at
    // most d+1 vertices are simplices or skeleta with nothing in degree >= d
    for (int size = d + 2; size <= c.n() && !failed; ++size) {
        for_each_subset_of_size(c.verts(), size, [&](Mask w) {
            if (failed) return;
            SimplicialComplex dw = clique_complex(induced(c, w));
            if (dw.dim() < d) return;
            HomologyProfile h = reduced_homology(dw, field);
            for (auto& [i, dimh] : h.dims) {
                if (i >= d && dimh != 0) {
                    res = {LinRes::No, std::make_pair(w, i)};
                    failed = true;
                    return;
                }
            }
        });
    }
    return res;
}

BettiTable graded_betti(const SimplicialComplex& d, FieldTag field) {
    if (d.is_void()) throw std::invalid_argument("graded Betti numbers of the void complex are undefined (unit ideal)");
    BettiTable t;
    for_each_submask(d.verts(), [&](Mask w) {
        SimplicialComplex dw = restrict_complex(d, w);
        HomologyProfile h = reduced_homology(dw, field);
        const int j = card(w);
        for (auto& [hi, dimh] : h.dims) {
            if (dimh == 0) continue;
            const int i = j - hi - 2;
            if (i >= 0) t.beta[{i, j}] += dimh;
        }
    });
    return t;
}

}  // namespace chordal
