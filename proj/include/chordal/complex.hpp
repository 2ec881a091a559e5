#pragma once

#include <vector>

#include "chordal/clutter.hpp"

namespace chordal {

/// A simplicial complex represented by its facet antichain.  Two degenerate
/// values are distinct: the VOID complex (no faces at all, empty facet list)
/// and the empty complex {∅} (single empty facet).  The distinction keeps
/// Alexander duality a true involution: dual(full simplex) = VOID.
class SimplicialComplex {
public:
    SimplicialComplex(Mask verts, std::vector<Mask> facets);

    static SimplicialComplex void_complex(Mask verts) { return SimplicialComplex(verts, {}); }
    static SimplicialComplex irrelevant(Mask verts) { return SimplicialComplex(verts, {Mask{0}}); }  // {∅}
    static SimplicialComplex simplex(Mask verts) { return SimplicialComplex(verts, {verts}); }

    Mask verts() const { return verts_; }
    int n() const { return card(verts_); }
    const std::vector<Mask>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    /// dim of VOID is reported as -2 (below the empty complex at -1).
    int dim() const;
    bool is_pure() const;
    bool is_simplex() const { return facets_.size() == 1; }

    bool is_face(Mask f) const;
    /// All faces of dimension i, ascending mask order.
    std::vector<Mask> faces_of_dim(int i) const;
    std::size_t count_faces_of_dim(int i) const;
    /// Vertices that lie in some face.
    Mask support() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    Mask verts_;
    std::vector<Mask> facets_;  // sorted antichain; {} = VOID, {0} = {∅}
};

/// ⟨D⟩ — the complex generated by a clutter's circuits as facets.
SimplicialComplex span_complex(const Clutter& c);
SimplicialComplex span_complex(const GeneralClutter& c);

/// Δ(C) — all cliques of C.  Its d-faces are exactly the circuits and every
/// face of dimension < d is present.
SimplicialComplex clique_complex(const Clutter& c);

/// Δ∨ = { V \ F : F ⊆ V, F ∉ Δ }.  An involution on complexes over V.
SimplicialComplex alexander_dual(const SimplicialComplex& d);

/// link_Δ F = { G \ F : F ⊆ G ∈ Δ } on the vertex set V \ F.
SimplicialComplex link(const SimplicialComplex& d, Mask f);

/// Δ - v: faces avoiding v, on the vertex set V \ {v}.
SimplicialComplex delete_vertex(const SimplicialComplex& d, int v);

/// Pure i-skeleton: the complex whose facets are all i-faces of Δ.
SimplicialComplex pure_skeleton(const SimplicialComplex& d, int i);

/// Minimal non-faces of Δ (the Stanley-Reisner generators of I_Δ).
std::vector<Mask> stanley_reisner_generators(const SimplicialComplex& d);

/// Restriction Δ_W = { F ∈ Δ : F ⊆ W }.
SimplicialComplex restrict_complex(const SimplicialComplex& d, Mask w);

/// Facets of link_⟨C⟩(v) as a (d-1)-clutter on V \ {v}; empty when v lies in
/// no circuit.
Clutter link_facets(const Clutter& c, int v);

}  // namespace chordal
