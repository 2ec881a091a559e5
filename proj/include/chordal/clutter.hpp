#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "chordal/face.hpp"

namespace chordal {

/// A d-dimensional uniform clutter: an antichain of faces ("circuits") that
/// all have dimension d, over a fixed vertex set.  The vertex set may contain
/// vertices that appear in no circuit; normalize_support() drops them.
///
/// Values are immutable after construction and every operation below is pure.
class Clutter {
public:
    Clutter(Mask verts, int d, std::vector<Mask> circuits);

    static Clutter empty(Mask verts, int d) { return Clutter(verts, d, {}); }
    static Clutter complete(Mask verts, int d);

    Mask verts() const { return verts_; }
    int n() const { return card(verts_); }
    int dim() const { return d_; }
    const std::vector<Mask>& circuits() const { return circuits_; }
    std::size_t size() const { return circuits_.size(); }
    bool is_empty() const { return circuits_.empty(); }
    bool is_complete() const;

    bool has_circuit(Mask f) const {
        return std::binary_search(circuits_.begin(), circuits_.end(), f);
    }

    /// Vertices that appear in at least one circuit.
    Mask support() const;

    bool operator==(const Clutter&) const = default;

private:
    Mask verts_;
    int d_;
    std::vector<Mask> circuits_;  // sorted, unique
};

/// A possibly non-uniform clutter: an antichain of edges.  Needed for
/// W-chordality, where contractions break uniformity.
class GeneralClutter {
public:
    GeneralClutter(Mask verts, std::vector<Mask> edges);

    Mask verts() const { return verts_; }
    int n() const { return card(verts_); }
    const std::vector<Mask>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool is_empty() const { return edges_.empty(); }
    Mask support() const;

    bool operator==(const GeneralClutter&) const = default;

private:
    Mask verts_;
    std::vector<Mask> edges_;  // sorted, unique, pairwise incomparable
};

/// Reduces an arbitrary family to its inclusion-minimal members.
std::vector<Mask> minimal_sets(std::vector<Mask> family);

// --- core operations on uniform clutters ---

/// The complement clutter: all d-faces of V not in C.
Clutter complement(const Clutter& c);

/// True iff every (d+1)-subset of a is a circuit; vacuously true for |a| <= d.
bool is_clique(const Clutter& c, Mask a);

/// Induced clutter C_A on vertex set a.
Clutter induced(const Clutter& c, Mask a);

/// C - v: vertex removed from the vertex set, circuits through v dropped.
Clutter delete_vertex(const Clutter& c, int v);

/// Drops all vertices that appear in no circuit.  Idempotent.
Clutter normalize_support(const Clutter& c);

/// C∨ = { V \ F : F in complement(C) }, an (n-d-2)-uniform family.
GeneralClutter dual_clutter(const Clutter& c);

/// C - F for a circuit F (used with F in MS(C+)): removes the single circuit.
Clutter delete_circuit(const Clutter& c, Mask f);

GeneralClutter delete_vertex(const GeneralClutter& c, int v);

/// Contraction D/v: minimal sets of { e \ {v} : e in D }.
GeneralClutter contraction(const GeneralClutter& c, int v);

GeneralClutter as_general(const Clutter& c);

}  // namespace chordal
