#pragma once

#include <optional>
#include <string>

#include "chordal/chordality.hpp"
#include "chordal/homology.hpp"

namespace chordal {

/// C+ — the (d+1)-dimensional cliques of C, i.e. Facets(Δ(C)^[d+1]), on the
/// same vertex set.
Clutter ascent(const Clutter& c);

/// Pure d-dimensional Δ is d-path connected when the facet adjacency graph
/// (adjacency = intersection of size d) is connected.
bool is_d_path_connected(const SimplicialComplex& d);

/// A d-cycle: pure, d-path connected, every (d-1)-face in an even number of
/// d-faces.
bool is_d_cycle(const SimplicialComplex& d);

/// Decision of d-chordedness through the symmetric-difference criterion:
/// every d-cycle of ⟨C⟩ must lie in the GF(2) span of the boundaries of
/// (d+2)-cliques of C supported inside the cycle's vertex set.  On failure
/// the witness is the lexicographically least failing cycle vector.
struct DChordedResult {
    Outcome outcome = Outcome::False;
    std::optional<std::vector<Mask>> witness;  // facets of a failing cycle

    bool holds() const { return outcome == Outcome::True; }
};

DChordedResult is_d_chorded(const Clutter& c, const SearchBudget& budget = {});

/// Partition of the facets of a d-cycle into facet sets of face-minimal
/// d-cycles (greedy peeling of minimum-support kernel vectors).
struct CycleDecomposition {
    Outcome outcome = Outcome::False;
    std::vector<std::vector<Mask>> parts;
};

CycleDecomposition decompose_into_face_minimal_cycles(const SimplicialComplex& d, const SearchBudget& budget = {});

/// CF-chordal: ∅ is CF-chordal; otherwise ⟨C⟩ must be d-chorded and C+
/// CF-chordal in turn.
Outcome is_cf_chordal(const Clutter& c, const SearchBudget& budget = {});

/// CF-tree: ⟨C⟩ has no d-cycles, i.e. the GF(2) kernel of ∂_d is zero.
bool is_cf_tree(const Clutter& c);

// --- theorem-shaped checks ---

struct AscentChordalReport {
    EliminationCertificate base;
    EliminationCertificate ascended;
    bool holds = false;
};

/// Chordality ascends: requires is_chordal(C), asserts is_chordal(C+).
AscentChordalReport chordal_implies_ascent_chordal_check(const Clutter& c, const SearchBudget& budget = {});

struct SmsDeletionChordedReport {
    bool holds = false;
    std::optional<std::vector<Mask>> witness;
};

/// ⟨C⟩ d-chorded and F ∈ SMS(C+) imply ⟨C - F⟩ d-chorded.
SmsDeletionChordedReport sms_deletion_chorded_check(const Clutter& c, Mask f, const SearchBudget& budget = {});

/// Two-phase edge order of a chordal graph: simplicial edges first, then a
/// leaf order of the remaining forest.
struct EdgeOrder {
    std::vector<Mask> edges;
};

EdgeOrder chordal_edge_order(const Clutter& c, const SearchBudget& budget = {});
bool replay_edge_order(const Clutter& c, const std::vector<Mask>& edges);

/// The linear-resolution statements around SMS(C+) deletions:
///   (1) some F ∈ MS(C+) has linres(C - F), and linres(C+), linres(C - v) ∀v;
///   (2) linres(C);
///   (3) every F ∈ SMS(C+) has linres(C - F), and linres(C+), linres(C - v) ∀v.
/// (1) ⇒ (2) ⇒ (3) always; all three are equivalent when SMS(C+) ≠ ∅.
struct LinResSmsReport {
    bool s1 = false, s2 = false, s3 = false;
    bool sms_nonempty = false;
    bool implications_hold = false;
    bool equivalence_holds = true;  // vacuous unless sms_nonempty
    std::string detail;
};

LinResSmsReport lin_res_sms_check(const Clutter& c, FieldTag field);

/// For n <= d+3: C+ = ∅ together with a linear resolution over both fields
/// forces chordality (and C is a CF-tree); with linear quotients instead, a
/// free maximal subcircuit exists.
struct SmallVertexReport {
    bool hypothesis_resolution = false;  // C+ = ∅ and linres over GF2 and Q
    bool chordal = false;
    bool cf_tree = false;
    bool hypothesis_quotients = false;  // C ≠ ∅, C+ = ∅ and linear quotients
    bool has_free_subcircuit = false;
    bool holds = true;
};

SmallVertexReport n_le_d_plus_3_check(const Clutter& c, const SearchBudget& budget = {});

}  // namespace chordal
