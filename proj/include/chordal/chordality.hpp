#pragma once

#include <memory>
#include <optional>

#include "chordal/complex.hpp"
#include "chordal/search.hpp"

namespace chordal {

// --- maximal subcircuits ---

/// The (d-1)-faces contained in some circuit of C.
std::vector<Mask> maximal_subcircuits(const Clutter& c);

/// N_C[e] = e ∪ { v : e ∪ {v} ∈ C } for a (d-1)-face e.
Mask closed_neighborhood(const Clutter& c, Mask e);

/// Maximal subcircuits whose closed neighborhood is a clique.
std::vector<Mask> simplicial_maximal_subcircuits(const Clutter& c);

/// Maximal subcircuits contained in exactly one circuit; always simplicial.
std::vector<Mask> free_maximal_subcircuits(const Clutter& c);

/// C - e: circuits containing the (d-1)-face e removed, vertex set unchanged.
Clutter delete_subcircuit(const Clutter& c, Mask e);

// --- chordality ---

/// An elimination sequence e_1, ..., e_t of simplicial maximal subcircuits
/// whose replay empties the clutter.
struct EliminationCertificate {
    std::vector<Mask> steps;
};

struct ChordalityResult {
    Outcome outcome = Outcome::False;
    std::optional<EliminationCertificate> certificate;  // present iff True

    bool is_chordal() const { return outcome == Outcome::True; }
};

/// Decides chordality by depth-first search over SMS choices with memoization
/// on the circuit subset.  The definition is existential and the paper does
/// not establish order-independence, so greedy alone would be unsound as a
/// "no" answer; it is only the first branch explored.
ChordalityResult is_chordal(const Clutter& c, const SearchBudget& budget = {});

/// Greedy variant: always deletes the canonically least simplicial maximal
/// subcircuit, no backtracking.  A gap against is_chordal on some instance
/// would settle the order-independence question; the harness hunts for one.
bool greedy_is_chordal(const Clutter& c);

/// Independent replay of a certificate: checks every step is simplicial at
/// its turn and that the final clutter has no circuits.
bool replay_elimination(const Clutter& c, const EliminationCertificate& cert);

// --- vertex decomposability ---

/// Certificate tree: internal nodes name a shedding vertex with subtrees for
/// the link and the deletion; leaves assert the complex is a simplex.
struct SheddingNode {
    bool leaf = true;
    int vertex = -1;  // 0-based, internal nodes only
    std::shared_ptr<const SheddingNode> link;
    std::shared_ptr<const SheddingNode> deletion;
};
using SheddingCertificate = std::shared_ptr<const SheddingNode>;

/// v is a shedding vertex when no facet of link_Δ(v) is a facet of Δ - v.
bool is_shedding_vertex(const SimplicialComplex& d, int v);

/// For pure Δ: v is shedding iff Δ - v is pure of the same dimension.
bool shedding_pure_criterion(const SimplicialComplex& d, int v);

struct VertexDecomposabilityResult {
    Outcome outcome = Outcome::False;
    SheddingCertificate certificate;  // present iff True

    bool is_decomposable() const { return outcome == Outcome::True; }
};

/// A nonempty complex is vertex decomposable when it is a simplex or some
/// shedding vertex has decomposable link and deletion.  {∅} counts as a
/// simplex; the VOID complex is rejected.
VertexDecomposabilityResult is_vertex_decomposable(const SimplicialComplex& d, const SearchBudget& budget = {});

bool replay_shedding(const SimplicialComplex& d, const SheddingCertificate& cert);

// --- W-chordality ---

/// Interpretation switch for the simplicial-vertex definition when v lies in
/// exactly one edge: the source text quantifies over e1, e2 containing v
/// without saying whether e1 = e2 is allowed.  DistinctEdges (the default)
/// makes leaves simplicial, matching the graph intuition.
enum class SimplicialVertexRule { DistinctEdges, AllowEqualEdges };

bool is_simplicial_vertex(const GeneralClutter& c, int v,
                          SimplicialVertexRule rule = SimplicialVertexRule::DistinctEdges);

/// Every clutter reachable by deletions/contractions has a simplicial vertex.
Outcome is_w_chordal(const GeneralClutter& c, const SearchBudget& budget = {},
                     SimplicialVertexRule rule = SimplicialVertexRule::DistinctEdges);

// --- the vertex-deletion lemma made effective ---

/// Given a shedding vertex v of ⟨C∨⟩ whose link facets form a chordal
/// clutter, produces SMS deletions e'v lifted from an elimination of the link
/// facets; replaying them yields a clutter whose circuits are those of C - v.
/// Throws listing the failed precondition otherwise.
std::vector<Mask> eliminate_toward_vertex_deletion(const Clutter& c, int v,
                                                   const SearchBudget& budget = {});

}  // namespace chordal
