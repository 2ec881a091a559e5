#include <doctest.h>

#include <map>
#include <optional>
#include <set>

#include "chordal/fixtures.hpp"
#include "chordal/harness.hpp"
#include "helpers.hpp"

using namespace chordal;
using namespace test_helpers;

namespace {

SimplicialComplex tetra_boundary(int offset = 0) {
    std::vector<Mask> fs;
    for_each_subset_of_size(full_mask(4 + offset) & ~(full_mask(offset)), 3, [&](Mask f) { fs.push_back(f); });
    return SimplicialComplex(full_mask(4 + offset), fs);
}

// Solves z = sum of chosen (d+2)-clique boundaries over GF(2); test-side
// replication of the span argument, used to exercise conditions (a)-(d).
std::optional<std::vector<Mask>> clique_decomposition(const Clutter& c, const std::vector<Mask>& cycle) {
    std::vector<Mask> cliques;
    Mask support = 0;
    for (Mask f : cycle) support |= f;
    Clutter plus = ascent(c);
    for (Mask a : plus.circuits())
        if (contains(support, a)) cliques.push_back(a);
    // columns: cliques, plus the target as the augmented column
    std::vector<std::uint64_t> rows(c.size(), 0);
    auto face_index = [&](Mask f) {
        return static_cast<std::size_t>(
            std::lower_bound(c.circuits().begin(), c.circuits().end(), f) - c.circuits().begin());
    };
    for (std::size_t j = 0; j < cliques.size(); ++j)
        for_each_subset_of_size(cliques[j], c.dim() + 1, [&](Mask f) {
            rows[face_index(f)] ^= std::uint64_t{1} << j;
        });
    std::uint64_t target_col = std::uint64_t{1} << cliques.size();
    for (Mask f : cycle) rows[face_index(f)] ^= target_col;
    // Gauss-Jordan over GF(2)
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
    for (std::size_t j = 0; j < cliques.size() && rank < rows.size(); ++j) {
        std::size_t piv = rank;
        while (piv < rows.size() && !(rows[piv] >> j & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r] >> j & 1)) rows[r] ^= rows[rank];
        pivots.emplace_back(rank, j);
        ++rank;
    }
    std::uint64_t clique_cols = target_col - 1;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if ((rows[r] & target_col) && !(rows[r] & clique_cols)) return std::nullopt;  // inconsistent
    std::vector<Mask> chosen;
    std::uint64_t solution = 0;
    for (auto& [r, j] : pivots) {
        if (rows[r] & target_col) {
            solution |= std::uint64_t{1} << j;
            chosen.push_back(cliques[j]);
        }
    }
    // verify the symmetric difference equals the cycle
    std::map<Mask, int> parity;
    for (std::size_t j = 0; j < cliques.size(); ++j)
        if (solution >> j & 1)
            for_each_subset_of_size(cliques[j], c.dim() + 1, [&](Mask f) { ++parity[f]; });
    std::set<Mask> symdiff;
    for (auto& [f, count] : parity)
        if (count % 2) symdiff.insert(f);
    if (symdiff != std::set<Mask>(cycle.begin(), cycle.end())) return std::nullopt;
    return chosen;
}

}  // namespace

TEST_CASE("ascent of the fixtures") {
    CHECK(ascent(fixtures::octahedron_plus()).circuits() ==
          sorted(FS({{1, 2, 3, 5}, {1, 3, 4, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}})));
    CHECK(ascent(fixtures::dunce_hat()).is_empty());
    // definition check on random instances: exactly the (d+2)-sets whose
    // (d+1)-subsets are all circuits
    for (const Clutter& c : harness::generate({6, 2, 0.6, 3, 20})) {
        Clutter up = ascent(c);
        for_each_subset_of_size(c.verts(), c.dim() + 3, [&](Mask a) {
            bool clique = true;
            for_each_subset_of_size(a, c.dim() + 2, [&](Mask s) {
                if (clique && !c.has_circuit(s)) clique = false;
            });
            CHECK(clique == up.has_circuit(a));
        });
    }
}

TEST_CASE("iterated ascents of the dunce-hat edge graph") {
    Clutter d(full_mask(8), 1, maximal_subcircuits(fixtures::dunce_hat()));
    Clutter d3 = ascent(ascent(ascent(d)));
    CHECK(d3.circuits() ==
          sorted(FS({{1, 2, 3, 4, 5}, {1, 2, 3, 7, 8}, {1, 2, 3, 4, 8},
                     {1, 3, 6, 4, 5}, {1, 3, 6, 7, 8}, {1, 3, 6, 4, 8}})));
    CHECK(ascent(d3).is_empty());
}

TEST_CASE("d-path connectivity") {
    CHECK(is_d_path_connected(SimplicialComplex(full_mask(3), FS({{1, 2, 3}}))));
    CHECK(!is_d_path_connected(SimplicialComplex(full_mask(4), FS({{1, 2}, {3, 4}}))));
    CHECK(is_d_path_connected(tetra_boundary()));
    CHECK_THROWS(is_d_path_connected(SimplicialComplex(full_mask(3), FS({{1, 2}, {3}}))));
}

TEST_CASE("d-cycles") {
    CHECK(is_d_cycle(tetra_boundary()));
    CHECK(is_d_cycle(span_complex(fixtures::hollow_octahedron())));
    CHECK(!is_d_cycle(SimplicialComplex(full_mask(3), FS({{1, 2, 3}}))));
    CHECK(!is_d_cycle(SimplicialComplex::void_complex(full_mask(2))));
}

TEST_CASE("face-minimal cycle decomposition") {
    CycleDecomposition single = decompose_into_face_minimal_cycles(tetra_boundary());
    REQUIRE(single.outcome == Outcome::True);
    CHECK(single.parts.size() == 1);
    CHECK(sorted(single.parts[0]) == tetra_boundary().facets());

    // two disjoint tetrahedron boundaries
    SimplicialComplex left = tetra_boundary(), right = tetra_boundary(4);
    std::vector<Mask> both = left.facets();
    for (Mask f : right.facets()) both.push_back(f);
    CycleDecomposition two = decompose_into_face_minimal_cycles(SimplicialComplex(full_mask(8), both));
    REQUIRE(two.outcome == Outcome::True);
    CHECK(two.parts.size() == 2);

    // symmetric difference of two tetrahedron boundaries sharing the facet 234
    std::vector<Mask> glued;
    for (Mask f : FS({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}})) glued.push_back(f);
    SimplicialComplex bipyramid(full_mask(5), glued);
    REQUIRE(is_d_cycle(bipyramid));
    CycleDecomposition dec = decompose_into_face_minimal_cycles(bipyramid);
    REQUIRE(dec.outcome == Outcome::True);
    // parts are disjoint, cover everything, and each is a face-minimal d-cycle
    std::set<Mask> seen;
    std::size_t total = 0;
    for (auto& part : dec.parts) {
        total += part.size();
        for (Mask f : part) CHECK(seen.insert(f).second);
        CHECK(is_d_cycle(SimplicialComplex(full_mask(5), part)));
    }
    CHECK(total == glued.size());

    CHECK_THROWS_WITH(decompose_into_face_minimal_cycles(SimplicialComplex(full_mask(3), FS({{1, 2, 3}}))),
                      doctest::Contains("not a d-cycle"));
}

TEST_CASE("d-chordedness") {
    CHECK(is_d_chorded(fixtures::octahedron_plus()).holds());
    CHECK(is_d_chorded(fixtures::dunce_hat()).holds());
    CHECK(is_d_chorded(Clutter::empty(full_mask(3), 1)).holds());

    DChordedResult r = is_d_chorded(fixtures::hollow_octahedron());
    CHECK(r.outcome == Outcome::False);
    REQUIRE(r.witness.has_value());
    CHECK(sorted(*r.witness) == fixtures::hollow_octahedron().circuits());

    // removing a dark triangle breaks 2-chordedness of the octahedron fixture
    CHECK(is_d_chorded(delete_circuit(fixtures::octahedron_plus(), F({1, 3, 5}))).outcome == Outcome::False);
}

TEST_CASE("the symmetric-difference family satisfies (a)-(d)") {
    Clutter octa = fixtures::octahedron_plus();
    // the hollow-octahedron cycle sits inside the fixture and is not complete
    std::vector<Mask> cycle = fixtures::hollow_octahedron().circuits();
    REQUIRE(is_d_cycle(SimplicialComplex(octa.verts(), cycle)));
    auto family = clique_decomposition(octa, cycle);
    REQUIRE(family.has_value());
    CHECK(family->size() >= 2);
    std::map<Mask, int> counts;
    Mask cycle_support = 0;
    for (Mask f : cycle) cycle_support |= f;
    for (Mask a : *family) {
        CHECK(card(a) == octa.dim() + 2);
        CHECK(contains(cycle_support, a));
        CHECK(a != cycle_support);  // (d): strictly fewer vertices
        for_each_subset_of_size(a, octa.dim() + 1, [&](Mask f) { ++counts[f]; });
    }
    std::set<Mask> in_cycle(cycle.begin(), cycle.end());
    for (Mask f : cycle) CHECK(counts[f] % 2 == 1);  // (a) + (b)
    for (auto& [f, k] : counts)
        if (!in_cycle.count(f)) CHECK(k % 2 == 0);  // (c)
}

TEST_CASE("CF-chordality and CF-trees") {
    CHECK(is_cf_chordal(fixtures::dunce_hat()) == Outcome::True);
    CHECK(is_cf_chordal(fixtures::octahedron_plus()) == Outcome::True);
    CHECK(is_cf_chordal(fixtures::hollow_octahedron()) == Outcome::False);
    CHECK(is_cf_chordal(Clutter::empty(full_mask(4), 2)) == Outcome::True);

    Clutter forest(full_mask(5), 1, FS({{1, 2}, {2, 3}, {4, 5}}));
    CHECK(is_cf_tree(forest));
    Clutter tetra(full_mask(4), 2, tetra_boundary().facets());
    CHECK(!is_cf_tree(tetra));
    CHECK(is_cf_tree(Clutter(full_mask(4), 2, FS({{1, 2, 3}, {2, 3, 4}}))));
}

TEST_CASE("chordality ascends") {
    AscentChordalReport rep = chordal_implies_ascent_chordal_check(fixtures::octahedron_plus());
    CHECK(rep.holds);
    CHECK(replay_elimination(fixtures::octahedron_plus(), rep.base));
    CHECK(replay_elimination(ascent(fixtures::octahedron_plus()), rep.ascended));

    Clutter path(full_mask(4), 1, FS({{1, 2}, {2, 3}, {3, 4}}));
    CHECK(chordal_implies_ascent_chordal_check(path).holds);  // empty ascent, vacuous
    CHECK_THROWS(chordal_implies_ascent_chordal_check(fixtures::dunce_hat()));
}

TEST_CASE("deleting a simplicial ascent subcircuit keeps d-chordedness") {
    Clutter octa = fixtures::octahedron_plus();
    for (Mask f : simplicial_maximal_subcircuits(ascent(octa)))
        CHECK(sms_deletion_chorded_check(octa, f).holds);
    CHECK_THROWS(sms_deletion_chorded_check(octa, F({1, 3, 5})));  // dark triangle, not simplicial
    CHECK_THROWS(sms_deletion_chorded_check(fixtures::hollow_octahedron(), F({1, 2, 3})));
}

TEST_CASE("chordal edge orders") {
    Clutter triangle(full_mask(3), 1, FS({{1, 2}, {1, 3}, {2, 3}}));
    EdgeOrder t = chordal_edge_order(triangle);
    CHECK(t.edges.size() == 3);
    CHECK(replay_edge_order(triangle, t.edges));

    Clutter tree(full_mask(5), 1, FS({{1, 2}, {2, 3}, {2, 4}, {4, 5}}));
    EdgeOrder to = chordal_edge_order(tree);
    CHECK(replay_edge_order(tree, to.edges));

    Clutter square(full_mask(4), 1, FS({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK_THROWS(chordal_edge_order(square));
    CHECK(!replay_edge_order(square, square.circuits()));

    harness::GenSpec spec{6, 1, 0.5, 41, 60, harness::GenSpec::Family::NearChordal};
    for (const Clutter& g : harness::generate(spec)) {
        if (!is_chordal(g).is_chordal()) continue;
        EdgeOrder order = chordal_edge_order(g);
        CHECK(replay_edge_order(g, order.edges));
    }
}

TEST_CASE("linear resolution statements around the ascent") {
    Clutter d = fixtures::dunce_hat();
    std::vector<Mask> cs = d.circuits();
    cs.push_back(F({2, 7, 8}));
    Clutter dplus(d.verts(), 2, cs);
    Clutter up = ascent(dplus);
    CHECK(up.circuits() == FS({{1, 2, 7, 8}}));
    std::vector<Mask> sms = simplicial_maximal_subcircuits(up);
    CHECK(std::find(sms.begin(), sms.end(), F({2, 7, 8})) != sms.end());
    for (FieldTag field : {FieldTag::GF2, FieldTag::Rational}) {
        LinResSmsReport rep = lin_res_sms_check(dplus, field);
        CHECK(rep.implications_hold);
        CHECK(rep.equivalence_holds);
        CHECK(rep.s2);  // I(complement(D)) has a linear resolution
    }
    CHECK_THROWS(lin_res_sms_check(fixtures::dunce_hat(), FieldTag::GF2));
}

TEST_CASE("small vertex count forces chordality") {
    // complete minus one circuit at n = d + 2
    Clutter almost = delete_circuit(Clutter::complete(full_mask(4), 2), F({1, 2, 3}));
    SmallVertexReport rep = n_le_d_plus_3_check(almost);
    CHECK(rep.holds);
    CHECK_THROWS(n_le_d_plus_3_check(fixtures::octahedron_plus()));  // n = 6 > d + 3
}
