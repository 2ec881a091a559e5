#include <doctest.h>

#include "chordal/complex.hpp"
#include "chordal/fixtures.hpp"
#include "chordal/harness.hpp"
#include "helpers.hpp"

using namespace chordal;
using namespace test_helpers;

TEST_CASE("face basics") {
    CHECK(face_dim(0) == -1);
    CHECK(face_from_labels({1, 2, 5}) == (bit(0) | bit(1) | bit(4)));
    CHECK(labels_of(F({3, 1, 2})) == std::vector<int>{1, 2, 3});
    CHECK(face_to_string(F({1, 2, 5})) == "125");
    CHECK_THROWS(face_from_labels({0}));
    CHECK_THROWS(face_from_labels({2, 2}));
    CHECK(binomial(6, 3) == 20);
}

TEST_CASE("complement of the three-triangle clutter") {
    Clutter c = fixtures::three_triangles();
    Clutter cbar = complement(c);
    CHECK(cbar.size() == 7);
    CHECK(cbar.has_circuit(F({2, 4, 5})));
    CHECK(!cbar.has_circuit(F({1, 2, 5})));
    CHECK(complement(cbar) == c);
    CHECK(complement(Clutter::complete(full_mask(5), 2)).is_empty());
}

TEST_CASE("complement of the octahedron fixture") {
    Clutter c = fixtures::octahedron_plus();
    CHECK(c.size() == 12);
    CHECK(sorted(complement(c).circuits()) ==
          sorted(FS({{1, 2, 6}, {1, 3, 6}, {1, 4, 6}, {1, 5, 6}, {1, 2, 4}, {2, 4, 6}, {2, 4, 5}, {2, 3, 4}})));
}

TEST_CASE("cliques") {
    Clutter c = fixtures::three_triangles();
    CHECK(is_clique(c, F({1, 4})));
    CHECK(is_clique(c, F({2})));
    CHECK(!is_clique(c, F({1, 2, 3})));
    CHECK(is_clique(fixtures::octahedron_plus(), F({1, 2, 3, 5})));
}

TEST_CASE("induced clutters") {
    Clutter c = fixtures::three_triangles();
    CHECK(induced(c, c.verts()) == c);
    CHECK(induced(c, F({1, 2, 5})).circuits() == FS({{1, 2, 5}}));
    // any proper induced subclutter of the dunce hat is empty or has a free subcircuit
    Clutter dunce = fixtures::dunce_hat();
    int checked = 0;
    for_each_submask(dunce.verts(), [&](Mask w) {
        if (w == dunce.verts()) return;
        Clutter cw = induced(dunce, w);
        if (cw.is_empty()) return;
        ++checked;
        CHECK(!free_maximal_subcircuits(cw).empty());
    });
    CHECK(checked > 0);
}

TEST_CASE("clique complex of the dual example") {
    Clutter c = fixtures::three_triangles();
    SimplicialComplex delta = clique_complex(c);
    CHECK(sorted(delta.facets()) == sorted(FS({{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 3}, {1, 4}, {2, 4}})));
    CHECK(delta.is_face(F({1, 4})));
    CHECK(!span_complex(c).is_face(F({1, 4})));
    CHECK(clique_complex(Clutter::complete(full_mask(4), 2)) == SimplicialComplex::simplex(full_mask(4)));
}

TEST_CASE("octahedron clique complex facets") {
    Clutter c = fixtures::octahedron_plus();
    SimplicialComplex delta = clique_complex(c);
    // facets are the ascent plus circuits in no larger clique
    for (Mask f : FS({{1, 2, 3, 5}, {1, 3, 4, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}}))
        CHECK(std::find(delta.facets().begin(), delta.facets().end(), f) != delta.facets().end());
    CHECK(pure_skeleton(delta, 3).facets() == ascent(c).circuits());
}

TEST_CASE("alexander duality on the dual example") {
    Clutter c = fixtures::three_triangles();
    SimplicialComplex gamma = span_complex(c);
    CHECK(sorted(alexander_dual(gamma).facets()) == sorted(FS({{2, 3, 5}, {2, 4, 5}, {1, 3, 5}})));
    GeneralClutter dual = dual_clutter(c);
    CHECK(sorted(dual.edges()) ==
          sorted(FS({{1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}})));
    CHECK(span_complex(dual) == alexander_dual(clique_complex(c)));
}

TEST_CASE("void and irrelevant complexes under duality") {
    SimplicialComplex simplex = SimplicialComplex::simplex(full_mask(4));
    SimplicialComplex v = alexander_dual(simplex);
    CHECK(v.is_void());
    CHECK(alexander_dual(v) == simplex);
    CHECK(SimplicialComplex::irrelevant(full_mask(3)).dim() == -1);
    CHECK(v.dim() == -2);
    CHECK(v != SimplicialComplex::irrelevant(full_mask(4)));
}

TEST_CASE("dual clutter of the vdec example") {
    Clutter c = fixtures::six_vertex_vdec();
    CHECK(sorted(dual_clutter(c).edges()) ==
          sorted(FS({{1, 3, 6}, {1, 4, 6}, {2, 3, 6}, {2, 4, 6}, {3, 4, 6}, {1, 3, 5}, {2, 3, 5},
                     {1, 4, 5}, {2, 4, 5}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})));
    CHECK(dual_clutter(Clutter::complete(full_mask(5), 2)).is_empty());
}

TEST_CASE("links") {
    Clutter c = fixtures::six_vertex_vdec();
    SimplicialComplex delta = span_complex(c);
    CHECK(link(delta, F({6})) == SimplicialComplex(full_mask(5), FS({{1, 2}, {3, 4}})));
    CHECK(link(delta, 0) == delta);
    CHECK_THROWS_WITH(link(delta, F({1, 5})), doctest::Contains("not a face"));
    Clutter after = delete_subcircuit(c, F({2, 6}));
    CHECK(link(span_complex(after), F({6})) == SimplicialComplex(full_mask(5), FS({{3, 4}})));
}

TEST_CASE("vertex deletion on complexes") {
    SimplicialComplex gamma = span_complex(fixtures::three_triangles());
    SimplicialComplex del = delete_vertex(gamma, 1);  // vertex labeled 2
    CHECK(sorted(del.facets()) == sorted(FS({{1, 5}, {3, 4, 5}})));
    CHECK(!del.is_pure());
    Clutter c = fixtures::six_vertex_vdec();
    CHECK(delete_vertex(delete_vertex(c, 5), 0).circuits() == sorted(FS({{2, 3, 4}, {3, 4, 5}})));
}

TEST_CASE("pure skeletons") {
    SimplicialComplex simplex = SimplicialComplex::simplex(full_mask(4));
    CHECK(pure_skeleton(simplex, 1).facets().size() == 6);
    CHECK(pure_skeleton(simplex, -1) == SimplicialComplex::irrelevant(full_mask(4)));
    CHECK_THROWS(pure_skeleton(simplex, 4));
    Clutter c = fixtures::octahedron_plus();
    CHECK(pure_skeleton(clique_complex(c), 2) == span_complex(c));
}

TEST_CASE("stanley-reisner generators") {
    Clutter c = fixtures::three_triangles();
    std::vector<Mask> gens = stanley_reisner_generators(clique_complex(c));
    CHECK(sorted(gens) == complement(c).circuits());
    CHECK(stanley_reisner_generators(SimplicialComplex::simplex(full_mask(3))).empty());
    CHECK(sorted(stanley_reisner_generators(SimplicialComplex(full_mask(4), FS({{1, 2}, {3, 4}})))) ==
          sorted(FS({{1, 3}, {1, 4}, {2, 3}, {2, 4}})));
}

TEST_CASE("normalize support") {
    Clutter c = fixtures::six_vertex_vdec();
    Clutter reduced = delete_subcircuit(delete_subcircuit(c, F({2, 6})), F({4, 6}));
    CHECK(normalize_support(reduced) == delete_vertex(c, 5));
    CHECK(normalize_support(normalize_support(reduced)) == normalize_support(reduced));
}

TEST_CASE("general clutter contraction and antichains") {
    GeneralClutter d(full_mask(4), FS({{1, 2}, {1, 3}, {2, 3, 4}}));
    CHECK(sorted(contraction(d, 1).edges()) == sorted(FS({{1}, {3, 4}})));
    CHECK(contraction(GeneralClutter(full_mask(3), FS({{1, 2, 3}})), 0).edges() == FS({{2, 3}}));
    CHECK_THROWS(GeneralClutter(full_mask(3), FS({{1}, {1, 2}})));
    GeneralClutter iso(full_mask(3), FS({{1, 2}}));
    CHECK(contraction(iso, 2).edges() == FS({{1, 2}}));
}

TEST_CASE("core invariants on random instances") {
    harness::GenSpec spec;
    spec.n = 6;
    spec.d = 2;
    spec.count = 60;
    spec.seed = 7;
    for (const Clutter& c : harness::generate(spec)) {
        CHECK(complement(complement(c)) == c);
        SimplicialComplex delta = clique_complex(c);
        CHECK(alexander_dual(alexander_dual(delta)) == delta);
        CHECK(sorted(stanley_reisner_generators(delta)) == complement(c).circuits());
        CHECK(span_complex(dual_clutter(c)) == alexander_dual(delta));
        if (!complement(c).is_empty()) {
            GeneralClutter dual = dual_clutter(c);
            for (Mask e : dual.edges()) CHECK(face_dim(e) == c.n() - c.dim() - 2);
        }
        // restriction commutes with the clique complex
        Mask w = c.verts() & 0b101011;
        CHECK(restrict_complex(delta, w) == clique_complex(induced(c, w)));
        // completeness below degree d
        for (int i = 0; i < c.dim(); ++i)
            CHECK(delta.count_faces_of_dim(i) == binomial(c.n(), i + 1));
    }
}
