#pragma once

#include "chordal/clutter.hpp"

namespace chordal::fixtures {

/// The three-triangle 2-clutter {125, 235, 345} on [5] from the dual example.
Clutter three_triangles();

/// 2-clutter on [6] with circuits 123, 124, 134, 234, 345, 346, 126 — the
/// running vertex-decomposability example.
Clutter six_vertex_vdec();

/// The hollow octahedron (antipodal pairs 16, 24, 35) plus the four triangles
/// through the diagonal 35: twelve circuits on [6].  A chordal 2-clutter.
Clutter octahedron_plus();

/// The hollow octahedron alone: eight faces, a 2-sphere, not 2-chorded.
Clutter hollow_octahedron();

/// An 8-vertex 17-triangle triangulation of the dunce hat.  Its circuit set
/// is pinned by the structure of its edge graph (all pairs on [8] except
/// 26, 47, 57, 58), the multiplicity of the identified boundary loop 1-2-3,
/// and the triangles on {1,2,7,8}; the validation tests check contractibility
/// and the no-simplicial-subcircuit property.
Clutter dunce_hat();

/// Paper elimination sequence for octahedron_plus: 12, 14, 46, 26, 13, 23, 36, 34.
std::vector<Mask> octahedron_elimination();

/// Paper elimination for six_vertex_vdec: 26, 46, 12, 13, 23, 35.
std::vector<Mask> six_vertex_elimination();

/// Admissible order for the complement of octahedron_plus (8 generators).
std::vector<Mask> octahedron_admissible_order();

/// The induced 11-generator order for the complement of the ascent.
std::vector<Mask> octahedron_ascended_order();

}  // namespace chordal::fixtures
