#include "chordal/fixtures.hpp"

namespace chordal::fixtures {

namespace {

Mask f(std::initializer_list<int> labels) { return face_from_labels(std::vector<int>(labels)); }

std::vector<Mask> faces(std::initializer_list<std::initializer_list<int>> list) {
    std::vector<Mask> out;
    for (auto& l : list) out.push_back(f(l));
    return out;
}

}  // namespace

Clutter three_triangles() {
    return Clutter(full_mask(5), 2, faces({{1, 2, 5}, {2, 3, 5}, {3, 4, 5}}));
}

Clutter six_vertex_vdec() {
    return Clutter(full_mask(6), 2,
                   faces({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}, {3, 4, 6}, {1, 2, 6}}));
}

Clutter octahedron_plus() {
    return Clutter(full_mask(6), 2,
                   faces({{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 5},
                          {2, 3, 6}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}}));
}

Clutter hollow_octahedron() {
    return Clutter(full_mask(6), 2,
                   faces({{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 6}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}}));
}

Clutter dunce_hat() {
    return Clutter(full_mask(8), 2,
                   faces({{1, 2, 4}, {1, 2, 7}, {1, 2, 8}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6},
                          {1, 5, 6}, {1, 7, 8}, {2, 3, 5}, {2, 3, 7}, {2, 3, 8}, {2, 4, 5},
                          {3, 4, 8}, {3, 6, 7}, {4, 5, 6}, {4, 6, 8}, {6, 7, 8}}));
}

std::vector<Mask> octahedron_elimination() {
    return faces({{1, 2}, {1, 4}, {4, 6}, {2, 6}, {1, 3}, {2, 3}, {3, 6}, {3, 4}});
}

std::vector<Mask> six_vertex_elimination() {
    return faces({{2, 6}, {4, 6}, {1, 2}, {1, 3}, {2, 3}, {3, 5}});
}

std::vector<Mask> octahedron_admissible_order() {
    return faces({{1, 2, 6}, {1, 3, 6}, {1, 4, 6}, {1, 5, 6}, {1, 2, 4}, {2, 4, 6}, {2, 4, 5}, {2, 3, 4}});
}

std::vector<Mask> octahedron_ascended_order() {
    return faces({{1, 2, 3, 6}, {1, 2, 4, 6}, {1, 2, 5, 6}, {1, 3, 4, 6}, {1, 3, 5, 6}, {1, 4, 5, 6},
                  {1, 2, 3, 4}, {1, 2, 4, 5}, {2, 3, 4, 6}, {2, 4, 5, 6}, {2, 3, 4, 5}});
}

}  // namespace chordal::fixtures
