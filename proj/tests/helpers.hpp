#pragma once

#include <initializer_list>
#include <vector>

#include "chordal/clutter.hpp"

namespace test_helpers {

inline chordal::Mask F(std::initializer_list<int> labels) {
    return chordal::face_from_labels(std::vector<int>(labels));
}

inline std::vector<chordal::Mask> FS(std::initializer_list<std::initializer_list<int>> faces) {
    std::vector<chordal::Mask> out;
    for (auto& f : faces) out.push_back(F(f));
    return out;
}

inline std::vector<chordal::Mask> sorted(std::vector<chordal::Mask> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace test_helpers
