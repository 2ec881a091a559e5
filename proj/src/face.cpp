#include "chordal/face.hpp"

#include <bit>

namespace chordal {

std::vector<int> vertices_of(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(card(m)));
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

Mask face_from_labels(const std::vector<int>& labels) {
    Mask m = 0;
    for (int l : labels) {
        if (l < 1 || l > kMaxVertices) throw std::invalid_argument("vertex label out of range: " + std::to_string(l));
        Mask b = bit(l - 1);
        if (m & b) throw std::invalid_argument("duplicate vertex label: " + std::to_string(l));
        m |= b;
    }
    return m;
}

std::vector<int> labels_of(Mask m) {
    std::vector<int> out = vertices_of(m);
    for (int& v : out) ++v;
    return out;
}

std::string face_to_string(Mask m) {
    if (m == 0) return "{}";
    std::vector<int> ls = labels_of(m);
    bool compact = ls.back() <= 9;
    std::string s;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i && !compact) s += '.';
        s += std::to_string(ls[i]);
    }
    return s;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return r;
}

}  // namespace chordal
