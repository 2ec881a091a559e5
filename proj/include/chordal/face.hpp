#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chordal {

/// A face is a set of vertices packed into a 64-bit mask, so at most 64
/// vertices are supported.  Vertices are 0-based internally; all external
/// text and JSON formats use 1-based labels, converted at the I/O boundary.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int card(Mask m) { return std::popcount(m); }

/// dim F = |F| - 1, so the empty face has dimension -1.
inline int face_dim(Mask m) { return card(m) - 1; }

inline Mask full_mask(int n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    return n == kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline bool contains(Mask big, Mask small) { return (small & ~big) == 0; }

inline Mask bit(int v) { return Mask{1} << v; }

/// Ascending 0-based vertex indices of a mask.
std::vector<int> vertices_of(Mask m);

/// Faces from/to 1-based labels (ascending on output).
Mask face_from_labels(const std::vector<int>& labels);
std::vector<int> labels_of(Mask m);

/// Compact display form, e.g. "125" for {1,2,5} when all labels are single
/// digits, otherwise "1.2.12".
std::string face_to_string(Mask m);

/// Calls f(subset) for every k-subset of `ground`, in ascending mask order.
template <typename F>
void for_each_subset_of_size(Mask ground, int k, F&& f) {
    std::vector<int> verts = vertices_of(ground);
    const int n = static_cast<int>(verts.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= bit(verts[static_cast<std::size_t>(i)]);
        f(m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Calls f(W) for every subset W of `ground`, in ascending mask order
/// (the canonical subset order used for deterministic witness selection).
template <typename F>
void for_each_submask(Mask ground, F&& f) {
    Mask s = 0;
    while (true) {
        f(s);
        if (s == ground) break;
        s = (s - ground) & ground;
    }
}

unsigned long long binomial(int n, int k);

struct MaskVectorHash {
    std::size_t operator()(const std::vector<Mask>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Mask m : v) {
            h ^= std::hash<Mask>{}(m);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace chordal
