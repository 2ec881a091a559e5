#include "chordal/clutter.hpp"

#include <stdexcept>

namespace chordal {

Clutter::Clutter(Mask verts, int d, std::vector<Mask> circuits)
    : verts_(verts), d_(d), circuits_(std::move(circuits)) {
    if (d_ < 0) throw std::invalid_argument("clutter dimension must be >= 0");
    std::sort(circuits_.begin(), circuits_.end());
    circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
    for (Mask f : circuits_) {
        if (face_dim(f) != d_) throw std::invalid_argument("circuit " + face_to_string(f) + " is not " + std::to_string(d_) + "-dimensional");
        if (!contains(verts_, f)) throw std::invalid_argument("circuit " + face_to_string(f) + " leaves the vertex set");
    }
}

Clutter Clutter::complete(Mask verts, int d) {
    std::vector<Mask> cs;
    for_each_subset_of_size(verts, d + 1, [&](Mask f) { cs.push_back(f); });
    return Clutter(verts, d, std::move(cs));
}

bool Clutter::is_complete() const {
    return circuits_.size() == binomial(n(), d_ + 1);
}

Mask Clutter::support() const {
    Mask s = 0;
    for (Mask f : circuits_) s |= f;
    return s;
}

GeneralClutter::GeneralClutter(Mask verts, std::vector<Mask> edges)
    : verts_(verts), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (Mask e : edges_) {
        if (!contains(verts_, e)) throw std::invalid_argument("edge " + face_to_string(e) + " leaves the vertex set");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = 0; j < edges_.size(); ++j)
            if (i != j && contains(edges_[j], edges_[i]))
                throw std::invalid_argument("edges are not an antichain: " + face_to_string(edges_[i]) + " subset of " + face_to_string(edges_[j]));
}

Mask GeneralClutter::support() const {
    Mask s = 0;
    for (Mask e : edges_) s |= e;
    return s;
}

std::vector<Mask> minimal_sets(std::vector<Mask> family) {
    std::sort(family.begin(), family.end(), [](Mask a, Mask b) {
        return card(a) != card(b) ? card(a) < card(b) : a < b;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<Mask> out;
    for (Mask f : family) {
        bool dominated = false;
        for (Mask g : out)
            if (contains(f, g)) { dominated = true; break; }
        if (!dominated) out.push_back(f);
    }
    return out;
}

Clutter complement(const Clutter& c) {
    std::vector<Mask> out;
    for_each_subset_of_size(c.verts(), c.dim() + 1, [&](Mask f) {
        if (!c.has_circuit(f)) out.push_back(f);
    });
    return Clutter(c.verts(), c.dim(), std::move(out));
}

bool is_clique(const Clutter& c, Mask a) {
    if (!contains(c.verts(), a)) throw std::invalid_argument("clique candidate leaves the vertex set");
    if (card(a) <= c.dim()) return true;
    bool ok = true;
    for_each_subset_of_size(a, c.dim() + 1, [&](Mask f) {
        if (ok && !c.has_circuit(f)) ok = false;
    });
    return ok;
}

Clutter induced(const Clutter& c, Mask a) {
    if (!contains(c.verts(), a)) throw std::invalid_argument("induced vertex set is not a subset");
    std::vector<Mask> out;
    for (Mask f : c.circuits())
        if (contains(a, f)) out.push_back(f);
    return Clutter(a, c.dim(), std::move(out));
}

Clutter delete_vertex(const Clutter& c, int v) {
    Mask b = bit(v);
    if (!(c.verts() & b)) throw std::invalid_argument("unknown vertex " + std::to_string(v + 1));
    std::vector<Mask> out;
    for (Mask f : c.circuits())
        if (!(f & b)) out.push_back(f);
    return Clutter(c.verts() & ~b, c.dim(), std::move(out));
}

Clutter normalize_support(const Clutter& c) {
    return Clutter(c.support(), c.dim(), c.circuits());
}

GeneralClutter dual_clutter(const Clutter& c) {
    std::vector<Mask> out;
    Clutter cbar = complement(c);
    for (Mask f : cbar.circuits()) out.push_back(c.verts() & ~f);
    return GeneralClutter(c.verts(), std::move(out));
}

Clutter delete_circuit(const Clutter& c, Mask f) {
    std::vector<Mask> out;
    for (Mask g : c.circuits())
        if (g != f) out.push_back(g);
    return Clutter(c.verts(), c.dim(), std::move(out));
}

GeneralClutter delete_vertex(const GeneralClutter& c, int v) {
    Mask b = bit(v);
    if (!(c.verts() & b)) throw std::invalid_argument("unknown vertex " + std::to_string(v + 1));
    std::vector<Mask> out;
    for (Mask e : c.edges())
        if (!(e & b)) out.push_back(e);
    return GeneralClutter(c.verts() & ~b, std::move(out));
}

GeneralClutter contraction(const GeneralClutter& c, int v) {
    Mask b = bit(v);
    if (!(c.verts() & b)) throw std::invalid_argument("unknown vertex " + std::to_string(v + 1));
    std::vector<Mask> stripped;
    for (Mask e : c.edges()) stripped.push_back(e & ~b);
    return GeneralClutter(c.verts() & ~b, minimal_sets(std::move(stripped)));
}

GeneralClutter as_general(const Clutter& c) {
    return GeneralClutter(c.verts(), c.circuits());
}

}  // namespace chordal
