#include "chordal/complex.hpp"

#include <set>
#include <stdexcept>

namespace chordal {

SimplicialComplex::SimplicialComplex(Mask verts, std::vector<Mask> facets)
    : verts_(verts), facets_(std::move(facets)) {
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    for (Mask f : facets_)
        if (!contains(verts_, f)) throw std::invalid_argument("facet " + face_to_string(f) + " leaves the vertex set");
    // keep only maximal faces
    std::vector<Mask> maximal;
    for (Mask f : facets_) {
        bool dominated = false;
        for (Mask g : facets_)
            if (g != f && contains(g, f)) { dominated = true; break; }
        if (!dominated) maximal.push_back(f);
    }
    facets_ = std::move(maximal);
}

int SimplicialComplex::dim() const {
    if (facets_.empty()) return -2;
    int d = -1;
    for (Mask f : facets_) d = std::max(d, face_dim(f));
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    int d = face_dim(facets_.front());
    for (Mask f : facets_)
        if (face_dim(f) != d) return false;
    return true;
}

bool SimplicialComplex::is_face(Mask f) const {
    for (Mask g : facets_)
        if (contains(g, f)) return true;
    return false;
}

std::vector<Mask> SimplicialComplex::faces_of_dim(int i) const {
    std::set<Mask> out;
    for (Mask f : facets_)
        if (face_dim(f) >= i)
            for_each_subset_of_size(f, i + 1, [&](Mask s) { out.insert(s); });
    return {out.begin(), out.end()};
}

std::size_t SimplicialComplex::count_faces_of_dim(int i) const {
    return faces_of_dim(i).size();
}

Mask SimplicialComplex::support() const {
    Mask s = 0;
    for (Mask f : facets_) s |= f;
    return s;
}

SimplicialComplex span_complex(const Clutter& c) {
    if (c.is_empty()) return SimplicialComplex::void_complex(c.verts());
    return SimplicialComplex(c.verts(), c.circuits());
}

SimplicialComplex span_complex(const GeneralClutter& c) {
    if (c.is_empty()) return SimplicialComplex::void_complex(c.verts());
    return SimplicialComplex(c.verts(), c.edges());
}

SimplicialComplex clique_complex(const Clutter& c) {
    // Enumerate all cliques by extension along ascending vertices: every
    // prefix of a clique is a clique, so each is reached exactly once.
    std::vector<Mask> all;
    std::vector<int> vs = vertices_of(c.verts());
    auto extends = [&](Mask a, int v) {
        // a is a clique and v > max(a); is a|v still one?
        int k = card(a);
        if (k + 1 <= c.dim() + 1) return k + 1 < c.dim() + 1 || c.has_circuit(a | bit(v));
        bool ok = true;
        for_each_subset_of_size(a, c.dim(), [&](Mask s) {
            if (ok && !c.has_circuit(s | bit(v))) ok = false;
        });
        return ok;
    };
    std::vector<Mask> frontier = {Mask{0}};
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask a : frontier) {
            all.push_back(a);
            int lo = a ? 63 - std::countl_zero(a) : -1;
            for (int v : vs)
                if (v > lo && extends(a, v)) next.push_back(a | bit(v));
        }
        frontier = std::move(next);
    }
    return SimplicialComplex(c.verts(), std::move(all));  // ctor keeps maximal ones
}

std::vector<Mask> stanley_reisner_generators(const SimplicialComplex& d) {
    // A minimal non-face has all its codim-1 subsets in Δ, hence size at most
    // dim Δ + 2.
    std::vector<Mask> out;
    if (d.is_void()) return {Mask{0}};  // ∅ itself is the minimal non-face
    int top = d.dim() + 2;
    for (int s = 1; s <= top; ++s) {
        for_each_subset_of_size(d.verts(), s, [&](Mask f) {
            if (d.is_face(f)) return;
            bool minimal = true;
            for_each_subset_of_size(f, s - 1, [&](Mask g) {
                if (minimal && !d.is_face(g)) minimal = false;
            });
            if (minimal) out.push_back(f);
        });
    }
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& d) {
    // Facets of Δ∨ are the complements of minimal non-faces of Δ.
    std::vector<Mask> out;
    for (Mask f : stanley_reisner_generators(d)) out.push_back(d.verts() & ~f);
    return SimplicialComplex(d.verts(), std::move(out));
}

SimplicialComplex link(const SimplicialComplex& d, Mask f) {
    if (!d.is_face(f)) throw std::invalid_argument("not a face: " + face_to_string(f));
    std::vector<Mask> out;
    for (Mask g : d.facets())
        if (contains(g, f)) out.push_back(g & ~f);
    return SimplicialComplex(d.verts() & ~f, std::move(out));
}

SimplicialComplex delete_vertex(const SimplicialComplex& d, int v) {
    Mask b = bit(v);
    if (!(d.verts() & b)) throw std::invalid_argument("unknown vertex " + std::to_string(v + 1));
    std::vector<Mask> out;
    for (Mask g : d.facets()) out.push_back(g & ~b);
    return SimplicialComplex(d.verts() & ~b, std::move(out));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& d, int i) {
    if (d.is_void() || i < -1 || i > d.dim())
        throw std::invalid_argument("skeleton index out of range");
    return SimplicialComplex(d.verts(), d.faces_of_dim(i));
}

SimplicialComplex restrict_complex(const SimplicialComplex& d, Mask w) {
    if (d.is_void()) return SimplicialComplex::void_complex(d.verts() & w);
    std::vector<Mask> out;
    for (Mask f : d.facets()) out.push_back(f & w);
    return SimplicialComplex(d.verts() & w, std::move(out));
}

Clutter link_facets(const Clutter& c, int v) {
    Mask b = bit(v);
    if (!(c.verts() & b)) throw std::invalid_argument("unknown vertex " + std::to_string(v + 1));
    if (c.dim() == 0) throw std::invalid_argument("link facets need dimension >= 1");
    std::vector<Mask> out;
    for (Mask f : c.circuits())
        if (f & b) out.push_back(f & ~b);
    return Clutter(c.verts() & ~b, c.dim() - 1, std::move(out));
}

}  // namespace chordal
