#include "chordal/ascent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "chordal/quotients.hpp"

namespace chordal {

Clutter ascent(const Clutter& c) {
    std::set<Mask> out;
    for (Mask f : c.circuits()) {
        for (int v : vertices_of(c.verts() & ~f)) {
            Mask a = f | bit(v);
            if (out.count(a)) continue;
            bool clique = true;
            for_each_subset_of_size(a, c.dim() + 1, [&](Mask s) {
                if (clique && !c.has_circuit(s)) clique = false;
            });
            if (clique) out.insert(a);
        }
    }
    return Clutter(c.verts(), c.dim() + 1, {out.begin(), out.end()});
}

bool is_d_path_connected(const SimplicialComplex& d) {
    if (!d.is_pure() || d.is_void() || d.dim() < 0)
        throw std::invalid_argument("d-path connectivity needs a pure complex with facets");
    const auto& fs = d.facets();
    const int dd = d.dim();
    std::vector<std::size_t> comp(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (card(fs[i] & fs[j]) == dd) comp[find(i)] = find(j);
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (find(i) != find(0)) return false;
    return true;
}

bool is_d_cycle(const SimplicialComplex& d) {
    if (d.is_void() || d.dim() < 0) return false;
    if (!d.is_pure()) throw std::invalid_argument("d-cycle test needs a pure complex");
    for (Mask e : d.faces_of_dim(d.dim() - 1)) {
        int count = 0;
        for (Mask f : d.facets())
            if (contains(f, e)) ++count;
        if (count % 2) return false;
    }
    return is_d_path_connected(d);
}

namespace {

// GF(2) kernel of ∂_d on ⟨C⟩, with the d-faces (= circuits) as coordinates.
// Only usable while |C| <= 64.
std::vector<std::uint64_t> cycle_space_basis(const Clutter& c) {
    std::vector<Mask> subs = maximal_subcircuits(c);
    std::map<Mask, int> row;
    for (std::size_t i = 0; i < subs.size(); ++i) row[subs[i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(subs.size()), static_cast<int>(c.size()));
    for (std::size_t j = 0; j < c.size(); ++j)
        for_each_subset_of_size(c.circuits()[j], c.dim(), [&](Mask e) {
            m.at(row.at(e), static_cast<int>(j)) = 1;
        });
    std::vector<std::uint64_t> basis;
    for (auto& v : nullspace_gf2(m)) basis.push_back(v.empty() ? 0 : v[0]);
    return basis;
}

struct Echelon {
    std::vector<std::pair<int, std::uint64_t>> rows;  // (pivot bit, vector)

    void insert(std::uint64_t v) {
        v = reduce(v);
        if (v) rows.emplace_back(std::countr_zero(v), v);
    }
    std::uint64_t reduce(std::uint64_t v) const {
        for (auto& [p, r] : rows)
            if (v >> p & 1) v ^= r;
        return v;
    }
    int rank() const { return static_cast<int>(rows.size()); }
};

}  // namespace

DChordedResult is_d_chorded(const Clutter& c, const SearchBudget& budget) {
    if (c.is_empty()) return {Outcome::True, std::nullopt};
    if (c.size() > 64) return {Outcome::Budget, std::nullopt};
    std::vector<std::uint64_t> basis = cycle_space_basis(c);
    const int k = static_cast<int>(basis.size());
    if (k == 0) return {Outcome::True, std::nullopt};
    if (k > budget.max_cycle_space_dim) return {Outcome::Budget, std::nullopt};

    // Boundary vectors of the (d+2)-cliques, as subsets of the circuit list.
    std::vector<std::pair<Mask, std::uint64_t>> cliques;  // (vertex set, face vector)
    Clutter plus = ascent(c);
    for (Mask a : plus.circuits()) {
        std::uint64_t vec = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (contains(a, c.circuits()[j])) vec |= std::uint64_t{1} << j;
        cliques.emplace_back(a, vec);
    }
    std::map<Mask, Echelon> span_within;  // memo per cycle support

    std::optional<std::uint64_t> worst;
    for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << k); ++sel) {
        std::uint64_t z = 0;
        for (int i = 0; i < k; ++i)
            if (sel >> i & 1) z ^= basis[static_cast<std::size_t>(i)];
        Mask w = 0;
        std::uint64_t rest = z;
        while (rest) {
            int j = std::countr_zero(rest);
            w |= c.circuits()[static_cast<std::size_t>(j)];
            rest &= rest - 1;
        }
        auto it = span_within.find(w);
        if (it == span_within.end()) {
            Echelon e;
            for (auto& [a, vec] : cliques)
                if (contains(w, a)) e.insert(vec);
            it = span_within.emplace(w, std::move(e)).first;
        }
        if (it->second.reduce(z) != 0) {
            // lexicographically least over coefficients in ascending face
            // order: prefer a 0 at the first differing face
            if (!worst || !((z ^ *worst) & -(z ^ *worst) & z)) worst = z;
        }
    }
    if (!worst) return {Outcome::True, std::nullopt};
    std::vector<Mask> witness;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (*worst >> j & 1) witness.push_back(c.circuits()[j]);
    return {Outcome::False, std::move(witness)};
}

CycleDecomposition decompose_into_face_minimal_cycles(const SimplicialComplex& d, const SearchBudget& budget) {
    // Accepts any pure complex with every (d-1)-face in an even number of
    // facets, i.e. a disjoint union of d-cycles; connectivity is not needed
    // for the peeling to work.
    bool even_union = !d.is_void() && d.dim() >= 0 && d.is_pure();
    if (even_union)
        for (Mask e : d.faces_of_dim(d.dim() - 1)) {
            int count = 0;
            for (Mask f : d.facets())
                if (contains(f, e)) ++count;
            if (count % 2) even_union = false;
        }
    if (!even_union) throw std::invalid_argument("not a d-cycle");
    Clutter facets(d.verts(), d.dim(), d.facets());
    if (facets.size() > 64) return {Outcome::Budget, {}};
    std::vector<std::uint64_t> basis = cycle_space_basis(facets);
    const int k = static_cast<int>(basis.size());
    if (k > budget.max_cycle_space_dim) return {Outcome::Budget, {}};

    std::vector<std::uint64_t> all;
    all.reserve((std::size_t{1} << k) - 1);
    for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << k); ++sel) {
        std::uint64_t z = 0;
        for (int i = 0; i < k; ++i)
            if (sel >> i & 1) z ^= basis[static_cast<std::size_t>(i)];
        all.push_back(z);
    }
    // Minimum support first: such a vector is a face-minimal cycle and its
    // support is automatically d-path connected.
    std::sort(all.begin(), all.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    CycleDecomposition out;
    out.outcome = Outcome::True;
    std::uint64_t remaining = facets.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << facets.size()) - 1;
    while (remaining) {
        bool found = false;
        for (std::uint64_t z : all) {
            if ((z & ~remaining) != 0) continue;
            std::vector<Mask> part;
            for (std::size_t j = 0; j < facets.size(); ++j)
                if (z >> j & 1) part.push_back(facets.circuits()[j]);
            out.parts.push_back(std::move(part));
            remaining &= ~z;
            found = true;
            break;
        }
        if (!found) throw std::logic_error("cycle peeling got stuck");
    }
    return out;
}

Outcome is_cf_chordal(const Clutter& c, const SearchBudget& budget) {
    if (c.is_empty()) return Outcome::True;
    DChordedResult chorded = is_d_chorded(c, budget);
    if (chorded.outcome != Outcome::True) return chorded.outcome;
    return is_cf_chordal(ascent(c), budget);
}

bool is_cf_tree(const Clutter& c) {
    if (c.is_empty()) return true;
    std::vector<Mask> subs = maximal_subcircuits(c);
    std::map<Mask, int> row;
    for (std::size_t i = 0; i < subs.size(); ++i) row[subs[i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(subs.size()), static_cast<int>(c.size()));
    for (std::size_t j = 0; j < c.size(); ++j)
        for_each_subset_of_size(c.circuits()[j], c.dim(), [&](Mask e) {
            m.at(row.at(e), static_cast<int>(j)) = 1;
        });
    return rank_gf2(m) == static_cast<int>(c.size());
}

AscentChordalReport chordal_implies_ascent_chordal_check(const Clutter& c, const SearchBudget& budget) {
    ChordalityResult base = is_chordal(c, budget);
    if (base.outcome == Outcome::Budget) throw BudgetError{};
    if (base.outcome == Outcome::False) throw std::invalid_argument("hypothesis failed: C is not chordal");
    ChordalityResult up = is_chordal(ascent(c), budget);
    if (up.outcome == Outcome::Budget) throw BudgetError{};
    AscentChordalReport rep;
    rep.base = *base.certificate;
    rep.holds = up.outcome == Outcome::True;
    if (up.certificate) rep.ascended = *up.certificate;
    return rep;
}

SmsDeletionChordedReport sms_deletion_chorded_check(const Clutter& c, Mask f, const SearchBudget& budget) {
    DChordedResult pre = is_d_chorded(c, budget);
    if (pre.outcome == Outcome::Budget) throw BudgetError{};
    if (pre.outcome == Outcome::False) throw std::invalid_argument("hypothesis failed: the span of C is not d-chorded");
    std::vector<Mask> sms = simplicial_maximal_subcircuits(ascent(c));
    if (std::find(sms.begin(), sms.end(), f) == sms.end())
        throw std::invalid_argument("hypothesis failed: " + face_to_string(f) +
                                    " is not a simplicial maximal subcircuit of the ascent");
    DChordedResult post = is_d_chorded(delete_circuit(c, f), budget);
    if (post.outcome == Outcome::Budget) throw BudgetError{};
    return {post.outcome == Outcome::True, post.witness};
}

namespace {

std::optional<Mask> leaf_edge(const Clutter& c) {
    std::vector<int> degree(kMaxVertices, 0);
    for (Mask f : c.circuits())
        for (int v : vertices_of(f)) ++degree[static_cast<std::size_t>(v)];
    for (Mask f : c.circuits())
        for (int v : vertices_of(f))
            if (degree[static_cast<std::size_t>(v)] == 1) return f;
    return std::nullopt;
}

}  // namespace

EdgeOrder chordal_edge_order(const Clutter& c, const SearchBudget& budget) {
    if (c.dim() != 1) throw std::invalid_argument("edge orders are for graphs");
    ChordalityResult chordal = is_chordal(c, budget);
    if (chordal.outcome == Outcome::Budget) throw BudgetError{};
    if (chordal.outcome == Outcome::False) throw std::invalid_argument("graph is not chordal");
    EdgeOrder out;
    Clutter cur = c;
    while (!cur.is_empty()) {
        Clutter plus = ascent(cur);
        if (!plus.is_empty()) {
            std::vector<Mask> sms = simplicial_maximal_subcircuits(plus);
            if (sms.empty()) throw std::logic_error("chordal graph with triangles but no simplicial edge");
            out.edges.push_back(sms.front());
            cur = delete_circuit(cur, sms.front());
        } else {
            std::optional<Mask> leaf = leaf_edge(cur);
            if (!leaf) throw std::logic_error("triangle-free remainder of a chordal graph is not a forest");
            out.edges.push_back(*leaf);
            cur = delete_circuit(cur, *leaf);
        }
    }
    return out;
}

bool replay_edge_order(const Clutter& c, const std::vector<Mask>& edges) {
    if (c.dim() != 1) return false;
    std::vector<Mask> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.circuits()) return false;
    Clutter cur = c;
    for (Mask f : edges) {
        if (is_cf_tree(cur)) {
            std::vector<int> degree(kMaxVertices, 0);
            for (Mask g : cur.circuits())
                for (int v : vertices_of(g)) ++degree[static_cast<std::size_t>(v)];
            bool leaf = false;
            for (int v : vertices_of(f))
                if (degree[static_cast<std::size_t>(v)] == 1) leaf = true;
            if (!leaf) return false;
        } else {
            std::vector<Mask> sms = simplicial_maximal_subcircuits(ascent(cur));
            if (std::find(sms.begin(), sms.end(), f) == sms.end()) return false;
        }
        cur = delete_circuit(cur, f);
    }
    return cur.is_empty();
}

LinResSmsReport lin_res_sms_check(const Clutter& c, FieldTag field) {
    Clutter plus = ascent(c);
    if (plus.is_empty()) throw std::invalid_argument("hypothesis failed: the ascent is empty");
    LinResSmsReport rep;
    bool linres_plus = has_linear_resolution(plus, field).holds();
    bool linres_del_v = true;
    for (int v : vertices_of(c.verts()))
        if (!has_linear_resolution(delete_vertex(c, v), field).holds()) { linres_del_v = false; break; }
    bool exists_ms = false;
    for (Mask f : maximal_subcircuits(plus))
        if (has_linear_resolution(delete_circuit(c, f), field).holds()) { exists_ms = true; break; }
    std::vector<Mask> sms = simplicial_maximal_subcircuits(plus);
    rep.sms_nonempty = !sms.empty();
    bool all_sms = true;
    for (Mask f : sms)
        if (!has_linear_resolution(delete_circuit(c, f), field).holds()) { all_sms = false; break; }

    rep.s1 = linres_plus && linres_del_v && exists_ms;
    rep.s2 = has_linear_resolution(c, field).holds();
    rep.s3 = linres_plus && linres_del_v && all_sms;
    rep.implications_hold = (!rep.s1 || rep.s2) && (!rep.s2 || rep.s3);
    rep.equivalence_holds = !rep.sms_nonempty || (rep.s1 == rep.s2 && rep.s2 == rep.s3);
    if (!rep.implications_hold) rep.detail = "implication chain violated";
    if (!rep.equivalence_holds) rep.detail += "equivalence violated with nonempty SMS(C+)";
    return rep;
}

SmallVertexReport n_le_d_plus_3_check(const Clutter& c, const SearchBudget& budget) {
    if (c.n() > c.dim() + 3) throw std::invalid_argument("check requires n <= d+3");
    SmallVertexReport rep;
    bool plus_empty = ascent(c).is_empty();
    rep.hypothesis_resolution = plus_empty && has_linear_resolution(c, FieldTag::GF2).holds() &&
                                has_linear_resolution(c, FieldTag::Rational).holds();
    if (rep.hypothesis_resolution) {
        ChordalityResult ch = is_chordal(c, budget);
        if (ch.outcome == Outcome::Budget) throw BudgetError{};
        rep.chordal = ch.outcome == Outcome::True;
        rep.cf_tree = is_cf_tree(c);
        rep.holds = rep.holds && rep.chordal && rep.cf_tree;
    }
    if (!c.is_empty() && plus_empty) {
        LinearQuotientsResult lq = has_linear_quotients(complement(c).circuits(), budget);
        if (lq.outcome == Outcome::Budget) throw BudgetError{};
        rep.hypothesis_quotients = lq.outcome == Outcome::True;
        if (rep.hypothesis_quotients) {
            rep.has_free_subcircuit = !free_maximal_subcircuits(c).empty();
            rep.holds = rep.holds && rep.has_free_subcircuit;
        }
    }
    return rep;
}

}  // namespace chordal
