#include "chordal/chordality.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace chordal {

std::vector<Mask> maximal_subcircuits(const Clutter& c) {
    std::set<Mask> out;
    for (Mask f : c.circuits())
        for_each_subset_of_size(f, c.dim(), [&](Mask e) { out.insert(e); });
    return {out.begin(), out.end()};
}

Mask closed_neighborhood(const Clutter& c, Mask e) {
    if (face_dim(e) != c.dim() - 1)
        throw std::invalid_argument("closed neighborhood needs a (d-1)-face, got " + face_to_string(e));
    Mask n = e;
    for (int v : vertices_of(c.verts() & ~e))
        if (c.has_circuit(e | bit(v))) n |= bit(v);
    return n;
}

std::vector<Mask> simplicial_maximal_subcircuits(const Clutter& c) {
    std::vector<Mask> out;
    for (Mask e : maximal_subcircuits(c))
        if (is_clique(c, closed_neighborhood(c, e))) out.push_back(e);
    return out;
}

std::vector<Mask> free_maximal_subcircuits(const Clutter& c) {
    std::vector<Mask> out;
    for (Mask e : maximal_subcircuits(c)) {
        int count = 0;
        for (Mask f : c.circuits())
            if (contains(f, e)) ++count;
        if (count == 1) out.push_back(e);
    }
    return out;
}

Clutter delete_subcircuit(const Clutter& c, Mask e) {
    if (face_dim(e) != c.dim() - 1)
        throw std::invalid_argument("subcircuit deletion needs a (d-1)-face, got " + face_to_string(e));
    std::vector<Mask> out;
    for (Mask f : c.circuits())
        if (!contains(f, e)) out.push_back(f);
    return Clutter(c.verts(), c.dim(), std::move(out));
}

namespace {

// DFS state for the chordality search: the set of still-alive circuits as an
// index subset of the root circuit list (supported up to 64 circuits; larger
// inputs fall back to hashing the circuit vector itself).
struct ChordalSearch {
    const Clutter& root;
    BudgetMeter meter;
    bool budget_hit = false;
    std::unordered_set<std::uint64_t> dead_small;
    std::unordered_set<std::vector<Mask>, MaskVectorHash> dead_big;
    bool small = false;

    explicit ChordalSearch(const Clutter& c, const SearchBudget& b) : root(c), meter(b) {
        small = c.size() <= 64;
    }

    bool dead(std::uint64_t alive, const std::vector<Mask>& cs) {
        return small ? dead_small.count(alive) != 0 : dead_big.count(cs) != 0;
    }
    void mark_dead(std::uint64_t alive, const std::vector<Mask>& cs) {
        if (small)
            dead_small.insert(alive);
        else
            dead_big.insert(cs);
    }

    bool run(std::uint64_t alive, const Clutter& cur, std::vector<Mask>& steps) {
        if (cur.is_empty()) return true;
        if (dead(alive, cur.circuits())) return false;
        if (!meter.charge()) {
            budget_hit = true;
            return false;
        }
        for (Mask e : simplicial_maximal_subcircuits(cur)) {
            std::uint64_t child_alive = alive;
            if (small) {
                for (std::size_t i = 0; i < root.size(); ++i)
                    if ((alive >> i & 1) && contains(root.circuits()[i], e)) child_alive &= ~(std::uint64_t{1} << i);
            }
            steps.push_back(e);
            if (run(child_alive, delete_subcircuit(cur, e), steps)) return true;
            steps.pop_back();
            if (budget_hit) return false;
        }
        mark_dead(alive, cur.circuits());
        return false;
    }
};

}  // namespace

ChordalityResult is_chordal(const Clutter& c, const SearchBudget& budget) {
    ChordalSearch search(c, budget);
    std::vector<Mask> steps;
    std::uint64_t alive = c.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.size()) - 1;
    if (search.run(alive, c, steps)) return {Outcome::True, EliminationCertificate{std::move(steps)}};
    return {search.budget_hit ? Outcome::Budget : Outcome::False, std::nullopt};
}

bool greedy_is_chordal(const Clutter& c) {
    Clutter cur = c;
    while (!cur.is_empty()) {
        std::vector<Mask> sms = simplicial_maximal_subcircuits(cur);
        if (sms.empty()) return false;
        cur = delete_subcircuit(cur, sms.front());
    }
    return true;
}

bool replay_elimination(const Clutter& c, const EliminationCertificate& cert) {
    Clutter cur = c;
    for (Mask e : cert.steps) {
        if (face_dim(e) != c.dim() - 1) return false;
        if (!is_clique(cur, closed_neighborhood(cur, e))) return false;
        bool covered = false;
        for (Mask f : cur.circuits())
            if (contains(f, e)) { covered = true; break; }
        if (!covered) return false;  // e must be a maximal subcircuit, not just any face
        cur = delete_subcircuit(cur, e);
    }
    return cur.is_empty();
}

bool is_shedding_vertex(const SimplicialComplex& d, int v) {
    Mask b = bit(v);
    if (!(d.verts() & b)) throw std::invalid_argument("unknown vertex " + std::to_string(v + 1));
    if (d.is_void()) throw std::invalid_argument("shedding vertex of the void complex is undefined");
    if (!d.is_face(b)) return true;  // empty link, nothing can collide
    SimplicialComplex lk = link(d, b);
    SimplicialComplex del = delete_vertex(d, v);
    for (Mask f : lk.facets())
        for (Mask g : del.facets())
            if (f == g) return false;
    return true;
}

bool shedding_pure_criterion(const SimplicialComplex& d, int v) {
    if (!d.is_pure()) throw std::invalid_argument("criterion requires pure complex");
    if (d.is_void()) throw std::invalid_argument("criterion requires a nonempty complex");
    SimplicialComplex del = delete_vertex(d, v);
    return del.is_pure() && del.dim() == d.dim();
}

namespace {

struct VdecSearch {
    BudgetMeter meter;
    bool budget_hit = false;
    std::map<std::vector<Mask>, SheddingCertificate> memo;  // nullptr = not decomposable

    explicit VdecSearch(const SearchBudget& b) : meter(b) {}

    SheddingCertificate run(const SimplicialComplex& d) {
        if (d.is_simplex()) {
            auto leaf = std::make_shared<SheddingNode>();
            return leaf;
        }
        auto it = memo.find(d.facets());
        if (it != memo.end()) return it->second;
        if (!meter.charge()) {
            budget_hit = true;
            return nullptr;
        }
        SheddingCertificate found;
        for (int v : vertices_of(d.support())) {
            if (!is_shedding_vertex(d, v)) continue;
            SheddingCertificate lk = run(link(d, bit(v)));
            if (budget_hit) return nullptr;
            if (!lk) continue;
            SheddingCertificate del = run(delete_vertex(d, v));
            if (budget_hit) return nullptr;
            if (!del) continue;
            auto node = std::make_shared<SheddingNode>();
            node->leaf = false;
            node->vertex = v;
            node->link = lk;
            node->deletion = del;
            found = node;
            break;
        }
        memo.emplace(d.facets(), found);
        return found;
    }
};

}  // namespace

VertexDecomposabilityResult is_vertex_decomposable(const SimplicialComplex& d, const SearchBudget& budget) {
    if (d.is_void())
        throw std::invalid_argument("vertex decomposability starts from a nonempty complex");
    VdecSearch search(budget);
    SheddingCertificate cert = search.run(d);
    if (cert) return {Outcome::True, cert};
    return {search.budget_hit ? Outcome::Budget : Outcome::False, nullptr};
}

bool replay_shedding(const SimplicialComplex& d, const SheddingCertificate& cert) {
    if (!cert) return false;
    if (cert->leaf) return d.is_simplex();
    int v = cert->vertex;
    if (v < 0 || !(d.verts() & bit(v)) || !d.is_face(bit(v))) return false;
    if (d.is_void() || !is_shedding_vertex(d, v)) return false;
    return replay_shedding(link(d, bit(v)), cert->link) &&
           replay_shedding(delete_vertex(d, v), cert->deletion);
}

bool is_simplicial_vertex(const GeneralClutter& c, int v, SimplicialVertexRule rule) {
    Mask b = bit(v);
    if (!(c.verts() & b)) throw std::invalid_argument("unknown vertex " + std::to_string(v + 1));
    std::vector<Mask> through;
    for (Mask e : c.edges())
        if (e & b) through.push_back(e);
    for (std::size_t i = 0; i < through.size(); ++i) {
        std::size_t j0 = rule == SimplicialVertexRule::AllowEqualEdges ? i : i + 1;
        for (std::size_t j = j0; j < through.size(); ++j) {
            Mask target = (through[i] | through[j]) & ~b;
            bool ok = false;
            for (Mask e3 : c.edges())
                if (contains(target, e3)) { ok = true; break; }
            if (!ok) return false;
        }
    }
    return true;
}

namespace {

struct WChordalSearch {
    BudgetMeter meter;
    bool budget_hit = false;
    SimplicialVertexRule rule;
    std::map<std::vector<Mask>, bool> memo;

    WChordalSearch(const SearchBudget& b, SimplicialVertexRule r) : meter(b), rule(r) {}

    bool run(const GeneralClutter& raw) {
        // Vertices outside the support only produce trivial minors, so states
        // are keyed on the edge family alone.
        GeneralClutter c(raw.support(), raw.edges());
        if (c.is_empty()) return true;
        if (c.edges().size() == 1 && c.edges().front() == 0) return true;  // {∅}, the unit clutter
        auto it = memo.find(c.edges());
        if (it != memo.end()) return it->second;
        if (!meter.charge()) {
            budget_hit = true;
            return false;
        }
        bool ok = false;
        for (int v : vertices_of(c.verts()))
            if (is_simplicial_vertex(c, v, rule)) { ok = true; break; }
        if (ok) {
            for (int v : vertices_of(c.verts())) {
                if (!run(delete_vertex(c, v)) || !run(contraction(c, v))) { ok = false; break; }
                if (budget_hit) return false;
            }
        }
        memo.emplace(c.edges(), ok);
        return ok;
    }
};

}  // namespace

Outcome is_w_chordal(const GeneralClutter& c, const SearchBudget& budget, SimplicialVertexRule rule) {
    WChordalSearch search(budget, rule);
    bool ok = search.run(c);
    if (search.budget_hit) return Outcome::Budget;
    return ok ? Outcome::True : Outcome::False;
}

std::vector<Mask> eliminate_toward_vertex_deletion(const Clutter& c, int v, const SearchBudget& budget) {
    Mask b = bit(v);
    if (!(c.verts() & b)) throw std::invalid_argument("unknown vertex " + std::to_string(v + 1));
    if (c.dim() < 1) throw std::invalid_argument("vertex elimination needs dimension >= 1");
    std::string failed;
    SimplicialComplex gamma = span_complex(dual_clutter(c));
    if (gamma.is_void())
        failed += "dual complex is void; ";
    else if (!is_shedding_vertex(gamma, v))
        failed += "vertex is not a shedding vertex of the dual complex; ";
    Clutter d = link_facets(c, v);
    ChordalityResult link_chordal = is_chordal(d, budget);
    if (link_chordal.outcome == Outcome::Budget)
        failed += "chordality of the link facets exceeded the search budget; ";
    else if (link_chordal.outcome == Outcome::False)
        failed += "link facets are not chordal; ";
    if (!failed.empty()) throw std::invalid_argument("precondition failed: " + failed);

    std::vector<Mask> steps;
    Clutter cur = c;
    for (Mask e : link_chordal.certificate->steps) {
        Mask lifted = e | b;
        std::vector<Mask> sms = simplicial_maximal_subcircuits(cur);
        if (std::find(sms.begin(), sms.end(), lifted) == sms.end())
            throw std::logic_error("lifted step " + face_to_string(lifted) + " is not simplicial");
        steps.push_back(lifted);
        cur = delete_subcircuit(cur, lifted);
    }
    if (cur.circuits() != delete_vertex(c, v).circuits())
        throw std::logic_error("replay did not reach C - v");
    return steps;
}

}  // namespace chordal
