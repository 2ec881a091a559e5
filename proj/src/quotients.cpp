#include "chordal/quotients.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "chordal/ascent.hpp"
#include "chordal/chordality.hpp"

namespace chordal {

AdmissibleCheck is_admissible_order(const std::vector<Mask>& faces) {
    for (std::size_t i = 1; i < faces.size(); ++i) {
        if (face_dim(faces[i]) != face_dim(faces[0]))
            throw std::invalid_argument("admissible order requires generators of one dimension");
        if (std::find(faces.begin(), faces.begin() + static_cast<std::ptrdiff_t>(i), faces[i]) !=
            faces.begin() + static_cast<std::ptrdiff_t>(i))
            throw std::invalid_argument("admissible order requires distinct generators");
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        // variables l with F_k \ F_i = {l} for some k < i
        Mask singles = 0;
        for (std::size_t k = 0; k < i; ++k) {
            Mask diff = faces[k] & ~faces[i];
            if (card(diff) == 1) singles |= diff;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (((faces[j] & ~faces[i]) & singles) == 0)
                return {false, static_cast<int>(i), static_cast<int>(j)};
    }
    return {};
}

namespace {

struct QuotientSearch {
    const std::vector<Mask>& gens;
    BudgetMeter meter;
    bool budget_hit = false;
    std::unordered_set<std::uint64_t> dead;

    QuotientSearch(const std::vector<Mask>& g, const SearchBudget& b) : gens(g), meter(b) {}

    bool extendable(std::uint64_t state, std::size_t i) const {
        Mask singles = 0;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (!(state >> k & 1)) continue;
            Mask diff = gens[k] & ~gens[i];
            if (card(diff) == 1) singles |= diff;
        }
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (!(state >> j & 1)) continue;
            if (((gens[j] & ~gens[i]) & singles) == 0) return false;
        }
        return true;
    }

    bool run(std::uint64_t state, std::vector<Mask>& order) {
        if (order.size() == gens.size()) return true;
        if (dead.count(state)) return false;
        if (!meter.charge()) {
            budget_hit = true;
            return false;
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (state >> i & 1) continue;
            if (!extendable(state, i)) continue;
            order.push_back(gens[i]);
            if (run(state | (std::uint64_t{1} << i), order)) return true;
            order.pop_back();
            if (budget_hit) return false;
        }
        dead.insert(state);
        return false;
    }
};

}  // namespace

LinearQuotientsResult has_linear_quotients(const std::vector<Mask>& gens, const SearchBudget& budget) {
    std::vector<Mask> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) return {Outcome::True, AdmissibleOrder{}};
    for (Mask f : sorted)
        if (face_dim(f) != face_dim(sorted[0]))
            throw std::invalid_argument("linear quotients search requires generators of one dimension");
    if (sorted.size() > 64) return {Outcome::Budget, std::nullopt};
    QuotientSearch search(sorted, budget);
    std::vector<Mask> order;
    if (search.run(0, order)) return {Outcome::True, AdmissibleOrder{std::move(order)}};
    return {search.budget_hit ? Outcome::Budget : Outcome::False, std::nullopt};
}

AdmissibleOrder ascent_order(const Clutter& c, const AdmissibleOrder& order) {
    AdmissibleCheck chk = is_admissible_order(order.faces);
    if (!chk.ok) throw std::invalid_argument("input order is not admissible");
    std::vector<Mask> gens = complement(c).circuits();
    std::vector<Mask> given = order.faces;
    std::sort(given.begin(), given.end());
    if (given != gens)
        throw std::invalid_argument("order is not a permutation of the complement's generators");

    std::vector<Mask> out;
    std::unordered_set<Mask> taken;
    for (Mask f : order.faces) {
        std::vector<Mask> block;
        for (int v : vertices_of(c.verts() & ~f)) {
            Mask g = f | bit(v);
            if (taken.insert(g).second) block.push_back(g);
        }
        std::sort(block.begin(), block.end());
        out.insert(out.end(), block.begin(), block.end());
    }
    AdmissibleOrder result{std::move(out)};
    if (!result.faces.empty() && !is_admissible_order(result.faces).ok)
        throw std::logic_error("ascended order failed the admissibility check");
    return result;
}

AdmissibleOrder append_sms_generator(const Clutter& c, const AdmissibleOrder& order, Mask f) {
    AdmissibleCheck chk = is_admissible_order(order.faces);
    if (!chk.ok) throw std::invalid_argument("input order is not admissible");
    Clutter plus = ascent(c);
    std::vector<Mask> sms = simplicial_maximal_subcircuits(plus);
    if (std::find(sms.begin(), sms.end(), f) == sms.end())
        throw std::invalid_argument(face_to_string(f) + " is not a simplicial maximal subcircuit of the ascent");
    AdmissibleOrder result = order;
    result.faces.push_back(f);
    return result;
}

AdmissibleOrder restrict_order_by_vertex(const AdmissibleOrder& order, int v) {
    AdmissibleOrder out;
    for (Mask f : order.faces)
        if (!(f & bit(v))) out.faces.push_back(f);
    return out;
}

std::vector<long long> betti_from_linear_quotients(const AdmissibleOrder& order) {
    std::vector<long long> beta;
    for (std::size_t k = 0; k < order.faces.size(); ++k) {
        Mask singles = 0;
        for (std::size_t j = 0; j < k; ++j) {
            Mask diff = order.faces[j] & ~order.faces[k];
            if (card(diff) == 1) singles |= diff;
        }
        int r = card(singles);
        if (static_cast<std::size_t>(r) + 1 > beta.size()) beta.resize(static_cast<std::size_t>(r) + 1, 0);
        for (int i = 0; i <= r; ++i) beta[static_cast<std::size_t>(i)] += static_cast<long long>(binomial(r, i));
    }
    return beta;
}

BettiDeletionReport betti_after_sms_deletion(const Clutter& c, Mask f, FieldTag field) {
    LinResResult lin = has_linear_resolution(c, field);
    if (!lin.holds())
        throw std::invalid_argument("hypothesis failed: the complement ideal has no linear resolution over the field");
    Clutter plus = ascent(c);
    std::vector<Mask> sms = simplicial_maximal_subcircuits(plus);
    if (std::find(sms.begin(), sms.end(), f) == sms.end())
        throw std::invalid_argument("hypothesis failed: " + face_to_string(f) +
                                    " is not a simplicial maximal subcircuit of the ascent");

    BettiDeletionReport rep;
    rep.before = graded_betti(clique_complex(c), field);
    rep.after = graded_betti(clique_complex(delete_circuit(c, f)), field);
    rep.t = c.n() - card(closed_neighborhood(plus, f));
    rep.identity_holds = true;
    int top = std::max({rep.before.max_i(), rep.after.max_i(), rep.t});
    for (int i = 0; i <= top; ++i) {
        long long want = rep.before.total(i) + static_cast<long long>(binomial(rep.t, i));
        if (rep.after.total(i) != want) {
            rep.identity_holds = false;
            rep.detail += "beta_" + std::to_string(i) + ": " + std::to_string(rep.after.total(i)) +
                          " != " + std::to_string(want) + "; ";
        }
    }
    return rep;
}

}  // namespace chordal
