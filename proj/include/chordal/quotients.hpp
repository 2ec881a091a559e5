#pragma once

#include <optional>

#include "chordal/clutter.hpp"
#include "chordal/homology.hpp"
#include "chordal/search.hpp"

namespace chordal {

/// An ordered system of squarefree generators, recorded by their supports.
struct AdmissibleOrder {
    std::vector<Mask> faces;

    bool operator==(const AdmissibleOrder&) const = default;
};

/// Admissibility criterion for x_{F_1}, ..., x_{F_t}: for each i and all
/// j < i there are l ∈ F_j \ F_i and k < i with F_k \ F_i = {l}.
struct AdmissibleCheck {
    bool ok = true;
    int i = -1;  // smallest violating pair, 0-based, when !ok
    int j = -1;
};

AdmissibleCheck is_admissible_order(const std::vector<Mask>& faces);

struct LinearQuotientsResult {
    Outcome outcome = Outcome::False;
    std::optional<AdmissibleOrder> order;  // present iff True

    bool has_quotients() const { return outcome == Outcome::True; }
};

/// Searches for an admissible permutation of the generators.  The criterion
/// at each position depends only on the set of earlier generators, so the
/// search runs over prefix sets with memoization on dead sets.
LinearQuotientsResult has_linear_quotients(const std::vector<Mask>& gens, const SearchBudget& budget = {});

/// Lifts an admissible order for I(complement(C)) to one for the complement
/// of the ascent: the i-th block is { F_i ∪ {v} : v ∉ F_i } minus earlier
/// blocks, in canonical order inside each block.
AdmissibleOrder ascent_order(const Clutter& c, const AdmissibleOrder& order);

/// Appends F ∈ SMS(C+) to an admissible order for I(complement(C)), giving an
/// admissible order for I(complement(C - F)).
AdmissibleOrder append_sms_generator(const Clutter& c, const AdmissibleOrder& order, Mask f);

/// Subsequence of generators avoiding v, an admissible order for I(complement(C - v)).
AdmissibleOrder restrict_order_by_vertex(const AdmissibleOrder& order, int v);

/// Total Betti numbers from a linear-quotients order: β_i = Σ_k C(r_k, i),
/// where r_k counts the variables generating the k-th colon ideal.
std::vector<long long> betti_from_linear_quotients(const AdmissibleOrder& order);

/// β_i(J) = β_i(I) + C(t, i) with I = I(complement(C)), J after removing the
/// circuit F ∈ SMS(C+), and t = n - |N_{C+}[F]|.  Both tables are computed
/// independently by the Hochster sweep and the identity is checked for all i.
struct BettiDeletionReport {
    BettiTable before;
    BettiTable after;
    int t = 0;
    bool identity_holds = false;
    std::string detail;
};

BettiDeletionReport betti_after_sms_deletion(const Clutter& c, Mask f, FieldTag field);

}  // namespace chordal
