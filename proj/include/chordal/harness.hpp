#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "chordal/ascent.hpp"
#include "chordal/quotients.hpp"

namespace chordal::harness {

/// Seeded instance generator.  Streams are reproducible: the same spec gives
/// the same clutters.
struct GenSpec {
    int n = 6;
    int d = 2;
    double density = 0.5;  // circuit probability; for complete-minus-k, k ≈ (1-density)·total
    std::uint64_t seed = 1;
    int count = 100;
    enum class Family { UniformRandom, CompleteMinusK, Graph, NearChordal };
    Family family = Family::UniformRandom;
};

GenSpec::Family family_from_string(const std::string& s);
std::string family_name(GenSpec::Family f);

std::vector<Clutter> generate(const GenSpec& spec);

/// Every d-clutter on [n], by circuit-subset mask (2^C(n,d+1) of them).
void for_each_clutter(int n, int d, const std::function<void(const Clutter&)>& f);

struct CheckResult {
    enum class Status { Pass, Fail, Skip };
    Status status = Status::Skip;
    std::string note;

    static CheckResult pass() { return {Status::Pass, {}}; }
    static CheckResult fail(std::string n) { return {Status::Fail, std::move(n)}; }
    static CheckResult skip(std::string n = {}) { return {Status::Skip, std::move(n)}; }
};

/// One theorem (or open hunt) evaluated over a generated stream.  A failing
/// proven theorem aborts the sweep after storing a shrunk reproducer; open
/// hunts log findings and never fail.
struct SweepReport {
    std::string id;
    bool proven = true;
    int pass = 0, fail = 0, skip = 0;
    int budget_exhausted = 0;
    bool aborted = false;
    std::vector<std::string> failures;  // rendered minimal reproducers
    std::vector<std::string> findings;  // open-hunt hits

    bool ok() const { return fail == 0; }
};

std::vector<std::string> registered_theorems();
std::vector<std::string> registered_hunts();
bool is_registered(const std::string& id);

/// Runs the registered hypothesis filter and conclusion assertion over the
/// stream.  Budget exhaustion counts as a skip, never as a failure.  When
/// corpus_dir is nonempty, reproducers and findings are persisted there.
SweepReport sweep(const std::string& id, const GenSpec& gen, const SearchBudget& budget = {},
                  const std::string& corpus_dir = {});

/// Per-instance checks, exposed for the acceptance suite.
CheckResult check_instance(const std::string& id, const Clutter& c, const SearchBudget& budget = {});

}  // namespace chordal::harness
