// Acceptance suite: golden-example reproduction plus the property sweeps.
// Prints one pass/fail line per criterion and exits nonzero on any failure.

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "chordal/fixtures.hpp"
#include "chordal/harness.hpp"
#include "chordal/io.hpp"
#include "helpers.hpp"

using namespace chordal;
using namespace test_helpers;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool ok, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, name.c_str(), seconds);
    if (!ok) ++failures;
}

template <typename F>
void run(int number, const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    criterion(number, name + (detail.empty() ? "" : " [" + detail + "]"), ok, secs);
}

bool expect(bool cond, const char* what) {
    if (!cond) std::printf("    failed: %s\n", what);
    return cond;
}

// --- criterion 1: the dual example, exactly ---
bool dual_example() {
    Clutter c = fixtures::three_triangles();
    bool ok = true;
    ok &= expect(sorted(dual_clutter(c).edges()) ==
                     sorted(FS({{1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}})),
                 "dual clutter listing");
    ok &= expect(sorted(alexander_dual(span_complex(c)).facets()) == sorted(FS({{2, 3, 5}, {2, 4, 5}, {1, 3, 5}})),
                 "Alexander dual of the span");
    ok &= expect(clique_complex(c).is_face(F({1, 4})), "14 is a clique");
    ok &= expect(!span_complex(c).is_face(F({1, 4})), "14 is not in the span");
    std::vector<Mask> sr = stanley_reisner_generators(clique_complex(c));
    std::sort(sr.begin(), sr.end());
    ok &= expect(sr == complement(c).circuits(), "transition part 1");
    ok &= expect(span_complex(dual_clutter(c)) == alexander_dual(clique_complex(c)), "transition part 2");
    return ok;
}

// --- criterion 2: the vertex-decomposability example family ---
bool vdec_example() {
    Clutter c = fixtures::six_vertex_vdec();
    bool ok = true;
    SimplicialComplex gamma = span_complex(dual_clutter(c));
    ok &= expect(sorted(gamma.facets()) ==
                     sorted(FS({{1, 3, 6}, {1, 4, 6}, {2, 3, 6}, {2, 4, 6}, {3, 4, 6}, {1, 3, 5}, {2, 3, 5},
                                {1, 4, 5}, {2, 4, 5}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})),
                 "thirteen dual facets");
    ok &= expect(is_shedding_vertex(gamma, 5), "6 sheds");
    ok &= expect(link(span_complex(c), F({6})) == SimplicialComplex(full_mask(5), FS({{1, 2}, {3, 4}})),
                 "link facets 12 and 34");
    std::vector<Mask> with6;
    for (Mask e : simplicial_maximal_subcircuits(c))
        if (e & bit(5)) with6.push_back(e);
    ok &= expect(with6 == sorted(FS({{1, 6}, {2, 6}, {3, 6}, {4, 6}})), "SMS members through 6");
    ok &= expect(replay_elimination(c, EliminationCertificate{fixtures::six_vertex_elimination()}),
                 "26 46 12 13 23 35 replays");
    return ok;
}

// --- criterion 3: the chordal octahedron ---
bool octahedron_example() {
    Clutter c = fixtures::octahedron_plus();
    bool ok = true;
    ok &= expect(ascent(c).circuits() == sorted(FS({{1, 2, 3, 5}, {1, 3, 4, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}})),
                 "ascent is the four tetrahedra");
    std::vector<Mask> order = fixtures::octahedron_admissible_order();
    ok &= expect(sorted(order) == complement(c).circuits(), "order is a permutation of the complement");
    ok &= expect(is_admissible_order(order).ok, "eight-term order is admissible");
    ok &= expect(replay_elimination(c, EliminationCertificate{fixtures::octahedron_elimination()}),
                 "12 14 64 62 13 23 63 43 replays");
    AdmissibleOrder up = ascent_order(c, AdmissibleOrder{order});
    ok &= expect(up.faces == fixtures::octahedron_ascended_order(), "eleven-term ascent order");
    ok &= expect(is_admissible_order(up.faces).ok, "ascended order admissible");
    ok &= expect(is_d_chorded(delete_circuit(c, F({1, 3, 5}))).outcome == Outcome::False,
                 "removing 135 breaks 2-chordedness");
    return ok;
}

// --- criterion 4: the dunce hat ---
bool dunce_hat() {
    Clutter c = fixtures::dunce_hat();
    bool ok = true;
    ok &= expect(c.n() == 8 && c.dim() == 2 && c.size() == 17, "shape");
    bool proper_ok = true;
    for_each_submask(c.verts(), [&](Mask w) {
        if (w == c.verts()) return;
        Clutter cw = induced(c, w);
        if (!cw.is_empty() && free_maximal_subcircuits(cw).empty()) proper_ok = false;
    });
    ok &= expect(proper_ok, "proper induced subclutters have free subcircuits");
    for (FieldTag field : {FieldTag::GF2, FieldTag::Rational}) {
        HomologyProfile span = reduced_homology(span_complex(c), field);
        for (auto& [i, h] : span.dims)
            if (i >= 1) ok &= expect(h == 0, "span homology vanishes in degrees >= 1");
        HomologyProfile clique = reduced_homology(clique_complex(c), field);
        for (auto& [i, h] : clique.dims)
            if (i >= 2) ok &= expect(h == 0, "clique-complex homology vanishes in degrees >= 2");
        ok &= expect(has_linear_resolution(c, field).value == LinRes::Yes, "linear resolution");
    }
    ok &= expect(simplicial_maximal_subcircuits(c).empty(), "SMS empty");
    ok &= expect(is_chordal(c).outcome == Outcome::False, "not chordal");
    ok &= expect(ascent(c).is_empty(), "empty ascent");
    Clutter edges(c.verts(), 1, maximal_subcircuits(c));
    Clutter third = ascent(ascent(ascent(edges)));
    ok &= expect(!third.is_empty(), "third ascent of the edge graph is nonempty");
    ok &= expect(ascent(third).is_empty(), "fourth ascent of the edge graph vanishes");
    return ok;
}

// --- criterion 5: the dunce hat plus 278 ---
bool dunce_plus_278() {
    Clutter base = fixtures::dunce_hat();
    std::vector<Mask> cs = base.circuits();
    cs.push_back(F({2, 7, 8}));
    Clutter d(base.verts(), 2, cs);
    bool ok = true;
    Clutter up = ascent(d);
    ok &= expect(up.circuits() == FS({{1, 2, 7, 8}}), "ascent is exactly 1278");
    std::vector<Mask> sms = simplicial_maximal_subcircuits(up);
    ok &= expect(std::find(sms.begin(), sms.end(), F({2, 7, 8})) != sms.end(), "278 is simplicial in the ascent");
    for (FieldTag field : {FieldTag::GF2, FieldTag::Rational})
        ok &= expect(has_linear_resolution(d, field).value == LinRes::Yes, "linear resolution");
    return ok;
}

// --- criterion 6: the Fröberg equivalence, exhaustively on six vertices ---
bool froberg() {
    harness::GenSpec spec;
    spec.n = 6;
    harness::SweepReport rep = harness::sweep("froberg-graphs", spec);
    std::printf("    graphs checked: %d\n", rep.pass + rep.fail + rep.skip);
    return expect(rep.fail == 0 && rep.skip == 0 && rep.pass == (1 << 15), "all 2^15 graphs agree");
}

// --- criterion 7: the theorem sweeps ---
bool theorem_sweeps() {
    using Family = harness::GenSpec::Family;
    bool ok = true;
    const std::vector<std::string> ids = {"vdec-main",   "chordal-plus", "lin-q-plus",
                                          "lin-res-sms", "cf2-main",     "cf1-main",
                                          "c-f-chorded", "betti-sms",    "almost-complete"};
    for (int d : {1, 2}) {
        // 500 instances per configuration: mixed families, one seed per batch
        std::vector<harness::GenSpec> batches = {
            {7, d, 0.55, 1001, 200, Family::NearChordal},
            {7, d, 0.50, 1002, 150, Family::UniformRandom},
            {7, d, 0.85, 1003, 150, Family::CompleteMinusK},
        };
        for (const std::string& id : ids) {
            int pass = 0, fail = 0, skip = 0;
            for (const harness::GenSpec& spec : batches) {
                harness::SweepReport rep = harness::sweep(id, spec);
                pass += rep.pass;
                fail += rep.fail;
                skip += rep.skip;
                if (!rep.failures.empty()) std::printf("    %s d=%d reproducer:\n%s", id.c_str(), d, rep.failures.front().c_str());
            }
            std::printf("    %s d=%d: pass=%d fail=%d skip=%d\n", id.c_str(), d, pass, fail, skip);
            ok &= expect(fail == 0, "sweep has zero failures");
        }
    }
    // exhaustive small-vertex checks
    for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 5}}) {
        int fail = 0, pass = 0, skip = 0;
        harness::for_each_clutter(n, d, [&](const Clutter& c) {
            harness::CheckResult r = harness::check_instance("n-le-d-plus-3", c);
            if (r.status == harness::CheckResult::Status::Fail) ++fail;
            else if (r.status == harness::CheckResult::Status::Pass) ++pass;
            else ++skip;
        });
        std::printf("    n-le-d-plus-3 (d=%d, n=%d): pass=%d fail=%d skip=%d\n", d, n, pass, fail, skip);
        ok &= expect(fail == 0, "exhaustive small-vertex sweep");
    }
    return ok;
}

// --- criterion 8: homology kernel oracles ---
int naive_rank(const IntMatrix& m, FieldTag field);

bool homology_oracles() {
    bool ok = true;
    std::mt19937_64 rng(4242);
    // ∂∘∂ = 0 on a thousand random complexes
    int complexes = 0;
    while (complexes < 1000) {
        int n = 4 + static_cast<int>(rng() % 4);
        std::vector<Mask> facets;
        int count = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) {
            Mask f = rng() & full_mask(n);
            if (f) facets.push_back(f);
        }
        if (facets.empty()) continue;
        ++complexes;
        SimplicialComplex d(full_mask(n), facets);
        for (int i = 0; i + 1 <= d.dim(); ++i) {
            BoundaryMatrix lo = boundary_matrix(d, i);
            BoundaryMatrix hi = boundary_matrix(d, i + 1);
            for (int r = 0; r < lo.m.rows && ok; ++r)
                for (int c2 = 0; c2 < hi.m.cols; ++c2) {
                    long long sum = 0;
                    for (int k = 0; k < lo.m.cols; ++k)
                        sum += static_cast<long long>(lo.m.at(r, k)) * hi.m.at(k, c2);
                    if (sum != 0) {
                        ok = expect(false, "boundary composition");
                        break;
                    }
                }
        }
    }
    // golden profiles
    SimplicialComplex tetra(full_mask(4), FS({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
    SimplicialComplex two_points(full_mask(2), FS({{1}, {2}}));
    for (FieldTag field : {FieldTag::GF2, FieldTag::Rational}) {
        HomologyProfile sphere = reduced_homology(tetra, field);
        ok &= expect(sphere.dim(2) == 1 && sphere.dim(1) == 0 && sphere.dim(0) == 0, "2-sphere profile");
        HomologyProfile simplex = reduced_homology(SimplicialComplex::simplex(full_mask(4)), field);
        ok &= expect(simplex.trivial_from(-1), "simplex profile");
        HomologyProfile pts = reduced_homology(two_points, field);
        ok &= expect(pts.dim(0) == 1 && pts.dim(-1) == 0, "two points profile");
    }
    // rank agreement with the naive dense oracle up to 50x50
    for (int size : {5, 12, 25, 40, 50}) {
        for (int rep = 0; rep < 3; ++rep) {
            IntMatrix m(size, size);
            for (int r = 0; r < size; ++r)
                for (int c2 = 0; c2 < size; ++c2) m.at(r, c2) = static_cast<int>(rng() & 1);
            ok &= expect(rank(m, FieldTag::GF2) == naive_rank(m, FieldTag::GF2), "GF(2) rank");
            ok &= expect(rank(m, FieldTag::Rational) == naive_rank(m, FieldTag::Rational), "rational rank");
        }
    }
    return ok;
}

// --- criterion 9: certificate round-trips ---
bool certificate_roundtrip() {
    using harness::GenSpec;
    bool ok = true;
    int emitted = 0;

    GenSpec graphs{6, 1, 0.5, 2718, 120, GenSpec::Family::NearChordal};
    for (const Clutter& g : harness::generate(graphs)) {
        ChordalityResult ch = is_chordal(g);
        if (!ch.is_chordal()) continue;
        ++emitted;
        ok &= io::verify_certificate(io::to_json(*ch.certificate), g).ok;
        EdgeOrder order = chordal_edge_order(g);
        ++emitted;
        ok &= io::verify_certificate(io::to_json(order), g).ok;
    }
    GenSpec cls{6, 2, 0.6, 314, 100, GenSpec::Family::NearChordal};
    for (const Clutter& c : harness::generate(cls)) {
        ChordalityResult ch = is_chordal(c);
        if (ch.is_chordal()) {
            ++emitted;
            std::istringstream round(io::to_json(*ch.certificate).dump());
            ok &= io::verify_certificate(nlohmann::json::parse(round.str()), c).ok;
        }
        SimplicialComplex gamma = span_complex(dual_clutter(c));
        if (!gamma.is_void()) {
            VertexDecomposabilityResult vd = is_vertex_decomposable(gamma);
            if (vd.is_decomposable()) {
                ++emitted;
                ok &= io::verify_certificate(io::to_json(vd.certificate), c).ok;
            }
        }
        LinearQuotientsResult lq = has_linear_quotients(complement(c).circuits());
        if (lq.has_quotients() && !lq.order->faces.empty()) {
            ++emitted;
            ok &= io::verify_certificate(io::to_json(*lq.order), c).ok;
        }
    }
    std::printf("    certificates verified: %d\n", emitted);
    return expect(ok && emitted > 200, "every emitted certificate verifies");
}

int naive_rank(const IntMatrix& m, FieldTag field) {
    // plain elimination; the rational side uses exact big rationals
    if (field == FieldTag::GF2) {
        std::vector<std::vector<int>> a(static_cast<std::size_t>(m.rows),
                                        std::vector<int>(static_cast<std::size_t>(m.cols)));
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c) & 1;
        int rank = 0;
        for (int c = 0; c < m.cols && rank < m.rows; ++c) {
            int piv = -1;
            for (int r = rank; r < m.rows; ++r)
                if (a[r][c]) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(a[rank], a[piv]);
            for (int r = 0; r < m.rows; ++r)
                if (r != rank && a[r][c])
                    for (int k = 0; k < m.cols; ++k) a[r][k] ^= a[rank][k];
            ++rank;
        }
        return rank;
    }
    using Q = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Q>> a(static_cast<std::size_t>(m.rows), std::vector<Q>(static_cast<std::size_t>(m.cols)));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && a[r][c] != 0) {
                Q f = a[r][c] / a[rank][c];
                for (int k = 0; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
            }
        ++rank;
    }
    return rank;
}

}  // namespace

int main() {
    run(1, "dual example reproduced exactly", dual_example);
    run(2, "vertex-decomposability example family", vdec_example);
    run(3, "chordal octahedron reproduced", octahedron_example);
    run(4, "dunce-hat fixture validated", dunce_hat);
    run(5, "dunce hat plus 278", dunce_plus_278);
    run(6, "Froberg equivalence on all six-vertex graphs", froberg);
    run(7, "theorem sweeps with zero failures", theorem_sweeps);
    run(8, "homology kernel oracles", homology_oracles);
    run(9, "certificate round-trip", certificate_roundtrip);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
