// Command-line front end: load clutters, run checks, emit and verify
// certificates, print homology and Betti data, run theorem sweeps.
//
// Exit codes: 0 property holds / certificate valid, 1 property fails,
// 2 usage or I/O error, 3 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordal/fixtures.hpp"
#include "chordal/harness.hpp"
#include "chordal/io.hpp"

using namespace chordal;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string field = "both";
    std::size_t budget_nodes = SearchBudget{}.max_nodes;
    bool json_output = false;
};

SearchBudget budget_of(const Options& o) {
    SearchBudget b;
    b.max_nodes = o.budget_nodes;
    return b;
}

std::vector<FieldTag> fields_of(const Options& o) {
    if (o.field == "gf2") return {FieldTag::GF2};
    if (o.field == "rat") return {FieldTag::Rational};
    return {FieldTag::GF2, FieldTag::Rational};
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.json_output)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string faces_line(const std::vector<Mask>& faces) {
    std::string s;
    for (Mask f : faces) {
        if (!s.empty()) s += ", ";
        s += face_to_string(f);
    }
    return s.empty() ? "(none)" : s;
}

int run_check(const std::string& property, const std::string& path, const Options& opt) {
    SearchBudget budget = budget_of(opt);
    if (property == "wchordal") {
        GeneralClutter g = io::read_general_clutter_file(path);
        Outcome w = is_w_chordal(g, budget);
        if (w == Outcome::Budget) {
            emit(opt, {{"check", "wchordal"}, {"outcome", "budget-exhausted"}}, "budget exhausted\n");
            return kExitBudget;
        }
        emit(opt, {{"check", "wchordal"}, {"holds", w == Outcome::True}},
             w == Outcome::True ? "W-chordal\n" : "not W-chordal\n");
        return w == Outcome::True ? kExitHolds : kExitFails;
    }

    Clutter c = io::read_clutter_file(path);
    if (property == "chordal") {
        ChordalityResult r = is_chordal(c, budget);
        if (r.outcome == Outcome::Budget) {
            emit(opt, {{"check", "chordal"}, {"outcome", "budget-exhausted"}}, "budget exhausted\n");
            return kExitBudget;
        }
        if (r.is_chordal()) {
            emit(opt, {{"check", "chordal"}, {"holds", true}, {"certificate", io::to_json(*r.certificate)}},
                 "chordal; elimination: " + faces_line(r.certificate->steps) + "\n");
            return kExitHolds;
        }
        std::string why = simplicial_maximal_subcircuits(c).empty() ? "SMS empty at root"
                                                                    : "every elimination path gets stuck";
        emit(opt, {{"check", "chordal"}, {"holds", false}, {"reason", why}}, "not chordal: " + why + "\n");
        return kExitFails;
    }
    if (property == "vdec") {
        SimplicialComplex gamma = span_complex(dual_clutter(c));
        if (gamma.is_void()) {
            emit(opt, {{"check", "vdec"}, {"error", "void dual"}}, "dual complex is void\n");
            return kExitUsage;
        }
        VertexDecomposabilityResult r = is_vertex_decomposable(gamma, budget);
        if (r.outcome == Outcome::Budget) {
            emit(opt, {{"check", "vdec"}, {"outcome", "budget-exhausted"}}, "budget exhausted\n");
            return kExitBudget;
        }
        if (r.is_decomposable()) {
            emit(opt, {{"check", "vdec"}, {"holds", true}, {"certificate", io::to_json(r.certificate)}},
                 "dual complex is vertex decomposable\n");
            return kExitHolds;
        }
        emit(opt, {{"check", "vdec"}, {"holds", false}}, "dual complex is not vertex decomposable\n");
        return kExitFails;
    }
    if (property == "dchorded") {
        DChordedResult r = is_d_chorded(c, budget);
        if (r.outcome == Outcome::Budget) {
            emit(opt, {{"check", "dchorded"}, {"outcome", "budget-exhausted"}}, "budget exhausted\n");
            return kExitBudget;
        }
        if (r.holds()) {
            emit(opt, {{"check", "dchorded"}, {"holds", true}}, "d-chorded\n");
            return kExitHolds;
        }
        emit(opt, {{"check", "dchorded"}, {"holds", false}, {"witness", io::faces_to_json(*r.witness)}},
             "not d-chorded; witness cycle: " + faces_line(*r.witness) + "\n");
        return kExitFails;
    }
    if (property == "cfchordal") {
        Outcome r = is_cf_chordal(c, budget);
        if (r == Outcome::Budget) {
            emit(opt, {{"check", "cfchordal"}, {"outcome", "budget-exhausted"}}, "budget exhausted\n");
            return kExitBudget;
        }
        emit(opt, {{"check", "cfchordal"}, {"holds", r == Outcome::True}},
             r == Outcome::True ? "CF-chordal\n" : "not CF-chordal\n");
        return r == Outcome::True ? kExitHolds : kExitFails;
    }
    if (property == "cftree") {
        bool r = is_cf_tree(c);
        emit(opt, {{"check", "cftree"}, {"holds", r}}, r ? "CF-tree\n" : "has a d-cycle\n");
        return r ? kExitHolds : kExitFails;
    }
    if (property == "linres") {
        json j{{"check", "linres"}};
        std::string text;
        bool all = true;
        for (FieldTag f : fields_of(opt)) {
            LinResResult r = has_linear_resolution(c, f);
            std::string key = f == FieldTag::GF2 ? "gf2" : "rational";
            if (r.value == LinRes::TriviallyLinear) {
                j[key] = "trivially-linear";
                text += std::string(field_name(f)) + ": trivially linear (complete clutter)\n";
            } else if (r.holds()) {
                j[key] = true;
                text += std::string(field_name(f)) + ": linear resolution\n";
            } else {
                all = false;
                j[key] = json{{"holds", false},
                              {"witness_W", labels_of(r.witness->first)},
                              {"witness_i", r.witness->second}};
                text += std::string(field_name(f)) + ": no linear resolution; witness W = " +
                        face_to_string(r.witness->first) + ", i = " + std::to_string(r.witness->second) + "\n";
            }
        }
        j["holds"] = all;
        emit(opt, j, text);
        return all ? kExitHolds : kExitFails;
    }
    if (property == "linquot") {
        LinearQuotientsResult r = has_linear_quotients(complement(c).circuits(), budget);
        if (r.outcome == Outcome::Budget) {
            emit(opt, {{"check", "linquot"}, {"outcome", "budget-exhausted"}}, "budget exhausted\n");
            return kExitBudget;
        }
        if (r.has_quotients()) {
            emit(opt, {{"check", "linquot"}, {"holds", true}, {"order", io::to_json(*r.order)}},
                 "linear quotients; admissible order: " + faces_line(r.order->faces) + "\n");
            return kExitHolds;
        }
        emit(opt, {{"check", "linquot"}, {"holds", false}}, "no linear quotients\n");
        return kExitFails;
    }
    std::cerr << "unknown property '" << property << "'\n";
    return kExitUsage;
}

int run_quotients(const std::string& action, const std::vector<std::string>& args, const Options& opt,
                  const std::string& face_arg, int vertex_arg, const std::string& out_path) {
    SearchBudget budget = budget_of(opt);
    auto write_order = [&](const AdmissibleOrder& order) {
        json j = io::to_json(order);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << j.dump(2) << '\n';
        }
        emit(opt, j, "order: " + faces_line(order.faces) + "\n");
    };
    if (action == "find") {
        Clutter c = io::read_clutter_file(args.at(0));
        LinearQuotientsResult r = has_linear_quotients(complement(c).circuits(), budget);
        if (r.outcome == Outcome::Budget) {
            std::cout << "budget exhausted\n";
            return kExitBudget;
        }
        if (!r.has_quotients()) {
            std::cout << "no linear quotients\n";
            return kExitFails;
        }
        write_order(*r.order);
        return kExitHolds;
    }
    if (action == "verify") {
        std::ifstream in(args.at(0));
        if (!in) throw std::runtime_error("cannot open " + args.at(0));
        json cert = json::parse(in);
        Clutter c = io::read_clutter_file(args.at(1));
        io::VerifyResult r = io::verify_certificate(cert, c);
        emit(opt, {{"kind", r.kind}, {"ok", r.ok}, {"message", r.message}}, r.message + "\n");
        return r.ok ? kExitHolds : kExitFails;
    }
    // the remaining actions transform an order
    std::ifstream in(args.at(0));
    if (!in) throw std::runtime_error("cannot open " + args.at(0));
    AdmissibleOrder order = io::admissible_order_from_json(json::parse(in));
    if (action == "restrict") {
        if (vertex_arg < 1) throw std::invalid_argument("--vertex is required (1-based)");
        write_order(restrict_order_by_vertex(order, vertex_arg - 1));
        return kExitHolds;
    }
    Clutter c = io::read_clutter_file(args.at(1));
    if (action == "ascend") {
        write_order(ascent_order(c, order));
        return kExitHolds;
    }
    if (action == "append") {
        std::istringstream fs(face_arg);
        std::vector<int> labels;
        int v;
        while (fs >> v) labels.push_back(v);
        write_order(append_sms_generator(c, order, face_from_labels(labels)));
        return kExitHolds;
    }
    std::cerr << "unknown quotients action '" << action << "'\n";
    return kExitUsage;
}

int run_certify(const std::string& kind, const std::string& path, const std::string& out_path, const Options& opt) {
    SearchBudget budget = budget_of(opt);
    Clutter c = io::read_clutter_file(path);
    json cert;
    if (kind == "chordal") {
        ChordalityResult r = is_chordal(c, budget);
        if (r.outcome == Outcome::Budget) return kExitBudget;
        if (!r.is_chordal()) {
            std::cout << "not chordal; nothing to certify\n";
            return kExitFails;
        }
        cert = io::to_json(*r.certificate);
    } else if (kind == "vdec") {
        SimplicialComplex gamma = span_complex(dual_clutter(c));
        VertexDecomposabilityResult r = is_vertex_decomposable(gamma, budget);
        if (r.outcome == Outcome::Budget) return kExitBudget;
        if (!r.is_decomposable()) {
            std::cout << "dual complex is not vertex decomposable\n";
            return kExitFails;
        }
        cert = io::to_json(r.certificate);
    } else if (kind == "quotients") {
        LinearQuotientsResult r = has_linear_quotients(complement(c).circuits(), budget);
        if (r.outcome == Outcome::Budget) return kExitBudget;
        if (!r.has_quotients()) {
            std::cout << "no linear quotients\n";
            return kExitFails;
        }
        cert = io::to_json(*r.order);
    } else if (kind == "edgeorder") {
        cert = io::to_json(chordal_edge_order(c, budget));
    } else {
        std::cerr << "unknown certificate kind '" << kind << "'\n";
        return kExitUsage;
    }
    if (out_path.empty()) {
        std::cout << cert.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        out << cert.dump(2) << '\n';
        std::cout << "wrote " << out_path << '\n';
    }
    return kExitHolds;
}

int run_sweep(const std::string& spec_path, const std::string& corpus, const Options& opt) {
    std::ifstream in(spec_path);
    if (!in) throw std::runtime_error("cannot open " + spec_path);
    json spec = json::parse(in);
    harness::GenSpec gen;
    gen.n = spec.value("n", gen.n);
    gen.d = spec.value("d", gen.d);
    gen.density = spec.value("density", gen.density);
    gen.seed = spec.value("seed", gen.seed);
    gen.count = spec.value("count", gen.count);
    if (spec.contains("family")) gen.family = harness::family_from_string(spec["family"].get<std::string>());
    SearchBudget budget = budget_of(opt);
    if (spec.contains("budget")) budget.max_nodes = spec["budget"].get<std::size_t>();

    std::vector<std::string> ids;
    const json& t = spec.at("theorem");
    if (t.is_string())
        ids.push_back(t.get<std::string>());
    else
        for (auto& x : t) ids.push_back(x.get<std::string>());

    bool all_ok = true;
    json out = json::array();
    for (const std::string& id : ids) {
        harness::SweepReport rep = harness::sweep(id, gen, budget, corpus);
        all_ok = all_ok && rep.ok();
        std::cout << rep.id << ": pass=" << rep.pass << " fail=" << rep.fail << " skip=" << rep.skip
                  << " budget=" << rep.budget_exhausted << (rep.aborted ? " [aborted]" : "") << '\n';
        for (auto& f : rep.failures) std::cout << "  counterexample:\n" << f;
        for (auto& f : rep.findings) std::cout << "  finding:\n" << f;
        out.push_back({{"id", rep.id},
                       {"pass", rep.pass},
                       {"fail", rep.fail},
                       {"skip", rep.skip},
                       {"budget", rep.budget_exhausted}});
    }
    if (opt.json_output) std::cout << out.dump(2) << '\n';
    return all_ok ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordal clutters: chordality certificates, Alexander duality, exact homology, linear quotients"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("CHORDAL_BUDGET")) opt.budget_nodes = std::strtoull(env, nullptr, 10);
    app.add_option("--field", opt.field, "coefficient field: gf2 | rat | both")->check(CLI::IsMember({"gf2", "rat", "both"}));
    app.add_option("--budget", opt.budget_nodes, "search node budget (also CHORDAL_BUDGET)");
    app.add_flag("--json", opt.json_output, "machine-readable output");

    std::string property, path, cert_path, out_path, action, face_arg, corpus_dir;
    int vertex_arg = 0;
    int times = 1;
    bool use_clique_complex = false;
    std::vector<std::string> rest;

    auto add = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };
    CLI::App* check = add("check", "decide a property of a clutter");
    check->add_option("property", property,
                      "chordal | vdec | wchordal | dchorded | cfchordal | cftree | linres | linquot")
        ->required();
    check->add_option("file", path, "clutter file")->required();

    CLI::App* dual = add("dual", "print the dual clutter C∨");
    dual->add_option("file", path)->required();

    CLI::App* asc = add("ascent", "print the ascent C+");
    asc->add_option("file", path)->required();
    asc->add_option("--times", times, "iterate the ascent");

    CLI::App* hom = add("homology", "reduced homology profile of ⟨C⟩ (or Δ(C) with --clique)");
    hom->add_option("file", path)->required();
    hom->add_flag("--clique", use_clique_complex, "use the clique complex Δ(C)");

    CLI::App* betti = add("betti", "graded Betti table of I(complement(C))");
    betti->add_option("file", path)->required();

    CLI::App* quo = add("quotients", "admissible orders: find | verify | ascend | append | restrict");
    quo->add_option("action", action)->required();
    quo->add_option("args", rest, "order/clutter files");
    quo->add_option("--face", face_arg, "face labels for append, e.g. '1 2 5'");
    quo->add_option("--vertex", vertex_arg, "vertex label for restrict");
    quo->add_option("-o,--out", out_path, "write the resulting order here");

    CLI::App* certify = add("certify", "emit a certificate: chordal | vdec | quotients | edgeorder");
    certify->add_option("kind", property)->required();
    certify->add_option("file", path)->required();
    certify->add_option("-o,--out", out_path, "certificate output path");

    CLI::App* verify = add("verify", "replay a certificate against a clutter");
    verify->add_option("certificate", cert_path)->required();
    verify->add_option("file", path)->required();

    CLI::App* sweep = add("sweep", "run a theorem sweep from a GenSpec JSON");
    sweep->add_option("spec", path, "JSON: {theorem, n, d, density, seed, count, family, budget}")->required();
    sweep->add_option("--corpus", corpus_dir, "directory for counterexamples and findings");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return run_check(property, path, opt);
        if (*dual) {
            Clutter c = io::read_clutter_file(path);
            GeneralClutter dv = dual_clutter(c);
            if (opt.json_output)
                std::cout << json{{"n", c.n()}, {"edges", io::faces_to_json(dv.edges())}}.dump(2) << '\n';
            else
                std::cout << io::write_general_clutter(dv);
            return kExitHolds;
        }
        if (*asc) {
            Clutter c = io::read_clutter_file(path);
            for (int i = 0; i < times; ++i) c = ascent(c);
            if (opt.json_output)
                std::cout << io::clutter_to_json(c).dump(2) << '\n';
            else
                std::cout << io::write_clutter(c);
            return kExitHolds;
        }
        if (*hom) {
            Clutter c = io::read_clutter_file(path);
            SimplicialComplex d = use_clique_complex ? clique_complex(c) : span_complex(c);
            json j = json::object();
            std::string text;
            for (FieldTag f : fields_of(opt)) {
                HomologyProfile p = reduced_homology(d, f);
                j[f == FieldTag::GF2 ? "gf2" : "rational"] = io::to_json(p);
                text += std::string(field_name(f)) + ":";
                for (auto& [i, h] : p.dims) text += " H" + std::to_string(i) + "=" + std::to_string(h);
                text += "\n";
            }
            emit(opt, j, text);
            return kExitHolds;
        }
        if (*betti) {
            Clutter c = io::read_clutter_file(path);
            json j = json::object();
            std::string text;
            for (FieldTag f : fields_of(opt)) {
                BettiTable t = graded_betti(clique_complex(c), f);
                j[f == FieldTag::GF2 ? "gf2" : "rational"] = io::to_json(t);
                text += std::string(field_name(f)) + ":\n" + io::format_betti_table(t);
            }
            emit(opt, j, text);
            return kExitHolds;
        }
        if (*quo) return run_quotients(action, rest, opt, face_arg, vertex_arg, out_path);
        if (*certify) return run_certify(property, path, out_path, opt);
        if (*verify) {
            std::ifstream in(cert_path);
            if (!in) throw std::runtime_error("cannot open " + cert_path);
            json cert = json::parse(in);
            Clutter c = io::read_clutter_file(path);
            io::VerifyResult r = io::verify_certificate(cert, c);
            emit(opt, {{"kind", r.kind}, {"ok", r.ok}, {"message", r.message}}, r.message + "\n");
            return r.ok ? kExitHolds : kExitFails;
        }
        if (*sweep) return run_sweep(path, corpus_dir, opt);
    } catch (const BudgetError&) {
        std::cerr << "search budget exhausted\n";
        return kExitBudget;
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
