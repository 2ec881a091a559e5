#include "chordal/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chordal::io {

namespace {

using nlohmann::json;

struct Header {
    int n = 0;
    bool general = false;
    int d = -1;
};

Header parse_header(const std::string& line, int lineno) {
    std::istringstream ss(line);
    Header h;
    std::string dtok;
    if (!(ss >> h.n >> dtok)) throw ParseError(lineno, "expected header 'n d'");
    if (h.n < 0 || h.n > kMaxVertices) throw ParseError(lineno, "vertex count out of range (0..64)");
    if (dtok == "*") {
        h.general = true;
    } else {
        try {
            h.d = std::stoi(dtok);
        } catch (...) {
            throw ParseError(lineno, "bad dimension '" + dtok + "'");
        }
        if (h.d < 0) throw ParseError(lineno, "dimension must be >= 0");
    }
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing tokens after header");
    return h;
}

std::string strip_comment(std::string line) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    return line;
}

std::vector<std::pair<int, Mask>> parse_faces(std::istream& in, int n, int& lineno) {
    std::vector<std::pair<int, Mask>> out;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(strip_comment(line));
        std::vector<int> labels;
        int v;
        while (ss >> v) labels.push_back(v);
        if (!ss.eof()) throw ParseError(lineno, "bad vertex label");
        if (labels.empty()) continue;
        for (int l : labels)
            if (l < 1 || l > n) throw ParseError(lineno, "label " + std::to_string(l) + " outside 1.." + std::to_string(n));
        Mask m;
        try {
            m = face_from_labels(labels);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        out.emplace_back(lineno, m);
    }
    return out;
}

}  // namespace

Clutter read_clutter(std::istream& in) {
    std::string line;
    int lineno = 0;
    Header h;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        h = parse_header(line, lineno);
        break;
    }
    if (h.n == 0 && lineno == 0) throw ParseError(0, "empty file");
    if (h.general) throw ParseError(lineno, "general clutter file where a uniform one is required");
    std::vector<Mask> circuits;
    for (auto& [ln, m] : parse_faces(in, h.n, lineno)) {
        if (face_dim(m) != h.d)
            throw ParseError(ln, "circuit " + face_to_string(m) + " is not " + std::to_string(h.d) + "-dimensional");
        circuits.push_back(m);
    }
    return Clutter(full_mask(h.n), h.d, std::move(circuits));
}

Clutter read_clutter_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (in.peek() == '{') {
        json j = json::parse(in);
        return clutter_from_json(j);
    }
    return read_clutter(in);
}

std::string write_clutter(const Clutter& c) {
    std::ostringstream out;
    out << c.n() << ' ' << c.dim() << '\n';
    for (Mask f : c.circuits()) {
        bool first = true;
        for (int l : labels_of(f)) {
            if (!first) out << ' ';
            out << l;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

json clutter_to_json(const Clutter& c) {
    json j;
    j["n"] = c.n();
    j["d"] = c.dim();
    j["circuits"] = faces_to_json(c.circuits());
    return j;
}

Clutter clutter_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    std::vector<Mask> circuits;
    for (auto& f : j.at("circuits")) circuits.push_back(face_from_labels(f.get<std::vector<int>>()));
    return Clutter(full_mask(n), d, std::move(circuits));
}

GeneralClutter read_general_clutter(std::istream& in) {
    std::string line;
    int lineno = 0;
    Header h;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        h = parse_header(line, lineno);
        break;
    }
    std::vector<Mask> edges;
    for (auto& [ln, m] : parse_faces(in, h.n, lineno)) {
        if (!h.general && face_dim(m) != h.d)
            throw ParseError(ln, "edge " + face_to_string(m) + " is not " + std::to_string(h.d) + "-dimensional");
        edges.push_back(m);
    }
    return GeneralClutter(full_mask(h.n), std::move(edges));
}

GeneralClutter read_general_clutter_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_general_clutter(in);
}

std::string write_general_clutter(const GeneralClutter& c) {
    std::ostringstream out;
    out << c.n() << " *\n";
    for (Mask e : c.edges()) {
        bool first = true;
        for (int l : labels_of(e)) {
            if (!first) out << ' ';
            out << l;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<int> face_labels(Mask m) { return labels_of(m); }

json faces_to_json(const std::vector<Mask>& faces) {
    json arr = json::array();
    for (Mask f : faces) arr.push_back(labels_of(f));
    return arr;
}

std::vector<Mask> faces_from_json(const json& j) {
    std::vector<Mask> out;
    for (auto& f : j) out.push_back(face_from_labels(f.get<std::vector<int>>()));
    return out;
}

json to_json(const EliminationCertificate& cert) {
    return json{{"kind", "elimination"}, {"steps", faces_to_json(cert.steps)}};
}

namespace {

json shedding_node_to_json(const SheddingCertificate& node) {
    if (!node) throw std::invalid_argument("empty shedding certificate");
    if (node->leaf) return json{{"simplex", true}};
    return json{{"vertex", node->vertex + 1},
                {"link", shedding_node_to_json(node->link)},
                {"deletion", shedding_node_to_json(node->deletion)}};
}

SheddingCertificate shedding_node_from_json(const json& j) {
    auto node = std::make_shared<SheddingNode>();
    if (j.contains("simplex")) return node;
    node->leaf = false;
    node->vertex = j.at("vertex").get<int>() - 1;
    node->link = shedding_node_from_json(j.at("link"));
    node->deletion = shedding_node_from_json(j.at("deletion"));
    return node;
}

}  // namespace

json to_json(const SheddingCertificate& cert) {
    return json{{"kind", "shedding"}, {"tree", shedding_node_to_json(cert)}};
}

json to_json(const AdmissibleOrder& order) {
    return json{{"kind", "admissible_order"}, {"faces", faces_to_json(order.faces)}};
}

json to_json(const EdgeOrder& order) {
    return json{{"kind", "edge_order"}, {"edges", faces_to_json(order.edges)}};
}

EliminationCertificate elimination_from_json(const json& j) {
    return EliminationCertificate{faces_from_json(j.at("steps"))};
}

SheddingCertificate shedding_from_json(const json& j) { return shedding_node_from_json(j.at("tree")); }

AdmissibleOrder admissible_order_from_json(const json& j) {
    return AdmissibleOrder{faces_from_json(j.at("faces"))};
}

EdgeOrder edge_order_from_json(const json& j) { return EdgeOrder{faces_from_json(j.at("edges"))}; }

VerifyResult verify_certificate(const json& cert, const Clutter& c) {
    VerifyResult r;
    r.kind = cert.value("kind", "");
    if (r.kind == "elimination") {
        r.ok = replay_elimination(c, elimination_from_json(cert));
        r.message = r.ok ? "elimination sequence replays to the empty clutter"
                         : "elimination sequence fails to replay";
    } else if (r.kind == "shedding") {
        r.ok = replay_shedding(span_complex(dual_clutter(c)), shedding_from_json(cert));
        r.message = r.ok ? "shedding tree verifies on the dual complex"
                         : "shedding tree fails on the dual complex";
    } else if (r.kind == "admissible_order") {
        AdmissibleOrder order = admissible_order_from_json(cert);
        std::vector<Mask> gens = complement(c).circuits();
        std::vector<Mask> given = order.faces;
        std::sort(given.begin(), given.end());
        if (given != gens) {
            r.message = "order is not a permutation of the complement's generators";
        } else {
            AdmissibleCheck chk = is_admissible_order(order.faces);
            r.ok = chk.ok;
            r.message = chk.ok ? "order is admissible"
                               : "admissibility fails at positions (" + std::to_string(chk.i + 1) + ", " +
                                     std::to_string(chk.j + 1) + ")";
        }
    } else if (r.kind == "edge_order") {
        r.ok = replay_edge_order(c, edge_order_from_json(cert).edges);
        r.message = r.ok ? "edge order replays" : "edge order fails to replay";
    } else {
        r.message = "unknown certificate kind '" + r.kind + "'";
    }
    return r;
}

json to_json(const HomologyProfile& p) {
    json j = json::object();
    for (auto& [i, d] : p.dims) j[std::to_string(i)] = d;
    return j;
}

json to_json(const BettiTable& t) {
    json j = json::object();
    for (auto& [ij, b] : t.beta) {
        if (b == 0) continue;
        j[std::to_string(ij.first) + "," + std::to_string(ij.second)] = b;
    }
    return j;
}

std::string format_betti_table(const BettiTable& t) {
    int max_i = 0, min_j = 0, max_j = 0;
    bool any = false;
    for (auto& [ij, b] : t.beta) {
        if (b == 0) continue;
        max_i = std::max(max_i, ij.first);
        if (!any) {
            min_j = max_j = ij.second;
            any = true;
        }
        min_j = std::min(min_j, ij.second);
        max_j = std::max(max_j, ij.second);
    }
    if (!any) return "(zero Betti table)\n";
    std::ostringstream out;
    out << "j\\i ";
    for (int i = 0; i <= max_i; ++i) out << '\t' << i;
    out << '\n';
    for (int j = min_j; j <= max_j; ++j) {
        out << j << "   ";
        for (int i = 0; i <= max_i; ++i) {
            long long b = t.at(i, j);
            out << '\t';
            if (b)
                out << b;
            else
                out << '.';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace chordal::io
