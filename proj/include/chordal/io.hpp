#pragma once

#include <iosfwd>
#include <string>

#include "chordal/ascent.hpp"
#include "chordal/chordality.hpp"
#include "chordal/quotients.hpp"

#include <json.hpp>

namespace chordal::io {

/// Clutter text format: line 1 is "n d"; each following non-empty line is one
/// circuit as ascending space-separated 1-based labels; '#' starts a comment.
/// Writing is canonical (ascending labels, circuits in ascending mask order)
/// so write∘read∘write is bit-exact.  A JSON mirror
/// {"n":…, "d":…, "circuits":[[…],…]} carries the same data.
Clutter read_clutter(std::istream& in);
Clutter read_clutter_file(const std::string& path);
std::string write_clutter(const Clutter& c);
nlohmann::json clutter_to_json(const Clutter& c);
Clutter clutter_from_json(const nlohmann::json& j);

/// General (mixed-cardinality) clutters use "*" in place of d; uniform files
/// parse too.
GeneralClutter read_general_clutter(std::istream& in);
GeneralClutter read_general_clutter_file(const std::string& path);
std::string write_general_clutter(const GeneralClutter& c);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int l, const std::string& what) : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}
};

// --- certificates ---

nlohmann::json to_json(const EliminationCertificate& cert);
nlohmann::json to_json(const SheddingCertificate& cert);
nlohmann::json to_json(const AdmissibleOrder& order);
nlohmann::json to_json(const EdgeOrder& order);

EliminationCertificate elimination_from_json(const nlohmann::json& j);
SheddingCertificate shedding_from_json(const nlohmann::json& j);
AdmissibleOrder admissible_order_from_json(const nlohmann::json& j);
EdgeOrder edge_order_from_json(const nlohmann::json& j);

/// Replays any serialized certificate against a clutter: elimination orders
/// against C itself, shedding trees against ⟨C∨⟩, admissible orders against
/// the generators of I(complement(C)), edge orders against the graph.
struct VerifyResult {
    bool ok = false;
    std::string kind;
    std::string message;
};

VerifyResult verify_certificate(const nlohmann::json& cert, const Clutter& c);

// --- reports and tables ---

nlohmann::json to_json(const HomologyProfile& p);
nlohmann::json to_json(const BettiTable& t);
std::string format_betti_table(const BettiTable& t);

std::vector<int> face_labels(Mask m);
nlohmann::json faces_to_json(const std::vector<Mask>& faces);
std::vector<Mask> faces_from_json(const nlohmann::json& j);

}  // namespace chordal::io
