#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rules.hpp"
#include "verdicts.hpp"
#include "version.hpp"

namespace limone {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise, so arbitrarily large entries survive both
// directions.
inline json json_of_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw parse_error("expected an integer or a decimal string");
}

inline json json_of_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_of_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline IntMatrix matrix_from_json(const json& j) {
    IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const json& rows = j.at("entries");
    if (rows.size() != m.rows()) throw parse_error("matrix row count mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (rows[i].size() != m.cols()) throw parse_error("matrix column count mismatch");
        for (std::size_t jj = 0; jj < m.cols(); ++jj)
            m.at(i, jj) = int_from_json(rows[i][jj]);
    }
    return m;
}

// Words serialize as signed 1-based letter indices.
inline json json_of_word(const Word& w) {
    json out = json::array();
    for (const Syllable& s : w.syllables()) out.push_back((s.letter + 1) * s.sign);
    return out;
}

inline const char* to_string(Lim1 v) {
    return v == Lim1::Trivial ? "Trivial" : "Nontrivial";
}

inline const char* to_string(LVerdict v) {
    switch (v) {
    case LVerdict::Trivial: return "Trivial";
    case LVerdict::Nontrivial: return "Nontrivial";
    default: return "Inconclusive";
    }
}

inline const char* to_string(Stability v) {
    switch (v) {
    case Stability::Yes: return "Yes";
    case Stability::No: return "No";
    default: return "Inconclusive";
    }
}

inline const char* to_string(Embeddability v) {
    return v == Embeddability::Obstructed ? "Obstructed" : "NoObstructionFound";
}

inline const char* to_string(H1Validity v) {
    return v == H1Validity::Exact ? "Exact" : "RoseModelOnly";
}

inline const char* to_string(BorderRoute v) {
    switch (v) {
    case BorderRoute::ProperPower: return "ProperPower";
    case BorderRoute::NeighborDetermination: return "NeighborDetermination";
    default: return "None";
    }
}

inline Lim1 lim1_from_string(const std::string& s) {
    if (s == "Trivial") return Lim1::Trivial;
    if (s == "Nontrivial") return Lim1::Nontrivial;
    throw parse_error("unknown lim1 verdict: " + s);
}

inline LVerdict l_verdict_from_string(const std::string& s) {
    if (s == "Trivial") return LVerdict::Trivial;
    if (s == "Nontrivial") return LVerdict::Nontrivial;
    if (s == "Inconclusive") return LVerdict::Inconclusive;
    throw parse_error("unknown L verdict: " + s);
}

inline Stability stability_from_string(const std::string& s) {
    if (s == "Yes") return Stability::Yes;
    if (s == "No") return Stability::No;
    if (s == "Inconclusive") return Stability::Inconclusive;
    throw parse_error("unknown stability verdict: " + s);
}

inline Embeddability embeddability_from_string(const std::string& s) {
    if (s == "Obstructed") return Embeddability::Obstructed;
    if (s == "NoObstructionFound") return Embeddability::NoObstructionFound;
    throw parse_error("unknown embeddability verdict: " + s);
}

inline H1Validity validity_from_string(const std::string& s) {
    if (s == "Exact") return H1Validity::Exact;
    if (s == "RoseModelOnly") return H1Validity::RoseModelOnly;
    throw parse_error("unknown validity tag: " + s);
}

inline BorderRoute route_from_string(const std::string& s) {
    if (s == "ProperPower") return BorderRoute::ProperPower;
    if (s == "NeighborDetermination") return BorderRoute::NeighborDetermination;
    if (s == "None") return BorderRoute::None;
    throw parse_error("unknown border route: " + s);
}

inline json json_of(const ShapeModel& s) {
    json j{{"wedge_rank", s.wedge_rank}};
    if (s.torus_punctures) j["torus_punctures"] = *s.torus_punctures;
    return j;
}

inline ShapeModel shape_from_json(const json& j) {
    ShapeModel s;
    s.wedge_rank = j.at("wedge_rank").get<std::size_t>();
    if (j.contains("torus_punctures"))
        s.torus_punctures = j.at("torus_punctures").get<std::size_t>();
    return s;
}

inline json json_of(const H1Presentation& h) {
    json poly = json::array();
    for (const Int& c : h.characteristic_polynomial) poly.push_back(json_of_int(c));
    return json{{"generators_rank", h.generators_rank},
                {"bonding", json_of_matrix(h.bonding)},
                {"characteristic_polynomial", std::move(poly)},
                {"eventual_rank", h.eventual_rank},
                {"restricted_determinant", json_of_int(h.restricted_determinant)},
                {"validity", to_string(h.validity)}};
}

inline H1Presentation h1_from_json(const json& j) {
    H1Presentation h;
    h.generators_rank = j.at("generators_rank").get<std::size_t>();
    h.bonding = matrix_from_json(j.at("bonding"));
    for (const json& c : j.at("characteristic_polynomial"))
        h.characteristic_polynomial.push_back(int_from_json(c));
    h.eventual_rank = j.at("eventual_rank").get<std::size_t>();
    h.restricted_determinant = int_from_json(j.at("restricted_determinant"));
    h.validity = validity_from_string(j.at("validity").get<std::string>());
    return h;
}

inline json json_of(const BorderReport& b) {
    json sets = json::array();
    for (const auto& set : b.extension_sets) {
        json pairs = json::array();
        for (const auto& [l, r] : set) pairs.push_back(json::array({l + 1, r + 1}));
        sets.push_back(std::move(pairs));
    }
    return json{{"forces", b.forces},
                {"level", b.level},
                {"border_cap", b.border_cap},
                {"proper_cap", b.proper_cap},
                {"route", to_string(b.route)},
                {"extension_sets", std::move(sets)}};
}

inline BorderReport border_from_json(const json& j) {
    BorderReport b;
    b.forces = j.at("forces").get<bool>();
    b.level = j.at("level").get<unsigned>();
    b.border_cap = j.at("border_cap").get<unsigned>();
    b.proper_cap = j.at("proper_cap").get<unsigned>();
    b.route = route_from_string(j.at("route").get<std::string>());
    for (const json& pairs : j.at("extension_sets")) {
        std::set<std::pair<int, int>> set;
        for (const json& p : pairs)
            set.insert({p.at(0).get<int>() - 1, p.at(1).get<int>() - 1});
        b.extension_sets.push_back(std::move(set));
    }
    return b;
}

inline json json_of(const AbelianTowerReport& t) {
    return json{{"lattice_ranks", t.lattice_ranks},
                {"plateau_index", t.plateau_index},
                {"ml", t.ml},
                {"restricted_determinant", json_of_int(t.restricted_determinant)}};
}

inline json json_of(const TowerReport& t) {
    json basis = json::array();
    for (const Word& w : t.stabilized_basis.basis_words) basis.push_back(json_of_word(w));
    json induced = json::array();
    for (const Word& w : t.induced_endo.images()) induced.push_back(json_of_word(w));
    return json{{"ranks", t.ranks},
                {"plateau_index", t.plateau_index},
                {"ml", t.ml},
                {"stabilized_basis_words", std::move(basis)},
                {"induced_endo_images", std::move(induced)}};
}

// Substitution verdicts are about the substitution data as given: the
// analysis does not decide whether the subshift is aperiodic, and the
// tiling space statements assume that it is.
inline constexpr const char* substitution_caveat =
    "verdicts describe the substitution as given; aperiodicity of its "
    "subshift is assumed, not checked";

inline json json_of(const TilingSpaceReport& r) {
    return json{{"caveat", substitution_caveat},
                {"primitive", r.primitive},
                {"rose_lim1", to_string(r.rose_lim1)},
                {"border", json_of(r.border)},
                {"gluing_connected", r.gluing_connected},
                {"l_verdict", to_string(r.l_verdict)},
                {"notes", r.notes},
                {"stable", to_string(r.stable)},
                {"shape_model", r.shape_model ? json_of(*r.shape_model) : json(nullptr)},
                {"surface_embedding", to_string(r.surface_embedding)},
                {"h1", json_of(r.h1)}};
}

inline json json_of(const EndoReport& r) {
    return json{{"lim1", to_string(r.lim1)},
                {"stable", to_string(r.stable)},
                {"shape_model", r.shape_model ? json_of(*r.shape_model) : json(nullptr)},
                {"h1", json_of(r.h1)},
                {"tower", json_of(r.tower)},
                {"abelian_tower", json_of(r.abelian)}};
}

inline json json_of(const TorusCohomology& t) {
    json ranks = json::array();
    for (const Int& r : t.ranks) ranks.push_back(json_of_int(r));
    return json{{"dimension", t.dimension},
                {"punctures", t.punctures},
                {"ranks", std::move(ranks)}};
}

inline json json_of(const ProjectionCheck& p) {
    return json{{"dimension", p.dimension},
                {"directions", p.directions},
                {"h1_lower_bound", p.h1_lower_bound},
                {"attractor_h1_cap", p.attractor_h1_cap},
                {"obstructed", p.obstructed}};
}

// Report wrapper with a fixed four-field schema.
struct ReportEnvelope {
    std::string tool_version;
    json input;
    json verdicts;
    std::vector<Justification> justifications;

    bool operator==(const ReportEnvelope&) const = default;
};

inline json json_of(const ReportEnvelope& e) {
    json js = json::array();
    for (const Justification& j : e.justifications)
        js.push_back(json{{"label", j.label}, {"statement", j.statement}});
    return json{{"tool_version", e.tool_version},
                {"input", e.input},
                {"verdicts", e.verdicts},
                {"justifications", std::move(js)}};
}

inline std::string serialize(const ReportEnvelope& e) { return json_of(e).dump(2) + "\n"; }

inline ReportEnvelope envelope_from_json(const json& j) {
    if (!j.is_object() || j.size() != 4 || !j.contains("tool_version") ||
        !j.contains("input") || !j.contains("verdicts") || !j.contains("justifications"))
        throw parse_error("report envelope must have exactly the four standard fields");
    ReportEnvelope e;
    e.tool_version = j.at("tool_version").get<std::string>();
    e.input = j.at("input");
    e.verdicts = j.at("verdicts");
    for (const json& item : j.at("justifications"))
        e.justifications.push_back(Justification{item.at("label").get<std::string>(),
                                                 item.at("statement").get<std::string>()});
    return e;
}

inline ReportEnvelope parse_envelope(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw parse_error(std::string("invalid report JSON: ") + ex.what());
    }
    try {
        return envelope_from_json(j);
    } catch (const json::exception& ex) {
        throw parse_error(std::string("malformed report envelope: ") + ex.what());
    }
}

template <typename Report>
ReportEnvelope make_envelope(const Report& report, json input) {
    ReportEnvelope e;
    e.tool_version = tool_version;
    e.input = std::move(input);
    e.verdicts = json_of(report);
    e.justifications = report.justification;
    return e;
}

inline std::vector<Justification> h1_justifications(const H1Presentation& h) {
    std::vector<Justification> js = {justify::lattice_index_determinant()};
    if (h.validity == H1Validity::Exact)
        js.push_back(justify::border_forcing_transfer());
    if (h.eventual_rank == 1 && abs(h.restricted_determinant) > 1)
        js.push_back(justify::divisible_limit());
    return js;
}

inline ReportEnvelope make_envelope(const H1Presentation& h, json input) {
    ReportEnvelope e;
    e.tool_version = tool_version;
    e.input = std::move(input);
    e.verdicts = json_of(h);
    e.verdicts["caveat"] = substitution_caveat;
    e.justifications = h1_justifications(h);
    return e;
}

// Typed readers for the flat report kinds; the verdict chain comes back from
// the envelope's justification list.
inline TilingSpaceReport tiling_from_envelope(const ReportEnvelope& e) {
    try {
        const json& v = e.verdicts;
        TilingSpaceReport r;
        r.primitive = v.at("primitive").get<bool>();
        r.rose_lim1 = lim1_from_string(v.at("rose_lim1").get<std::string>());
        r.border = border_from_json(v.at("border"));
        r.gluing_connected = v.at("gluing_connected").get<bool>();
        r.l_verdict = l_verdict_from_string(v.at("l_verdict").get<std::string>());
        r.notes = v.at("notes").get<std::vector<std::string>>();
        r.stable = stability_from_string(v.at("stable").get<std::string>());
        if (!v.at("shape_model").is_null())
            r.shape_model = shape_from_json(v.at("shape_model"));
        r.surface_embedding =
            embeddability_from_string(v.at("surface_embedding").get<std::string>());
        r.h1 = h1_from_json(v.at("h1"));
        r.justification = e.justifications;
        return r;
    } catch (const json::exception& ex) {
        throw parse_error(std::string("malformed tiling space report: ") + ex.what());
    }
}

inline TorusCohomology torus_from_envelope(const ReportEnvelope& e) {
    try {
        TorusCohomology t;
        t.dimension = e.verdicts.at("dimension").get<std::size_t>();
        t.punctures = e.verdicts.at("punctures").get<std::size_t>();
        for (const json& r : e.verdicts.at("ranks")) t.ranks.push_back(int_from_json(r));
        t.justification = e.justifications;
        return t;
    } catch (const json::exception& ex) {
        throw parse_error(std::string("malformed torus report: ") + ex.what());
    }
}

inline ProjectionCheck projection_from_envelope(const ReportEnvelope& e) {
    try {
        ProjectionCheck p;
        p.dimension = e.verdicts.at("dimension").get<std::size_t>();
        p.directions = e.verdicts.at("directions").get<std::size_t>();
        p.h1_lower_bound = e.verdicts.at("h1_lower_bound").get<std::size_t>();
        p.attractor_h1_cap = e.verdicts.at("attractor_h1_cap").get<std::size_t>();
        p.obstructed = e.verdicts.at("obstructed").get<bool>();
        p.justification = e.justifications;
        return p;
    } catch (const json::exception& ex) {
        throw parse_error(std::string("malformed projection report: ") + ex.what());
    }
}

// Text rendering.

inline std::string polynomial_to_string(const std::vector<Int>& coeff) {
    if (coeff.empty()) return "1";
    std::ostringstream out;
    const std::size_t degree = coeff.size() - 1;
    bool first = true;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        const Int& c = coeff[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const std::size_t power = degree - i;
        if (power == 0) {
            out << a;
        } else {
            if (a != 1) out << a << " ";
            out << "x";
            if (power > 1) out << "^" << power;
        }
    }
    if (first) return "0";
    return out.str();
}

inline void render_h1(std::ostringstream& out, const H1Presentation& h) {
    out << "H1 presentation ("
        << (h.validity == H1Validity::Exact ? "exact" : "rose model only") << ")\n";
    out << "  generators rank: " << h.generators_rank << "\n";
    out << "  bonding matrix: " << h.bonding.to_string() << "\n";
    out << "  characteristic polynomial: "
        << polynomial_to_string(h.characteristic_polynomial) << "\n";
    out << "  eventual rank: " << h.eventual_rank << "\n";
    out << "  restricted determinant: " << h.restricted_determinant << "\n";
}

inline void render_shape(std::ostringstream& out, const std::optional<ShapeModel>& shape) {
    if (!shape) return;
    out << "shape model: wedge of " << shape->wedge_rank << " circles";
    if (shape->torus_punctures)
        out << " (torus with " << *shape->torus_punctures
            << (*shape->torus_punctures == 1 ? " puncture)" : " punctures)");
    out << "\n";
}

inline void render_justifications(std::ostringstream& out,
                                  const std::vector<Justification>& js) {
    if (js.empty()) return;
    out << "justifications:\n";
    for (const Justification& j : js)
        out << "  [" << j.label << "] " << j.statement << "\n";
}

inline std::string render_text(const TilingSpaceReport& r, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "primitive: yes\n";
    out << "rose lim1: " << to_string(r.rose_lim1) << "\n";
    if (r.border.forces) {
        out << "border forcing: level " << r.border.level << " via "
            << to_string(r.border.route) << "\n";
    } else {
        out << "border forcing: unknown within caps (border " << r.border.border_cap
            << ", proper " << r.border.proper_cap << ")\n";
    }
    out << "extension sets:\n";
    for (std::size_t a = 0; a < r.border.extension_sets.size(); ++a) {
        out << "  " << alphabet.name(a) << ":";
        for (const auto& [l, rr] : r.border.extension_sets[a])
            out << " (" << alphabet.name(static_cast<std::size_t>(l)) << ", "
                << alphabet.name(static_cast<std::size_t>(rr)) << ")";
        out << "\n";
    }
    out << "gluing graph: " << (r.gluing_connected ? "connected" : "disconnected") << "\n";
    out << "L verdict: " << to_string(r.l_verdict) << "\n";
    for (const std::string& n : r.notes) out << "  note: " << n << "\n";
    out << "stable: " << to_string(r.stable) << "\n";
    render_shape(out, r.shape_model);
    out << "surface embedding: "
        << (r.surface_embedding == Embeddability::Obstructed ? "obstructed"
                                                             : "no obstruction found")
        << "\n";
    render_h1(out, r.h1);
    out << "caveat: " << substitution_caveat << "\n";
    render_justifications(out, r.justification);
    return out.str();
}

inline std::string render_text(const EndoReport& r, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "lim1: " << to_string(r.lim1) << "\n";
    out << "image ranks:";
    for (std::size_t rank : r.tower.ranks) out << " " << rank;
    out << " (plateau at step " << r.tower.plateau_index << ")\n";
    out << "tower Mittag-Leffler: " << (r.tower.ml ? "yes" : "no") << "\n";
    out << "stabilized image basis:";
    if (r.tower.stabilized_basis.basis_words.empty()) out << " (trivial)";
    for (std::size_t i = 0; i < r.tower.stabilized_basis.basis_words.size(); ++i)
        out << " " << r.tower.stabilized_basis.basis_alphabet.name(i) << " = "
            << r.tower.stabilized_basis.basis_words[i].to_string(alphabet) << ";";
    out << "\n";
    out << "induced endomorphism:";
    if (r.tower.induced_endo.alphabet().size() == 0) out << " (trivial)";
    for (std::size_t i = 0; i < r.tower.induced_endo.alphabet().size(); ++i)
        out << " " << r.tower.induced_endo.alphabet().name(i) << " -> "
            << r.tower.induced_endo.image(i).to_string(r.tower.induced_endo.alphabet())
            << ";";
    out << "\n";
    out << "abelian lattice ranks:";
    for (std::size_t rank : r.abelian.lattice_ranks) out << " " << rank;
    out << "\n";
    out << "abelian Mittag-Leffler: " << (r.abelian.ml ? "yes" : "no")
        << " (restricted determinant " << r.abelian.restricted_determinant << ")\n";
    out << "stable: " << to_string(r.stable) << "\n";
    render_shape(out, r.shape_model);
    render_h1(out, r.h1);
    render_justifications(out, r.justification);
    return out.str();
}

inline std::string render_text(const H1Presentation& h) {
    std::ostringstream out;
    render_h1(out, h);
    out << "caveat: " << substitution_caveat << "\n";
    render_justifications(out, h1_justifications(h));
    return out.str();
}

inline std::string render_text(const TorusCohomology& t) {
    std::ostringstream out;
    out << "torus dimension d+1 = " << t.dimension + 1 << ", punctures: " << t.punctures
        << "\n";
    for (std::size_t p = 0; p < t.ranks.size(); ++p)
        out << "  rank H^" << p << " = " << t.ranks[p] << "\n";
    render_justifications(out, t.justification);
    return out.str();
}

inline std::string render_text(const ProjectionCheck& p) {
    std::ostringstream out;
    out << "dimension: " << p.dimension << ", projection directions: " << p.directions
        << "\n";
    out << "H1 rank forced by the projection: at least " << p.h1_lower_bound << "\n";
    out << "H1 rank allowed for the attractor: at most " << p.attractor_h1_cap << "\n";
    out << "verdict: " << (p.obstructed ? "obstructed" : "no obstruction found") << "\n";
    render_justifications(out, p.justification);
    return out.str();
}

} // namespace limone
