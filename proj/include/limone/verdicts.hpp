#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "justification.hpp"
#include "substitution.hpp"
#include "tower.hpp"

namespace limone {

enum class LVerdict { Trivial, Nontrivial, Inconclusive };
enum class Stability { Yes, No, Inconclusive };
enum class Embeddability { Obstructed, NoObstructionFound };
enum class H1Validity { Exact, RoseModelOnly };

// Shape of a stable space: wedge of wedge_rank circles, which for rank at
// least two is also a torus with wedge_rank - 1 punctures.
struct ShapeModel {
    std::size_t wedge_rank = 0;
    std::optional<std::size_t> torus_punctures;

    bool operator==(const ShapeModel&) const = default;
};

// Direct-limit presentation of the first Cech cohomology: Z^rank with the
// bonding matrix acting on the right, stabilizing to a rank eventual_rank
// group on which the bonding restricts with the given determinant.  Validity
// records whether the presentation describes the space itself or only its
// rose model.
struct H1Presentation {
    std::size_t generators_rank = 0;
    IntMatrix bonding;
    std::vector<Int> characteristic_polynomial;
    std::size_t eventual_rank = 0;
    Int restricted_determinant = 1;
    H1Validity validity = H1Validity::Exact;

    bool operator==(const H1Presentation&) const = default;
};

inline H1Presentation h1_from_bonding(IntMatrix bonding, H1Validity validity) {
    AbelianTowerReport tower = abelian_tower(bonding);
    H1Presentation h;
    h.generators_rank = bonding.rows();
    h.characteristic_polynomial = characteristic_polynomial(bonding);
    h.eventual_rank = tower.lattice_ranks[tower.plateau_index];
    h.restricted_determinant = tower.restricted_determinant;
    h.validity = validity;
    h.bonding = std::move(bonding);
    return h;
}

struct AnalysisCaps {
    unsigned border = 8;
    unsigned proper = 8;
};

struct EndoReport {
    Lim1 lim1 = Lim1::Trivial;
    Stability stable = Stability::Yes;
    std::optional<ShapeModel> shape_model;
    H1Presentation h1;
    TowerReport tower;
    AbelianTowerReport abelian;
    std::vector<Justification> justification;

    bool operator==(const EndoReport&) const = default;
};

// Inverse limit of the rose tower of a free group endomorphism: stability is
// exactly triviality of lim1 here, since the tower itself is the space's
// defining system.
inline EndoReport analyze_endo(const FreeEndo& e) {
    Lim1Report lim1 = lim1_verdict(e);

    EndoReport rep;
    rep.lim1 = lim1.verdict;
    rep.tower = std::move(lim1.tower);
    rep.abelian = lim1.abelian;
    rep.justification = std::move(lim1.justification);

    if (rep.lim1 == Lim1::Trivial) {
        rep.stable = Stability::Yes;
        const std::size_t wedge = rep.tower.ranks[rep.tower.plateau_index];
        ShapeModel shape;
        shape.wedge_rank = wedge;
        if (wedge >= 2) shape.torus_punctures = wedge - 1;
        rep.shape_model = shape;
        rep.justification.push_back(justify::stability_shape());
    } else {
        rep.stable = Stability::No;
        rep.justification.push_back(justify::lim1_obstructs_stability());
    }

    rep.h1 = h1_from_bonding(abelianization(e).transpose(), H1Validity::Exact);
    if (rep.h1.eventual_rank == 1 && abs(rep.h1.restricted_determinant) > 1)
        rep.justification.push_back(justify::divisible_limit());
    return rep;
}

struct TilingSpaceReport {
    bool primitive = true;
    Lim1 rose_lim1 = Lim1::Trivial;
    BorderReport border;
    bool gluing_connected = false;
    LVerdict l_verdict = LVerdict::Inconclusive;
    std::vector<std::string> notes;
    Stability stable = Stability::Inconclusive;
    std::optional<ShapeModel> shape_model;
    Embeddability surface_embedding = Embeddability::NoObstructionFound;
    H1Presentation h1;
    std::vector<Justification> justification;

    bool operator==(const TilingSpaceReport&) const = default;
};

// Tiling space analysis.  Border forcing transfers every rose tower verdict;
// without it a nontrivial rose lim1 still passes to the space when the
// gluing graph is connected; otherwise the question stays open and the
// notes say which hypothesis failed.
inline TilingSpaceReport analyze_substitution(const Substitution& s, AnalysisCaps caps = {}) {
    if (!is_primitive(s))
        throw precondition_error("analysis requires a primitive substitution");

    Lim1Report rose = lim1_verdict(rose_endo(s));

    TilingSpaceReport rep;
    rep.primitive = true;
    rep.rose_lim1 = rose.verdict;
    rep.border = forces_border(s, caps.border, caps.proper);
    rep.gluing_connected = gluing_graph(s).connected;
    rep.h1 = h1_from_bonding(incidence_matrix(s).transpose(),
                             rep.border.forces ? H1Validity::Exact
                                               : H1Validity::RoseModelOnly);
    rep.justification = rose.justification;

    if (rep.border.forces) {
        rep.l_verdict =
            rose.verdict == Lim1::Trivial ? LVerdict::Trivial : LVerdict::Nontrivial;
        rep.justification.push_back(justify::border_forcing_transfer());
    } else if (rose.verdict == Lim1::Nontrivial && rep.gluing_connected) {
        rep.l_verdict = LVerdict::Nontrivial;
        rep.justification.push_back(justify::connected_gluing_surjection());
    } else {
        rep.l_verdict = LVerdict::Inconclusive;
        rep.notes.push_back("border forcing not certified within caps (border " +
                            std::to_string(caps.border) + ", proper " +
                            std::to_string(caps.proper) + ")");
        if (rose.verdict == Lim1::Trivial)
            rep.notes.push_back(
                "rose tower is Mittag-Leffler, but without border forcing the "
                "rose model may differ from the tiling space");
        else
            rep.notes.push_back(
                "rose tower fails Mittag-Leffler, but the gluing graph is "
                "disconnected, so the obstruction is not known to transfer");
    }

    switch (rep.l_verdict) {
    case LVerdict::Trivial: {
        rep.stable = Stability::Yes;
        const std::size_t wedge = rose.tower.ranks[rose.tower.plateau_index];
        ShapeModel shape;
        shape.wedge_rank = wedge;
        if (wedge >= 2) shape.torus_punctures = wedge - 1;
        rep.shape_model = shape;
        rep.surface_embedding = Embeddability::NoObstructionFound;
        rep.justification.push_back(justify::stability_shape());
        break;
    }
    case LVerdict::Nontrivial:
        rep.stable = Stability::No;
        rep.surface_embedding = Embeddability::Obstructed;
        rep.justification.push_back(justify::lim1_obstructs_stability());
        rep.justification.push_back(justify::no_surface_embedding());
        break;
    case LVerdict::Inconclusive:
        rep.stable = Stability::Inconclusive;
        rep.surface_embedding = Embeddability::NoObstructionFound;
        break;
    }
    return rep;
}

inline H1Presentation h1_presentation(const Substitution& s, AnalysisCaps caps = {}) {
    if (!is_primitive(s))
        throw precondition_error("analysis requires a primitive substitution");
    BorderReport border = forces_border(s, caps.border, caps.proper);
    return h1_from_bonding(incidence_matrix(s).transpose(),
                           border.forces ? H1Validity::Exact : H1Validity::RoseModelOnly);
}

inline Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc *= Int(n - k + i);
        acc /= Int(i);
    }
    return acc;
}

// Cohomology ranks of the (d+1)-torus with k points removed, in degrees
// 0..d+1: puncturing kills the top class and adds k-1 classes one degree
// down.
struct TorusCohomology {
    std::size_t dimension = 0;
    std::size_t punctures = 0;
    std::vector<Int> ranks;
    std::vector<Justification> justification;

    bool operator==(const TorusCohomology&) const = default;
};

inline TorusCohomology torus_minus_points(std::size_t d, std::size_t k) {
    if (d < 2) throw hypothesis_error("ambient fiber dimension must be at least 2");
    if (k < 1) throw hypothesis_error("at least one puncture is required");

    TorusCohomology t;
    t.dimension = d;
    t.punctures = k;
    t.ranks.reserve(d + 2);
    for (std::size_t p = 0; p < d; ++p) t.ranks.push_back(binomial(d + 1, p));
    t.ranks.push_back(Int(d + k));
    t.ranks.push_back(0);
    t.justification = {justify::torus_complement_cohomology()};
    return t;
}

inline std::size_t attractor_h1_bound(std::size_t d) {
    if (d < 2) throw hypothesis_error("attractor bound requires dimension at least 2");
    return d + 1;
}

// Rank comparison for projecting an expanding attractor along n independent
// directions: the projection forces first cohomology of rank at least n+d,
// while a codimension-one attractor allows at most d+1.
struct ProjectionCheck {
    std::size_t dimension = 0;
    std::size_t directions = 0;
    std::size_t h1_lower_bound = 0;
    std::size_t attractor_h1_cap = 0;
    bool obstructed = false;
    std::vector<Justification> justification;

    bool operator==(const ProjectionCheck&) const = default;
};

inline ProjectionCheck projection_check(std::size_t d, std::size_t n) {
    if (d < 2) throw hypothesis_error("projection check requires dimension at least 2");
    if (n < 1) throw hypothesis_error("at least one projection direction is required");

    ProjectionCheck p;
    p.dimension = d;
    p.directions = n;
    p.h1_lower_bound = n + d;
    p.attractor_h1_cap = attractor_h1_bound(d);
    p.obstructed = p.h1_lower_bound > p.attractor_h1_cap;
    p.justification = {justify::projection_rank_bound(), justify::attractor_rank_cap()};
    return p;
}

} // namespace limone
