#pragma once

#include <string>
#include <vector>

namespace limone {

// One step in the reasoning chain attached to a verdict.  The label is a
// stable machine-readable key; the statement is the mathematical fact the
// step relies on, phrased so the report is self-contained.
struct Justification {
    std::string label;
    std::string statement;

    bool operator==(const Justification&) const = default;
};

// The fixed catalogue of facts the analyses cite.  Keeping the statements in
// one place guarantees identical wording across reports.
namespace justify {

inline Justification rank_plateau() {
    return {"rank-plateau",
            "Ranks of the iterated image subgroups are weakly decreasing, so "
            "they reach a plateau after at most rank-many steps."};
}

inline Justification plateau_injectivity() {
    return {"plateau-injectivity",
            "At the first rank plateau the restricted map is injective: a "
            "free group of finite rank is Hopfian, so a surjection from the "
            "plateau subgroup onto an equal-rank image is an isomorphism "
            "onto that image."};
}

inline Justification ml_constant_tail() {
    return {"ml-constant-tail",
            "Once two consecutive image subgroups coincide the tower is "
            "constant from that point on, and the Mittag-Leffler condition "
            "holds with the plateau subgroup as the stable image."};
}

inline Justification ml_strict_descent() {
    return {"ml-strict-descent",
            "If the image subgroup drops again after the rank plateau, "
            "injectivity of the restricted map forces the images to "
            "decrease strictly forever, so no stable image exists and the "
            "Mittag-Leffler condition fails."};
}

inline Justification ml_lim1_trivial() {
    return {"ml-implies-lim1-trivial",
            "A tower of groups satisfying the Mittag-Leffler condition has "
            "trivial lim1."};
}

inline Justification not_ml_lim1_nontrivial() {
    return {"not-ml-implies-lim1-nontrivial",
            "For a tower of countable groups, trivial lim1 implies the "
            "Mittag-Leffler condition; failure of Mittag-Leffler therefore "
            "certifies a nontrivial lim1."};
}

inline Justification abelianization_obstruction() {
    return {"abelianization-obstruction",
            "Abelianization carries the image tower of the endomorphism "
            "onto the lattice tower of its integer matrix, so a "
            "Mittag-Leffler failure of the lattice tower already forces "
            "Mittag-Leffler failure of the free tower."};
}

inline Justification lattice_index_determinant() {
    return {"lattice-index-determinant",
            "The index of the image of a full-rank lattice endomorphism "
            "equals the absolute value of its determinant, so the "
            "stabilized lattice tower is constant exactly when that "
            "determinant is a unit."};
}

inline Justification border_forcing_transfer() {
    return {"border-forcing-transfer",
            "When the substitution forces the border, the tiling space is "
            "the inverse limit of a tower of wedges of circles whose "
            "bonding maps realize the substitution, so its fundamental "
            "pro-group invariants agree with those of the rose tower."};
}

inline Justification connected_gluing_surjection() {
    return {"connected-gluing-surjection",
            "If the gluing complex recording legal two-letter words is "
            "connected, collapsing it realizes the fundamental pro-group of "
            "the tiling space as a pro-quotient of the rose tower, so a "
            "lim1 obstruction of the rose tower passes to the tiling "
            "space."};
}

inline Justification stability_shape() {
    return {"stable-wedge-shape",
            "A Mittag-Leffler rose tower stabilizes to a finite-rank free "
            "group, so the space is stable with the shape of a wedge of "
            "that many circles."};
}

inline Justification lim1_obstructs_stability() {
    return {"lim1-obstructs-stability",
            "A stable space has Mittag-Leffler fundamental pro-group, so a "
            "nontrivial lim1 of that tower rules stability out."};
}

inline Justification no_surface_embedding() {
    return {"no-surface-embedding",
            "A one-dimensional continuum embedded in a closed surface has "
            "trivial lim1 of its fundamental pro-group, so a nontrivial "
            "lim1 obstructs every embedding into a surface."};
}

inline Justification torus_complement_cohomology() {
    return {"torus-complement-cohomology",
            "Removing k points from a torus of dimension d+1 kills the "
            "cohomology in the top degree and adds k-1 classes in degree d; "
            "the lower degrees keep the binomial ranks of the torus."};
}

inline Justification divisible_limit() {
    return {"divisible-limit",
            "A stabilized rank-one lattice tower with bonding determinant q "
            "has first Cech cohomology the group of q-adic rationals, which "
            "is not finitely generated."};
}

inline Justification projection_rank_bound() {
    return {"projection-rank-bound",
            "An expanding attractor projected along n independent "
            "directions onto a d-dimensional branched manifold has first "
            "Cech cohomology of rank at least n+d."};
}

inline Justification attractor_rank_cap() {
    return {"attractor-rank-cap",
            "A codimension-one attractor locally a product of a "
            "d-dimensional disc and a Cantor set has first Cech cohomology "
            "of rank at most d+1."};
}

} // namespace justify

} // namespace limone
