#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "free_group.hpp"
#include "justification.hpp"
#include "lattice.hpp"
#include "stallings.hpp"

namespace limone {

// Restriction of e to the subgroup presented by the basis, expressed in that
// basis.  Throws if some basis image leaves the subgroup.
inline FreeEndo induced_restriction(const FreeEndo& e, const SubgroupBasis& basis) {
    std::vector<Word> images;
    images.reserve(basis.basis_words.size());
    for (const Word& b : basis.basis_words) {
        try {
            images.push_back(rewrite_in_basis(basis, apply(e, b)));
        } catch (const membership_error&) {
            throw consistency_error(
                "endomorphism does not preserve the subgroup of the given basis");
        }
    }
    return FreeEndo(basis.basis_alphabet, std::move(images));
}

inline bool is_automorphism(const FreeEndo& e) {
    return is_full(CoreGraph::from_generators(e.alphabet().size(), e.images()));
}

// Tower of iterated images G_n = im e^n, followed until the rank repeats.
// Ranks weakly decrease because G_{n+1} is generated by rank(G_n) elements,
// so the plateau arrives within rank-many steps.  At the plateau the
// restricted map is injective (free groups are Hopfian), hence the chain is
// constant from the plateau iff one more step changes nothing; otherwise it
// descends strictly forever and no stable image exists.
struct TowerReport {
    std::vector<std::size_t> ranks;
    std::size_t plateau_index = 0;
    bool ml = false;
    SubgroupBasis stabilized_basis;
    FreeEndo induced_endo;
    std::vector<Justification> justification;

    bool operator==(const TowerReport&) const = default;
};

inline TowerReport image_tower(const FreeEndo& e) {
    const std::size_t r = e.alphabet().size();

    std::vector<Word> gens;
    gens.reserve(r);
    for (std::size_t i = 0; i < r; ++i) gens.push_back(Word::letter(static_cast<int>(i)));

    std::vector<CoreGraph> graphs;
    std::vector<std::size_t> ranks;
    graphs.push_back(CoreGraph::from_generators(r, gens));
    ranks.push_back(graphs.back().rank());

    const std::size_t guard = r + 2;
    while (ranks.size() < 2 || ranks[ranks.size() - 1] != ranks[ranks.size() - 2]) {
        if (ranks.size() > guard)
            throw consistency_error("image ranks failed to reach a plateau");
        for (Word& g : gens) g = apply(e, g);
        graphs.push_back(CoreGraph::from_generators(r, gens));
        ranks.push_back(graphs.back().rank());
    }

    const std::size_t plateau = ranks.size() - 2;
    TowerReport report;
    report.ranks = std::move(ranks);
    report.plateau_index = plateau;
    report.ml = graphs_equal(graphs[plateau + 1], graphs[plateau]);
    report.stabilized_basis = spanning_basis(graphs[plateau]);
    report.induced_endo = induced_restriction(e, report.stabilized_basis);
    report.justification = {justify::rank_plateau(), justify::plateau_injectivity(),
                            report.ml ? justify::ml_constant_tail()
                                      : justify::ml_strict_descent()};
    return report;
}

// Lattice tower L_n = Z^r m^n of the abelianized endomorphism.  The chain is
// nested, the rank plateaus, and past the plateau the tower is constant iff
// the restricted map on the plateau lattice has unit determinant, since the
// image index equals the absolute determinant.
struct AbelianTowerReport {
    std::vector<std::size_t> lattice_ranks;
    std::size_t plateau_index = 0;
    bool ml = false;
    Int restricted_determinant = 1;

    bool operator==(const AbelianTowerReport&) const = default;
};

inline AbelianTowerReport abelian_tower(const IntMatrix& m) {
    if (!m.is_square()) throw dimension_error("lattice tower of a non-square matrix");
    const std::size_t r = m.rows();

    std::vector<Lattice> chain{Lattice::standard(r)};
    std::vector<std::size_t> ranks{r};
    const std::size_t guard = r + 2;
    while (ranks.size() < 2 || ranks[ranks.size() - 1] != ranks[ranks.size() - 2]) {
        if (ranks.size() > guard)
            throw consistency_error("lattice ranks failed to reach a plateau");
        chain.push_back(lattice_image(m, chain.back()));
        ranks.push_back(chain.back().rank());
    }

    AbelianTowerReport report;
    report.plateau_index = ranks.size() - 2;
    report.lattice_ranks = std::move(ranks);

    const Lattice& stable = chain[report.plateau_index];
    const std::size_t k = stable.rank();
    IntMatrix restricted(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> coords = stable.coordinates(row_times(stable.basis()[i], m));
        for (std::size_t j = 0; j < k; ++j) restricted.at(i, j) = coords[j];
    }
    report.restricted_determinant = determinant(restricted);
    report.ml = k == 0 || abs(report.restricted_determinant) == 1;
    return report;
}

enum class Lim1 { Trivial, Nontrivial };

// lim1 of the tower of iterated images.  For towers of countable groups the
// Mittag-Leffler condition is equivalent to trivial lim1, so the free tower
// decides the verdict; a Mittag-Leffler failure already visible after
// abelianization is cited as the cheaper witness.
struct Lim1Report {
    Lim1 verdict = Lim1::Trivial;
    TowerReport tower;
    AbelianTowerReport abelian;
    std::vector<Justification> justification;
};

inline Lim1Report lim1_verdict(const FreeEndo& e) {
    Lim1Report report;
    report.abelian = abelian_tower(abelianization(e));
    report.tower = image_tower(e);
    if (!report.abelian.ml && report.tower.ml)
        throw consistency_error("abelian tower fails Mittag-Leffler but the free tower satisfies it");

    report.verdict = report.tower.ml ? Lim1::Trivial : Lim1::Nontrivial;
    report.justification = report.tower.justification;
    if (!report.abelian.ml) {
        report.justification.push_back(justify::lattice_index_determinant());
        report.justification.push_back(justify::abelianization_obstruction());
    }
    report.justification.push_back(report.tower.ml ? justify::ml_lim1_trivial()
                                                   : justify::not_ml_lim1_nontrivial());
    return report;
}

} // namespace limone
