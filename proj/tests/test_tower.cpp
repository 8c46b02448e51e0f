#include <catch2/catch_amalgamated.hpp>

#include <limone/tower.hpp>

#include "support/gen.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using limone::AbelianTowerReport;
using limone::Alphabet;
using limone::FreeEndo;
using limone::IntMatrix;
using limone::Lim1;
using limone::TowerReport;
using limone::Word;
using testgen::wtok;

namespace {

bool has_label(const std::vector<limone::Justification>& js, const std::string& label) {
    return std::any_of(js.begin(), js.end(),
                       [&](const limone::Justification& j) { return j.label == label; });
}

const Alphabet AB({"a", "b"});
const Alphabet ABC({"a", "b", "c"});

} // namespace

TEST_CASE("automorphism detection") {
    REQUIRE(limone::is_automorphism(FreeEndo(AB, {wtok("ab"), wtok("a")})));
    REQUIRE(limone::is_automorphism(FreeEndo::identity(ABC)));
    REQUIRE_FALSE(limone::is_automorphism(FreeEndo(AB, {wtok("ab"), wtok("ab")})));
    REQUIRE_FALSE(limone::is_automorphism(FreeEndo(Alphabet({"a"}), {wtok("aa")})));
}

TEST_CASE("restriction to an invariant subgroup") {
    FreeEndo square(AB, {wtok("aa"), wtok("b")});
    limone::SubgroupBasis basis =
        limone::spanning_basis(limone::CoreGraph::from_generators(2, {wtok("a")}));
    FreeEndo induced = limone::induced_restriction(square, basis);
    REQUIRE(induced.alphabet().size() == 1);
    REQUIRE(induced.image(0) == wtok("aa"));

    FreeEndo swap(AB, {wtok("b"), wtok("b")});
    REQUIRE_THROWS_AS(limone::induced_restriction(swap, basis), limone::consistency_error);
}

TEST_CASE("surjective golden mean tower is constant") {
    TowerReport t = limone::image_tower(FreeEndo(AB, {wtok("ab"), wtok("a")}));
    REQUIRE(t.ranks == std::vector<std::size_t>{2, 2});
    REQUIRE(t.plateau_index == 0);
    REQUIRE(t.ml);
    REQUIRE(has_label(t.justification, "ml-constant-tail"));
}

TEST_CASE("three letter tower drops rank once and stabilizes") {
    FreeEndo e(ABC, {wtok("abc"), wtok("abc"), wtok("a")});
    TowerReport t = limone::image_tower(e);
    REQUIRE(t.ranks == std::vector<std::size_t>{3, 2, 2});
    REQUIRE(t.plateau_index == 1);
    REQUIRE(t.ml);
    REQUIRE(t.stabilized_basis.basis_words == std::vector<Word>{wtok("a"), wtok("bc")});
    FreeEndo expected(Alphabet::standard(2), {wtok("ab"), wtok("aba")});
    REQUIRE(t.induced_endo == expected);
    REQUIRE(limone::is_automorphism(t.induced_endo));
}

TEST_CASE("collapsing tower stabilizes at the trivial group") {
    TowerReport t = limone::image_tower(FreeEndo(AB, {Word(), Word()}));
    REQUIRE(t.ranks == std::vector<std::size_t>{2, 0, 0});
    REQUIRE(t.plateau_index == 1);
    REQUIRE(t.ml);
    REQUIRE(t.induced_endo.alphabet().size() == 0);
}

TEST_CASE("strictly descending towers") {
    TowerReport doubling = limone::image_tower(FreeEndo(Alphabet({"a"}), {wtok("aa")}));
    REQUIRE(doubling.ranks == std::vector<std::size_t>{1, 1});
    REQUIRE_FALSE(doubling.ml);
    REQUIRE(has_label(doubling.justification, "ml-strict-descent"));

    TowerReport pinch = limone::image_tower(FreeEndo(AB, {wtok("ab"), wtok("ab")}));
    REQUIRE(pinch.ranks == std::vector<std::size_t>{2, 1, 1});
    REQUIRE_FALSE(pinch.ml);

    TowerReport spiral =
        limone::image_tower(FreeEndo(AB, {wtok("ababa"), wtok("baaab")}));
    REQUIRE(spiral.ranks == std::vector<std::size_t>{2, 2});
    REQUIRE_FALSE(spiral.ml);

    TowerReport digits =
        limone::image_tower(FreeEndo(ABC, {wtok("aaca"), wtok("abca"), wtok("bcb")}));
    REQUIRE(digits.ranks == std::vector<std::size_t>{3, 3});
    REQUIRE_FALSE(digits.ml);
}

TEST_CASE("lattice tower spot values") {
    AbelianTowerReport fib = limone::abelian_tower(IntMatrix{{1, 1}, {1, 0}});
    REQUIRE(fib.lattice_ranks == std::vector<std::size_t>{2, 2});
    REQUIRE(fib.plateau_index == 0);
    REQUIRE(fib.restricted_determinant == -1);
    REQUIRE(fib.ml);

    AbelianTowerReport doubling = limone::abelian_tower(IntMatrix{{2}});
    REQUIRE(doubling.lattice_ranks == std::vector<std::size_t>{1, 1});
    REQUIRE(doubling.restricted_determinant == 2);
    REQUIRE_FALSE(doubling.ml);

    AbelianTowerReport collapse = limone::abelian_tower(IntMatrix{{3, 2}, {3, 2}});
    REQUIRE(collapse.lattice_ranks == std::vector<std::size_t>{2, 1, 1});
    REQUIRE(collapse.plateau_index == 1);
    REQUIRE(collapse.restricted_determinant == 5);
    REQUIRE_FALSE(collapse.ml);

    AbelianTowerReport zero = limone::abelian_tower(IntMatrix(2, 2));
    REQUIRE(zero.lattice_ranks == std::vector<std::size_t>{2, 0, 0});
    REQUIRE(zero.ml);

    AbelianTowerReport unimodular = limone::abelian_tower(IntMatrix{{3, 2}, {2, 1}});
    REQUIRE(unimodular.lattice_ranks == std::vector<std::size_t>{2, 2});
    REQUIRE(unimodular.restricted_determinant == -1);
    REQUIRE(unimodular.ml);

    REQUIRE_THROWS_AS(limone::abelian_tower(IntMatrix{{1, 2, 3}}),
                      limone::dimension_error);
}

TEST_CASE("lim1 verdict spot values") {
    limone::Lim1Report fib = limone::lim1_verdict(FreeEndo(AB, {wtok("ab"), wtok("a")}));
    REQUIRE(fib.verdict == Lim1::Trivial);
    REQUIRE(has_label(fib.justification, "ml-implies-lim1-trivial"));
    REQUIRE_FALSE(has_label(fib.justification, "abelianization-obstruction"));

    limone::Lim1Report doubling =
        limone::lim1_verdict(FreeEndo(Alphabet({"a"}), {wtok("aa")}));
    REQUIRE(doubling.verdict == Lim1::Nontrivial);
    REQUIRE(has_label(doubling.justification, "not-ml-implies-lim1-nontrivial"));
    REQUIRE(has_label(doubling.justification, "abelianization-obstruction"));
    REQUIRE(has_label(doubling.justification, "lattice-index-determinant"));

    // Unimodular abelianization, so only the free tower can witness descent.
    limone::Lim1Report spiral =
        limone::lim1_verdict(FreeEndo(AB, {wtok("ababa"), wtok("baa")}));
    REQUIRE(spiral.abelian.ml);
    REQUIRE(spiral.verdict == Lim1::Nontrivial);
    REQUIRE_FALSE(has_label(spiral.justification, "abelianization-obstruction"));
}

TEST_CASE("ranks descend to a plateau and the tail looks constant when stable") {
    std::mt19937_64 rng(271828);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 1 + static_cast<std::size_t>(rng() % 3);
        FreeEndo e = testgen::random_endo(rng, r, 4);
        TowerReport t = limone::image_tower(e);
        REQUIRE(t.ranks.size() == t.plateau_index + 2);
        for (std::size_t i = 0; i + 1 < t.ranks.size(); ++i)
            REQUIRE(t.ranks[i] >= t.ranks[i + 1]);
        REQUIRE(t.ranks[t.plateau_index] == t.ranks[t.plateau_index + 1]);
        REQUIRE(t.ranks[t.plateau_index] == t.stabilized_basis.basis_words.size());
    }
}

TEST_CASE("constant tails stay constant two steps further") {
    std::mt19937_64 rng(314159);
    int checked = 0;
    while (checked < 200) {
        std::size_t r = 1 + static_cast<std::size_t>(rng() % 3);
        FreeEndo e = testgen::random_endo(rng, r, 4);
        TowerReport t = limone::image_tower(e);
        if (!t.ml) continue;
        ++checked;
        std::vector<Word> gens = t.stabilized_basis.basis_words;
        limone::CoreGraph plateau = limone::CoreGraph::from_generators(r, gens);
        for (Word& g : gens) g = limone::apply(e, apply(e, g));
        REQUIRE(limone::graphs_equal(plateau, limone::CoreGraph::from_generators(r, gens)));
    }
}

TEST_CASE("tower stability matches the fixed depth oracle") {
    std::mt19937_64 rng(662607);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 1 + static_cast<std::size_t>(rng() % 3);
        FreeEndo e = testgen::random_endo(rng, r, 3);
        REQUIRE(limone::image_tower(e).ml == oracles::ml_at_depth_five(e));
    }
}

TEST_CASE("abelian descent forces free descent") {
    std::mt19937_64 rng(577215);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 1 + static_cast<std::size_t>(rng() % 3);
        FreeEndo e = testgen::random_endo(rng, r, 4);
        TowerReport t = limone::image_tower(e);
        AbelianTowerReport a = limone::abelian_tower(limone::abelianization(e));
        if (!a.ml) REQUIRE_FALSE(t.ml);
        for (std::size_t i = 0; i < std::min(t.ranks.size(), a.lattice_ranks.size()); ++i)
            REQUIRE(a.lattice_ranks[i] <= t.ranks[i]);
    }
}

TEST_CASE("automorphisms always have constant towers") {
    std::mt19937_64 rng(141421);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 2 + static_cast<std::size_t>(rng() % 2);
        FreeEndo e = testgen::random_automorphism(rng, r, 6);
        REQUIRE(limone::is_automorphism(e));
        limone::Lim1Report rep = limone::lim1_verdict(e);
        REQUIRE(rep.tower.plateau_index == 0);
        REQUIRE(rep.tower.ml);
        REQUIRE(rep.verdict == Lim1::Trivial);
        REQUIRE(abs(rep.abelian.restricted_determinant) == 1);
    }
}
