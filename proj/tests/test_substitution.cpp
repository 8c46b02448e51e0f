#include <catch2/catch_amalgamated.hpp>

#include <limone/substitution.hpp>

#include "support/gen.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>

using limone::Alphabet;
using limone::BorderReport;
using limone::BorderRoute;
using limone::Substitution;
using testgen::wtok;

namespace {

const Alphabet AB({"a", "b"});
const Alphabet ABC({"a", "b", "c"});

Substitution fib() { return Substitution(AB, {{0, 1}, {0}}); }
Substitution alternating() { return Substitution(AB, {{0, 1, 0}, {1, 0, 1}}); }
Substitution digits() { return Substitution(ABC, {{0, 0, 2, 0}, {0, 1, 2, 0}, {1, 2, 1}}); }
Substitution cyclic() { return Substitution(ABC, {{0, 1, 2}, {0, 1, 2}, {0}}); }

using WordSet = std::set<std::vector<int>>;

WordSet factor_set(const std::vector<int>& w, std::size_t k) {
    WordSet out;
    for (std::size_t i = 0; i + k <= w.size(); ++i)
        out.insert(std::vector<int>(w.begin() + i, w.begin() + i + k));
    return out;
}

// Independent language oracle: union the k-factors of iterated images of the
// first letter until nothing new appears and the word is comfortably long.
WordSet expanded_factors(const Substitution& s, std::size_t k) {
    WordSet out;
    std::vector<int> w{0};
    std::size_t quiet = 0;
    while (quiet < 2 || w.size() < 10 * k + 50) {
        w = s.expand(w);
        std::size_t before = out.size();
        for (const auto& f : factor_set(w, k)) out.insert(f);
        quiet = out.size() == before ? quiet + 1 : 0;
        if (w.size() > 200000) break;
    }
    return out;
}

} // namespace

TEST_CASE("substitution validation") {
    REQUIRE_THROWS_AS(Substitution(Alphabet({"a"}), {{0}}), limone::invalid_input_error);
    REQUIRE_THROWS_AS(Substitution(AB, {{0, 1}, {}}), limone::invalid_input_error);
    REQUIRE_THROWS_AS(Substitution(AB, {{0, 5}, {0}}), limone::domain_error);
    REQUIRE_THROWS_AS(Substitution(AB, {{0, 1}}), limone::dimension_error);
    REQUIRE(fib().image(0) == std::vector<int>{0, 1});
}

TEST_CASE("expansion concatenates images") {
    REQUIRE(fib().expand({0}) == std::vector<int>{0, 1});
    REQUIRE(fib().expand({0, 1}) == std::vector<int>{0, 1, 0});
    REQUIRE(fib().expand(fib().expand({0})) == std::vector<int>{0, 1, 0});
    REQUIRE(digits().expand({2}) == std::vector<int>{1, 2, 1});
}

TEST_CASE("incidence matrix counts letters") {
    REQUIRE(limone::incidence_matrix(fib()) == limone::IntMatrix{{1, 1}, {1, 0}});
    REQUIRE(limone::incidence_matrix(digits()) ==
            limone::IntMatrix{{3, 0, 1}, {2, 1, 1}, {0, 2, 1}});
}

TEST_CASE("rose endomorphism abelianizes to the incidence matrix") {
    REQUIRE(limone::rose_endo(fib()) ==
            limone::FreeEndo(AB, {wtok("ab"), wtok("a")}));
    std::mt19937_64 rng(112358);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 2 + static_cast<std::size_t>(rng() % 2);
        Substitution s = testgen::random_primitive_substitution(rng, r, 3);
        REQUIRE(limone::abelianization(limone::rose_endo(s)) ==
                limone::incidence_matrix(s));
    }
}

TEST_CASE("primitivity spot values and digraph agreement") {
    REQUIRE(limone::is_primitive(fib()));
    REQUIRE(limone::is_primitive(alternating()));
    REQUIRE(limone::is_primitive(digits()));
    REQUIRE(limone::is_primitive(cyclic()));
    REQUIRE_FALSE(limone::is_primitive(Substitution(AB, {{0, 1}, {1}})));
    std::mt19937_64 rng(209209);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 2 + static_cast<std::size_t>(rng() % 2);
        std::vector<std::vector<int>> images;
        for (std::size_t i = 0; i < r; ++i)
            images.push_back(testgen::random_positive_word(rng, r, 1, 3));
        Substitution s(testgen::letters(r), images);
        REQUIRE(limone::is_primitive(s) ==
                oracles::primitive_digraph(limone::incidence_matrix(s)));
    }
}

TEST_CASE("golden mean factor language") {
    WordSet expected2{{0, 0}, {0, 1}, {1, 0}};
    WordSet expected3{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}};
    REQUIRE(limone::legal_words(fib(), 2) == expected2);
    REQUIRE(limone::legal_words(fib(), 3) == expected3);
    REQUIRE(limone::legal_words(fib(), 1) == WordSet{{0}, {1}});
    REQUIRE_THROWS_AS(limone::legal_words(fib(), 0), limone::domain_error);
    REQUIRE_THROWS_AS(limone::legal_words(Substitution(AB, {{0, 1}, {1}}), 2),
                      limone::precondition_error);
}

TEST_CASE("alternating period two language") {
    REQUIRE(limone::legal_words(alternating(), 2) == WordSet{{0, 1}, {1, 0}});
    REQUIRE(limone::legal_words(alternating(), 3) == WordSet{{0, 1, 0}, {1, 0, 1}});
}

TEST_CASE("factor language matches direct expansion") {
    std::mt19937_64 rng(600613);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t r = 2 + static_cast<std::size_t>(rng() % 2);
        std::size_t k = 1 + static_cast<std::size_t>(rng() % 3);
        Substitution s = testgen::random_primitive_substitution(rng, r, 3);
        REQUIRE(limone::legal_words(s, k) == expanded_factors(s, k));
    }
}

TEST_CASE("factor languages are extendable and project consistently") {
    std::mt19937_64 rng(123581);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 2 + static_cast<std::size_t>(rng() % 2);
        std::size_t k = 1 + static_cast<std::size_t>(rng() % 3);
        Substitution s = testgen::random_primitive_substitution(rng, r, 3);
        WordSet lower = limone::legal_words(s, k);
        WordSet higher = limone::legal_words(s, k + 1);
        WordSet heads, tails;
        for (const auto& w : higher) {
            std::vector<int> head(w.begin(), w.end() - 1);
            std::vector<int> tail(w.begin() + 1, w.end());
            heads.insert(head);
            tails.insert(tail);
            REQUIRE(lower.count(head) == 1);
            REQUIRE(lower.count(tail) == 1);
        }
        REQUIRE(heads == lower);
        REQUIRE(tails == lower);
    }
}

TEST_CASE("power level detection") {
    REQUIRE_FALSE(limone::is_proper_power(fib(), 8).has_value());
    REQUIRE_FALSE(limone::is_proper_power(alternating(), 8).has_value());
    REQUIRE_FALSE(limone::is_proper_power(cyclic(), 8).has_value());
    REQUIRE(limone::is_proper_power(Substitution(AB, {{0, 1}, {0, 1}}), 8) == 1u);
    REQUIRE(limone::is_proper_power(digits(), 8) == 2u);
    REQUIRE_FALSE(limone::is_proper_power(digits(), 1).has_value());
    // Squaring the golden mean map keeps distinct last letters forever.
    REQUIRE_FALSE(limone::is_proper_power(Substitution(AB, {{0, 1, 0}, {0, 1}}), 8)
                      .has_value());
}

TEST_CASE("border forcing by shared image borders") {
    BorderReport r = limone::forces_border(digits(), 8, 8);
    REQUIRE(r.forces);
    REQUIRE(r.level == 2);
    REQUIRE(r.route == BorderRoute::ProperPower);
    for (const auto& set : r.extension_sets)
        REQUIRE(set == std::set<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("border forcing by determined neighbors") {
    BorderReport r = limone::forces_border(alternating(), 8, 8);
    REQUIRE(r.forces);
    REQUIRE(r.level == 1);
    REQUIRE(r.route == BorderRoute::NeighborDetermination);
    REQUIRE(r.extension_sets ==
            std::vector<std::set<std::pair<int, int>>>{{{1, 1}}, {{0, 0}}});
}

TEST_CASE("golden mean never forces the border") {
    BorderReport r = limone::forces_border(fib(), 8, 8);
    REQUIRE_FALSE(r.forces);
    REQUIRE(r.level == 0);
    REQUIRE(r.route == BorderRoute::None);
    REQUIRE(r.border_cap == 8);
    REQUIRE(r.proper_cap == 8);
    REQUIRE(r.extension_sets ==
            std::vector<std::set<std::pair<int, int>>>{{{0, 0}, {1, 0}}, {{0, 0}}});
    REQUIRE_THROWS_AS(limone::forces_border(fib(), 0, 8), limone::domain_error);
    REQUIRE_THROWS_AS(limone::forces_border(fib(), 8, 0), limone::domain_error);
}

TEST_CASE("border forcing reports are internally consistent") {
    std::mt19937_64 rng(846201);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 2 + static_cast<std::size_t>(rng() % 2);
        Substitution s = testgen::random_primitive_substitution(rng, r, 3);
        unsigned border_cap = 1 + static_cast<unsigned>(rng() % 4);
        unsigned proper_cap = 1 + static_cast<unsigned>(rng() % 4);
        BorderReport rep = limone::forces_border(s, border_cap, proper_cap);
        REQUIRE(rep.extension_sets.size() == s.letters());
        for (const auto& set : rep.extension_sets) REQUIRE_FALSE(set.empty());
        auto power = limone::is_proper_power(s, proper_cap);
        if (rep.route == BorderRoute::ProperPower) {
            REQUIRE(rep.forces);
            REQUIRE(rep.level <= proper_cap);
            REQUIRE(power == rep.level);
            for (const auto& set : rep.extension_sets) REQUIRE(set.size() == 1);
        } else if (rep.route == BorderRoute::NeighborDetermination) {
            REQUIRE(rep.forces);
            REQUIRE(rep.level <= border_cap);
            for (const auto& set : rep.extension_sets) REQUIRE(set.size() == 1);
            if (power) REQUIRE(*power > rep.level);
        } else {
            REQUIRE_FALSE(rep.forces);
            REQUIRE(rep.level == 0);
            REQUIRE_FALSE(power.has_value());
            bool some_ambiguous = false;
            for (const auto& set : rep.extension_sets)
                if (set.size() > 1) some_ambiguous = true;
            REQUIRE(some_ambiguous);
        }
    }
}

TEST_CASE("gluing graph spot values") {
    limone::GluingGraph fg = limone::gluing_graph(fib());
    REQUIRE(fg.letters == 2);
    REQUIRE(fg.adjacencies == std::set<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}});
    REQUIRE(fg.connected);

    REQUIRE_FALSE(limone::gluing_graph(alternating()).connected);
    REQUIRE_FALSE(limone::gluing_graph(cyclic()).connected);
    REQUIRE(limone::gluing_graph(digits()).connected);
}

TEST_CASE("gluing adjacencies are the two letter language") {
    std::mt19937_64 rng(535353);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 2 + static_cast<std::size_t>(rng() % 2);
        Substitution s = testgen::random_primitive_substitution(rng, r, 3);
        limone::GluingGraph g = limone::gluing_graph(s);
        WordSet pairs;
        for (const auto& [x, y] : g.adjacencies) pairs.insert({x, y});
        REQUIRE(pairs == limone::legal_words(s, 2));
    }
}
