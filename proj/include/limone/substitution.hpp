#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "free_group.hpp"
#include "integer_matrix.hpp"

namespace limone {

// Substitution on at least two letters; every image is a nonempty positive
// word, stored as a letter index sequence.
class Substitution {
public:
    Substitution(Alphabet alphabet, std::vector<std::vector<int>> images)
        : alphabet_(std::move(alphabet)), images_(std::move(images)) {
        if (alphabet_.size() < 2)
            throw invalid_input_error("substitution needs at least two letters");
        if (images_.size() != alphabet_.size())
            throw dimension_error("image count does not match alphabet size");
        for (const auto& im : images_) {
            if (im.empty()) throw invalid_input_error("substitution image is empty");
            for (int c : im)
                if (c < 0 || static_cast<std::size_t>(c) >= alphabet_.size())
                    throw domain_error("image uses a letter outside the alphabet");
        }
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t letters() const { return alphabet_.size(); }
    const std::vector<std::vector<int>>& images() const { return images_; }

    const std::vector<int>& image(std::size_t i) const {
        if (i >= images_.size()) throw domain_error("letter index out of range");
        return images_[i];
    }

    std::vector<int> expand(const std::vector<int>& word) const {
        std::vector<int> out;
        for (int c : word) {
            const auto& im = image(static_cast<std::size_t>(c));
            out.insert(out.end(), im.begin(), im.end());
        }
        return out;
    }

    bool operator==(const Substitution&) const = default;

private:
    Alphabet alphabet_;
    std::vector<std::vector<int>> images_;
};

// Entry (i, j) counts the letter j in the image of letter i, matching the
// abelianization row convention.
inline IntMatrix incidence_matrix(const Substitution& s) {
    IntMatrix m(s.letters(), s.letters());
    for (std::size_t i = 0; i < s.letters(); ++i)
        for (int c : s.image(i)) m.at(i, static_cast<std::size_t>(c)) += 1;
    return m;
}

inline bool is_primitive(const Substitution& s) {
    return is_primitive_matrix(incidence_matrix(s));
}

// The substitution read as a free group endomorphism on the same letters.
inline FreeEndo rose_endo(const Substitution& s) {
    std::vector<Word> images;
    images.reserve(s.letters());
    for (const auto& im : s.images()) {
        std::vector<Syllable> syl;
        syl.reserve(im.size());
        for (int c : im) syl.push_back(Syllable{c, 1});
        images.push_back(Word(std::move(syl)));
    }
    return FreeEndo(s.alphabet(), std::move(images));
}

// Length-k factors of the subshift language.  Seeded with the factors of an
// expanded letter and closed under expand-then-cut, which reaches a fixed
// point inside the finite set of k-words; primitivity makes the result
// independent of the seed letter.
inline std::set<std::vector<int>> legal_words(const Substitution& s, std::size_t k) {
    if (k == 0) throw domain_error("legal word length must be positive");
    if (!is_primitive(s))
        throw precondition_error("legal words are computed for primitive substitutions only");

    std::vector<int> seed{0};
    std::size_t rounds = 0;
    while (seed.size() < k) {
        seed = s.expand(seed);
        if (++rounds > k + 64)
            throw consistency_error("seed word failed to reach the requested length");
    }

    auto factors = [k](const std::vector<int>& w, std::set<std::vector<int>>& into) {
        for (std::size_t i = 0; i + k <= w.size(); ++i)
            into.insert(std::vector<int>(w.begin() + i, w.begin() + i + k));
    };

    std::set<std::vector<int>> words;
    factors(seed, words);
    while (true) {
        std::set<std::vector<int>> grown = words;
        for (const auto& w : words) factors(s.expand(w), grown);
        if (grown.size() == words.size()) break;
        words = std::move(grown);
    }
    return words;
}

// First letters of expanded letters evolve by iterating a self-map of the
// alphabet, and likewise for last letters; no expanded word is ever built.
namespace detail {

inline std::vector<int> first_letter_map(const Substitution& s) {
    std::vector<int> f(s.letters());
    for (std::size_t i = 0; i < s.letters(); ++i) f[i] = s.image(i).front();
    return f;
}

inline std::vector<int> last_letter_map(const Substitution& s) {
    std::vector<int> l(s.letters());
    for (std::size_t i = 0; i < s.letters(); ++i) l[i] = s.image(i).back();
    return l;
}

inline bool constant_map(const std::vector<int>& m) {
    for (int v : m)
        if (v != m.front()) return false;
    return true;
}

} // namespace detail

// Least n <= cap for which every n-fold expanded letter shares one first
// letter and one last letter.
inline std::optional<unsigned> is_proper_power(const Substitution& s, unsigned cap) {
    const auto f = detail::first_letter_map(s);
    const auto l = detail::last_letter_map(s);
    std::vector<int> fn = f, ln = l;
    for (unsigned n = 1; n <= cap; ++n) {
        if (n > 1)
            for (std::size_t i = 0; i < fn.size(); ++i) {
                fn[i] = f[static_cast<std::size_t>(fn[i])];
                ln[i] = l[static_cast<std::size_t>(ln[i])];
            }
        if (detail::constant_map(fn) && detail::constant_map(ln)) return n;
    }
    return std::nullopt;
}

enum class BorderRoute { ProperPower, NeighborDetermination, None };

// Semi-decision of border forcing.  Route ProperPower certifies it when some
// power shares first and last letters across the alphabet; route
// NeighborDetermination certifies it when every letter's extension set, the
// pairs (last of expanded left neighbor, first of expanded right neighbor)
// over its legal contexts, collapses to a single pair.  Below the caps
// neither route may fire, which leaves the question open.
struct BorderReport {
    bool forces = false;
    unsigned level = 0;
    unsigned border_cap = 0;
    unsigned proper_cap = 0;
    BorderRoute route = BorderRoute::None;
    std::vector<std::set<std::pair<int, int>>> extension_sets;

    bool operator==(const BorderReport&) const = default;
};

inline BorderReport forces_border(const Substitution& s, unsigned border_cap,
                                  unsigned proper_cap) {
    if (border_cap == 0 || proper_cap == 0)
        throw domain_error("border forcing caps must be positive");

    const std::size_t r = s.letters();
    std::vector<std::set<std::pair<int, int>>> contexts(r);
    for (const auto& w : legal_words(s, 3))
        contexts[static_cast<std::size_t>(w[1])].insert({w[0], w[2]});

    const auto f = detail::first_letter_map(s);
    const auto l = detail::last_letter_map(s);

    BorderReport report;
    report.border_cap = border_cap;
    report.proper_cap = proper_cap;

    auto extension_sets_at = [&](const std::vector<int>& fn, const std::vector<int>& ln) {
        std::vector<std::set<std::pair<int, int>>> sets(r);
        for (std::size_t a = 0; a < r; ++a)
            for (const auto& [left, right] : contexts[a])
                sets[a].insert({ln[static_cast<std::size_t>(left)],
                                fn[static_cast<std::size_t>(right)]});
        return sets;
    };

    std::vector<int> fn = f, ln = l;
    const unsigned top = std::max(border_cap, proper_cap);
    for (unsigned n = 1; n <= top; ++n) {
        if (n > 1)
            for (std::size_t i = 0; i < r; ++i) {
                fn[i] = f[static_cast<std::size_t>(fn[i])];
                ln[i] = l[static_cast<std::size_t>(ln[i])];
            }
        auto sets = extension_sets_at(fn, ln);

        if (n <= proper_cap && detail::constant_map(fn) && detail::constant_map(ln)) {
            report.forces = true;
            report.level = n;
            report.route = BorderRoute::ProperPower;
            report.extension_sets = std::move(sets);
            return report;
        }
        if (n <= border_cap) {
            bool all_single = true;
            for (const auto& set : sets)
                if (set.size() != 1) {
                    all_single = false;
                    break;
                }
            if (all_single) {
                report.forces = true;
                report.level = n;
                report.route = BorderRoute::NeighborDetermination;
                report.extension_sets = std::move(sets);
                return report;
            }
        }
        if (n == border_cap) report.extension_sets = std::move(sets);
    }
    return report;
}

// Bipartite gluing graph: one out node and one in node per letter, one edge
// per legal two-letter word.
struct GluingGraph {
    std::size_t letters = 0;
    std::set<std::pair<int, int>> adjacencies;
    bool connected = false;

    bool operator==(const GluingGraph&) const = default;
};

inline GluingGraph gluing_graph(const Substitution& s) {
    GluingGraph g;
    g.letters = s.letters();
    for (const auto& w : legal_words(s, 2)) g.adjacencies.insert({w[0], w[1]});

    const std::size_t nodes = 2 * g.letters;
    std::vector<std::size_t> parent(nodes);
    for (std::size_t i = 0; i < nodes; ++i) parent[i] = i;
    auto find = [&parent](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& [a, b] : g.adjacencies)
        parent[find(static_cast<std::size_t>(a))] =
            find(g.letters + static_cast<std::size_t>(b));

    g.connected = true;
    for (std::size_t v = 0; v < nodes; ++v)
        if (find(v) != find(0)) {
            g.connected = false;
            break;
        }
    return g;
}

} // namespace limone
