#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "free_group.hpp"

namespace limone {

// Directed edge labeled by a letter; traversing against the arrow reads the
// inverse letter.
struct GraphEdge {
    int src = 0;
    int dst = 0;
    int label = 0;

    auto operator<=>(const GraphEdge&) const = default;
};

// Folded based core graph of a finitely generated subgroup.  Construction
// folds a wedge of generator loops to a fixed point, trims hanging trees,
// and renumbers vertices by a breadth-first sweep, so equal subgroups yield
// structurally equal graphs.  Vertex 0 is the basepoint; every other vertex
// has degree at least two; each (vertex, label) pair carries at most one
// outgoing and one incoming edge.
class CoreGraph {
public:
    CoreGraph() : out_(1, std::vector<int>(0)), in_(1, std::vector<int>(0)) {}

    // fold_seed shuffles the folding schedule; the folded graph is the same
    // for every schedule, which the test suite exercises.
    static CoreGraph from_generators(std::size_t alphabet_size,
                                     const std::vector<Word>& generators,
                                     std::optional<std::uint64_t> fold_seed = std::nullopt) {
        for (const Word& g : generators)
            for (const Syllable& s : g.syllables())
                if (s.letter < 0 || static_cast<std::size_t>(s.letter) >= alphabet_size)
                    throw domain_error("generator uses a letter outside the alphabet");

        std::vector<GraphEdge> edges;
        int next_vertex = 1;
        for (const Word& g : generators) {
            const auto& syl = g.syllables();
            int cur = 0;
            for (std::size_t k = 0; k < syl.size(); ++k) {
                int nxt = (k + 1 == syl.size()) ? 0 : next_vertex++;
                if (syl[k].sign > 0)
                    edges.push_back({cur, nxt, syl[k].letter});
                else
                    edges.push_back({nxt, cur, syl[k].letter});
                cur = nxt;
            }
        }

        std::vector<int> parent(static_cast<std::size_t>(next_vertex));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };

        std::optional<std::mt19937_64> rng;
        if (fold_seed) rng.emplace(*fold_seed);

        // Fold one vertex identification at a time until no label repeats
        // around any vertex.
        while (true) {
            for (GraphEdge& e : edges) {
                e.src = find(e.src);
                e.dst = find(e.dst);
            }
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

            std::vector<std::pair<int, int>> folds;
            std::map<std::pair<int, int>, int> out_seen, in_seen;
            for (const GraphEdge& e : edges) {
                auto [oit, onew] = out_seen.try_emplace({e.src, e.label}, e.dst);
                if (!onew) folds.emplace_back(oit->second, e.dst);
                auto [iit, inew] = in_seen.try_emplace({e.dst, e.label}, e.src);
                if (!inew) folds.emplace_back(iit->second, e.src);
            }
            if (folds.empty()) break;

            std::size_t pick = 0;
            if (rng) pick = std::uniform_int_distribution<std::size_t>(0, folds.size() - 1)(*rng);
            parent[find(folds[pick].first)] = find(folds[pick].second);
        }

        // Trim hanging trees; the basepoint stays even at degree one.
        const int base = find(0);
        while (true) {
            std::map<int, int> degree;
            for (const GraphEdge& e : edges) {
                degree[e.src] += 1;
                degree[e.dst] += 1;
            }
            int victim = -1;
            for (const auto& [v, d] : degree)
                if (v != base && d <= 1) {
                    victim = v;
                    break;
                }
            if (victim < 0) break;
            std::erase_if(edges, [victim](const GraphEdge& e) {
                return e.src == victim || e.dst == victim;
            });
        }

        return canonicalize(alphabet_size, base, std::move(edges));
    }

    std::size_t alphabet_size() const { return letters_; }
    std::size_t vertex_count() const { return vcount_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    static constexpr int basepoint = 0;

    // Connected graph, so rank of the fundamental group is E - V + 1.
    std::size_t rank() const { return edges_.size() - vcount_ + 1; }

    // Index of the edge read from v by the signed letter, if present.
    std::optional<int> edge_at(int v, int letter, int sign) const {
        if (v < 0 || static_cast<std::size_t>(v) >= vcount_)
            throw domain_error("vertex index out of range");
        if (letter < 0 || static_cast<std::size_t>(letter) >= letters_)
            throw domain_error("letter index outside the alphabet");
        int e = sign > 0 ? out_[v][letter] : in_[v][letter];
        if (e < 0) return std::nullopt;
        return e;
    }

    // Endpoint reached from v by the signed letter, if the edge exists.
    std::optional<int> step(int v, int letter, int sign) const {
        auto e = edge_at(v, letter, sign);
        if (!e) return std::nullopt;
        return sign > 0 ? edges_[*e].dst : edges_[*e].src;
    }

    bool operator==(const CoreGraph& o) const {
        return letters_ == o.letters_ && vcount_ == o.vcount_ && edges_ == o.edges_;
    }

private:
    static CoreGraph canonicalize(std::size_t alphabet_size, int base,
                                  std::vector<GraphEdge> edges) {
        std::map<std::pair<int, int>, int> out_map, in_map;
        for (const GraphEdge& e : edges) {
            if (!out_map.try_emplace({e.src, e.label}, e.dst).second ||
                !in_map.try_emplace({e.dst, e.label}, e.src).second)
                throw consistency_error("folding left a repeated label at a vertex");
        }

        std::map<int, int> renumber;
        renumber[base] = 0;
        std::queue<int> queue;
        queue.push(base);
        int next = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (std::size_t label = 0; label < alphabet_size; ++label) {
                for (int sign : {+1, -1}) {
                    const auto& table = sign > 0 ? out_map : in_map;
                    auto it = table.find({v, static_cast<int>(label)});
                    if (it == table.end()) continue;
                    if (renumber.emplace(it->second, next).second) {
                        ++next;
                        queue.push(it->second);
                    }
                }
            }
        }

        for (GraphEdge& e : edges) {
            auto s = renumber.find(e.src);
            auto d = renumber.find(e.dst);
            if (s == renumber.end() || d == renumber.end())
                throw consistency_error("core graph is disconnected");
            e.src = s->second;
            e.dst = d->second;
        }
        std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
            if (a.src != b.src) return a.src < b.src;
            if (a.label != b.label) return a.label < b.label;
            return a.dst < b.dst;
        });

        CoreGraph g;
        g.letters_ = alphabet_size;
        g.vcount_ = static_cast<std::size_t>(next);
        g.edges_ = std::move(edges);
        g.out_.assign(g.vcount_, std::vector<int>(alphabet_size, -1));
        g.in_.assign(g.vcount_, std::vector<int>(alphabet_size, -1));
        for (std::size_t i = 0; i < g.edges_.size(); ++i) {
            const GraphEdge& e = g.edges_[i];
            g.out_[e.src][e.label] = static_cast<int>(i);
            g.in_[e.dst][e.label] = static_cast<int>(i);
        }
        return g;
    }

    std::size_t letters_ = 0;
    std::size_t vcount_ = 1;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<int>> out_, in_;
};

// Membership of a word in the subgroup the graph presents: the word must
// trace a closed path at the basepoint.
inline bool contains(const CoreGraph& g, const Word& w) {
    int v = CoreGraph::basepoint;
    for (const Syllable& s : w.syllables()) {
        auto nxt = g.step(v, s.letter, s.sign);
        if (!nxt) return false;
        v = *nxt;
    }
    return v == CoreGraph::basepoint;
}

// The whole free group folds to the rose: one vertex, one loop per letter.
inline bool is_full(const CoreGraph& g) {
    return g.vertex_count() == 1 && g.edges().size() == g.alphabet_size();
}

inline bool graphs_equal(const CoreGraph& a, const CoreGraph& b) { return a == b; }

// Free basis extracted from a breadth-first spanning tree: tree edges spell
// the connecting paths, and each non-tree edge contributes the basis word
// path(src) * label * path(dst)^-1 in its positive orientation.
struct SubgroupBasis {
    CoreGraph graph;
    std::vector<int> tree_edges;
    std::vector<int> nontree_edges;
    std::vector<Word> basis_words;
    Alphabet basis_alphabet;

    bool operator==(const SubgroupBasis&) const = default;
};

inline SubgroupBasis spanning_basis(const CoreGraph& g) {
    const std::size_t r = g.alphabet_size();
    std::vector<Word> path(g.vertex_count());
    std::vector<bool> visited(g.vertex_count(), false);
    std::vector<bool> classified(g.edges().size(), false);

    SubgroupBasis b;
    b.graph = g;

    std::queue<int> queue;
    visited[CoreGraph::basepoint] = true;
    queue.push(CoreGraph::basepoint);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (std::size_t label = 0; label < r; ++label) {
            for (int sign : {+1, -1}) {
                auto e = g.edge_at(v, static_cast<int>(label), sign);
                if (!e || classified[*e]) continue;
                classified[*e] = true;
                int target = *g.step(v, static_cast<int>(label), sign);
                if (!visited[target]) {
                    visited[target] = true;
                    path[target] = path[v] * Word::letter(static_cast<int>(label), sign);
                    b.tree_edges.push_back(*e);
                    queue.push(target);
                } else {
                    b.nontree_edges.push_back(*e);
                }
            }
        }
    }

    for (int e : b.nontree_edges) {
        const GraphEdge& edge = g.edges()[static_cast<std::size_t>(e)];
        b.basis_words.push_back(path[edge.src] * Word::letter(edge.label) *
                                path[edge.dst].inverse());
    }
    b.basis_alphabet = Alphabet::standard(b.basis_words.size());
    if (b.basis_words.size() != g.rank())
        throw consistency_error("spanning tree basis size differs from graph rank");
    return b;
}

// Expression of a subgroup element in the spanning tree basis: tracing the
// word emits one signed basis letter per non-tree edge crossed.
inline Word rewrite_in_basis(const SubgroupBasis& b, const Word& w) {
    std::vector<int> role(b.graph.edges().size(), -1);
    for (std::size_t i = 0; i < b.nontree_edges.size(); ++i)
        role[static_cast<std::size_t>(b.nontree_edges[i])] = static_cast<int>(i);

    int v = CoreGraph::basepoint;
    std::vector<Syllable> out;
    for (const Syllable& s : w.syllables()) {
        auto e = b.graph.edge_at(v, s.letter, s.sign);
        if (!e) throw membership_error("word leaves the subgroup graph");
        if (role[*e] >= 0) out.push_back(Syllable{role[*e], s.sign});
        v = *b.graph.step(v, s.letter, s.sign);
    }
    if (v != CoreGraph::basepoint)
        throw membership_error("word does not close up at the basepoint");
    return Word(std::move(out));
}

} // namespace limone
