#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "free_group.hpp"
#include "substitution.hpp"

namespace limone {

enum class RuleMode { Substitution, Endomorphism };

// Parsed rule file.  One rule per line, "letter -> image"; '#' starts a
// comment.  Letter names are identifiers.  Images are whitespace-separated
// letters, each optionally inverted by a trailing apostrophe.  When every
// letter is a single lowercase character the compact form is also accepted:
// tokens split into characters, uppercase meaning the inverse.
struct RuleFile {
    RuleMode mode = RuleMode::Substitution;
    Alphabet alphabet;
    std::vector<Word> images;
    std::vector<std::string> lines;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline bool is_identifier(const std::string& t) {
    if (t.empty() || !std::isalpha(static_cast<unsigned char>(t[0]))) return false;
    for (char c : t)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream in(s);
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

} // namespace detail

inline RuleFile parse_rules(const std::string& text, RuleMode mode) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            throw parse_error("missing '->' in rule: " + line);
        std::string lhs = detail::trim(line.substr(0, arrow));
        std::string rhs = detail::trim(line.substr(arrow + 2));
        if (!detail::is_identifier(lhs))
            throw parse_error("rule left side is not a letter name: '" + lhs + "'");
        raw.emplace_back(std::move(lhs), std::move(rhs));
    }
    if (raw.empty()) throw parse_error("no rules found");

    std::vector<std::string> names;
    names.reserve(raw.size());
    for (const auto& [lhs, rhs] : raw) {
        for (const std::string& seen : names)
            if (seen == lhs) throw parse_error("duplicate rule for letter '" + lhs + "'");
        names.push_back(lhs);
    }

    RuleFile file;
    file.mode = mode;
    file.alphabet = Alphabet(names);

    bool compact = true;
    for (const std::string& n : names)
        if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0])))
            compact = false;

    for (const auto& [lhs, rhs] : raw) {
        std::vector<Syllable> syl;
        for (const std::string& token : detail::split_tokens(rhs)) {
            if (compact) {
                for (std::size_t i = 0; i < token.size(); ++i) {
                    const char c = token[i];
                    if (c == '\'')
                        throw parse_error("apostrophe without a letter in '" + token + "'");
                    int sign = 1;
                    std::string base(1, c);
                    if (std::isupper(static_cast<unsigned char>(c))) {
                        sign = -1;
                        base[0] = static_cast<char>(
                            std::tolower(static_cast<unsigned char>(c)));
                        if (i + 1 < token.size() && token[i + 1] == '\'')
                            throw parse_error(
                                "apostrophe after an uppercase letter in '" + token + "'");
                    } else if (std::islower(static_cast<unsigned char>(c))) {
                        if (i + 1 < token.size() && token[i + 1] == '\'') {
                            sign = -1;
                            ++i;
                        }
                    } else {
                        throw parse_error(std::string("unexpected character '") + c +
                                          "' in rule image");
                    }
                    auto idx = file.alphabet.index(base);
                    if (!idx) throw parse_error("unknown letter '" + base + "'");
                    syl.push_back(Syllable{static_cast<int>(*idx), sign});
                }
            } else {
                std::string base = token;
                int sign = 1;
                if (!base.empty() && base.back() == '\'') {
                    sign = -1;
                    base.pop_back();
                }
                auto idx = file.alphabet.index(base);
                if (!idx) throw parse_error("unknown letter '" + base + "'");
                syl.push_back(Syllable{static_cast<int>(*idx), sign});
            }
        }
        if (syl.empty())
            throw invalid_input_error("empty image for letter '" + lhs + "'");
        if (mode == RuleMode::Substitution)
            for (const Syllable& s : syl)
                if (s.sign < 0)
                    throw invalid_input_error(
                        "inverse letters are not allowed in a substitution");
        file.images.push_back(Word(std::move(syl)));
    }

    for (std::size_t i = 0; i < names.size(); ++i)
        file.lines.push_back(names[i] + " -> " + file.images[i].to_string(file.alphabet));
    return file;
}

inline Substitution to_substitution(const RuleFile& file) {
    if (file.mode != RuleMode::Substitution)
        throw consistency_error("rule file was not parsed in substitution mode");
    std::vector<std::vector<int>> images;
    images.reserve(file.images.size());
    for (const Word& w : file.images) {
        std::vector<int> im;
        im.reserve(w.length());
        for (const Syllable& s : w.syllables()) im.push_back(s.letter);
        images.push_back(std::move(im));
    }
    return Substitution(file.alphabet, std::move(images));
}

inline FreeEndo to_endo(const RuleFile& file) {
    return FreeEndo(file.alphabet, file.images);
}

} // namespace limone
