#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer_matrix.hpp"

namespace limone {

// Named generating set of a free group.  Names are nonempty and distinct;
// everything downstream works with indices into it.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (letters_[i].empty()) throw domain_error("empty letter name");
            for (std::size_t j = i + 1; j < letters_.size(); ++j)
                if (letters_[i] == letters_[j])
                    throw domain_error("duplicate letter name: " + letters_[i]);
        }
    }

    // The basis x1..xk used for subgroups rewritten in their own rank.
    static Alphabet standard(std::size_t k) {
        std::vector<std::string> names;
        names.reserve(k);
        for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
        return Alphabet(std::move(names));
    }

    std::size_t size() const { return letters_.size(); }

    const std::string& name(std::size_t i) const {
        if (i >= letters_.size()) throw domain_error("letter index out of range");
        return letters_[i];
    }

    std::optional<std::size_t> index(const std::string& name) const {
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (letters_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> letters_;
};

// One signed letter occurrence.
struct Syllable {
    int letter = 0;
    int sign = 1;

    auto operator<=>(const Syllable&) const = default;
};

// Stack cancellation of adjacent inverse pairs.
inline std::vector<Syllable> free_reduce(const std::vector<Syllable>& in) {
    std::vector<Syllable> out;
    out.reserve(in.size());
    for (const Syllable& s : in) {
        if (s.sign != 1 && s.sign != -1) throw domain_error("syllable sign must be +1 or -1");
        if (!out.empty() && out.back().letter == s.letter && out.back().sign == -s.sign)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

// Freely reduced word; reduction is applied on construction, so every Word
// value is in normal form.
class Word {
public:
    Word() = default;

    explicit Word(std::vector<Syllable> syllables) : syl_(free_reduce(syllables)) {}

    static Word letter(int index, int sign = 1) { return Word({Syllable{index, sign}}); }

    const std::vector<Syllable>& syllables() const { return syl_; }
    std::size_t length() const { return syl_.size(); }
    bool empty() const { return syl_.empty(); }

    Word inverse() const {
        std::vector<Syllable> rev(syl_.rbegin(), syl_.rend());
        for (Syllable& s : rev) s.sign = -s.sign;
        Word w;
        w.syl_ = std::move(rev);
        return w;
    }

    Word operator*(const Word& rhs) const {
        std::vector<Syllable> cat = syl_;
        cat.insert(cat.end(), rhs.syl_.begin(), rhs.syl_.end());
        return Word(std::move(cat));
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    std::string to_string(const Alphabet& alphabet) const {
        if (syl_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < syl_.size(); ++i) {
            if (i > 0) out += ' ';
            out += alphabet.name(static_cast<std::size_t>(syl_[i].letter));
            if (syl_[i].sign < 0) out += '\'';
        }
        return out;
    }

private:
    std::vector<Syllable> syl_;
};

// Checked reduction against an alphabet: letter indices must be in range.
inline Word reduce(const Alphabet& alphabet, const std::vector<Syllable>& syllables) {
    for (const Syllable& s : syllables)
        if (s.letter < 0 || static_cast<std::size_t>(s.letter) >= alphabet.size())
            throw domain_error("letter index outside the alphabet");
    return Word(syllables);
}

// Endomorphism of the free group on the alphabet, given by the images of the
// generators.
class FreeEndo {
public:
    FreeEndo() = default;

    FreeEndo(Alphabet alphabet, std::vector<Word> images)
        : alphabet_(std::move(alphabet)), images_(std::move(images)) {
        if (images_.size() != alphabet_.size())
            throw dimension_error("image count does not match alphabet size");
        for (const Word& w : images_)
            for (const Syllable& s : w.syllables())
                if (s.letter < 0 || static_cast<std::size_t>(s.letter) >= alphabet_.size())
                    throw domain_error("image uses a letter outside the alphabet");
    }

    static FreeEndo identity(const Alphabet& alphabet) {
        std::vector<Word> images;
        images.reserve(alphabet.size());
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            images.push_back(Word::letter(static_cast<int>(i)));
        return FreeEndo(alphabet, std::move(images));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Word>& images() const { return images_; }

    const Word& image(std::size_t i) const {
        if (i >= images_.size()) throw domain_error("letter index out of range");
        return images_[i];
    }

    bool operator==(const FreeEndo&) const = default;

private:
    Alphabet alphabet_;
    std::vector<Word> images_;
};

inline Word apply(const FreeEndo& e, const Word& w) {
    std::vector<Syllable> out;
    for (const Syllable& s : w.syllables()) {
        if (s.letter < 0 || static_cast<std::size_t>(s.letter) >= e.alphabet().size())
            throw domain_error("word uses a letter outside the alphabet");
        const Word& im = e.image(static_cast<std::size_t>(s.letter));
        if (s.sign > 0) {
            for (const Syllable& t : im.syllables()) out.push_back(t);
        } else {
            for (auto it = im.syllables().rbegin(); it != im.syllables().rend(); ++it)
                out.push_back(Syllable{it->letter, -it->sign});
        }
    }
    return Word(std::move(out));
}

// s after t: the composite sends each letter through t first, then s.
inline FreeEndo compose(const FreeEndo& s, const FreeEndo& t) {
    if (s.alphabet() != t.alphabet())
        throw domain_error("composition of endomorphisms over different alphabets");
    std::vector<Word> images;
    images.reserve(t.images().size());
    for (const Word& w : t.images()) images.push_back(apply(s, w));
    return FreeEndo(s.alphabet(), std::move(images));
}

inline FreeEndo iterate(const FreeEndo& e, unsigned n) {
    FreeEndo acc = FreeEndo::identity(e.alphabet());
    for (unsigned i = 0; i < n; ++i) acc = compose(e, acc);
    return acc;
}

// Row i is the exponent vector of the image of letter i, so abelianized
// vectors act on the right and iteration becomes matrix power on the right.
inline IntMatrix abelianization(const FreeEndo& e) {
    const std::size_t r = e.alphabet().size();
    IntMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (const Syllable& s : e.image(i).syllables())
            m.at(i, static_cast<std::size_t>(s.letter)) += s.sign;
    return m;
}

} // namespace limone
