#pragma once

#include <map>
#include <string>
#include <vector>

#include "rephom/errors.hpp"

namespace rephom {

// Free-group word: letters (generator index, exponent +-1). Words are stored
// as given; normalize() is the freely reduced view.
struct Word {
    std::vector<std::pair<int, int>> letters;

    static Word generator(int i, int exp = 1) { return Word{{{i, exp}}}; }
    bool empty() const { return letters.empty(); }

    Word operator*(const Word& o) const {
        Word out = *this;
        out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
        return out;
    }
    Word inverse() const {
        Word out;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            out.letters.push_back({it->first, -it->second});
        return out;
    }
    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator<(const Word& o) const { return letters < o.letters; }
};

Word normalize(const Word& w);
int max_generator(const Word& w);

// "a b A B": lowercase letters are generators (a = 0), uppercase inverses.
Word parse_word(const std::string& text);
std::string word_str(const Word& w);

// Finite formal sum of words with integer coefficients; normalized on
// construction (words freely reduced, zero coefficients dropped).
struct GroupRingElement {
    std::map<Word, long long> terms;

    static GroupRingElement zero() { return {}; }
    static GroupRingElement unit() { return of_word(Word{}); }
    static GroupRingElement of_word(const Word& w, long long coeff = 1);

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    bool operator==(const GroupRingElement& o) const { return terms == o.terms; }
};

struct Presentation {
    int n_generators = 0;
    std::vector<Word> relators;
};

// Fox derivative with respect to generator i: the left derivation with
// d(x_j) = delta_ij, d(uv) = d(u) + u d(v), d(x_i^-1) = -x_i^-1. Computed on
// the freely reduced form of w.
GroupRingElement fox_derivative(const Word& w, int i);

struct BraidWord {
    int strands = 2;
    std::vector<std::pair<int, int>> letters; // (i in 1..strands-1, exponent +-1)
};

// "s1 s2 S1": sK is sigma_K, capital S is the inverse letter.
BraidWord parse_braid(const std::string& text, int strands = 0);

// Images of the free generators under the Artin action of the braid;
// the list has length = strands.
std::vector<Word> artin_image(const BraidWord& braid);

// Number of cycles of the underlying permutation on {1..strands}.
int cycle_count(const BraidWord& braid);

// Underlying permutation: image[i] of strand i.
std::vector<int> braid_permutation(const BraidWord& braid);

} // namespace rephom
