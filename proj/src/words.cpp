#include "rephom/words.hpp"

#include <algorithm>
#include <sstream>

namespace rephom {

Word normalize(const Word& w) {
    Word out;
    for (const auto& letter : w.letters) {
        if (letter.second != 1 && letter.second != -1)
            fail(ErrorCode::ConfigError, "word letters must have exponent +-1");
        if (!out.letters.empty() && out.letters.back().first == letter.first &&
            out.letters.back().second == -letter.second)
            out.letters.pop_back();
        else
            out.letters.push_back(letter);
    }
    return out;
}

int max_generator(const Word& w) {
    int m = -1;
    for (const auto& [g, e] : w.letters) m = std::max(m, g);
    return m;
}

Word parse_word(const std::string& text) {
    Word w;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch >= 'a' && ch <= 'z')
            w.letters.push_back({ch - 'a', 1});
        else if (ch >= 'A' && ch <= 'Z')
            w.letters.push_back({ch - 'A', -1});
        else
            fail(ErrorCode::ConfigError, std::string("bad character in word: '") + ch + "'");
    }
    return w;
}

std::string word_str(const Word& w) {
    if (w.letters.empty()) return "1";
    std::string s;
    for (const auto& [g, e] : w.letters) s.push_back(static_cast<char>((e > 0 ? 'a' : 'A') + g));
    return s;
}

GroupRingElement GroupRingElement::of_word(const Word& w, long long coeff) {
    GroupRingElement e;
    if (coeff != 0) e.terms[normalize(w)] = coeff;
    return e;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms) {
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms[w] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms) {
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms[w] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement out = *this;
    out += o;
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    GroupRingElement out = *this;
    out -= o;
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    GroupRingElement out;
    for (const auto& [w1, c1] : terms)
        for (const auto& [w2, c2] : o.terms) {
            Word prod = normalize(w1 * w2);
            auto it = out.terms.find(prod);
            if (it == out.terms.end()) {
                if (c1 * c2 != 0) out.terms[prod] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    return out;
}

GroupRingElement fox_derivative(const Word& w, int i) {
    const Word reduced = normalize(w);
    GroupRingElement result;
    Word prefix;
    for (const auto& [g, e] : reduced.letters) {
        if (g == i) {
            if (e == 1) {
                result += GroupRingElement::of_word(prefix);
            } else {
                // d(x^-1) = -x^-1, left-translated by the prefix
                Word term = prefix;
                term.letters.push_back({g, -1});
                result -= GroupRingElement::of_word(term);
            }
        }
        prefix.letters.push_back({g, e});
    }
    return result;
}

BraidWord parse_braid(const std::string& text, int strands) {
    BraidWord b;
    b.letters.clear();
    int max_index = 0;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.size() < 2 || (token[0] != 's' && token[0] != 'S'))
            fail(ErrorCode::ConfigError, "bad braid letter: '" + token + "'");
        int idx = 0;
        try {
            idx = std::stoi(token.substr(1));
        } catch (...) {
            fail(ErrorCode::ConfigError, "bad braid letter: '" + token + "'");
        }
        if (idx < 1) fail(ErrorCode::ConfigError, "braid letter index must be >= 1");
        max_index = std::max(max_index, idx);
        b.letters.push_back({idx, token[0] == 's' ? 1 : -1});
    }
    b.strands = strands > 0 ? strands : std::max(max_index + 1, 2);
    if (max_index + 1 > b.strands)
        fail(ErrorCode::ConfigError, "braid letter index exceeds strand count");
    return b;
}

std::vector<Word> artin_image(const BraidWord& braid) {
    const int n = braid.strands;
    // current[i] = image of x_i; applying the letters left to right yields
    // sigma_{l1} o sigma_{l2} o ... as an automorphism of F_n.
    std::vector<Word> current(n);
    for (int i = 0; i < n; ++i) current[i] = Word::generator(i);
    auto substitute = [&](const Word& w) {
        Word out;
        for (const auto& [g, e] : w.letters) {
            if (e == 1)
                out = out * current[g];
            else
                out = out * current[g].inverse();
        }
        return normalize(out);
    };
    for (const auto& [idx, exp] : braid.letters) {
        const int i = idx - 1; // 0-based strand
        Word img_i, img_next;
        if (exp == 1) {
            // sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            img_i = substitute(Word::generator(i) * Word::generator(i + 1) *
                               Word::generator(i, -1));
            img_next = current[i];
        } else {
            // sigma_i^-1: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            img_i = current[i + 1];
            img_next = substitute(Word::generator(i + 1, -1) * Word::generator(i) *
                                  Word::generator(i + 1));
        }
        current[i] = img_i;
        current[i + 1] = img_next;
    }
    for (auto& w : current) w = normalize(w);
    return current;
}

std::vector<int> braid_permutation(const BraidWord& braid) {
    std::vector<int> perm(braid.strands);
    for (int i = 0; i < braid.strands; ++i) perm[i] = i;
    for (const auto& [idx, exp] : braid.letters) std::swap(perm[idx - 1], perm[idx]);
    return perm;
}

int cycle_count(const BraidWord& braid) {
    auto perm = braid_permutation(braid);
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(perm[j]);
        }
    }
    return cycles;
}

} // namespace rephom
