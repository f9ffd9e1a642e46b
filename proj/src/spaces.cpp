#include "rephom/spaces.hpp"

#include <numeric>
#include <sstream>

namespace rephom {

namespace {

// "key=value,key=value" after the "kind:" prefix; values may contain spaces.
std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& body) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string item;
    std::istringstream in(body);
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::ConfigError, "expected key=value in space spec: '" + item + "'");
        auto trim = [](std::string s) {
            while (!s.empty() && s.front() == ' ') s.erase(s.begin());
            while (!s.empty() && s.back() == ' ') s.pop_back();
            return s;
        };
        out.push_back({trim(item.substr(0, eq)), trim(item.substr(eq + 1))});
    }
    return out;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        fail(ErrorCode::ConfigError, "bad integer for " + what + ": '" + s + "'");
    }
}

} // namespace

int modular_inverse(int a, int p) {
    int t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        int quot = r / new_r;
        int tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail(ErrorCode::ConfigError, std::to_string(a) + " is not invertible mod " + std::to_string(p));
    return ((t % p) + p) % p;
}

SpaceModel parse_space(const std::string& spec) {
    auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "surface") {
        int g = 0;
        for (const auto& [k, v] : parse_kv(body))
            if (k == "g") g = to_int(v, "genus");
        if (g < 1) fail(ErrorCode::ConfigError, "surface genus must be >= 1");
        return Surface{g};
    }
    if (kind == "link") {
        std::string braid;
        int strands = 0;
        for (const auto& [k, v] : parse_kv(body)) {
            if (k == "braid") braid = v;
            if (k == "strands") strands = to_int(v, "strands");
        }
        return LinkComplement{parse_braid(braid, strands)};
    }
    if (kind == "lens") {
        int p = 0;
        std::vector<int> q;
        for (const auto& [k, v] : parse_kv(body)) {
            if (k == "p") p = to_int(v, "lens p");
            if (k == "q") {
                std::istringstream in(v);
                std::string tok;
                while (in >> tok) q.push_back(to_int(tok, "lens q entry"));
            }
        }
        if (p <= 1) fail(ErrorCode::ConfigError, "lens p must be > 1");
        if (q.size() < 2) fail(ErrorCode::ConfigError, "lens space needs m >= 2 rotation parameters");
        for (int qi : q)
            if (std::gcd(qi, p) != 1)
                fail(ErrorCode::ConfigError, "lens parameter " + std::to_string(qi) +
                                                 " is not coprime to p = " + std::to_string(p));
        return LensSpace{p, q};
    }
    if (kind == "wedge") {
        int n = 0;
        for (const auto& [k, v] : parse_kv(body))
            if (k == "n") n = to_int(v, "wedge n");
        if (n < 1) fail(ErrorCode::ConfigError, "wedge needs n >= 1 circles");
        return WedgeCircles{n};
    }
    if (kind == "bz") {
        int p = 0;
        for (const auto& [k, v] : parse_kv(body))
            if (k == "p") p = to_int(v, "bz p");
        if (p < 2) fail(ErrorCode::ConfigError, "bz needs p >= 2");
        return CyclicGroupSpace{p};
    }
    if (kind == "pres") {
        // gens=3;rels=a b A B, a c A C
        Presentation p;
        std::istringstream in(body);
        std::string part;
        while (std::getline(in, part, ';')) {
            auto eq = part.find('=');
            if (eq == std::string::npos) fail(ErrorCode::ConfigError, "bad pres spec: '" + part + "'");
            std::string key = part.substr(0, eq), val = part.substr(eq + 1);
            if (key == "gens") {
                p.n_generators = to_int(val, "generator count");
            } else if (key == "rels") {
                std::istringstream rels(val);
                std::string rel;
                while (std::getline(rels, rel, ',')) {
                    Word w = parse_word(rel);
                    if (!w.letters.empty()) p.relators.push_back(w);
                }
            }
        }
        if (p.n_generators < 1) fail(ErrorCode::ConfigError, "pres needs gens >= 1");
        for (const auto& r : p.relators)
            if (max_generator(r) >= p.n_generators)
                fail(ErrorCode::ConfigError, "relator '" + word_str(r) + "' uses generators out of range");
        return FinitePresentationSpace{p, std::nullopt};
    }
    if (kind == "cp") {
        int r = 0;
        for (const auto& [k, v] : parse_kv(body))
            if (k == "r") r = to_int(v, "cp r");
        if (r < 1) fail(ErrorCode::ConfigError, "cp needs r >= 1");
        return ComplexProjective{r};
    }
    fail(ErrorCode::ConfigError, "unknown space kind: '" + kind + "'");
}

std::string space_str(const SpaceModel& x) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, Surface>) {
                os << "surface:g=" << s.genus;
            } else if constexpr (std::is_same_v<T, LinkComplement>) {
                os << "link:braid=";
                for (std::size_t i = 0; i < s.braid.letters.size(); ++i) {
                    if (i) os << " ";
                    os << (s.braid.letters[i].second > 0 ? "s" : "S") << s.braid.letters[i].first;
                }
                os << ",strands=" << s.braid.strands;
            } else if constexpr (std::is_same_v<T, LensSpace>) {
                os << "lens:p=" << s.p << ",q=";
                for (std::size_t i = 0; i < s.q.size(); ++i) os << (i ? " " : "") << s.q[i];
            } else if constexpr (std::is_same_v<T, WedgeCircles>) {
                os << "wedge:n=" << s.n;
            } else if constexpr (std::is_same_v<T, CyclicGroupSpace>) {
                os << "bz:p=" << s.p;
            } else if constexpr (std::is_same_v<T, FinitePresentationSpace>) {
                os << "pres:gens=" << s.presentation.n_generators << ";rels=";
                for (std::size_t i = 0; i < s.presentation.relators.size(); ++i)
                    os << (i ? ", " : "") << word_str(s.presentation.relators[i]);
            } else {
                os << "cp:r=" << s.r;
            }
            return os.str();
        },
        x);
}

Presentation surface_presentation(int genus) {
    Presentation p;
    p.n_generators = 2 * genus;
    Word rel;
    for (int i = 0; i < genus; ++i) {
        const int a = 2 * i, b = 2 * i + 1;
        rel = rel * Word::generator(a) * Word::generator(b) * Word::generator(a, -1) *
              Word::generator(b, -1);
    }
    p.relators.push_back(rel);
    return p;
}

Presentation link_presentation(const BraidWord& braid) {
    Presentation p;
    p.n_generators = braid.strands;
    auto images = artin_image(braid);
    for (int i = 0; i < braid.strands; ++i)
        p.relators.push_back(normalize(Word::generator(i) * images[i].inverse()));
    return p;
}

PresentationInfo presentation_of(const SpaceModel& x) {
    return std::visit(
        [](const auto& s) -> PresentationInfo {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Surface>) {
                return {surface_presentation(s.genus), true};
            } else if constexpr (std::is_same_v<T, LinkComplement>) {
                return {link_presentation(s.braid), true};
            } else if constexpr (std::is_same_v<T, WedgeCircles>) {
                return {Presentation{s.n, {}}, true};
            } else if constexpr (std::is_same_v<T, FinitePresentationSpace>) {
                return {s.presentation, true};
            } else if constexpr (std::is_same_v<T, LensSpace>) {
                Word rel;
                for (int i = 0; i < s.p; ++i) rel = rel * Word::generator(0);
                return {Presentation{1, {rel}}, false};
            } else if constexpr (std::is_same_v<T, CyclicGroupSpace>) {
                Word rel;
                for (int i = 0; i < s.p; ++i) rel = rel * Word::generator(0);
                return {Presentation{1, {rel}}, false};
            } else {
                fail(ErrorCode::Unsupported, "no group presentation is served for CP^r");
            }
        },
        x);
}

long long euler_top(const SpaceModel& x) {
    return std::visit(
        [](const auto& s) -> long long {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Surface>) {
                return 2 - 2LL * s.genus;
            } else if constexpr (std::is_same_v<T, LinkComplement>) {
                return 0;
            } else if constexpr (std::is_same_v<T, LensSpace>) {
                return 0; // odd-dimensional closed manifold
            } else if constexpr (std::is_same_v<T, WedgeCircles>) {
                return 1 - static_cast<long long>(s.n);
            } else if constexpr (std::is_same_v<T, FinitePresentationSpace>) {
                if (s.declared_euler) return *s.declared_euler;
                return 1 - static_cast<long long>(s.presentation.n_generators) +
                       static_cast<long long>(s.presentation.relators.size());
            } else if constexpr (std::is_same_v<T, ComplexProjective>) {
                return s.r + 1;
            } else {
                fail(ErrorCode::Unsupported, "B Z_p has no finite cell model");
            }
        },
        x);
}

CotangentTemplate build_template(const SpaceModel& x, int bz_cutoff) {
    return std::visit(
        [bz_cutoff](const auto& s) -> CotangentTemplate {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Surface>) {
                return ConeTemplate{surface_presentation(s.genus)};
            } else if constexpr (std::is_same_v<T, WedgeCircles>) {
                return ConeTemplate{Presentation{s.n, {}}};
            } else if constexpr (std::is_same_v<T, FinitePresentationSpace>) {
                return ConeTemplate{s.presentation};
            } else if constexpr (std::is_same_v<T, LinkComplement>) {
                return LinkConeTemplate{s.braid};
            } else if constexpr (std::is_same_v<T, LensSpace>) {
                LensTemplate t{s.p, s.q, {}};
                for (int qk : s.q) t.l.push_back(modular_inverse(qk, s.p));
                return t;
            } else if constexpr (std::is_same_v<T, CyclicGroupSpace>) {
                return PeriodicTemplate{s.p, bz_cutoff};
            } else {
                fail(ErrorCode::Unsupported,
                     "CP^r is served only by the closed forms in the catalog module");
            }
        },
        x);
}

} // namespace rephom
