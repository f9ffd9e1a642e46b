#include "rephom/liegroups.hpp"

#include <sstream>

namespace rephom {

std::string AlgGroup::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "x";
        switch (factors[i].kind) {
            case Kind::GL: os << "GL" << factors[i].n; break;
            case Kind::SL: os << "SL" << factors[i].n; break;
            case Kind::Torus: os << "T^" << factors[i].n; break;
        }
    }
    return os.str();
}

AlgGroup parse_group(const std::string& spec) {
    AlgGroup g;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t next = spec.find('x', pos);
        std::string part = spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        AlgGroup::Factor fa{};
        std::string num;
        if (part.rfind("GL", 0) == 0) {
            fa.kind = AlgGroup::Kind::GL;
            num = part.substr(2);
        } else if (part.rfind("SL", 0) == 0) {
            fa.kind = AlgGroup::Kind::SL;
            num = part.substr(2);
        } else if (part.rfind("T^", 0) == 0) {
            fa.kind = AlgGroup::Kind::Torus;
            num = part.substr(2);
        } else if (part.rfind("T", 0) == 0 && part.size() > 1) {
            fa.kind = AlgGroup::Kind::Torus;
            num = part.substr(1);
        } else {
            fail(ErrorCode::ConfigError, "unknown group factor: '" + part + "'");
        }
        try {
            std::size_t used = 0;
            fa.n = std::stoi(num, &used);
            if (used != num.size()) throw std::invalid_argument(num);
        } catch (...) {
            fail(ErrorCode::ConfigError, "bad group size in '" + part + "'");
        }
        if (fa.n < 1) fail(ErrorCode::ConfigError, "group size must be >= 1");
        if (fa.kind == AlgGroup::Kind::SL && fa.n < 2)
            fail(ErrorCode::ConfigError, "SL(n) needs n >= 2");
        g.factors.push_back(fa);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (g.factors.empty()) fail(ErrorCode::ConfigError, "empty group spec");
    return g;
}

GroupData group_data(const AlgGroup& g) {
    GroupData d;
    d.dim = g.dim();
    d.rank = g.rank();
    d.center_dim = g.center_dim();
    std::vector<int> exps;
    bool known = true;
    for (const auto& fa : g.factors) {
        if (fa.kind == AlgGroup::Kind::GL) {
            known = false; // the paper fixes no exponent convention for GL_n
        } else if (fa.kind == AlgGroup::Kind::SL) {
            for (int m = 1; m < fa.n; ++m) exps.push_back(m);
        }
        // tori contribute no exponents
    }
    if (known) d.exponents = std::move(exps);
    return d;
}

} // namespace rephom
