#include "rephom/config.hpp"

#include <cctype>
#include <sstream>

namespace rephom {

FieldVariant parse_field(const std::string& spec) {
    if (spec == "q" || spec == "Q") return RationalField{};
    if (spec.rfind("fq:", 0) == 0) {
        std::string body = spec.substr(3);
        auto colon = body.find(':');
        std::string qs = colon == std::string::npos ? body : body.substr(0, colon);
        std::uint32_t q = 0, order = 0, zeta = 0;
        try {
            q = static_cast<std::uint32_t>(std::stoul(qs));
        } catch (...) {
            fail(ErrorCode::ConfigError, "bad prime in field spec: '" + spec + "'");
        }
        if (colon != std::string::npos) {
            std::istringstream in(body.substr(colon + 1));
            std::string item;
            while (std::getline(in, item, ',')) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    fail(ErrorCode::ConfigError, "bad field option: '" + item + "'");
                std::string k = item.substr(0, eq), v = item.substr(eq + 1);
                try {
                    if (k == "n")
                        order = static_cast<std::uint32_t>(std::stoul(v));
                    else if (k == "zeta")
                        zeta = static_cast<std::uint32_t>(std::stoul(v));
                    else
                        fail(ErrorCode::ConfigError, "unknown field option: '" + k + "'");
                } catch (const Error&) {
                    throw;
                } catch (...) {
                    fail(ErrorCode::ConfigError, "bad field option value: '" + item + "'");
                }
            }
        }
        if (zeta != 0 && order == 0)
            fail(ErrorCode::ConfigError, "zeta requires n=<order> in the field spec");
        return PrimeField(q, order, zeta);
    }
    if (spec.rfind("cyclotomic:", 0) == 0) {
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(std::stoul(spec.substr(11)));
        } catch (...) {
            fail(ErrorCode::ConfigError, "bad cyclotomic index in '" + spec + "'");
        }
        return CyclotomicField(n);
    }
    fail(ErrorCode::ConfigError, "unknown field spec: '" + spec + "' (use q, fq:<q>, cyclotomic:<N>)");
}

std::string field_str(const FieldVariant& f) {
    return std::visit([](const auto& ff) { return ff.name(); }, f);
}

namespace {

// One term of a scalar literal: [sign] [rational] [* z[^k]] over position i.
template <class F>
typename F::Elem zeta_power(const F& f, long k);

template <>
RationalField::Elem zeta_power<RationalField>(const RationalField&, long) {
    fail(ErrorCode::ConfigError, "'z' literals need a cyclotomic or prime field with a root");
}

template <>
PrimeField::Elem zeta_power<PrimeField>(const PrimeField& f, long k) {
    auto z = f.zeta();
    long order = f.root_order();
    long e = ((k % order) + order) % order;
    return f.pow(z, static_cast<std::uint64_t>(e));
}

template <>
CyclotomicField::Elem zeta_power<CyclotomicField>(const CyclotomicField& f, long k) {
    return f.zeta(k);
}

} // namespace

template <class F>
typename F::Elem parse_scalar(const F& f, const std::string& text) {
    auto result = f.zero();
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) fail(ErrorCode::ConfigError, "empty scalar literal");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail(ErrorCode::ConfigError, "expected + or - in scalar literal: '" + text + "'");
        }
        first = false;
        long num = 1, den = 1;
        bool saw_number = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            saw_number = true;
            num = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                num = num * 10 + (text[i++] - '0');
            skip_ws();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skip_ws();
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    fail(ErrorCode::ConfigError, "bad fraction in scalar literal: '" + text + "'");
                den = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    den = den * 10 + (text[i++] - '0');
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long zexp = 0;
        bool saw_z = false;
        if (i < text.size() && (text[i] == 'z' || text[i] == 'Z')) {
            saw_z = true;
            zexp = 1;
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                long e = 0;
                long esign = 1;
                if (i < text.size() && text[i] == '-') {
                    esign = -1;
                    ++i;
                }
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    fail(ErrorCode::ConfigError, "bad exponent in scalar literal: '" + text + "'");
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    e = e * 10 + (text[i++] - '0');
                zexp = esign * e;
            }
        }
        if (!saw_number && !saw_z)
            fail(ErrorCode::ConfigError, "bad scalar literal: '" + text + "'");
        auto term = f.from_fraction(sign * num, den);
        if (saw_z) term = f.mul(term, zeta_power(f, zexp));
        result = f.add(result, term);
        skip_ws();
    }
    return result;
}

template RationalField::Elem parse_scalar<RationalField>(const RationalField&, const std::string&);
template PrimeField::Elem parse_scalar<PrimeField>(const PrimeField&, const std::string&);
template CyclotomicField::Elem parse_scalar<CyclotomicField>(const CyclotomicField&,
                                                             const std::string&);

RepSpec parse_rep(const std::string& spec) {
    RepSpec out;
    if (spec.empty() || spec == "trivial") {
        out.kind = RepSpec::Kind::Trivial;
        return out;
    }
    if (spec.rfind("diag:", 0) == 0 || spec.rfind("mat:", 0) == 0) {
        out.kind = RepSpec::Kind::Explicit;
        std::istringstream in(spec);
        std::string part;
        while (std::getline(in, part, ';')) {
            RepSpec::MatrixSpec ms;
            std::string body;
            if (part.rfind("diag:", 0) == 0) {
                ms.diagonal = true;
                body = part.substr(5);
            } else if (part.rfind("mat:", 0) == 0) {
                ms.diagonal = false;
                body = part.substr(4);
            } else {
                fail(ErrorCode::ConfigError, "bad matrix spec: '" + part + "'");
            }
            std::istringstream entries(body);
            std::string entry;
            while (std::getline(entries, entry, ',')) {
                while (!entry.empty() && entry.front() == ' ') entry.erase(entry.begin());
                while (!entry.empty() && entry.back() == ' ') entry.pop_back();
                if (!entry.empty()) ms.entries.push_back(entry);
            }
            if (ms.entries.empty()) fail(ErrorCode::ConfigError, "empty matrix spec: '" + part + "'");
            out.matrices.push_back(std::move(ms));
        }
        return out;
    }
    out.kind = RepSpec::Kind::Sampler;
    out.sampler = spec;
    return out;
}

} // namespace rephom
