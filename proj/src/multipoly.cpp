#include "rephom/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rephom {

MultiPoly MultiPoly::variable(int n_vars, int index, long long coeff) {
    if (index < 0 || index >= n_vars) fail(ErrorCode::ConfigError, "variable index out of range");
    MultiPoly p(n_vars);
    Monomial m{std::vector<int>(n_vars, 0)};
    m.exp[index] = 1;
    p.add_term(m, coeff);
    return p;
}

MultiPoly MultiPoly::constant(int n_vars, long long value) {
    MultiPoly p(n_vars);
    p.add_term(Monomial{std::vector<int>(n_vars, 0)}, value);
    return p;
}

bool MultiPoly::homogeneous(int* degree_out) const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        if (deg < 0)
            deg = m.degree();
        else if (m.degree() != deg)
            return false;
    }
    if (degree_out) *degree_out = std::max(deg, 0);
    return true;
}

void MultiPoly::add_term(const Monomial& m, long long coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(m.exp.size()) != n_vars_)
        fail(ErrorCode::ConfigError, "monomial has wrong variable count");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out(n_vars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial prod{std::vector<int>(n_vars_)};
            for (int i = 0; i < n_vars_; ++i) prod.exp[i] = m1.exp[i] + m2.exp[i];
            out.add_term(prod, c1 * c2);
        }
    return out;
}

MultiPoly MultiPoly::operator*(long long scalar) const {
    MultiPoly out(n_vars_);
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * scalar);
    return out;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long long coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool printed = false;
        if (coeff != 1 || m.degree() == 0) {
            os << coeff;
            printed = true;
        }
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (printed) os << "*";
            os << names[i];
            if (m.exp[i] > 1) os << "^" << m.exp[i];
            printed = true;
        }
    }
    return os.str();
}

std::vector<Monomial> monomials_of_degree(int n_vars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (n_vars == 0) {
        if (degree == 0) out.push_back(Monomial{{}});
        return out;
    }
    Monomial cur{std::vector<int>(n_vars, 0)};
    // enumerate recursively, then sort into grlex order
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n_vars - 1) {
            cur.exp[var] = remaining;
            out.push_back(cur);
            cur.exp[var] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur.exp[var] = e;
            rec(var + 1, remaining - e);
        }
        cur.exp[var] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

long long count_monomials(int n_vars, int degree) {
    if (degree < 0) return 0;
    if (n_vars == 0) return degree == 0 ? 1 : 0;
    // C(degree + n_vars - 1, n_vars - 1)
    long long r = 1;
    for (int i = 1; i <= n_vars - 1; ++i) r = r * (degree + i) / i;
    return r;
}

} // namespace rephom
