#include "rephom/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace rephom {

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(std::uint32_t q, std::uint32_t root_order, std::uint32_t root) : q_(q) {
    if (q < 2 || q >= (1u << 31))
        fail(ErrorCode::ConfigError, "prime field size must be in [2, 2^31)");
    // Cheap primality check; field sizes are user input, not hot-path data.
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) fail(ErrorCode::ConfigError, "field size " + std::to_string(q) + " is not prime");
    if (root_order > 0) {
        if ((q - 1) % root_order != 0)
            fail(ErrorCode::ConfigError, "F_" + std::to_string(q) + " has no root of unity of order " +
                                             std::to_string(root_order));
        root_order_ = root_order;
        if (root != 0) {
            if (pow(root % q, root_order) != one())
                fail(ErrorCode::ConfigError, "declared zeta is not an N-th root of unity");
            for (std::uint32_t d = 1; d < root_order; ++d)
                if (root_order % d == 0 && pow(root % q, d) == one())
                    fail(ErrorCode::ConfigError, "declared zeta has order < N");
            root_ = root % q;
        } else {
            // Smallest element of exact order root_order; deterministic.
            for (std::uint32_t x = 1; x < q; ++x) {
                if (pow(x, root_order) != one()) continue;
                bool exact = true;
                for (std::uint32_t d = 1; d < root_order && exact; ++d)
                    if (root_order % d == 0 && pow(x, d) == one()) exact = false;
                if (exact) {
                    root_ = x;
                    break;
                }
            }
            if (root_ == 0) fail(ErrorCode::ConfigError, "no primitive root of requested order found");
        }
    }
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) fail(ErrorCode::NotInvertible, "division by zero in " + name());
    // Extended Euclid on (a, q).
    std::int64_t t = 0, new_t = 1, r = q_, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += q_;
    return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
    Elem result = one();
    Elem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

PrimeField::Elem PrimeField::zeta() const {
    if (root_order_ == 0)
        fail(ErrorCode::ConfigError, name() + " was constructed without a designated root of unity");
    return root_;
}

// ------------------------------------------------------ cyclotomic polynomial

namespace {

// Quotient of exact polynomial division over Q, lowest degree first.
std::vector<mpq_class> poly_divide_exact(std::vector<mpq_class> num, const std::vector<mpq_class>& den) {
    std::vector<mpq_class> quot(num.size() - den.size() + 1, mpq_class(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpq_class c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return quot;
}

} // namespace

std::vector<mpq_class> cyclotomic_polynomial(unsigned n) {
    if (n == 0) fail(ErrorCode::ConfigError, "cyclotomic index must be >= 1");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<mpq_class> result(n + 1, mpq_class(0));
    result[0] = -1;
    result[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) result = poly_divide_exact(std::move(result), cyclotomic_polynomial(d));
    return result;
}

// ----------------------------------------------------------- CyclotomicField

CyclotomicField::CyclotomicField(unsigned n) : n_(n), modulus_(cyclotomic_polynomial(n)) {
    if (n < 1) fail(ErrorCode::ConfigError, "cyclotomic index must be >= 1");
}

CyclotomicField::Elem CyclotomicField::reduce(std::vector<mpq_class> poly) const {
    const std::size_t deg = degree();
    // Reduce modulo the monic modulus.
    for (std::size_t i = poly.size(); i-- > 0;) {
        if (i < deg) break;
        mpq_class c = poly[i];
        if (sgn(c) == 0) continue;
        poly[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * modulus_[j];
    }
    poly.resize(std::min<std::size_t>(poly.size(), deg));
    while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
    return Elem{std::move(poly)};
}

CyclotomicField::Elem CyclotomicField::from_long(long v) const {
    if (v == 0) return {};
    return reduce({mpq_class(v)});
}

CyclotomicField::Elem CyclotomicField::from_fraction(long num, long den) const {
    mpq_class v(num, den);
    v.canonicalize();
    return from_rational(v);
}

CyclotomicField::Elem CyclotomicField::from_rational(const mpq_class& v) const {
    if (sgn(v) == 0) return {};
    return reduce({v});
}

CyclotomicField::Elem CyclotomicField::zeta(long power) const {
    long e = power % static_cast<long>(n_);
    if (e < 0) e += n_;
    std::vector<mpq_class> poly(static_cast<std::size_t>(e) + 1, mpq_class(0));
    poly.back() = 1;
    return reduce(std::move(poly));
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
    std::vector<mpq_class> out(std::max(a.c.size(), b.c.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
    while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
    return Elem{std::move(out)};
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
    Elem out = a;
    for (auto& c : out.c) c = -c;
    return out;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
    if (a.c.empty() || b.c.empty()) return {};
    std::vector<mpq_class> out(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    }
    return reduce(std::move(out));
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
    if (a.c.empty()) fail(ErrorCode::NotInvertible, "division by zero in " + name());
    // Extended Euclid in Q[x] for gcd(a, Phi_N) = 1.
    std::vector<mpq_class> r0 = modulus_, r1 = a.c;
    std::vector<mpq_class> t0, t1 = {mpq_class(1)};
    auto trim = [](std::vector<mpq_class>& p) {
        while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    };
    while (!r1.empty()) {
        // r0 = q * r1 + r2
        std::vector<mpq_class> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, mpq_class(0));
        std::vector<mpq_class> rem = r0;
        for (std::size_t i = q.size(); i-- > 0;) {
            if (rem.size() < i + r1.size()) continue;
            mpq_class c = rem[i + r1.size() - 1] / r1.back();
            q[i] = c;
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
        }
        trim(rem);
        // t2 = t0 - q * t1
        std::vector<mpq_class> qt(q.empty() || t1.empty() ? 0 : q.size() + t1.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (sgn(q[i]) == 0) continue;
            for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
        }
        std::vector<mpq_class> t2(std::max(t0.size(), qt.size()), mpq_class(0));
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd; t0 / r0 is the inverse.
    if (r0.size() != 1)
        fail(ErrorCode::NotInvertible, "element shares a factor with the modulus in " + name());
    for (auto& c : t0) c /= r0[0];
    return reduce(std::move(t0));
}

std::string CyclotomicField::str(const Elem& a) const {
    if (a.c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        mpq_class c = a.c[i];
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool unit_coeff = (c == 1) && i > 0;
        if (!unit_coeff) os << c.get_str();
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace rephom
