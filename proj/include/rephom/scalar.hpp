#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "rephom/errors.hpp"

namespace rephom {

// The three exact coefficient fields. Fields are context objects: elements are
// plain values, all arithmetic goes through the field instance. No floating
// point anywhere.

// --------------------------------------------------------------------------
// Q, arbitrary-precision rationals.
class RationalField {
public:
    using Elem = mpq_class;

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static Elem from_long(long v) { return Elem(v); }
    static Elem from_fraction(long num, long den) {
        Elem e(num, den);
        e.canonicalize();
        return e;
    }

    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static bool eq(const Elem& a, const Elem& b) { return a == b; }

    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) {
        if (is_zero(a)) fail(ErrorCode::NotInvertible, "division by zero in Q");
        return 1 / a;
    }
    static Elem div(const Elem& a, const Elem& b) { return a * inv(b); }

    static std::string str(const Elem& a) { return a.get_str(); }
    std::string name() const { return "Q"; }
};

// --------------------------------------------------------------------------
// F_q for an odd-sized prime field fits the SIMD kernels; q = 2 is allowed but
// served by the scalar path. Elements are canonical representatives in [0, q).
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t q, std::uint32_t root_order = 0, std::uint32_t root = 0);

    std::uint32_t q() const { return q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % q_; }
    Elem from_long(long v) const {
        long r = v % static_cast<long>(q_);
        if (r < 0) r += q_;
        return static_cast<Elem>(r);
    }
    Elem from_fraction(long num, long den) const { return mul(from_long(num), inv(from_long(den))); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= q_) s -= q_;
        return static_cast<Elem>(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + q_ - b; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % q_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    // Designated root of unity of order root_order (or 0 if none was set up).
    std::uint32_t root_order() const { return root_order_; }
    Elem zeta() const;

    std::string str(const Elem& a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(q_); }

private:
    std::uint32_t q_;
    std::uint32_t root_order_ = 0;
    Elem root_ = 0;
};

// --------------------------------------------------------------------------
// Q(zeta_N): polynomials in zeta reduced modulo the N-th cyclotomic polynomial.
// Canonical form: coefficient vector of degree < phi(N) with trailing zeros
// trimmed (the zero element is the empty vector).
class CyclotomicField {
public:
    struct Elem {
        std::vector<mpq_class> c;
        bool operator==(const Elem& o) const { return c == o.c; }
    };

    explicit CyclotomicField(unsigned n);

    unsigned n() const { return n_; }
    unsigned degree() const { return static_cast<unsigned>(modulus_.size()) - 1; }
    // Monic Phi_N, lowest degree first.
    const std::vector<mpq_class>& modulus() const { return modulus_; }

    Elem zero() const { return {}; }
    Elem one() const { return from_long(1); }
    Elem from_long(long v) const;
    Elem from_fraction(long num, long den) const;
    Elem from_rational(const mpq_class& v) const;
    // zeta^power, any integer power (reduced mod N).
    Elem zeta(long power = 1) const;

    bool is_zero(const Elem& a) const { return a.c.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    std::string str(const Elem& a) const;
    std::string name() const { return "Q(zeta_" + std::to_string(n_) + ")"; }

private:
    Elem reduce(std::vector<mpq_class> poly) const;

    unsigned n_;
    std::vector<mpq_class> modulus_;
};

// Monic N-th cyclotomic polynomial over Q, lowest degree first.
std::vector<mpq_class> cyclotomic_polynomial(unsigned n);

// --------------------------------------------------------------------------
using FieldVariant = std::variant<RationalField, PrimeField, CyclotomicField>;

} // namespace rephom
