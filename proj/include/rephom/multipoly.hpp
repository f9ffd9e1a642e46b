#pragma once

#include <map>
#include <string>
#include <vector>

#include "rephom/errors.hpp"

namespace rephom {

// Graded-lexicographic monomial order on a fixed variable count.
struct Monomial {
    std::vector<int> exp;

    int degree() const {
        int d = 0;
        for (int e : exp) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exp == o.exp; }
    bool operator<(const Monomial& o) const {
        const int da = degree(), db = o.degree();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] != o.exp[i]) return exp[i] > o.exp[i]; // grlex: higher first power wins
        return false;
    }
};

// Sparse multivariate polynomial with integer coefficients; desk-scale
// arithmetic for the Koszul relation matrices.
class MultiPoly {
public:
    explicit MultiPoly(int n_vars = 0) : n_vars_(n_vars) {}

    static MultiPoly variable(int n_vars, int index, long long coeff = 1);
    static MultiPoly constant(int n_vars, long long value);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, long long>& terms() const { return terms_; }

    // All terms homogeneous of one degree (true for the zero polynomial).
    bool homogeneous(int* degree_out = nullptr) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(long long scalar) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, long long coeff);
    std::string str(const std::vector<std::string>& names) const;

private:
    int n_vars_;
    std::map<Monomial, long long> terms_;
};

// Monomials of the given total degree, in increasing grlex order.
std::vector<Monomial> monomials_of_degree(int n_vars, int degree);
long long count_monomials(int n_vars, int degree);

} // namespace rephom
