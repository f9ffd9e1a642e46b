#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rephom/scalar.hpp"

namespace rephom {

// Field spec: "q" | "fq:<q>" | "fq:<q>:n=<N>[,zeta=<z>]" | "cyclotomic:<N>".
FieldVariant parse_field(const std::string& spec);
std::string field_str(const FieldVariant& f);

// Exact scalar literal: sums of terms `a`, `a/b`, `z`, `z^k`, `a*z^k`,
// e.g. "1", "-2/3", "z^2", "1+z", "2/3*z - 1". "z" requires a field with a
// designated root of unity.
template <class F>
typename F::Elem parse_scalar(const F& f, const std::string& text);

// Representation spec: "trivial" | ";"-separated per-generator matrices,
// each "diag:<entries>" or "mat:<row-major entries>" | sampler names handled
// by the CLI ("torus", "surface", "link", "diagroot", "torusknot:p,q").
struct RepSpec {
    enum class Kind { Trivial, Explicit, Sampler } kind = Kind::Trivial;
    struct MatrixSpec {
        bool diagonal = false;
        std::vector<std::string> entries;
    };
    std::vector<MatrixSpec> matrices; // Explicit
    std::string sampler;              // Sampler
};

RepSpec parse_rep(const std::string& spec);

} // namespace rephom
