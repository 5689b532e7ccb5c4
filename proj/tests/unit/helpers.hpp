#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "boolring/parse.hpp"
#include "boolring/poly.hpp"

namespace testutil {

inline boolring::BoolPoly bp(std::string_view text, unsigned n) {
    return boolring::parse_poly(text, n);
}

/// Point from a coordinate string: point("101") is (1,0,1).
inline boolring::Monomial point(std::string_view coords) {
    boolring::Monomial p(static_cast<unsigned>(coords.size()));
    for (unsigned i = 0; i < coords.size(); ++i) {
        if (coords[i] == '1') p.set(i);
    }
    return p;
}

inline std::vector<boolring::Monomial> points(const std::vector<std::string>& coords) {
    std::vector<boolring::Monomial> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(point(c));
    std::sort(out.begin(), out.end(), boolring::point_less);
    return out;
}

/// Independent evaluation oracle: the truth table of f over all 2^n points,
/// indexed by variable mask (bit i = x_{i+1}), computed with a zeta
/// transform over GF(2) rather than per-point divisor counting.
inline std::vector<char> truth_table(const boolring::BoolPoly& f) {
    const unsigned n = f.width();
    std::vector<char> table(std::size_t{1} << n, 0);
    for (const auto& m : f.terms()) table[m.mask()] ^= 1;
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
            if (mask & bit) table[mask] ^= table[mask ^ bit];
        }
    }
    return table;
}

/// Zero set computed from the truth-table oracle, in coordinate-lex order.
inline std::vector<boolring::Monomial> oracle_variety(const boolring::BoolPoly& f) {
    std::vector<char> table = truth_table(f);
    std::vector<boolring::Monomial> zeros;
    const unsigned n = f.width();
    for (std::uint64_t ordinal = 0; ordinal < table.size(); ++ordinal) {
        boolring::Monomial p = boolring::point_from_ordinal(n, ordinal);
        if (!table[p.mask()]) zeros.push_back(std::move(p));
    }
    return zeros;
}

/// All 2^(2^n) polynomials in n variables, for exhaustive small-n laws.
inline std::vector<boolring::BoolPoly> all_polys(unsigned n) {
    const std::uint64_t monomials = std::uint64_t{1} << n;
    std::vector<boolring::BoolPoly> out;
    out.reserve(std::size_t{1} << monomials);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << monomials); ++code) {
        std::vector<boolring::Monomial> terms;
        for (std::uint64_t m = 0; m < monomials; ++m) {
            if ((code >> m) & 1u) terms.push_back(boolring::Monomial::from_mask(n, m));
        }
        out.push_back(boolring::BoolPoly::from_terms(n, std::move(terms)));
    }
    return out;
}

}  // namespace testutil
