#pragma once

#include <cstdint>
#include <vector>

#include "boolring/poly.hpp"

namespace boolring {

/// Default cap on exhaustive 2^n enumeration. Operations that walk the whole
/// point space take the guard explicitly and throw guard_error above it.
inline constexpr unsigned kEnumGuard = 24;

/// All 2^n points, in coordinate-lex order, where f vanishes. This is the
/// ground-truth oracle that every series-based variety method is checked
/// against.
std::vector<Monomial> variety_bruteforce(const BoolPoly& f, unsigned guard = kEnumGuard);

/// Common zeros of every generator of the system.
std::vector<Monomial> common_zeros(const PolySystem& sys, unsigned guard = kEnumGuard);

/// The polynomial whose support is all 2^n square-free monomials.
BoolPoly full_sum(unsigned n, unsigned guard = kEnumGuard);

/// Throws guard_error unless 2^n enumeration is allowed.
void check_enum_guard(unsigned n, unsigned guard, const char* what);

/// Point p of Z2^n from an enumeration counter such that counter order is
/// coordinate-lex order (x1 is the most significant coordinate).
Monomial point_from_ordinal(unsigned n, std::uint64_t ordinal);

/// Sorted point-set algebra (inputs and outputs in coordinate-lex order).
std::vector<Monomial> point_union(const std::vector<Monomial>& a, const std::vector<Monomial>& b);
std::vector<Monomial> point_intersection(const std::vector<Monomial>& a,
                                         const std::vector<Monomial>& b);
std::vector<Monomial> point_difference(const std::vector<Monomial>& a,
                                       const std::vector<Monomial>& b);
std::vector<Monomial> point_complement(const std::vector<Monomial>& a, unsigned n,
                                       unsigned guard = kEnumGuard);
std::vector<Monomial> sort_points(std::vector<Monomial> pts);

}  // namespace boolring
