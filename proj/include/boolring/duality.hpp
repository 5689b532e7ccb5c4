#pragma once

#include <optional>
#include <vector>

#include "boolring/poly.hpp"
#include "boolring/variety.hpp"

namespace boolring {

/// x^{p_1} + ... + x^{p_s}: the polynomial whose support is the point set.
BoolPoly points_to_poly(const std::vector<Monomial>& points, unsigned n);

/// Log(f): the support of f read as points, in coordinate-lex order.
std::vector<Monomial> poly_to_points(const BoolPoly& f);

/// The unique boolean polynomial vanishing exactly on the given point set:
/// 1 for the empty set, 1 + prod(x_i + p_i + 1) for a single point, and the
/// product of the singleton polynomials in general.
BoolPoly pol(const std::vector<Monomial>& points, unsigned n);

/// phi(f) = x^{V(f)}. Applying phi twice adds the all-monomials polynomial
/// plus one; the fourth power is the identity.
BoolPoly phi(const BoolPoly& f, unsigned guard = kEnumGuard);

/// Returns f + full_sum + 1 and checks it against a literal phi(phi(f)).
BoolPoly phi_square_check(const BoolPoly& f, unsigned guard = kEnumGuard);

/// V(x^{V(f)}): the complement of Log(f), with the origin added when f has
/// a constant term and removed otherwise. The returned set is computed from
/// phi and verified against that description.
std::vector<Monomial> vanishing_dual(const BoolPoly& f, unsigned guard = kEnumGuard);

/// The unique g with V(g) = points, produced by pol and cross-checked
/// against the dual route through x^{V(.)} of the adjusted complement.
BoolPoly inverse_variety(const std::vector<Monomial>& points, unsigned n,
                         unsigned guard = kEnumGuard);

/// The factors pol({p}) for p in V(f), ordered by degree-then-lex of their
/// points; their boolean product is f.
std::vector<BoolPoly> factorize(const BoolPoly& f, unsigned guard = kEnumGuard);

enum class Parity { even, odd };

/// |V(f)| mod 2, read off the support alone: the count is odd exactly when
/// x1*...*xn is a term of f.
Parity variety_parity(const BoolPoly& f);

/// A single solution of the system extracted from the support of the
/// combined defining polynomial: the origin when the constant term is
/// absent, else any minimal support monomial none of whose proper non-unit
/// submonomials appears in the support. Empty when no such certificate
/// exists; callers may fall back to enumeration.
std::optional<Monomial> particular_solution(const PolySystem& sys,
                                            std::size_t term_guard = (std::size_t{1} << 22));

}  // namespace boolring
