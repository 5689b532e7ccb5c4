#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolring/poly.hpp"
#include "boolring/variety.hpp"

namespace boolring {

/// Default cap on the support size s of a polynomial fed to the 2^s
/// subset-iteration formulas.
inline constexpr unsigned kSubsetGuard = 20;

/// An integer-coefficient formal sum over the square-free multidegrees of
/// Q[y1..yn]/(y1^2,...,yn^2), stored densely (one coefficient per subset of
/// variables). The series of a monomial ideal is the 0/1 membership
/// indicator per multidegree; alternating combinations carry arbitrary
/// integers and the variety extraction reads the coefficient-1 positions.
class FineHilbertSeries {
public:
    FineHilbertSeries(unsigned n, unsigned guard);

    unsigned width() const { return n_; }

    std::int64_t coeff(const Monomial& m) const { return c_[m.mask()]; }
    std::int64_t coeff(std::uint64_t multidegree) const { return c_[multidegree]; }

    void add_at(std::uint64_t multidegree, std::int64_t delta) { c_[multidegree] += delta; }

    /// Adds delta to the coefficient of every multiple of m.
    void add_multiples(const Monomial& m, std::int64_t delta);

    /// Positions with coefficient exactly `value`, in coordinate-lex order.
    std::vector<Monomial> positions_with(std::int64_t value) const;

    /// Support of the series (nonzero positions) as monomials in term order.
    std::vector<Monomial> support() const;

    /// Every coefficient reduced modulo 2 (into {0,1}).
    FineHilbertSeries mod2() const;

    FineHilbertSeries& operator+=(const FineHilbertSeries& rhs);
    FineHilbertSeries& operator-=(const FineHilbertSeries& rhs);

    bool operator==(const FineHilbertSeries&) const = default;

private:
    unsigned n_;
    std::vector<std::int64_t> c_;
};

/// Fine Hilbert series of the monomial ideal generated by `gens` inside
/// Q[y]/(y^2): coefficient 1 at y^b iff some generator divides y^b. The
/// empty list gives the zero series; a unit generator gives the whole ring.
FineHilbertSeries series_of_monomial_ideal(const std::vector<Monomial>& gens, unsigned n,
                                           unsigned guard = kEnumGuard);

/// All lcms of k-element subsets of `monomials`, deduplicated and sorted.
/// k = 0 yields the unit monomial.
std::vector<Monomial> lcm_rank(const std::vector<Monomial>& monomials, unsigned k);

/// V(f) via the alternating sum h_0 - h_1 + h_2 - ... of Hilbert series of
/// the ideals generated by the k-fold lcms of supp(f).
std::vector<Monomial> variety_explicit1(const BoolPoly& f, unsigned enum_guard = kEnumGuard,
                                        unsigned subset_guard = kSubsetGuard);

/// V(f) via the signed combination g_0 + (1/2) * sum (-2)^k g_k of principal
/// series, realized with the integral weights (-1)^k 2^(k-1).
std::vector<Monomial> variety_explicit2(const BoolPoly& f, unsigned enum_guard = kEnumGuard,
                                        unsigned subset_guard = kSubsetGuard);

/// V(f) by reducing the integer series of (1) minus the principal series of
/// each support monomial modulo 2; agrees with variety_explicit2.
std::vector<Monomial> variety_mod2_projection(const BoolPoly& f, unsigned enum_guard = kEnumGuard,
                                              unsigned subset_guard = kSubsetGuard);

struct SolutionCount {
    std::uint64_t count = 0;
    /// The signed correction terms d_1..d_s of the closed form
    /// 2^n + d_1 + ... + d_s, as exact decimal strings.
    std::vector<std::string> d_terms;
    /// Support size of the combined defining polynomial.
    unsigned support_size = 0;
    /// Term high-water mark of the reduction to one polynomial.
    std::size_t term_high_water = 0;
};

/// Exact number of common solutions of the system, computed without any
/// point enumeration: the system is reduced to its defining polynomial
/// m_1 + ... + m_s and counted as 2^n + sum d_k with
///   d_k = (1/2)(-2)^k * sum over k-subsets of 2^(n - deg lcm).
/// The count of square-free multiples of a degree-d monomial is 2^(n-d),
/// hence the n in the exponent; e.g. x1 + x2 + x2*x3 over three variables
/// counts 8 - 10 + 10 - 4 = 4 solutions. The 1/2 factor is folded into
/// (-1)^k 2^(k-1) so every intermediate stays integral (128-bit, exact under
/// the guards below).
SolutionCount count_solutions(const PolySystem& sys, unsigned subset_guard = kSubsetGuard,
                              std::size_t term_guard = (std::size_t{1} << 22));

/// The separator S_p: the sum of all monomial multiples of x^p, which
/// evaluates to 1 at p and to 0 everywhere else.
BoolPoly separator(const Monomial& p, unsigned guard = kEnumGuard);

/// The sum of S_p over the points p of P where x^a(p) = 1; agrees with x^a
/// at every point of P. P must be nonempty.
BoolPoly interpolation_nf(const Monomial& a, const std::vector<Monomial>& points,
                          unsigned guard = kEnumGuard);

}  // namespace boolring
