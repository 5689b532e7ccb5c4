#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "boolring/poly.hpp"

namespace boolring {

/// Order in which the (f_i + 1) factors of a defining product are multiplied.
/// The result is order-free; only intermediate term growth depends on it.
enum class FactorOrder { input, size_sorted };

/// An ideal of Z2[x1..xn] containing every field polynomial x_i^2 + x_i,
/// represented by its single defining polynomial f. The field polynomials
/// are implicit and never materialized; two ideals are equal iff their
/// defining polynomials are.
class BooleanIdeal {
public:
    explicit BooleanIdeal(BoolPoly defining) : f_(std::move(defining)) {}

    static BooleanIdeal unit(unsigned n) { return BooleanIdeal(BoolPoly::one(n)); }
    static BooleanIdeal whole_variety(unsigned n) { return BooleanIdeal(BoolPoly::zero(n)); }

    unsigned width() const { return f_.width(); }
    const BoolPoly& defining() const { return f_; }

    bool is_unit() const { return f_.is_one(); }

    bool operator==(const BooleanIdeal&) const = default;

private:
    BoolPoly f_;
};

/// The product (f_1+1)...(f_m+1) over the system's generators; the empty
/// product is 1. Reports the intermediate term high-water mark if asked and
/// throws guard_error when an intermediate support exceeds term_guard.
BoolPoly defining_product(const PolySystem& sys, FactorOrder order = FactorOrder::input,
                          std::size_t* term_high_water = nullptr,
                          std::optional<std::size_t> term_guard = std::nullopt);

/// Reduction of a system to the ideal defined by (f_1+1)...(f_m+1) + 1.
/// The empty system yields the defining polynomial 0 (the whole variety).
BooleanIdeal defining_ideal(const PolySystem& sys, FactorOrder order = FactorOrder::input,
                            std::size_t* term_high_water = nullptr,
                            std::optional<std::size_t> term_guard = std::nullopt);

/// The normal form (f+1)g + h of g with respect to I; for a fixed h this is
/// constant on cosets of I, and h itself is the form of every member of I.
BoolPoly normal_form(const BoolPoly& g, const BooleanIdeal& ideal,
                     const BoolPoly& h);

/// nf_0: normal form with h = 0.
BoolPoly normal_form(const BoolPoly& g, const BooleanIdeal& ideal);

/// Ideal membership: g lies in I iff (f+1)g = 0.
bool contains(const BooleanIdeal& ideal, const BoolPoly& g);

/// Ten independently evaluated membership conditions that are provably
/// equivalent; kept in the public API as an executable consistency
/// certificate and diagnostic. All bits agree for every valid input.
///
/// Bits, in order:
///   0  g vanishes on every point of V(I)                 (g in I)
///   1  I + J == I for J = (field polys, g)               (J subset of I)
///   2  V(I) is a subset of V(J), varieties materialized
///   3  V(f) is a subset of V(g), streamed point check
///   4  f*h = g is solvable for h (GF(2) linear system)
///   5  f*g == g
///   6  V(f) and V(g+1) intersect trivially
///   7  (f+1)*g == 0
///   8  nf_0(g, f) == 0
///   9  nf_h(g, f) == h for a fixed h
std::array<bool, 10> equivalences_report(const BooleanIdeal& ideal, const BoolPoly& g,
                                         unsigned guard = 12);

/// I : J, defined by 1 + g + fg.
BooleanIdeal colon(const BooleanIdeal& lhs, const BooleanIdeal& rhs);

/// I + J, defined by (f+1)(g+1) + 1.
BooleanIdeal sum(const BooleanIdeal& lhs, const BooleanIdeal& rhs);

/// IJ = I ∩ J, defined by fg.
BooleanIdeal intersect(const BooleanIdeal& lhs, const BooleanIdeal& rhs);

}  // namespace boolring
