#pragma once

#include <cstddef>
#include <optional>

#include "boolring/poly.hpp"

namespace boolring {

/// How the product (f_1+1)...(f_m+1) is accumulated.
///
/// components: generators are first grouped into variable-disjoint blocks;
///   each block's product is formed separately. The product is zero iff some
///   block product is zero, and the full monomial x1..xn lies in the product
///   support iff every block contributes its own top monomial and the blocks
///   cover all variables. This keeps structured inputs (e.g. the pair family)
///   linear instead of exponential without changing the verdict.
/// flat: one left-to-right accumulation over all generators.
/// degree_staged: the flat product truncated to total degree <= d for rising
///   d; a nonzero truncation already certifies satisfiability because term
///   degrees only grow under multiplication.
enum class SatSchedule { components, flat, degree_staged };

struct SatOptions {
    bool early_stop = false;  // bail out as soon as a partial product is zero
    SatSchedule schedule = SatSchedule::components;
    bool size_sorted = false;  // multiply smallest supports first
};

struct SatReport {
    bool satisfiable = false;
    /// Max support size seen across intermediate products.
    std::size_t term_high_water = 0;
    /// Whether x1..xn is a term of the final product; unset if the run
    /// short-circuited before the product was fully determined.
    std::optional<bool> full_monomial_in_product;
    /// |V| mod 2 certificate derived from the full-monomial bit.
    std::optional<bool> odd_solution_count;
};

/// Satisfiability of f_1 = ... = f_m = 0 by testing whether the product
/// (f_1+1)...(f_m+1) is the zero polynomial. Term blowup is the caller's
/// risk; the high-water mark makes it observable.
SatReport sat_product(const PolySystem& sys, const SatOptions& options = {});

}  // namespace boolring
