#include "boolring/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boolring/errors.hpp"
#include "boolring/variety.hpp"

namespace boolring {

namespace {

void require_same_width(unsigned a, unsigned b) {
    if (a != b) throw std::invalid_argument("variable count mismatch between operands");
}

// Does f*h = g have a solution h? The unknown coefficient vector of h is a
// point of GF(2)^(2^n); column j of the system is the coefficient vector of
// f * m_j. Plain bitset Gaussian elimination; only consistency is needed.
bool divisibility_solvable(const BoolPoly& f, const BoolPoly& g, unsigned guard) {
    const unsigned n = f.width();
    check_enum_guard(n, guard, "equivalences_report");
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t words = (dim + 1 + 63) / 64;  // columns + augmented column

    auto term_index = [n](const Monomial& m) { return static_cast<std::size_t>(m.mask()); };

    // rows[r] = bitset over [columns | b].
    std::vector<std::vector<std::uint64_t>> rows(dim, std::vector<std::uint64_t>(words, 0));
    auto set_bit = [&](std::size_t r, std::size_t c) { rows[r][c >> 6] ^= std::uint64_t{1} << (c & 63u); };

    for (std::size_t j = 0; j < dim; ++j) {
        BoolPoly column = f * BoolPoly::from_terms(n, {Monomial::from_mask(n, j)});
        for (const Monomial& m : column.terms()) set_bit(term_index(m), j);
    }
    for (const Monomial& m : g.terms()) set_bit(term_index(m), dim);

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < dim && pivot_row < dim; ++col) {
        std::size_t sel = pivot_row;
        while (sel < dim && !((rows[sel][col >> 6] >> (col & 63u)) & 1u)) ++sel;
        if (sel == dim) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == pivot_row) continue;
            if ((rows[r][col >> 6] >> (col & 63u)) & 1u) {
                for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[pivot_row][w];
            }
        }
        ++pivot_row;
    }
    // Inconsistent iff some row reads 0 = 1.
    for (std::size_t r = 0; r < dim; ++r) {
        if (!((rows[r][dim >> 6] >> (dim & 63u)) & 1u)) continue;
        bool lhs_zero = true;
        for (std::size_t c = 0; c < dim && lhs_zero; ++c) {
            if ((rows[r][c >> 6] >> (c & 63u)) & 1u) lhs_zero = false;
        }
        if (lhs_zero) return false;
    }
    return true;
}

}  // namespace

BoolPoly defining_product(const PolySystem& sys, FactorOrder order,
                          std::size_t* term_high_water, std::optional<std::size_t> term_guard) {
    const unsigned n = sys.width();
    std::vector<const BoolPoly*> gens;
    gens.reserve(sys.size());
    for (const BoolPoly& g : sys.generators()) gens.push_back(&g);
    if (order == FactorOrder::size_sorted) {
        std::stable_sort(gens.begin(), gens.end(), [](const BoolPoly* a, const BoolPoly* b) {
            return a->support_size() < b->support_size();
        });
    }
    BoolPoly acc = BoolPoly::one(n);
    std::size_t high = acc.support_size();
    for (const BoolPoly* g : gens) {
        acc = acc * (*g + 1);
        high = std::max(high, acc.support_size());
        if (term_guard && acc.support_size() > *term_guard) {
            throw guard_error("defining_product: intermediate support of " +
                              std::to_string(acc.support_size()) + " terms exceeds the guard of " +
                              std::to_string(*term_guard));
        }
    }
    if (term_high_water) *term_high_water = high;
    return acc;
}

BooleanIdeal defining_ideal(const PolySystem& sys, FactorOrder order,
                            std::size_t* term_high_water, std::optional<std::size_t> term_guard) {
    return BooleanIdeal(defining_product(sys, order, term_high_water, term_guard) + 1);
}

BoolPoly normal_form(const BoolPoly& g, const BooleanIdeal& ideal, const BoolPoly& h) {
    require_same_width(g.width(), ideal.width());
    require_same_width(h.width(), ideal.width());
    return (ideal.defining() + 1) * g + h;
}

BoolPoly normal_form(const BoolPoly& g, const BooleanIdeal& ideal) {
    return normal_form(g, ideal, BoolPoly::zero(ideal.width()));
}

bool contains(const BooleanIdeal& ideal, const BoolPoly& g) {
    require_same_width(g.width(), ideal.width());
    return ((ideal.defining() + 1) * g).is_zero();
}

std::array<bool, 10> equivalences_report(const BooleanIdeal& ideal, const BoolPoly& g,
                                         unsigned guard) {
    const BoolPoly& f = ideal.defining();
    const unsigned n = ideal.width();
    require_same_width(g.width(), n);
    check_enum_guard(n, guard, "equivalences_report");

    std::array<bool, 10> bits{};

    // (1) g vanishes at every point of V(I).
    {
        bool ok = true;
        for (const Monomial& p : common_zeros(PolySystem(n, {f}), guard)) {
            if (g.eval(p)) {
                ok = false;
                break;
            }
        }
        bits[0] = ok;
    }

    // (2) J ⊆ I, tested as I + J = I on defining polynomials.
    bits[1] = ((f + 1) * (g + 1) + 1) == f;

    // (3) V(I) ⊆ V(J) with both varieties materialized as sets.
    {
        auto vi = variety_bruteforce(f, guard);
        auto vj = variety_bruteforce(g, guard);
        bits[2] = std::includes(vj.begin(), vj.end(), vi.begin(), vi.end(), point_less);
    }

    // (4) V(f) ⊆ V(g), streamed over all points.
    {
        bool ok = true;
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t c = 0; c < count && ok; ++c) {
            Monomial p = point_from_ordinal(n, c);
            if (!f.eval(p) && g.eval(p)) ok = false;
        }
        bits[3] = ok;
    }

    // (5) f*h = g has a solution h.
    bits[4] = divisibility_solvable(f, g, guard);

    // (6) f*g = g.
    bits[5] = (f * g) == g;

    // (7) V(f) ∩ V(g+1) = {}.
    bits[6] = point_intersection(variety_bruteforce(f, guard), variety_bruteforce(g + 1, guard))
                  .empty();

    // (8) (f+1)g = 0.
    bits[7] = ((f + 1) * g).is_zero();

    // (9) nf_0(g, f) = 0.
    bits[8] = normal_form(g, ideal).is_zero();

    // (10) nf_h(g, f) = h for a fixed h.
    {
        BoolPoly h = g + 1;  // an arbitrary but deterministic choice
        bits[9] = normal_form(g, ideal, h) == h;
    }

    return bits;
}

BooleanIdeal colon(const BooleanIdeal& lhs, const BooleanIdeal& rhs) {
    require_same_width(lhs.width(), rhs.width());
    const BoolPoly& f = lhs.defining();
    const BoolPoly& g = rhs.defining();
    return BooleanIdeal(g + f * g + 1);
}

BooleanIdeal sum(const BooleanIdeal& lhs, const BooleanIdeal& rhs) {
    require_same_width(lhs.width(), rhs.width());
    return BooleanIdeal((lhs.defining() + 1) * (rhs.defining() + 1) + 1);
}

BooleanIdeal intersect(const BooleanIdeal& lhs, const BooleanIdeal& rhs) {
    require_same_width(lhs.width(), rhs.width());
    return BooleanIdeal(lhs.defining() * rhs.defining());
}

}  // namespace boolring
