#include "boolring/duality.hpp"

#include <algorithm>
#include <stdexcept>

#include "boolring/hilbert.hpp"
#include "boolring/ideal.hpp"

namespace boolring {

namespace {

BoolPoly pol_singleton(const Monomial& p, unsigned n) {
    // 1 + prod_i (x_i + p_i + 1)
    BoolPoly product = BoolPoly::one(n);
    for (unsigned i = 0; i < n; ++i) {
        BoolPoly factor = BoolPoly::var(n, i);
        if (!p.test(i)) factor = factor + 1;
        product = product * factor;
    }
    return product + 1;
}

}  // namespace

BoolPoly points_to_poly(const std::vector<Monomial>& points, unsigned n) {
    std::vector<Monomial> terms = points;
    return BoolPoly::from_terms(n, std::move(terms));
}

std::vector<Monomial> poly_to_points(const BoolPoly& f) {
    return sort_points(f.terms());
}

BoolPoly pol(const std::vector<Monomial>& points, unsigned n) {
    BoolPoly acc = BoolPoly::one(n);
    for (const Monomial& p : points) {
        if (p.width() != n) throw std::invalid_argument("point width mismatch");
        acc = acc * pol_singleton(p, n);
    }
    return acc;
}

BoolPoly phi(const BoolPoly& f, unsigned guard) {
    return points_to_poly(variety_bruteforce(f, guard), f.width());
}

BoolPoly phi_square_check(const BoolPoly& f, unsigned guard) {
    const unsigned n = f.width();
    BoolPoly expected = f + full_sum(n, guard) + 1;
    if (phi(phi(f, guard), guard) != expected) {
        throw std::logic_error("phi_square_check: iterated phi disagrees with f + full_sum + 1");
    }
    return expected;
}

std::vector<Monomial> vanishing_dual(const BoolPoly& f, unsigned guard) {
    const unsigned n = f.width();
    std::vector<Monomial> result = variety_bruteforce(phi(f, guard), guard);

    std::vector<Monomial> expected = point_complement(poly_to_points(f), n, guard);
    const Monomial origin(n);
    if (f.has_constant_term()) {
        expected = point_union(expected, {origin});
    } else {
        expected = point_difference(expected, {origin});
    }
    if (result != expected) {
        throw std::logic_error("vanishing_dual: V(x^{V(f)}) disagrees with the adjusted complement");
    }
    return result;
}

BoolPoly inverse_variety(const std::vector<Monomial>& points, unsigned n, unsigned guard) {
    std::vector<Monomial> sorted = sort_points(points);
    BoolPoly canonical = pol(sorted, n);

    // Dual route: pick the polynomial whose support is the complement of the
    // target set, adjusted at the origin so that the target matches the
    // vanishing set of its phi image.
    std::vector<Monomial> support = point_complement(sorted, n, guard);
    const Monomial origin(n);
    const bool origin_in_target =
        std::binary_search(sorted.begin(), sorted.end(), origin, point_less);
    if (origin_in_target) {
        support = point_union(support, {origin});
    } else {
        support = point_difference(support, {origin});
    }
    BoolPoly dual = phi(points_to_poly(support, n), guard);

    if (dual != canonical) {
        throw std::logic_error("inverse_variety: dual route disagrees with pol");
    }
    return canonical;
}

std::vector<BoolPoly> factorize(const BoolPoly& f, unsigned guard) {
    std::vector<Monomial> points = variety_bruteforce(f, guard);
    std::sort(points.begin(), points.end(), term_less);
    std::vector<BoolPoly> factors;
    factors.reserve(points.size());
    for (const Monomial& p : points) factors.push_back(pol({p}, f.width()));
    return factors;
}

Parity variety_parity(const BoolPoly& f) {
    return f.has_full_monomial() ? Parity::odd : Parity::even;
}

std::optional<Monomial> particular_solution(const PolySystem& sys, std::size_t term_guard) {
    const unsigned n = sys.width();
    BoolPoly combined = defining_product(sys, FactorOrder::input, nullptr, term_guard) + 1;
    if (!combined.has_constant_term()) return Monomial(n);

    // Support scan in degree-then-lex order; terms() is already sorted so the
    // first certificate found is the canonical one.
    for (const Monomial& candidate : combined.terms()) {
        if (candidate.is_unit()) continue;
        bool clean = true;
        for (const Monomial& m : combined.terms()) {
            if (m.is_unit() || m == candidate) continue;
            if (m.degree() >= candidate.degree()) break;  // sorted by degree
            if (m.divides(candidate)) {
                clean = false;
                break;
            }
        }
        if (clean) return candidate;
    }
    return std::nullopt;
}

}  // namespace boolring
