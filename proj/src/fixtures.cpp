#include "boolring/fixtures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace boolring {

namespace {

constexpr unsigned kCyclicVars = 13;

Monomial cyclic_run(unsigned start, unsigned length) {
    Monomial m(kCyclicVars);
    for (unsigned k = 0; k < length; ++k) m.set((start + k) % kCyclicVars);
    return m;
}

}  // namespace

PolySystem fixture_cyclic_truncated(CyclicVariant variant) {
    const unsigned n = kCyclicVars;
    PolySystem sys(n);

    std::vector<Monomial> linear;
    for (unsigned i = 0; i < n; ++i) linear.push_back(Monomial::single(n, i));
    sys.push_back(BoolPoly::from_terms(n, std::move(linear)));

    std::vector<Monomial> adjacent;
    for (unsigned i = 0; i < n; ++i) adjacent.push_back(cyclic_run(i, 2));
    sys.push_back(BoolPoly::from_terms(n, std::move(adjacent)));

    std::vector<Monomial> triples;
    const unsigned triple_count = (variant == CyclicVariant::ex1) ? 6 : n;
    for (unsigned i = 0; i < triple_count; ++i) triples.push_back(cyclic_run(i, 3));
    sys.push_back(BoolPoly::from_terms(n, std::move(triples)));

    return sys;
}

PolySystem fixture_pair_family(unsigned pairs) {
    if (pairs == 0) throw std::invalid_argument("pair family needs at least one pair");
    const unsigned n = 2 * pairs;
    PolySystem sys(n);
    for (unsigned i = 0; i < pairs; ++i) {
        const unsigned a = 2 * i, b = 2 * i + 1;
        Monomial ab(n);
        ab.set(a);
        ab.set(b);
        sys.push_back(BoolPoly::from_terms(
            n, {ab, Monomial::single(n, a), Monomial::single(n, b), Monomial::unit(n)}));
    }
    return sys;
}

PolySystem random_quadratic_system(unsigned n, unsigned generators, unsigned terms_per_poly,
                                   std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two variables for quadratics");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> var(0, n - 1);
    PolySystem sys(n);
    for (unsigned g = 0; g < generators; ++g) {
        std::set<std::vector<unsigned>> picked;
        while (picked.size() < terms_per_poly) {
            unsigned a = var(rng), b = var(rng);
            std::vector<unsigned> indices;
            if (a == b) {
                indices = {a};
            } else {
                indices = {std::min(a, b), std::max(a, b)};
            }
            picked.insert(std::move(indices));
        }
        std::vector<Monomial> terms;
        for (const auto& indices : picked) terms.push_back(Monomial::from_indices(n, indices));
        sys.push_back(BoolPoly::from_terms(n, std::move(terms)));
    }
    return sys;
}

BoolPoly random_poly(unsigned n, unsigned max_terms, std::mt19937_64& rng) {
    if (n > 63) throw std::invalid_argument("random_poly supports up to 63 variables");
    const std::uint64_t space = std::uint64_t{1} << n;
    std::uniform_int_distribution<std::uint64_t> mask(0, space - 1);
    std::uniform_int_distribution<unsigned> count(0, std::min<unsigned>(max_terms,
                                                                        static_cast<unsigned>(space)));
    std::set<std::uint64_t> picked;
    const unsigned want = count(rng);
    while (picked.size() < want) picked.insert(mask(rng));
    std::vector<Monomial> terms;
    for (std::uint64_t m : picked) terms.push_back(Monomial::from_mask(n, m));
    return BoolPoly::from_terms(n, std::move(terms));
}

std::vector<Monomial> random_points(unsigned n, unsigned max_points, std::mt19937_64& rng) {
    if (n > 63) throw std::invalid_argument("random_points supports up to 63 variables");
    const std::uint64_t space = std::uint64_t{1} << n;
    std::uniform_int_distribution<std::uint64_t> mask(0, space - 1);
    std::uniform_int_distribution<unsigned> count(1, std::min<unsigned>(max_points,
                                                                        static_cast<unsigned>(space)));
    std::set<std::uint64_t> picked;
    const unsigned want = count(rng);
    while (picked.size() < want) picked.insert(mask(rng));
    std::vector<Monomial> points;
    for (std::uint64_t m : picked) points.push_back(Monomial::from_mask(n, m));
    std::sort(points.begin(), points.end(), point_less);
    return points;
}

ClauseSystem random_cnf(unsigned n, unsigned clauses, unsigned width, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("random_cnf needs at least one variable");
    if (width == 0 || width > 2 * n) throw std::invalid_argument("clause width out of range");
    std::uniform_int_distribution<unsigned> var(1, n);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::vector<int>> out;
    for (unsigned c = 0; c < clauses; ++c) {
        std::set<int> lits;
        while (lits.size() < width) {
            int v = static_cast<int>(var(rng));
            lits.insert(coin(rng) ? v : -v);
        }
        out.emplace_back(lits.begin(), lits.end());
    }
    return ClauseSystem(n, std::move(out));
}

}  // namespace boolring
