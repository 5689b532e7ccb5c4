#include "boolring/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "boolring/errors.hpp"
#include "boolring/ideal.hpp"
#include "boolring/variety.hpp"

namespace boolring {

namespace {

__extension__ typedef __int128 int128;

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool negative = v < 0;
    // Avoid overflow on the minimum value by negating digit by digit.
    std::string digits;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        v /= 10;
        digits += static_cast<char>('0' + (d < 0 ? -d : d));
    }
    if (negative) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

void check_subset_guard(std::size_t s, unsigned guard, const char* what) {
    const unsigned cap = std::min(guard, 62u);  // 2^s subsets are iterated in a 64-bit counter
    if (s > cap) {
        throw guard_error(std::string(what) + ": support size " + std::to_string(s) +
                          " exceeds the subset-iteration guard of " + std::to_string(cap));
    }
}

// Walks every superset of `mask` within n variables.
template <typename Fn>
void for_each_superset(std::uint64_t mask, unsigned n, Fn&& fn) {
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    const std::uint64_t free_bits = all & ~mask;
    std::uint64_t t = free_bits;
    while (true) {
        fn(mask | t);
        if (t == 0) break;
        t = (t - 1) & free_bits;
    }
}

// Drops generators that are multiples of another generator; the ideal and
// hence its series are unchanged.
std::vector<Monomial> minimize_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), term_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& keep : minimal) {
            if (keep.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(m);
    }
    return minimal;
}

std::vector<std::uint64_t> support_masks(const BoolPoly& f) {
    std::vector<std::uint64_t> masks;
    masks.reserve(f.support_size());
    for (const Monomial& m : f.terms()) masks.push_back(m.mask());
    return masks;
}

}  // namespace

FineHilbertSeries::FineHilbertSeries(unsigned n, unsigned guard) : n_(n) {
    check_enum_guard(n, guard, "FineHilbertSeries");
    c_.assign(std::size_t{1} << n, 0);
}

void FineHilbertSeries::add_multiples(const Monomial& m, std::int64_t delta) {
    if (m.width() != n_) throw std::invalid_argument("multidegree width mismatch");
    for_each_superset(m.mask(), n_, [&](std::uint64_t sup) { c_[sup] += delta; });
}

std::vector<Monomial> FineHilbertSeries::positions_with(std::int64_t value) const {
    std::vector<Monomial> out;
    const std::uint64_t count = std::uint64_t{1} << n_;
    for (std::uint64_t ordinal = 0; ordinal < count; ++ordinal) {
        Monomial p = point_from_ordinal(n_, ordinal);
        if (c_[p.mask()] == value) out.push_back(std::move(p));
    }
    return out;
}

std::vector<Monomial> FineHilbertSeries::support() const {
    std::vector<Monomial> out;
    for (std::uint64_t mask = 0; mask < c_.size(); ++mask) {
        if (c_[mask] != 0) out.push_back(Monomial::from_mask(n_, mask));
    }
    std::sort(out.begin(), out.end(), term_less);
    return out;
}

FineHilbertSeries FineHilbertSeries::mod2() const {
    FineHilbertSeries out = *this;
    for (std::int64_t& v : out.c_) v = ((v % 2) + 2) % 2;
    return out;
}

FineHilbertSeries& FineHilbertSeries::operator+=(const FineHilbertSeries& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("series width mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

FineHilbertSeries& FineHilbertSeries::operator-=(const FineHilbertSeries& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("series width mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

FineHilbertSeries series_of_monomial_ideal(const std::vector<Monomial>& gens, unsigned n,
                                           unsigned guard) {
    FineHilbertSeries series(n, guard);
    std::vector<char> member(std::size_t{1} << n, 0);
    for (const Monomial& g : minimize_generators(gens)) {
        if (g.width() != n) throw std::invalid_argument("generator width mismatch");
        for_each_superset(g.mask(), n, [&](std::uint64_t sup) { member[sup] = 1; });
    }
    for (std::uint64_t mask = 0; mask < member.size(); ++mask) {
        if (member[mask]) series.add_at(mask, 1);
    }
    return series;
}

std::vector<Monomial> lcm_rank(const std::vector<Monomial>& monomials, unsigned k) {
    if (monomials.empty() && k > 0) return {};
    const unsigned n = monomials.empty() ? 0 : monomials[0].width();
    if (k == 0) return {Monomial::unit(n)};
    if (k > monomials.size()) return {};

    std::vector<Monomial> lcms;
    std::vector<unsigned> pick(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Monomial l = monomials[pick[0]];
        for (unsigned i = 1; i < k; ++i) l = l.lcm(monomials[pick[i]]);
        lcms.push_back(std::move(l));
        // Next k-combination in lexicographic order.
        unsigned i = k;
        while (i > 0 && pick[i - 1] == monomials.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (unsigned j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(lcms.begin(), lcms.end(), term_less);
    lcms.erase(std::unique(lcms.begin(), lcms.end()), lcms.end());
    return lcms;
}

std::vector<Monomial> variety_explicit1(const BoolPoly& f, unsigned enum_guard,
                                        unsigned subset_guard) {
    const unsigned n = f.width();
    check_enum_guard(n, enum_guard, "variety_explicit1");
    check_subset_guard(f.support_size(), subset_guard, "variety_explicit1");

    const std::vector<Monomial>& supp = f.terms();
    FineHilbertSeries combined(n, enum_guard);
    combined.add_multiples(Monomial::unit(n), 1);  // h_0, the series of (1)
    for (unsigned k = 1; k <= supp.size(); ++k) {
        FineHilbertSeries layer = series_of_monomial_ideal(lcm_rank(supp, k), n, enum_guard);
        if (k % 2 == 0) {
            combined += layer;
        } else {
            combined -= layer;
        }
    }
    return combined.positions_with(1);
}

std::vector<Monomial> variety_explicit2(const BoolPoly& f, unsigned enum_guard,
                                        unsigned subset_guard) {
    const unsigned n = f.width();
    check_enum_guard(n, enum_guard, "variety_explicit2");
    const std::size_t s = f.support_size();
    check_subset_guard(s, subset_guard, "variety_explicit2");

    FineHilbertSeries combined(n, enum_guard);
    combined.add_multiples(Monomial::unit(n), 1);  // g_0, the series of (1)

    const std::vector<std::uint64_t> masks = support_masks(f);
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << s); ++subset) {
        std::uint64_t lcm_mask = 0;
        for (unsigned j = 0; j < s; ++j) {
            if ((subset >> j) & 1u) lcm_mask |= masks[j];
        }
        const unsigned k = static_cast<unsigned>(std::popcount(subset));
        const std::int64_t weight = (k % 2 == 0 ? 1 : -1) * (std::int64_t{1} << (k - 1));
        combined.add_multiples(Monomial::from_mask(n, lcm_mask), weight);
    }
    return combined.positions_with(1);
}

std::vector<Monomial> variety_mod2_projection(const BoolPoly& f, unsigned enum_guard,
                                              unsigned subset_guard) {
    const unsigned n = f.width();
    check_enum_guard(n, enum_guard, "variety_mod2_projection");
    check_subset_guard(f.support_size(), subset_guard, "variety_mod2_projection");

    FineHilbertSeries combined(n, enum_guard);
    combined.add_multiples(Monomial::unit(n), 1);
    for (const Monomial& m : f.terms()) combined.add_multiples(m, -1);
    return combined.mod2().positions_with(1);
}

SolutionCount count_solutions(const PolySystem& sys, unsigned subset_guard,
                              std::size_t term_guard) {
    const unsigned n = sys.width();
    if (n > 63) {
        throw guard_error("count_solutions: counts beyond 63 variables overflow the result type");
    }

    SolutionCount result;
    BoolPoly combined =
        defining_product(sys, FactorOrder::input, &result.term_high_water, term_guard) + 1;
    const std::size_t s = combined.support_size();
    check_subset_guard(s, subset_guard, "count_solutions");
    result.support_size = static_cast<unsigned>(s);

    // Per-rank sums of 2^(n - deg lcm) over all k-subsets of the support.
    std::vector<int128> rank_sums(s + 1, 0);
    const std::vector<std::uint64_t> masks = support_masks(combined);
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << s); ++subset) {
        std::uint64_t lcm_mask = 0;
        for (unsigned j = 0; j < s; ++j) {
            if ((subset >> j) & 1u) lcm_mask |= masks[j];
        }
        const unsigned k = static_cast<unsigned>(std::popcount(subset));
        const unsigned deg = static_cast<unsigned>(std::popcount(lcm_mask));
        rank_sums[k] += int128{1} << (n - deg);
    }

    int128 total = int128{1} << n;
    for (std::size_t k = 1; k <= s; ++k) {
        const int128 d = (k % 2 == 0 ? 1 : -1) * (int128{1} << (k - 1)) * rank_sums[k];
        result.d_terms.push_back(int128_to_string(d));
        total += d;
    }
    if (total < 0 || total > (int128{1} << n)) {
        throw std::logic_error("count_solutions: closed form left the valid range");
    }
    result.count = static_cast<std::uint64_t>(total);
    return result;
}

BoolPoly separator(const Monomial& p, unsigned guard) {
    const unsigned n = p.width();
    check_enum_guard(n, guard, "separator");
    std::vector<Monomial> terms;
    for_each_superset(p.mask(), n, [&](std::uint64_t sup) {
        terms.push_back(Monomial::from_mask(n, sup));
    });
    return BoolPoly::from_terms(n, std::move(terms));
}

BoolPoly interpolation_nf(const Monomial& a, const std::vector<Monomial>& points,
                          unsigned guard) {
    if (points.empty()) {
        throw std::invalid_argument("interpolation_nf: the point set must be nonempty");
    }
    const unsigned n = a.width();
    check_enum_guard(n, guard, "interpolation_nf");
    BoolPoly acc = BoolPoly::zero(n);
    for (const Monomial& p : points) {
        if (a.divides(p)) acc = acc + separator(p, guard);
    }
    return acc;
}

}  // namespace boolring
