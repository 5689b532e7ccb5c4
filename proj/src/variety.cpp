#include "boolring/variety.hpp"

#include <algorithm>

#include "boolring/errors.hpp"

namespace boolring {

void check_enum_guard(unsigned n, unsigned guard, const char* what) {
    unsigned cap = std::min(guard, 63u);
    if (n > cap) {
        throw guard_error(std::string(what) + ": " + std::to_string(n) +
                          " variables exceed the enumeration guard of " + std::to_string(cap));
    }
}

Monomial point_from_ordinal(unsigned n, std::uint64_t ordinal) {
    Monomial p(n);
    for (unsigned i = 0; i < n; ++i) {
        if ((ordinal >> (n - 1 - i)) & 1u) p.set(i);
    }
    return p;
}

std::vector<Monomial> variety_bruteforce(const BoolPoly& f, unsigned guard) {
    unsigned n = f.width();
    check_enum_guard(n, guard, "variety_bruteforce");
    std::vector<Monomial> zeros;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t c = 0; c < count; ++c) {
        Monomial p = point_from_ordinal(n, c);
        if (!f.eval(p)) zeros.push_back(std::move(p));
    }
    return zeros;
}

std::vector<Monomial> common_zeros(const PolySystem& sys, unsigned guard) {
    unsigned n = sys.width();
    check_enum_guard(n, guard, "common_zeros");
    std::vector<Monomial> zeros;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t c = 0; c < count; ++c) {
        Monomial p = point_from_ordinal(n, c);
        bool all_zero = true;
        for (const BoolPoly& g : sys.generators()) {
            if (g.eval(p)) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) zeros.push_back(std::move(p));
    }
    return zeros;
}

BoolPoly full_sum(unsigned n, unsigned guard) {
    check_enum_guard(n, guard, "full_sum");
    std::vector<Monomial> terms;
    const std::uint64_t count = std::uint64_t{1} << n;
    terms.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        terms.push_back(Monomial::from_mask(n, mask));
    }
    return BoolPoly::from_terms(n, std::move(terms));
}

std::vector<Monomial> sort_points(std::vector<Monomial> pts) {
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<Monomial> point_union(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), point_less);
    return out;
}

std::vector<Monomial> point_intersection(const std::vector<Monomial>& a,
                                         const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                          point_less);
    return out;
}

std::vector<Monomial> point_difference(const std::vector<Monomial>& a,
                                       const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        point_less);
    return out;
}

std::vector<Monomial> point_complement(const std::vector<Monomial>& a, unsigned n,
                                       unsigned guard) {
    check_enum_guard(n, guard, "point_complement");
    std::vector<Monomial> out;
    const std::uint64_t count = std::uint64_t{1} << n;
    std::size_t k = 0;
    for (std::uint64_t c = 0; c < count; ++c) {
        Monomial p = point_from_ordinal(n, c);
        if (k < a.size() && a[k] == p) {
            ++k;
            continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace boolring
