#include "boolring/sat.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace boolring {

namespace {

std::vector<BoolPoly> plus_one_factors(const PolySystem& sys, bool size_sorted) {
    std::vector<BoolPoly> factors;
    factors.reserve(sys.size());
    for (const BoolPoly& g : sys.generators()) factors.push_back(g + 1);
    if (size_sorted) {
        std::stable_sort(factors.begin(), factors.end(),
                         [](const BoolPoly& a, const BoolPoly& b) {
                             return a.support_size() < b.support_size();
                         });
    }
    return factors;
}

BoolPoly truncate_degree(const BoolPoly& f, unsigned cap) {
    std::vector<Monomial> keep;
    for (const Monomial& m : f.terms()) {
        if (m.degree() <= cap) keep.push_back(m);
    }
    return BoolPoly::from_terms(f.width(), std::move(keep));
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

SatReport run_flat(const std::vector<BoolPoly>& factors, unsigned n, bool early_stop) {
    SatReport report;
    BoolPoly acc = BoolPoly::one(n);
    report.term_high_water = acc.support_size();
    for (const BoolPoly& f : factors) {
        acc = acc * f;
        report.term_high_water = std::max(report.term_high_water, acc.support_size());
        if (early_stop && acc.is_zero()) {
            report.satisfiable = false;
            report.full_monomial_in_product = false;
            report.odd_solution_count = false;
            return report;
        }
    }
    report.satisfiable = !acc.is_zero();
    report.full_monomial_in_product = acc.has_full_monomial();
    report.odd_solution_count = report.full_monomial_in_product;
    return report;
}

SatReport run_degree_staged(const std::vector<BoolPoly>& factors, unsigned n) {
    SatReport report;
    // Every product term contains a term of each factor, so its degree is at
    // least the largest of the factors' minimal degrees; lower stages are zero.
    unsigned start = 0;
    for (const BoolPoly& f : factors) {
        if (f.is_zero()) {
            report.satisfiable = false;
            report.full_monomial_in_product = false;
            report.odd_solution_count = false;
            return report;
        }
        start = std::max(start, f.terms().front().degree());
    }
    start = std::min(start, n);
    for (unsigned cap = start; cap <= n; ++cap) {
        BoolPoly acc = BoolPoly::one(n);
        for (const BoolPoly& f : factors) {
            acc = truncate_degree(acc * f, cap);
            report.term_high_water = std::max(report.term_high_water, acc.support_size());
            if (acc.is_zero()) break;
        }
        if (!acc.is_zero()) {
            report.satisfiable = true;
            if (cap == n) {
                report.full_monomial_in_product = acc.has_full_monomial();
                report.odd_solution_count = report.full_monomial_in_product;
            }
            return report;
        }
    }
    report.satisfiable = false;
    report.full_monomial_in_product = false;
    report.odd_solution_count = false;
    return report;
}

SatReport run_components(const std::vector<BoolPoly>& factors, unsigned n, bool early_stop) {
    SatReport report;

    // Group factors into variable-disjoint blocks.
    UnionFind uf(n);
    std::vector<std::vector<unsigned>> factor_vars(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
        std::vector<bool> seen(n, false);
        for (const Monomial& m : factors[k].terms()) {
            for (unsigned i : m.indices()) seen[i] = true;
        }
        for (unsigned i = 0; i < n; ++i)
            if (seen[i]) factor_vars[k].push_back(i);
        for (std::size_t j = 1; j < factor_vars[k].size(); ++j) {
            uf.merge(factor_vars[k][0], factor_vars[k][j]);
        }
    }

    std::vector<std::vector<std::size_t>> blocks;  // factor indices per block
    std::vector<std::size_t> root_to_block(n, SIZE_MAX);
    std::vector<std::size_t> constant_factors;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factor_vars[k].empty()) {
            constant_factors.push_back(k);
            continue;
        }
        std::size_t root = uf.find(factor_vars[k][0]);
        if (root_to_block[root] == SIZE_MAX) {
            root_to_block[root] = blocks.size();
            blocks.emplace_back();
        }
        blocks[root_to_block[root]].push_back(k);
    }

    // A constant factor is 0 or 1: 0 kills the product, 1 is a no-op.
    bool product_zero = false;
    for (std::size_t k : constant_factors) {
        if (factors[k].is_zero()) product_zero = true;
    }
    if (product_zero) {
        report.satisfiable = false;
        report.full_monomial_in_product = false;
        report.odd_solution_count = false;
        return report;
    }

    std::vector<bool> covered(n, false);
    bool all_blocks_top = true;
    for (const auto& block : blocks) {
        BoolPoly acc = BoolPoly::one(n);
        Monomial block_top(n);
        for (std::size_t k : block) {
            acc = acc * factors[k];
            report.term_high_water = std::max(report.term_high_water, acc.support_size());
            for (unsigned i : factor_vars[k]) {
                covered[i] = true;
                block_top.set(i);
            }
            if (acc.is_zero() && early_stop) {
                report.satisfiable = false;
                report.full_monomial_in_product = false;
                report.odd_solution_count = false;
                return report;
            }
        }
        if (acc.is_zero()) {
            product_zero = true;
        } else if (!acc.contains_term(block_top)) {
            all_blocks_top = false;
        }
    }

    if (product_zero) {
        report.satisfiable = false;
        report.full_monomial_in_product = false;
        report.odd_solution_count = false;
        return report;
    }
    bool all_covered = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    report.satisfiable = true;
    report.full_monomial_in_product = all_blocks_top && all_covered;
    report.odd_solution_count = report.full_monomial_in_product;
    return report;
}

}  // namespace

SatReport sat_product(const PolySystem& sys, const SatOptions& options) {
    const unsigned n = sys.width();
    std::vector<BoolPoly> factors = plus_one_factors(sys, options.size_sorted);
    SatReport report;
    switch (options.schedule) {
        case SatSchedule::flat:
            report = run_flat(factors, n, options.early_stop);
            break;
        case SatSchedule::degree_staged:
            report = run_degree_staged(factors, n);
            break;
        case SatSchedule::components:
            report = run_components(factors, n, options.early_stop);
            break;
    }
    // The empty product is 1: the empty system is satisfied everywhere.
    report.term_high_water = std::max<std::size_t>(report.term_high_water, 1);
    return report;
}

}  // namespace boolring
