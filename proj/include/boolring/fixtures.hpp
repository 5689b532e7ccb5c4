#pragma once

#include <cstdint>
#include <random>

#include "boolring/dimacs.hpp"
#include "boolring/poly.hpp"

namespace boolring {

/// Benchmark families over 13 variables: a linear generator over all
/// variables, the 13 cyclic adjacent products, and either six consecutive
/// triples (Ex1) or all thirteen cyclic triples (Ex2).
enum class CyclicVariant { ex1, ex2 };
PolySystem fixture_cyclic_truncated(CyclicVariant variant);

/// Generators x_{2i-1}x_{2i} + x_{2i-1} + x_{2i} + 1 for i = 1..pairs over
/// n = 2*pairs variables; each pair constraint excludes only (0,0).
PolySystem fixture_pair_family(unsigned pairs);

/// Seeded system of random degree-<=2 polynomials (terms_per_poly distinct
/// monomials each), standing in for benchmark rows whose instances are not
/// pinned down.
PolySystem random_quadratic_system(unsigned n, unsigned generators, unsigned terms_per_poly,
                                   std::uint64_t seed);

/// Random polynomial with up to max_terms distinct terms.
BoolPoly random_poly(unsigned n, unsigned max_terms, std::mt19937_64& rng);

/// Random nonempty point set.
std::vector<Monomial> random_points(unsigned n, unsigned max_points, std::mt19937_64& rng);

/// Random CNF with the given clause count and width (literals per clause).
ClauseSystem random_cnf(unsigned n, unsigned clauses, unsigned width, std::mt19937_64& rng);

}  // namespace boolring
