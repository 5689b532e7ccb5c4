#pragma once

#include <iosfwd>
#include <vector>

#include "boolring/poly.hpp"

namespace boolring {

/// A CNF formula: clauses of nonzero 1-based literals, negative meaning
/// negated. No clause is empty and every |literal| lies in [1, n].
class ClauseSystem {
public:
    ClauseSystem(unsigned n, std::vector<std::vector<int>> clauses);

    unsigned variable_count() const { return n_; }
    const std::vector<std::vector<int>>& clauses() const { return clauses_; }

private:
    unsigned n_;
    std::vector<std::vector<int>> clauses_;
};

/// Standard DIMACS CNF subset: 'c' comment lines, a 'p cnf <vars> <clauses>'
/// header, whitespace-separated literals with clauses terminated by 0.
/// Duplicate literals within a clause are collapsed.
ClauseSystem read_dimacs(std::istream& in);

/// Polynomial encoding of a CNF: clause C maps to the product of (x_i + 1)
/// over its positive literals and x_i over its negative ones, so the clause
/// is satisfied at p exactly when the polynomial vanishes there, and the
/// formula is satisfiable iff the system has a common zero. Tautological
/// clauses become the zero polynomial.
PolySystem stone_transform(const ClauseSystem& cs);

}  // namespace boolring
