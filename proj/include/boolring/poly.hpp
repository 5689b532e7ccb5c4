#pragma once

#include <string>
#include <vector>

#include "boolring/monomial.hpp"

namespace boolring {

/// A boolean polynomial: a set of distinct square-free monomials with
/// characteristic-2 addition. Values are canonical from construction on
/// (terms sorted, duplicates cancelled in pairs) and immutable afterwards,
/// so equality is a plain term-list comparison and every operation is a
/// pure function that is safe to call concurrently.
class BoolPoly {
public:
    BoolPoly() = default;
    explicit BoolPoly(unsigned n) : n_(n) {}

    static BoolPoly zero(unsigned n) { return BoolPoly(n); }
    static BoolPoly one(unsigned n) { return from_terms(n, {Monomial::unit(n)}); }

    /// Variable x_{index+1} as a polynomial (0-based index).
    static BoolPoly var(unsigned n, unsigned index);

    /// XOR-sum of the given terms; equal monomials cancel in pairs.
    static BoolPoly from_terms(unsigned n, std::vector<Monomial> terms);

    unsigned width() const { return n_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_unit(); }

    /// Largest term degree; 0 for the zero polynomial.
    unsigned degree() const;

    bool contains_term(const Monomial& m) const;
    bool has_constant_term() const;
    bool has_full_monomial() const;

    /// Value at a point of Z2^n: the parity of the number of terms dividing x^p.
    bool eval(const Monomial& point) const;

    BoolPoly operator+(const BoolPoly& rhs) const;
    BoolPoly operator*(const BoolPoly& rhs) const;
    BoolPoly operator+(unsigned c) const;  // f + 1 (or f + 0), a frequent idiom

    bool operator==(const BoolPoly&) const = default;

    std::string str() const;

private:
    unsigned n_ = 0;
    std::vector<Monomial> terms_;  // sorted by term_less, pairwise distinct
};

/// An ordered system of generators f_1,...,f_m sharing one variable count;
/// the raw input form before reduction to a single defining polynomial.
class PolySystem {
public:
    explicit PolySystem(unsigned n) : n_(n) {}
    PolySystem(unsigned n, std::vector<BoolPoly> generators);

    unsigned width() const { return n_; }
    const std::vector<BoolPoly>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }

    void push_back(BoolPoly g);

private:
    unsigned n_;
    std::vector<BoolPoly> gens_;
};

}  // namespace boolring
