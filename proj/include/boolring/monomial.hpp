#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace boolring {

/// A square-free monomial over x1..xn, stored as a packed bitset: bit i set
/// means x_{i+1} divides the monomial. The same value doubles as a point of
/// Z2^n, bit i holding the i-th coordinate, so divisibility is a subset test,
/// lcm is a union and degree is a population count.
class Monomial {
public:
    /// The unit monomial (empty index set) of the given width.
    Monomial() = default;
    explicit Monomial(unsigned n) : n_(n), w_(word_count(n), 0) {}

    static Monomial unit(unsigned n) { return Monomial(n); }

    /// Single variable x_{index+1} (0-based index).
    static Monomial single(unsigned n, unsigned index);

    /// Monomial from 0-based variable indices; repeats are idempotently merged.
    static Monomial from_indices(unsigned n, const std::vector<unsigned>& indices);

    /// Low 64-bit mask constructor, bit i <-> variable i. Requires n <= 64.
    static Monomial from_mask(unsigned n, std::uint64_t mask);

    /// The top monomial x1*...*xn.
    static Monomial full(unsigned n);

    unsigned width() const { return n_; }
    unsigned degree() const;
    bool is_unit() const;
    bool is_full() const { return degree() == n_; }

    bool test(unsigned i) const { return (w_[i >> 6] >> (i & 63u)) & 1u; }
    void set(unsigned i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63u); }

    /// Subset test on index sets; equivalently "this evaluates to 1 at point m".
    bool divides(const Monomial& m) const;

    /// Index-set union; also the product of two square-free monomials.
    Monomial lcm(const Monomial& m) const;

    /// The 64-bit mask, bit i <-> variable i. Requires width <= 64.
    std::uint64_t mask() const;

    /// Sorted 0-based variable indices.
    std::vector<unsigned> indices() const;

    std::string str() const;        // "x1*x3"; the unit prints "1"
    std::string point_str() const;  // "(1,0,1)"

    bool operator==(const Monomial&) const = default;

    friend bool term_less(const Monomial& a, const Monomial& b);
    friend bool point_less(const Monomial& a, const Monomial& b);

private:
    static std::size_t word_count(unsigned n) { return (std::size_t{n} + 63) / 64; }

    unsigned n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Display/serialization order: degree first, then lexicographic on index
/// sets (x1*x3 before x2*x3). The algebra itself never needs an order.
bool term_less(const Monomial& a, const Monomial& b);

/// Coordinate-tuple order on points: (0,0,1) < (0,1,1) < (1,0,1).
bool point_less(const Monomial& a, const Monomial& b);

}  // namespace boolring
