#include "boolring/monomial.hpp"

#include <bit>
#include <stdexcept>

namespace boolring {

Monomial Monomial::single(unsigned n, unsigned index) {
    if (index >= n) {
        throw std::invalid_argument("variable index " + std::to_string(index + 1) +
                                    " out of range for " + std::to_string(n) + " variables");
    }
    Monomial m(n);
    m.set(index);
    return m;
}

Monomial Monomial::from_indices(unsigned n, const std::vector<unsigned>& indices) {
    Monomial m(n);
    for (unsigned i : indices) {
        if (i >= n) {
            throw std::invalid_argument("variable index " + std::to_string(i + 1) +
                                        " out of range for " + std::to_string(n) + " variables");
        }
        m.set(i);
    }
    return m;
}

Monomial Monomial::from_mask(unsigned n, std::uint64_t mask) {
    if (n > 64) throw std::invalid_argument("from_mask requires width <= 64");
    if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("mask has bits beyond width");
    Monomial m(n);
    if (n > 0) m.w_[0] = mask;
    return m;
}

Monomial Monomial::full(unsigned n) {
    Monomial m(n);
    for (unsigned i = 0; i < n; ++i) m.set(i);
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (std::uint64_t w : w_) d += static_cast<unsigned>(std::popcount(w));
    return d;
}

bool Monomial::is_unit() const {
    for (std::uint64_t w : w_)
        if (w != 0) return false;
    return true;
}

bool Monomial::divides(const Monomial& m) const {
    if (n_ != m.n_) throw std::invalid_argument("monomial width mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & ~m.w_[k]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& m) const {
    if (n_ != m.n_) throw std::invalid_argument("monomial width mismatch");
    Monomial r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | m.w_[k];
    return r;
}

std::uint64_t Monomial::mask() const {
    if (n_ > 64) throw std::invalid_argument("mask requires width <= 64");
    return w_.empty() ? 0 : w_[0];
}

std::vector<unsigned> Monomial::indices() const {
    std::vector<unsigned> out;
    out.reserve(degree());
    for (unsigned i = 0; i < n_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::string s;
    for (unsigned i = 0; i < n_; ++i) {
        if (!test(i)) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i + 1);
    }
    return s;
}

std::string Monomial::point_str() const {
    std::string s = "(";
    for (unsigned i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += test(i) ? '1' : '0';
    }
    s += ')';
    return s;
}

bool term_less(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("monomial width mismatch");
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
        std::uint64_t d = a.w_[k] ^ b.w_[k];
        if (d) {
            // The monomial containing the smallest differing index comes first.
            unsigned bit = static_cast<unsigned>(std::countr_zero(d));
            return (a.w_[k] >> bit) & 1u;
        }
    }
    return false;
}

bool point_less(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("monomial width mismatch");
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
        std::uint64_t d = a.w_[k] ^ b.w_[k];
        if (d) {
            // Earliest differing coordinate decides; 0 sorts first.
            unsigned bit = static_cast<unsigned>(std::countr_zero(d));
            return !((a.w_[k] >> bit) & 1u);
        }
    }
    return false;
}

}  // namespace boolring
