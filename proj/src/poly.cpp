#include "boolring/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolring {

namespace {

// Sort and cancel equal terms in pairs (XOR-set semantics).
void canonicalize(std::vector<Monomial>& terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) {
            if (out != i) terms[out] = std::move(terms[i]);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

BoolPoly BoolPoly::var(unsigned n, unsigned index) {
    return from_terms(n, {Monomial::single(n, index)});
}

BoolPoly BoolPoly::from_terms(unsigned n, std::vector<Monomial> terms) {
    for (const Monomial& m : terms) {
        if (m.width() != n) throw std::invalid_argument("term width mismatch");
    }
    canonicalize(terms);
    BoolPoly f(n);
    f.terms_ = std::move(terms);
    return f;
}

unsigned BoolPoly::degree() const {
    unsigned d = 0;
    for (const Monomial& m : terms_) d = std::max(d, m.degree());
    return d;
}

bool BoolPoly::contains_term(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, term_less);
}

bool BoolPoly::has_constant_term() const {
    return !terms_.empty() && terms_.front().is_unit();
}

bool BoolPoly::has_full_monomial() const {
    return !terms_.empty() && terms_.back().is_full();
}

bool BoolPoly::eval(const Monomial& point) const {
    if (point.width() != n_) throw std::invalid_argument("point width mismatch");
    bool acc = false;
    for (const Monomial& m : terms_) {
        if (m.divides(point)) acc = !acc;
    }
    return acc;
}

BoolPoly BoolPoly::operator+(const BoolPoly& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("variable count mismatch in +");
    // Both inputs are sorted and duplicate-free: symmetric-difference merge.
    BoolPoly out(n_);
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), rhs.terms_.begin(),
                                  rhs.terms_.end(), std::back_inserter(out.terms_), term_less);
    return out;
}

BoolPoly BoolPoly::operator*(const BoolPoly& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("variable count mismatch in *");
    if (is_zero() || rhs.is_zero()) return zero(n_);
    std::vector<Monomial> products;
    products.reserve(terms_.size() * rhs.terms_.size());
    for (const Monomial& a : terms_) {
        for (const Monomial& b : rhs.terms_) {
            products.push_back(a.lcm(b));  // x_i^2 -> x_i happens here
        }
    }
    return from_terms(n_, std::move(products));
}

BoolPoly BoolPoly::operator+(unsigned c) const {
    if (c % 2 == 0) return *this;
    return *this + one(n_);
}

std::string BoolPoly::str() const {
    if (terms_.empty()) return "0";
    // Display order: degree descending, index-set lex ascending within a degree.
    std::vector<const Monomial*> order;
    order.reserve(terms_.size());
    for (const Monomial& m : terms_) order.push_back(&m);
    std::stable_sort(order.begin(), order.end(), [](const Monomial* a, const Monomial* b) {
        if (a->degree() != b->degree()) return a->degree() > b->degree();
        return term_less(*a, *b);
    });
    std::string s;
    for (const Monomial* m : order) {
        if (!s.empty()) s += " + ";
        s += m->str();
    }
    return s;
}

PolySystem::PolySystem(unsigned n, std::vector<BoolPoly> generators) : n_(n) {
    gens_.reserve(generators.size());
    for (BoolPoly& g : generators) push_back(std::move(g));
}

void PolySystem::push_back(BoolPoly g) {
    if (g.width() != n_) throw std::invalid_argument("generator width mismatch");
    gens_.push_back(std::move(g));
}

}  // namespace boolring
