#include "boolring/parse.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <string>
#include <vector>

#include "boolring/errors.hpp"

namespace boolring {

namespace {

// A term before the variable count is known: sorted distinct 0-based
// indices, or the absorbing zero term.
struct RawTerm {
    std::vector<unsigned> indices;
    bool zero = false;
};

struct RawPoly {
    std::vector<RawTerm> terms;
    unsigned max_index = 0;  // 1-based maximum variable index seen
};

class LineScanner {
public:
    LineScanner(std::string_view text, unsigned line) : text_(text), line_(line) {}

    RawPoly parse() {
        RawPoly poly;
        skip_space();
        if (done()) fail("empty polynomial");
        poly.terms.push_back(parse_term(poly));
        skip_space();
        while (!done()) {
            expect('+');
            skip_space();
            poly.terms.push_back(parse_term(poly));
            skip_space();
        }
        return poly;
    }

private:
    RawTerm parse_term(RawPoly& poly) {
        RawTerm term;
        parse_factor(term, poly);
        skip_space();
        while (!done() && peek() == '*') {
            ++pos_;
            skip_space();
            parse_factor(term, poly);
            skip_space();
        }
        std::sort(term.indices.begin(), term.indices.end());
        term.indices.erase(std::unique(term.indices.begin(), term.indices.end()),
                           term.indices.end());
        return term;
    }

    void parse_factor(RawTerm& term, RawPoly& poly) {
        if (done()) fail("expected a factor");
        char c = peek();
        if (c == '1') {
            ++pos_;
            return;  // multiplicative identity
        }
        if (c == '0') {
            ++pos_;
            term.zero = true;
            return;
        }
        if (c == 'x' || c == 'X') {
            unsigned col = column();
            ++pos_;
            unsigned index = parse_number("variable index");
            if (index == 0) fail_at("variable indices are 1-based", col);
            unsigned exponent = 1;
            if (!done() && peek() == '^') {
                ++pos_;
                exponent = parse_number("exponent");
            }
            poly.max_index = std::max(poly.max_index, index);
            if (exponent >= 1) term.indices.push_back(index - 1);  // x^k = x; x^0 = 1
            return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    unsigned parse_number(const char* what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail(std::string("expected digits for ") + what);
        }
        unsigned long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<unsigned long>(peek() - '0');
            if (value > 1'000'000) fail(std::string(what) + " too large");
            ++pos_;
        }
        return static_cast<unsigned>(value);
    }

    void expect(char c) {
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    unsigned column() const { return static_cast<unsigned>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& message) { fail_at(message, column()); }
    [[noreturn]] void fail_at(const std::string& message, unsigned col) {
        throw parse_error(message, line_, col);
    }

    std::string_view text_;
    unsigned line_;
    std::size_t pos_ = 0;
};

BoolPoly build(const RawPoly& raw, unsigned n, unsigned line) {
    if (raw.max_index > n) {
        throw parse_error("variable index " + std::to_string(raw.max_index) +
                              " out of declared range of " + std::to_string(n) + " variables",
                          line, 1);
    }
    std::vector<Monomial> terms;
    terms.reserve(raw.terms.size());
    for (const RawTerm& t : raw.terms) {
        if (t.zero) continue;
        terms.push_back(Monomial::from_indices(n, t.indices));
    }
    return BoolPoly::from_terms(n, std::move(terms));
}

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

BoolPoly parse_poly(std::string_view text, std::optional<unsigned> vars) {
    RawPoly raw = LineScanner(text, 1).parse();
    unsigned n = vars.value_or(std::max(raw.max_index, 1u));
    return build(raw, n, 1);
}

PolySystem parse_poly_file(std::istream& in, std::optional<unsigned> vars_override) {
    std::vector<std::pair<RawPoly, unsigned>> raws;  // with line numbers
    std::optional<unsigned> declared;
    unsigned max_index = 0;

    std::string line;
    unsigned line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = strip_comment(line);
        if (blank(body)) continue;
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
            body.remove_prefix(1);
        }
        if (first_content) {
            first_content = false;
            auto word_end = body.find_first_of(" \t");
            if (body.substr(0, word_end) == "vars") {
                std::string_view rest = body.substr(word_end == std::string_view::npos
                                                        ? body.size()
                                                        : word_end);
                unsigned value = 0;
                bool any = false;
                for (char c : rest) {
                    if (std::isspace(static_cast<unsigned char>(c))) continue;
                    if (!std::isdigit(static_cast<unsigned char>(c))) {
                        throw parse_error("malformed vars declaration", line_no, 1);
                    }
                    value = value * 10 + static_cast<unsigned>(c - '0');
                    if (value > 1'000'000) throw parse_error("vars too large", line_no, 1);
                    any = true;
                }
                if (!any) throw parse_error("malformed vars declaration", line_no, 1);
                declared = value;
                continue;
            }
        }
        raws.emplace_back(LineScanner(body, line_no).parse(), line_no);
        max_index = std::max(max_index, raws.back().first.max_index);
    }

    unsigned n;
    if (vars_override) {
        n = *vars_override;
    } else if (declared) {
        n = *declared;
    } else if (max_index > 0) {
        n = max_index;
    } else if (!raws.empty()) {
        n = 1;  // constant-only polynomials still need a ring
    } else {
        throw parse_error("no polynomials and no vars declaration", std::max(line_no, 1u), 1);
    }

    PolySystem sys(n);
    for (const auto& [raw, at_line] : raws) sys.push_back(build(raw, n, at_line));
    return sys;
}

}  // namespace boolring
