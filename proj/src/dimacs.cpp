#include "boolring/dimacs.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "boolring/errors.hpp"

namespace boolring {

ClauseSystem::ClauseSystem(unsigned n, std::vector<std::vector<int>> clauses)
    : n_(n), clauses_(std::move(clauses)) {
    for (const auto& clause : clauses_) {
        if (clause.empty()) throw std::invalid_argument("empty clause");
        for (int lit : clause) {
            unsigned v = static_cast<unsigned>(std::abs(lit));
            if (lit == 0 || v > n_) {
                throw std::invalid_argument("literal " + std::to_string(lit) +
                                            " out of range for " + std::to_string(n_) +
                                            " variables");
            }
        }
    }
}

ClauseSystem read_dimacs(std::istream& in) {
    unsigned vars = 0;
    long declared_clauses = -1;
    bool header_seen = false;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;

    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            if (header_seen) throw parse_error("duplicate problem line", line_no, 1);
            std::istringstream header(line);
            std::string p, fmt;
            long nv = -1, nc = -1;
            header >> p >> fmt >> nv >> nc;
            if (p != "p" || fmt != "cnf" || nv < 0 || nc < 0 || header.fail()) {
                throw parse_error("malformed problem line, expected 'p cnf <vars> <clauses>'",
                                  line_no, 1);
            }
            vars = static_cast<unsigned>(nv);
            declared_clauses = nc;
            header_seen = true;
            continue;
        }
        if (!header_seen) throw parse_error("clause before 'p cnf' header", line_no, 1);
        std::istringstream body(line);
        std::string token;
        while (body >> token) {
            int lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw parse_error("expected a literal, got '" + token + "'", line_no, 1);
            }
            if (lit == 0) {
                if (current.empty()) throw parse_error("empty clause", line_no, 1);
                std::sort(current.begin(), current.end());
                current.erase(std::unique(current.begin(), current.end()), current.end());
                clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (static_cast<unsigned>(std::abs(lit)) > vars) {
                throw parse_error("literal " + std::to_string(lit) + " exceeds declared " +
                                      std::to_string(vars) + " variables",
                                  line_no, 1);
            }
            current.push_back(lit);
        }
    }
    if (!header_seen) throw parse_error("missing 'p cnf' header", std::max(line_no, 1u), 1);
    if (!current.empty()) throw parse_error("unterminated clause at end of input", line_no, 1);
    if (declared_clauses >= 0 && static_cast<long>(clauses.size()) != declared_clauses) {
        throw parse_error("clause count " + std::to_string(clauses.size()) +
                              " does not match declared " + std::to_string(declared_clauses),
                          line_no, 1);
    }
    return ClauseSystem(vars, std::move(clauses));
}

PolySystem stone_transform(const ClauseSystem& cs) {
    const unsigned n = cs.variable_count();
    PolySystem sys(n);
    for (const auto& clause : cs.clauses()) {
        BoolPoly falsified = BoolPoly::one(n);
        for (int lit : clause) {
            unsigned index = static_cast<unsigned>(std::abs(lit)) - 1;
            BoolPoly factor = BoolPoly::var(n, index);
            if (lit > 0) factor = factor + 1;
            falsified = falsified * factor;
        }
        sys.push_back(std::move(falsified));
    }
    return sys;
}

}  // namespace boolring
