#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "boolring/dimacs.hpp"
#include "boolring/duality.hpp"
#include "boolring/errors.hpp"
#include "boolring/fixtures.hpp"
#include "boolring/hilbert.hpp"
#include "boolring/ideal.hpp"
#include "boolring/parse.hpp"
#include "boolring/sat.hpp"
#include "boolring/variety.hpp"

using json = nlohmann::json;
using namespace boolring;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct CommonOptions {
    std::string input;            // empty: read stdin
    std::string format = "poly";  // poly | dimacs
    std::optional<unsigned> vars;
    std::optional<unsigned> guard;
    bool oracle = false;
    bool early_stop = false;
    bool pretty = false;
    std::uint64_t seed = 1;

    unsigned enum_guard() const { return guard.value_or(kEnumGuard); }
    unsigned subset_guard() const { return guard.value_or(kSubsetGuard); }
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool with_early_stop = false) {
    cmd->add_option("--input", opts.input, "Input file; stdin when absent");
    cmd->add_option("--format", opts.format, "Input format")
        ->check(CLI::IsMember({"poly", "dimacs"}));
    cmd->add_option("--vars", opts.vars, "Declare or override the variable count (poly format)");
    cmd->add_option("--guard", opts.guard,
                    "Enumeration/subset guard override (default 24 variables, 20 terms)");
    cmd->add_flag("--oracle", opts.oracle, "Cross-check the result against brute force");
    cmd->add_flag("--pretty", opts.pretty, "Indent the JSON output");
    if (with_early_stop) {
        cmd->add_flag("--early-stop", opts.early_stop,
                      "Stop accumulating the product once it reaches zero");
    }
}

PolySystem load_system(const CommonOptions& opts) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!opts.input.empty()) {
        file.open(opts.input);
        if (!file) throw std::invalid_argument("cannot open input file: " + opts.input);
        in = &file;
    }
    if (opts.format == "dimacs") {
        if (opts.vars) throw std::invalid_argument("--vars applies to the poly format only");
        return stone_transform(read_dimacs(*in));
    }
    return parse_poly_file(*in, opts.vars);
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit(json report, bool pretty) {
    std::cout << (pretty ? report.dump(2) : report.dump()) << '\n';
}

json points_json(const std::vector<Monomial>& pts) {
    json out = json::array();
    for (const Monomial& p : pts) {
        json coords = json::array();
        for (unsigned i = 0; i < p.width(); ++i) coords.push_back(p.test(i) ? 1 : 0);
        out.push_back(std::move(coords));
    }
    return out;
}

void set_optional_flag(json& report, const char* key, const std::optional<bool>& value) {
    if (value) {
        report[key] = *value;
    } else {
        report[key] = nullptr;
    }
}

int run_sat(const CommonOptions& opts) {
    PolySystem sys = load_system(opts);
    SatOptions sat_opts;
    sat_opts.early_stop = opts.early_stop;

    Stopwatch clock;
    SatReport result = sat_product(sys, sat_opts);
    bool oracle_checked = false;
    if (opts.oracle) {
        bool oracle_sat = !common_zeros(sys, opts.enum_guard()).empty();
        if (oracle_sat != result.satisfiable) {
            throw std::logic_error("sat verdict disagrees with the brute-force oracle");
        }
        oracle_checked = true;
    }
    double elapsed = clock.seconds();

    json report;
    report["command"] = "sat";
    report["verdict"] = result.satisfiable ? "sat" : "unsat";
    report["n"] = sys.width();
    report["generators"] = sys.size();
    report["term_high_water"] = result.term_high_water;
    set_optional_flag(report, "full_monomial_in_product", result.full_monomial_in_product);
    set_optional_flag(report, "odd_solution_count", result.odd_solution_count);
    report["oracle_checked"] = oracle_checked;
    report["timing_seconds"] = elapsed;
    emit(report, opts.pretty);
    return result.satisfiable ? kExitOk : kExitUnsat;
}

int run_count(const CommonOptions& opts) {
    PolySystem sys = load_system(opts);

    Stopwatch clock;
    SolutionCount result = count_solutions(sys, opts.subset_guard());
    bool oracle_checked = false;
    if (opts.oracle) {
        if (common_zeros(sys, opts.enum_guard()).size() != result.count) {
            throw std::logic_error("solution count disagrees with the brute-force oracle");
        }
        oracle_checked = true;
    }
    double elapsed = clock.seconds();

    json report;
    report["command"] = "count";
    report["count"] = result.count;
    report["d_terms"] = result.d_terms;
    report["support_size"] = result.support_size;
    report["n"] = sys.width();
    report["term_high_water"] = result.term_high_water;
    report["oracle_checked"] = oracle_checked;
    report["timing_seconds"] = elapsed;
    emit(report, opts.pretty);
    return kExitOk;
}

int run_variety(const CommonOptions& opts, const std::string& method) {
    PolySystem sys = load_system(opts);

    Stopwatch clock;
    std::size_t high_water = 0;
    BoolPoly f = defining_product(sys, FactorOrder::input, &high_water) + 1;

    std::vector<Monomial> pts;
    if (method == "brute") {
        pts = variety_bruteforce(f, opts.enum_guard());
    } else if (method == "explicit1") {
        pts = variety_explicit1(f, opts.enum_guard(), opts.subset_guard());
    } else if (method == "explicit2") {
        pts = variety_explicit2(f, opts.enum_guard(), opts.subset_guard());
    } else {
        pts = variety_mod2_projection(f, opts.enum_guard(), opts.subset_guard());
    }

    bool oracle_checked = false;
    if (opts.oracle) {
        bool agree = pts == variety_bruteforce(f, opts.enum_guard()) &&
                     pts == variety_explicit1(f, opts.enum_guard(), opts.subset_guard()) &&
                     pts == variety_explicit2(f, opts.enum_guard(), opts.subset_guard()) &&
                     pts == variety_mod2_projection(f, opts.enum_guard(), opts.subset_guard());
        if (!agree) throw std::logic_error("variety methods disagree");
        oracle_checked = true;
    }
    double elapsed = clock.seconds();

    json report;
    report["command"] = "variety";
    report["method"] = method;
    report["n"] = sys.width();
    report["count"] = pts.size();
    report["points"] = points_json(pts);
    report["term_high_water"] = high_water;
    report["oracle_checked"] = oracle_checked;
    report["timing_seconds"] = elapsed;
    emit(report, opts.pretty);
    return kExitOk;
}

int run_ideal(const CommonOptions& opts, const std::string& op) {
    PolySystem sys = load_system(opts);
    const auto& polys = sys.generators();
    const unsigned n = sys.width();

    auto need = [&](std::size_t lo, std::size_t hi) {
        if (polys.size() < lo || polys.size() > hi) {
            throw std::invalid_argument("ideal " + op + " expects " + std::to_string(lo) +
                                        (hi > lo ? "-" + std::to_string(hi) : "") +
                                        " polynomials, got " + std::to_string(polys.size()));
        }
    };

    Stopwatch clock;
    json report;
    report["command"] = "ideal";
    report["op"] = op;
    report["n"] = n;
    report["term_high_water"] = 0;
    report["oracle_checked"] = false;

    if (op == "nf") {
        need(2, 3);
        BooleanIdeal ideal(polys[0]);
        BoolPoly h = polys.size() == 3 ? polys[2] : BoolPoly::zero(n);
        report["result"] = normal_form(polys[1], ideal, h).str();
    } else if (op == "member") {
        need(2, 2);
        report["result"] = contains(BooleanIdeal(polys[0]), polys[1]);
    } else {
        need(2, 2);
        BooleanIdeal lhs(polys[0]), rhs(polys[1]);
        BooleanIdeal out = op == "colon"  ? colon(lhs, rhs)
                           : op == "sum" ? sum(lhs, rhs)
                                         : intersect(lhs, rhs);
        report["result"] = out.defining().str();
    }
    report["timing_seconds"] = clock.seconds();
    emit(report, opts.pretty);
    return kExitOk;
}

json bench_case_report(const std::string& suite, const std::string& name, const PolySystem& sys,
                       unsigned reps, bool oracle, unsigned enum_guard) {
    SatReport result;
    double best = -1.0;
    for (unsigned r = 0; r < std::max(reps, 1u); ++r) {
        Stopwatch clock;
        result = sat_product(sys);
        double t = clock.seconds();
        if (best < 0 || t < best) best = t;
    }
    bool oracle_checked = false;
    if (oracle) {
        if (!common_zeros(sys, enum_guard).empty() != result.satisfiable) {
            throw std::logic_error("bench verdict disagrees with the brute-force oracle");
        }
        oracle_checked = true;
    }
    json row;
    row["command"] = "bench";
    row["suite"] = suite;
    row["case"] = name;
    row["verdict"] = result.satisfiable ? "sat" : "unsat";
    row["n"] = sys.width();
    row["generators"] = sys.size();
    row["term_high_water"] = result.term_high_water;
    set_optional_flag(row, "full_monomial_in_product", result.full_monomial_in_product);
    set_optional_flag(row, "odd_solution_count", result.odd_solution_count);
    row["oracle_checked"] = oracle_checked;
    row["timing_seconds"] = best;
    return row;
}

int run_bench(const CommonOptions& opts, const std::string& suite, unsigned reps) {
    if (suite == "cyclic13") {
        emit(bench_case_report(suite, "cyclic13-ex1", fixture_cyclic_truncated(CyclicVariant::ex1),
                               reps, opts.oracle, opts.enum_guard()),
             opts.pretty);
        emit(bench_case_report(suite, "cyclic13-ex2", fixture_cyclic_truncated(CyclicVariant::ex2),
                               reps, opts.oracle, opts.enum_guard()),
             opts.pretty);
        return kExitOk;
    }
    if (suite == "pairs") {
        for (unsigned pairs : {8u, 17u, 22u}) {
            emit(bench_case_report(suite, "pairs-" + std::to_string(pairs),
                                   fixture_pair_family(pairs), reps, opts.oracle,
                                   opts.enum_guard()),
                 opts.pretty);
        }
        return kExitOk;
    }
    if (suite == "smoke") {
        std::mt19937_64 rng(opts.seed);
        for (int i = 0; i < 10; ++i) {
            const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
            PolySystem sys(n);
            const unsigned gens = 1 + static_cast<unsigned>(rng() % 3);
            for (unsigned g = 0; g < gens; ++g) sys.push_back(random_poly(n, 6, rng));
            emit(bench_case_report(suite, "smoke-sat-" + std::to_string(i), sys, reps, true,
                                   opts.enum_guard()),
                 opts.pretty);
        }
        for (int i = 0; i < 10; ++i) {
            const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
            BoolPoly f = random_poly(n, 8, rng);
            Stopwatch clock;
            auto brute = variety_bruteforce(f, opts.enum_guard());
            bool agree = variety_explicit1(f, opts.enum_guard(), opts.subset_guard()) == brute &&
                         variety_explicit2(f, opts.enum_guard(), opts.subset_guard()) == brute &&
                         variety_mod2_projection(f, opts.enum_guard(), opts.subset_guard()) == brute;
            if (!agree) throw std::logic_error("variety methods disagree in the smoke suite");
            json row;
            row["command"] = "bench";
            row["suite"] = suite;
            row["case"] = "smoke-variety-" + std::to_string(i);
            row["verdict"] = "ok";
            row["n"] = n;
            row["generators"] = 1;
            row["term_high_water"] = f.support_size();
            row["full_monomial_in_product"] = nullptr;
            row["odd_solution_count"] = nullptr;
            row["oracle_checked"] = true;
            row["timing_seconds"] = clock.seconds();
            emit(row, opts.pretty);
        }
        return kExitOk;
    }
    throw std::invalid_argument("unknown bench suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "boolring: satisfiability, model counting, varieties and ideal arithmetic\n"
        "in the boolean ring Z2[x1..xn]/(x1^2+x1,...,xn^2+xn)"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string method = "brute";
    std::string ideal_op;
    std::string suite;
    unsigned reps = 1;

    CLI::App* sat_cmd = app.add_subcommand("sat", "Satisfiability of a polynomial system or CNF");
    add_common_flags(sat_cmd, opts, /*with_early_stop=*/true);

    CLI::App* count_cmd = app.add_subcommand("count", "Exact number of common solutions");
    add_common_flags(count_cmd, opts);

    CLI::App* variety_cmd = app.add_subcommand("variety", "Enumerate the common zero set");
    add_common_flags(variety_cmd, opts);
    variety_cmd->add_option("--method", method, "Variety engine")
        ->check(CLI::IsMember({"brute", "explicit1", "explicit2", "mod2"}));

    CLI::App* ideal_cmd =
        app.add_subcommand("ideal", "Normal form, membership and ideal operations");
    add_common_flags(ideal_cmd, opts);
    ideal_cmd->add_option("op", ideal_op, "One of nf, member, colon, sum, intersect")
        ->required()
        ->check(CLI::IsMember({"nf", "member", "colon", "sum", "intersect"}));

    CLI::App* bench_cmd = app.add_subcommand("bench", "Run a named benchmark suite");
    add_common_flags(bench_cmd, opts);
    bench_cmd->add_option("suite", suite, "One of cyclic13, pairs, smoke")->required();
    bench_cmd->add_option("--reps", reps, "Repetitions per case (fastest run is reported)");
    bench_cmd->add_option("--seed", opts.seed, "Seed for the random smoke suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sat_cmd->parsed()) return run_sat(opts);
        if (count_cmd->parsed()) return run_count(opts);
        if (variety_cmd->parsed()) return run_variety(opts, method);
        if (ideal_cmd->parsed()) return run_ideal(opts, ideal_op);
        if (bench_cmd->parsed()) return run_bench(opts, suite, reps);
    } catch (const guard_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "guard"}}.dump() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "usage"}}.dump() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
