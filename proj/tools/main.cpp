// Command-line front end: fractional finite sums, essences, divergent-series
// regularization, complex-grid CSV output, and the property-suite runner.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracsum/essence.hpp"
#include "fracsum/format.hpp"
#include "fracsum/grid.hpp"
#include "fracsum/parser.hpp"
#include "fracsum/regularize.hpp"
#include "fracsum/sum.hpp"
#include "fracsum/verify.hpp"

namespace {

using fracsum::Complex;

int exit_code_for(fracsum::ErrorKind kind) {
    switch (kind) {
        case fracsum::ErrorKind::parse: return 2;
        case fracsum::ErrorKind::unsupported:
        case fracsum::ErrorKind::no_primitive:
        case fracsum::ErrorKind::bounds: return 3;
        case fracsum::ErrorKind::pole:
        case fracsum::ErrorKind::non_summable:
        case fracsum::ErrorKind::non_decaying: return 4;
        case fracsum::ErrorKind::io: return 5;
    }
    return 1;
}

// Bounds accept any constant expression of the grammar ("pi", "-0.5", "1+2i").
Complex parse_bound(const std::string& text, const char* what) {
    const fracsum::SyntaxTree t = fracsum::parse(text);
    if (fracsum::contains_variable(t))
        throw fracsum::ParseError(0, std::string(what) + " must be a constant expression");
    return fracsum::evaluate_tree(t, 0.0);
}

void parse_range(const std::string& text, double& lo, double& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw fracsum::BoundsError("range must look like lo:hi, got '" + text + "'");
    std::size_t used = 0;
    lo = std::stod(text.substr(0, colon), &used);
    hi = std::stod(text.substr(colon + 1), &used);
}

struct SumOptions {
    std::string expr;
    std::string from = "1";
    std::string to;
    std::string method = "closed";
    double tol = 1e-8;
    long long max_terms = 10'000'000;
    int taylor_terms = 40;
    bool json = false;
};

int cmd_sum(const SumOptions& o) {
    const fracsum::CatalogExpr e = fracsum::parse_catalog(o.expr);
    const Complex x = parse_bound(o.from, "--from");
    const Complex y = parse_bound(o.to, "--to");

    fracsum::SumResult r;
    if (o.method == "closed") {
        r = fracsum::frac_sum(e, x, y);
    } else if (o.method == "series") {
        r = fracsum::frac_sum_series(e, y, o.tol, o.max_terms);
        if (x != Complex(1.0)) {
            const auto lo = fracsum::frac_sum_series(e, x - 1.0, o.tol, o.max_terms);
            r.value -= lo.value;
            r.err_estimate += lo.err_estimate;
            r.terms_used += lo.terms_used;
            r.converged = r.converged && lo.converged;
        }
    } else {  // taylor
        r = fracsum::frac_sum_taylor(e, y, o.taylor_terms);
        if (x != Complex(1.0)) {
            const auto lo = fracsum::frac_sum_taylor(e, x - 1.0, o.taylor_terms);
            r.value -= lo.value;
            r.err_estimate += lo.err_estimate;
            r.terms_used += lo.terms_used;
        }
    }

    if (o.json) {
        nlohmann::json j{{"value_re", r.value.real()},
                         {"value_im", r.value.imag()},
                         {"method", fracsum::method_name(r.method)},
                         {"err", r.err_estimate},
                         {"terms", r.terms_used},
                         {"converged", r.converged}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << fracsum::format_complex(r.value) << "\n";
        std::cout << "method: " << fracsum::method_name(r.method) << "\n";
        std::cout << "err: " << fracsum::format_real(r.err_estimate) << "\n";
        if (r.method != fracsum::SumMethod::closed_form)
            std::cout << "terms: " << r.terms_used << "\n";
    }
    if (!r.converged) {
        std::cerr << "error: series did not converge within the term budget\n";
        return 4;
    }
    return 0;
}

int cmd_essence(const std::string& expr, bool numeric, double h_min, bool json) {
    const fracsum::CatalogExpr e = fracsum::parse_catalog(expr);
    const fracsum::EssenceResult r =
        numeric ? fracsum::essence_numeric(e, h_min) : fracsum::essence(e);
    const char* prov =
        r.provenance == fracsum::EssenceProvenance::closed_form ? "closed_form" : "numeric_limit";
    if (json) {
        nlohmann::json j{{"value_re", r.value.real()},
                         {"value_im", r.value.imag()},
                         {"provenance", prov},
                         {"err", r.err_estimate}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << fracsum::format_complex(r.value) << "\n";
        std::cout << "provenance: " << prov << "\n";
        std::cout << "err: " << fracsum::format_real(r.err_estimate) << "\n";
    }
    return 0;
}

int cmd_regularize(const std::string& expr, bool json) {
    const fracsum::CatalogExpr e = fracsum::parse_catalog(expr);
    const fracsum::HashSumResult r = fracsum::hash_sum(e);
    if (json) {
        nlohmann::json j{{"value_re", r.value.real()},
                         {"value_im", r.value.imag()},
                         {"classical_convergent", r.classical_convergent}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << fracsum::format_complex(r.value) << "\n";
        std::cout << "classical series: " << (r.classical_convergent ? "convergent" : "divergent")
                  << "\n";
    }
    return 0;
}

struct GridCmdOptions {
    std::string expr;
    std::string re_range = "-4.5:1.5";
    std::string im_range = "-3:3";
    double step = 0.05;
    std::string out = "grid.csv";
};

int cmd_grid(const GridCmdOptions& o) {
    const fracsum::CatalogExpr e = fracsum::parse_catalog(o.expr);
    fracsum::GridOptions opt;
    opt.step = o.step;
    parse_range(o.re_range, opt.re_min, opt.re_max);
    parse_range(o.im_range, opt.im_min, opt.im_max);
    const auto points = fracsum::evaluate_grid(e, opt);

    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw fracsum::IoError("cannot open '" + o.out + "' for writing");
    fracsum::write_grid_csv(out, points);
    out.flush();
    if (!out) throw fracsum::IoError("failed while writing '" + o.out + "'");
    std::cout << "wrote " << points.size() << " rows to " << o.out << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int count) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = fracsum::verify_suite_names();
    else
        suites.push_back(suite);

    bool all_pass = true;
    for (const auto& name : suites) {
        const fracsum::SuiteReport rep = fracsum::run_verify_suite(name, seed, count);
        std::cout << "suite " << rep.suite << " (seed " << seed << ", count " << count << ")\n";
        for (const auto& p : rep.properties) {
            std::ostringstream line;
            line << "  " << p.name;
            std::string s = line.str();
            if (s.size() < 58) s.resize(58, ' ');
            std::cout << s << " cases " << p.cases << "  worst " << fracsum::format_real(p.worst)
                      << "  tol " << fracsum::format_real(p.tolerance) << "  "
                      << (p.pass ? "PASS" : "FAIL") << "\n";
        }
        std::cout << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << "\n";
        all_pass = all_pass && rep.pass();
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional finite sums over a closed function catalog"};
    app.require_subcommand(1);

    SumOptions sum_opt;
    auto* sum = app.add_subcommand("sum", "evaluate sum over k = from..to of f(k)");
    sum->add_option("expr", sum_opt.expr, "expression in k")->required();
    sum->add_option("--from", sum_opt.from, "lower bound (constant expression; default 1)");
    sum->add_option("--to", sum_opt.to, "upper bound (constant expression)")->required();
    sum->add_option("--method", sum_opt.method, "closed | series | taylor")
        ->check(CLI::IsMember({"closed", "series", "taylor"}));
    sum->add_option("--tol", sum_opt.tol, "series tolerance");
    sum->add_option("--max-terms", sum_opt.max_terms, "series term budget");
    sum->add_option("--terms", sum_opt.taylor_terms, "taylor term count");
    sum->add_flag("--json", sum_opt.json, "emit JSON");

    std::string ess_expr;
    bool ess_numeric = false;
    double ess_hmin = 1e-3;
    bool ess_json = false;
    auto* ess = app.add_subcommand("essence", "essence of f (slope at 0 of the fractional sum)");
    ess->add_option("expr", ess_expr, "expression in k")->required();
    ess->add_flag("--numeric", ess_numeric, "use the numeric limit definition");
    ess->add_option("--h-min", ess_hmin, "smallest h in the dyadic schedule");
    ess->add_flag("--json", ess_json, "emit JSON");

    std::string reg_expr;
    bool reg_json = false;
    auto* reg = app.add_subcommand("regularize", "divergent-series value -ess(F), F' = f");
    reg->add_option("expr", reg_expr, "expression in k")->required();
    reg->add_flag("--json", reg_json, "emit JSON");

    GridCmdOptions grid_opt;
    auto* grid = app.add_subcommand("grid", "CSV of the fractional sum over a complex rectangle");
    grid->add_option("expr", grid_opt.expr, "expression in k")->required();
    grid->add_option("--re", grid_opt.re_range, "real range lo:hi (default -4.5:1.5)");
    grid->add_option("--im", grid_opt.im_range, "imaginary range lo:hi (default -3:3)");
    grid->add_option("--step", grid_opt.step, "grid step (default 0.05)");
    grid->add_option("--out", grid_opt.out, "output CSV path (default grid.csv)");

    std::string verify_suite;
    std::uint64_t verify_seed = 7;
    int verify_count = 300;
    auto* verify = app.add_subcommand("verify", "run a seeded property suite");
    verify->add_option("suite", verify_suite, "axioms | table1 | euler-maclaurin | derivative | oracles | specfun | all")
        ->required();
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--count", verify_count, "cases per property");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sum->parsed()) return cmd_sum(sum_opt);
        if (ess->parsed()) return cmd_essence(ess_expr, ess_numeric, ess_hmin, ess_json);
        if (reg->parsed()) return cmd_regularize(reg_expr, reg_json);
        if (grid->parsed()) return cmd_grid(grid_opt);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_seed, verify_count);
    } catch (const fracsum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
