// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: fracsum_acceptance [path-to-cli-binary]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fracsum/bernoulli.hpp"
#include "fracsum/essence.hpp"
#include "fracsum/euler_maclaurin.hpp"
#include "fracsum/parser.hpp"
#include "fracsum/regularize.hpp"
#include "fracsum/specfun.hpp"
#include "fracsum/sum.hpp"
#include "fracsum/verify.hpp"
#include "oracles.hpp"

using namespace fracsum;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double pi = std::numbers::pi;
const Complex I(0.0, 1.0);

int g_passed = 0;
int g_total = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    ++g_total;
    if (pass) ++g_passed;
    std::printf("criterion %2d: %s  %s (%s)\n", id, pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// 1. Euler's identity, closed form and series engine.
void criterion_1() {
    const auto t0 = Clock::now();
    const CatalogExpr f = CatalogExpr::inverse_monomial(1);
    const Complex target(-2.0 * std::log(2.0), 0.0);
    const double d_closed = std::abs(frac_sum(f, 1.0, Complex(-0.5, 0.0)).value - target);
    const SumResult s = frac_sum_series(f, Complex(-0.5, 0.0), 1e-8, 1'000'000);
    const double d_series = std::abs(s.value - target);
    const double dt = seconds_since(t0);
    const bool pass = d_closed <= 1e-10 && d_series <= 1e-7 && s.terms_used <= 1'000'000 &&
                      s.converged && dt < 1.0;
    report(1, "Euler harmonic value at -1/2", pass,
           "closed |d|=" + fmt(d_closed) + ", series |d|=" + fmt(d_series) + " after " +
               std::to_string(s.terms_used) + " terms, " + fmt(dt) + " s");
}

// 2. Table of essences: closed form vs references, numeric limit vs closed.
void criterion_2() {
    const auto t0 = Clock::now();
    struct Row {
        const char* name;
        CatalogExpr expr;
        Complex reference;
    };
    const Complex zc(2.5, -1.0);
    const std::vector<Row> rows = {
        {"z", CatalogExpr::constant(zc), zc},
        {"x^2", CatalogExpr::monomial(2), Complex(1.0 / 6.0, 0.0)},
        {"x^-1", CatalogExpr::inverse_monomial(1), Complex(pi * pi / 6.0, 0.0)},
        {"e^(pi i x)", CatalogExpr::exponential(pi * I), Complex(0.0, pi / 2.0)},
        {"e^(pi i x) x", CatalogExpr::exp_times_x(pi * I), Complex(0.5, pi / 4.0)},
        {"ln x", CatalogExpr::logarithm(), Complex(-euler_gamma, 0.0)},
        {"1/(x(x+1))",
         CatalogExpr::inverse_monomial(1, 0.0) - CatalogExpr::inverse_monomial(1, 1.0),
         Complex(1.0, 0.0)},
    };
    double worst_closed = 0.0, worst_numeric = 0.0;
    for (const auto& row : rows) {
        const Complex closed = essence(row.expr).value;
        worst_closed = std::max(worst_closed, std::abs(closed - row.reference));
        worst_numeric = std::max(worst_numeric, std::abs(essence_numeric(row.expr).value - closed));
    }
    const double dt = seconds_since(t0);
    const bool pass = worst_closed <= 1e-10 && worst_numeric <= 1e-6 && dt < 5.0;
    report(2, "essence table sweep (closed + numeric limit)", pass,
           "worst closed |d|=" + fmt(worst_closed) + ", worst numeric |d|=" + fmt(worst_numeric) +
               ", " + fmt(dt) + " s");
}

// 3. ess(x^a) = B_a against exact rationals, a = 0..12.
void criterion_3() {
    double worst = 0.0;
    for (int a = 0; a <= 12; ++a) {
        const CatalogExpr f = a == 0 ? CatalogExpr::constant(1.0) : CatalogExpr::monomial(a);
        const double ref = bernoulli_d(a, BernoulliConvention::plus);
        worst = std::max(worst, std::abs(essence(f).value - Complex(ref, 0.0)));
    }
    report(3, "Bernoulli essences ess(x^a) = B_a, a = 0..12", worst <= 1e-12,
           "worst |d|=" + fmt(worst));
}

// 4. Regularization quartet.
void criterion_4() {
    struct Case {
        const char* expr;
        Complex want;
    };
    const Case cases[] = {{"k", Complex(-1.0 / 12.0, 0.0)},
                          {"1/k", Complex(euler_gamma, 0.0)},
                          {"(-1)^(k+1)", Complex(0.5, 0.0)},
                          {"(-1)^(k+1)*k", Complex(0.25, 0.0)}};
    double worst = 0.0;
    for (const auto& c : cases)
        worst = std::max(worst, std::abs(hash_sum(parse_catalog(c.expr)).value - c.want));
    report(4, "regularization quartet -1/12, gamma, 1/2, 1/4", worst <= 1e-10,
           "worst |d|=" + fmt(worst));
}

// 5. Euler-Maclaurin == fractional sum, 200 random polynomials x 100 points.
void criterion_5() {
    const auto t0 = Clock::now();
    testutil::Rng rng(518);
    double worst = 0.0;
    for (int p = 0; p < 200; ++p) {
        const CatalogExpr poly = testutil::random_polynomial(rng, 10);
        for (int j = 0; j < 100; ++j) {
            const Complex x = rng.box(-3.0, 3.0, -3.0, 3.0);
            const Complex fs = frac_sum(poly, 1.0, x).value;
            const Complex em = euler_maclaurin_sum(poly, x);
            worst = std::max(worst, std::abs(em - fs) / std::max(1.0, std::abs(fs)));
        }
    }
    report(5, "Euler-Maclaurin vs fractional sum (200 polys x 100 points)", worst <= 1e-9,
           "worst rel=" + fmt(worst) + ", " + fmt(seconds_since(t0)) + " s");
}

// 6. Axiom suite, 300 seeded cases per property.
void criterion_6() {
    const auto t0 = Clock::now();
    const SuiteReport rep = run_verify_suite("axioms", 7, 300);
    double worst = 0.0;
    for (const auto& p : rep.properties) worst = std::max(worst, p.worst);
    const double dt = seconds_since(t0);
    const bool pass = rep.pass() && dt < 30.0;
    report(6, "axiom suite (A1-A4, empty, interpolation, opposite)", pass,
           "worst residual=" + fmt(worst) + ", " + fmt(dt) + " s");
}

// 7. lnGamma(x+1) vs the truncated zeta series for |x| <= 0.5.
void criterion_7() {
    testutil::Rng rng(77);
    double worst = 0.0;
    for (int j = 0; j < 50; ++j) {
        Complex x;
        do {
            x = rng.box(-0.5, 0.5, -0.5, 0.5);
        } while (std::abs(x) > 0.5);
        Complex series = -euler_gamma * x;
        Complex mxk = x * x;  // (-x)^k starts at k = 2 with x^2
        for (int k = 2; k <= 40; ++k) {
            series += zeta_int(k) / static_cast<double>(k) * mxk;
            mxk *= -x;
        }
        worst = std::max(worst, std::abs(ln_gamma(x + 1.0) - series));
    }
    report(7, "lnGamma(x+1) matches the zeta power series (50 points)", worst <= 1e-9,
           "worst |d|=" + fmt(worst));
}

// 8. Derivative identity residuals across the four families, 100 points each.
void criterion_8() {
    const SuiteReport rep = run_verify_suite("derivative", 88, 100);
    double worst = 0.0;
    bool pass = rep.properties.size() == 4;
    for (const auto& p : rep.properties) {
        pass = pass && p.pass && p.tolerance == 1e-6 && p.cases == 100;
        worst = std::max(worst, p.worst);
    }
    report(8, "derivative identity d/dx sum f = ess(f) + sum f' (4 families x 100)", pass,
           "worst residual=" + fmt(worst));
}

// 9. sum_{k=1..x} cos(2 pi k / x) k = x/2.
void criterion_9() {
    testutil::Rng rng(99);
    double worst = 0.0;
    for (int j = 0; j < 50; ++j) {
        Complex x, z;
        for (;;) {
            x = rng.box(0.5, 3.0, -1.5, 1.5);
            z = 2.0 * pi * I / x;
            if (std::abs(std::exp(z) - 1.0) > 0.2 && std::abs(std::exp(z / 2.0) + 1.0) > 0.2)
                break;
        }
        const CatalogExpr f = CatalogExpr::exp_times_x(z, 0.5) + CatalogExpr::exp_times_x(-z, 0.5);
        worst = std::max(worst, std::abs(frac_sum(f, 1.0, x).value - x / 2.0));
    }
    report(9, "half-period identity sum cos(2 pi k / x) k = x/2 (50 points)", worst <= 1e-8,
           "worst |d|=" + fmt(worst));
}

// 10. Default-region grid CSV through the CLI: spot values and pole rows.
void criterion_10(const char* cli) {
    const auto t0 = Clock::now();
    const std::string path = "acceptance_grid.csv";
    bool ran_cli = false;
    if (cli != nullptr) {
        const std::string cmd =
            std::string(cli) + " grid \"1/k\" --out " + path + " > /dev/null 2>&1";
        ran_cli = std::system(cmd.c_str()) == 0;
    }
    if (!ran_cli) {
        report(10, "figure grid via the CLI", false, "could not run the CLI binary");
        return;
    }
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    bool header_ok = line == "re,im,val_re,val_im,status";
    std::size_t rows = 0;
    double worst_spot = -1.0;
    std::vector<std::pair<double, double>> pole_rows;
    const double ln2 = std::log(2.0);
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream ss(line);
        std::string f_re, f_im, f_vre, f_vim, f_status;
        std::getline(ss, f_re, ',');
        std::getline(ss, f_im, ',');
        std::getline(ss, f_vre, ',');
        std::getline(ss, f_vim, ',');
        std::getline(ss, f_status);
        const double re = std::strtod(f_re.c_str(), nullptr);
        const double im = std::strtod(f_im.c_str(), nullptr);
        if (f_status == "pole") {
            pole_rows.emplace_back(re, im);
            continue;
        }
        if (std::fabs(im) > 1e-9) continue;
        const auto spot = [&](double where, double want) {
            if (std::fabs(re - where) <= 1e-9) {
                const double v = std::strtod(f_vre.c_str(), nullptr);
                const double vi = std::strtod(f_vim.c_str(), nullptr);
                worst_spot = std::max(worst_spot, std::hypot(v - want, vi));
            }
        };
        spot(0.0, 0.0);
        spot(-0.5, -2.0 * ln2);
        spot(1.0, 1.0);
    }
    bool poles_ok = pole_rows.size() == 4;
    for (const auto& [re, im] : pole_rows) {
        const double nearest = std::round(re);
        poles_ok = poles_ok && std::fabs(im) <= 1e-9 && std::fabs(re - nearest) <= 1e-9 &&
                   nearest <= -1.0 && nearest >= -4.0;
    }
    const double dt = seconds_since(t0);
    const bool pass = header_ok && rows == 14641 && worst_spot >= 0.0 && worst_spot <= 1e-9 &&
                      poles_ok && dt < 10.0;
    report(10, "figure grid: 121x121 CSV, spot values, pole rows", pass,
           "rows=" + std::to_string(rows) + ", worst spot |d|=" + fmt(worst_spot) +
               ", poles=" + std::to_string(pole_rows.size()) + ", " + fmt(dt) + " s");
    std::remove(path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(cli);
    std::printf("acceptance: %d/%d criteria passed\n", g_passed, g_total);
    return g_passed == g_total ? 0 : 1;
}
