#include "fracsum/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracsum/bernoulli.hpp"

namespace fracsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShiftThreshold = 10.0;  // validated by the recurrence property suites
constexpr int kAsymptoticTerms = 20;      // uses B_2 .. B_40

// B_{2k} as doubles, k = 1..kAsymptoticTerms.
const std::array<double, kAsymptoticTerms>& even_bernoulli() {
    static const auto table = [] {
        std::array<double, kAsymptoticTerms> t{};
        for (int k = 1; k <= kAsymptoticTerms; ++k)
            t[static_cast<std::size_t>(k - 1)] = bernoulli_d(2 * k, BernoulliConvention::minus);
        return t;
    }();
    return table;
}

void require_no_pole(Complex z, const char* fn) {
    if (is_nonpositive_integer(z))
        throw PoleError(std::string(fn) + " has a pole at the nonpositive integer " +
                        std::to_string(z.real()));
}

// Cohen / Rodriguez Villegas / Zagier acceleration of
// eta(s) = sum_{k>=0} (-1)^k (k+1)^{-s}; error ~ (3+sqrt(8))^{-n}.
double eta_accelerated(int s) {
    const int n = 48;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d, sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(static_cast<double>(k + 1), -static_cast<double>(s));
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

}  // namespace

Complex zeta_int(int n) {
    if (n == 1) throw PoleError("zeta has its pole at 1");
    if (n <= 0) {
        const int a = 1 - n;  // a >= 1
        return Complex(-bernoulli_d(a, BernoulliConvention::plus) / a, 0.0);
    }
    if (n % 2 == 0 && n <= 64) {
        // zeta(2m) = |B_2m| (2*pi)^{2m} / (2 (2m)!)
        double ratio = 0.5;
        for (int j = 1; j <= n; ++j) ratio *= 2.0 * kPi / j;
        const double b = bernoulli_d(n, BernoulliConvention::minus);
        return Complex(std::fabs(b) * ratio, 0.0);
    }
    const double eta = eta_accelerated(n);
    return Complex(eta / (1.0 - std::pow(2.0, 1.0 - n)), 0.0);
}

Complex digamma(Complex z) {
    require_no_pole(z, "digamma");
    Complex acc = 0.0;
    while (z.real() < kShiftThreshold) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ ln z - 1/(2z) - sum_k B_2k / (2k z^{2k})
    const auto& b2 = even_bernoulli();
    const Complex inv2 = 1.0 / (z * z);
    Complex res = std::log(z) - 0.5 / z;
    Complex p = inv2;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= kAsymptoticTerms; ++k) {
        const Complex term = b2[static_cast<std::size_t>(k - 1)] / (2.0 * k) * p;
        const double mag = std::abs(term);
        if (mag > prev) break;  // asymptotic series: stop at the smallest term
        res -= term;
        if (mag <= std::numeric_limits<double>::epsilon() * std::abs(res)) break;
        prev = mag;
        p *= inv2;
    }
    return res + acc;
}

Complex polygamma(int n, Complex z) {
    if (n < 0) throw BoundsError("polygamma order must be nonnegative");
    if (n == 0) return digamma(z);
    require_no_pole(z, "polygamma");

    double nfact = 1.0;
    for (int j = 2; j <= n; ++j) nfact *= j;
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n

    // psi^{(n)}(z) = psi^{(n)}(z+1) - (-1)^n n! / z^{n+1}
    Complex acc = 0.0;
    while (z.real() < kShiftThreshold) {
        acc -= sign_n * nfact / pow_int(z, n + 1);
        z += 1.0;
    }

    // psi^{(n)}(w) ~ (-1)^{n-1} [ (n-1)!/w^n + n!/(2 w^{n+1})
    //                            + sum_k B_2k (2k+n-1)!/((2k)! w^{2k+n}) ]
    const auto& b2 = even_bernoulli();
    const Complex invw = 1.0 / z;
    const Complex inv2 = invw * invw;
    Complex wpow = pow_int(invw, n);  // w^{-n}
    Complex res = (nfact / n) * wpow + 0.5 * nfact * wpow * invw;
    double poch = nfact * (n + 1) / 2.0;  // (2k+n-1)!/(2k)! at k = 1
    Complex p = wpow * inv2;              // w^{-(2k+n)} at k = 1
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= kAsymptoticTerms; ++k) {
        const Complex term = b2[static_cast<std::size_t>(k - 1)] * poch * p;
        const double mag = std::abs(term);
        if (mag > prev) break;
        res += term;
        if (mag <= std::numeric_limits<double>::epsilon() * std::abs(res)) break;
        prev = mag;
        poch *= static_cast<double>(2 * k + n) * (2 * k + n + 1) / ((2 * k + 1) * (2 * k + 2));
        p *= inv2;
    }
    res *= -sign_n;  // (-1)^{n-1}
    return res + acc;
}

Complex ln_gamma(Complex z) {
    require_no_pole(z, "ln_gamma");
    Complex acc = 0.0;
    while (z.real() < kShiftThreshold) {
        acc -= std::log(z);
        z += 1.0;
    }
    // Stirling: (z - 1/2) ln z - z + ln(2 pi)/2 + sum_k B_2k / ((2k)(2k-1) z^{2k-1})
    const auto& b2 = even_bernoulli();
    Complex res = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    const Complex inv2 = 1.0 / (z * z);
    Complex p = 1.0 / z;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= kAsymptoticTerms; ++k) {
        const Complex term = b2[static_cast<std::size_t>(k - 1)] / (2.0 * k * (2.0 * k - 1.0)) * p;
        const double mag = std::abs(term);
        if (mag > prev) break;
        res += term;
        if (mag <= std::numeric_limits<double>::epsilon() * std::abs(res)) break;
        prev = mag;
        p *= inv2;
    }
    return res + acc;
}

}  // namespace fracsum
