#pragma once

#include "fracsum/types.hpp"

namespace fracsum {

// Riemann zeta at an integer argument n != 1.
//   n <= 0        : zeta(1-a) = -B_a/a with B_1 = +1/2 (a = 1-n <= table bound)
//   even 2..64    : Bernoulli closed form |B_n| (2*pi)^n / (2 n!)
//   otherwise >= 2: accelerated alternating (eta) series, <= 1e-14 relative
Complex zeta_int(int n);

// Digamma psi(z); upward recurrence into Re z >= 10, then the Bernoulli
// asymptotic series. Poles at the nonpositive integers.
Complex digamma(Complex z);

// Polygamma psi^{(n)}(z), n >= 1 (n = 0 falls back to digamma).
Complex polygamma(int n, Complex z);

// Principal-branch log-gamma via upward recurrence plus the Stirling series.
Complex ln_gamma(Complex z);

}  // namespace fracsum
