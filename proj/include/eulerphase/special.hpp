#ifndef EULERPHASE_SPECIAL_HPP
#define EULERPHASE_SPECIAL_HPP

#include <complex>

#include "eulerphase/errors.hpp"

namespace eulerphase {

using Complex = std::complex<double>;

// Disk cutoff shared by polylog / lerch_phi; arguments with |z| above this
// are rejected rather than accelerated.
inline constexpr double kDiskCutoff = 1.0 - 1e-6;

// Hurwitz zeta zeta(s, nu) = sum_{n>=0} (n+nu)^{-s}, analytically continued
// by Euler-Maclaurin summation (16 explicit terms, Bernoulli corrections
// through B_12).  0 < nu <= 1, s != 1.
double hurwitz_zeta(double s, double nu);

// Independent oracle: Hasse's globally convergent double series
//   zeta(s,nu) = 1/(s-1) sum_{n>=0} 1/(n+1) sum_{k<=n} (-1)^k C(n,k) (nu+k)^{1-s}.
// Slower, used for cross-checks.
double hurwitz_zeta_hasse(double s, double nu);

// Riemann zeta; dispatches to hurwitz_zeta and the functional equation for
// arguments far to the left of the critical strip.
double riemann_zeta(double s);

// Li_s(z) = sum_{n>=1} z^n / n^s for s > 0, |z| <= 1 - 1e-6.
Complex polylog(double s, Complex z);

// Lerch phi(z, s, nu) = sum_{n>=0} z^n / (n+nu)^s for s > 0, 0 < nu <= 1,
// |z| <= 1 - 1e-6.
Complex lerch_phi(Complex z, double s, double nu);

// Gamma(x) for x > 0.
double gamma_real(double x);

// Principal p-th root exp(log|w|/p + i arg(w)/p) with arg(w) in (-pi, pi].
Complex principal_root(Complex w, double p);

}  // namespace eulerphase

#endif
