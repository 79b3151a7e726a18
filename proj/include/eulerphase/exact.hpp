#ifndef EULERPHASE_EXACT_HPP
#define EULERPHASE_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <vector>

#include "eulerphase/weights.hpp"

namespace eulerphase {

using BigInt = boost::multiprecision::cpp_int;

// Q_n(z) as a polynomial in z of degree <= n.  Exact integer coefficients are
// kept when the weights are nonnegative integers; the double view is always
// populated.
struct CoeffPoly {
  int n = 0;
  bool exact = false;
  std::vector<BigInt> int_coeffs;  // populated iff exact
  std::vector<double> coeffs;      // z^0 .. z^n

  std::complex<double> eval(std::complex<double> z) const;
};

// Q_0..Q_{n_max} by multiplying out prod (1 - z q^m)^{-a_m}, exact integer
// arithmetic.  Requires all a_m (m <= n_max) to be nonnegative integers.
std::vector<CoeffPoly> expand_product(const WeightSequence& seq, int n_max);

// Q_0..Q_{n_max} by the log-exp recurrence
//   c_N(z) = (1/N) sum_{m|N} m a_m z^{N/m},   Q_n = (1/n) sum_j (j c_j) Q_{n-j}
// Floating coefficients; any real weights.
std::vector<CoeffPoly> expand_exp_recurrence(const WeightSequence& seq,
                                             int n_max);

// Scalarized recurrence: Q_0(z)..Q_{n_max}(z) at fixed z, O(n^2) operations.
std::vector<std::complex<double>> eval_exact_sequence(const WeightSequence& seq,
                                                      std::complex<double> z,
                                                      int n_max);

// Q_n(z) at fixed z.
std::complex<double> eval_exact(const WeightSequence& seq,
                                std::complex<double> z, int n);

// Numeric Cauchy-integral oracle: trapezoid rule for
//   Q_n(z) = (1/2 pi i) oint P(z,q) q^{-n-1} dq
// on |q| = radius, with ln P summed to tail < 1e-13.  When radius is not
// given it defaults to exp(-2 pi alpha_n) with
// alpha_n = Re L_dom(z) / (2 pi n^{1/(s0+1)}) taken from the dominant arc.
// When points is not given it defaults to max(8n, 256) and doubles until two
// successive trapezoid values agree to 1e-9.
std::complex<double> contour_extract(const WeightSequence& seq,
                                     std::complex<double> z, int n,
                                     std::optional<double> radius = {},
                                     std::optional<int> points = {});

}  // namespace eulerphase

#endif
