#ifndef EULERPHASE_ASYMPTOTICS_HPP
#define EULERPHASE_ASYMPTOTICS_HPP

#include <complex>
#include <vector>

#include "eulerphase/phases.hpp"
#include "eulerphase/weights.hpp"

namespace eulerphase {

enum class Branch { Analytic, Oscillatory };

struct ArcEstimate {
  ArcLabel arc;
  std::complex<double> omega;
  std::complex<double> saddle;  // I-tilde, exponential factor included
  Branch branch = Branch::Analytic;
  std::complex<double> product;  // omega * saddle
};

struct Estimate {
  std::complex<double> z;
  int n = 0;
  std::complex<double> value;  // sum of arc products
  std::vector<ArcEstimate> arcs;
  double mu = 0.0;  // relative-error exponent
  PhaseClass phase;
  double envelope = 0.0;  // sum of |omega| |T| over arcs
};

// omega_{h,k,n}(z) = e^{-2 pi i hn/k} prod_j (1 - e^{2 pi i hj/k} z)^{-b(j)},
// principal-branch complex powers; factors with |b(j)| < 1e-14 are skipped.
std::complex<double> omega(const WeightSequence& seq, ArcLabel arc, int n,
                           std::complex<double> z);

// Saddle-point leading term:
//   T = sqrt(L / (n^{(s0+2)/(s0+1)} 2 pi (s0+1)))
//       * exp(((s0+1)/s0) n^{s0/(s0+1)} L).
// Oscillatory branch (Phi nonpositive real within osc_tol) returns 2 Re T.
std::pair<std::complex<double>, Branch> saddle_term(const WeightSequence& seq,
                                                    ArcLabel arc, int n,
                                                    std::complex<double> z,
                                                    double osc_tol = 1e-8);

// Sum of omega * I-tilde over the major arcs of classify(z).  Throws
// BoundaryError when the classification is flagged as a phase boundary.
Estimate estimate(const WeightSequence& seq, std::complex<double> z, int n,
                  int K_max = 10, double tie_tol = 1e-9, double osc_tol = 1e-8);

// mu = min(-sigma0/(s0+1), s0/(2 s0+2)).
double error_exponent(const WeightSequence& seq);

// Classical z = 1 Meinardus leading term
//   r(n) = C n^kappa exp(((s0+1)/s0) n^{s0/(s0+1)} [A Gamma(s0+1) zeta(s0+1)]^{1/(s0+1)})
// with C and kappa built from D(0), D'(0), A of the h = k = 1 series.
double meinardus_r(const WeightSequence& seq, long n);

struct CompareRow {
  int n = 0;
  std::complex<double> exact;
  std::complex<double> est;
  double rel_err = 0.0;
  double env_err = 0.0;  // |exact - est| / envelope
};

// Pair eval_exact with estimate over a list of n.
std::vector<CompareRow> compare(const WeightSequence& seq,
                                std::complex<double> z,
                                const std::vector<int>& n_list, int K_max = 10);

}  // namespace eulerphase

#endif
