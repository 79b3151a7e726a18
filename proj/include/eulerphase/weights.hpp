#ifndef EULERPHASE_WEIGHTS_HPP
#define EULERPHASE_WEIGHTS_HPP

#include <complex>
#include <string>
#include <vector>

#include "eulerphase/errors.hpp"

namespace eulerphase {

enum class FamilyKind { Constant, Power, ArithmeticProgression, Periodic, Scaled };

// A weight family a_m, stored in the reduced form
//   a_m = periodic[m mod j] * m^shift
// which every supported family admits.  The Dirichlet series
// D_{h,k}(s) = sum_m e^{2 pi i hm/k} a_m m^{-s} then continues via a finite
// sum of Hurwitz zeta values and has its simple pole at s0 = 1 + shift.
class WeightSequence {
 public:
  static WeightSequence constant();
  static WeightSequence power(double s0);
  static WeightSequence arithmetic_progression(int a, int j);
  static WeightSequence periodic(std::vector<double> weights);
  static WeightSequence scaled(const WeightSequence& base, double s);

  double weight_at(long m) const;

  FamilyKind kind() const { return kind_; }
  double s0() const { return s0_; }
  double sigma0() const { return sigma0_; }
  void set_sigma0(double sigma0);
  int period() const { return static_cast<int>(periodic_.size()); }
  double shift() const { return shift_; }
  const std::vector<double>& periodic_weights() const { return periodic_; }
  // Canonical spec string; doubles as the Dirichlet-data cache key.
  const std::string& key() const { return key_; }

  // True when every a_m is a nonnegative integer (exact expansion allowed).
  bool nonnegative_integer_weights() const;
  double max_abs_weight() const;

 private:
  WeightSequence() = default;
  std::vector<double> periodic_;
  double shift_ = 0.0;
  double s0_ = 1.0;
  double sigma0_ = -0.99;
  FamilyKind kind_ = FamilyKind::Constant;
  std::string key_;
};

struct DirichletData {
  int k = 0;
  std::vector<std::complex<double>> value0;   // D_{h,k}(0), h = 1..k
  std::vector<std::complex<double>> residue;  // A_{h,k},    h = 1..k
  std::vector<std::complex<double>> b;        // j = 0..k-1
  std::vector<std::complex<double>> c;        // j = 0..k-1
};

// Meromorphic continuation of D_{h,k}(s), evaluated as the finite Hurwitz sum
// over residues modulo lcm(k, period).  h is reduced mod k (h = k is the
// trivial character).  Throws PoleError within 1e-12 of s0.
std::complex<double> dirichlet_value(const WeightSequence& seq, int h, int k,
                                     double s);

// Residue A_{h,k} of the simple pole at s0, in closed form.
std::complex<double> dirichlet_residue(const WeightSequence& seq, int h, int k);

// D_{h,k}(0), A_{h,k} for all h plus the inverse-DFT coefficients b(j), c(j).
// Computed once per (family, k) and cached; the returned reference is
// immutable and safe for concurrent readers.
const DirichletData& fourier_coeffs(const WeightSequence& seq, int k);

// D'(0) for the h = k = 1 series, by symmetric differences at eps = 1e-4 and
// 5e-5 with Richardson extrapolation.
double dirichlet_deriv_zero(const WeightSequence& seq);

}  // namespace eulerphase

#endif
