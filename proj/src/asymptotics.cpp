#include "eulerphase/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eulerphase/exact.hpp"
#include "eulerphase/special.hpp"

namespace eulerphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using Cx = std::complex<double>;

}  // namespace

std::complex<double> omega(const WeightSequence& seq, ArcLabel arc, int n,
                           std::complex<double> z) {
  if (std::abs(z) >= 1.0) throw DomainError("omega: |z| < 1 required");
  const DirichletData& data = fourier_coeffs(seq, arc.k);
  Cx log_sum = Cx(0.0, -kTwoPi * static_cast<double>(arc.h) *
                           static_cast<double>(n) / static_cast<double>(arc.k));
  for (int j = 0; j < arc.k; ++j) {
    Cx bj = data.b[static_cast<std::size_t>(j)];
    if (std::abs(bj) < 1e-14) continue;
    Cx factor = 1.0 - std::polar(1.0, kTwoPi * static_cast<double>(arc.h) *
                                          static_cast<double>(j) /
                                          static_cast<double>(arc.k)) *
                          z;
    if (std::abs(factor) < 1e-14)
      throw DomainError("omega: factor 1 - e^{2 pi i hj/k} z vanishes");
    log_sum += -bj * std::log(factor);
  }
  return std::exp(log_sum);
}

std::pair<std::complex<double>, Branch> saddle_term(const WeightSequence& seq,
                                                    ArcLabel arc, int n,
                                                    std::complex<double> z,
                                                    double osc_tol) {
  if (n < 1) throw DomainError("saddle_term: n >= 1 required");
  double s0 = seq.s0();
  Cx phi = phi_hk(seq, arc, z);
  if (std::abs(phi) < 1e-14)
    throw DomainError("saddle_term: Phi vanishes; arc undefined");
  Cx big_l = principal_root(phi, s0 + 1.0);
  double nn = static_cast<double>(n);
  Cx t = std::sqrt(big_l / (std::pow(nn, (s0 + 2.0) / (s0 + 1.0)) * kTwoPi *
                            (s0 + 1.0))) *
         std::exp((s0 + 1.0) / s0 * std::pow(nn, s0 / (s0 + 1.0)) * big_l);
  bool oscillatory =
      phi.real() < 0.0 && std::abs(phi.imag()) < osc_tol * std::abs(phi);
  if (oscillatory) return {Cx(2.0 * t.real(), 0.0), Branch::Oscillatory};
  return {t, Branch::Analytic};
}

Estimate estimate(const WeightSequence& seq, std::complex<double> z, int n,
                  int K_max, double tie_tol, double osc_tol) {
  if (n < 1) throw DomainError("estimate: n >= 1 required");
  Estimate est;
  est.z = z;
  est.n = n;
  est.mu = error_exponent(seq);
  est.phase = classify(seq, z, K_max, tie_tol);
  if (est.phase.boundary)
    throw BoundaryError("estimate: z lies on a phase boundary");
  for (ArcLabel arc : est.phase.major_arcs) {
    ArcEstimate ae;
    ae.arc = arc;
    ae.omega = omega(seq, arc, n, z);
    auto [t, branch] = saddle_term(seq, arc, n, z, osc_tol);
    ae.saddle = t;
    ae.branch = branch;
    ae.product = ae.omega * ae.saddle;
    est.value += ae.product;
    double env = std::abs(ae.omega) * std::abs(ae.saddle);
    if (branch == Branch::Oscillatory) {
      // |T| of the single saddle, before taking 2 Re
      Cx phi = phi_hk(seq, arc, z);
      Cx big_l = principal_root(phi, seq.s0() + 1.0);
      double s0 = seq.s0();
      double nn = static_cast<double>(n);
      Cx t1 = std::sqrt(big_l / (std::pow(nn, (s0 + 2.0) / (s0 + 1.0)) *
                                 kTwoPi * (s0 + 1.0))) *
              std::exp((s0 + 1.0) / s0 * std::pow(nn, s0 / (s0 + 1.0)) * big_l);
      env = 2.0 * std::abs(ae.omega) * std::abs(t1);
    }
    est.envelope += env;
    est.arcs.push_back(ae);
  }
  return est;
}

double error_exponent(const WeightSequence& seq) {
  double s0 = seq.s0();
  return std::min(-seq.sigma0() / (s0 + 1.0), s0 / (2.0 * s0 + 2.0));
}

double meinardus_r(const WeightSequence& seq, long n) {
  if (n < 1) throw DomainError("meinardus_r: n >= 1 required");
  double s0 = seq.s0();
  double a = dirichlet_residue(seq, 1, 1).real();
  double d0 = dirichlet_value(seq, 1, 1, 0.0).real();
  double dp0 = dirichlet_deriv_zero(seq);
  double base = a * gamma_real(s0 + 1.0) * riemann_zeta(s0 + 1.0);
  if (!(base > 0.0))
    throw UnsupportedFamily("meinardus_r: A Gamma(s0+1) zeta(s0+1) <= 0");
  double kappa = (d0 - 1.0 - 0.5 * s0) / (1.0 + s0);
  double c = std::exp(dp0) / std::sqrt(kTwoPi * (1.0 + s0)) *
             std::pow(base, (1.0 - 2.0 * d0) / (2.0 * s0 + 2.0));
  double nn = static_cast<double>(n);
  return c * std::pow(nn, kappa) *
         std::exp((s0 + 1.0) / s0 * std::pow(nn, s0 / (s0 + 1.0)) *
                  std::pow(base, 1.0 / (s0 + 1.0)));
}

std::vector<CompareRow> compare(const WeightSequence& seq,
                                std::complex<double> z,
                                const std::vector<int>& n_list, int K_max) {
  int n_max = 0;
  for (int n : n_list) {
    if (n < 1) throw DomainError("compare: all n must be >= 1");
    n_max = std::max(n_max, n);
  }
  auto exact_seq = eval_exact_sequence(seq, z, n_max);
  std::vector<CompareRow> rows;
  for (int n : n_list) {
    CompareRow row;
    row.n = n;
    row.exact = exact_seq[static_cast<std::size_t>(n)];
    Estimate est = estimate(seq, z, n, K_max);
    row.est = est.value;
    double diff = std::abs(row.exact - row.est);
    row.rel_err = diff / std::abs(row.exact);
    row.env_err = est.envelope > 0.0 ? diff / est.envelope : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace eulerphase
