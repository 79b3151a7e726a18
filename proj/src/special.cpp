#include "eulerphase/special.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <unordered_map>
#include <vector>

namespace eulerphase {

namespace {

constexpr double kPi = std::numbers::pi;

// B_2 .. B_12 over (2j)!
constexpr double kBernoulli[6] = {1.0 / 12.0,           -1.0 / 720.0,
                                  1.0 / 30240.0,        -1.0 / 1209600.0,
                                  1.0 / 47900160.0,     -691.0 / 1307674368000.0};

std::uint64_t double_key(double x) {
  std::uint64_t k;
  std::memcpy(&k, &x, sizeof(k));
  return k;
}

// Cached ladder zeta(s), zeta(s-1), zeta(s-2), ... used by the boundary
// expansion of Li_s.  Per-thread; rasters hammer this with a fixed s.
const std::vector<double>& zeta_ladder(double s, std::size_t need) {
  thread_local std::unordered_map<std::uint64_t, std::vector<double>> cache;
  auto& v = cache[double_key(s)];
  while (v.size() < need) {
    double arg = s - static_cast<double>(v.size());
    v.push_back(std::abs(arg - 1.0) < 1e-12 ? 0.0 : riemann_zeta(arg));
  }
  return v;
}

// Cached n^{-s} tables for the direct polylog sum.
const std::vector<double>& inv_power_table(double s, std::size_t need) {
  thread_local std::unordered_map<std::uint64_t, std::vector<double>> cache;
  auto& v = cache[double_key(s)];
  while (v.size() < need)
    v.push_back(std::pow(static_cast<double>(v.size() + 1), -s));
  return v;
}

// Direct summation of sum_{n>=1} z^n / n^s with the quantitative tail bound
// |z|^{N+1} / ((1-|z|)(N+1)^s) < 1e-13.
Complex polylog_direct(double s, Complex z) {
  double r = std::abs(z);
  std::size_t N = 1;
  while (std::pow(r, static_cast<double>(N + 1)) /
             ((1.0 - r) * std::pow(static_cast<double>(N + 1), s)) >=
         1e-13) {
    ++N;
    if (N > 50'000'000) throw ConvergenceError("polylog: tail bound not met");
  }
  const auto& ip = inv_power_table(s, N);
  Complex sum = 0.0, zp = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    zp *= z;
    sum += zp * ip[n - 1];
  }
  return sum;
}

// Expansion of Li_s(e^mu) around the unit circle, |mu| < 2 pi:
//   non-integer s: Gamma(1-s) (-mu)^{s-1} + sum_n zeta(s-n) mu^n / n!
//   integer s = m: the n = m-1 term becomes mu^{m-1}/(m-1)! (H_{m-1} - log(-mu)).
Complex polylog_boundary(double s, Complex z) {
  Complex mu = std::log(z);
  Complex neg_mu = -mu;
  Complex head;
  long m = std::lround(s);
  bool integer_s = std::abs(s - static_cast<double>(m)) < 1e-9 && m >= 1;
  if (integer_s) {
    double harmonic = 0.0, fact = 1.0;
    for (long i = 1; i < m; ++i) {
      harmonic += 1.0 / static_cast<double>(i);
      fact *= static_cast<double>(i);
    }
    head = std::pow(mu, static_cast<double>(m - 1)) / fact *
           (harmonic - std::log(neg_mu));
  } else {
    head = std::tgamma(1.0 - s) * std::pow(neg_mu, s - 1.0);
  }
  Complex sum = 0.0, p = 1.0;  // p = mu^n / n!
  double sum_scale = std::abs(head);
  int below = 0;
  for (int n = 0; n < 200; ++n) {
    if (!(integer_s && n == m - 1)) {
      const auto& zl = zeta_ladder(s, static_cast<std::size_t>(n) + 1);
      Complex term = zl[static_cast<std::size_t>(n)] * p;
      sum += term;
      sum_scale = std::max(sum_scale, std::abs(sum));
      if (std::abs(term) < 1e-17 * std::max(1e-300, sum_scale) &&
          static_cast<double>(n) > std::abs(mu))
        below++;
      else
        below = 0;
      if (below >= 2) return head + sum;
    }
    p *= mu / static_cast<double>(n + 1);
  }
  throw ConvergenceError("polylog: boundary expansion did not converge");
}

}  // namespace

double hurwitz_zeta(double s, double nu) {
  if (std::abs(s - 1.0) < 1e-12) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (!(nu > 0.0)) throw DomainError("hurwitz_zeta: nu must be positive");
  constexpr int N = 32;
  double sum = 0.0;
  for (int n = 0; n < N; ++n) sum += std::pow(n + nu, -s);
  double x = N + nu;
  sum += std::pow(x, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(x, -s);
  // Bernoulli corrections: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
  double poch = s;           // rising factorial s(s+1)...(s+2j-2)
  double xp = std::pow(x, -s - 1.0);
  for (int j = 1; j <= 6; ++j) {
    sum += kBernoulli[j - 1] * poch * xp;
    poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    xp /= x * x;
  }
  return sum;
}

double hurwitz_zeta_hasse(double s, double nu) {
  if (std::abs(s - 1.0) < 1e-12)
    throw PoleError("hurwitz_zeta_hasse: pole at s = 1");
  if (!(nu > 0.0)) throw DomainError("hurwitz_zeta_hasse: nu must be positive");
  // Hasse's series 1/(s-1) sum_n 1/(n+1) sum_k (-1)^k C(n,k)(nu+k)^{1-s},
  // applied after shifting nu by M: for large nu the outer terms decay like
  // exp(-c sqrt(nu n)) instead of polynomially, so the 1e-14 truncation rule
  // actually triggers.  The alternating inner sum loses ~n bits to
  // cancellation, hence the 100-digit intermediates (oracle-only code path;
  // speed is irrelevant here).
  using Big = boost::multiprecision::cpp_bin_float_100;
  constexpr int kShift = 10;
  Big head = 0;
  for (int m = 0; m < kShift; ++m) head += pow(Big(nu) + m, Big(-s));
  const Big base = Big(nu) + kShift;
  Big sum = 0;
  int below = 0;
  for (int n = 0; n < 1'000; ++n) {
    Big inner = 0, binom = 1;
    for (int k = 0; k <= n; ++k) {
      inner += binom * pow(base + k, Big(1.0 - s));
      binom *= -Big(n - k) / Big(k + 1);
    }
    Big term = inner / (n + 1);
    sum += term;
    double scale =
        std::max(1.0, static_cast<double>(fabs(head + sum / (s - 1.0))));
    if (static_cast<double>(fabs(term)) < 1e-14 * scale) {
      if (++below >= 3) break;
    } else {
      below = 0;
    }
  }
  return static_cast<double>(head + sum / (s - 1.0));
}

double riemann_zeta(double s) {
  if (std::abs(s - 1.0) < 1e-12) throw PoleError("riemann_zeta: pole at s = 1");
  if (s >= -0.5) return hurwitz_zeta(s, 1.0);
  // Trivial zeros: sin(pi s/2) computed in doubles would leave noise that the
  // factorially large gamma factor then amplifies, so pin them exactly.
  double nearest = std::round(s / 2.0) * 2.0;
  if (nearest <= -2.0 && std::abs(s - nearest) < 1e-12) return 0.0;
  // Functional equation; 1-s is comfortably inside the Euler-Maclaurin range.
  double sine = std::sin(kPi * s / 2.0);
  double log_mag = s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                   std::lgamma(1.0 - s);
  return sine * std::exp(log_mag) * hurwitz_zeta(1.0 - s, 1.0);
}

Complex polylog(double s, Complex z) {
  if (!(s > 0.0)) throw DomainError("polylog: requires s > 0");
  double r = std::abs(z);
  if (r > kDiskCutoff) throw DomainError("polylog: |z| too close to 1");
  if (r == 0.0) return 0.0;
  if (r <= 0.75) return polylog_direct(s, z);
  return polylog_boundary(s, z);
}

Complex lerch_phi(Complex z, double s, double nu) {
  if (!(s > 0.0)) throw DomainError("lerch_phi: requires s > 0");
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("lerch_phi: nu in (0,1]");
  double r = std::abs(z);
  if (r > kDiskCutoff) throw DomainError("lerch_phi: |z| too close to 1");
  Complex sum = std::pow(nu, -s);
  Complex zp = 1.0;
  for (std::size_t n = 1;; ++n) {
    zp *= z;
    sum += zp * std::pow(static_cast<double>(n) + nu, -s);
    double tail = std::pow(r, static_cast<double>(n + 1)) /
                  ((1.0 - r) * std::pow(static_cast<double>(n + 1), s));
    if (tail < 1e-13) break;
    if (n > 50'000'000) throw ConvergenceError("lerch_phi: tail bound not met");
  }
  return sum;
}

double gamma_real(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_real: requires x > 0");
  return std::tgamma(x);
}

Complex principal_root(Complex w, double p) {
  if (w == Complex(0.0, 0.0)) throw DomainError("principal_root: w = 0");
  if (!(p > 0.0)) throw DomainError("principal_root: requires p > 0");
  double arg = std::atan2(w.imag(), w.real());
  if (arg == -kPi) arg = kPi;  // atan2(-0, x<0) -> -pi; convention is (-pi, pi]
  return std::polar(std::exp(std::log(std::abs(w)) / p), arg / p);
}

}  // namespace eulerphase
