#include "eulerphase/exact.hpp"

#include <cmath>
#include <numbers>

#include "eulerphase/phases.hpp"

namespace eulerphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using Cx = std::complex<double>;

long integer_weight(const WeightSequence& seq, long m) {
  double a = seq.weight_at(m);
  long r = std::lround(a);
  if (r < 0 || std::abs(a - static_cast<double>(r)) > 1e-9)
    throw UnsupportedFamily(
        "expand_product: weights must be nonnegative integers");
  return r;
}

// c_N(z) coefficient tables: c[N][l] is the z^l coefficient of
// (1/N) sum_{m|N} m a_m z^{N/m}.
std::vector<std::vector<double>> log_coeff_polys(const WeightSequence& seq,
                                                 int n_max) {
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n_max) + 1);
  for (long m = 1; m <= n_max; ++m) {
    double am = seq.weight_at(m);
    if (am == 0.0) continue;
    for (long l = 1; m * l <= n_max; ++l) {
      auto& row = c[static_cast<std::size_t>(m * l)];
      if (row.size() <= static_cast<std::size_t>(l))
        row.resize(static_cast<std::size_t>(l) + 1, 0.0);
      row[static_cast<std::size_t>(l)] +=
          static_cast<double>(m) * am / static_cast<double>(m * l);
    }
  }
  return c;
}

struct LogSumParams {
  double amax;  // sup of the periodic part
  double pmax;  // max(shift, 0)
};

// ln P(z, q) = sum_l (z^l / l) sum_m a_m q^{lm}, truncated with tail < 1e-13.
Cx log_product(const WeightSequence& seq, Cx z, Cx q, const LogSumParams& p) {
  double zr = std::abs(z);
  Cx sum = 0.0;
  Cx ql = 1.0, zl = 1.0;
  for (long l = 1;; ++l) {
    ql *= q;
    zl *= z;
    double rl = std::abs(ql);
    // inner sum S_l = sum_m a_m (q^l)^m
    Cx s = 0.0, xm = 1.0;
    double lam = -std::log(rl);
    for (long m = 1;; ++m) {
      xm *= ql;
      double am = seq.weight_at(m);
      if (am != 0.0) s += am * xm;
      double mb = static_cast<double>(m);
      if (mb * lam > p.pmax &&
          p.amax * std::pow(mb, p.pmax) * std::pow(rl, mb) / (1.0 - rl) < 1e-16)
        break;
      if (m > 100'000'000)
        throw ConvergenceError("contour_extract: inner log sum too long");
    }
    sum += zl / static_cast<double>(l) * s;
    // remaining-l bound: S decreasing in l, geometric in |z|
    double sb = 2.0 * p.amax *
                std::max(std::tgamma(p.pmax + 1.0) /
                             std::pow(lam, p.pmax + 1.0),
                         rl / (1.0 - rl));
    if (std::pow(zr, static_cast<double>(l + 1)) /
            (static_cast<double>(l + 1) * (1.0 - zr)) * sb <
        1e-13)
      break;
    if (l > 10'000'000)
      throw ConvergenceError("contour_extract: outer log sum too long");
  }
  return sum;
}

}  // namespace

std::complex<double> CoeffPoly::eval(std::complex<double> z) const {
  Cx v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

std::vector<CoeffPoly> expand_product(const WeightSequence& seq, int n_max) {
  if (n_max < 0) throw DomainError("expand_product: n_max must be >= 0");
  // acc[qd][zd], truncated at q^{n_max}; z-degree never exceeds q-degree
  std::vector<std::vector<BigInt>> acc(static_cast<std::size_t>(n_max) + 1);
  acc[0] = {BigInt(1)};
  for (long m = 1; m <= n_max; ++m) {
    long a = integer_weight(seq, m);
    if (a == 0) continue;
    // factor (1 - z q^m)^{-a} = sum_j C(a+j-1, j) z^j q^{mj}
    std::vector<BigInt> binom;  // binom[j]
    BigInt bj = 1;
    for (long j = 0; m * j <= n_max; ++j) {
      if (j > 0) {
        bj *= a + j - 1;
        bj /= j;
      }
      binom.push_back(bj);
    }
    std::vector<std::vector<BigInt>> next(static_cast<std::size_t>(n_max) + 1);
    for (long qd = 0; qd <= n_max; ++qd) {
      const auto& row = acc[static_cast<std::size_t>(qd)];
      if (row.empty()) continue;
      for (long j = 0; qd + m * j <= n_max; ++j) {
        auto& out = next[static_cast<std::size_t>(qd + m * j)];
        std::size_t need = row.size() + static_cast<std::size_t>(j);
        if (out.size() < need) out.resize(need, BigInt(0));
        for (std::size_t zd = 0; zd < row.size(); ++zd)
          out[zd + static_cast<std::size_t>(j)] += row[zd] * binom[j];
      }
    }
    acc = std::move(next);
  }
  std::vector<CoeffPoly> result;
  for (int n = 0; n <= n_max; ++n) {
    CoeffPoly cp;
    cp.n = n;
    cp.exact = true;
    cp.int_coeffs = acc[static_cast<std::size_t>(n)];
    cp.int_coeffs.resize(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (const auto& v : cp.int_coeffs)
      cp.coeffs.push_back(static_cast<double>(v));
    result.push_back(std::move(cp));
  }
  return result;
}

std::vector<CoeffPoly> expand_exp_recurrence(const WeightSequence& seq,
                                             int n_max) {
  if (n_max < 0) throw DomainError("expand_exp_recurrence: n_max >= 0");
  auto c = log_coeff_polys(seq, n_max);
  std::vector<std::vector<double>> q(static_cast<std::size_t>(n_max) + 1);
  q[0] = {1.0};
  for (long n = 1; n <= n_max; ++n) {
    std::vector<double> acc(static_cast<std::size_t>(n) + 1, 0.0);
    for (long j = 1; j <= n; ++j) {
      const auto& cj = c[static_cast<std::size_t>(j)];
      if (cj.empty()) continue;
      const auto& prev = q[static_cast<std::size_t>(n - j)];
      for (std::size_t a = 0; a < cj.size(); ++a) {
        double w = static_cast<double>(j) * cj[a];
        if (w == 0.0) continue;
        for (std::size_t b = 0; b < prev.size(); ++b)
          acc[a + b] += w * prev[b];
      }
    }
    for (auto& v : acc) v /= static_cast<double>(n);
    q[static_cast<std::size_t>(n)] = std::move(acc);
  }
  std::vector<CoeffPoly> result;
  for (int n = 0; n <= n_max; ++n) {
    CoeffPoly cp;
    cp.n = n;
    cp.exact = false;
    cp.coeffs = q[static_cast<std::size_t>(n)];
    cp.coeffs.resize(static_cast<std::size_t>(n) + 1, 0.0);
    result.push_back(std::move(cp));
  }
  return result;
}

std::vector<std::complex<double>> eval_exact_sequence(const WeightSequence& seq,
                                                      std::complex<double> z,
                                                      int n_max) {
  if (n_max < 0) throw DomainError("eval_exact_sequence: n_max >= 0");
  std::vector<Cx> zpow(static_cast<std::size_t>(n_max) + 1);
  zpow[0] = 1.0;
  for (int l = 1; l <= n_max; ++l)
    zpow[static_cast<std::size_t>(l)] = zpow[static_cast<std::size_t>(l - 1)] * z;
  std::vector<Cx> c(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (long m = 1; m <= n_max; ++m) {
    double am = seq.weight_at(m);
    if (am == 0.0) continue;
    for (long l = 1; m * l <= n_max; ++l)
      c[static_cast<std::size_t>(m * l)] += static_cast<double>(m) * am *
                                            zpow[static_cast<std::size_t>(l)] /
                                            static_cast<double>(m * l);
  }
  std::vector<Cx> q(static_cast<std::size_t>(n_max) + 1, 0.0);
  q[0] = 1.0;
  for (long n = 1; n <= n_max; ++n) {
    Cx acc = 0.0;
    for (long j = 1; j <= n; ++j)
      acc += static_cast<double>(j) * c[static_cast<std::size_t>(j)] *
             q[static_cast<std::size_t>(n - j)];
    q[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
  }
  return q;
}

std::complex<double> eval_exact(const WeightSequence& seq,
                                std::complex<double> z, int n) {
  return eval_exact_sequence(seq, z, n).back();
}

std::complex<double> contour_extract(const WeightSequence& seq,
                                     std::complex<double> z, int n,
                                     std::optional<double> radius,
                                     std::optional<int> points) {
  if (n < 0) throw DomainError("contour_extract: n >= 0 required");
  if (std::abs(z) >= 1.0) throw DomainError("contour_extract: |z| < 1 required");
  if (z == Cx(0.0, 0.0)) return n == 0 ? Cx(1.0) : Cx(0.0);
  double r;
  if (radius) {
    r = *radius;
    if (!(r > 0.0 && r < 1.0))
      throw DomainError("contour_extract: radius in (0,1)");
  } else if (n == 0) {
    r = 0.5;
  } else {
    PhaseClass pc = classify(seq, z);
    double re_l = L_hk(seq, pc.dominant, z).real();
    if (re_l <= 0.0) {
      r = 0.5;
    } else {
      double alpha = re_l / (kTwoPi * std::pow(static_cast<double>(n),
                                               1.0 / (seq.s0() + 1.0)));
      r = std::exp(-kTwoPi * alpha);
      r = std::min(r, 1.0 - 1e-8);
    }
  }
  LogSumParams params{seq.max_abs_weight(), std::max(seq.shift(), 0.0)};
  int N = points ? *points : std::max(8 * n, 256);
  auto value_at = [&](double turns) {
    Cx q = std::polar(r, kTwoPi * turns);
    return std::exp(log_product(seq, z, q, params));
  };
  auto trapezoid = [&](const std::vector<Cx>& vals) {
    std::size_t m = vals.size();
    Cx sum = 0.0;
    for (std::size_t t = 0; t < m; ++t)
      sum += vals[t] * std::polar(1.0, -kTwoPi * static_cast<double>(n) *
                                           static_cast<double>(t) /
                                           static_cast<double>(m));
    return sum / static_cast<double>(m) * std::pow(r, -static_cast<double>(n));
  };
  std::vector<Cx> vals(static_cast<std::size_t>(N));
  for (int t = 0; t < N; ++t)
    vals[static_cast<std::size_t>(t)] =
        value_at(static_cast<double>(t) / static_cast<double>(N));
  Cx prev = trapezoid(vals);
  if (points) return prev;  // caller pinned the resolution
  for (int round = 0; round < 5; ++round) {
    std::vector<Cx> fine(vals.size() * 2);
    for (std::size_t t = 0; t < vals.size(); ++t) {
      fine[2 * t] = vals[t];
      fine[2 * t + 1] = value_at((static_cast<double>(t) + 0.5) /
                                 static_cast<double>(vals.size()));
    }
    vals = std::move(fine);
    Cx cur = trapezoid(vals);
    if (std::abs(cur - prev) <= 1e-9 * std::max(1e-300, std::abs(cur)))
      return cur;
    prev = cur;
  }
  throw ConvergenceError("contour_extract: trapezoid refinement stalled");
}

}  // namespace eulerphase
