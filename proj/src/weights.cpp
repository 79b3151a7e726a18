#include "eulerphase/weights.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "eulerphase/special.hpp"

namespace eulerphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::complex<double> unit_phase(double turns) {
  return std::polar(1.0, kTwoPi * turns);
}

int reduce_h(int h, int k) {
  int hh = ((h % k) + k) % k;
  return hh == 0 ? k : hh;
}

}  // namespace

WeightSequence WeightSequence::constant() {
  WeightSequence w;
  w.periodic_ = {1.0};
  w.kind_ = FamilyKind::Constant;
  w.key_ = "constant";
  return w;
}

WeightSequence WeightSequence::power(double s0) {
  if (!(s0 > 0.0)) throw ConfigError("power family: s0 must be positive");
  WeightSequence w;
  w.periodic_ = {1.0};
  w.shift_ = s0 - 1.0;
  w.s0_ = s0;
  w.kind_ = FamilyKind::Power;
  w.key_ = "power:s0=" + format_double(s0);
  return w;
}

WeightSequence WeightSequence::arithmetic_progression(int a, int j) {
  if (j <= 1) throw ConfigError("ap family: j must exceed 1");
  if (a < 1) throw ConfigError("ap family: a must be positive");
  if (std::gcd(a, j) != 1) throw ConfigError("ap family: gcd(a, j) must be 1");
  WeightSequence w;
  w.periodic_.assign(static_cast<std::size_t>(j), 0.0);
  w.periodic_[static_cast<std::size_t>(a % j)] = 1.0;
  w.kind_ = FamilyKind::ArithmeticProgression;
  w.key_ = "ap:a=" + std::to_string(a) + ",j=" + std::to_string(j);
  return w;
}

WeightSequence WeightSequence::periodic(std::vector<double> weights) {
  if (weights.empty()) throw ConfigError("periodic family: needs weights");
  WeightSequence w;
  w.kind_ = FamilyKind::Periodic;
  w.key_ = "periodic:";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) w.key_ += ',';
    w.key_ += format_double(weights[i]);
  }
  w.periodic_ = std::move(weights);
  return w;
}

WeightSequence WeightSequence::scaled(const WeightSequence& base, double s) {
  if (!(s > 0.0)) throw ConfigError("scaled family: s must be positive");
  if (base.kind_ == FamilyKind::Scaled)
    throw ConfigError("scaled family: base may not itself be scaled");
  WeightSequence w;
  w.periodic_ = base.periodic_;
  w.shift_ = base.shift_ + s - 1.0;
  w.s0_ = base.s0_ + s - 1.0;
  if (!(w.s0_ > 0.0)) throw ConfigError("scaled family: resulting s0 <= 0");
  w.kind_ = FamilyKind::Scaled;
  w.key_ = "scaled:base=" + base.key_ + ";s=" + format_double(s);
  return w;
}

void WeightSequence::set_sigma0(double sigma0) {
  if (!(sigma0 > -1.0 && sigma0 < 0.0))
    throw ConfigError("sigma0 must lie in (-1, 0)");
  sigma0_ = sigma0;
}

double WeightSequence::weight_at(long m) const {
  if (m < 1) throw DomainError("weight_at: m must be >= 1");
  double base = periodic_[static_cast<std::size_t>(m) % periodic_.size()];
  if (shift_ == 0.0 || base == 0.0) return base;
  return base * std::pow(static_cast<double>(m), shift_);
}

bool WeightSequence::nonnegative_integer_weights() const {
  if (shift_ < -1e-9 || std::abs(shift_ - std::round(shift_)) > 1e-9)
    return false;
  for (double w : periodic_)
    if (w < -1e-9 || std::abs(w - std::round(w)) > 1e-9) return false;
  return true;
}

double WeightSequence::max_abs_weight() const {
  double m = 0.0;
  for (double w : periodic_) m = std::max(m, std::abs(w));
  return m;
}

std::complex<double> dirichlet_value(const WeightSequence& seq, int h, int k,
                                     double s) {
  if (k < 1) throw DomainError("dirichlet_value: k must be positive");
  if (std::abs(s - seq.s0()) < 1e-12)
    throw PoleError("dirichlet_value: s at the pole s0");
  int hh = reduce_h(h, k);
  int j = seq.period();
  long P = std::lcm(static_cast<long>(k), static_cast<long>(j));
  double pref = std::pow(static_cast<double>(P), -(s - seq.shift()));
  std::complex<double> sum = 0.0;
  for (long r = 1; r <= P; ++r) {
    double w = seq.periodic_weights()[static_cast<std::size_t>(r % j)];
    if (w == 0.0) continue;
    double zeta = hurwitz_zeta(s - seq.shift(),
                               static_cast<double>(r) / static_cast<double>(P));
    sum += w * zeta *
           unit_phase(static_cast<double>(hh) * static_cast<double>(r) /
                      static_cast<double>(k));
  }
  return pref * sum;
}

std::complex<double> dirichlet_residue(const WeightSequence& seq, int h,
                                       int k) {
  if (k < 1) throw DomainError("dirichlet_residue: k must be positive");
  int hh = reduce_h(h, k);
  int j = seq.period();
  long P = std::lcm(static_cast<long>(k), static_cast<long>(j));
  std::complex<double> sum = 0.0;
  for (long r = 1; r <= P; ++r) {
    double w = seq.periodic_weights()[static_cast<std::size_t>(r % j)];
    if (w == 0.0) continue;
    sum += w * unit_phase(static_cast<double>(hh) * static_cast<double>(r) /
                          static_cast<double>(k));
  }
  return sum / static_cast<double>(P);
}

const DirichletData& fourier_coeffs(const WeightSequence& seq, int k) {
  if (k < 1) throw DomainError("fourier_coeffs: k must be positive");
  static std::mutex mtx;
  static std::map<std::string, std::unique_ptr<const DirichletData>> cache;
  std::string key = seq.key() + "#" + std::to_string(k);
  {
    std::scoped_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<DirichletData>();
  data->k = k;
  for (int h = 1; h <= k; ++h) {
    data->value0.push_back(dirichlet_value(seq, h, k, 0.0));
    data->residue.push_back(dirichlet_residue(seq, h, k));
  }
  for (int j = 0; j < k; ++j) {
    std::complex<double> bj = 0.0, cj = 0.0;
    for (int h = 1; h <= k; ++h) {
      std::complex<double> ph = unit_phase(-static_cast<double>(h) *
                                           static_cast<double>(j) /
                                           static_cast<double>(k));
      bj += ph * data->value0[static_cast<std::size_t>(h - 1)];
      cj += ph * data->residue[static_cast<std::size_t>(h - 1)];
    }
    data->b.push_back(bj / static_cast<double>(k));
    data->c.push_back(cj / static_cast<double>(k));
  }
  std::scoped_lock lock(mtx);
  auto [it, inserted] = cache.emplace(key, std::move(data));
  return *it->second;
}

double dirichlet_deriv_zero(const WeightSequence& seq) {
  auto diff = [&](double eps) {
    return (dirichlet_value(seq, 1, 1, eps) - dirichlet_value(seq, 1, 1, -eps))
               .real() /
           (2.0 * eps);
  };
  double d1 = diff(1e-4);
  double d2 = diff(5e-5);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace eulerphase
