#include "eulerphase/phases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <thread>

#include "eulerphase/special.hpp"

namespace eulerphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using Cx = std::complex<double>;

void check_arc(ArcLabel arc) {
  if (arc.k < 1 || arc.h < 1 || arc.h > arc.k || std::gcd(arc.h, arc.k) != 1)
    throw DomainError("arc label must satisfy 1 <= h <= k, gcd(h,k) = 1");
}

void check_z(Cx z) {
  if (std::abs(z) > kDiskCutoff)
    throw DomainError("phase evaluation: |z| too close to 1");
  if (z == Cx(0.0, 0.0)) throw DomainError("phase evaluation: z = 0 excluded");
}

// Memoizes Li_{s0+1}(e^{2 pi i t/k} z) by the reduced fraction t/k; a classify
// call touches the same handful of rotated arguments across all arcs.
class RotatedPolylogCache {
 public:
  RotatedPolylogCache(double s, Cx z) : s_(s), z_(z) {}

  Cx at(int t, int k) {
    int tt = ((t % k) + k) % k;
    int g = std::gcd(tt == 0 ? k : tt, k);
    int num = tt / g, den = k / g;
    auto key = std::pair{num, den};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Cx v = polylog(s_, std::polar(1.0, kTwoPi * num / den) * z_);
    cache_.emplace(key, v);
    return v;
  }

 private:
  double s_;
  Cx z_;
  std::map<std::pair<int, int>, Cx> cache_;
};

Cx phi_from_cache(const WeightSequence& seq, ArcLabel arc, RotatedPolylogCache& li) {
  const DirichletData& data = fourier_coeffs(seq, arc.k);
  Cx sum = 0.0;
  for (int j = 0; j < arc.k; ++j) {
    Cx cj = data.c[static_cast<std::size_t>(j)];
    if (std::abs(cj) < 1e-15) continue;
    sum += cj * li.at(arc.h * j, arc.k);
  }
  return gamma_real(seq.s0() + 1.0) * sum;
}

}  // namespace

std::complex<double> phi_hk(const WeightSequence& seq, ArcLabel arc,
                            std::complex<double> z) {
  check_arc(arc);
  check_z(z);
  RotatedPolylogCache li(seq.s0() + 1.0, z);
  return phi_from_cache(seq, arc, li);
}

std::complex<double> L_hk(const WeightSequence& seq, ArcLabel arc,
                          std::complex<double> z) {
  Cx phi = phi_hk(seq, arc, z);
  if (std::abs(phi) < 1e-14)
    throw DomainError("L_hk: Phi vanishes; arc undefined at this z");
  return principal_root(phi, seq.s0() + 1.0);
}

PhaseClass classify(const WeightSequence& seq, std::complex<double> z,
                    int K_max, double tie_tol) {
  if (K_max < 1) throw DomainError("classify: K_max >= 1 required");
  check_z(z);
  RotatedPolylogCache li(seq.s0() + 1.0, z);
  struct Entry {
    ArcLabel arc;
    double re_l;
  };
  std::vector<Entry> entries;
  for (int k = 1; k <= K_max; ++k) {
    for (int h = 1; h <= k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      Cx phi = phi_from_cache(seq, {h, k}, li);
      if (std::abs(phi) < 1e-14) continue;  // undefined arc
      entries.push_back({{h, k}, principal_root(phi, seq.s0() + 1.0).real()});
    }
  }
  if (entries.empty())
    throw DomainError("classify: no defined arcs at this point");
  double max_re = -std::numeric_limits<double>::infinity();
  for (const auto& e : entries) max_re = std::max(max_re, e.re_l);
  double tol = tie_tol * std::abs(max_re);
  PhaseClass pc;
  pc.z = z;
  pc.margin = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    if (max_re - e.re_l <= tol)
      pc.major_arcs.push_back(e.arc);
    else
      pc.margin = std::min(pc.margin, max_re - e.re_l);
  }
  std::sort(pc.major_arcs.begin(), pc.major_arcs.end());
  pc.dominant = pc.major_arcs.front();
  pc.boundary = pc.margin <= 10.0 * tol;
  return pc;
}

PhaseMap raster(const WeightSequence& seq, double x0, double x1, double y0,
                double y1, int width, int height, int K_max, double tie_tol,
                int threads) {
  if (width < 1 || height < 1) throw DomainError("raster: empty resolution");
  PhaseMap map;
  map.x0 = x0;
  map.x1 = x1;
  map.y0 = y0;
  map.y1 = y1;
  map.width = width;
  map.height = height;
  map.k_max = K_max;
  map.cells.assign(static_cast<std::size_t>(width) *
                       static_cast<std::size_t>(height),
                   PhaseMap::Cell{});
  for (int k = 1; k <= K_max; ++k) fourier_coeffs(seq, k);  // warm the cache
  auto run_rows = [&](int iy_begin, int iy_end) {
    for (int iy = iy_begin; iy < iy_end; ++iy) {
      double y = y0 + (iy + 0.5) * (y1 - y0) / height;
      for (int ix = 0; ix < width; ++ix) {
        double x = x0 + (ix + 0.5) * (x1 - x0) / width;
        Cx z(x, y);
        auto& cell = map.cells[static_cast<std::size_t>(iy) *
                                   static_cast<std::size_t>(width) +
                               static_cast<std::size_t>(ix)];
        if (std::abs(z) > kDiskCutoff || z == Cx(0.0, 0.0)) continue;
        try {
          PhaseClass pc = classify(seq, z, K_max, tie_tol);
          cell.h = static_cast<std::uint8_t>(pc.dominant.h);
          cell.k = static_cast<std::uint8_t>(pc.dominant.k);
          cell.boundary = pc.boundary;
          cell.empty = false;
        } catch (const std::exception&) {
          // leave the pixel empty
        }
      }
    }
  };
  int nthreads = threads > 0
                     ? threads
                     : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, height);
  if (nthreads <= 1) {
    run_rows(0, height);
  } else {
    std::vector<std::thread> pool;
    int chunk = (height + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      int lo = t * chunk, hi = std::min(height, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return map;
}

double PhaseMap::label_fraction(ArcLabel label) const {
  std::size_t total = 0, hit = 0;
  for (const auto& c : cells) {
    if (c.empty) continue;
    ++total;
    if (c.h == label.h && c.k == label.k) ++hit;
  }
  return total == 0 ? 0.0
                    : static_cast<double>(hit) / static_cast<double>(total);
}

std::vector<ArcLabel> PhaseMap::labels_present() const {
  std::vector<ArcLabel> out;
  for (const auto& c : cells) {
    if (c.empty) continue;
    ArcLabel l{c.h, c.k};
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Fixed palette; arcs beyond the table wrap around.
constexpr std::uint8_t kPalette[][3] = {
    {230, 57, 70},   {69, 123, 157},  {42, 157, 143},  {244, 162, 97},
    {131, 56, 236},  {255, 183, 3},   {0, 119, 182},   {214, 40, 40},
    {6, 214, 160},   {118, 200, 147}, {239, 71, 111},  {17, 138, 178},
};

std::size_t palette_index(int h, int k) {
  // canonical enumeration order: (1,1), (1,2), (1,3), (2,3), (1,4), ...
  std::size_t idx = 0;
  for (int kk = 1; kk < k; ++kk)
    for (int hh = 1; hh <= kk; ++hh)
      if (std::gcd(hh, kk) == 1) ++idx;
  for (int hh = 1; hh < h; ++hh)
    if (std::gcd(hh, k) == 1) ++idx;
  return idx % (sizeof(kPalette) / sizeof(kPalette[0]));
}

}  // namespace

void write_ppm(const PhaseMap& map, std::ostream& os) {
  os << "P6\n" << map.width << " " << map.height << "\n255\n";
  for (int iy = map.height - 1; iy >= 0; --iy) {  // top row = largest y
    for (int ix = 0; ix < map.width; ++ix) {
      const auto& c = map.at(ix, iy);
      std::uint8_t rgb[3] = {255, 255, 255};
      if (!c.empty) {
        if (c.boundary) {
          rgb[0] = rgb[1] = rgb[2] = 0;
        } else {
          const auto& p = kPalette[palette_index(c.h, c.k)];
          rgb[0] = p[0];
          rgb[1] = p[1];
          rgb[2] = p[2];
        }
      }
      os.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
}

void write_phase_csv(const PhaseMap& map, std::ostream& os) {
  os << "x,y,h,k,boundary\r\n";
  os.precision(17);
  for (int iy = 0; iy < map.height; ++iy) {
    double y = map.y0 + (iy + 0.5) * (map.y1 - map.y0) / map.height;
    for (int ix = 0; ix < map.width; ++ix) {
      double x = map.x0 + (ix + 0.5) * (map.x1 - map.x0) / map.width;
      const auto& c = map.at(ix, iy);
      os << x << ',' << y << ',' << int(c.h) << ',' << int(c.k) << ','
         << (c.boundary ? 1 : 0) << "\r\n";
    }
  }
}

}  // namespace eulerphase
