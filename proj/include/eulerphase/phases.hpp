#ifndef EULERPHASE_PHASES_HPP
#define EULERPHASE_PHASES_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "eulerphase/weights.hpp"

namespace eulerphase {

// A major-arc candidate q = e^{2 pi i h/k}; 1 <= h <= k, gcd(h,k) = 1.
struct ArcLabel {
  int h = 0;
  int k = 0;
  friend bool operator==(const ArcLabel&, const ArcLabel&) = default;
  // Presentation order: smallest k first, then smallest h.
  friend bool operator<(const ArcLabel& a, const ArcLabel& b) {
    return a.k != b.k ? a.k < b.k : a.h < b.h;
  }
};

struct PhaseClass {
  std::complex<double> z;
  ArcLabel dominant;
  std::vector<ArcLabel> major_arcs;  // all arcs tied with the max Re L
  double margin = 0.0;               // gap in Re L to the best excluded arc
  bool boundary = false;             // margin below the boundary tolerance
};

struct PhaseMap {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  int width = 0, height = 0;
  int k_max = 0;
  struct Cell {
    std::uint8_t h = 0, k = 0;
    bool boundary = false;
    bool empty = true;
  };
  std::vector<Cell> cells;  // row-major; row 0 at y0

  const Cell& at(int ix, int iy) const {
    return cells[static_cast<std::size_t>(iy) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(ix)];
  }
  // Fraction of in-disk pixels carrying the given label.
  double label_fraction(ArcLabel label) const;
  std::vector<ArcLabel> labels_present() const;
};

// Phi_{h,k}(z) = Gamma(s0+1) sum_{j in Z_k} c(j) Li_{s0+1}(e^{2 pi i hj/k} z),
// the w-free part of Psi_{h,k}(z,w).
std::complex<double> phi_hk(const WeightSequence& seq, ArcLabel arc,
                            std::complex<double> z);

// L_{h,k}(z): principal (s0+1)-th root of Phi_{h,k}(z).
std::complex<double> L_hk(const WeightSequence& seq, ArcLabel arc,
                          std::complex<double> z);

// Rank Re L_{h,k}(z) over all coprime arcs with k <= K_max.  Arcs where Phi
// vanishes (|Phi| < 1e-14) are skipped as undefined.
PhaseClass classify(const WeightSequence& seq, std::complex<double> z,
                    int K_max = 10, double tie_tol = 1e-9);

// Per-pixel classify over a rectangle; pixels outside the disk of radius
// 1 - 1e-6 (or where classification fails) are marked empty.  threads <= 0
// means hardware concurrency.
PhaseMap raster(const WeightSequence& seq, double x0, double x1, double y0,
                double y1, int width, int height, int K_max = 10,
                double tie_tol = 1e-9, int threads = 0);

// P6 image; fixed palette keyed by (h,k), boundary pixels black, empty white.
void write_ppm(const PhaseMap& map, std::ostream& os);
// RFC-4180 rows x,y,h,k,boundary (empty pixels get h = k = 0).
void write_phase_csv(const PhaseMap& map, std::ostream& os);

}  // namespace eulerphase

#endif
