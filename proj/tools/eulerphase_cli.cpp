// eulerphase command-line front end.
//
// Subcommands: expand, eval, asymp, compare, phase-map, dirichlet, meinardus.
// Exit codes: 0 success, 2 config error, 3 domain error (pole / phase
// boundary / disk boundary), 4 unsupported family.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eulerphase/asymptotics.hpp"
#include "eulerphase/errors.hpp"
#include "eulerphase/exact.hpp"
#include "eulerphase/family_spec.hpp"
#include "eulerphase/phases.hpp"
#include "eulerphase/special.hpp"
#include "eulerphase/weights.hpp"

namespace {

using eulerphase::WeightSequence;
using Cx = std::complex<double>;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Cx parse_complex(const std::string& re, const std::string& im) {
  return {std::stod(re), std::stod(im)};
}

std::ostream& open_out(std::ofstream& file, const std::string& path,
                       bool binary = false) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, binary ? std::ios::binary : std::ios::out);
  if (!file) throw eulerphase::ConfigError("cannot open output: " + path);
  return file;
}

struct Options {
  std::string family = "constant";
  std::string out;
  int k_max = 10;
  double tie_tol = 1e-9;
  double osc_tol = 1e-8;
  int threads = 0;
  double z_re = 0.0, z_im = 0.0;
};

void add_common(CLI::App* cmd, Options& opt, bool with_z) {
  cmd->add_option("--family", opt.family, "weight family spec");
  cmd->add_option("--out,-o", opt.out, "output path (default stdout)");
  cmd->add_option("--k-max", opt.k_max, "largest arc denominator")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tie-tol", opt.tie_tol, "major-arc tie tolerance");
  cmd->add_option("--osc-tol", opt.osc_tol, "oscillatory-branch tolerance");
  cmd->add_option("--threads", opt.threads, "worker threads (0 = auto)");
  if (with_z) {
    cmd->add_option("--z-re", opt.z_re, "Re z")->required();
    cmd->add_option("--z-im", opt.z_im, "Im z");
  }
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty())
    throw eulerphase::ConfigError("empty n list: '" + text + "'");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"weighted-partition polynomials: exact and asymptotic"};
  app.require_subcommand(1);

  Options opt;
  int n = 10;
  std::string n_list_text = "250,500,1000";
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
  int width = 400, height = 400, dirichlet_k = 1;
  std::string csv_out;

  auto* expand = app.add_subcommand("expand", "Q_0..Q_n coefficient CSV");
  add_common(expand, opt, false);
  expand->add_option("--n", n, "largest index")->check(CLI::NonNegativeNumber);

  auto* eval = app.add_subcommand("eval", "exact Q_0(z)..Q_n(z), JSON lines");
  add_common(eval, opt, true);
  eval->add_option("--n", n, "largest index")->check(CLI::NonNegativeNumber);

  auto* asymp = app.add_subcommand("asymp", "major-arc estimate, JSON");
  add_common(asymp, opt, true);
  asymp->add_option("--n", n, "index")->check(CLI::PositiveNumber);

  auto* cmp = app.add_subcommand("compare", "exact vs estimate CSV");
  add_common(cmp, opt, true);
  cmp->add_option("--n-list", n_list_text, "comma-separated indices");

  auto* pm = app.add_subcommand("phase-map", "raster phase diagram (PPM+CSV)");
  add_common(pm, opt, false);
  pm->add_option("--x0", x0);
  pm->add_option("--x1", x1);
  pm->add_option("--y0", y0);
  pm->add_option("--y1", y1);
  pm->add_option("--width", width)->check(CLI::PositiveNumber);
  pm->add_option("--height", height)->check(CLI::PositiveNumber);
  pm->add_option("--csv-out", csv_out, "per-pixel CSV path (optional)");

  auto* dir = app.add_subcommand("dirichlet", "D_{h,k}(0), A_{h,k}, b, c");
  add_common(dir, opt, false);
  dir->add_option("--k", dirichlet_k, "arc denominator")
      ->check(CLI::PositiveNumber);

  auto* mei = app.add_subcommand("meinardus", "classical z=1 leading term");
  add_common(mei, opt, false);
  mei->add_option("--n", n, "index")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  WeightSequence seq = eulerphase::parse_family(opt.family);
  Cx z(opt.z_re, opt.z_im);
  std::ofstream file;

  if (*expand) {
    auto polys = seq.nonnegative_integer_weights()
                     ? eulerphase::expand_product(seq, n)
                     : eulerphase::expand_exp_recurrence(seq, n);
    std::ostream& os = open_out(file, opt.out);
    for (const auto& poly : polys) {
      for (int i = 0; i <= poly.n; ++i) {
        if (i) os << ',';
        if (poly.exact)
          os << poly.int_coeffs[i];
        else
          os << fmt(poly.coeffs[i]);
      }
      os << "\r\n";
    }
    return 0;
  }
  if (*eval) {
    auto vals = eulerphase::eval_exact_sequence(seq, z, n);
    std::ostream& os = open_out(file, opt.out);
    for (int i = 0; i <= n; ++i) {
      os << "{\"n\":" << i << ",\"re\":" << fmt(vals[i].real())
         << ",\"im\":" << fmt(vals[i].imag()) << "}\n";
    }
    return 0;
  }
  if (*asymp) {
    auto est =
        eulerphase::estimate(seq, z, n, opt.k_max, opt.tie_tol, opt.osc_tol);
    std::ostream& os = open_out(file, opt.out);
    os << "{\"z\":[" << fmt(z.real()) << ',' << fmt(z.imag())
       << "],\"n\":" << n << ",\"value\":[" << fmt(est.value.real()) << ','
       << fmt(est.value.imag()) << "],\"arcs\":[";
    for (std::size_t i = 0; i < est.arcs.size(); ++i) {
      const auto& arc = est.arcs[i];
      if (i) os << ',';
      os << "{\"h\":" << arc.arc.h << ",\"k\":" << arc.arc.k
         << ",\"branch\":\""
         << (arc.branch == eulerphase::Branch::Oscillatory ? "oscillatory"
                                                           : "analytic")
         << "\",\"omega\":[" << fmt(arc.omega.real()) << ','
         << fmt(arc.omega.imag()) << "],\"saddle\":["
         << fmt(arc.saddle.real()) << ',' << fmt(arc.saddle.imag()) << "]}";
    }
    os << "],\"mu\":" << fmt(est.mu) << "}\n";
    return 0;
  }
  if (*cmp) {
    auto rows =
        eulerphase::compare(seq, z, parse_n_list(n_list_text), opt.k_max);
    std::ostream& os = open_out(file, opt.out);
    os << "n,exact_re,exact_im,est_re,est_im,rel_err\r\n";
    for (const auto& row : rows) {
      os << row.n << ',' << fmt(row.exact.real()) << ','
         << fmt(row.exact.imag()) << ',' << fmt(row.est.real()) << ','
         << fmt(row.est.imag()) << ',' << fmt(row.rel_err) << "\r\n";
    }
    return 0;
  }
  if (*pm) {
    auto map = eulerphase::raster(seq, x0, x1, y0, y1, width, height,
                                  opt.k_max, opt.tie_tol, opt.threads);
    std::ostream& os = open_out(file, opt.out, true);
    eulerphase::write_ppm(map, os);
    if (!csv_out.empty()) {
      std::ofstream cf(csv_out);
      if (!cf) throw eulerphase::ConfigError("cannot open: " + csv_out);
      eulerphase::write_phase_csv(map, cf);
    }
    return 0;
  }
  if (*dir) {
    const auto& data = eulerphase::fourier_coeffs(seq, dirichlet_k);
    std::ostream& os = open_out(file, opt.out);
    for (int h = 1; h <= data.k; ++h) {
      os << "{\"h\":" << h << ",\"k\":" << data.k << ",\"D0\":["
         << fmt(data.value0[h - 1].real()) << ','
         << fmt(data.value0[h - 1].imag()) << "],\"A\":["
         << fmt(data.residue[h - 1].real()) << ','
         << fmt(data.residue[h - 1].imag()) << "]}\n";
    }
    for (int j = 0; j < data.k; ++j) {
      os << "{\"j\":" << j << ",\"b\":[" << fmt(data.b[j].real()) << ','
         << fmt(data.b[j].imag()) << "],\"c\":[" << fmt(data.c[j].real())
         << ',' << fmt(data.c[j].imag()) << "]}\n";
    }
    return 0;
  }
  if (*mei) {
    double r = eulerphase::meinardus_r(seq, n);
    std::ostream& os = open_out(file, opt.out);
    os << "{\"n\":" << n << ",\"r\":" << fmt(r) << "}\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const eulerphase::UnsupportedFamily& e) {
    std::cerr << "unsupported family: " << e.what() << '\n';
    return 4;
  } catch (const eulerphase::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const eulerphase::PoleError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const eulerphase::BoundaryError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
