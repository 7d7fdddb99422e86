#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "semiconj/polynomial.hpp"

namespace semiconj {

inline constexpr int kDefaultIterationCap = 200;
inline constexpr int kDefaultMargin = 3;

/// Bounded orbit, or the first step k with |P^k(z)| > radius.
struct Indicator {
  bool bounded = true;
  int step = 0;

  friend bool operator==(const Indicator& a, const Indicator& b) {
    return a.bounded == b.bounded && (a.bounded || a.step == b.step);
  }
};

/// max(2, (1 + sum_{i<n} |c_i|) / |c_n|). Beyond this radius |P(z)| > |z|.
double escape_radius(const Polynomial& p);

Indicator bounded_indicator(const std::vector<std::complex<double>>& coeffs, std::complex<double> z, int cap,
                            double radius);
Indicator bounded_indicator(const Polynomial& p, std::complex<double> z, int cap, double radius);

struct PreimageReport {
  int samples = 0;
  int retained = 0;
  double agreement = 0;
  struct Counterexample {
    std::complex<double> z;
    Indicator ind_b;
    Indicator ind_a;
  };
  std::vector<Counterexample> counterexamples;  ///< at most max_counterexamples

  nlohmann::json to_json() const;
};

/// Compares membership of z in K(B) with membership of X(z) in K(A) on
/// Halton points in [-R, R]^2, R the escape radius of B. Points where either
/// orbit escapes within `margin` steps of the cap are excluded.
PreimageReport check_preimage_identity(const Polynomial& a, const Polynomial& x, const Polynomial& b, int samples,
                                       unsigned seed, int margin = kDefaultMargin, int cap = kDefaultIterationCap,
                                       std::size_t max_counterexamples = 20);

struct GridSpec {
  double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
  int width = 256, height = 256;
  int cap = kDefaultIterationCap;
};

struct JuliaGrid {
  GridSpec spec;
  double escape_radius = 0;
  std::vector<Indicator> indicator;  ///< row-major, row 0 at ymax

  const Indicator& at(int col, int row) const {
    return indicator[static_cast<std::size_t>(row) * static_cast<std::size_t>(spec.width) + static_cast<std::size_t>(col)];
  }
};

/// Centre of pixel (col, row).
std::complex<double> pixel_center(const GridSpec& spec, int col, int row);

JuliaGrid compute_grid(const Polynomial& p, const GridSpec& spec);

/// Binary PGM (P5): bounded = 0, escaped at step k = 1 + 254 (cap - k) / cap.
std::string render_pgm(const JuliaGrid& grid);

/// Writes render_pgm(compute_grid(p, spec)) to path; throws std::runtime_error on I/O failure.
void render(const GridSpec& spec, const Polynomial& p, const std::string& path);

}  // namespace semiconj
