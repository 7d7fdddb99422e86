#include "semiconj/julia_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "semiconj/errors.hpp"

namespace semiconj {

namespace {

std::vector<std::complex<double>> numeric_coeffs(const Polynomial& p) {
  std::vector<std::complex<double>> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
  return out;
}

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

nlohmann::json indicator_json(const Indicator& ind) {
  if (ind.bounded) return "bounded";
  return ind.step;
}

}  // namespace

double escape_radius(const Polynomial& p) {
  if (p.degree() < 1) raise(ErrorKind::InvalidParameters, "escape_radius: degree must be >= 1");
  double sum = 1;
  for (int i = 0; i < p.degree(); ++i) sum += std::abs(p.coeff(static_cast<std::size_t>(i)).to_complex());
  return std::max(2.0, sum / std::abs(p.leading().to_complex()));
}

Indicator bounded_indicator(const std::vector<std::complex<double>>& coeffs, std::complex<double> z, int cap,
                            double radius) {
  for (int k = 0; k <= cap; ++k) {
    const double m = std::abs(z);
    if (!(m <= radius)) return {false, k};  // also catches NaN
    if (k == cap) break;
    std::complex<double> acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + coeffs[i];
    z = acc;
  }
  return {true, 0};
}

Indicator bounded_indicator(const Polynomial& p, std::complex<double> z, int cap, double radius) {
  if (p.degree() < 2) raise(ErrorKind::InvalidParameters, "bounded_indicator: degree must be >= 2");
  return bounded_indicator(numeric_coeffs(p), z, cap, radius);
}

nlohmann::json PreimageReport::to_json() const {
  nlohmann::json ce = nlohmann::json::array();
  for (const auto& c : counterexamples) {
    ce.push_back({{"z", {c.z.real(), c.z.imag()}}, {"indB", indicator_json(c.ind_b)}, {"indA", indicator_json(c.ind_a)}});
  }
  return {{"samples", samples}, {"retained", retained}, {"agreement", agreement}, {"counterexamples", ce}};
}

PreimageReport check_preimage_identity(const Polynomial& a, const Polynomial& x, const Polynomial& b, int samples,
                                       unsigned seed, int margin, int cap, std::size_t max_counterexamples) {
  if (a.degree() < 2 || b.degree() < 2) raise(ErrorKind::InvalidParameters, "check_preimage_identity: deg A, B >= 2");
  if (samples < 1 || cap < 1 || margin < 0) raise(ErrorKind::InvalidParameters, "check_preimage_identity: bad sampling");
  const auto ca = numeric_coeffs(a);
  const auto cb = numeric_coeffs(b);
  const double ra = escape_radius(a);
  const double rb = escape_radius(b);
  const int late = cap - margin;
  PreimageReport rep;
  rep.samples = samples;
  int agree = 0;
  for (int s = 0; s < samples; ++s) {
    const std::uint64_t idx = static_cast<std::uint64_t>(seed) + static_cast<std::uint64_t>(s) + 1;
    const std::complex<double> z((2 * radical_inverse(idx, 2) - 1) * rb, (2 * radical_inverse(idx, 3) - 1) * rb);
    const Indicator ib = bounded_indicator(cb, z, cap, rb);
    const Indicator ia = bounded_indicator(ca, x.evaluate(z), cap, ra);
    if ((!ib.bounded && ib.step > late) || (!ia.bounded && ia.step > late)) continue;
    ++rep.retained;
    if (ib.bounded == ia.bounded) {
      ++agree;
    } else if (rep.counterexamples.size() < max_counterexamples) {
      rep.counterexamples.push_back({z, ib, ia});
    }
  }
  rep.agreement = rep.retained == 0 ? 0.0 : static_cast<double>(agree) / rep.retained;
  return rep;
}

std::complex<double> pixel_center(const GridSpec& spec, int col, int row) {
  const double dx = (spec.xmax - spec.xmin) / spec.width;
  const double dy = (spec.ymax - spec.ymin) / spec.height;
  return {spec.xmin + (col + 0.5) * dx, spec.ymax - (row + 0.5) * dy};
}

JuliaGrid compute_grid(const Polynomial& p, const GridSpec& spec) {
  if (spec.width < 1 || spec.height < 1 || spec.cap < 1 || !(spec.xmax > spec.xmin) || !(spec.ymax > spec.ymin)) {
    raise(ErrorKind::InvalidParameters, "compute_grid: bad grid");
  }
  if (p.degree() < 2) raise(ErrorKind::InvalidParameters, "compute_grid: degree must be >= 2");
  JuliaGrid grid;
  grid.spec = spec;
  grid.escape_radius = escape_radius(p);
  const auto coeffs = numeric_coeffs(p);
  grid.indicator.resize(static_cast<std::size_t>(spec.width) * static_cast<std::size_t>(spec.height));
  // Rows are striped over threads; each row has a fixed slot, so the result
  // does not depend on scheduling.
  auto fill_rows = [&](int first, int stride) {
    for (int row = first; row < spec.height; row += stride) {
      for (int col = 0; col < spec.width; ++col) {
        grid.indicator[static_cast<std::size_t>(row) * static_cast<std::size_t>(spec.width) + static_cast<std::size_t>(col)] =
            bounded_indicator(coeffs, pixel_center(spec, col, row), spec.cap, grid.escape_radius);
      }
    }
  };
  const int workers = static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 16u));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
  fill_rows(0, workers);
  for (auto& t : pool) t.join();
  return grid;
}

std::string render_pgm(const JuliaGrid& grid) {
  std::string out = "P5\n" + std::to_string(grid.spec.width) + " " + std::to_string(grid.spec.height) + "\n255\n";
  const int cap = grid.spec.cap;
  for (const auto& ind : grid.indicator) {
    int v = 0;
    if (!ind.bounded) v = 1 + (254 * (cap - std::min(ind.step, cap))) / cap;
    out.push_back(static_cast<char>(static_cast<unsigned char>(v)));
  }
  return out;
}

void render(const GridSpec& spec, const Polynomial& p, const std::string& path) {
  const std::string bytes = render_pgm(compute_grid(p, spec));
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace semiconj
