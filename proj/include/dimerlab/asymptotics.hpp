// Copyright 2026 The dimerlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Large-lattice behaviour: the free energy F = ln 2 + int f over the unit
// square, convergence of (1/mn) log det A_i to F, the ratio Z / (2 e^{mnF/2})
// and the decay of the Fourier coefficients of f.

#ifndef DIMERLAB_ASYMPTOTICS_HPP
#define DIMERLAB_ASYMPTOTICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "dimerlab/errors.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/lattice.hpp"
#include "dimerlab/oracle.hpp"
#include "dimerlab/parallel.hpp"
#include "dimerlab/polyring.hpp"

namespace dimerlab {

inline void require_positive(const WeightPoint& w) {
  if (w.h <= 0 || w.v <= 0 || w.d <= 0) throw NonPositiveWeights("weights must be strictly positive");
}

// f(x, y) = (1/2) ln[zh^2 sin^2 2 pi x + zv^2 sin^2 2 pi y + zd^2 cos^2 2 pi (x + y)].
inline double log_density(double x, double y, const RealWeights& w) {
  return 0.5 * std::log(spectral_function(x, y, w) / 4.0);
}

struct FreeEnergyResult {
  double F = 0.0;
  int grid = 0;  // resolution of the returned value
  WeightPoint weights;
  bool converged = false;  // last doubling changed F by less than the tolerance
  double last_change = 0.0;
  double f_min = 0.0;  // extremes of f over the final mesh
  double f_max = 0.0;
};

inline constexpr double kFreeEnergyTolerance = 1e-12;
inline constexpr int kFreeEnergyMaxGrid = 4096;

namespace detail {

struct GridMean {
  double mean;
  double min;
  double max;
};

// Mean of f over the grid x grid periodic mesh. f has period 1/2 in each
// variable, so the (grid/2)^2 quarter mesh carries the same average.
inline GridMean grid_mean(const RealWeights& w, int grid) {
  const int half = grid / 2;
  std::vector<double> rows(half), lo(half), hi(half);
  parallel_for(static_cast<std::size_t>(half), [&](std::size_t j) {
    std::vector<double> vals(half);
    const double x = static_cast<double>(j) / grid;
    for (int k = 0; k < half; ++k) vals[k] = log_density(x, static_cast<double>(k) / grid, w);
    rows[j] = pairwise_sum(vals.begin(), vals.end());
    lo[j] = *std::min_element(vals.begin(), vals.end());
    hi[j] = *std::max_element(vals.begin(), vals.end());
  });
  const double total = pairwise_sum(rows.begin(), rows.end());
  return {total / (static_cast<double>(half) * half), *std::min_element(lo.begin(), lo.end()),
          *std::max_element(hi.begin(), hi.end())};
}

}  // namespace detail

// Periodic trapezoid rule, doubling the grid until successive values agree to
// kFreeEnergyTolerance or the grid would exceed kFreeEnergyMaxGrid.
inline FreeEnergyResult free_energy(const WeightPoint& weights, int grid = 64) {
  require_positive(weights);
  if (grid < 8) throw Error("free-energy grid must be at least 8");
  if (grid % 2 != 0) ++grid;
  const RealWeights w = to_real(weights);
  FreeEnergyResult res;
  res.weights = weights;
  detail::GridMean cur = detail::grid_mean(w, grid);
  res.grid = grid;
  while (grid * 2 <= kFreeEnergyMaxGrid) {
    const detail::GridMean next = detail::grid_mean(w, grid * 2);
    res.last_change = std::abs(next.mean - cur.mean);
    cur = next;
    grid *= 2;
    res.grid = grid;
    if (res.last_change < kFreeEnergyTolerance) {
      res.converged = true;
      break;
    }
  }
  res.F = std::numbers::ln2 + cur.mean;
  res.f_min = cur.min;
  res.f_max = cur.max;
  return res;
}

// ln 2 + (1/mn) sum_{j<m, k<n} f(x_j, y_k): the full-range Riemann sum, which
// must agree with the m/2 product form of det_double_product.
inline double log_det_per_site_full_range(int m, int n, int i, const WeightPoint& weights) {
  require_positive(weights);
  const OrientationTag tag = orientation_tag(i);
  const RealWeights w = to_real(weights);
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(m) * n);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < n; ++k)
      vals.push_back(log_density((j + 0.5 * tag.alpha2) / m, (k + 0.5 * tag.beta2) / n, w));
  return std::numbers::ln2 + pairwise_sum(vals.begin(), vals.end()) / (static_cast<double>(m) * n);
}

struct ConvergenceRow {
  int m = 0;
  int n = 0;
  int orientation = 0;
  double log_det_per_site = 0.0;
  double deviation = 0.0;
};

struct LineFit {
  double slope = std::numeric_limits<double>::quiet_NaN();
  double intercept = std::numeric_limits<double>::quiet_NaN();
  int points = 0;
};

// Least-squares line through (x, y); NaN slope with fewer than two points.
inline LineFit fit_line(const std::vector<std::pair<double, double>>& pts) {
  LineFit fit;
  fit.points = static_cast<int>(pts.size());
  if (pts.size() < 2) return fit;
  double sx = 0, sy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const double mx = sx / pts.size(), my = sy / pts.size();
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

struct ConvergenceTable {
  double F = 0.0;
  std::vector<ConvergenceRow> rows;
  LineFit fit;  // log(deviation) against m + n
  double decay_constant() const { return -fit.slope; }
};

// Deviations at or below this are rounding noise in a per-site log det and
// are left out of the fit.
inline constexpr double kDeviationNoiseFloor = 1e-12;

inline ConvergenceTable convergence_table(const WeightPoint& weights, const std::vector<std::pair<int, int>>& sizes,
                                          int i, const FreeEnergyResult* fe = nullptr) {
  require_positive(weights);
  ConvergenceTable t;
  t.F = fe ? fe->F : free_energy(weights).F;
  std::vector<std::pair<double, double>> pts;
  for (const auto& [m, n] : sizes) {
    TorusLattice validate(m, n);
    const DetResult d = det_double_product(m, n, i, weights);
    ConvergenceRow row{m, n, i, d.log_abs / (static_cast<double>(m) * n), 0.0};
    row.deviation = std::abs(row.log_det_per_site - t.F);
    if (row.deviation > kDeviationNoiseFloor) pts.emplace_back(m + n, std::log(row.deviation));
    t.rows.push_back(row);
  }
  t.fit = fit_line(pts);
  return t;
}

struct PartitionRatioRow {
  int m = 0;
  int n = 0;
  std::string method;  // "oracle" or "pfaffian"
  double log_z = 0.0;
  double ratio = 0.0;  // Z / (2 exp(mn F / 2))
};

struct PartitionRatioReport {
  double F = 0.0;
  std::vector<PartitionRatioRow> rows;
};

// Sizes at or below this vertex count are summed by the oracle.
inline constexpr int kOracleRatioVertexCap = 24;

inline PartitionRatioReport asymptotic_partition_check(const WeightPoint& weights,
                                                       const std::vector<std::pair<int, int>>& sizes,
                                                       const FreeEnergyResult* fe = nullptr) {
  require_positive(weights);
  PartitionRatioReport rep;
  rep.F = fe ? fe->F : free_energy(weights).F;
  for (const auto& [m, n] : sizes) {
    TorusLattice lat(m, n);
    const double scale = m * n * rep.F / 2.0;
    PartitionRatioRow row{m, n, "", 0.0, 0.0};
    if (lat.vertex_count() <= kOracleRatioVertexCap) {
      const double z = decompose_partition(lat).z.eval(weights).get_d();
      row.method = "oracle";
      row.log_z = std::log(z);
      row.ratio = std::exp(row.log_z - scale) / 2.0;
    } else {
      // Z = (1/2)(-Pf A1 + Pf A2 + Pf A3 + Pf A4) with the signs (-, +, +, +)
      // of the sign theorem, so every term contributes +sqrt(det A_i).
      double acc = 0.0;
      for (int i = 1; i <= 4; ++i) {
        const DetResult d = det_double_product(m, n, i, weights);
        if (!d.zero) acc += std::exp(0.5 * d.log_abs - scale);
      }
      row.method = "pfaffian";
      row.ratio = acc / 4.0;
      row.log_z = std::log(acc / 2.0) + scale;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

struct FourierDecayReport {
  int grid = 0;
  int max_freq = 0;
  // a(p, q) for p, q in [-max_freq, max_freq], row-major in p.
  std::vector<std::complex<double>> coefficients;
  // Largest |a(p, q)| over |p| + |q| = shell, for shell = 0 .. 2 max_freq.
  std::vector<double> shell_max;
  LineFit fit;  // log shell_max against shell, nonzero shells above the floor

  std::complex<double> a(int p, int q) const {
    const int side = 2 * max_freq + 1;
    return coefficients[static_cast<std::size_t>(p + max_freq) * side + (q + max_freq)];
  }
};

inline constexpr double kFourierNoiseFloor = 1e-13;

// a(p, q) = int int f(x, y) e^{-2 pi i (px + qy)} dx dy by the rectangle rule
// on a grid x grid mesh, done as two one-dimensional transforms.
inline FourierDecayReport fourier_decay_probe(const WeightPoint& weights, int max_freq, int grid = 256) {
  require_positive(weights);
  if (max_freq < 0) throw Error("max_freq must be nonnegative");
  grid = std::max(grid, 4 * max_freq + 8);
  const RealWeights w = to_real(weights);
  const int side = 2 * max_freq + 1;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // partial[j][q] = (1/grid) sum_k f(x_j, y_k) e^{-2 pi i q k / grid}
  std::vector<std::vector<std::complex<double>>> partial(grid, std::vector<std::complex<double>>(side));
  parallel_for(static_cast<std::size_t>(grid), [&](std::size_t j) {
    std::vector<double> fk(grid);
    for (int k = 0; k < grid; ++k)
      fk[k] = log_density(static_cast<double>(j) / grid, static_cast<double>(k) / grid, w);
    for (int q = -max_freq; q <= max_freq; ++q) {
      std::vector<double> re(grid), im(grid);
      for (int k = 0; k < grid; ++k) {
        const double t = -two_pi * static_cast<double>((static_cast<long>(q) * k) % grid) / grid;
        re[k] = fk[k] * std::cos(t);
        im[k] = fk[k] * std::sin(t);
      }
      partial[j][q + max_freq] = {pairwise_sum(re.begin(), re.end()) / grid, pairwise_sum(im.begin(), im.end()) / grid};
    }
  });
  FourierDecayReport rep;
  rep.grid = grid;
  rep.max_freq = max_freq;
  rep.coefficients.resize(static_cast<std::size_t>(side) * side);
  for (int p = -max_freq; p <= max_freq; ++p)
    for (int q = -max_freq; q <= max_freq; ++q) {
      std::vector<double> re(grid), im(grid);
      for (int j = 0; j < grid; ++j) {
        const double t = -two_pi * static_cast<double>((static_cast<long>(p) * j) % grid) / grid;
        const std::complex<double> v = partial[j][q + max_freq] * std::polar(1.0, t);
        re[j] = v.real();
        im[j] = v.imag();
      }
      rep.coefficients[static_cast<std::size_t>(p + max_freq) * side + (q + max_freq)] = {
          pairwise_sum(re.begin(), re.end()) / grid, pairwise_sum(im.begin(), im.end()) / grid};
    }
  rep.shell_max.assign(2 * max_freq + 1, 0.0);
  for (int p = -max_freq; p <= max_freq; ++p)
    for (int q = -max_freq; q <= max_freq; ++q) {
      const int shell = std::abs(p) + std::abs(q);
      rep.shell_max[shell] = std::max(rep.shell_max[shell], std::abs(rep.a(p, q)));
    }
  std::vector<std::pair<double, double>> pts;
  for (int s = 1; s <= 2 * max_freq; ++s)
    if (rep.shell_max[s] > kFourierNoiseFloor) pts.emplace_back(s, std::log(rep.shell_max[s]));
  rep.fit = fit_line(pts);
  return rep;
}

}  // namespace dimerlab

#endif  // DIMERLAB_ASYMPTOTICS_HPP
