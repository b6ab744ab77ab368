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

// Kasteleyn orientations O1..O4 (periodic/antiperiodic in x and y), the
// associated skew-symmetric matrices, their Pfaffians (exact numeric,
// symbolic by minor expansion or by interpolation) and the spectral
// double-product form of their determinants.

#ifndef DIMERLAB_KASTELEYN_HPP
#define DIMERLAB_KASTELEYN_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dimerlab/errors.hpp"
#include "dimerlab/lattice.hpp"
#include "dimerlab/parallel.hpp"
#include "dimerlab/polyring.hpp"

namespace dimerlab {

// Orientation index i in {1, 2, 3, 4} with its twist (alpha, beta), stored
// doubled so that it stays integral: (2 alpha, 2 beta).
struct OrientationTag {
  int index = 1;
  int alpha2 = 0;
  int beta2 = 0;
};

inline OrientationTag orientation_tag(int i) {
  switch (i) {
    case 1: return {1, 0, 0};
    case 2: return {2, 0, 1};
    case 3: return {3, 1, 0};
    case 4: return {4, 1, 1};
  }
  throw Error("orientation index must be 1..4 (got " + std::to_string(i) + ")");
}

// epsilon_i(x, x + delta) for delta = e1, e2, e1 + e2.
inline int sign_function(int i, Site x, EdgeKind delta, int m, int n) {
  const OrientationTag tag = orientation_tag(i);
  const int top = (tag.beta2 == 1 && x.row == n - 1) ? 1 : 0;
  const int right = (tag.alpha2 == 1 && x.col == m - 1) ? 1 : 0;
  int exponent = 0;
  switch (delta) {
    case EdgeKind::horizontal: exponent = right; break;
    case EdgeKind::vertical: exponent = x.col + top; break;
    case EdgeKind::diagonal: exponent = x.col + 1 + right + top; break;
  }
  return exponent % 2 == 0 ? 1 : -1;
}

// epsilon_i(x, y) for arbitrary vertices: 0 when not adjacent, antisymmetric.
inline int epsilon(const TorusLattice& lat, int i, int x, int y) {
  const auto adj = lat.adjacency(x, y);
  if (!adj) return 0;
  if (adj->forward) return sign_function(i, lat.site(x), adj->kind, lat.m(), lat.n());
  return -sign_function(i, lat.site(y), adj->kind, lat.m(), lat.n());
}

// Number of triangular faces whose boundary carries an even number of
// clockwise arrows under O_i. Zero for a Kasteleyn orientation.
inline int kasteleyn_face_violations(const TorusLattice& lat, int i) {
  int bad = 0;
  auto clockwise_arrows = [&](std::initializer_list<int> cycle) {
    std::vector<int> v(cycle);
    int count = 0;
    for (std::size_t t = 0; t < v.size(); ++t)
      if (epsilon(lat, i, v[t], v[(t + 1) % v.size()]) == 1) ++count;
    return count;
  };
  for (int row = 0; row < lat.n(); ++row)
    for (int col = 0; col < lat.m(); ++col) {
      const int a = lat.index(col, row);
      const int b = lat.index(col + 1, row);
      const int c = lat.index(col + 1, row + 1);
      const int d = lat.index(col, row + 1);
      // Both triangles of the square, traversed clockwise (y axis up).
      if (clockwise_arrows({a, c, b}) % 2 == 0) ++bad;
      if (clockwise_arrows({a, d, c}) % 2 == 0) ++bad;
    }
  return bad;
}

template <typename T>
class SkewMatrix {
 public:
  SkewMatrix(int size, OrientationTag orientation)
      : size_(size), orientation_(orientation), data_(static_cast<std::size_t>(size) * size) {}

  int size() const { return size_; }
  const OrientationTag& orientation() const { return orientation_; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * size_ + c]; }
  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * size_ + c]; }

  // Sets (r, c) to value and (c, r) to -value.
  void set_pair(int r, int c, const T& value) {
    (*this)(r, c) = value;
    (*this)(c, r) = -value;
  }

  bool is_antisymmetric() const {
    for (int r = 0; r < size_; ++r)
      for (int c = r; c < size_; ++c)
        if (!((*this)(r, c) == -(*this)(c, r))) return false;
    return true;
  }

 private:
  int size_;
  OrientationTag orientation_;
  std::vector<T> data_;
};

// Entries a_i(x, y) = epsilon_i(x, y) * w(x, y) with the weights as monomials.
inline SkewMatrix<TriPoly> build_symbolic_matrix(const TorusLattice& lat, int i) {
  SkewMatrix<TriPoly> a(lat.vertex_count(), orientation_tag(i));
  const TriPoly vars[3] = {TriPoly::zh(), TriPoly::zv(), TriPoly::zd()};
  for (const Edge& e : lat.edges()) {
    const int s = sign_function(i, lat.site(e.start), e.kind, lat.m(), lat.n());
    const TriPoly& w = vars[static_cast<int>(e.kind)];
    a.set_pair(e.start, e.end, s > 0 ? w : -w);
  }
  return a;
}

inline SkewMatrix<BigRational> build_numeric_matrix(const TorusLattice& lat, int i, const WeightPoint& w) {
  SkewMatrix<BigRational> a(lat.vertex_count(), orientation_tag(i));
  const BigRational* weights[3] = {&w.h, &w.v, &w.d};
  for (const Edge& e : lat.edges()) {
    const int s = sign_function(i, lat.site(e.start), e.kind, lat.m(), lat.n());
    const BigRational& val = *weights[static_cast<int>(e.kind)];
    a.set_pair(e.start, e.end, s > 0 ? val : BigRational(-val));
  }
  return a;
}

// Exact Pfaffian by skew-symmetric elimination. At step k the entry of row k
// with the largest absolute value is moved to column k+1 by a simultaneous
// row/column swap (one sign flip per swap); the 2x2 pivot block is then
// eliminated from the trailing submatrix, whose Pfaffian picks up the factor
// A(k, k+1).
inline BigRational pfaffian_exact(SkewMatrix<BigRational> a) {
  const int size = a.size();
  if (size % 2 != 0) return BigRational(0);
  BigRational result(1);
  std::vector<BigRational> row_k(size), row_k1(size), scaled_k(size), scaled_k1(size);
  BigRational best_abs, cand_abs, tmp;
  for (int k = 0; k < size; k += 2) {
    int pivot_col = -1;
    for (int c = k + 1; c < size; ++c) {
      if (sgn(a(k, c)) == 0) continue;
      cand_abs = abs(a(k, c));
      if (pivot_col < 0 || cand_abs > best_abs) {
        best_abs = cand_abs;
        pivot_col = c;
      }
    }
    if (pivot_col < 0) return BigRational(0);
    if (pivot_col != k + 1) {
      const int p = pivot_col, q = k + 1;
      for (int c = 0; c < size; ++c) swap(a(p, c), a(q, c));
      for (int r = 0; r < size; ++r) swap(a(r, p), a(r, q));
      result = -result;
    }
    const BigRational pivot = a(k, k + 1);
    result *= pivot;
    // A(i, j) += (A(k, j) A(k+1, i) - A(k, i) A(k+1, j)) / pivot  for i, j > k+1.
    std::vector<int> live_k, live_k1;
    for (int c = k + 2; c < size; ++c) {
      row_k[c] = a(k, c);
      row_k1[c] = a(k + 1, c);
      if (sgn(row_k[c]) != 0) {
        scaled_k[c] = row_k[c] / pivot;
        live_k.push_back(c);
      }
      if (sgn(row_k1[c]) != 0) {
        scaled_k1[c] = row_k1[c] / pivot;
        live_k1.push_back(c);
      }
    }
    // Term b_i * (a_j / p): rows with A(k+1, i) != 0, columns with A(k, j) != 0.
    for (int r : live_k1)
      for (int c : live_k) {
        if (c == r) continue;
        tmp = row_k1[r] * scaled_k[c];
        a(r, c) += tmp;
      }
    // Term -a_i * (b_j / p).
    for (int r : live_k)
      for (int c : live_k1) {
        if (c == r) continue;
        tmp = row_k[r] * scaled_k1[c];
        a(r, c) -= tmp;
      }
  }
  return result;
}

// Exact determinant by Gaussian elimination (independent of the Pfaffian
// route; used for Pf^2 = det checks).
inline BigRational determinant_exact(const SkewMatrix<BigRational>& m) {
  const int size = m.size();
  std::vector<BigRational> a(static_cast<std::size_t>(size) * size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) a[static_cast<std::size_t>(r) * size + c] = m(r, c);
  auto at = [&](int r, int c) -> BigRational& { return a[static_cast<std::size_t>(r) * size + c]; };
  BigRational det(1), factor;
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r)
      if (sgn(at(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return BigRational(0);
    if (pivot != col) {
      for (int c = 0; c < size; ++c) swap(at(pivot, c), at(col, c));
      det = -det;
    }
    det *= at(col, col);
    for (int r = col + 1; r < size; ++r) {
      if (sgn(at(r, col)) == 0) continue;
      factor = at(r, col) / at(col, col);
      for (int c = col; c < size; ++c)
        if (sgn(at(col, c)) != 0) at(r, c) -= factor * at(col, c);
    }
  }
  return det;
}

inline BigRational pfaffian_numeric(const TorusLattice& lat, int i, const WeightPoint& w) {
  return pfaffian_exact(build_numeric_matrix(lat, i, w));
}

enum class PfaffianMethod { expansion, interpolation };

inline constexpr int kExpansionVertexCap = 24;

// Generic Pfaffian by expansion along the lowest remaining row, memoized on
// the set of remaining vertices:
//   Pf(S) = sum_{t >= 1} (-1)^(t+1) A(v_0, v_t) Pf(S \ {v_0, v_t}).
inline TriPoly pfaffian_expansion(const SkewMatrix<TriPoly>& a) {
  const int size = a.size();
  if (size > kExpansionVertexCap)
    throw SizeLimit("minor expansion is capped at " + std::to_string(kExpansionVertexCap) + " vertices");
  if (size % 2 != 0) return TriPoly();
  std::unordered_map<std::uint32_t, TriPoly> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> TriPoly {
    if (mask == 0) return TriPoly(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int v0 = std::countr_zero(mask);
    TriPoly total;
    for (int u = v0 + 1; u < size; ++u) {
      if (!(mask >> u & 1u) || a(v0, u).is_zero()) continue;
      const int position = std::popcount(mask & ((1u << u) - 1u));
      TriPoly term = a(v0, u) * self(self, mask & ~(1u << v0) & ~(1u << u));
      if (position % 2 == 1) total += term;
      else total -= term;
    }
    memo.emplace(mask, total);
    return total;
  };
  const std::uint32_t full = size == 32 ? ~0u : ((1u << size) - 1u);
  return rec(rec, full);
}

inline TriPoly pfaffian_symbolic(const TorusLattice& lat, int i, PfaffianMethod method) {
  if (method == PfaffianMethod::expansion) {
    if (lat.vertex_count() > kExpansionVertexCap)
      throw SizeLimit("expansion method is limited to mn <= " + std::to_string(kExpansionVertexCap) +
                      "; use interpolation");
    return pfaffian_expansion(build_symbolic_matrix(lat, i));
  }
  return interpolate_homogeneous(lat.vertex_count() / 2,
                                 [&](const WeightPoint& w) { return pfaffian_numeric(lat, i, w); });
}

// Floating-point weights for the spectral side.
struct RealWeights {
  double h = 1.0, v = 1.0, d = 1.0;
};

inline RealWeights to_real(const WeightPoint& w) { return {w.h.get_d(), w.v.get_d(), w.d.get_d()}; }

// S(x, y) = 4 [zh^2 sin^2(2 pi x) + zv^2 sin^2(2 pi y) + zd^2 cos^2(2 pi (x + y))].
inline double spectral_function(double x, double y, const RealWeights& w) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double sx = std::sin(two_pi * x);
  const double sy = std::sin(two_pi * y);
  const double cxy = std::cos(two_pi * (x + y));
  return 4.0 * (w.h * w.h * sx * sx + w.v * w.v * sy * sy + w.d * w.d * cxy * cxy);
}

// The 2x2 block acting on the Fourier pair (xi, eta) after splitting each
// row into column pairs (2 j0, 2 j0 + 1); the twist of O_i shifts the
// frequencies by (alpha, beta).
struct SpectralBlock {
  int xi = 0;
  int eta = 0;
  std::complex<double> l00, l01, l10, l11;

  std::complex<double> determinant() const { return l00 * l11 - l01 * l10; }
  std::complex<double> trace() const { return l00 + l11; }
};

inline SpectralBlock spectral_block(int m, int n, int i, int xi, int eta, const RealWeights& w) {
  using namespace std::complex_literals;
  const OrientationTag tag = orientation_tag(i);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double m0 = m / 2.0;
  const double theta = two_pi * (xi + 0.5 * tag.alpha2) / m0;
  const double phi = two_pi * (eta + 0.5 * tag.beta2) / n;
  const auto ei = [](double t) { return std::polar(1.0, t); };
  SpectralBlock b{xi, eta, {}, {}, {}, {}};
  b.l00 = 2.0i * w.v * std::sin(phi);
  b.l11 = -b.l00;
  b.l01 = w.h * (1.0 - ei(-theta)) + w.d * (-ei(phi) - ei(-theta - phi));
  b.l10 = w.h * (-1.0 + ei(theta)) + w.d * (ei(-phi) + ei(theta + phi));
  return b;
}

// log|det A_i| from the double product over the m/2 x n shifted frequencies,
// or a zero flag when some factor vanishes exactly.
struct DetResult {
  double log_abs = 0.0;
  bool zero = false;

  double value() const { return zero ? 0.0 : std::exp(log_abs); }
};

// True when the factor S((j + alpha)/m, (k + beta)/n) vanishes exactly. Each
// of its three nonnegative terms must vanish: decided in integer arithmetic.
inline bool spectral_factor_vanishes(int m, int n, const OrientationTag& tag, int j, int k,
                                     bool h_zero, bool v_zero, bool d_zero) {
  const long px = 2L * j + tag.alpha2;  // x = px / (2m)
  const long py = 2L * k + tag.beta2;   // y = py / (2n)
  const bool sin_x_zero = px % m == 0;  // 2x integral
  const bool sin_y_zero = py % n == 0;  // 2y integral
  // cos(2 pi (x + y)) = 0  <=>  4(x + y) = (2n px + 2m py) / (mn) is an odd integer.
  const long num = 2L * n * px + 2L * m * py;
  const long den = static_cast<long>(m) * n;
  const bool cos_zero = num % den == 0 && (num / den) % 2 != 0;
  return (h_zero || sin_x_zero) && (v_zero || sin_y_zero) && (d_zero || cos_zero);
}

inline DetResult det_double_product(int m, int n, int i, const WeightPoint& weights) {
  if (m % 2 != 0 || m <= 0 || n <= 0) throw InvalidDimensions("double product needs even m and positive n");
  if (weights.h < 0 || weights.v < 0 || weights.d < 0) throw NonPositiveWeights("weights must be nonnegative");
  const OrientationTag tag = orientation_tag(i);
  const RealWeights w = to_real(weights);
  const bool hz = weights.h == 0, vz = weights.v == 0, dz = weights.d == 0;
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(m / 2) * n);
  for (int j = 0; j < m / 2; ++j)
    for (int k = 0; k < n; ++k) {
      if (spectral_factor_vanishes(m, n, tag, j, k, hz, vz, dz)) return {0.0, true};
      const double x = (j + 0.5 * tag.alpha2) / m;
      const double y = (k + 0.5 * tag.beta2) / n;
      logs.push_back(std::log(spectral_function(x, y, w)));
    }
  return {pairwise_sum(logs.begin(), logs.end()), false};
}

// One row of the boundary-regime table: which determinants vanish when one
// weight is switched off.
struct ZeroPatternRow {
  std::string regime;  // "zd=0", "zv=0" or "zh=0"
  int orientation = 1;
  bool expect_zero = false;
  bool observed_zero = false;
  bool ok() const { return expect_zero == observed_zero; }
};

inline std::vector<ZeroPatternRow> zero_pattern_table(int m, int n) {
  TorusLattice lat(m, n);  // validates dimensions
  const bool n_odd = n % 2 == 1;
  struct Regime {
    const char* name;
    WeightPoint w;
    bool expect[4];
  };
  const Regime regimes[3] = {
      {"zd=0", {1, 1, 0}, {true, n_odd, false, false}},
      {"zv=0", {1, 0, 1}, {n % 4 == 0, n % 4 == 2, false, false}},
      {"zh=0", {0, 1, 1}, {m % 4 == 0, m % 4 == 0 && n_odd, m % 4 == 2, m % 4 == 2 && n_odd}},
  };
  std::vector<ZeroPatternRow> rows;
  for (const auto& reg : regimes)
    for (int i = 1; i <= 4; ++i) {
      const DetResult d = det_double_product(m, n, i, reg.w);
      rows.push_back({reg.name, i, reg.expect[i - 1], d.zero});
    }
  return rows;
}

inline std::vector<ZeroPatternRow> zero_pattern_check(int m, int n) {
  auto rows = zero_pattern_table(m, n);
  for (const auto& r : rows)
    if (!r.ok())
      throw PropositionViolation("zero pattern: regime " + r.regime + ", det A" + std::to_string(r.orientation) +
                                 (r.expect_zero ? " expected zero" : " expected positive") + " at (" +
                                 std::to_string(m) + "," + std::to_string(n) + ")");
  return rows;
}

}  // namespace dimerlab

#endif  // DIMERLAB_KASTELEYN_HPP
