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

// The triangular lattice on the m x n torus, drawn as a square lattice with
// one diagonal per square. Vertex (col, row) has index row * m + col
// (0-based; the 1-based lexicographic label is index + 1).

#ifndef DIMERLAB_LATTICE_HPP
#define DIMERLAB_LATTICE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimerlab/errors.hpp"

namespace dimerlab {

enum class EdgeKind { horizontal = 0, vertical = 1, diagonal = 2 };

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::horizontal: return "horizontal";
    case EdgeKind::vertical: return "vertical";
    case EdgeKind::diagonal: return "diagonal";
  }
  return "?";
}

struct Site {
  int col = 0;
  int row = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

// An edge stored as (start, start + delta) with delta in {e1, e2, e1 + e2}.
struct Edge {
  int start = 0;
  int end = 0;
  EdgeKind kind = EdgeKind::horizontal;
};

// How two adjacent vertices are related: `forward` is true when
// y = x + delta(kind), false when x = y + delta(kind).
struct Adjacency {
  EdgeKind kind;
  bool forward;
};

class TorusLattice {
 public:
  TorusLattice(int m, int n) : m_(m), n_(n) {
    if (m % 2 != 0) throw InvalidDimensions("m must be even (got " + std::to_string(m) + ")");
    if (m < 4) throw InvalidDimensions("m must be at least 4 (got " + std::to_string(m) + ")");
    if (n < 3) throw InvalidDimensions("n must be at least 3 (got " + std::to_string(n) + ")");
    const int count = m * n;
    edges_.reserve(3 * count);
    neighbors_.resize(count);
    for (int x = 0; x < count; ++x) {
      for (int k = 0; k < 3; ++k) {
        const int y = step(x, static_cast<EdgeKind>(k));
        edges_.push_back({x, y, static_cast<EdgeKind>(k)});
        neighbors_[x][k] = y;
      }
    }
    for (int x = 0; x < count; ++x)
      for (int k = 0; k < 3; ++k) neighbors_[neighbors_[x][k]][3 + k] = x;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int vertex_count() const { return m_ * n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int index(int col, int row) const { return wrap(row, n_) * m_ + wrap(col, m_); }
  int index(Site s) const { return index(s.col, s.row); }
  Site site(int v) const { return {v % m_, v / m_}; }

  // x + delta(kind).
  int step(int x, EdgeKind kind) const {
    const Site s = site(x);
    switch (kind) {
      case EdgeKind::horizontal: return index(s.col + 1, s.row);
      case EdgeKind::vertical: return index(s.col, s.row + 1);
      case EdgeKind::diagonal: return index(s.col + 1, s.row + 1);
    }
    return x;
  }

  // Slots 0..2: x + e1, x + e2, x + e1 + e2. Slots 3..5: x - e1, x - e2,
  // x - e1 - e2.
  const std::array<int, 6>& neighbors(int x) const { return neighbors_[x]; }

  std::optional<Adjacency> adjacency(int x, int y) const {
    const auto& nb = neighbors_[x];
    for (int k = 0; k < 3; ++k) {
      if (nb[k] == y) return Adjacency{static_cast<EdgeKind>(k), true};
      if (nb[3 + k] == y) return Adjacency{static_cast<EdgeKind>(k), false};
    }
    return std::nullopt;
  }

 private:
  static int wrap(int a, int mod) { return ((a % mod) + mod) % mod; }

  int m_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 6>> neighbors_;
};

inline TorusLattice build_lattice(int m, int n) { return TorusLattice(m, n); }

// A perfect matching. Each pair is (smaller index, larger index); pairs are
// sorted by their first element.
class DimerConfiguration {
 public:
  DimerConfiguration() = default;

  // Validates that `pairs` is a perfect matching of lattice edges.
  DimerConfiguration(const TorusLattice& lat, std::vector<std::pair<int, int>> pairs) {
    const int count = lat.vertex_count();
    if (static_cast<int>(pairs.size()) * 2 != count)
      throw Error("configuration must have mn/2 dimers");
    std::vector<char> covered(count, 0);
    for (auto& [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= count || b >= count) throw Error("vertex index out of range");
      if (a > b) std::swap(a, b);
      if (covered[a] || covered[b]) throw Error("configuration covers a vertex twice");
      covered[a] = covered[b] = 1;
      const auto adj = lat.adjacency(a, b);
      if (!adj) throw Error("dimer joins non-adjacent vertices");
      ++counts_[static_cast<int>(adj->kind)];
    }
    std::sort(pairs.begin(), pairs.end());
    pairs_ = std::move(pairs);
  }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int horizontal_count() const { return counts_[0]; }
  int vertical_count() const { return counts_[1]; }
  int diagonal_count() const { return counts_[2]; }
  // Exponent triple (Nh, Nv, Nd) of the weight monomial.
  std::array<int, 3> monomial() const { return counts_; }

  // partner[v] for every vertex.
  std::vector<int> partners() const {
    std::vector<int> p(pairs_.size() * 2, -1);
    for (const auto& [a, b] : pairs_) {
      p[a] = b;
      p[b] = a;
    }
    return p;
  }

  friend bool operator==(const DimerConfiguration& a, const DimerConfiguration& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::vector<std::pair<int, int>> pairs_;
  std::array<int, 3> counts_{0, 0, 0};
};

// Pairs columns (2t, 2t+1) on every row: consecutive lexicographic labels.
inline DimerConfiguration standard_configuration(const TorusLattice& lat) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < lat.vertex_count(); v += 2) pairs.emplace_back(v, v + 1);
  return DimerConfiguration(lat, std::move(pairs));
}

// Translates every dimer by (dcol, drow).
inline DimerConfiguration shift(const TorusLattice& lat, const DimerConfiguration& conf, int dcol,
                                int drow) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(conf.pairs().size());
  for (const auto& [a, b] : conf.pairs()) {
    const Site sa = lat.site(a), sb = lat.site(b);
    pairs.emplace_back(lat.index(sa.col + dcol, sa.row + drow), lat.index(sb.col + dcol, sb.row + drow));
  }
  return DimerConfiguration(lat, std::move(pairs));
}

// The start vertex and kind of the dimer {a, b}.
inline Edge oriented_dimer(const TorusLattice& lat, int a, int b) {
  const auto adj = lat.adjacency(a, b);
  if (!adj) throw Error("dimer joins non-adjacent vertices");
  return adj->forward ? Edge{a, b, adj->kind} : Edge{b, a, adj->kind};
}

struct CrossingCounts {
  std::vector<int> vertical_cut;    // v[j]: dimers crossing x = j + 1/2
  std::vector<int> horizontal_cut;  // h[k]: dimers crossing y = k + 1/2
};

inline CrossingCounts crossing_counts(const TorusLattice& lat, const DimerConfiguration& conf) {
  CrossingCounts cc{std::vector<int>(lat.m(), 0), std::vector<int>(lat.n(), 0)};
  for (const auto& [a, b] : conf.pairs()) {
    const Edge e = oriented_dimer(lat, a, b);
    const Site s = lat.site(e.start);
    if (e.kind != EdgeKind::vertical) ++cc.vertical_cut[s.col];
    if (e.kind != EdgeKind::horizontal) ++cc.horizontal_cut[s.row];
  }
  return cc;
}

struct HomologyClass {
  int r = 0;
  int s = 0;
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

// Class of conf relative to the standard configuration, read off the crossing
// parities of the superposition at the cuts x = 1/2 and y = 1/2.
inline HomologyClass homology_class(const TorusLattice& lat, const DimerConfiguration& conf) {
  const auto c = crossing_counts(lat, conf);
  // The standard configuration crosses x = 1/2 once per row and never
  // crosses a horizontal cut.
  return {(c.vertical_cut[0] + lat.n()) % 2, c.horizontal_cut[0] % 2};
}

}  // namespace dimerlab

#endif  // DIMERLAB_LATTICE_HPP
