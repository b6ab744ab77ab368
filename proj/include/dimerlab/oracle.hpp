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

// Brute-force ground truth: every dimer configuration with its sign under
// each orientation, its weight monomial and its homology class; partition
// functions by class; superpositions and the contour sign rule.

#ifndef DIMERLAB_ORACLE_HPP
#define DIMERLAB_ORACLE_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dimerlab/errors.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/lattice.hpp"
#include "dimerlab/parallel.hpp"
#include "dimerlab/polyring.hpp"

namespace dimerlab {

inline constexpr int kEnumerationVertexCap = 40;

// sgn(sigma; O_i) = (-1)^pi(sigma) * prod epsilon_i over the dimers, where
// pi lists the dimers as (p1 < p2), (p3 < p4), ... with p1 < p3 < ...
inline int config_sign(const TorusLattice& lat, const DimerConfiguration& conf, int i) {
  const auto& pairs = conf.pairs();  // already in canonical order
  std::vector<int> perm;
  perm.reserve(pairs.size() * 2);
  int eps = 1;
  for (const auto& [a, b] : pairs) {
    perm.push_back(a);
    perm.push_back(b);
    eps *= epsilon(lat, i, a, b);
  }
  // Parity by cycle decomposition: a cycle of length L is L - 1 transpositions.
  std::vector<char> seen(perm.size(), 0);
  int transpositions = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) {
      seen[t] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0 ? 1 : -1) * eps;
}

struct SignedConfiguration {
  DimerConfiguration config;
  std::array<int, 4> sign{};  // sign under O1..O4
  HomologyClass homology;
  std::array<int, 3> monomial{};  // (Nh, Nv, Nd)
};

// What the enumerator knows about the matching currently being visited.
struct MatchingView {
  const std::vector<std::pair<int, int>>& pairs;  // canonical order
  std::array<int, 3> counts;
  std::array<int, 4> sign;
  HomologyClass homology;
};

namespace detail {

class Enumerator {
 public:
  using Visitor = std::function<void(const MatchingView&)>;

  explicit Enumerator(const TorusLattice& lat) : lat_(lat), count_(lat.vertex_count()) {
    if (count_ > kEnumerationVertexCap)
      throw SizeLimit("enumeration is capped at mn <= " + std::to_string(kEnumerationVertexCap));
    pairs_.reserve(count_ / 2);
    // Per (vertex, neighbor slot): epsilon for all four orientations taken
    // from the lower index to the higher, plus crossing contributions.
    for (int x = 0; x < count_; ++x)
      for (int slot = 0; slot < 6; ++slot) {
        const int y = lat.neighbors(x)[slot];
        Step& st = steps_[x][slot];
        st.partner = y;
        const int lo = std::min(x, y), hi = std::max(x, y);
        for (int i = 1; i <= 4; ++i) st.eps[i - 1] = epsilon(lat, i, lo, hi);
        const Edge e = oriented_dimer(lat, x, y);
        st.kind = static_cast<int>(e.kind);
        const Site s = lat.site(e.start);
        st.crosses_x = e.kind != EdgeKind::vertical && s.col == 0;
        st.crosses_y = e.kind != EdgeKind::horizontal && s.row == 0;
      }
  }

  // Visits every matching whose first dimer uses neighbor slot `first_slot`
  // of vertex 0 (all matchings when first_slot < 0). Branching is on the
  // lowest unmatched vertex, neighbors in the order +e1, +e2, +e1+e2, -e1,
  // -e2, -e1-e2.
  void run(const Visitor& visit, int first_slot = -1) {
    mask_ = 0;
    parity_ = 0;
    eps_ = {1, 1, 1, 1};
    counts_ = {0, 0, 0};
    cross_x_ = cross_y_ = 0;
    pairs_.clear();
    visit_ = &visit;
    if (count_ == 0) return;
    if (first_slot < 0) {
      recurse();
    } else {
      place(0, first_slot);
    }
  }

 private:
  struct Step {
    int partner = 0;
    int kind = 0;
    std::array<int, 4> eps{};
    bool crosses_x = false;
    bool crosses_y = false;
  };

  void recurse() {
    if (static_cast<int>(pairs_.size()) * 2 == count_) {
      const MatchingView view{pairs_, counts_,
                              {parity_ ? -eps_[0] : eps_[0], parity_ ? -eps_[1] : eps_[1],
                               parity_ ? -eps_[2] : eps_[2], parity_ ? -eps_[3] : eps_[3]},
                              {(cross_x_ + lat_.n()) % 2, cross_y_ % 2}};
      (*visit_)(view);
      return;
    }
    const int a = std::countr_one(mask_);
    for (int slot = 0; slot < 6; ++slot) place(a, slot);
  }

  void place(int a, int slot) {
    const Step& st = steps_[a][slot];
    const int b = st.partner;
    if (mask_ >> b & 1u) return;
    // Appending (a, b) to the permutation: a is the lowest unmatched vertex,
    // so exactly popcount(mask) - a matched labels exceed it.
    const int inv = (std::popcount(mask_) - a) + std::popcount(mask_ >> (b + 1));
    const int old_parity = parity_;
    const auto old_eps = eps_;
    parity_ ^= inv & 1;
    for (int i = 0; i < 4; ++i) eps_[i] *= st.eps[i];
    ++counts_[st.kind];
    cross_x_ += st.crosses_x;
    cross_y_ += st.crosses_y;
    mask_ |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    pairs_.emplace_back(a, b);

    recurse();

    pairs_.pop_back();
    mask_ &= ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    cross_x_ -= st.crosses_x;
    cross_y_ -= st.crosses_y;
    --counts_[st.kind];
    eps_ = old_eps;
    parity_ = old_parity;
  }

  const TorusLattice& lat_;
  int count_;
  std::array<std::array<Step, 6>, kEnumerationVertexCap> steps_{};
  std::uint64_t mask_ = 0;
  int parity_ = 0;
  std::array<int, 4> eps_{};
  std::array<int, 3> counts_{};
  int cross_x_ = 0;
  int cross_y_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  const Visitor* visit_ = nullptr;
};

}  // namespace detail

// Streams every matching exactly once with its signs, class and counts,
// without materializing the whole set.
inline void enumerate_matchings(const TorusLattice& lat, const std::function<void(const MatchingView&)>& visit) {
  detail::Enumerator(lat).run(visit);
}

inline void enumerate(const TorusLattice& lat, const std::function<void(const SignedConfiguration&)>& visit) {
  enumerate_matchings(lat, [&](const MatchingView& v) {
    SignedConfiguration sc{DimerConfiguration(lat, v.pairs), v.sign, v.homology, v.counts};
    visit(sc);
  });
}

inline long long count_matchings(const TorusLattice& lat) {
  long long total = 0;
  enumerate_matchings(lat, [&](const MatchingView&) { ++total; });
  return total;
}

// Coefficient of Z^{rs} (classes ordered 00, 10, 01, 11) in Pf A_i.
inline constexpr int kKasteleynIdentity[4][4] = {
    {1, -1, -1, -1},
    {1, -1, 1, 1},
    {1, 1, -1, 1},
    {1, 1, 1, -1},
};

inline int class_slot(const HomologyClass& c) { return c.r + 2 * c.s; }

struct PartitionDecomposition {
  // Indexed by class_slot: Z00, Z10, Z01, Z11.
  std::array<TriPoly, 4> z_class;
  TriPoly z;
  std::array<TriPoly, 4> pf;  // signed enumeration sums, O1..O4

  const TriPoly& z00() const { return z_class[0]; }
  const TriPoly& z10() const { return z_class[1]; }
  const TriPoly& z01() const { return z_class[2]; }
  const TriPoly& z11() const { return z_class[3]; }
};

// The Kasteleyn combination sum_c kKasteleynIdentity[i][c] * Z^c.
template <typename T>
T kasteleyn_combination(const std::array<T, 4>& z_class, int i) {
  T acc{};
  for (int c = 0; c < 4; ++c) {
    if (kKasteleynIdentity[i - 1][c] > 0) acc += z_class[c];
    else acc -= z_class[c];
  }
  return acc;
}

// Inverse of the identities: Z^c = (1/4) sum_i kKasteleynIdentity[i][c] Pf A_i.
inline std::array<BigRational, 4> classes_from_pfaffians(const std::array<BigRational, 4>& pf) {
  std::array<BigRational, 4> z;
  for (int c = 0; c < 4; ++c) {
    BigRational acc(0);
    for (int i = 0; i < 4; ++i) acc += kKasteleynIdentity[i][c] * pf[i];
    z[c] = acc / 4;
  }
  return z;
}

inline std::array<TriPoly, 4> classes_from_pfaffians(const std::array<TriPoly, 4>& pf) {
  std::array<TriPoly, 4> z;
  for (int c = 0; c < 4; ++c) {
    TriPoly acc;
    for (int i = 0; i < 4; ++i) acc += kKasteleynIdentity[i][c] > 0 ? pf[i] : -pf[i];
    TriPoly quarter;
    for (const auto& [e, coeff] : acc.terms()) {
      if (!mpz_divisible_ui_p(coeff.get_mpz_t(), 4))
        throw IdentityViolation("Pfaffian combination is not divisible by 4");
      quarter.add_term(e, BigInt(coeff / 4));
    }
    z[c] = quarter;
  }
  return z;
}

// Z = (1/2)(-Pf A1 + Pf A2 + Pf A3 + Pf A4).
template <typename T>
T partition_from_pfaffians(const std::array<T, 4>& pf) {
  T sum = pf[1];
  sum += pf[2];
  sum += pf[3];
  sum -= pf[0];
  return sum;  // 2Z; halved by the callers that know their coefficient type
}

inline TriPoly halve_exact(const TriPoly& p) {
  TriPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) throw IdentityViolation("odd coefficient in 2Z");
    r.add_term(e, BigInt(c / 2));
  }
  return r;
}

// Accumulates Z^{rs} and the signed sums Pf A_i over all matchings, then
// asserts the four Kasteleyn identities as polynomial equalities.
inline PartitionDecomposition decompose_partition(const TorusLattice& lat) {
  const int half = lat.vertex_count() / 2;
  const int side = half + 1;
  // Dense accumulators indexed by (Nh, Nv); Nd = mn/2 - Nh - Nv.
  struct Accumulator {
    std::vector<long long> z[4];
    std::vector<long long> pf[4];
  };
  auto make_acc = [&] {
    Accumulator acc;
    for (int c = 0; c < 4; ++c) {
      acc.z[c].assign(static_cast<std::size_t>(side) * side, 0);
      acc.pf[c].assign(static_cast<std::size_t>(side) * side, 0);
    }
    return acc;
  };
  std::vector<Accumulator> branches(6);
  parallel_for(6, [&](std::size_t slot) {
    Accumulator acc = make_acc();
    detail::Enumerator en(lat);
    en.run(
        [&](const MatchingView& v) {
          const std::size_t idx = static_cast<std::size_t>(v.counts[0]) * side + v.counts[1];
          ++acc.z[class_slot(v.homology)][idx];
          for (int i = 0; i < 4; ++i) acc.pf[i][idx] += v.sign[i];
        },
        static_cast<int>(slot));
    branches[slot] = std::move(acc);
  });
  PartitionDecomposition out;
  for (int nh = 0; nh <= half; ++nh)
    for (int nv = 0; nh + nv <= half; ++nv) {
      const std::size_t idx = static_cast<std::size_t>(nh) * side + nv;
      const Exponent e{nh, nv, half - nh - nv};
      for (int c = 0; c < 4; ++c) {
        long long zc = 0, pc = 0;
        for (const auto& b : branches) {
          zc += b.z[c][idx];
          pc += b.pf[c][idx];
        }
        out.z_class[c].add_term(e, BigInt(static_cast<long>(zc)));
        out.pf[c].add_term(e, BigInt(static_cast<long>(pc)));
      }
    }
  for (int c = 0; c < 4; ++c) out.z += out.z_class[c];
  for (int i = 1; i <= 4; ++i)
    if (!(kasteleyn_combination(out.z_class, i) == out.pf[i - 1]))
      throw IdentityViolation("Kasteleyn identity fails for Pf A" + std::to_string(i) + " at (" +
                              std::to_string(lat.m()) + "," + std::to_string(lat.n()) + ")");
  return out;
}

// ---------------------------------------------------------------------------
// Superpositions and contours.

struct Contour {
  // Vertices in traversal order, starting at the least vertex and leaving it
  // along its dimer in the first configuration.
  std::vector<int> vertices;
  bool trivial = false;
  // Displacement of the planar lift after one traversal; nonzero iff the
  // contour winds around the torus.
  int winding_dx = 0;
  int winding_dy = 0;

  bool winds() const { return winding_dx != 0 || winding_dy != 0; }
  std::size_t length() const { return vertices.size(); }
};

struct ContourDecomposition {
  std::vector<Contour> contours;
};

namespace detail {

inline std::pair<int, int> step_displacement(const TorusLattice& lat, int x, int y) {
  const auto adj = lat.adjacency(x, y);
  if (!adj) throw Error("contour step between non-adjacent vertices");
  const int dx = adj->kind == EdgeKind::vertical ? 0 : 1;
  const int dy = adj->kind == EdgeKind::horizontal ? 0 : 1;
  return adj->forward ? std::pair{dx, dy} : std::pair{-dx, -dy};
}

}  // namespace detail

inline ContourDecomposition superpose(const TorusLattice& lat, const DimerConfiguration& first,
                                      const DimerConfiguration& second) {
  const auto p1 = first.partners();
  const auto p2 = second.partners();
  ContourDecomposition out;
  std::vector<char> seen(p1.size(), 0);
  for (int start = 0; start < static_cast<int>(p1.size()); ++start) {
    if (seen[start]) continue;
    Contour c;
    int v = start;
    bool use_first = true;
    do {
      seen[v] = 1;
      c.vertices.push_back(v);
      v = use_first ? p1[v] : p2[v];
      use_first = !use_first;
    } while (v != start);
    c.trivial = c.vertices.size() == 2;
    if (!c.trivial) {
      for (std::size_t t = 0; t < c.vertices.size(); ++t) {
        const auto [dx, dy] =
            detail::step_displacement(lat, c.vertices[t], c.vertices[(t + 1) % c.vertices.size()]);
        c.winding_dx += dx;
        c.winding_dy += dy;
      }
    }
    out.contours.push_back(std::move(c));
  }
  return out;
}

// nu(gamma; O_i): arrows along the clockwise traversal of a contractible
// contour. A contour that winds the torus has no inside; its count is taken
// along the stored traversal direction. Reversing a traversal maps nu to
// L - nu with L even, so the parity is convention-free.
inline int clockwise_count(const TorusLattice& lat, const Contour& c, int i) {
  if (c.trivial) return 1;
  const std::size_t len = c.vertices.size();
  int along = 0;
  for (std::size_t t = 0; t < len; ++t)
    if (epsilon(lat, i, c.vertices[t], c.vertices[(t + 1) % len]) == 1) ++along;
  if (c.winds()) return along;
  // Shoelace area of the planar lift; positive means counterclockwise.
  long twice_area = 0;
  int x = 0, y = 0;
  for (std::size_t t = 0; t < len; ++t) {
    const auto [dx, dy] = detail::step_displacement(lat, c.vertices[t], c.vertices[(t + 1) % len]);
    twice_area += static_cast<long>(x) * (y + dy) - static_cast<long>(x + dx) * y;
    x += dx;
    y += dy;
  }
  return twice_area > 0 ? static_cast<int>(len) - along : along;
}

// prod_k (-1)^(nu_k + 1).
inline int contour_sign_product(const TorusLattice& lat, const ContourDecomposition& dec, int i) {
  int sign = 1;
  for (const auto& c : dec.contours)
    if ((clockwise_count(lat, c, i) + 1) % 2 != 0) sign = -sign;
  return sign;
}

// ---------------------------------------------------------------------------
// Low-weight excitation classes.

struct ClassTally {
  long long count = 0;
  std::array<long long, 4> positive{};  // sign +1 under O1..O4
  std::array<long long, 4> negative{};

  void add(const std::array<int, 4>& sign) {
    ++count;
    for (int i = 0; i < 4; ++i) (sign[i] > 0 ? positive : negative)[i]++;
  }
};

struct ExcitationReport {
  ClassTally sigma0;    // no vertical dimers, two diagonal-covered vertices per row
  ClassTally sigma0_1;  // ... with one diagonal dimer between every pair of adjacent rows
  ClassTally sigma0_2;  // ... with diagonal dimers paired on strips (2k+i, 2k+i+1)
  ClassTally sigma1;    // n-1 diagonal, 1 vertical, two covered vertices per row
  ClassTally sigma2;    // n-2 diagonal, 2 vertical, two covered vertices per row
  ClassTally sigma2_1;  // ... linking every pair of adjacent rows once
  ClassTally sigma2_2;  // ... paired on strips
};

inline ExcitationReport count_excitation_classes(const TorusLattice& lat) {
  const int n = lat.n();
  ExcitationReport rep;
  std::vector<int> diag_covered(n), dv_covered(n), diag_link(n), dv_link(n);
  // Every link count on the strips (2k + offset, 2k + offset + 1) equals two.
  auto paired = [n](const std::vector<int>& link) {
    if (n % 2 != 0) return false;
    for (int offset = 0; offset < 2; ++offset) {
      bool all = true;
      for (int k = 0; k < n / 2 && all; ++k) all = link[(2 * k + offset) % n] == 2;
      if (all) return true;
    }
    return false;
  };
  auto all_equal = [](const std::vector<int>& v, int value) {
    for (int x : v)
      if (x != value) return false;
    return true;
  };
  enumerate_matchings(lat, [&](const MatchingView& v) {
    const int nv = v.counts[1], nd = v.counts[2];
    if (!((nv == 0 && nd >= n - 2) || (nv <= 2 && nv + nd == n))) return;
    std::fill(diag_covered.begin(), diag_covered.end(), 0);
    std::fill(dv_covered.begin(), dv_covered.end(), 0);
    std::fill(diag_link.begin(), diag_link.end(), 0);
    std::fill(dv_link.begin(), dv_link.end(), 0);
    for (const auto& [a, b] : v.pairs) {
      const Edge e = oriented_dimer(lat, a, b);
      if (e.kind == EdgeKind::horizontal) continue;
      const int row = lat.site(e.start).row;
      const int up = (row + 1) % n;
      ++dv_covered[row];
      ++dv_covered[up];
      ++dv_link[row];
      if (e.kind == EdgeKind::diagonal) {
        ++diag_covered[row];
        ++diag_covered[up];
        ++diag_link[row];
      }
    }
    if (nv == 0 && all_equal(diag_covered, 2)) {
      rep.sigma0.add(v.sign);
      if (all_equal(diag_link, 1)) rep.sigma0_1.add(v.sign);
      if (paired(diag_link)) rep.sigma0_2.add(v.sign);
    }
    if (all_equal(dv_covered, 2)) {
      if (nv == 1 && nd == n - 1) rep.sigma1.add(v.sign);
      if (nv == 2 && nd == n - 2) {
        rep.sigma2.add(v.sign);
        if (all_equal(dv_link, 1)) rep.sigma2_1.add(v.sign);
        if (paired(dv_link)) rep.sigma2_2.add(v.sign);
      }
    }
  });
  return rep;
}

}  // namespace dimerlab

#endif  // DIMERLAB_ORACLE_HPP
