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


// Named invariant checks over one torus, shared by the command-line front end
// and the acceptance run.

#ifndef DIMERLAB_VERIFY_HPP
#define DIMERLAB_VERIFY_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "dimerlab/errors.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/lattice.hpp"
#include "dimerlab/oracle.hpp"
#include "dimerlab/polyring.hpp"

namespace dimerlab {

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail" or "skip"
  std::string detail;

  bool failed() const { return status == "fail"; }
};

// {1/2, 1, 3/2, 2, 3}^3.
inline std::vector<WeightPoint> sign_theorem_weights() {
  const std::vector<BigRational> vals{BigRational(1, 2), BigRational(1), BigRational(3, 2), BigRational(2),
                                      BigRational(3)};
  std::vector<WeightPoint> grid;
  for (const auto& h : vals)
    for (const auto& v : vals)
      for (const auto& d : vals) grid.push_back({h, v, d});
  return grid;
}

// Exact symbolic Pfaffians, by expansion when allowed and by interpolation
// otherwise.
inline std::array<TriPoly, 4> symbolic_pfaffians(const TorusLattice& lat) {
  const PfaffianMethod method =
      lat.vertex_count() <= kExpansionVertexCap ? PfaffianMethod::expansion : PfaffianMethod::interpolation;
  std::array<TriPoly, 4> out;
  for (int i = 1; i <= 4; ++i) out[i - 1] = pfaffian_symbolic(lat, i, method);
  return out;
}

// The part of Pf A2 at zh = 1, zv = 0 with the lowest power of zd, as
// (coefficient, power). Nullopt for the zero polynomial.
inline std::optional<std::pair<BigInt, int>> lowest_zd_term(const TriPoly& p) {
  TriPoly restricted;  // zh -> 1, zv -> 0
  for (const auto& [e, c] : p.terms())
    if (e[1] == 0) restricted.add_term({0, 0, e[2]}, c);
  std::optional<std::pair<BigInt, int>> best;
  for (const auto& [e, c] : restricted.terms())
    if (!best || e[2] < best->second) best = std::pair{c, e[2]};
  return best;
}

// Leading monomials of p at zh = 1 when zv is of order zd^2: the terms
// minimizing 2 Nv + Nd, with that minimum.
struct LeadingClass {
  int weight = 0;
  std::vector<std::pair<Exponent, BigInt>> terms;
};

inline LeadingClass leading_class_zv_zd2(const TriPoly& p) {
  LeadingClass lc;
  lc.weight = -1;
  for (const auto& [e, c] : p.terms()) {
    const int wgt = 2 * e[1] + e[2];
    if (lc.weight < 0 || wgt < lc.weight) {
      lc.weight = wgt;
      lc.terms.clear();
    }
    if (wgt == lc.weight) lc.terms.emplace_back(e, c);
  }
  return lc;
}

inline BigInt int_pow(long base, int exp) {
  BigInt r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

struct VerifyOptions {
  // Largest vertex count for symbolic Pfaffians (odd-n identities, leading
  // terms, exact Pf^2 = det).
  int symbolic_vertex_cap = 64;
  // Largest vertex count for brute-force enumeration.
  int oracle_vertex_cap = 24;
};

namespace detail {

inline std::string size_tag(const TorusLattice& lat) {
  return std::to_string(lat.m()) + "x" + std::to_string(lat.n());
}

}  // namespace detail

inline CheckResult check_face_rule(const TorusLattice& lat) {
  for (int i = 1; i <= 4; ++i)
    if (const int bad = kasteleyn_face_violations(lat, i))
      return {"face_rule", "fail", std::to_string(bad) + " faces with even clockwise count under O" + std::to_string(i)};
  return {"face_rule", "pass", "all " + std::to_string(2 * lat.vertex_count()) + " faces, four orientations"};
}

// Pf A1 < 0 < Pf A2, Pf A3, Pf A4 with exact Pfaffians on the weight grid.
inline CheckResult check_sign_theorem(const TorusLattice& lat) {
  const auto grid = sign_theorem_weights();
  for (const auto& w : grid)
    for (int i = 1; i <= 4; ++i) {
      const BigRational pf = pfaffian_numeric(lat, i, w);
      const bool ok = i == 1 ? pf < 0 : pf > 0;
      if (!ok)
        return {"sign_theorem", "fail",
                "Pf A" + std::to_string(i) + " = " + to_string(pf) + " at (" + to_string(w.h) + "," + to_string(w.v) +
                    "," + to_string(w.d) + ")"};
    }
  return {"sign_theorem", "pass", std::to_string(grid.size()) + " weight points"};
}

// Exact Pfaffians squared against double-product determinants, relative 1e-9.
inline CheckResult check_pf_squared_numeric(const TorusLattice& lat) {
  double worst = 0.0;
  for (const auto& w : sign_theorem_weights())
    for (int i = 1; i <= 4; ++i) {
      const BigRational pf = pfaffian_numeric(lat, i, w);
      const DetResult d = det_double_product(lat.m(), lat.n(), i, w);
      const double lhs = 2.0 * std::log(std::abs(pf.get_d()));
      // Relative error of exp(x) against exp(y) is about |x - y|.
      const double rel = std::abs(std::expm1(d.log_abs - lhs));
      worst = std::max(worst, rel);
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max relative error %.3e", worst);
  return {"pf_squared_det_numeric", worst <= 1e-9 ? "pass" : "fail", buf};
}

inline CheckResult check_pf_squared_symbolic(const TorusLattice& lat, const std::array<TriPoly, 4>& pf) {
  for (int i = 1; i <= 4; ++i) {
    const TriPoly det = interpolate_homogeneous(lat.vertex_count(), [&](const WeightPoint& w) {
      return determinant_exact(build_numeric_matrix(lat, i, w));
    });
    if (!(pf[i - 1] * pf[i - 1] == det))
      return {"pf_squared_det_symbolic", "fail", "Pf A" + std::to_string(i) + "^2 differs from det A" + std::to_string(i)};
  }
  return {"pf_squared_det_symbolic", "pass", "exact polynomial identity, four orientations"};
}

inline CheckResult check_zero_pattern(const TorusLattice& lat) {
  try {
    const auto rows = zero_pattern_check(lat.m(), lat.n());
    return {"zero_pattern", "pass", std::to_string(rows.size()) + " regime rows"};
  } catch (const PropositionViolation& e) {
    return {"zero_pattern", "fail", e.what()};
  }
}

inline CheckResult check_odd_n_identities(const TorusLattice& lat, const std::array<TriPoly, 4>& pf) {
  if (lat.n() % 2 == 0) return {"odd_n_identities", "skip", "n even"};
  if (!(pf[0] + pf[1]).is_zero()) return {"odd_n_identities", "fail", "Pf A1 + Pf A2 != 0"};
  if (!(pf[2] - pf[3]).is_zero()) return {"odd_n_identities", "fail", "Pf A3 - Pf A4 != 0"};
  return {"odd_n_identities", "pass", "Pf A1 = -Pf A2 and Pf A3 = Pf A4"};
}

// m = 0 mod 4, n odd: the lowest zd power of Pf A2 at zh = 1, zv = 0 is
// 2 (m/2)^n zd^n.
inline CheckResult check_leading_pf2(const TorusLattice& lat, const TriPoly& pf2) {
  const int m = lat.m(), n = lat.n();
  if (m % 4 != 0 || n % 2 == 0) return {"leading_term_pf2", "skip", "needs m = 0 mod 4 and n odd"};
  const BigInt expected = 2 * int_pow(m / 2, n);
  const auto low = lowest_zd_term(pf2);
  if (!low) return {"leading_term_pf2", "fail", "Pf A2 vanishes at zv = 0"};
  const std::string got = low->first.get_str() + "*zd^" + std::to_string(low->second);
  if (low->second != n || low->first != expected)
    return {"leading_term_pf2", "fail", "got " + got + ", expected " + expected.get_str() + "*zd^" + std::to_string(n)};
  return {"leading_term_pf2", "pass", got};
}

// m, n = 0 mod 4: with zh = 1 and zv of order zd^2, Pf A1 starts with
// -n^2 (m/2)^n zv^2 zd^(n-2) and nothing else of that order.
inline CheckResult check_leading_pf1(const TorusLattice& lat, const TriPoly& pf1) {
  const int m = lat.m(), n = lat.n();
  if (m % 4 != 0 || n % 4 != 0) return {"leading_term_pf1", "skip", "needs m, n = 0 mod 4"};
  const BigInt expected = -BigInt(n) * n * int_pow(m / 2, n);
  // Collapse zh (set to 1) before looking for the leading class.
  TriPoly at_one;
  for (const auto& [e, c] : pf1.terms()) at_one.add_term({0, e[1], e[2]}, c);
  const LeadingClass lc = leading_class_zv_zd2(at_one);
  const Exponent want{0, 2, n - 2};
  if (lc.terms.size() != 1 || lc.terms[0].first != want || lc.terms[0].second != expected) {
    std::string got;
    for (const auto& [e, c] : lc.terms)
      got += (got.empty() ? "" : " + ") + c.get_str() + "*zv^" + std::to_string(e[1]) + "*zd^" + std::to_string(e[2]);
    return {"leading_term_pf1", "fail", "leading class " + got + ", expected " + expected.get_str() + "*zv^2*zd^" +
                                            std::to_string(n - 2)};
  }
  return {"leading_term_pf1", "pass", expected.get_str() + "*zv^2*zd^" + std::to_string(n - 2)};
}

inline CheckResult check_kasteleyn_identities(const TorusLattice& lat) {
  try {
    const PartitionDecomposition dec = decompose_partition(lat);
    if (!(halve_exact(partition_from_pfaffians(dec.pf)) == dec.z))
      return {"kasteleyn_identities", "fail", "combination of Pfaffians does not reconstruct Z"};
    return {"kasteleyn_identities", "pass", "four identities and Z reconstruction, exact"};
  } catch (const IdentityViolation& e) {
    return {"kasteleyn_identities", "fail", e.what()};
  }
}

inline CheckResult check_excitation_classes(const TorusLattice& lat) {
  const int m = lat.m(), n = lat.n();
  const bool odd_case = m % 4 == 0 && n % 2 == 1;
  const bool even_case = m % 4 == 0 && n % 4 == 0;
  if (!odd_case && !even_case) return {"excitation_classes", "skip", "no class lemma for these residues"};
  const ExcitationReport rep = count_excitation_classes(lat);
  const BigInt half_pow = int_pow(m / 2, n);
  auto fail = [](const std::string& why) { return CheckResult{"excitation_classes", "fail", why}; };
  auto eq = [](long long a, const BigInt& b) { return BigInt(static_cast<long>(a)) == b; };
  if (odd_case) {
    const BigInt expected = m * int_pow(m / 2, n - 1);
    if (!eq(rep.sigma0.count, expected)) return fail("|Sigma_0| = " + std::to_string(rep.sigma0.count));
    if (rep.sigma0.negative[1] != 0) return fail("Sigma_0 has negative signs under O2");
    return {"excitation_classes", "pass", "|Sigma_0| = " + expected.get_str() + ", all +1 under O2"};
  }
  if (!eq(rep.sigma0_1.count, 2 * half_pow) || rep.sigma0_1.positive[0] != 0)
    return fail("Sigma_0^1: count " + std::to_string(rep.sigma0_1.count));
  if (!eq(rep.sigma0_2.count, 2 * half_pow) || rep.sigma0_2.negative[0] != 0)
    return fail("Sigma_0^2: count " + std::to_string(rep.sigma0_2.count));
  if (rep.sigma1.count != 0) return fail("Sigma_1 is not empty");
  if (!eq(rep.sigma2_1.count, BigInt(n) * (n - 1) * half_pow) || rep.sigma2_1.positive[0] != 0)
    return fail("Sigma_2^1: count " + std::to_string(rep.sigma2_1.count));
  if (!eq(rep.sigma2_2.count, BigInt(n) * half_pow) || rep.sigma2_2.positive[0] != 0)
    return fail("Sigma_2^2: count " + std::to_string(rep.sigma2_2.count));
  return {"excitation_classes", "pass",
          "counts " + std::to_string(rep.sigma0_1.count) + ", " + std::to_string(rep.sigma0_2.count) + ", 0, " +
              std::to_string(rep.sigma2_1.count) + ", " + std::to_string(rep.sigma2_2.count)};
}

// The full invariant suite for one torus. Checks that exceed the caps are
// reported as skipped.
inline std::vector<CheckResult> run_verification(const TorusLattice& lat, const VerifyOptions& opt = {}) {
  std::vector<CheckResult> out;
  out.push_back(check_face_rule(lat));
  out.push_back(check_sign_theorem(lat));
  out.push_back(check_pf_squared_numeric(lat));
  out.push_back(check_zero_pattern(lat));
  const int count = lat.vertex_count();
  if (count <= opt.symbolic_vertex_cap) {
    const auto pf = symbolic_pfaffians(lat);
    if (count <= kExpansionVertexCap) out.push_back(check_pf_squared_symbolic(lat, pf));
    else out.push_back({"pf_squared_det_symbolic", "skip", "mn > " + std::to_string(kExpansionVertexCap)});
    out.push_back(check_odd_n_identities(lat, pf));
    out.push_back(check_leading_pf2(lat, pf[1]));
    out.push_back(check_leading_pf1(lat, pf[0]));
  } else {
    for (const char* name : {"pf_squared_det_symbolic", "odd_n_identities", "leading_term_pf2", "leading_term_pf1"})
      out.push_back({name, "skip", "mn > " + std::to_string(opt.symbolic_vertex_cap)});
  }
  if (count <= opt.oracle_vertex_cap) {
    out.push_back(check_kasteleyn_identities(lat));
    out.push_back(check_excitation_classes(lat));
  } else {
    for (const char* name : {"kasteleyn_identities", "excitation_classes"})
      out.push_back({name, "skip", "mn > " + std::to_string(opt.oracle_vertex_cap)});
  }
  return out;
}

}  // namespace dimerlab

#endif  // DIMERLAB_VERIFY_HPP
