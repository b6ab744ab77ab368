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

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP) and trivariate integer polynomials in the dimer weights zh, zv, zd.

#ifndef DIMERLAB_POLYRING_HPP
#define DIMERLAB_POLYRING_HPP

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dimerlab/errors.hpp"
#include "dimerlab/parallel.hpp"

namespace dimerlab {

using BigInt = mpz_class;
// mpq_class keeps numerator/denominator reduced with a positive denominator
// after every arithmetic operation.
using BigRational = mpq_class;

// A weight assignment (zh, zv, zd).
struct WeightPoint {
  BigRational h{0}, v{0}, d{0};
};

// num / den in canonical form. mpq_class(num, den) alone does not reduce.
inline BigRational make_rational(long num, long den = 1) {
  if (den == 0) throw ParseError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or "-p/q" into a canonical rational.
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  auto check_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num) || !check_int(den)) throw ParseError("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  const BigInt numerator(num), denominator(den);
  if (denominator == 0) throw ParseError("zero denominator in '" + s + "'");
  BigRational q{numerator, denominator};
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigRational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

// Exponents of (zh, zv, zd).
using Exponent = std::array<int, 3>;

// Graded lexicographic order, largest first: higher total degree precedes
// lower, ties broken lexicographically with zh > zv > zd.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = a[0] + a[1] + a[2];
    const int db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

class TriPoly {
 public:
  using TermMap = std::map<Exponent, BigInt, GrlexDescending>;

  TriPoly() = default;
  TriPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Exponent{0, 0, 0}, BigInt(c));
  }
  explicit TriPoly(const BigInt& c) {
    if (c != 0) terms_.emplace(Exponent{0, 0, 0}, c);
  }

  static TriPoly monomial(const BigInt& coeff, int a, int b, int c) {
    TriPoly p;
    if (coeff != 0) p.terms_.emplace(Exponent{a, b, c}, coeff);
    return p;
  }
  static TriPoly zh() { return monomial(1, 1, 0, 0); }
  static TriPoly zv() { return monomial(1, 0, 1, 0); }
  static TriPoly zd() { return monomial(1, 0, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // Total degree of the leading term; -1 for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return e[0] + e[1] + e[2];
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_)
      if (e[0] + e[1] + e[2] != d) return false;
    return true;
  }

  void add_term(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TriPoly& operator+=(const TriPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TriPoly& operator-=(const TriPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  TriPoly& operator*=(const TriPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator-(const TriPoly& a) {
    TriPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  TriPoly pow(unsigned k) const {
    TriPoly r(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  // Exact substitution zh <- p.h, zv <- p.v, zd <- p.d.
  BigRational eval(const WeightPoint& p) const {
    BigRational acc(0);
    for (const auto& [e, c] : terms_) {
      BigRational t(c);
      t *= pow_rational(p.h, e[0]);
      t *= pow_rational(p.v, e[1]);
      t *= pow_rational(p.d, e[2]);
      acc += t;
    }
    return acc;
  }

  // Canonical text: terms in descending graded-lex order, each written as
  // "<coeff>*zh^a*zv^b*zd^c", joined by " + ". The zero polynomial is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += c.get_str();
      out += "*zh^" + std::to_string(e[0]) + "*zv^" + std::to_string(e[1]) + "*zd^" +
             std::to_string(e[2]);
    }
    return out;
  }

  // Inverse of to_string.
  static TriPoly parse(std::string_view text) {
    TriPoly p;
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s == "0") return p;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find(" + ", pos);
      std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      p.add_term_checked(parse_term(term));
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    return p;
  }

  friend std::ostream& operator<<(std::ostream& os, const TriPoly& p) { return os << p.to_string(); }

 private:
  static BigRational pow_rational(const BigRational& x, int k) {
    BigRational r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
  }

  void add_term_checked(const std::pair<Exponent, BigInt>& t) {
    if (t.second == 0) throw ParseError("zero coefficient in canonical text");
    if (terms_.count(t.first)) throw ParseError("repeated monomial in canonical text");
    terms_.emplace(t.first, t.second);
  }

  static std::pair<Exponent, BigInt> parse_term(const std::string& term) {
    static const char* const kNames[3] = {"*zh^", "*zv^", "*zd^"};
    std::size_t pos = term.find('*');
    if (pos == std::string::npos) throw ParseError("malformed term '" + term + "'");
    BigInt coeff;
    if (coeff.set_str(term.substr(0, pos), 10) != 0) throw ParseError("bad coefficient in '" + term + "'");
    Exponent e{};
    for (int v = 0; v < 3; ++v) {
      if (term.compare(pos, 4, kNames[v]) != 0) throw ParseError("malformed term '" + term + "'");
      pos += 4;
      std::size_t end = pos;
      while (end < term.size() && std::isdigit(static_cast<unsigned char>(term[end]))) ++end;
      if (end == pos) throw ParseError("missing exponent in '" + term + "'");
      e[v] = std::stoi(term.substr(pos, end - pos));
      pos = end;
    }
    if (pos != term.size()) throw ParseError("trailing text in '" + term + "'");
    return {e, coeff};
  }

  TermMap terms_;
};

namespace detail {

// Coefficients c_0..c_d of the unique polynomial of degree <= d through
// (nodes[i], values[i]). Newton divided differences, then expansion of the
// nested Newton form into the monomial basis.
inline std::vector<BigRational> solve_vandermonde(const std::vector<BigRational>& nodes,
                                                  std::vector<BigRational> values) {
  const std::size_t count = nodes.size();
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (nodes[i] == nodes[j]) throw SingularSystem("interpolation nodes are not distinct");
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i) {
      values[i] = (values[i] - values[i - 1]) / (nodes[i] - nodes[i - level]);
      if (i == level) break;
    }
  std::vector<BigRational> coeffs(count, BigRational(0));
  for (std::size_t k = count; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + values[k]
    for (std::size_t j = count - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - nodes[k] * coeffs[j];
    coeffs[0] = values[k] - nodes[k] * coeffs[0];
  }
  return coeffs;
}

}  // namespace detail

using HomogeneousEvaluator = std::function<BigRational(const WeightPoint&)>;

// Reconstructs the homogeneous polynomial of total degree `degree` from point
// evaluations. The evaluator is sampled at zh = 1 on the tensor grid
// nodes x nodes for (zv, zd); the bivariate Vandermonde system is solved
// exactly one variable at a time and the result re-homogenized with zh.
inline TriPoly interpolate_homogeneous(int degree, const HomogeneousEvaluator& evaluator,
                                       std::vector<BigRational> nodes = {}) {
  if (degree < 0) throw InterpolationMismatch("negative degree");
  const std::size_t count = static_cast<std::size_t>(degree) + 1;
  if (nodes.empty())
    for (std::size_t i = 0; i < count; ++i) nodes.emplace_back(static_cast<long>(i + 1));
  if (nodes.size() != count) throw SingularSystem("need degree + 1 interpolation nodes");
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (nodes[i] == nodes[j]) throw SingularSystem("interpolation nodes are not distinct");

  // samples[iv * count + id] = evaluator(1, nodes[iv], nodes[id])
  std::vector<BigRational> samples(count * count);
  parallel_for(count * count, [&](std::size_t idx) {
    const std::size_t iv = idx / count, id = idx % count;
    samples[idx] = evaluator(WeightPoint{BigRational(1), nodes[iv], nodes[id]});
  });

  // For each zd node, interpolate in zv: partial[id][b].
  std::vector<std::vector<BigRational>> partial(count);
  for (std::size_t id = 0; id < count; ++id) {
    std::vector<BigRational> column(count);
    for (std::size_t iv = 0; iv < count; ++iv) column[iv] = samples[iv * count + id];
    partial[id] = detail::solve_vandermonde(nodes, std::move(column));
  }
  TriPoly result;
  for (std::size_t b = 0; b < count; ++b) {
    std::vector<BigRational> column(count);
    for (std::size_t id = 0; id < count; ++id) column[id] = partial[id][b];
    const auto coeffs = detail::solve_vandermonde(nodes, std::move(column));
    for (std::size_t c = 0; c < count; ++c) {
      if (coeffs[c] == 0) continue;
      if (coeffs[c].get_den() != 1)
        throw InterpolationMismatch("non-integer coefficient " + coeffs[c].get_str());
      const int a = degree - static_cast<int>(b) - static_cast<int>(c);
      if (a < 0) throw InterpolationMismatch("evaluator exceeds the announced degree");
      result.add_term({a, static_cast<int>(b), static_cast<int>(c)}, coeffs[c].get_num());
    }
  }
  return result;
}

}  // namespace dimerlab

#endif  // DIMERLAB_POLYRING_HPP
