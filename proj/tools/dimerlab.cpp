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


// dimerlab command-line front end.
//
// Exit codes: 0 success, 2 usage or invalid input, 3 size limit, 4 a
// verification check or identity failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dimerlab/dimerlab.hpp"
#include "json.hpp"

namespace {

using dimerlab::BigRational;
using dimerlab::TorusLattice;
using dimerlab::TriPoly;
using dimerlab::WeightPoint;
using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;
constexpr int kExitVerify = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunSpec {
  std::string command;
  int m = 0;
  int n = 0;
  int orientation = 0;  // 0 = all four
  std::vector<std::string> weights;
  bool symbolic = false;
  std::string method = "auto";
  std::string format = "text";
  std::string output;
  std::string sizes = "8x8,16x16,32x32,64x64";
  int grid = 64;
  std::string table = "convergence";
  int oracle_cap = 24;
  int symbolic_cap = 64;
};

// What a command produces, in all three renderings.
struct Report {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text;
  int exit_code = 0;
};

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

WeightPoint parse_weights(const std::vector<std::string>& w, bool strictly_positive) {
  if (w.size() != 3) throw UsageError("--weights takes exactly three values: zh zv zd");
  WeightPoint p;
  try {
    p = {dimerlab::parse_rational(w[0]), dimerlab::parse_rational(w[1]), dimerlab::parse_rational(w[2])};
  } catch (const dimerlab::ParseError& e) {
    throw UsageError(e.what());
  }
  if (p.h < 0 || p.v < 0 || p.d < 0) throw UsageError("weights must be nonnegative");
  if (strictly_positive && (p.h == 0 || p.v == 0 || p.d == 0))
    throw UsageError("weights must be strictly positive for this command");
  return p;
}

Json weights_json(const WeightPoint& w) {
  return Json::array({dimerlab::to_string(w.h), dimerlab::to_string(w.v), dimerlab::to_string(w.d)});
}

std::vector<int> orientations(const RunSpec& spec) {
  if (spec.orientation == 0) return {1, 2, 3, 4};
  if (spec.orientation < 1 || spec.orientation > 4) throw UsageError("--orientation must be 0..4");
  return {spec.orientation};
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument(item);
      std::size_t used_m = 0, used_n = 0;
      const int m = std::stoi(item.substr(0, x), &used_m);
      const int n = std::stoi(item.substr(x + 1), &used_n);
      if (used_m != x || used_n != item.size() - x - 1) throw std::invalid_argument(item);
      out.emplace_back(m, n);
    } catch (const std::logic_error&) {
      throw UsageError("malformed size '" + item + "' (expected MxN)");
    }
  }
  if (out.empty()) throw UsageError("--sizes is empty");
  return out;
}

int expected_sign(int i) { return i == 1 ? -1 : 1; }

int sign_of(const BigRational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

dimerlab::PfaffianMethod pick_method(const RunSpec& spec, const TorusLattice& lat) {
  if (spec.method == "expansion") return dimerlab::PfaffianMethod::expansion;
  if (spec.method == "interpolation") return dimerlab::PfaffianMethod::interpolation;
  if (spec.method != "auto") throw UsageError("--method must be auto, expansion or interpolation");
  return lat.vertex_count() <= dimerlab::kExpansionVertexCap ? dimerlab::PfaffianMethod::expansion
                                                             : dimerlab::PfaffianMethod::interpolation;
}

const char* method_name(dimerlab::PfaffianMethod m) {
  return m == dimerlab::PfaffianMethod::expansion ? "expansion" : "interpolation";
}

Report cmd_pfaffians(const RunSpec& spec) {
  const TorusLattice lat(spec.m, spec.n);
  Report r;
  r.json["command"] = "pfaffians";
  r.json["m"] = spec.m;
  r.json["n"] = spec.n;
  r.json["mode"] = spec.symbolic ? "symbolic" : "numeric";
  WeightPoint w{1, 1, 1};
  bool applicable = true;
  if (spec.symbolic) {
    r.json["method"] = method_name(pick_method(spec, lat));
  } else {
    w = parse_weights(spec.weights.empty() ? std::vector<std::string>{"1", "1", "1"} : spec.weights, false);
    r.json["weights"] = weights_json(w);
    applicable = w.h > 0 && w.v > 0 && w.d > 0;
  }
  r.csv_header = {"m", "n", "orientation", "mode", "value", "sign", "expected_sign"};
  Json list = Json::array();
  bool consistent = true;
  for (int i : orientations(spec)) {
    std::string value;
    int sign = 0;
    if (spec.symbolic) {
      const TriPoly p = dimerlab::pfaffian_symbolic(lat, i, pick_method(spec, lat));
      value = p.to_string();
      sign = sign_of(p.eval({1, 1, 1}));  // sign at unit weights
    } else {
      const BigRational q = dimerlab::pfaffian_numeric(lat, i, w);
      value = dimerlab::to_string(q);
      sign = sign_of(q);
    }
    if (applicable && sign != expected_sign(i)) consistent = false;
    list.push_back({{"orientation", i}, {"value", value}, {"sign", sign}, {"expected_sign", expected_sign(i)}});
    r.csv_rows.push_back({std::to_string(spec.m), std::to_string(spec.n), std::to_string(i),
                          r.json["mode"].get<std::string>(), value, std::to_string(sign),
                          std::to_string(expected_sign(i))});
    r.text.push_back("Pf A" + std::to_string(i) + " = " + value);
  }
  r.json["pfaffians"] = list;
  const std::string verdict = !applicable ? "not-applicable" : (consistent ? "consistent" : "violated");
  r.json["sign_theorem"] = verdict;
  r.json["status"] = verdict == "violated" ? "fail" : "pass";
  r.text.push_back("sign theorem: " + verdict);
  if (verdict == "violated") r.exit_code = kExitVerify;
  return r;
}

Report cmd_partition(const RunSpec& spec) {
  const TorusLattice lat(spec.m, spec.n);
  if (spec.oracle_cap > dimerlab::kEnumerationVertexCap)
    throw UsageError("--oracle-max-vertices is at most " + std::to_string(dimerlab::kEnumerationVertexCap));
  Report r;
  r.json["command"] = "partition";
  r.json["m"] = spec.m;
  r.json["n"] = spec.n;
  r.json["mode"] = spec.symbolic ? "symbolic" : "numeric";
  const bool use_oracle = lat.vertex_count() <= spec.oracle_cap;

  // Everything is computed as exact text so both modes share the rendering.
  std::array<std::string, 4> pf_text, class_text, residual_text;
  std::array<std::string, 4> oracle_class_text;
  std::string z_text, oracle_z_text;
  bool class_eq_a = false, class_eq_b = false;
  bool mismatch = false;
  if (spec.symbolic) {
    std::array<TriPoly, 4> pf;
    for (int i = 1; i <= 4; ++i) pf[i - 1] = dimerlab::pfaffian_symbolic(lat, i, pick_method(spec, lat));
    auto classes = dimerlab::classes_from_pfaffians(pf);
    const TriPoly z = dimerlab::halve_exact(dimerlab::partition_from_pfaffians(pf));
    std::array<TriPoly, 4> used = classes;
    if (use_oracle) {
      const auto dec = dimerlab::decompose_partition(lat);
      mismatch = !(dec.z == z) || dec.z_class != classes;
      used = dec.z_class;
      oracle_z_text = dec.z.to_string();
      for (int c = 0; c < 4; ++c) oracle_class_text[c] = dec.z_class[c].to_string();
    }
    for (int i = 1; i <= 4; ++i) {
      pf_text[i - 1] = pf[i - 1].to_string();
      residual_text[i - 1] = (pf[i - 1] - dimerlab::kasteleyn_combination(used, i)).to_string();
    }
    for (int c = 0; c < 4; ++c) class_text[c] = classes[c].to_string();
    z_text = z.to_string();
    class_eq_a = used[0] == used[1];
    class_eq_b = used[2] == used[3];
  } else {
    const WeightPoint w =
        parse_weights(spec.weights.empty() ? std::vector<std::string>{"1", "1", "1"} : spec.weights, false);
    r.json["weights"] = weights_json(w);
    std::array<BigRational, 4> pf;
    for (int i = 1; i <= 4; ++i) pf[i - 1] = dimerlab::pfaffian_numeric(lat, i, w);
    const auto classes = dimerlab::classes_from_pfaffians(pf);
    const BigRational z = dimerlab::partition_from_pfaffians(pf) / 2;
    std::array<BigRational, 4> used = classes;
    if (use_oracle) {
      const auto dec = dimerlab::decompose_partition(lat);
      const BigRational oz = dec.z.eval(w);
      oracle_z_text = dimerlab::to_string(oz);
      for (int c = 0; c < 4; ++c) {
        used[c] = dec.z_class[c].eval(w);
        oracle_class_text[c] = dimerlab::to_string(used[c]);
        mismatch = mismatch || used[c] != classes[c];
      }
      mismatch = mismatch || oz != z;
    }
    for (int i = 1; i <= 4; ++i) {
      pf_text[i - 1] = dimerlab::to_string(pf[i - 1]);
      residual_text[i - 1] = dimerlab::to_string(pf[i - 1] - dimerlab::kasteleyn_combination(used, i));
    }
    for (int c = 0; c < 4; ++c) class_text[c] = dimerlab::to_string(classes[c]);
    z_text = dimerlab::to_string(z);
    class_eq_a = used[0] == used[1];
    class_eq_b = used[2] == used[3];
  }

  static const char* const kClassNames[4] = {"00", "10", "01", "11"};
  r.json["z"] = z_text;
  Json classes = Json::object();
  for (int c = 0; c < 4; ++c) classes[kClassNames[c]] = class_text[c];
  r.json["classes"] = classes;
  r.json["pfaffians"] = Json(std::vector<std::string>(pf_text.begin(), pf_text.end()));
  if (use_oracle) {
    Json oc = Json::object();
    for (int c = 0; c < 4; ++c) oc[kClassNames[c]] = oracle_class_text[c];
    r.json["oracle"] = {{"z", oracle_z_text}, {"classes", oc}};
  } else {
    r.json["oracle"] = nullptr;
  }
  r.json["residual_source"] = use_oracle ? "oracle" : "linear-solve";
  r.json["identity_residuals"] = Json(std::vector<std::string>(residual_text.begin(), residual_text.end()));
  bool residual_bad = false;
  for (const auto& s : residual_text) residual_bad = residual_bad || s != "0";
  if (spec.n % 2 == 1)
    r.json["class_equalities"] = {{"z00_equals_z10", class_eq_a}, {"z01_equals_z11", class_eq_b}};
  const bool fail = mismatch || residual_bad;
  r.json["status"] = fail ? "fail" : "pass";

  r.csv_header = {"m", "n", "quantity", "value"};
  auto row = [&](const std::string& q, const std::string& v) {
    r.csv_rows.push_back({std::to_string(spec.m), std::to_string(spec.n), q, v});
    r.text.push_back(q + " = " + v);
  };
  row("Z", z_text);
  for (int c = 0; c < 4; ++c) row(std::string("Z") + kClassNames[c], class_text[c]);
  for (int i = 1; i <= 4; ++i) row("PfA" + std::to_string(i), pf_text[i - 1]);
  for (int i = 1; i <= 4; ++i) row("residual" + std::to_string(i), residual_text[i - 1]);
  if (spec.n % 2 == 1) {
    r.text.push_back(std::string("Z00 == Z10: ") + (class_eq_a ? "yes" : "no"));
    r.text.push_back(std::string("Z01 == Z11: ") + (class_eq_b ? "yes" : "no"));
  }
  if (use_oracle) r.text.push_back(std::string("oracle: ") + (mismatch ? "MISMATCH" : "agrees"));
  if (fail) {
    r.exit_code = kExitVerify;
    std::cerr << "identity check failed" << (mismatch ? ": oracle and linear solve disagree" : "") << "\n";
  }
  return r;
}

Report cmd_verify(const RunSpec& spec) {
  const TorusLattice lat(spec.m, spec.n);
  dimerlab::VerifyOptions opt;
  opt.oracle_vertex_cap = std::min(spec.oracle_cap, dimerlab::kEnumerationVertexCap);
  opt.symbolic_vertex_cap = spec.symbolic_cap;
  const auto checks = dimerlab::run_verification(lat, opt);
  Report r;
  r.json["command"] = "verify";
  r.json["m"] = spec.m;
  r.json["n"] = spec.n;
  Json list = Json::array();
  r.csv_header = {"m", "n", "check", "status", "detail"};
  std::string first_failure;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    r.csv_rows.push_back({std::to_string(spec.m), std::to_string(spec.n), c.name, c.status, c.detail});
    std::string tag = c.status == "pass" ? "PASS" : (c.status == "skip" ? "SKIP" : "FAIL");
    r.text.push_back(tag + " " + c.name + ": " + c.detail);
    if (c.failed() && first_failure.empty()) first_failure = c.name;
  }
  r.json["checks"] = list;
  r.json["status"] = first_failure.empty() ? "pass" : "fail";
  if (!first_failure.empty()) {
    r.json["failed_check"] = first_failure;
    r.text.push_back("FAIL " + first_failure);
    std::cerr << "verification failed: " << first_failure << "\n";
    r.exit_code = kExitVerify;
  } else {
    r.text.push_back("PASS");
  }
  return r;
}

Report cmd_free_energy(const RunSpec& spec) {
  const WeightPoint w = parse_weights(spec.weights.empty() ? std::vector<std::string>{"1", "1", "1"} : spec.weights, true);
  if (spec.grid < 8) throw UsageError("--grid must be at least 8");
  const auto fe = dimerlab::free_energy(w, spec.grid);
  char text[64];
  std::snprintf(text, sizeof text, "%.15f", fe.F);
  Report r;
  r.json["command"] = "free-energy";
  r.json["weights"] = weights_json(w);
  r.json["F"] = fe.F;
  r.json["F_text"] = text;
  r.json["grid"] = fe.grid;
  r.json["converged"] = fe.converged;
  r.json["last_change"] = fe.last_change;
  r.json["status"] = "pass";
  r.csv_header = {"zh", "zv", "zd", "grid", "F"};
  r.csv_rows.push_back(
      {dimerlab::to_string(w.h), dimerlab::to_string(w.v), dimerlab::to_string(w.d), std::to_string(fe.grid), text});
  r.text.push_back(std::string("F = ") + text + " (grid " + std::to_string(fe.grid) +
                   (fe.converged ? ", converged)" : ", not converged)"));
  return r;
}

Report cmd_asymptotics(const RunSpec& spec) {
  const WeightPoint w = parse_weights(spec.weights.empty() ? std::vector<std::string>{"1", "1", "1"} : spec.weights, true);
  if (spec.table != "convergence" && spec.table != "ratio") throw UsageError("--table must be convergence or ratio");
  const auto sizes = parse_sizes(spec.sizes);
  for (const auto& [m, n] : sizes) TorusLattice validate(m, n);
  const auto fe = dimerlab::free_energy(w, spec.grid);
  Report r;
  r.json["command"] = "asymptotics";
  r.json["weights"] = weights_json(w);
  r.json["F"] = fe.F;
  r.json["grid"] = fe.grid;
  Json tables = Json::array();
  if (spec.table == "convergence") r.csv_header = {"m", "n", "orientation", "log_det_per_site", "deviation"};
  char line[160];
  std::snprintf(line, sizeof line, "F = %.15f", fe.F);
  r.text.push_back(line);
  bool shrinking = true;
  for (int i : orientations(spec)) {
    const auto t = dimerlab::convergence_table(w, sizes, i, &fe);
    Json rows = Json::array();
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
      const auto& row = t.rows[k];
      rows.push_back({{"m", row.m},
                      {"n", row.n},
                      {"orientation", row.orientation},
                      {"log_det_per_site", row.log_det_per_site},
                      {"deviation", row.deviation}});
      if (spec.table == "convergence")
        r.csv_rows.push_back({std::to_string(row.m), std::to_string(row.n), std::to_string(i),
                              fmt_double(row.log_det_per_site), fmt_double(row.deviation)});
      std::snprintf(line, sizeof line, "A%d %dx%d  log det / mn = %.15f  deviation = %.3e", i, row.m, row.n,
                    row.log_det_per_site, row.deviation);
      r.text.push_back(line);
      if (k > 0 && row.deviation > dimerlab::kDeviationNoiseFloor && row.deviation >= t.rows[k - 1].deviation)
        shrinking = false;
    }
    Json entry = {{"orientation", i}, {"rows", rows}, {"fit_points", t.fit.points}};
    if (t.fit.points >= 2) {
      entry["fitted_slope"] = t.fit.slope;
      entry["decay_constant"] = t.decay_constant();
      std::snprintf(line, sizeof line, "A%d fitted slope %.6f (c = %.6f, %d points)", i, t.fit.slope,
                    t.decay_constant(), t.fit.points);
    } else {
      entry["fitted_slope"] = nullptr;
      entry["decay_constant"] = nullptr;
      std::snprintf(line, sizeof line, "A%d fit needs two deviations above the noise floor", i);
    }
    r.text.push_back(line);
    tables.push_back(entry);
  }
  r.json["convergence"] = tables;
  const auto ratio = dimerlab::asymptotic_partition_check(w, sizes, &fe);
  Json ratios = Json::array();
  if (spec.table == "ratio") r.csv_header = {"m", "n", "method", "log_z", "ratio"};
  for (const auto& row : ratio.rows) {
    ratios.push_back({{"m", row.m}, {"n", row.n}, {"method", row.method}, {"log_z", row.log_z}, {"ratio", row.ratio}});
    if (spec.table == "ratio")
      r.csv_rows.push_back({std::to_string(row.m), std::to_string(row.n), row.method, fmt_double(row.log_z),
                            fmt_double(row.ratio)});
    std::snprintf(line, sizeof line, "%dx%d  Z / (2 exp(mnF/2)) = %.15f  (%s)", row.m, row.n, row.ratio,
                  row.method.c_str());
    r.text.push_back(line);
  }
  r.json["partition_ratio"] = ratios;
  r.json["trend"] = shrinking ? "shrinking" : "not-shrinking";
  r.json["status"] = "pass";
  return r;
}

// One JSON object per line; written straight to the stream.
int cmd_enumerate(const RunSpec& spec, std::ostream& out) {
  const TorusLattice lat(spec.m, spec.n);
  dimerlab::enumerate_matchings(lat, [&](const dimerlab::MatchingView& v) {
    Json pairs = Json::array();
    for (const auto& [a, b] : v.pairs) pairs.push_back({a + 1, b + 1});
    Json rec = {{"pairs", pairs},
                {"Nh", v.counts[0]},
                {"Nv", v.counts[1]},
                {"Nd", v.counts[2]},
                {"class", {{"r", v.homology.r}, {"s", v.homology.s}}},
                {"signs", {v.sign[0], v.sign[1], v.sign[2], v.sign[3]}}};
    out << rec.dump() << '\n';
  });
  return 0;
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.json.dump(2) << '\n';
  } else if (format == "csv") {
    for (std::size_t k = 0; k < r.csv_header.size(); ++k) out << (k ? "," : "") << r.csv_header[k];
    out << '\n';
    for (const auto& row : r.csv_rows) {
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_field(row[k]);
      out << '\n';
    }
  } else {
    for (const auto& line : r.text) out << line << '\n';
  }
}

int run(const RunSpec& spec) {
  std::ofstream file;
  if (!spec.output.empty()) {
    file.open(spec.output);
    if (!file) throw UsageError("cannot open output file " + spec.output);
  }
  std::ostream& out = spec.output.empty() ? std::cout : file;
  if (spec.command == "enumerate") return cmd_enumerate(spec, out);
  Report r;
  if (spec.command == "pfaffians") r = cmd_pfaffians(spec);
  else if (spec.command == "partition") r = cmd_partition(spec);
  else if (spec.command == "verify") r = cmd_verify(spec);
  else if (spec.command == "free-energy") r = cmd_free_energy(spec);
  else if (spec.command == "asymptotics") r = cmd_asymptotics(spec);
  emit(r, spec.format, out);
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimerlab: Pfaffians, partition functions and asymptotics of dimers on the triangular torus"};
  app.require_subcommand(1);
  RunSpec spec;

  auto add_size = [&](CLI::App* sub) {
    sub->add_option("--m", spec.m, "columns (even, >= 4)")->required();
    sub->add_option("--n", spec.n, "rows (>= 3)")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", spec.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", spec.output, "write to this file instead of stdout");
  };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights", spec.weights, "zh zv zd as integers or p/q")->expected(3);
  };

  auto* pf = app.add_subcommand("pfaffians", "the four Kasteleyn Pfaffians");
  add_size(pf);
  add_common(pf);
  add_weights(pf);
  pf->add_flag("--symbolic", spec.symbolic, "exact polynomials instead of values");
  pf->add_option("--method", spec.method, "auto, expansion or interpolation");
  pf->add_option("--orientation", spec.orientation, "1..4, or 0 for all");

  auto* part = app.add_subcommand("partition", "Z and the homology-class partition functions");
  add_size(part);
  add_common(part);
  add_weights(part);
  part->add_flag("--symbolic", spec.symbolic, "exact polynomials instead of values");
  part->add_option("--method", spec.method, "auto, expansion or interpolation");
  part->add_option("--oracle-max-vertices", spec.oracle_cap, "enumerate configurations up to this mn");

  auto* ver = app.add_subcommand("verify", "run the invariant suite for one torus");
  add_size(ver);
  add_common(ver);
  ver->add_option("--oracle-max-vertices", spec.oracle_cap, "enumerate configurations up to this mn");
  ver->add_option("--symbolic-max-vertices", spec.symbolic_cap, "symbolic checks up to this mn");

  auto* fe = app.add_subcommand("free-energy", "F = ln 2 + integral of f by quadrature");
  add_common(fe);
  add_weights(fe);
  fe->add_option("--grid", spec.grid, "starting quadrature grid (doubled to convergence)");

  auto* as = app.add_subcommand("asymptotics", "convergence of log det A_i and Z to the free energy");
  add_common(as);
  add_weights(as);
  as->add_option("--sizes", spec.sizes, "comma-separated MxN list");
  int asymptotics_orientation = 4;
  as->add_option("--orientation", asymptotics_orientation, "1..4, or 0 for all (default 4)");
  as->add_option("--grid", spec.grid, "starting quadrature grid");
  as->add_option("--table", spec.table, "CSV table: convergence or ratio");

  auto* en = app.add_subcommand("enumerate", "stream every dimer configuration as NDJSON");
  add_size(en);
  en->add_option("--output", spec.output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  spec.command = app.get_subcommands().front()->get_name();
  if (spec.command == "asymptotics") spec.orientation = asymptotics_orientation;

  try {
    return run(spec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dimerlab::InvalidDimensions& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dimerlab::NonPositiveWeights& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dimerlab::SizeLimit& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitSize;
  } catch (const dimerlab::IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kExitVerify;
  } catch (const dimerlab::PropositionViolation& e) {
    std::cerr << "proposition violation: " << e.what() << "\n";
    return kExitVerify;
  } catch (const dimerlab::InterpolationMismatch& e) {
    std::cerr << "interpolation mismatch: " << e.what() << "\n";
    return kExitVerify;
  }
}
