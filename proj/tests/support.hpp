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


// Helpers shared by the unit tests and the acceptance binary.

#ifndef DIMERLAB_TESTS_SUPPORT_HPP
#define DIMERLAB_TESTS_SUPPORT_HPP

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimerlab/polyring.hpp"
#include "json.hpp"

namespace dimerlab::testing {

inline std::string golden_path(const std::string& name) { return std::string(DIMERLAB_GOLDEN_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The four reference Pfaffians Pf A1 .. Pf A4 for an m x n torus.
inline std::array<TriPoly, 4> golden_pfaffians(int m, int n) {
  std::ifstream in(golden_path("pfaffians_" + std::to_string(m) + "x" + std::to_string(n) + ".txt"));
  if (!in) throw std::runtime_error("missing golden Pfaffians for " + std::to_string(m) + "x" + std::to_string(n));
  std::array<TriPoly, 4> out;
  std::string line;
  for (auto& p : out) {
    if (!std::getline(in, line)) throw std::runtime_error("truncated golden file");
    p = TriPoly::parse(line);
  }
  return out;
}

inline nlohmann::json golden_json(const std::string& name) { return nlohmann::json::parse(read_file(golden_path(name))); }

}  // namespace dimerlab::testing

#endif  // DIMERLAB_TESTS_SUPPORT_HPP
