#!/usr/bin/env python3
# Copyright 2026 The dimerlab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent numpy baseline for the free energy and finite-size data.

Writes golden/free_energy.json. Run once; the C++ tests read the file.
"""

import json
import math
import pathlib
import sys

import numpy as np


def f_grid(zh, zv, zd, x, y):
  X, Y = np.meshgrid(x, y, indexing="ij")
  s = (zh * np.sin(2 * np.pi * X))**2 + (zv * np.sin(2 * np.pi * Y))**2 \
      + (zd * np.cos(2 * np.pi * (X + Y)))**2
  return 0.5 * np.log(s)


def free_energy(zh, zv, zd, grid):
  # Plain full-period rectangle rule, processed in row blocks.
  total = 0.0
  y = np.arange(grid) / grid
  for start in range(0, grid, 512):
    x = np.arange(start, min(grid, start + 512)) / grid
    total += math.fsum(f_grid(zh, zv, zd, x, y).ravel())
  return math.log(2) + total / grid**2


ALPHA_BETA = {1: (0.0, 0.0), 2: (0.0, 0.5), 3: (0.5, 0.0), 4: (0.5, 0.5)}


def log_det(m, n, i, zh, zv, zd):
  # Full-range product form: ln det = mn ln 2 + sum over j<m, k<n of f.
  a, b = ALPHA_BETA[i]
  x = (np.arange(m) + a) / m
  y = (np.arange(n) + b) / n
  return m * n * math.log(2) + math.fsum(f_grid(zh, zv, zd, x, y).ravel())


def main():
  out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "golden/free_energy.json")
  F = free_energy(1.0, 1.0, 1.0, 8192)
  F2 = free_energy(1.0, 1.0, 1.0, 4096)
  rows = []
  for s in (8, 16, 32, 64):
    for i in (1, 4):
      ld = log_det(s, s, i, 1.0, 1.0, 1.0) / (s * s)
      rows.append({"m": s, "n": s, "orientation": i, "log_det_per_site": ld,
                   "deviation": abs(ld - F)})
  ratios = []
  for s in (8, 12):
    acc = sum(math.exp(0.5 * log_det(s, s, i, 1.0, 1.0, 1.0) - s * s * F / 2) for i in (1, 2, 3, 4))
    ratios.append({"m": s, "n": s, "ratio": acc / 4})
  ratios.insert(0, {"m": 4, "n": 4, "ratio": 1920 / (2 * math.exp(8 * F))})
  data = {
      "weights": ["1", "1", "1"],
      "grid": 8192,
      "F": F,
      "F_text": f"{F:.15f}",
      "F_grid4096_difference": abs(F - F2),
      "convergence": rows,
      "partition_ratio": ratios,
  }
  out.write_text(json.dumps(data, indent=2) + "\n")
  print(json.dumps(data, indent=2))


if __name__ == "__main__":
  main()
