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
"""Expands the reference factored Pfaffians into canonical text.

Writes golden/pfaffians_<m>x<n>.txt: four lines, Pf A_1 .. Pf A_4, in the
TriPoly canonical form (descending graded-lex, zh > zv > zd).
"""

import pathlib
import sys

import sympy as sp

zh, zv, zd = sp.symbols("zh zv zd")
h, v, d = zh**2, zv**2, zd**2

FACTORED = {
    (4, 3): [
        -4 * zh * zd * (3 * v + d) * (4 * h + 3 * v + 3 * d),
        4 * zh * zd * (3 * v + d) * (4 * h + 3 * v + 3 * d),
        2 * (h + d) * ((2 * h + 3 * v) * (2 * h + 3 * v + 4 * d) + d**2),
        2 * (h + d) * ((2 * h + 3 * v) * (2 * h + 3 * v + 4 * d) + d**2),
    ],
    # The reference list labels the last entry A3 a second time; it is A4.
    (4, 4): [
        -256 * h * v * d * (h + v + d),
        16 * (v + d)**2 * (2 * h + v + d)**2,
        16 * (v + d)**2 * (h + 2 * v + d)**2,
        16 * (v + d)**2 * (h + v + 2 * d)**2,
    ],
    (4, 6): [
        -16 * h * d * (4 * h + 3 * v + 3 * d)**2 * (3 * v + d)**2,
        16 * v * (4 * h + v + d)**2 * (h + v + d) * (v + 3 * d)**2,
        4 * (d + h)**2 * (d**2 + 4 * d * (2 * h + 3 * v) + (2 * h + 3 * v)**2)**2,
        4 * (d + h + 2 * v)**2 * (d**2 + 8 * d * h + 4 * h**2 + 4 * d * v + 4 * h * v + v**2)**2,
    ],
    (4, 8): [
        -4096 * d * h * v * (d + v)**2 * (d + h + v) * (d + 2 * h + v)**2,
        16 * (d**2 + 6 * d * v + v**2)**2
        * (d**2 + 8 * h**2 + 8 * h * v + v**2 + 2 * d * (4 * h + v))**2,
        256 * (d + h)**2 * (h + v)**2 * (2 * d + h + v)**2 * (d + h + 2 * v)**2,
        16 * (d**2 + 2 * h**2 + 4 * h * v + v**2 + 2 * d * (2 * h + v))**2
        * (d**2 + 2 * h**2 + 4 * h * v + v**2 + d * (4 * h + 6 * v))**2,
    ],
    (6, 6): [
        -4 * d * (d + 3 * h)**2 * (d + 3 * v)**2 * (d + 3 * (h + v))**2 * (4 * d + 3 * (h + v))**2,
        4 * v * (3 * d + v)**2 * (3 * h + v)**2 * (3 * (d + h) + v)**2 * (3 * (d + h) + 4 * v)**2,
        4 * h * (3 * d + h)**2 * (h + 3 * v)**2 * (3 * d + h + 3 * v)**2 * (3 * d + 4 * h + 3 * v)**2,
        4 * (d + h + v)**3 * (4 * d + h + v)**2 * (d + 4 * h + v)**2 * (d + h + 4 * v)**2,
    ],
    (8, 8): [
        -1048576 * h * v * d * (d + h)**2 * (d + v)**2 * (h + v)**2 * (d + h + v)
        * (2 * d + h + v)**2 * (d + 2 * h + v)**2 * (d + h + 2 * v)**2,
        256 * (d**2 + 6 * d * v + v**2)**2
        * (d**2 + 4 * d * h + 2 * h**2 + 2 * d * v + 4 * h * v + v**2)**2
        * (d**2 + 4 * d * h + 2 * h**2 + 6 * d * v + 4 * h * v + v**2)**2
        * (d**2 + 8 * d * h + 8 * h**2 + 2 * d * v + 8 * h * v + v**2)**2,
        256 * (d**2 + 6 * d * h + h**2)**2
        * (d**2 + 2 * d * h + h**2 + 4 * d * v + 4 * h * v + 2 * v**2)**2
        * (d**2 + 6 * d * h + h**2 + 4 * d * v + 4 * h * v + 2 * v**2)**2
        * (d**2 + 2 * d * h + h**2 + 8 * d * v + 8 * h * v + 8 * v**2)**2,
        256 * (2 * d**2 + 4 * d * h + h**2 + 4 * d * v + 2 * h * v + v**2)**2
        * (8 * d**2 + 8 * d * h + h**2 + 8 * d * v + 2 * h * v + v**2)**2
        * (h**2 + 6 * h * v + v**2)**2
        * (2 * d**2 + 4 * d * h + h**2 + 4 * d * v + 6 * h * v + v**2)**2,
    ],
}


def canonical(expr):
  poly = sp.Poly(sp.expand(expr), zh, zv, zd)
  terms = sorted(poly.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
  if not terms:
    return "0"
  return " + ".join(f"{int(c)}*zh^{a}*zv^{b}*zd^{e}" for (a, b, e), c in terms)


def main():
  out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "golden")
  out_dir.mkdir(parents=True, exist_ok=True)
  for (m, n), pfs in FACTORED.items():
    lines = [canonical(p) for p in pfs]
    for p in pfs:
      poly = sp.Poly(sp.expand(p), zh, zv, zd)
      assert poly.is_homogeneous and poly.total_degree() == m * n // 2, (m, n)
    (out_dir / f"pfaffians_{m}x{n}.txt").write_text("\n".join(lines) + "\n")
    at_one = [int(sp.expand(p).subs({zh: 1, zv: 1, zd: 1})) for p in pfs]
    print(f"{m}x{n}: terms {[len(l.split(' + ')) for l in lines]} at (1,1,1) {at_one}")


if __name__ == "__main__":
  main()
