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

"""End-to-end checks of the dimerlab CLI.

Usage: cli_test.py <path-to-dimerlab> <source-dir>
"""

import csv
import io
import json
import math
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = None
SRC = None


def run(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=600)


def run_json(*args):
    proc = run(*args, "--format", "json")
    if proc.returncode != 0:
        raise AssertionError(f"{args} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(os.path.join(SRC, "schemas", "report.json")) as f:
            cls.schema = json.load(f)
        with open(os.path.join(SRC, "golden", "free_energy.json")) as f:
            cls.golden = json.load(f)

    def valid(self, report):
        jsonschema.validate(report, self.schema)
        return report

    def test_numeric_pfaffians(self):
        r = self.valid(run_json("pfaffians", "--m", 4, "--n", 4, "--weights", 1, 1, 1))
        self.assertEqual([p["value"] for p in r["pfaffians"]], ["-768", "1024", "1024", "1024"])
        self.assertEqual(r["sign_theorem"], "consistent")

    def test_rational_weights(self):
        r = self.valid(run_json("pfaffians", "--m", 4, "--n", 3, "--weights", "1/2", "3/2", 2))
        self.assertEqual([p["sign"] for p in r["pfaffians"]], [-1, 1, 1, 1])

    def test_symbolic_pfaffians_match_golden(self):
        with open(os.path.join(SRC, "golden", "pfaffians_4x3.txt")) as f:
            golden = [line.strip() for line in f if line.strip()]
        r = self.valid(run_json("pfaffians", "--m", 4, "--n", 3, "--symbolic"))
        self.assertEqual([p["value"] for p in r["pfaffians"]], golden)
        self.assertEqual(r["method"], "expansion")

    def test_odd_m_is_usage_error(self):
        proc = run("pfaffians", "--m", 5, "--n", 4, "--weights", 1, 1, 1)
        self.assertEqual(proc.returncode, 2)
        self.assertIn("even", proc.stderr)

    def test_non_positive_weights(self):
        self.assertEqual(run("free-energy", "--weights", 1, 0, 1).returncode, 2)
        self.assertEqual(run("pfaffians", "--m", 4, "--n", 3, "--weights", "a", 1, 1).returncode, 2)

    def test_partition_four_by_four(self):
        r = self.valid(run_json("partition", "--m", 4, "--n", 4))
        self.assertEqual(r["z"], "1920")
        self.assertEqual(r["classes"], {"00": "576", "10": "448", "01": "448", "11": "448"})
        self.assertEqual(r["oracle"]["z"], "1920")
        self.assertEqual(r["identity_residuals"], ["0"] * 4)

    def test_partition_symbolic_odd_n(self):
        r = self.valid(run_json("partition", "--m", 4, "--n", 3, "--symbolic"))
        self.assertEqual(r["classes"]["00"], r["classes"]["10"])
        self.assertEqual(r["classes"]["01"], r["classes"]["11"])
        self.assertTrue(r["class_equalities"]["z00_equals_z10"])
        self.assertEqual(r["z"], r["oracle"]["z"])

    def test_partition_beyond_oracle(self):
        r = self.valid(run_json("partition", "--m", 6, "--n", 6))
        self.assertEqual(r["z"], "10045824")
        self.assertIsNone(r["oracle"])
        self.assertEqual(r["residual_source"], "linear-solve")

    def test_verify(self):
        for m, n in [(4, 3), (4, 4), (4, 6)]:
            r = self.valid(run_json("verify", "--m", m, "--n", n))
            self.assertEqual(r["status"], "pass", (m, n))
            self.assertFalse([c for c in r["checks"] if c["status"] == "fail"])

    def test_verify_csv(self):
        proc = run("verify", "--m", 4, "--n", 4, "--format", "csv")
        self.assertEqual(proc.returncode, 0)
        rows = list(csv.DictReader(io.StringIO(proc.stdout)))
        self.assertEqual(list(rows[0].keys()), ["m", "n", "check", "status", "detail"])
        self.assertIn("leading_term_pf1", [r["check"] for r in rows])

    def test_free_energy(self):
        r = self.valid(run_json("free-energy", "--weights", 1, 1, 1))
        self.assertAlmostEqual(r["F"], self.golden["F"], delta=1e-12)
        self.assertTrue(r["converged"])
        scaled = run_json("free-energy", "--weights", 2, 2, 2)
        self.assertAlmostEqual(scaled["F"] - r["F"], math.log(2), delta=1e-12)

    def test_asymptotics(self):
        r = self.valid(run_json("asymptotics"))
        rows = r["convergence"][0]["rows"]
        self.assertEqual([(x["m"], x["n"]) for x in rows], [(8, 8), (16, 16), (32, 32), (64, 64)])
        self.assertLess(rows[1]["deviation"], rows[0]["deviation"])
        self.assertLess(10 * rows[-1]["deviation"], rows[0]["deviation"])
        self.assertLess(r["convergence"][0]["fitted_slope"], 0)
        self.assertEqual(r["trend"], "shrinking")
        doubled = run_json("asymptotics", "--weights", 2, 2, 2, "--sizes", "8x8")
        self.assertAlmostEqual(doubled["convergence"][0]["rows"][0]["log_det_per_site"] - rows[0]["log_det_per_site"],
                               math.log(2), delta=1e-12)

    def test_asymptotics_ratio_csv(self):
        proc = run("asymptotics", "--sizes", "4x4,8x8,12x12", "--table", "ratio", "--format", "csv")
        self.assertEqual(proc.returncode, 0)
        rows = list(csv.DictReader(io.StringIO(proc.stdout)))
        self.assertEqual(list(rows[0].keys()), ["m", "n", "method", "log_z", "ratio"])
        for got, want in zip(rows, self.golden["partition_ratio"]):
            self.assertAlmostEqual(float(got["ratio"]), want["ratio"], delta=1e-9)

    def test_enumerate(self):
        proc = run("enumerate", "--m", 4, "--n", 3)
        self.assertEqual(proc.returncode, 0)
        lines = proc.stdout.splitlines()
        self.assertEqual(len(lines), 344)
        first = json.loads(lines[0])
        self.assertEqual(sorted(first), ["Nd", "Nh", "Nv", "class", "pairs", "signs"])
        self.assertEqual(first["Nh"] + first["Nv"] + first["Nd"], 6)
        self.assertEqual(len({l for l in lines}), 344)

    def test_enumerate_size_limit(self):
        self.assertEqual(run("enumerate", "--m", 8, "--n", 6).returncode, 3)

    def test_output_file_and_determinism(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out.json")
            args = ("partition", "--m", 4, "--n", 3, "--symbolic", "--format", "json")
            self.assertEqual(run(*args, "--output", path).returncode, 0)
            with open(path) as f:
                first = f.read()
            self.assertEqual(first.strip(), run(*args).stdout.strip())
            self.assertEqual(run(*args).stdout, run(*args).stdout)


if __name__ == "__main__":
    CLI, SRC = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])
