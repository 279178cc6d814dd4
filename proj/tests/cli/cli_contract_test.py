#!/usr/bin/env python3
# Copyright 2026 The fflab Authors
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

"""Exit codes and output schemas of the fflab command-line tool.

usage: cli_contract_test.py FFLAB_BINARY SCHEMA_DIR FIXTURE_DIR
"""

import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

BINARY = ""
SCHEMAS = pathlib.Path()
FIXTURES = pathlib.Path()


def edge_list(n, edges):
    return f"{n}\n" + "".join(f"{u} {v}\n" for u, v in edges)


def complete(n):
    return edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n):
    return edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return edge_list(n, [(i, (i + 1) % n) for i in range(n)])


class CliContract(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        resources = []
        for p in SCHEMAS.glob("*.schema.json"):
            schema = json.loads(p.read_text())
            resources.append((p.name, Resource.from_contents(schema)))
        cls.registry = Registry().with_resources(resources)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def write(self, name, text):
        p = pathlib.Path(self.tmp.name) / name
        p.write_text(text)
        return str(p)

    def run_cli(self, *args, env=None):
        full_env = dict(os.environ)
        full_env.pop("FFLAB_LIMIT_STATES", None)
        full_env.update(env or {})
        return subprocess.run([BINARY, *args], capture_output=True, text=True,
                              env=full_env, timeout=600)

    def validated(self, proc, schema):
        doc = json.loads(proc.stdout)
        validator = jsonschema.Draft202012Validator(
            {"$ref": schema}, registry=self.registry)
        validator.validate(doc)
        return doc

    # ---- solve ----

    def test_solve_k4(self):
        proc = self.run_cli("solve", self.write("k4.txt", complete(4)))
        self.assertEqual(proc.returncode, 0, proc.stderr)
        doc = self.validated(proc, "solve_result.schema.json")
        self.assertEqual(doc["ffn"], 4)
        self.assertEqual(doc["outcome"], "decided")

    def test_solve_time_horizon_p3(self):
        # Two firefighters on P_3: {1, 2} leaves {0, 1} burning, then
        # {0, 1}; one step is never enough, so T_2(P_3) = 2.
        g = self.write("p3.txt", path(3))
        for t, want in [(1, False), (2, True), (3, True)]:
            proc = self.run_cli("solve", "--m", "2", "--time", str(t), g)
            self.assertEqual(proc.returncode, 0, proc.stderr)
            doc = self.validated(proc, "solve_result.schema.json")
            self.assertEqual(doc["winning"], want, t)

    def test_solve_hunter_on_transform(self):
        p2 = self.write("p2.txt", path(2))
        proc = self.run_cli("gadget", "hunter-transform", "--graph", p2)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        g = self.validated(proc, "gadget.schema.json")["gadget"]["graph"]
        h = self.write("h.txt", edge_list(g["n"], g["edges"]))
        proc = self.run_cli("solve", "--variant", "hunter", h)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        self.assertEqual(self.validated(proc, "solve_result.schema.json")["ffn"], 2)

    def test_solve_resource_limit(self):
        g = self.write("c9.txt", cycle(9))
        proc = self.run_cli("solve", g, "--limit-states", "5")
        self.assertEqual(proc.returncode, 2, proc.stdout)
        doc = self.validated(proc, "solve_result.schema.json")
        self.assertIsNone(doc["ffn"])
        self.assertEqual(doc["outcome"], "resource_limit")
        proc = self.run_cli("solve", g, env={"FFLAB_LIMIT_STATES": "5"})
        self.assertEqual(proc.returncode, 2)

    def test_solve_usage_errors(self):
        self.assertEqual(self.run_cli("solve").returncode, 1)
        self.assertEqual(self.run_cli("solve", "/nonexistent").returncode, 1)
        bad = self.write("bad.txt", "3\n0 7\n")
        self.assertEqual(self.run_cli("solve", bad).returncode, 1)
        g = self.write("p3b.txt", path(3))
        self.assertEqual(self.run_cli("solve", "--time", "2", g).returncode, 1)
        self.assertEqual(self.run_cli("frobnicate").returncode, 1)

    def test_solve_deterministic(self):
        g = self.write("c6.txt", cycle(6))
        a = json.loads(self.run_cli("solve", g).stdout)
        b = json.loads(self.run_cli("solve", g).stdout)
        for doc in (a, b):
            doc["stats"].pop("seconds")
        self.assertEqual(a, b)

    # ---- verify ----

    def test_verify(self):
        g = self.write("p3v.txt", path(3))
        win = self.write("win.json", json.dumps({"m": 2, "steps": [[1, 2], [0, 1]]}))
        proc = self.run_cli("verify", g, win)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        self.assertTrue(self.validated(proc, "verify_result.schema.json")["winning"])

        lose = self.write("lose.json", json.dumps({"m": 1, "steps": [[1]]}))
        proc = self.run_cli("verify", g, lose)
        self.assertEqual(proc.returncode, 3)
        doc = self.validated(proc, "verify_result.schema.json")
        self.assertEqual(doc["index"], 1)
        self.assertEqual(doc["burning"], [0, 1, 2])

        over = self.write("over.json", json.dumps({"m": 1, "steps": [[0, 1]]}))
        self.assertEqual(self.run_cli("verify", g, over).returncode, 1)
        junk = self.write("junk.json", "{not json")
        self.assertEqual(self.run_cli("verify", g, junk).returncode, 1)

    def test_solver_witness_round_trips_through_verify(self):
        g = self.write("c7.txt", cycle(7))
        doc = json.loads(self.run_cli("solve", g).stdout)
        s = self.write("w.json", json.dumps(doc["witness"]))
        jsonschema.Draft202012Validator(
            {"$ref": "strategy.schema.json"},
            registry=self.registry).validate(doc["witness"])
        self.assertEqual(self.run_cli("verify", g, s).returncode, 0)

    # ---- bound ----

    def test_bound(self):
        cases = [
            (cycle(5), 3, None),
            (complete(4), 4, "min_degree"),
            (edge_list(5, [(0, 1), (1, 2), (2, 3), (1, 4)]), 2, None),
        ]
        for k, (text, lower, kind) in enumerate(cases):
            proc = self.run_cli("bound", self.write(f"b{k}.txt", text))
            self.assertEqual(proc.returncode, 0, proc.stderr)
            doc = self.validated(proc, "bound_report.schema.json")
            self.assertEqual(doc["lower"]["value"], lower)
            self.assertLessEqual(doc["lower"]["value"], doc["upper"]["value"])
            if kind:
                self.assertEqual(doc["lower"]["certificate"]["kind"], kind)
        # C_5: the expansion certificate reaches 3.
        doc = json.loads(self.run_cli("bound", self.write("b0.txt", cycle(5))).stdout)
        self.assertIn(3, [c["m"] for c in doc["lower"]["certificates"]
                          if c["kind"] in ("expansion", "subgraph_expansion")])
        # Caterpillar: upper bound 2 with a strategy.
        doc = json.loads(self.run_cli("bound", self.write("b2.txt", cases[2][0])).stdout)
        self.assertEqual(doc["upper"]["value"], 2)
        self.assertEqual(doc["upper"]["strategy"]["m"], 2)

    def test_bound_with_path_decomposition(self):
        g = self.write("p4.txt", path(4))
        bags = self.write("bags.json", json.dumps({"bags": [[0, 1], [1, 2], [2, 3]]}))
        proc = self.run_cli("bound", g, "--pathdecomp", bags)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        self.validated(proc, "bound_report.schema.json")
        bad = self.write("badbags.json", json.dumps([[0, 1], [2, 3]]))
        self.assertEqual(self.run_cli("bound", g, "--pathdecomp", bad).returncode, 1)

    # ---- gadget ----

    def test_gadgets(self):
        e2 = self.write("e2.txt", "2\n")
        p3 = self.write("p3g.txt", path(3))
        cases = [
            (["time-gadget", "--graph", e2, "--time", "2", "--m", "1", "--strategy"], 30),
            (["g-family", "--m", "2", "--strategy"], 14),
            (["g-family", "--m", "3", "--strategy"], 36),
            (["hunter-transform", "--graph", p3], 11),
            (["aux-h", "--m", "3"], 6),
            (["bin-packing", "--sizes", "1,2,3"], 6),
            (["three-partition", "--sizes", "1,1,1", "--strategy"], 13),
        ]
        for args, n in cases:
            proc = self.run_cli("gadget", *args)
            self.assertEqual(proc.returncode, 0, (args, proc.stderr))
            doc = self.validated(proc, "gadget.schema.json")
            self.assertEqual(doc["gadget"]["graph"]["n"], n, args)
            if "--strategy" in args:
                self.assertIsNotNone(doc["strategy"], args)
        self.assertEqual(self.run_cli("gadget", "nope").returncode, 1)
        self.assertEqual(self.run_cli("gadget", "aux-h", "--m", "3",
                                      "--alpha", "1").returncode, 1)

    # ---- enumcheck ----

    def test_enumcheck(self):
        for check in ("char", "conjecture", "bounds-soundness"):
            proc = self.run_cli("--jobs", "2", "enumcheck", "--check", check,
                                "--max-n", "6", "--input",
                                str(FIXTURES / "connected_n6.g6"))
            self.assertEqual(proc.returncode, 0, (check, proc.stderr))
            doc = self.validated(proc, "enumcheck_report.schema.json")
            self.assertEqual(doc["graphs"], 112)
            self.assertEqual(doc["discrepancies"], 0)
        proc = subprocess.run(
            [BINARY, "enumcheck", "--check", "char", "--max-n", "4"],
            input=(FIXTURES / "connected_n5.g6").read_text(),
            capture_output=True, text=True)
        doc = json.loads(proc.stdout)
        self.assertEqual((doc["checked"], doc["skipped"]), (0, 21))

    def test_enumcheck_jobs_do_not_change_output(self):
        args = ["enumcheck", "--check", "bounds-soundness", "--input",
                str(FIXTURES / "connected_n5.g6")]
        a = self.run_cli("--jobs", "1", *args).stdout
        b = self.run_cli("--jobs", "3", *args).stdout
        self.assertEqual(a, b)

    # ---- fuzz ----

    def test_fuzz(self):
        e3 = self.write("e3.txt", "3\n")
        proc = self.run_cli("fuzz", e3, "--m", "1", "--steps", "3",
                            "--trials", "200", "--seed", "7")
        self.assertEqual(proc.returncode, 0, proc.stderr)
        doc = self.validated(proc, "fuzz_report.schema.json")
        self.assertTrue(doc["found"])
        k3 = self.write("k3.txt", complete(3))
        doc = json.loads(self.run_cli("fuzz", k3, "--m", "2", "--trials",
                                      "2000").stdout)
        self.assertEqual(doc["successes"], 0)
        again = json.loads(self.run_cli("fuzz", e3, "--m", "1", "--steps", "3",
                                        "--trials", "200", "--seed", "7").stdout)
        self.assertEqual(again, self.validated(proc, "fuzz_report.schema.json"))


if __name__ == "__main__":
    BINARY, schema_dir, fixture_dir = sys.argv[1:4]
    SCHEMAS = pathlib.Path(schema_dir)
    FIXTURES = pathlib.Path(fixture_dir)
    unittest.main(argv=sys.argv[:1], verbosity=2)
