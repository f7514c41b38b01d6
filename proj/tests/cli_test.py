#!/usr/bin/env python3
"""End-to-end checks of the socle command line: exit codes, reports, schema."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = os.environ.get("SOCLE_CLI", "build/socle")
ROOT = os.environ.get("SOCLE_ROOT", ".")
RINGS = os.path.join(ROOT, "data", "rings")

with open(os.path.join(ROOT, "schema", "report.schema.json")) as fh:
    SCHEMA = json.load(fh)


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=900)


def report(*args):
    p = run(*args, "--json", "-")
    doc = json.loads(p.stdout)
    jsonschema.validate(doc, SCHEMA)
    return p.returncode, doc


def strip_timings(doc):
    if isinstance(doc, dict):
        return {k: strip_timings(v) for k, v in doc.items() if k != "timing_ms"}
    if isinstance(doc, list):
        return [strip_timings(v) for v in doc]
    return doc


def only_check(doc):
    (exp,) = doc["experiments"]
    (c,) = exp["checks"]
    return c


class CheckI2qi(unittest.TestCase):
    def test_almost_dvr_fails_with_witness(self):
        code, doc = report("check", "i2qi", "--ring", os.path.join(RINGS, "almost_dvr.ring"), "--q", "Y^3")
        self.assertEqual(code, 0)
        c = only_check(doc)
        self.assertIs(c["verdict"], False)
        self.assertIsNotNone(c["witness"])
        self.assertEqual(c["values"]["index"], 2)
        self.assertTrue(c["oracle"]["agrees"])

    def test_named_ideal(self):
        code, doc = report("check", "i2qi", "--ring", os.path.join(RINGS, "plane_line.ring"), "--q", "q")
        self.assertEqual(code, 0)
        self.assertIs(only_check(doc)["verdict"], False)

    def test_expectation_mismatch_exits_one(self):
        p = run("check", "i2qi", "--ring", os.path.join(RINGS, "almost_dvr.ring"), "--q", "Y^3", "--expect", "true")
        self.assertEqual(p.returncode, 1)

    def test_field_override(self):
        code, doc = report("--field", "fp:101", "check", "i2qi", "--ring", os.path.join(RINGS, "almost_dvr.ring"),
                           "--q", "Y + X")
        self.assertEqual(code, 0)
        self.assertEqual(doc["field"], "fp:101")
        self.assertIs(only_check(doc)["verdict"], True)


class Errors(unittest.TestCase):
    def test_syntax_error_record(self):
        code, doc = report("check", "i2qi", "--ring", os.path.join(RINGS, "almost_dvr.ring"), "--q", "Y^3 +")
        self.assertEqual(code, 2)
        self.assertEqual(doc["status"], "error")
        self.assertEqual(doc["error"]["kind"], "input")
        self.assertIn("column", doc["error"]["message"])

    def test_not_parameters(self):
        code, doc = report("check", "i2qi", "--ring", os.path.join(RINGS, "almost_dvr.ring"), "--q", "X")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["kind"], "input")

    def test_missing_file(self):
        self.assertEqual(run("invariants", "--ring", "no/such.ring").returncode, 2)

    def test_bad_ring_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".ring", delete=False) as fh:
            fh.write("vars X\nweights 0\n")
        try:
            self.assertEqual(run("invariants", "--ring", fh.name).returncode, 2)
        finally:
            os.unlink(fh.name)

    def test_bad_usage(self):
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("check", "i2qi", "--q", "X").returncode, 2)
        self.assertEqual(run("--field", "fp:12", "zoo", "build", "fat-line").returncode, 2)

    def test_unknown_names(self):
        self.assertEqual(run("zoo", "build", "no-such-ring").returncode, 2)
        self.assertEqual(run("repro", "--only", "no-such-experiment").returncode, 2)

    def test_budget_exhaustion(self):
        code, doc = report("--step-budget", "3", "rednum", "--ring", "zoo:semigroup-e4", "--q", "X1")
        self.assertEqual(code, 3)
        self.assertEqual(doc["error"]["kind"], "budget")


class Commands(unittest.TestCase):
    def test_rednum_fat_line(self):
        code, doc = report("rednum", "--ring", os.path.join(RINGS, "fat_line.ring"), "--q", "q")
        self.assertEqual(code, 0)
        self.assertEqual(only_check(doc)["values"]["r"], 2)

    def test_rednum_semigroup(self):
        code, doc = report("rednum", "--ring", "zoo:semigroup-e4", "--q", "X1")
        self.assertEqual(code, 0)
        self.assertEqual(only_check(doc)["values"]["r"], 3)

    def test_invariants(self):
        code, doc = report("invariants", "--ring", "zoo:fat-line")
        self.assertEqual(code, 0)
        values = {c["operation"]: c["values"] for c in doc["experiments"][0]["checks"]}
        self.assertEqual(values["dim"]["dim"], 1)
        self.assertEqual(values["multiplicity"]["e"], 3)
        self.assertEqual(values["h0"]["h0_length"], 1)
        self.assertEqual(values["type_estimate"]["max"], 3)

    def test_zoo_list(self):
        p = run("zoo", "list")
        self.assertEqual(p.returncode, 0)
        ids = [line.split("\t")[0] for line in p.stdout.splitlines()]
        self.assertIn("semigroup-e5", ids)
        self.assertIn("fat-line", ids)

    def test_zoo_build_round_trip(self):
        p = run("zoo", "build", "two-planes")
        self.assertEqual(p.returncode, 0)
        text = p.stdout
        self.assertIn("# status: pass", text)
        with tempfile.NamedTemporaryFile("w", suffix=".ring", delete=False) as fh:
            fh.write(text)
        try:
            code, doc = report("invariants", "--ring", fh.name)
        finally:
            os.unlink(fh.name)
        self.assertEqual(code, 0)
        values = {c["operation"]: c["values"] for c in doc["experiments"][0]["checks"]}
        self.assertEqual(values["dim"]["dim"], 2)
        self.assertEqual(values["multiplicity"]["e"], 2)

    def test_experiment_list(self):
        p = run("experiments")
        self.assertEqual(p.returncode, 0)
        self.assertEqual(len(p.stdout.splitlines()), 13)

    def test_colon_split(self):
        code, doc = report("verify-colon-split", "--instances", "25", "--seed", "7")
        self.assertEqual(code, 0)
        checks = doc["experiments"][0]["checks"]
        self.assertEqual(checks[-1]["values"]["accepted"], 25)


class Repro(unittest.TestCase):
    def test_deterministic(self):
        args = ("repro", "--only", "principal-criterion", "--only", "fat-line-table", "--seed", "3")
        code1, a = report(*args)
        code2, b = report(*args)
        self.assertEqual(code1, 0)
        self.assertEqual(code2, 0)
        self.assertEqual(strip_timings(a), strip_timings(b))
        self.assertEqual([e["name"] for e in a["experiments"]], ["principal-criterion", "fat-line-table"])

    def test_json_file_and_text(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "out.json")
            p = run("repro", "--only", "cm-spot", "--json", path)
            self.assertEqual(p.returncode, 0)
            self.assertIn("status: pass", p.stdout)
            with open(path) as fh:
                doc = json.load(fh)
            jsonschema.validate(doc, SCHEMA)
            self.assertEqual(doc["status"], "pass")


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
