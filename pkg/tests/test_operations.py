import contextlib
import io
import json
import os
import tempfile
import unittest

import symmetra
from symmetra import cli
from symmetra.algebra.actions import action_to_json, generic_family, line_family
from symmetra.algebra.scalars import ScalarField
from symmetra.cli import run
from symmetra.core.config import JobConfig
from symmetra.core.errors import ParseError
from symmetra.core.io import save_project
from symmetra.core.objects import JsonData
from symmetra.core.project import Project
from symmetra.operations import ALL_OPERATIONS, operation_by_command
from symmetra.operations.checks import LineVerify, Verify
from symmetra.operations.data import ActionData, LineActionData, PBWData, ReportData
from symmetra.operations.families import Conjugate, ConjugateLine, LineFamily, PlaneFamily
from symmetra.operations.group import Order, PBWNormalize, SigmaPower
from symmetra.operations.io import JsonSource, unwrap_action
from symmetra.operations.search import Search

F = ScalarField.exact()


def execute(op_cls, inputs=None, config=None, **params):
    """Runs an operation with its default parameters, overridden by `params`."""
    op = op_cls(config)
    values = {p.name: p.default for p in op.parameters}
    values.update(params)
    return op.execute(inputs or {}, values)


class TestRegistry(unittest.TestCase):

    def test_commands_are_unique(self):
        commands = [op.command for op in ALL_OPERATIONS]
        self.assertEqual(len(commands), len(set(commands)))
        self.assertIs(operation_by_command("verify"), Verify)
        with self.assertRaises(ParseError):
            operation_by_command("plot")


class TestOperations(unittest.TestCase):

    def test_json_source(self):
        doc = action_to_json(generic_family(F, 1, 0, "q^2", "t"))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "action.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump(doc, f)
            result = execute(JsonSource, path=path)
        self.assertIsInstance(result['document'], JsonData)
        self.assertEqual(unwrap_action(result['document'], F), generic_family(F, 1, 0, "q^2", "t"))
        with self.assertRaises(ParseError):
            unwrap_action(result['document'], F, line=True)
        with self.assertRaises(ParseError):
            unwrap_action(None, F)

    def test_family_then_verify(self):
        action = execute(PlaneFamily, u=0, v=2, alpha="t", beta="q")['action']
        self.assertIsInstance(action, ActionData)
        report = execute(Verify, {'action': action}, N=2, ratios=True)['report']
        self.assertIsInstance(report, ReportData)
        self.assertTrue(report.data.passed)
        self.assertIn("ab", report.data.axioms())
        self.assertEqual(report.exit_code, 0)

    def test_conjugate(self):
        action = execute(PlaneFamily)['action']
        conj = execute(Conjugate, {'action': action}, sigma="0,-1,1,0", alpha="s")['action']
        # sigma I sigma^-1 = I: conjugating a weight action keeps it weight
        self.assertTrue(conj.data.is_weight)
        self.assertNotEqual(conj.data, action.data)
        report = execute(Verify, {'action': conj}, N=2, ratios=True, failures_only=True)['report']
        self.assertTrue(report.data.passed)
        self.assertEqual(report.to_json()["checks"], [])

    def test_line_operations(self):
        action = execute(LineFamily)['action']
        self.assertIsInstance(action, LineActionData)
        self.assertTrue(execute(LineVerify, {'action': action}, N=3)['report'].data.passed)
        flipped = execute(ConjugateLine, {'action': action})['action']
        self.assertEqual(flipped.data, line_family(F, "weight", "q^-2", "-a*q^-2", 0))
        with self.assertRaises(ParseError):
            execute(Verify, {'action': action})

    def test_order(self):
        doc = execute(Order, sigma="0,-1,1,0")['auto'].to_json()
        self.assertEqual(doc["order"], 4)
        self.assertEqual(doc["verdict"], "NoSymmetryPossible")

    def test_sigma_power(self):
        doc = execute(SigmaPower, N=2)['power'].to_json()
        self.assertEqual(doc["power"], [[5, 3], [3, 2]])
        self.assertTrue(doc["identities_hold"])
        self.assertTrue(doc["iterated_agrees"])

    def test_pbw(self):
        element = execute(PBWNormalize, word="e k")['element']
        self.assertIsInstance(element, PBWData)
        self.assertEqual(element.to_json()["word"], "e k")
        antipode = execute(PBWNormalize, word="e", show="antipode")['element']
        self.assertEqual(antipode.metadata["show"], "antipode")
        coproduct = execute(PBWNormalize, word="e f", show="coproduct")['element']
        self.assertIn("coproduct", coproduct.to_json())

    def test_search_expectation(self):
        result = execute(Search, alpha="q^2", beta="t", B=2, expect="empty")['result']
        self.assertEqual(len(result.to_json()["solutions"]), 1)
        self.assertEqual(result.exit_code, 1)
        result = execute(Search, alpha="q^2", beta="t", B=2, expect="nonempty")['result']
        self.assertEqual(result.exit_code, 0)


class TestCommandLine(unittest.TestCase):

    def invoke(self, *argv):
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = run(list(argv))
        text = out.getvalue()
        return code, (json.loads(text) if text else None)

    def test_order(self):
        code, doc = self.invoke("order", "--sigma=0,-1,1,0")
        self.assertEqual(code, 0)
        self.assertEqual(doc["order"], 4)

    def test_family_pipeline(self):
        code, doc = self.invoke("family", "generic", "--u", "2", "--alpha", "q")
        self.assertEqual(code, 0)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "action.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump(doc, f)
            code, report = self.invoke("verify", "--input", path, "--N", "2")
        self.assertEqual(code, 0)
        self.assertTrue(report["passed"])

    def test_numeric_search(self):
        code, doc = self.invoke("search", "--numeric", "--seed", "7", "--sigma", "1,1,0,1", "--B", "1")
        self.assertEqual(code, 0)
        self.assertEqual(doc["solutions"], [])
        self.assertEqual(len(doc["runs"]), 3)

    def test_unmet_expectation(self):
        code, doc = self.invoke("search", "--sigma=0,-1,1,0", "--B", "1", "--expect", "nonempty")
        self.assertEqual(code, 1)
        self.assertEqual(doc["solutions"], [])

    def test_usage_errors(self):
        code, doc = self.invoke("order", "--numeric", "--q", "1")
        self.assertEqual(code, 2)
        self.assertIsNone(doc)
        code, _ = self.invoke("family", "generic", "--alpha", "q")
        self.assertEqual(code, 2)
        with self.assertRaises(SystemExit) as ctx:
            self.invoke("order", "--bogus")
        self.assertEqual(ctx.exception.code, 2)

    def test_package_entry_point(self):
        self.assertIs(symmetra.main, cli.main)
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = symmetra.main(["order", "--sigma=0,-1,1,0"])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out.getvalue())["order"], 4)

    def test_batch(self):
        project = Project(JobConfig(degree_bound=2))
        family = project.add_node(PlaneFamily, node_id="family")
        verify = project.add_node(Verify, node_id="verify")
        project.connect(family, 'action', verify, 'action')
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "job.json")
            save_project(project, path)
            code, doc = self.invoke("batch", path)
        self.assertEqual(code, 0)
        self.assertEqual(list(doc), ["verify"])
        self.assertTrue(doc["verify"]["report"]["passed"])


if __name__ == '__main__':
    unittest.main()
