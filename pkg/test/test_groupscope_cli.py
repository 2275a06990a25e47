#!/usr/bin/env python

"""
<Program Name>
  test_groupscope_cli.py

<Started>
  March 26, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Test groupscope command line interface.

"""

import os
import io
import time
import shutil
import logging
import tempfile
import unittest

from mock import patch

import groupscope.settings
from groupscope import util
from groupscope import checklib
from groupscope.groupscope_cli import cli_main
from groupscope.models.report import TheoremReport

# Suppress all the user feedback that we print using a base logger
logging.getLogger().setLevel(logging.CRITICAL)


def _failing_report(theorem_id, group_spec):
  report = TheoremReport(theorem_id=theorem_id, group_spec=group_spec)
  report.add_clause("always wrong", [], lambda: False)
  return report.finish(time.time())


class TestGroupscopeCli(unittest.TestCase):
  """Test the subcommands, their output and exit status. """

  @classmethod
  def setUpClass(self):
    self.working_dir = os.getcwd()
    self.test_dir = os.path.realpath(tempfile.mkdtemp())
    demo_files = os.path.join(
        os.path.dirname(os.path.realpath(__file__)), "demo_files")
    shutil.copy(os.path.join(demo_files, "s3.json"), self.test_dir)
    os.chdir(self.test_dir)

  @classmethod
  def tearDownClass(self):
    os.chdir(self.working_dir)
    shutil.rmtree(self.test_dir)

  def _run(self, argv):
    """Returns exit status and the printed lines. """
    with patch("sys.stdout", new_callable=io.StringIO) as stdout:
      status = cli_main(argv)
    return status, stdout.getvalue().splitlines()

  def test_no_arguments(self):
    with self.assertRaises(SystemExit) as context:
      cli_main([])
    self.assertEqual(context.exception.code, 2)

  def test_verbosity(self):
    with patch("groupscope.log.set_verbosity") as set_verbosity:
      status, _ = self._run(["--quiet", "info", "C(2)"])
    self.assertEqual(status, 0)
    set_verbosity.assert_called_once_with(verbose=False, quiet=True)

    with patch("groupscope.log.set_verbosity") as set_verbosity:
      self._run(["info", "C(2)"])
    set_verbosity.assert_not_called()

  def test_info(self):
    status, lines = self._run(["info", "Q(8)"])
    self.assertEqual(status, 0)
    self.assertIn("order:            8", lines)
    self.assertIn("class:            2", lines)
    self.assertIn("|Z(G)|:           2", lines)
    self.assertIn("Z(G) invariants:  [1]", lines)
    self.assertIn("purely non-abelian: True", lines)
    gamma_lines = [line for line in lines if line.startswith("|gamma_")]
    self.assertEqual(len(gamma_lines), 2)
    self.assertTrue(gamma_lines[0].endswith("2  invariants [1]"))

  def test_info_not_nilpotent(self):
    status, lines = self._run(["info", "@s3.json"])
    self.assertEqual(status, 0)
    self.assertIn("group:            @s3.json", lines)
    self.assertIn("class:            not nilpotent", lines)
    self.assertIn("Z(G) invariants:  []", lines)

  def test_aut(self):
    status, lines = self._run(["aut", "D(4)", "--filter", "central"])
    self.assertEqual(status, 0)
    self.assertEqual(lines[0], "|Aut(G)|: 8")
    self.assertEqual(lines[1], "|central|: 4")
    self.assertEqual(lines[2], "0 1 2 3 4 5 6 7")
    self.assertEqual(len(lines), 6)

    status, lines = self._run(["aut", "Q(8)", "--filter", "box:gamma2,Z"])
    self.assertEqual(status, 0)
    self.assertEqual(lines[1], "|box:gamma2,Z|: 4")

    status, lines = self._run(["aut", "Q(8)", "--filter", "class:1"])
    self.assertEqual(lines[1], "|class:1|: 4")

    status, lines = self._run(["aut", "C(3)"])
    self.assertEqual(lines, ["|Aut(G)|: 2", "0 1 2", "0 2 1"])

  def test_aut_bad_filter(self):
    for value in ("outer", "box:Z", "box:Z,X", "class:x"):
      status, _ = self._run(["aut", "Q(8)", "--filter", value])
      self.assertEqual(status, 2, value)

  def test_check(self):
    status, _ = self._run(["check", "T3.4", "D(4)", "--json", "t34.json"])
    self.assertEqual(status, 0)
    reports = TheoremReport.read_from_file("t34.json")
    self.assertEqual(reports[0].status, "PASSED")
    self.assertEqual(reports[0].group_spec, "D(4)")

  def test_check_defaults(self):
    """Checks with product or n arguments run on their default inputs. """
    argvs = [
      ["check", "T3.1", "Q(8) x C(2)"],
      ["check", "T3.2", "Q(8) x C(2)", "--n", "2"],
      ["check", "L2.5", "Q(8) x C(3)"],
      ["check", "L2.3", "D(4) x C(2)"],
      ["check", "L2.6", "C(2) x Ab(2; 1, 1) x Ab(2; 2, 1)"],
      ["check", "T4.1", "Q(8)"],
      ["check", "T3.5", "Heis(3)"],
      ["check", "L3.3", "D(4)"]
    ]
    for argv in argvs:
      status, _ = self._run(argv)
      self.assertEqual(status, 0, argv)

  def test_check_usage_errors(self):
    argvs = [
      ["check", "T9.9", "D(4)"],
      ["check", "T3.4", "Q(6)"],
      ["check", "T3.4", "D(4"],
      ["check", "T3.2", "Q(8)"],
      ["check", "L2.6", "C(2) x C(4)"],
      ["check", "T4.1", "C(4)"],
      ["check", "T3.4", "@missing.json"]
    ]
    for argv in argvs:
      status, _ = self._run(argv)
      self.assertEqual(status, 2, argv)

  def test_check_failed(self):
    fake = lambda G: _failing_report("C4.5", "D(4)")
    with patch.dict(checklib.CHECKERS, {"C4.5": fake}):
      status, _ = self._run(["check", "C4.5", "D(4)"])
    self.assertEqual(status, 1)

  def test_corpus(self):
    status, _ = self._run(["corpus", "--max-order", "8", "--theorems",
        "T3.4, C4.5", "--csv", "corpus.csv", "--json", "corpus.json"])
    self.assertEqual(status, 0)

    with open("corpus.csv") as fp:
      lines = fp.read().splitlines()
    self.assertEqual(lines[0],
        "group,theorem,hypotheses-ok,conclusion,wall-time-ms")
    reports = TheoremReport.read_from_file("corpus.json")
    self.assertEqual(len(reports), len(lines) - 1)

    status, _ = self._run(["corpus", "--theorems", "T9.9"])
    self.assertEqual(status, 2)

  def test_corpus_failed(self):
    with patch.object(checklib, "run_corpus",
        return_value=[_failing_report("T3.4", "C(2)")]):
      status, _ = self._run(["corpus"])
    self.assertEqual(status, 1)

  @patch.object(groupscope.settings, "ORDER_CAP", 256)
  def test_environment_cap(self):
    with patch.dict(os.environ, {"GROUPSCOPE_MAX_ORDER": "4"}):
      status, _ = self._run(["info", "D(4)"])
    self.assertEqual(status, 2)

    with patch.dict(os.environ, {"GROUPSCOPE_MAX_ORDER": "four"}):
      status, _ = self._run(["info", "C(2)"])
    self.assertEqual(status, 2)

  def test_save(self):
    status, _ = self._run(["save", "Heis(3)", "heis3.json"])
    self.assertEqual(status, 0)
    G = util.load_cayley("heis3.json")
    self.assertEqual(G.order, 27)


if __name__ == "__main__":
  unittest.main()
