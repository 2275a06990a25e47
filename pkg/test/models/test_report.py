#!/usr/bin/env python
"""
<Program Name>
  test_report.py

<Started>
  March 27, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Test Clause and TheoremReport.

"""

import json
import time
import unittest

from mock import Mock

import securesystemslib.exceptions

from groupscope.models.report import (Clause, TheoremReport, PASSED, FAILED,
    NOT_APPLICABLE)


class TestAddClause(unittest.TestCase):
  """Test report.add_clause(name, hypotheses, conclude) """

  def test_conclusion_needs_hypotheses(self):
    report = TheoremReport(theorem_id="T3.4", group_spec="D(4)")
    conclude = Mock(return_value=True)
    clause = report.add_clause("forward", [("M <= N", False)], conclude)
    conclude.assert_not_called()
    self.assertEqual(clause.conclusion, None)
    self.assertEqual(clause.status, NOT_APPLICABLE)

    clause = report.add_clause("reverse", [("M <= N", True)], conclude)
    conclude.assert_called_once_with()
    self.assertEqual(clause.status, PASSED)
    self.assertEqual(report.applicable_clauses(), [clause])

  def test_shared_hypotheses(self):
    report = TheoremReport(theorem_id="L2.1", group_spec="D(3)")
    self.assertFalse(report.add_hypothesis("nilpotent", 0))
    conclude = Mock(return_value=True)
    report.add_clause("divides", [], conclude)

    conclude.assert_not_called()
    self.assertFalse(report.hypotheses_ok())
    self.assertEqual(report.conclusion, None)
    self.assertEqual(report.status, NOT_APPLICABLE)

  def test_status(self):
    report = TheoremReport(theorem_id="T3.4", group_spec="D(4)")
    report.add_clause("first", [], lambda: True)
    report.add_clause("skipped", [("never", False)], lambda: False)
    self.assertEqual(report.status, PASSED)
    self.assertTrue(report.hypotheses_ok())

    report.add_clause("second", [], lambda: False)
    self.assertEqual(report.status, FAILED)
    self.assertFalse(report.conclusion)


class TestTheoremReportValidator(unittest.TestCase):
  """Test the validators of TheoremReport. """

  def setUp(self):
    self.report = TheoremReport(theorem_id="T3.4", group_spec="D(4)")
    self.report.add_hypothesis("M <= N", True)
    self.report.add_clause("forward", [], lambda: True)
    self.report.witnesses["|Aut_M^N(G)|"] = 4

  def test_finish(self):
    report = self.report.finish(time.time())
    self.assertIs(report, self.report)
    self.assertTrue(report.wall_time_ms >= 0)
    self.assertEqual(json.loads(repr(report))["status"], PASSED)

  def test_validate_theorem_id(self):
    self.report.theorem_id = "X1.1"
    with self.assertRaises(securesystemslib.exceptions.FormatError):
      self.report._validate_theorem_id()

    with self.assertRaises(securesystemslib.exceptions.FormatError):
      self.report.finish(time.time())

  def test_validate_created(self):
    self.report.created = "yesterday"
    with self.assertRaises(securesystemslib.exceptions.FormatError):
      self.report._validate_created()

    self.report.created = "2025-03-27T10:00:00Z"
    self.report._validate_created()

  def test_validate_clauses(self):
    self.report.clauses.append(Clause(name="broken",
        hypotheses=[("h", False)], conclusion=True))
    with self.assertRaises(securesystemslib.exceptions.FormatError):
      self.report._validate_clauses()

    self.report.clauses[-1] = {"name": "broken"}
    with self.assertRaises(securesystemslib.exceptions.FormatError):
      self.report.validate()


class TestRead(unittest.TestCase):
  """Test TheoremReport.read(data) and Clause.read(data) """

  def setUp(self):
    report = TheoremReport(theorem_id="C4.5", group_spec="Q(8)")
    report.add_clause("equal", [("abelian", False)], lambda: True)
    report.add_clause("subset", [], lambda: True)
    self.data = report.finish(time.time()).as_dict()

  def test_round_trip(self):
    report = TheoremReport.read(self.data)
    self.assertEqual(report.as_dict(), self.data)
    self.assertEqual(report.status, PASSED)

  def test_status_mismatch(self):
    self.data["status"] = NOT_APPLICABLE
    with self.assertRaises(securesystemslib.exceptions.FormatError):
      TheoremReport.read(self.data)

  def test_malformed(self):
    del self.data["clauses"]
    with self.assertRaises(securesystemslib.exceptions.FormatError):
      TheoremReport.read(self.data)

    with self.assertRaises(securesystemslib.exceptions.FormatError):
      Clause.read({"name": 1, "hypotheses": []})


if __name__ == "__main__":
  unittest.main()
