"""
<Program Name>
  report.py

<Started>
  March 7, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Provides the report classes written by the theorem checkers.

  A TheoremReport holds the hypotheses every clause of a theorem shares and
  a list of Clauses, each with its own hypotheses and a conclusion. A
  conclusion is only evaluated, and only recorded, when all hypotheses the
  clause depends on hold. The report status follows from its clauses:

    FAILED          some applicable clause has a false conclusion
    PASSED          at least one clause applied and all applicable passed
    NOT-APPLICABLE  no clause applied

<Classes>
  Clause:
      one named implication of a theorem

  TheoremReport:
      the outcome of running one checker on one input
"""
import json
import time
import datetime

import attr
import iso8601
from dateutil import tz

import securesystemslib.exceptions
import securesystemslib.formats

import groupscope.formats
from . import common as models__common

PASSED = "PASSED"
FAILED = "FAILED"
NOT_APPLICABLE = "NOT-APPLICABLE"


def _hypothesis_list(values):
  return [(str(name), bool(value)) for name, value in values]


def _utc_now():
  return datetime.datetime.now(tz.tzutc()).strftime("%Y-%m-%dT%H:%M:%SZ")


@attr.s(repr=False, eq=False)
class Clause(models__common.Metablock):
  """
  <Attributes>
    name:
        short description of the implication, e.g. "forward(1)"

    hypotheses:
        list of (name, boolean) pairs local to this clause

    conclusion:
        boolean, None if the clause did not apply
  """
  name = attr.ib()
  hypotheses = attr.ib(factory=list, converter=_hypothesis_list)
  conclusion = attr.ib(default=None)

  def applies(self):
    return all(value for _, value in self.hypotheses)

  @property
  def status(self):
    if self.conclusion is None:
      return NOT_APPLICABLE
    return PASSED if self.conclusion else FAILED

  def as_dict(self):
    data = {"name": self.name,
        "hypotheses": [[name, value] for name, value in self.hypotheses]}
    if self.conclusion is not None:
      data["conclusion"] = self.conclusion
    return data

  @staticmethod
  def read(data):
    groupscope.formats.CLAUSE_SCHEMA.check_match(data)
    return Clause(name=data["name"], hypotheses=data["hypotheses"],
        conclusion=data.get("conclusion"))


@attr.s(repr=False, eq=False)
class TheoremReport(models__common.Metablock):
  """
  The outcome of a checker. Checkers create the report, record the shared
  hypotheses with `add_hypothesis`, evaluate every clause with `add_clause`,
  collect evidence in `witnesses` and call `finish`.

  <Attributes>
    theorem_id:
        e.g. "T3.4"

    group_spec:
        the input, as a group spec or a short description

    hypotheses:
        list of (name, boolean) pairs shared by all clauses

    clauses:
        list of Clause

    witnesses:
        dictionary of JSON serializable evidence (cardinalities, invariants,
        counterexample elements)

    wall_time_ms:
        integer, time spent by the checker

    created:
        ISO 8601 UTC timestamp
  """
  theorem_id = attr.ib()
  group_spec = attr.ib()
  hypotheses = attr.ib(factory=list, converter=_hypothesis_list)
  clauses = attr.ib(factory=list)
  witnesses = attr.ib(factory=dict)
  wall_time_ms = attr.ib(default=0)
  created = attr.ib(factory=_utc_now)

  def add_hypothesis(self, name, value):
    self.hypotheses.append((name, bool(value)))
    return bool(value)

  def hypotheses_hold(self):
    return all(value for _, value in self.hypotheses)

  def add_clause(self, name, hypotheses, conclude):
    """
    <Purpose>
      Records a clause. `conclude` is only called when the shared hypotheses
      and the clause hypotheses all hold.

    <Arguments>
      name:
              the clause name

      hypotheses:
              list of (name, boolean) pairs

      conclude:
              callable without arguments returning a boolean

    <Returns>
      The Clause.
    """
    clause = Clause(name=name, hypotheses=hypotheses)
    if self.hypotheses_hold() and clause.applies():
      clause.conclusion = bool(conclude())
    self.clauses.append(clause)
    return clause

  def applicable_clauses(self):
    return [clause for clause in self.clauses
        if clause.conclusion is not None]

  def hypotheses_ok(self):
    return self.hypotheses_hold() and bool(self.applicable_clauses())

  @property
  def conclusion(self):
    applicable = self.applicable_clauses()
    if not applicable:
      return None
    return all(clause.conclusion for clause in applicable)

  @property
  def status(self):
    conclusion = self.conclusion
    if conclusion is None:
      return NOT_APPLICABLE
    return PASSED if conclusion else FAILED

  def finish(self, started):
    """Stores the time elapsed since `started` (a `time.time()` value) and
    validates the report. """
    self.wall_time_ms = max(0, int(round((time.time() - started) * 1000)))
    self.validate()
    return self

  def as_dict(self):
    data = {
      "theorem_id": self.theorem_id,
      "group_spec": self.group_spec,
      "hypotheses": [[name, value] for name, value in self.hypotheses],
      "clauses": [clause.as_dict() for clause in self.clauses],
      "status": self.status,
      "witnesses": self.witnesses,
      "wall_time_ms": self.wall_time_ms,
      "created": self.created
    }
    if self.conclusion is not None:
      data["conclusion"] = self.conclusion
    return data

  @staticmethod
  def read_from_file(filename):
    """Static method to instantiate the reports of a report file """
    with open(filename, "r") as fp:
      data = json.load(fp)
    groupscope.formats.REPORT_FILE_SCHEMA.check_match(data)
    return [TheoremReport.read(report) for report in data["reports"]]

  @staticmethod
  def read(data):
    """Static method to instantiate a report from a Python dictionary. The
    stored status has to agree with the status the clauses imply. """
    groupscope.formats.REPORT_SCHEMA.check_match(data)
    report = TheoremReport(theorem_id=data["theorem_id"],
        group_spec=data["group_spec"], hypotheses=data["hypotheses"],
        clauses=[Clause.read(clause) for clause in data["clauses"]],
        witnesses=data["witnesses"], wall_time_ms=data["wall_time_ms"],
        created=data["created"])
    report.validate()

    if report.status != data["status"]:
      raise securesystemslib.exceptions.FormatError("Report status '{0}'"
          " contradicts its clauses ('{1}')".format(data["status"],
          report.status))
    return report

  def _validate_theorem_id(self):
    groupscope.formats.THEOREM_ID_SCHEMA.check_match(self.theorem_id)

  def _validate_created(self):
    try:
      securesystemslib.formats.ISO8601_DATETIME_SCHEMA.check_match(
          self.created)
      iso8601.parse_date(self.created)
    except Exception as e:
      raise securesystemslib.exceptions.FormatError(
          "Malformed date string in report. Exception: {}".format(e))

  def _validate_clauses(self):
    for clause in self.clauses:
      if not isinstance(clause, Clause):
        raise securesystemslib.exceptions.FormatError(
            "Report clauses must be Clause objects")

      if clause.conclusion is not None and not (self.hypotheses_hold() and
          clause.applies()):
        raise securesystemslib.exceptions.FormatError("Clause '{}' states a"
            " conclusion although a hypothesis fails".format(clause.name))

  def _validate_schema(self):
    groupscope.formats.REPORT_SCHEMA.check_match(self.as_dict())
