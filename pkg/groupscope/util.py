"""
<Program Name>
  util.py

<Started>
  March 16, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Reads and writes the files groupscope works with: Cayley table files and
  theorem report files (JSON and CSV).

"""
import csv
import sys
import json
import datetime

from dateutil import tz

import securesystemslib.formats
import securesystemslib.exceptions

import groupscope.formats
from groupscope import log
from groupscope import grouplib
from groupscope.exceptions import SchemaError

CSV_COLUMNS = ["group", "theorem", "hypotheses-ok", "conclusion",
    "wall-time-ms"]


def load_cayley(filepath):
  """
  <Purpose>
    Loads a group from a Cayley table file of the form

      {"order": n, "table": [[...], ...], "labels": [...]}

    If the identity of the stored table is not element 0 the table is
    relabeled, see `grouplib.build_group`.

  <Arguments>
    filepath:
            path to the JSON file

  <Exceptions>
    securesystemslib.exceptions.FormatError, if the path is improperly
    formatted

    SchemaError, if the file is not JSON or does not match
    CAYLEY_TABLE_SCHEMA, or the order field disagrees with the table

    NotAGroupError, if the table fails a group axiom

  <Side Effects>
    Reads the file.

  <Returns>
    A FiniteGroup named "@<filepath>".
  """
  securesystemslib.formats.PATH_SCHEMA.check_match(filepath)

  with open(filepath, "r") as fp:
    try:
      data = json.load(fp)
    except ValueError as e:
      raise SchemaError("'{0}' is not valid JSON: {1}".format(filepath, e))

  try:
    groupscope.formats.CAYLEY_TABLE_SCHEMA.check_match(data)
  except securesystemslib.exceptions.FormatError as e:
    raise SchemaError("'{0}' is not a Cayley table file: {1}".format(
        filepath, e))

  if data["order"] != len(data["table"]):
    raise SchemaError("'{0}' declares order {1} but has {2} rows".format(
        filepath, data["order"], len(data["table"])))

  log.info("Loading Cayley table of order {0} from '{1}'...".format(
      data["order"], filepath))
  return grouplib.build_group(data["table"], labels=data.get("labels"),
      name="@{}".format(filepath))


def save_cayley(G, filepath):
  """
  <Purpose>
    Writes the Cayley table of G (with labels and any recorded relabeling)
    as canonical JSON.

  <Side Effects>
    Writes '<filepath>'.

  <Returns>
    None.
  """
  securesystemslib.formats.PATH_SCHEMA.check_match(filepath)
  log.info("Saving Cayley table of order {0} to '{1}'...".format(G.order,
      filepath))
  G.dump(filepath)


def _open_output(filepath):
  if filepath == "-":
    return sys.stdout, False
  return open(filepath, "w"), True


def reports_as_dict(reports):
  """The report file document for a list of TheoremReports. """
  created = datetime.datetime.now(tz.tzutc()).strftime("%Y-%m-%dT%H:%M:%SZ")
  data = {
    "schema": groupscope.formats.REPORT_FILE_VERSION,
    "created": created,
    "reports": [report.as_dict() for report in reports]
  }
  groupscope.formats.REPORT_FILE_SCHEMA.check_match(data)
  return data


def write_reports_json(reports, filepath):
  """
  <Purpose>
    Writes reports as a versioned report file, `TheoremReport.
    read_from_file` reads it back.

  <Arguments>
    reports:
            list of TheoremReport

    filepath:
            path of the output file, "-" for stdout

  <Side Effects>
    Writes the file.

  <Returns>
    None.
  """
  data = reports_as_dict(reports)
  fp, close = _open_output(filepath)
  try:
    json.dump(data, fp, indent=1, sort_keys=True)
    fp.write("\n")
  finally:
    if close:
      fp.close()


def write_reports_csv(reports, filepath):
  """Writes one row per report with the columns of CSV_COLUMNS. Booleans are
  written lowercase, a conclusion that was never evaluated as an empty
  cell. """
  fp, close = _open_output(filepath)
  try:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
      conclusion = report.conclusion
      writer.writerow([report.group_spec, report.theorem_id,
          str(report.hypotheses_ok()).lower(),
          "" if conclusion is None else str(conclusion).lower(),
          report.wall_time_ms])
  finally:
    if close:
      fp.close()
