"""
<Program Name>
  formats.py

<Started>
  March 5, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Schemas for the JSON documents groupscope reads and writes, built on
  securesystemslib.schema. Every schema raises
  securesystemslib.exceptions.FormatError from `check_match`.

  Cayley table files:
    {"order": n, "table": [[...], ...], "labels": [...]}

  Report files:
    {"schema": 1, "created": <ISO 8601>, "reports": [<report>, ...]}

"""
import securesystemslib.schema as SCHEMA

REPORT_FILE_VERSION = 1

ELEMENT_INDEX_SCHEMA = SCHEMA.Integer(lo=0)

CAYLEY_TABLE_SCHEMA = SCHEMA.Object(
  object_name = "CAYLEY_TABLE_SCHEMA",
  order = SCHEMA.Integer(lo=1),
  table = SCHEMA.ListOf(SCHEMA.ListOf(ELEMENT_INDEX_SCHEMA, min_count=1),
      min_count=1),
  labels = SCHEMA.Optional(SCHEMA.ListOf(SCHEMA.AnyString())),
  relabeling = SCHEMA.Optional(SCHEMA.ListOf(ELEMENT_INDEX_SCHEMA)))

# "p" is absent for the trivial group
INVARIANTS_SCHEMA = SCHEMA.Object(
  object_name = "INVARIANTS_SCHEMA",
  p = SCHEMA.Optional(SCHEMA.Integer(lo=2)),
  exponents = SCHEMA.ListOf(SCHEMA.Integer(lo=1)))

THEOREM_ID_SCHEMA = SCHEMA.RegularExpression(r"[TLC][0-9]\.[0-9]")

STATUS_SCHEMA = SCHEMA.OneOf([SCHEMA.String("PASSED"),
    SCHEMA.String("FAILED"), SCHEMA.String("NOT-APPLICABLE")])

HYPOTHESES_SCHEMA = SCHEMA.ListOf(SCHEMA.Struct(
    [SCHEMA.AnyString(), SCHEMA.Boolean()]))

CLAUSE_SCHEMA = SCHEMA.Object(
  object_name = "CLAUSE_SCHEMA",
  name = SCHEMA.AnyString(),
  hypotheses = HYPOTHESES_SCHEMA,
  conclusion = SCHEMA.Optional(SCHEMA.Boolean()))

REPORT_SCHEMA = SCHEMA.Object(
  object_name = "REPORT_SCHEMA",
  theorem_id = THEOREM_ID_SCHEMA,
  group_spec = SCHEMA.AnyString(),
  hypotheses = HYPOTHESES_SCHEMA,
  clauses = SCHEMA.ListOf(CLAUSE_SCHEMA),
  conclusion = SCHEMA.Optional(SCHEMA.Boolean()),
  status = STATUS_SCHEMA,
  witnesses = SCHEMA.DictOf(SCHEMA.AnyString(), SCHEMA.Any()),
  wall_time_ms = SCHEMA.Integer(lo=0),
  created = SCHEMA.AnyString())

REPORT_FILE_SCHEMA = SCHEMA.Object(
  object_name = "REPORT_FILE_SCHEMA",
  schema = SCHEMA.Integer(lo=REPORT_FILE_VERSION, hi=REPORT_FILE_VERSION),
  created = SCHEMA.AnyString(),
  reports = SCHEMA.ListOf(REPORT_SCHEMA))
