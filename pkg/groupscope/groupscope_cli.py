#!/usr/bin/env python
"""
<Program Name>
  groupscope_cli.py

<Started>
  March 17, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Provides the command line interface of groupscope.

  Every <spec> is a group spec such as "Q(8)" or "D(4) x C(2)", or
  "@<path>" to load a Cayley table file.

  Example Usage:
  ```
  groupscope info "Q(8)"
  groupscope aut "D(4)" --filter box:gamma2,Z
  groupscope check T3.4 "D(4)" --json -
  groupscope corpus --max-order 16 --csv corpus.csv
  groupscope save "Heis(3)" heis3.json
  ```

  Exit status is 0 on success, 1 if a theorem check FAILED and 2 for usage
  and configuration errors.

"""
import os
import sys
import argparse

import securesystemslib.exceptions

import groupscope.settings
from groupscope import log
from groupscope import util
from groupscope import grouplib
from groupscope import abelianlib
from groupscope import autlib
from groupscope import checklib
from groupscope import group_spec
from groupscope.models.report import FAILED
from groupscope.models.morphism import AutSubgroupTag
from groupscope.exceptions import (BadParameterError, NotNilpotentError,
    NotAbelianError, NotPrimePowerError)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _load_group(spec):
  """(FiniteGroup, parsed spec) for a spec argument, the parsed spec is
  None for Cayley table files. """
  if spec.startswith("@"):
    return util.load_cayley(spec[1:]), None
  ast = group_spec.parse(spec)
  return group_spec.construct(ast), ast


def _named_subgroup(G, name):
  """
  <Purpose>
    Resolves the subgroup names accepted on the command line: "1", "G",
    "Z" and "gamma<i>" (e.g. "gamma2").

  <Exceptions>
    BadParameterError for anything else.
  """
  if name == "1":
    return grouplib.trivial_subgroup(G)
  if name == "G":
    return grouplib.whole(G)
  if name == "Z":
    return grouplib.center(G)
  if name.startswith("gamma") and name[len("gamma"):].isdigit():
    return grouplib.gamma(G, int(name[len("gamma"):]))
  raise BadParameterError("Unknown subgroup name '{}', expected 1, G, Z or"
      " gamma<i>".format(name))


def _parse_filter(G, text):
  """AutSubgroupTag for --filter central | class:<n> | box:<M>,<N> """
  if text == "central":
    return AutSubgroupTag(kind="central")

  kind, _, value = text.partition(":")
  if kind == "class" and value.isdigit():
    return AutSubgroupTag(kind="class_preserving", n=int(value))

  if kind == "box" and value.count(",") == 1:
    upper, lower = value.split(",")
    return AutSubgroupTag(kind="box", upper=_named_subgroup(G, upper),
        lower=_named_subgroup(G, lower))

  raise BadParameterError("Unknown filter '{}', expected central, class:<n>"
      " or box:<M>,<N>".format(text))


def _invariants_text(S):
  try:
    return str(list(abelianlib.abelian_invariants(S).exponents))
  except (NotAbelianError, NotPrimePowerError):
    return "n/a"


def info(args):
  G, _ = _load_group(args.spec)
  center = grouplib.center(G)

  try:
    nilpotency = grouplib.nilpotency_class(G)
  except NotNilpotentError:
    nilpotency = None

  print("group:            {}".format(G.name))
  print("order:            {}".format(G.order))
  print("abelian:          {}".format(grouplib.is_abelian(G)))
  print("class:            {}".format("not nilpotent" if nilpotency is None
      else nilpotency))
  print("|Z(G)|:           {}".format(center.order))
  print("Z(G) invariants:  {}".format(_invariants_text(center)))

  depth = (nilpotency or 1) + 1
  for i, term in enumerate(grouplib.lower_central_series(G, depth), 1):
    if i > 1:
      print("|gamma_{0}(G)|:{1}{2}  invariants {3}".format(i,
          " " * (10 - len(str(i))), term.order, _invariants_text(term)))

  if G.order <= groupscope.settings.PURELY_SEARCH_CAP:
    outcome = autlib.purely_nonabelian_test(G)
    print("purely non-abelian: {}".format(outcome.purely))
  else:
    print("purely non-abelian: not searched above order {}".format(
        groupscope.settings.PURELY_SEARCH_CAP))
  return EXIT_OK


def aut(args):
  G, _ = _load_group(args.spec)
  full = autlib.automorphism_group(G)
  print("|Aut(G)|: {}".format(len(full)))

  if args.filter:
    tag = _parse_filter(G, args.filter)
    selected = tag.members(G)
    print("|{0}|: {1}".format(args.filter, len(selected)))
  else:
    selected = full

  for f in selected:
    print(" ".join(str(x) for x in f.image))
  return EXIT_OK


def _product_pair(ast):
  factors = group_spec.product_factors(ast) if ast is not None else []
  if len(factors) != 2:
    raise BadParameterError("This check needs a product of two groups,"
        " e.g. \"Q(8) x C(2)\"")
  return [group_spec.construct(factor) for factor in factors]


def _default_n(G, n):
  if n is not None:
    return n
  try:
    return max(grouplib.nilpotency_class(G), 2)
  except NotNilpotentError:
    return 2


def run_check(theorem_id, G, ast, n=None):
  """
  <Purpose>
    Runs one checker on a group with the default arguments of the command
    line: M = N = Z(G) for T3.4, M = Z(G) and N = G for L3.3, H = Z(G) for
    T3.5 and the restriction to the first factor with M_1 = gamma_n(H) and
    N_1 = Z(H) for T3.1. L2.3, L2.5, T3.1 and T3.2 need a two factor
    product spec, L2.6 a three factor spec of abelian p-groups G x H x K.

  <Exceptions>
    BadParameterError for unknown ids or unsuitable specs.

  <Returns>
    A TheoremReport.
  """
  if theorem_id not in checklib.CHECKERS:
    raise BadParameterError("Unknown theorem id '{0}', expected one of"
        " {1}".format(theorem_id, ", ".join(checklib.THEOREM_IDS)))
  checker = checklib.CHECKERS[theorem_id]

  if theorem_id in ("L2.1", "L2.2", "T2.4", "C3.6", "C4.2", "C4.5"):
    return checker(G)

  if theorem_id in ("T4.1", "L4.3", "T4.4"):
    return checker(G, _default_n(G, n))

  if theorem_id == "T3.4":
    return checker(G, grouplib.center(G), grouplib.center(G))

  if theorem_id == "L3.3":
    return checker(G, grouplib.center(G), grouplib.whole(G))

  if theorem_id == "T3.5":
    return checker(G, grouplib.center(G), _default_n(G, n))

  if theorem_id == "L2.6":
    factors = group_spec.product_factors(ast) if ast is not None else []
    if len(factors) != 3:
      raise BadParameterError("L2.6 needs a product of three abelian"
          " p-groups G x H x K")
    G_inv, H_inv, K_inv = [abelianlib.abelian_invariants(
        grouplib.whole(group_spec.construct(factor))) for factor in factors]
    return checker(G_inv, H_inv, K_inv)

  H, K = _product_pair(ast)
  if theorem_id in ("L2.3", "L2.5"):
    return checker(H, K)

  n = n if n is not None else 2
  if theorem_id == "T3.1":
    P = grouplib.direct_product([H, K])
    return checker(P, 0, grouplib.gamma(H, n), grouplib.center(H))

  return checker(H, K, n)


def check(args):
  G, ast = _load_group(args.spec)
  report = run_check(args.theorem_id, G, ast, args.n)

  if args.json:
    util.write_reports_json([report], args.json)

  log.check_outcome(report)
  if report.status == FAILED:
    return EXIT_FAILED
  return EXIT_OK


def corpus(args):
  theorems = None
  if args.theorems is not None:
    theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]

  reports = checklib.run_corpus(max_order=args.max_order, theorems=theorems,
      jobs=args.jobs)

  if args.json:
    util.write_reports_json(reports, args.json)
  if args.csv:
    util.write_reports_csv(reports, args.csv)

  failed = [report for report in reports if report.status == FAILED]
  if failed:
    log.fail_check("{0} of {1} reports failed".format(len(failed),
        len(reports)))
    return EXIT_FAILED

  log.pass_check("{} reports, none failed".format(len(reports)))
  return EXIT_OK


def save(args):
  G, _ = _load_group(args.spec)
  util.save_cayley(G, args.path)
  return EXIT_OK


def _build_parser():
  parser = argparse.ArgumentParser(prog="groupscope",
      description="Computes automorphism subgroups of small p-groups and"
      " verifies theorems about them")

  verbosity = parser.add_mutually_exclusive_group()
  verbosity.add_argument("-v", "--verbose", dest="verbose",
      help="Verbose execution.", default=False, action="store_true")
  verbosity.add_argument("-q", "--quiet", dest="quiet",
      help="Only show passing and failing checks.", default=False,
      action="store_true")

  subparsers = parser.add_subparsers(dest="command")
  subparsers.required = True

  info_parser = subparsers.add_parser("info",
      help="Order, class, center and lower central series of a group")
  info_parser.add_argument("spec", help="Group spec or @<cayley file>")
  info_parser.set_defaults(func=info)

  aut_parser = subparsers.add_parser("aut",
      help="List automorphisms, optionally of a subgroup of Aut(G)")
  aut_parser.add_argument("spec", help="Group spec or @<cayley file>")
  aut_parser.add_argument("--filter", type=str, default=None,
      help="central, class:<n> or box:<M>,<N> with M, N one of 1, G, Z,"
      " gamma<i>")
  aut_parser.set_defaults(func=aut)

  check_parser = subparsers.add_parser("check",
      help="Verify one theorem on one group")
  check_parser.add_argument("theorem_id", help="e.g. T3.4")
  check_parser.add_argument("spec", help="Group spec or @<cayley file>")
  check_parser.add_argument("--n", type=int, default=None,
      help="Lower central series index n >= 2")
  check_parser.add_argument("--json", type=str, default=None,
      help="Write the report to this file, '-' for stdout")
  check_parser.set_defaults(func=check)

  corpus_parser = subparsers.add_parser("corpus",
      help="Verify every theorem on the group catalog")
  corpus_parser.add_argument("--max-order", dest="max_order", type=int,
      default=None, help="Largest group order, default {}".format(
      groupscope.settings.CORPUS_MAX_ORDER))
  corpus_parser.add_argument("--theorems", type=str, default=None,
      help="Comma separated theorem ids, default all")
  corpus_parser.add_argument("--json", type=str, default=None,
      help="Write the reports to this file, '-' for stdout")
  corpus_parser.add_argument("--csv", type=str, default=None,
      help="Write a summary table to this file, '-' for stdout")
  corpus_parser.add_argument("--jobs", type=int, default=None,
      help="Worker threads")
  corpus_parser.set_defaults(func=corpus)

  save_parser = subparsers.add_parser("save",
      help="Write a group as a Cayley table file")
  save_parser.add_argument("spec", help="Group spec")
  save_parser.add_argument("path", help="Output file")
  save_parser.set_defaults(func=save)

  return parser


def cli_main(argv=None):
  """
  <Purpose>
    Parses the arguments and runs a subcommand.

  <Arguments>
    argv: (optional)
            argument list without the program name, sys.argv[1:] if None

  <Exceptions>
    SystemExit with status 2 on argparse usage errors.

  <Side Effects>
    Changes the root logger level for --verbose and --quiet, applies
    GROUPSCOPE_MAX_ORDER from the environment.

  <Returns>
    The exit status.
  """
  parser = _build_parser()
  args = parser.parse_args(argv)

  if args.verbose or args.quiet:
    log.set_verbosity(verbose=args.verbose, quiet=args.quiet)

  try:
    groupscope.settings.override_from_environment(os.environ)
    return args.func(args)

  except (securesystemslib.exceptions.Error, IOError) as e:
    log.error("{0} - {1}".format(type(e).__name__, e))
    return EXIT_USAGE


def main():
  sys.exit(cli_main())


if __name__ == "__main__":
  main()
