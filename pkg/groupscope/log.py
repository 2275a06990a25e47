"""
<Program Name>
  log.py

<Started>
  March 4, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Simple wrapper of Python's logger module. Check outcomes are logged at
  CRITICAL so that they stay visible with --quiet.
"""

import logging
import groupscope.settings

logging.basicConfig(level=groupscope.settings.LOG_LEVEL, format='%(message)s')

def set_verbosity(verbose=False, quiet=False):
  """INFO for verbose, CRITICAL for quiet, the settings level otherwise. """
  level = groupscope.settings.LOG_LEVEL
  if verbose:
    level = logging.INFO
  elif quiet:
    level = logging.CRITICAL
  logging.getLogger().setLevel(level)

def info(msg):
  """Verbose user feedback. """
  logging.info("{}".format(msg))

def warn(msg):
  """Verbose user warning. """
  logging.warning("WARNING: {}".format(msg))

def error(msg):
  """Prints unexpected errors """
  logging.error("ERROR: {}".format(msg))

def pass_check(msg):
  logging.critical("PASSING: {}".format(msg))

def fail_check(msg):
  logging.critical("FAILING: {}".format(msg))

def check_outcome(report):
  """Logs one TheoremReport, FAILED reports as failing checks and everything
  else, NOT-APPLICABLE included, as passing. """
  msg = "{0} on {1}: {2}".format(report.theorem_id, report.group_spec,
      report.status)
  if report.status == "FAILED":
    fail_check(msg)
  else:
    pass_check(msg)
