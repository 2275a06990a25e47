"""
<Program Name>
  settings.py

<Started>
  March 4, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Caps and defaults used throughout groupscope. Values are read at call time,
  i.e. `groupscope.settings.ORDER_CAP = 128` takes effect immediately.

  The only value that can be changed from outside the process is the order
  cap, through the GROUPSCOPE_MAX_ORDER environment variable, see
  `override_from_environment`.

"""
import logging

import groupscope.exceptions

# Debug level INFO shows corpus progress and cap warnings
LOG_LEVEL = logging.WARNING
# Debug level CRITICAL only shows passing and failing checks
#LOG_LEVEL = logging.CRITICAL

# Largest group built from a Cayley table, associativity is verified in full
# up to this order
ORDER_CAP = 256

# Automorphism enumeration runs silently up to the soft cap and with a warning
# up to the hard cap
AUT_ENUMERATION_CAP = 64
AUT_HARD_CAP = 128

# Largest group searched for abelian direct factors
PURELY_SEARCH_CAP = 64

# Groups up to this order get exhaustive sweeps over pairs of normal
# subgroups, larger ones only over the center and lower central series
PAIR_SWEEP_MAX_ORDER = 16

# Default bound for corpus runs
CORPUS_MAX_ORDER = 32

# Largest Hom set that is materialized member by member
HOM_ENUMERATION_LIMIT = 4096

# Worker threads for corpus runs
CORPUS_JOBS = 1

ENVIRONMENT_ORDER_CAP = "GROUPSCOPE_MAX_ORDER"


def override_from_environment(environ):
  """Applies GROUPSCOPE_MAX_ORDER from the passed mapping to ORDER_CAP.
  Raises BadParameterError if the value is not a positive integer. """
  global ORDER_CAP

  value = environ.get(ENVIRONMENT_ORDER_CAP)
  if value is None:
    return

  try:
    cap = int(value)
  except ValueError:
    raise groupscope.exceptions.BadParameterError(
        "{0} must be an integer, got '{1}'".format(
            ENVIRONMENT_ORDER_CAP, value))

  if cap < 1:
    raise groupscope.exceptions.BadParameterError(
        "{0} must be positive, got '{1}'".format(ENVIRONMENT_ORDER_CAP, cap))

  ORDER_CAP = cap
