"""
<Program Name>
  invariants.py

<Started>
  March 6, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Provides a class for the invariants of a finite abelian p-group.
"""

import attr

import groupscope.formats
from groupscope.exceptions import NotAGroupError
from . import common as models__common


@attr.s(repr=False, frozen=True)
class AbelianPInvariants(models__common.Metablock):
  """
  The cyclic decomposition C_{p^n_1} x ... x C_{p^n_s} of an abelian p-group,
  n_1 >= ... >= n_s, optionally with a basis realizing it. Equality compares
  prime and exponents.

  <Attributes>
    prime:
        p, None for the trivial group when no prime was requested

    exponents:
        tuple n_1 >= n_2 >= ... >= n_s >= 1, empty for the trivial group

    basis:
        tuple of element indices of orders p^n_1, ..., p^n_s generating the
        group as an internal direct sum, empty if the invariants were given
        by hand
  """
  prime = attr.ib()
  exponents = attr.ib(converter=tuple)
  basis = attr.ib(default=(), converter=tuple, eq=False)

  def __attrs_post_init__(self):
    self.validate()

  @property
  def rank(self):
    return len(self.exponents)

  @property
  def order(self):
    if not self.exponents:
      return 1
    return self.prime ** sum(self.exponents)

  @property
  def exponent(self):
    if not self.exponents:
      return 1
    return self.prime ** self.exponents[0]

  def as_dict(self):
    data = {"exponents": list(self.exponents)}
    if self.prime is not None:
      data["p"] = self.prime
    return data

  @staticmethod
  def read(data):
    """Static method to instantiate invariants from a Python dictionary
    in the report format {"p": 2, "exponents": [2, 1]}. """
    groupscope.formats.INVARIANTS_SCHEMA.check_match(data)
    return AbelianPInvariants(prime=data.get("p"),
        exponents=data["exponents"])

  def _validate_exponents(self):
    if list(self.exponents) != sorted(self.exponents, reverse=True):
      raise NotAGroupError("Exponents must be weakly decreasing, got"
          " {}".format(list(self.exponents)))

    for exponent in self.exponents:
      if not isinstance(exponent, int) or exponent < 1:
        raise NotAGroupError("Exponents must be positive integers, got"
            " {}".format(list(self.exponents)))

    if self.exponents and self.prime is None:
      raise NotAGroupError("Nontrivial invariants need a prime")

  def _validate_basis(self):
    if self.basis and len(self.basis) != len(self.exponents):
      raise NotAGroupError("Basis has {0} elements for {1} cyclic"
          " factors".format(len(self.basis), len(self.exponents)))
