#!/usr/bin/env python

"""
<Program Name>
  test_abelianlib.py

<Started>
  March 21, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Test abelian invariants, var and the Hom order formulas.

"""

import logging
import unittest

from groupscope import grouplib
from groupscope import abelianlib
from groupscope import homlib
from groupscope import group_spec
from groupscope.models.invariants import AbelianPInvariants
from groupscope.exceptions import (NotAbelianError, NotPrimePowerError,
    PrimeMismatchError, RankMismatchError, NotComponentwiseDominatedError)

# Suppress all the user feedback that we print using a base logger
logging.getLogger().setLevel(logging.CRITICAL)


def _inv(p, *exponents):
  return AbelianPInvariants(prime=p, exponents=exponents)


class TestAbelianInvariants(unittest.TestCase):
  """Test abelian_invariants(X, prime=None) and abelian_basis(X) """

  def test_invariants(self):
    expected = {"C(8)": (3,), "Ab(2; 2, 1)": (2, 1),
        "Ab(2; 1, 1, 1)": (1, 1, 1), "Ab(3; 1, 1)": (1, 1),
        "C(2) x C(4)": (2, 1), "C(1)": ()}
    for spec, exponents in expected.items():
      invariants = abelianlib.abelian_invariants(group_spec.construct(spec))
      self.assertEqual(invariants.exponents, exponents, spec)

  def test_basis_realizes_invariants(self):
    G = group_spec.construct("Ab(2; 2, 1)")
    invariants = abelianlib.abelian_invariants(G)
    self.assertEqual([grouplib.element_order(G, b)
        for b in invariants.basis], [4, 2])
    self.assertTrue(grouplib.subgroup_generate(G,
        invariants.basis).is_whole())

  def test_subgroup_invariants(self):
    """Invariants of a subgroup, basis in parent indices. """
    G = group_spec.construct("Q(8)")
    Z = grouplib.center(G)
    invariants = abelianlib.abelian_invariants(Z)
    self.assertEqual((invariants.prime, invariants.exponents), (2, (1,)))
    self.assertEqual(list(invariants.basis), [Z.members[1]])

  def test_errors(self):
    with self.assertRaises(NotAbelianError):
      abelianlib.abelian_invariants(group_spec.construct("D(3)"))
    with self.assertRaises(NotPrimePowerError):
      abelianlib.abelian_invariants(group_spec.construct("C(6)"))
    with self.assertRaises(PrimeMismatchError):
      abelianlib.abelian_invariants(group_spec.construct("C(9)"), prime=2)

  def test_abelian_basis(self):
    """C(12) splits into cyclic factors of orders 4 and 3. """
    G = group_spec.construct("C(12)")
    basis = abelianlib.abelian_basis(G)
    self.assertEqual(sorted(order for _, order in basis), [3, 4])
    self.assertTrue(grouplib.subgroup_generate(G,
        [b for b, _ in basis]).is_whole())

  def test_omega_count(self):
    self.assertEqual(abelianlib.omega_count(group_spec.construct("C(4)"),
        2), 2)
    self.assertEqual(abelianlib.omega_count(group_spec.construct(
        "Ab(2; 1, 1)"), 2), 4)


class TestVar(unittest.TestCase):
  """Test var(G_inv, H_inv) """

  def test_values(self):
    self.assertEqual(abelianlib.var(_inv(2, 1, 1), _inv(2, 1, 1)), 1)
    self.assertEqual(abelianlib.var(_inv(2, 1), _inv(2, 3)), 2)
    self.assertEqual(abelianlib.var(_inv(2, 1, 1), _inv(2, 2, 1)), 2)
    self.assertEqual(abelianlib.var(_inv(2, 2, 1), _inv(2, 3, 2)), 2)
    self.assertEqual(abelianlib.var(_inv(3, 2, 1), _inv(3, 3, 1)), 9)

  def test_errors(self):
    with self.assertRaises(RankMismatchError):
      abelianlib.var(_inv(2, 1), _inv(2, 1, 1))
    with self.assertRaises(NotComponentwiseDominatedError):
      abelianlib.var(_inv(2, 2), _inv(2, 1))
    with self.assertRaises(PrimeMismatchError):
      abelianlib.var(_inv(2, 1), _inv(3, 1))

  def test_rank_and_exponent(self):
    invariants = _inv(3, 2, 1, 1)
    self.assertEqual(abelianlib.rank(invariants), 3)
    self.assertEqual(abelianlib.exponent_of(invariants), 9)
    self.assertEqual(invariants.order, 81)


class TestHomOrder(unittest.TestCase):
  """Test hom_order against enumerated Hom sets. """

  def test_formula(self):
    self.assertEqual(abelianlib.hom_order(_inv(2, 2, 1), _inv(2, 1)), 4)
    self.assertEqual(abelianlib.hom_order(_inv(2, 2), _inv(2, 2)), 4)
    self.assertEqual(abelianlib.hom_order(_inv(3, 1), _inv(None)), 1)

  def test_against_enumeration(self):
    """The formula agrees with brute force on all types of order <= 8. """
    types = abelianlib.invariant_types(2, 3)
    groups = dict((inv.exponents, group_spec.construct("Ab(2; {})".format(
        ", ".join(str(e) for e in inv.exponents))) if inv.exponents else
        group_spec.construct("C(1)")) for inv in types)
    for A in types:
      for B in types:
        count = len(homlib.enumerate_homs(groups[A.exponents],
            groups[B.exponents]))
        self.assertEqual(count, abelianlib.hom_order(A, B),
            (A.exponents, B.exponents))


class TestLemma26(unittest.TestCase):
  """Test lemma26_test(G_inv, H_inv, K_inv) """

  def test_cases(self):
    # equal ranks, exp(G) = 2 <= var = 2
    outcome = abelianlib.lemma26_test(_inv(2, 1), _inv(2, 1), _inv(2, 2))
    self.assertTrue(outcome.hom_equal)
    self.assertTrue(outcome.criterion)
    self.assertEqual(outcome.r, 1)

    # exp(G) = 4 > var = 2
    outcome = abelianlib.lemma26_test(_inv(2, 2), _inv(2, 1), _inv(2, 2))
    self.assertFalse(outcome.hom_equal)
    self.assertFalse(outcome.criterion)

    # ranks differ
    outcome = abelianlib.lemma26_test(_inv(2, 1), _inv(2, 1), _inv(2, 1, 1))
    self.assertFalse(outcome.hom_equal)
    self.assertFalse(outcome.criterion)
    self.assertEqual(outcome.r, None)

  def test_holds_on_all_small_types(self):
    for p in (2, 3):
      types = abelianlib.invariant_types(p, 3)
      for G in types[1:]:
        for K in types:
          for H in types:
            if abelianlib.is_dominated(H, K):
              self.assertTrue(abelianlib.lemma26_test(G, H, K).holds)

  def test_not_dominated(self):
    with self.assertRaises(NotComponentwiseDominatedError):
      abelianlib.lemma26_test(_inv(2, 1), _inv(2, 2), _inv(2, 1))


class TestTypes(unittest.TestCase):
  """Test partitions and invariant_types. """

  def test_partitions(self):
    self.assertEqual(len(abelianlib.partitions(4)), 5)
    self.assertEqual(abelianlib.partitions(0), [[]])
    self.assertEqual(abelianlib.partitions(3), [[3], [2, 1], [1, 1, 1]])

  def test_invariant_types(self):
    types = abelianlib.invariant_types(2, 2)
    self.assertEqual([t.exponents for t in types],
        [(), (1,), (2,), (1, 1)])
    self.assertEqual(types[0].prime, None)


if __name__ == "__main__":
  unittest.main()
