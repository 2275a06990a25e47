#!/usr/bin/env python

"""
<Program Name>
  test_homlib.py

<Started>
  March 21, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Test enumeration of homomorphisms into abelian groups and Hom_c.

"""

import logging
import unittest

from mock import patch

import groupscope.settings
from groupscope import grouplib
from groupscope import homlib
from groupscope import group_spec
from groupscope.exceptions import (NotAbelianCodomainError,
    OrderCapExceededError, HypothesisViolatedError, MismatchedParentError)

# Suppress all the user feedback that we print using a base logger
logging.getLogger().setLevel(logging.CRITICAL)


class TestEnumerateHoms(unittest.TestCase):
  """Test count_homs(G, A) and enumerate_homs(G, A) """

  @classmethod
  def setUpClass(self):
    self.Q8 = group_spec.construct("Q(8)")
    self.D3 = group_spec.construct("D(3)")
    self.C2 = group_spec.construct("C(2)")

  def test_counts(self):
    cases = [
      ("Q(8)", "C(2)", 4),
      ("D(3)", "C(2)", 2),
      ("D(3)", "C(3)", 1),
      ("C(4)", "C(6)", 2),
      ("C(6)", "C(6)", 6),
      ("C(1)", "C(5)", 1),
      ("Heis(3)", "C(3)", 9)
    ]
    for domain, codomain, count in cases:
      G = group_spec.construct(domain)
      A = group_spec.construct(codomain)
      self.assertEqual(homlib.count_homs(G, A), count, (domain, codomain))
      homs = homlib.enumerate_homs(G, A)
      self.assertEqual(len(homs), count, (domain, codomain))

  def test_members_are_homomorphisms(self):
    homs = homlib.enumerate_homs(self.Q8, group_spec.construct("C(4)"))
    self.assertTrue(homs.members[0].is_trivial())
    self.assertEqual(len(set(homs.members)), len(homs))
    for f in homs:
      f.validate()

  def test_subgroup_codomain(self):
    """A Subgroup codomain is materialized as its own group. """
    Z = grouplib.center(self.Q8)
    homs = homlib.enumerate_homs(self.Q8, Z)
    self.assertIs(homs.codomain, Z.group)
    self.assertEqual(len(homs), 4)

  def test_non_abelian_codomain(self):
    with self.assertRaises(NotAbelianCodomainError):
      homlib.enumerate_homs(self.C2, self.D3)
    with self.assertRaises(NotAbelianCodomainError):
      homlib.count_homs(self.C2, self.D3)

  @patch.object(groupscope.settings, "HOM_ENUMERATION_LIMIT", 3)
  def test_enumeration_limit(self):
    with self.assertRaises(OrderCapExceededError):
      homlib.enumerate_homs(self.Q8, self.C2)
    self.assertEqual(homlib.count_homs(self.Q8, self.C2), 4)

  def test_from_quotient(self):
    """Hom(D(4)/Z, Z) has four members. """
    G = group_spec.construct("D(4)")
    Z = grouplib.center(G)
    homs = homlib.enumerate_homs_from_quotient(G, Z, Z)
    self.assertEqual(len(homs), 4)
    self.assertIs(homs.domain, grouplib.quotient(G, Z).group)


class TestHomC(unittest.TestCase):
  """Test hom_c_subset(G, H, n) """

  def test_extraspecial(self):
    """Every homomorphism Q(8)/Z -> gamma_2 satisfies the class condition. """
    G = group_spec.construct("Q(8)")
    homs = homlib.hom_c_subset(G, grouplib.center(G), 2)
    self.assertEqual(len(homs), 4)

  def test_heisenberg(self):
    G = group_spec.construct("Heis(3)")
    self.assertEqual(len(homlib.hom_c_subset(G, grouplib.center(G), 2)), 9)

  def test_modular(self):
    """Mod(2, 4) with H = Z: every g outside Z has [g, G] = gamma_2, so all
    four maps survive. """
    G = group_spec.construct("Mod(2, 4)")
    Z = grouplib.center(G)
    homs = homlib.hom_c_subset(G, Z, 2)
    everything = homlib.enumerate_homs_from_quotient(G, Z,
        grouplib.gamma(G, 2))
    self.assertEqual(len(everything), 4)
    self.assertTrue(set(homs.members) <= set(everything.members))
    self.assertEqual(len(homs), 4)

  def test_hypotheses(self):
    G = group_spec.construct("D(8)")
    with self.assertRaises(HypothesisViolatedError):
      homlib.hom_c_subset(G, grouplib.center(G), 2)
    with self.assertRaises(HypothesisViolatedError):
      homlib.hom_c_subset(G, grouplib.center(G), 1)
    with self.assertRaises(HypothesisViolatedError):
      homlib.hom_c_subset(group_spec.construct("D(3)"),
          grouplib.center(group_spec.construct("D(3)")), 2)

    Q8 = group_spec.construct("Q(8)")
    with self.assertRaises(MismatchedParentError):
      homlib.hom_c_subset(Q8, grouplib.center(G), 2)


class TestHomArithmetic(unittest.TestCase):
  """Test compose, pointwise products and homset_group. """

  def test_homset_group(self):
    """Hom(Q(8), C(2)) is a Klein four group under the pointwise
    product. """
    homs = homlib.enumerate_homs(group_spec.construct("Q(8)"),
        group_spec.construct("C(2)"))
    H = homlib.homset_group(homs)
    self.assertEqual(H.order, 4)
    self.assertTrue(grouplib.is_abelian(H))
    self.assertEqual(grouplib.exponent(H), 2)

  def test_pointwise_inverse(self):
    homs = homlib.enumerate_homs(group_spec.construct("C(4)"),
        group_spec.construct("C(4)"))
    for f in homs:
      self.assertTrue(homlib.pointwise_product(f,
          homlib.pointwise_inverse(f)).is_trivial())

  def test_compose(self):
    C4 = group_spec.construct("C(4)")
    C2 = group_spec.construct("C(2)")
    into = homlib.enumerate_homs(C2, C4).members[1]
    out = homlib.enumerate_homs(C4, C2).members[1]
    composed = homlib.compose(out, into)
    self.assertIs(composed.domain, C2)
    self.assertTrue(composed.is_trivial())

    with self.assertRaises(MismatchedParentError):
      homlib.compose(into, into)


if __name__ == "__main__":
  unittest.main()
