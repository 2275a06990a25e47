#!/usr/bin/env python
"""
<Program Name>
  test_group.py

<Started>
  March 27, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Test FiniteGroup, Subgroup, QuotientGroup and ProductStructure.

"""

import json
import unittest

import numpy
from mock import patch

import groupscope.settings
from groupscope import grouplib
from groupscope import group_spec
from groupscope.models.group import FiniteGroup, Subgroup
from groupscope.exceptions import NotAGroupError, OrderCapExceededError


class TestFiniteGroupValidator(unittest.TestCase):
  """Test the validators run when a FiniteGroup is created. """

  def test_shape(self):
    with self.assertRaises(NotAGroupError):
      FiniteGroup(order=2, table=[[0, 1, 2], [1, 2, 0], [2, 0, 1]],
          inverse=[0, 2, 1])

    with self.assertRaises(NotAGroupError):
      FiniteGroup(order=2, table=[[0, 1], [1, 0]], inverse=[0, 1],
          labels=["e"])

    with self.assertRaises(NotAGroupError):
      FiniteGroup(order=2, table=[[0, 1], [1, 2]], inverse=[0, 1])

  def test_identity(self):
    with self.assertRaises(NotAGroupError) as context:
      FiniteGroup(order=2, table=[[1, 0], [0, 1]], inverse=[0, 1])
    self.assertEqual(context.exception.witness, (0, 0))

    with self.assertRaises(NotAGroupError):
      FiniteGroup(order=2, table=[[0, 1], [1, 0]], inverse=[0, 0])

  @patch.object(groupscope.settings, "ORDER_CAP", 1)
  def test_order_cap(self):
    with self.assertRaises(OrderCapExceededError):
      FiniteGroup(order=2, table=[[0, 1], [1, 0]], inverse=[0, 1])

  def test_read_only_table(self):
    G = grouplib.build_group([[0, 1], [1, 0]])
    with self.assertRaises(ValueError):
      G.table[0, 0] = 1

  def test_repr(self):
    """The repr is the canonical JSON of the table. """
    G = grouplib.build_group([[0, 1], [1, 0]])
    self.assertEqual(json.loads(repr(G)),
        {"order": 2, "table": [[0, 1], [1, 0]]})

    H = grouplib.build_group([[0, 1], [1, 0]])
    self.assertNotEqual(G, H)

  def test_helpers(self):
    G = group_spec.construct("C(4)")
    self.assertEqual(G.power(1, 3), 3)
    self.assertEqual(G.power(2, 0), 0)
    self.assertEqual(G.mul(3, 3), 2)
    self.assertEqual(G.inv(1), 3)
    self.assertEqual(grouplib.build_group([[0]]).label(0), "0")


class TestSubgroup(unittest.TestCase):
  """Test Subgroup validation, equality and the subgroup as a group. """

  @classmethod
  def setUpClass(self):
    self.C4 = group_spec.construct("C(4)")

  def test_members(self):
    S = Subgroup(parent=self.C4, members=[2, 0, 2])
    self.assertEqual(S.members, (0, 2))
    self.assertIn(2, S)
    self.assertNotIn(1, S)
    self.assertEqual(len(S), 2)
    self.assertEqual(S.index_of(2), 1)

  def test_not_a_subgroup(self):
    for members in ([0, 1], [1, 3], [0, 4]):
      with self.assertRaises(NotAGroupError):
        Subgroup(parent=self.C4, members=members)

  def test_equality_ignores_parent(self):
    other = group_spec.construct("C(4)")
    self.assertEqual(Subgroup(parent=self.C4, members=[0, 2]),
        Subgroup(parent=other, members=[0, 2]))

  def test_group(self):
    S = Subgroup(parent=self.C4, members=[0, 2])
    self.assertEqual(S.group.table.tolist(), [[0, 1], [1, 0]])
    self.assertEqual(S.group.labels, ["1", "a^2"])
    self.assertIs(S.group, S.group)


class TestQuotientAndProduct(unittest.TestCase):
  """Test QuotientGroup and ProductStructure. """

  def test_quotient(self):
    G = group_spec.construct("D(4)")
    Q = grouplib.quotient(G, grouplib.center(G))
    Q.validate()
    self.assertEqual(len(Q.representatives), 4)
    self.assertEqual(Q.as_dict()["kernel"], [0, 2])
    self.assertEqual(Q.coset_of(2), 0)

  def test_product(self):
    P = grouplib.direct_product([group_spec.construct("Q(8)"),
        group_spec.construct("C(2)")])
    self.assertEqual(P.as_dict(), {"factor_orders": [8, 2], "order": 16})
    self.assertTrue(numpy.array_equal(P.product.table[0],
        numpy.arange(16)))


if __name__ == "__main__":
  unittest.main()
