#!/usr/bin/env python

"""
<Program Name>
  test_group_spec.py

<Started>
  March 20, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Test parsing, printing and construction of group specs.

"""

import logging
import unittest

from mock import patch

import groupscope.settings
from groupscope import catalog
from groupscope import group_spec
from groupscope.group_spec import Constructor, Product, GroupSpec
from groupscope.exceptions import (ParseError, BadParameterError,
    OrderCapExceededError)

# Suppress all the user feedback that we print using a base logger
logging.getLogger().setLevel(logging.CRITICAL)


class TestParse(unittest.TestCase):
  """Test group_spec.parse(text) """

  def test_constructor(self):
    self.assertEqual(group_spec.parse("Mod(2, 4)"),
        Constructor(name="Mod", args=[2, 4]))
    self.assertEqual(group_spec.parse("Ab(2; 2, 1)"),
        Constructor(name="Ab", args=[2], exponents=[2, 1]))

  def test_power_arguments(self):
    self.assertEqual(group_spec.parse("Q(2^4)"),
        Constructor(name="Q", args=[16]))
    self.assertEqual(group_spec.parse("C(1^999999999)"),
        Constructor(name="C", args=[1]))

  def test_huge_powers(self):
    """Powers above the order cap fail before the power is computed. """
    for text in ("C(9^999999999)", "Q(2^4294967296)", "Ab(2; 3^99999999)"):
      with self.assertRaises(OrderCapExceededError):
        group_spec.parse(text)

    with self.assertRaises((ParseError, OrderCapExceededError)):
      group_spec.construct("C({})".format("9" * 5000))

  def test_products(self):
    expected = Product(factors=[Constructor(name="D", args=[4]),
        Constructor(name="C", args=[2])])
    self.assertEqual(group_spec.parse("D(4) x C(2)"), expected)
    self.assertEqual(group_spec.parse("D(4)×C(2)"), expected)
    self.assertEqual(group_spec.parse("(D(4)) x (C(2))"), expected)

  def test_products_are_flattened(self):
    left = group_spec.parse("(Q(8) x C(2)) x C(3)")
    right = group_spec.parse("Q(8) x (C(2) x C(3))")
    self.assertEqual(left, right)
    self.assertEqual(len(left.factors), 3)

  def test_parse_errors(self):
    """Malformed specs raise ParseError with the offending position. """
    positions = {
      "D(4) x": 6,
      "D(4": 3,
      "Foo(1)": 0,
      "C(2) C(3)": 5,
      "C(x)": 2,
      "C(2)!": 4,
      "": 0
    }
    for text, position in positions.items():
      with self.assertRaises(ParseError) as context:
        group_spec.parse(text)
      self.assertEqual(context.exception.position, position, text)
      self.assertIn("at position {}".format(position),
          str(context.exception))


class TestCanonical(unittest.TestCase):
  """Test group_spec.canonical(node) """

  def test_printing(self):
    self.assertEqual(group_spec.canonical(group_spec.parse("Ab(2;2,1)")),
        "Ab(2; 2, 1)")
    self.assertEqual(group_spec.canonical(group_spec.parse("D(4)×C(2)")),
        "D(4) x C(2)")
    self.assertEqual(str(GroupSpec.read("Q(2^3)  x C(3)")),
        "Q(8) x C(3)")

  def test_catalog_round_trip(self):
    """parse(canonical(ast)) = ast for every catalog spec. """
    for spec in catalog.CATALOG:
      ast = group_spec.parse(spec)
      self.assertEqual(group_spec.parse(group_spec.canonical(ast)), ast)
      self.assertEqual(group_spec.canonical(ast), spec)


class TestConstruct(unittest.TestCase):
  """Test group_spec.order_of and group_spec.construct """

  def test_order_of(self):
    self.assertEqual(group_spec.order_of("D(4) x C(3)"), 24)
    self.assertEqual(group_spec.order_of("Ab(3; 1, 1)"), 9)
    self.assertEqual(group_spec.order_of(group_spec.parse("Heis(3)")), 27)

  def test_huge_orders(self):
    for spec in ("Mod(2, 1000000000)", "Ab(2; 1000000000)",
        "Ab(3; 500000000, 500000000)", "C(2) x Mod(3, 999999999)"):
      with self.assertRaises(OrderCapExceededError):
        group_spec.order_of(spec)
      with self.assertRaises(OrderCapExceededError):
        group_spec.construct(spec)

  def test_bad_parameters(self):
    for spec in ("C(1, 2)", "Ab(2)", "C(2; 1)", "Q(6)", "SD(8)"):
      with self.assertRaises(BadParameterError):
        group_spec.construct(spec)

  def test_construct(self):
    G = group_spec.construct("D(4) x C(2)")
    self.assertEqual(G.order, 16)
    self.assertEqual(G.name, "D(4) x C(2)")
    self.assertEqual(group_spec.construct("C(1)").order, 1)
    self.assertEqual(group_spec.construct(GroupSpec.read("Q(8)")).order, 8)

  @patch.object(groupscope.settings, "ORDER_CAP", 16)
  def test_order_cap(self):
    """The cap is checked before any table is built. """
    with patch.object(catalog, "build") as build:
      with self.assertRaises(OrderCapExceededError):
        group_spec.construct("D(4) x C(4)")
      build.assert_not_called()

  def test_product_factors(self):
    factors = group_spec.product_factors("Q(8) x C(2)")
    self.assertEqual([group_spec.canonical(f) for f in factors],
        ["Q(8)", "C(2)"])
    self.assertEqual(len(group_spec.product_factors("Q(8)")), 1)


if __name__ == "__main__":
  unittest.main()
