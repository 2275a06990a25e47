#!/usr/bin/env python
"""
<Program Name>
  test_common.py

<Started>
  October 18, 2026

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Test filling the group caches, also from several threads.

"""

import time
import unittest
import concurrent.futures

from mock import Mock

from groupscope import grouplib
from groupscope import group_spec
from groupscope.models.common import cached
from groupscope.exceptions import OrderCapExceededError


class TestCached(unittest.TestCase):
  """Test common.cached(cache, key, compute) """

  def test_fills_once(self):
    cache = {}
    compute = Mock(return_value=[1, 2])
    first = cached(cache, "key", compute)
    self.assertIs(cached(cache, "key", compute), first)
    compute.assert_called_once_with()
    self.assertEqual(cache["key"], [1, 2])

  def test_errors_are_not_cached(self):
    cache = {}
    compute = Mock(side_effect=[OrderCapExceededError("too large"), 3])
    with self.assertRaises(OrderCapExceededError):
      cached(cache, "key", compute)
    self.assertNotIn("key", cache)
    self.assertEqual(cached(cache, "key", compute), 3)

  def test_concurrent_fill(self):
    """Threads that miss the cache together still share one value. """
    cache = {}
    calls = []
    def compute():
      calls.append(None)
      time.sleep(0.05)
      return object()

    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
      values = list(pool.map(lambda _: cached(cache, "key", compute),
          range(8)))

    self.assertEqual(len(calls), 1)
    for value in values:
      self.assertIs(value, values[0])


class TestSharedGroups(unittest.TestCase):
  """Test that derived groups keep their identity across threads. """

  def test_quotient_and_subgroup_group(self):
    G = group_spec.construct("D(8)")
    Z = grouplib.center(G)
    with concurrent.futures.ThreadPoolExecutor(max_workers=6) as pool:
      quotients = list(pool.map(lambda _: grouplib.quotient(G, Z), range(6)))
      groups = list(pool.map(lambda _: Z.group, range(6)))

    for Q in quotients:
      self.assertIs(Q, quotients[0])
    for H in groups:
      self.assertIs(H, groups[0])
    self.assertEqual(quotients[0].group.order, 8)


if __name__ == "__main__":
  unittest.main()
