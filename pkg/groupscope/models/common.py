"""
<Program Name>
  common.py

<Started>
  March 5, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Provides the base class for the groupscope models.

<Classes>
  Metablock:
      pretty printed canonical JSON representation, dump and validation

<Functions>
  cached:
      fills a `_cache` entry once, also when groups are shared between
      threads

"""

import threading

import attr
import canonicaljson

# Guards the creation of the per-key locks of `cached`
_LOCKS_GUARD = threading.Lock()


@attr.s(repr=False, eq=False)
class Metablock(object):
  """Objects with base class Metablock have a __repr__ method
  that returns a canonical pretty printed JSON string and can be dumped to a
  file. Subclasses whose attributes are not plain JSON (numpy arrays, parent
  references) override `as_dict`. """

  def as_dict(self):
    return attr.asdict(self)

  def __repr__(self):
    return canonicaljson.encode_pretty_printed_json(
        self.as_dict()).decode("utf-8")

  def dump(self, filename):
    with open(filename, 'wt') as fp:
      fp.write("{}".format(self))

  def validate(self):
    """
      <Purpose>
        Inspects the class (or subclass) for validate methods to ensure the
        all its members are properly formed. This method can be used to ensure
        the data contained in this class is proper before calling dump.

      <Arguments>
        None

      <Exceptions>
        FormatError or one of the groupscope.exceptions if any of the members
        of this class are not properly populated.

      <Side Effects>
        None

      <Returns>
        None
    """
    # dir() does not evaluate properties, some of them build whole groups
    for name in dir(self):
      if name.startswith("_validate_"):
        getattr(self, name)()


def cached(cache, key, compute):
  """
  <Purpose>
    Returns cache[key] and fills it with compute() on the first request.
    Threads that ask for a key while another thread computes it wait for
    that thread, so all of them get the same object.

  <Arguments>
    cache:
            the `_cache` dict of a group or subgroup

    key:
            hashable cache key

    compute:
            callable without arguments

  <Exceptions>
    Whatever compute() raises, nothing is cached then.

  <Side Effects>
    Stores the result and a lock for the key in `cache`.

  <Returns>
    The cached value.
  """
  try:
    return cache[key]
  except KeyError:
    pass

  with _LOCKS_GUARD:
    lock = cache.setdefault("fill_locks", {}).setdefault(key,
        threading.Lock())

  with lock:
    if key not in cache:
      cache[key] = compute()
  return cache[key]
