"""
<Program Name>
  group.py

<Started>
  March 5, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Provides the Cayley table representation of finite groups and the
  structural objects built on top of it.

<Classes>
  FiniteGroup:
      a validated Cayley table with the identity at index 0

  Subgroup:
      a closed subset of the elements of a parent FiniteGroup

  QuotientGroup:
      the group of cosets of a normal subgroup, with its projection

  ProductStructure:
      a direct product with its projections and embeddings
"""

import attr
import numpy

import groupscope.settings
from groupscope.exceptions import NotAGroupError, OrderCapExceededError
from . import common as models__common


def _frozen_array(values):
  array = numpy.array(values, dtype=numpy.int64)
  array.setflags(write=False)
  return array


@attr.s(repr=False, eq=False, frozen=True)
class FiniteGroup(models__common.Metablock):
  """
  A finite group given by its full multiplication table.

  Instances are created through `grouplib.build_group`, which moves the
  identity to index 0 and fills in the inverses, or by the engines that
  derive new groups (subgroups, quotients, products). The constructor
  validates the group axioms.

  Equality is identity: two tables describing the same group are different
  objects and isomorphism is decided by `checklib.iso_test`.

  <Attributes>
    order:
        number of elements, elements are 0 ... order - 1

    table:
        read-only numpy array, table[i][j] is the index of g_i * g_j

    inverse:
        read-only numpy array, inverse[i] is the index of g_i^-1

    identity:
        always 0

    labels:
        optional list of element names

    relabeling:
        if the identity had to be moved when the table was loaded, the
        list mapping each original index to its new index, else None

    name:
        optional human readable description, e.g. a group spec
  """
  order = attr.ib()
  table = attr.ib(converter=_frozen_array)
  inverse = attr.ib(converter=_frozen_array)
  identity = attr.ib(default=0)
  labels = attr.ib(default=None)
  relabeling = attr.ib(default=None)
  name = attr.ib(default=None)
  _cache = attr.ib(factory=dict, init=False)

  def __attrs_post_init__(self):
    # the remaining checks index into the table
    self._validate_shape()
    self.validate()

  def mul(self, a, b):
    return int(self.table[a, b])

  def inv(self, a):
    return int(self.inverse[a])

  def elements(self):
    return range(self.order)

  def label(self, a):
    if self.labels:
      return self.labels[a]
    return str(a)

  def power(self, a, k):
    result = self.identity
    for _ in range(k):
      result = int(self.table[result, a])
    return result

  def as_dict(self):
    data = {"order": self.order, "table": self.table.tolist()}
    if self.labels:
      data["labels"] = list(self.labels)
    if self.relabeling:
      data["relabeling"] = list(self.relabeling)
    return data

  def _validate_shape(self):
    if self.table.shape != (self.order, self.order):
      raise NotAGroupError("Cayley table of order {0} has shape {1}".format(
          self.order, self.table.shape))

    if self.order > groupscope.settings.ORDER_CAP:
      raise OrderCapExceededError("Order {0} exceeds the cap {1}".format(
          self.order, groupscope.settings.ORDER_CAP))

    if self.table.min() < 0 or self.table.max() >= self.order:
      raise NotAGroupError("Cayley table entries out of range")

    if (self.inverse.shape != (self.order,) or self.inverse.min() < 0 or
        self.inverse.max() >= self.order):
      raise NotAGroupError("Inverse array does not match the table")

    if self.labels is not None and len(self.labels) != self.order:
      raise NotAGroupError("Expected {0} labels, got {1}".format(
          self.order, len(self.labels)))

  def _validate_identity(self):
    elements = numpy.arange(self.order)
    if self.identity != 0:
      raise NotAGroupError("Identity must be at index 0")

    broken = numpy.flatnonzero((self.table[0, :] != elements) |
        (self.table[:, 0] != elements))
    if len(broken):
      raise NotAGroupError("Element 0 is not an identity, fails at"
          " element {}".format(int(broken[0])), witness=(0, int(broken[0])))

    products = self.table[elements, self.inverse]
    if not (products == 0).all():
      bad = int(numpy.flatnonzero(products != 0)[0])
      raise NotAGroupError("Element {} has no inverse".format(bad),
          witness=(bad,))

  def _validate_associativity(self):
    for a in range(self.order):
      # (a * b) * c against a * (b * c) for all b, c at once
      left = self.table[self.table[a, :], :]
      right = self.table[a, :][self.table]
      if not numpy.array_equal(left, right):
        b, c = [int(x) for x in numpy.argwhere(left != right)[0]]
        raise NotAGroupError("Not associative: ({0}*{1})*{2} != "
            "{0}*({1}*{2})".format(a, b, c), witness=(a, b, c))


@attr.s(repr=False, frozen=True)
class Subgroup(models__common.Metablock):
  """
  A subgroup of a FiniteGroup, stored as the sorted tuple of its member
  indices. Equality compares members only, callers that mix subgroups of
  different groups must compare parents themselves.

  <Attributes>
    parent:
        the FiniteGroup the subgroup lives in

    members:
        sorted tuple of element indices, always contains 0
  """
  parent = attr.ib(eq=False)
  members = attr.ib(converter=lambda values: tuple(sorted(set(
      int(v) for v in values))))
  _member_set = attr.ib(init=False, eq=False)
  _cache = attr.ib(init=False, eq=False)

  def __attrs_post_init__(self):
    object.__setattr__(self, "_member_set", frozenset(self.members))
    object.__setattr__(self, "_cache", {})
    self.validate()

  @property
  def order(self):
    return len(self.members)

  def __contains__(self, element):
    return element in self._member_set

  def __iter__(self):
    return iter(self.members)

  def __len__(self):
    return len(self.members)

  def is_trivial(self):
    return self.order == 1

  def is_whole(self):
    return self.order == self.parent.order

  def issubset(self, other):
    return self._member_set <= other._member_set

  def index_of(self, element):
    """Position of a parent element inside `members`, which is also its
    index in `group`. """
    positions = models__common.cached(self._cache, "positions",
        lambda: dict((m, k) for k, m in enumerate(self.members)))
    return positions[element]

  @property
  def group(self):
    """The subgroup as a FiniteGroup of its own. Element k of the returned
    group is members[k] of the parent, the identity stays at index 0. """
    return models__common.cached(self._cache, "group", self._build_group)

  def _build_group(self):
    idx = numpy.array(self.members, dtype=numpy.int64)
    positions = numpy.full(self.parent.order, -1, dtype=numpy.int64)
    positions[idx] = numpy.arange(len(idx))
    table = positions[self.parent.table[numpy.ix_(idx, idx)]]
    inverse = positions[self.parent.inverse[idx]]
    labels = None
    if self.parent.labels:
      labels = [self.parent.labels[m] for m in self.members]
    return FiniteGroup(order=len(idx), table=table, inverse=inverse,
        labels=labels)

  def as_dict(self):
    return {"order": self.order, "members": list(self.members)}

  def _validate_closure(self):
    if not self.members or self.members[0] != 0:
      raise NotAGroupError("Subgroup does not contain the identity")

    if self.members[-1] >= self.parent.order:
      raise NotAGroupError("Subgroup member out of range")

    idx = numpy.array(self.members, dtype=numpy.int64)
    inside = numpy.zeros(self.parent.order, dtype=bool)
    inside[idx] = True
    if not inside[self.parent.table[numpy.ix_(idx, idx)]].all():
      raise NotAGroupError("Subset is not closed under the product")
    if not inside[self.parent.inverse[idx]].all():
      raise NotAGroupError("Subset is not closed under inverses")


@attr.s(repr=False, eq=False, frozen=True)
class QuotientGroup(models__common.Metablock):
  """
  The quotient of `base` by the normal subgroup `kernel`.

  <Attributes>
    base:
        the FiniteGroup being divided

    kernel:
        the normal Subgroup divided out

    cosets:
        tuple of cosets, each a sorted tuple of base elements, ordered by
        their minimal member; coset k is element k of `group`

    group:
        the FiniteGroup on the cosets

    projection:
        Morphism from base onto group
  """
  base = attr.ib()
  kernel = attr.ib()
  cosets = attr.ib()
  group = attr.ib()
  projection = attr.ib()

  def __attrs_post_init__(self):
    self.validate()

  @property
  def representatives(self):
    return tuple(coset[0] for coset in self.cosets)

  def coset_of(self, element):
    return int(self.projection.image[element])

  def as_dict(self):
    return {"base_order": self.base.order,
        "kernel": list(self.kernel.members),
        "representatives": list(self.representatives)}

  def _validate_orders(self):
    if self.group.order * self.kernel.order != self.base.order:
      raise NotAGroupError("|G/N| * |N| != |G|")

  def _validate_projection(self):
    self.projection.validate()
    if self.projection.kernel_members() != self.kernel.members:
      raise NotAGroupError("Kernel of the projection differs from N")


@attr.s(repr=False, eq=False, frozen=True)
class ProductStructure(models__common.Metablock):
  """
  The direct product of `factors`. Product elements are tuples indexed
  lexicographically, the last factor varying fastest.

  <Attributes>
    factors:
        tuple of FiniteGroup

    product:
        the FiniteGroup of the product

    projections:
        tuple of Morphism, product onto factor j

    embeddings:
        tuple of Morphism, factor j into the product
  """
  factors = attr.ib(converter=tuple)
  product = attr.ib()
  projections = attr.ib(converter=tuple)
  embeddings = attr.ib(converter=tuple)

  def __attrs_post_init__(self):
    self.validate()

  @property
  def strides(self):
    strides = []
    stride = 1
    for factor in reversed(self.factors):
      strides.append(stride)
      stride *= factor.order
    return tuple(reversed(strides))

  def encode(self, components):
    """Product index of a tuple of factor indices. """
    return sum(c * s for c, s in zip(components, self.strides))

  def decode(self, element):
    """Tuple of factor indices of a product index. """
    components = []
    for factor, stride in zip(self.factors, self.strides):
      components.append((element // stride) % factor.order)
    return tuple(components)

  def as_dict(self):
    return {"factor_orders": [factor.order for factor in self.factors],
        "order": self.product.order}

  def _validate_orders(self):
    expected = 1
    for factor in self.factors:
      expected *= factor.order
    if expected != self.product.order:
      raise NotAGroupError("Product order differs from product of factor"
          " orders")
