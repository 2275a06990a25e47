"""
<Program Name>
  grouplib.py

<Started>
  March 8, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Provides the structural operations on Cayley table groups: construction,
  closures, center, commutator subgroups, the lower central series,
  quotients, direct products and normal subgroups.

  Commutators follow [g, x] = g^-1 x^-1 g x and conjugates x^-1 g x.

  Derived data (element orders, commutator table, lower central series,
  normal subgroups, quotients) is cached in the `_cache` of the group it
  was computed for, see `models.common.cached`. Groups are immutable, so
  the cache never goes stale.

"""
import collections

import numpy

import groupscope.settings
from groupscope import log
from groupscope.models.common import cached
from groupscope.models.group import (FiniteGroup, Subgroup, QuotientGroup,
    ProductStructure)
from groupscope.models.morphism import Morphism
from groupscope.exceptions import (NotAGroupError, MismatchedParentError,
    NotNormalError, NotNilpotentError, OrderCapExceededError,
    NotPrimePowerError, NotMemberError, BadParameterError)


def build_group(table, labels=None, name=None):
  """
  <Purpose>
    Builds a FiniteGroup from a raw multiplication table. If the identity is
    not element 0, it is swapped with element 0 and the swap is recorded in
    the `relabeling` of the returned group.

  <Arguments>
    table:
            square list of lists (or numpy array) of element indices,
            table[i][j] is the index of g_i * g_j

    labels: (optional)
            list of element names, in the order of the passed table

    name: (optional)
            description of the group, e.g. its group spec

  <Exceptions>
    NotAGroupError if the table is not square, has entries out of range or
    fails the identity, inverse or associativity axioms. The violating
    element, pair or triple is stored as the exception's `witness`.

    OrderCapExceededError if the table is larger than
    `settings.ORDER_CAP`.

  <Side Effects>
    None.

  <Returns>
    A FiniteGroup.
  """
  try:
    table = numpy.array(table, dtype=numpy.int64)
  except (ValueError, TypeError) as e:
    raise NotAGroupError("Cayley table is not a rectangular integer matrix:"
        " {}".format(e))

  if table.ndim != 2 or table.shape[0] != table.shape[1] or not table.size:
    raise NotAGroupError("Cayley table must be a non-empty square matrix,"
        " got shape {}".format(table.shape))

  order = table.shape[0]
  if order > groupscope.settings.ORDER_CAP:
    raise OrderCapExceededError("Order {0} exceeds the cap {1}".format(
        order, groupscope.settings.ORDER_CAP))

  if table.min() < 0 or table.max() >= order:
    raise NotAGroupError("Cayley table entries out of range")

  elements = numpy.arange(order)
  candidates = [e for e in range(order)
      if numpy.array_equal(table[e], elements) and
      numpy.array_equal(table[:, e], elements)]
  if not candidates:
    raise NotAGroupError("Cayley table has no identity element")
  identity = candidates[0]

  relabeling = None
  if identity != 0:
    # swap the identity and element 0, the swap is its own inverse
    perm = numpy.arange(order)
    perm[0], perm[identity] = identity, 0
    table = perm[table[numpy.ix_(perm, perm)]]
    if labels is not None:
      labels = [labels[int(old)] for old in perm]
    relabeling = [int(new) for new in perm]
    log.info("Moved identity from index {} to index 0".format(identity))

  is_identity = (table == 0)
  inverse = numpy.argmax(is_identity, axis=1)
  missing = numpy.flatnonzero(~is_identity.any(axis=1))
  if len(missing):
    raise NotAGroupError("Element {} has no inverse".format(
        int(missing[0])), witness=(int(missing[0]),))

  return FiniteGroup(order=order, table=table, inverse=inverse,
      labels=list(labels) if labels is not None else None,
      relabeling=relabeling, name=name)


def rows_of(G):
  """The Cayley table as nested Python lists, for element-wise loops. """
  return cached(G._cache, "rows", G.table.tolist)


def _check_parent(*subgroups):
  parent = subgroups[0].parent
  for subgroup in subgroups[1:]:
    if subgroup.parent is not parent:
      raise MismatchedParentError("Subgroups belong to different groups")
  return parent


def _group_and_members(X):
  """Returns the parent group and the member array of a FiniteGroup or a
  Subgroup. """
  if isinstance(X, Subgroup):
    return X.parent, numpy.array(X.members, dtype=numpy.int64)
  return X, numpy.arange(X.order)


def whole(G):
  return cached(G._cache, "whole",
      lambda: Subgroup(parent=G, members=range(G.order)))


def trivial_subgroup(G):
  return cached(G._cache, "trivial", lambda: Subgroup(parent=G, members=[0]))


def subgroup_generate(G, gens):
  """
  <Purpose>
    Breadth-first closure of `gens` under right multiplication by the
    generators. In a finite group this is the generated subgroup.

  <Exceptions>
    NotMemberError if a generator is not an element of G.

  <Returns>
    A Subgroup of G.
  """
  gens = sorted(set(int(g) for g in gens) - {0})
  for g in gens:
    if not 0 <= g < G.order:
      raise NotMemberError("{0} is not an element of a group of order"
          " {1}".format(g, G.order))

  rows = rows_of(G)
  seen = set([0])
  queue = collections.deque([0])
  while queue:
    x = queue.popleft()
    row = rows[x]
    for g in gens:
      y = row[g]
      if y not in seen:
        seen.add(y)
        queue.append(y)

  return Subgroup(parent=G, members=seen)


def element_orders(G):
  """Numpy array of the orders of all elements of G. """
  def compute():
    orders = numpy.zeros(G.order, dtype=numpy.int64)
    elements = numpy.arange(G.order)
    power = elements.copy()
    k = 1
    while not orders.all():
      orders[(power == 0) & (orders == 0)] = k
      power = G.table[power, elements]
      k += 1
    orders.setflags(write=False)
    return orders

  return cached(G._cache, "orders", compute)


def element_order(G, g):
  return int(element_orders(G)[g])


def exponent(X):
  """Least common multiple of the element orders of a FiniteGroup or a
  Subgroup. """
  G, members = _group_and_members(X)
  return int(numpy.lcm.reduce(element_orders(G)[members]))


def commutator(G, g, x):
  """[g, x] = g^-1 x^-1 g x """
  return int(commutator_table(G)[g, x])


def conjugate(G, g, x):
  """g^x = x^-1 g x """
  return int(conjugation_table(G)[g, x])


def commutator_table(G):
  def compute():
    left = G.table[numpy.ix_(G.inverse, G.inverse)]
    table = G.table[left, G.table]
    table.setflags(write=False)
    return table

  return cached(G._cache, "commutators", compute)


def conjugation_table(G):
  """C[g, x] = x^-1 g x """
  def compute():
    table = G.table[G.table[G.inverse[None, :], numpy.arange(G.order)[:,
        None]], numpy.arange(G.order)[None, :]]
    table.setflags(write=False)
    return table

  return cached(G._cache, "conjugates", compute)


def is_abelian(X):
  G, members = _group_and_members(X)
  block = G.table[numpy.ix_(members, members)]
  return bool(numpy.array_equal(block, block.T))


def is_normal(G, S):
  """True if x^-1 s x is in S for all s in S and x in G. """
  if S.parent is not G:
    raise MismatchedParentError("Subgroup does not belong to the group")

  inside = numpy.zeros(G.order, dtype=bool)
  inside[list(S.members)] = True
  conjugates = conjugation_table(G)[list(S.members), :]
  return bool(inside[conjugates].all())


def center(G):
  """
  <Purpose>
    Computes Z(G) = {z : zg = gz for all g}.

  <Returns>
    A Subgroup of G.
  """
  def compute():
    commuting = (G.table == G.table.T).all(axis=1)
    return Subgroup(parent=G, members=numpy.flatnonzero(commuting))

  return cached(G._cache, "center", compute)


def commutator_subgroup(A, B):
  """
  <Purpose>
    Computes [A, B], the subgroup generated by all [a, b] with a in A and
    b in B.

  <Exceptions>
    MismatchedParentError if A and B live in different groups.

  <Returns>
    A Subgroup of the common parent.
  """
  G = _check_parent(A, B)
  values = commutator_table(G)[numpy.ix_(list(A.members), list(B.members))]
  return subgroup_generate(G, numpy.unique(values))


def _full_lower_central_series(G):
  """gamma_1, gamma_2, ... up to the first repeated term. """
  def compute():
    series = [whole(G)]
    while True:
      following = commutator_subgroup(series[-1], whole(G))
      if following == series[-1]:
        break
      series.append(following)
    return series

  return cached(G._cache, "lcs", compute)


def lower_central_series(G, n):
  """
  <Purpose>
    Returns [gamma_1(G), ..., gamma_n(G)] with gamma_1 = G and
    gamma_(i+1) = [gamma_i, G].

  <Exceptions>
    BadParameterError if n < 1.

  <Returns>
    A list of n Subgroups of G.
  """
  if n < 1:
    raise BadParameterError("Lower central series needs n >= 1, got"
        " {}".format(n))
  series = _full_lower_central_series(G)
  return [series[min(i, len(series) - 1)] for i in range(n)]


def gamma(G, n):
  """The n-th term gamma_n(G) of the lower central series. """
  return lower_central_series(G, n)[-1]


def nilpotency_class(G):
  """
  <Purpose>
    The least c with gamma_(c+1)(G) = 1. The trivial group has class 0.

  <Exceptions>
    NotNilpotentError if the lower central series stabilizes above 1.
  """
  series = _full_lower_central_series(G)
  if not series[-1].is_trivial():
    raise NotNilpotentError("Lower central series stabilizes at a subgroup"
        " of order {}".format(series[-1].order))
  return len(series) - 1


def is_nilpotent(G):
  return _full_lower_central_series(G)[-1].is_trivial()


def quotient(G, N):
  """
  <Purpose>
    Builds G/N. Cosets are numbered by their minimal member, so coset 0 is N
    itself and is the identity of the quotient.

  <Exceptions>
    NotNormalError if N is not normal in G.

  <Returns>
    A QuotientGroup.
  """
  if N.parent is not G:
    raise MismatchedParentError("Subgroup does not belong to the group")

  return cached(G._cache, ("quotient", N.members),
      lambda: _build_quotient(G, N))


def _build_quotient(G, N):
  if not is_normal(G, N):
    raise NotNormalError("Subgroup of order {} is not normal".format(
        N.order))

  coset_index = numpy.full(G.order, -1, dtype=numpy.int64)
  members = numpy.array(N.members, dtype=numpy.int64)
  cosets = []
  for g in range(G.order):
    if coset_index[g] >= 0:
      continue
    coset = numpy.sort(G.table[g, members])
    coset_index[coset] = len(cosets)
    cosets.append(tuple(int(x) for x in coset))

  reps = numpy.array([coset[0] for coset in cosets], dtype=numpy.int64)
  table = coset_index[G.table[numpy.ix_(reps, reps)]]
  inverse = coset_index[G.inverse[reps]]
  group = FiniteGroup(order=len(cosets), table=table, inverse=inverse)
  projection = Morphism(domain=G, codomain=group, image=coset_index)

  return QuotientGroup(base=G, kernel=N, cosets=tuple(cosets), group=group,
      projection=projection)


def join(A, B):
  """The subgroup generated by A and B. """
  G = _check_parent(A, B)
  return subgroup_generate(G, set(A.members) | set(B.members))


def intersection(A, B):
  G = _check_parent(A, B)
  return Subgroup(parent=G, members=set(A.members) & set(B.members))


def _normal_join(A, B):
  """AB for normal A and B, which is a subgroup without further closure. """
  G = A.parent
  products = G.table[numpy.ix_(list(A.members), list(B.members))]
  return Subgroup(parent=G, members=numpy.unique(products))


def normal_closure(G, elements):
  """The smallest normal subgroup of G containing `elements`. """
  elements = [int(e) for e in elements]
  conjugates = conjugation_table(G)[elements, :] if elements else []
  return subgroup_generate(G, numpy.unique(conjugates))


def normal_subgroups(G):
  """
  <Purpose>
    Lists all normal subgroups of G. Every normal subgroup is the join of
    the normal closures of its elements, so joining closures until nothing
    new turns up finds all of them.

  <Returns>
    A list of Subgroups sorted by order, then by members.
  """
  def compute():
    closures = []
    for g in range(G.order):
      closure = normal_closure(G, [g])
      if closure not in closures:
        closures.append(closure)

    found = set(closures)
    queue = collections.deque(closures)
    while queue:
      current = queue.popleft()
      for closure in closures:
        if closure.issubset(current):
          continue
        joined = _normal_join(current, closure)
        if joined not in found:
          found.add(joined)
          queue.append(joined)

    return sorted(found, key=lambda S: (S.order, S.members))

  return cached(G._cache, "normal_subgroups", compute)


def subgroups_between(G, lower, upper):
  """Normal subgroups S of G with lower <= S <= upper. """
  return [S for S in normal_subgroups(G)
      if lower.issubset(S) and S.issubset(upper)]


def prime_power(n):
  """
  <Purpose>
    Splits n = p^k.

  <Exceptions>
    NotPrimePowerError if n is not a prime power (1 included).

  <Returns>
    The tuple (p, k).
  """
  if n < 2:
    raise NotPrimePowerError("{} is not a prime power".format(n))

  p = 2
  while n % p:
    p += 1

  k = 0
  while n % p == 0:
    n //= p
    k += 1

  if n != 1:
    raise NotPrimePowerError("Order is divisible by {0} and another prime"
        .format(p))
  return p, k


def prime_of(G):
  """The prime of a p-group, None for the trivial group. Raises
  NotPrimePowerError for groups that are not p-groups. """
  if G.order == 1:
    return None
  return prime_power(G.order)[0]


def is_p_group(G):
  try:
    prime_of(G)
  except NotPrimePowerError:
    return False
  return True


def direct_product(factors):
  """
  <Purpose>
    Builds H_1 x ... x H_k. Product elements are tuples of factor elements,
    indexed lexicographically with the last factor varying fastest. The
    center and the lower central series of the product are recomputed and
    compared against the products of the factor subgroups.

  <Arguments>
    factors:
            non-empty list of FiniteGroups

  <Exceptions>
    BadParameterError if `factors` is empty.

    OrderCapExceededError if the product is larger than
    `settings.ORDER_CAP`.

    NotAGroupError if the center or the lower central series of the product
    does not factorize.

  <Returns>
    A ProductStructure.
  """
  factors = list(factors)
  if not factors:
    raise BadParameterError("A direct product needs at least one factor")

  order = 1
  for factor in factors:
    order *= factor.order
  if order > groupscope.settings.ORDER_CAP:
    raise OrderCapExceededError("Product order {0} exceeds the cap"
        " {1}".format(order, groupscope.settings.ORDER_CAP))

  strides = []
  stride = 1
  for factor in reversed(factors):
    strides.append(stride)
    stride *= factor.order
  strides.reverse()

  elements = numpy.arange(order)
  components = [(elements // s) % factor.order
      for factor, s in zip(factors, strides)]

  table = numpy.zeros((order, order), dtype=numpy.int64)
  inverse = numpy.zeros(order, dtype=numpy.int64)
  for factor, s, comp in zip(factors, strides, components):
    table += s * factor.table[numpy.ix_(comp, comp)]
    inverse += s * factor.inverse[comp]

  labels = None
  if any(factor.labels for factor in factors):
    labels = ["({})".format(",".join(factor.label(int(c[x]))
        for factor, c in zip(factors, components)))
        for x in range(order)]

  name = None
  if all(factor.name for factor in factors):
    name = " x ".join(factor.name for factor in factors)

  product = FiniteGroup(order=order, table=table, inverse=inverse,
      labels=labels, name=name)

  projections = [Morphism(domain=product, codomain=factor, image=comp)
      for factor, comp in zip(factors, components)]
  embeddings = [Morphism(domain=factor, codomain=product,
      image=s * numpy.arange(factor.order))
      for factor, s in zip(factors, strides)]

  structure = ProductStructure(factors=factors, product=product,
      projections=projections, embeddings=embeddings)

  if center(product) != product_subgroup(structure,
      [center(factor) for factor in factors]):
    raise NotAGroupError("Center of the product does not factorize")

  depth = max(len(_full_lower_central_series(f)) for f in factors) + 1
  for n in range(1, depth + 1):
    if gamma(product, n) != product_subgroup(structure,
        [gamma(factor, n) for factor in factors]):
      raise NotAGroupError("gamma_{} of the product does not"
          " factorize".format(n))

  return structure


def product_subgroup(P, parts):
  """
  <Purpose>
    The subgroup S_1 x ... x S_k of a direct product, given one Subgroup
    (or None for the whole factor) per factor.

  <Exceptions>
    MismatchedParentError if a part does not belong to its factor.

  <Returns>
    A Subgroup of P.product.
  """
  if len(parts) != len(P.factors):
    raise BadParameterError("Expected {0} parts, got {1}".format(
        len(P.factors), len(parts)))

  members = numpy.zeros(1, dtype=numpy.int64)
  for factor, part, s in zip(P.factors, parts, P.strides):
    if part is None:
      part = whole(factor)
    if part.parent is not factor:
      raise MismatchedParentError("Part does not belong to its factor")
    offsets = s * numpy.array(part.members, dtype=numpy.int64)
    members = (members[:, None] + offsets[None, :]).ravel()

  return Subgroup(parent=P.product, members=members)


def split_product_subgroup(P, S):
  """
  <Purpose>
    Recognizes subgroups of the shape S_1 x ... x S_k.

  <Returns>
    The list of the projections pi_j(S) as Subgroups of the factors if S is
    their product, else None.
  """
  if S.parent is not P.product:
    raise MismatchedParentError("Subgroup does not belong to the product")

  parts = []
  for factor, projection in zip(P.factors, P.projections):
    parts.append(Subgroup(parent=factor,
        members=set(projection.image[x] for x in S.members)))

  if product_subgroup(P, parts) != S:
    return None
  return parts


def lift_subgroup(S, T):
  """Maps a Subgroup T of `S.group` back to a Subgroup of `S.parent`. """
  if T.parent is not S.group:
    raise MismatchedParentError("Subgroup does not belong to S.group")
  return Subgroup(parent=S.parent, members=[S.members[t] for t in T.members])
