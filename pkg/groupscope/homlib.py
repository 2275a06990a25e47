"""
<Program Name>
  homlib.py

<Started>
  March 10, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Enumerates homomorphisms into abelian groups.

  A homomorphism G -> A with A abelian factors through the abelianization
  G/gamma_2(G). The abelianization is decomposed into cyclic factors
  <b_1> x ... x <b_s> of orders o_1, ..., o_s and a homomorphism is the
  same as a choice of images a_i in A with a_i^o_i = 1. Images are tried in
  increasing element order, the first member of every enumeration is the
  trivial homomorphism.

"""
import itertools

import numpy

import groupscope.settings
from groupscope import grouplib
from groupscope import abelianlib
from groupscope.models.group import Subgroup
from groupscope.models.morphism import Morphism, HomSet
from groupscope.exceptions import (NotAbelianCodomainError,
    HypothesisViolatedError, OrderCapExceededError, NotNilpotentError,
    NotAGroupError, MismatchedParentError)


def abelianization(G):
  """
  <Purpose>
    G/gamma_2(G).

  <Returns>
    A QuotientGroup.
  """
  return grouplib.quotient(G, grouplib.gamma(G, 2))


def _as_group(A):
  if isinstance(A, Subgroup):
    return A.group
  return A


def _coordinates(Q, basis):
  """For the abelian FiniteGroup Q with cyclic basis [(b_i, o_i)], returns
  an array whose row q holds the exponents e_i with q = prod b_i^e_i. """
  coordinates = numpy.zeros((Q.order, len(basis)), dtype=numpy.int64)
  ranges = [range(order) for _, order in basis]
  powers = [[Q.power(b, e) for e in range(order)] for b, order in basis]
  for exponents in itertools.product(*ranges):
    element = 0
    for i, e in enumerate(exponents):
      element = Q.mul(element, powers[i][e])
    coordinates[element] = exponents
  return coordinates


def _admissible_images(A, basis):
  orders = grouplib.element_orders(A)
  return [[a for a in range(A.order) if order % int(orders[a]) == 0]
      for _, order in basis]


def _setup(G, A):
  """Abelianization, its basis and the admissible images per basis
  element. """
  A = _as_group(A)
  if not grouplib.is_abelian(A):
    raise NotAbelianCodomainError("Homomorphisms are only enumerated into"
        " abelian groups")

  Q = abelianization(G)
  basis = abelianlib.abelian_basis(Q.group)
  return A, Q, basis, _admissible_images(A, basis)


def count_homs(G, A):
  """
  <Purpose>
    |Hom(G, A)| for abelian A without materializing the set.

  <Exceptions>
    NotAbelianCodomainError if A is not abelian.

  <Returns>
    An integer.
  """
  A, Q, basis, images = _setup(G, A)
  count = 1
  for candidates in images:
    count *= len(candidates)
  return count


def enumerate_homs(G, A):
  """
  <Purpose>
    Enumerates Hom(G, A) for abelian A.

  <Arguments>
    G:
            FiniteGroup

    A:
            abelian FiniteGroup, or an abelian Subgroup, in which case the
            codomain of the returned morphisms is `A.group`

  <Exceptions>
    NotAbelianCodomainError if A is not abelian.

    OrderCapExceededError if the set has more than
    `settings.HOM_ENUMERATION_LIMIT` members, use `count_homs` instead.

  <Returns>
    A HomSet, ordered by the images of the basis elements, the trivial
    homomorphism first.
  """
  A, Q, basis, images = _setup(G, A)

  count = 1
  for candidates in images:
    count *= len(candidates)
  if count > groupscope.settings.HOM_ENUMERATION_LIMIT:
    raise OrderCapExceededError("Hom set has {0} members, the limit is"
        " {1}".format(count, groupscope.settings.HOM_ENUMERATION_LIMIT))

  coordinates = _coordinates(Q.group, basis)
  projection = numpy.array(Q.projection.image, dtype=numpy.int64)

  members = []
  for choice in itertools.product(*images):
    image = numpy.zeros(Q.group.order, dtype=numpy.int64)
    for i, a in enumerate(choice):
      powers = numpy.array([A.power(a, e) for e in range(basis[i][1])],
          dtype=numpy.int64)
      image = A.table[image, powers[coordinates[:, i]]]
    members.append(Morphism(domain=G, codomain=A, image=image[projection]))

  return HomSet(domain=G, codomain=A, members=members)


def enumerate_homs_from_quotient(G, N, M):
  """
  <Purpose>
    Hom(G/N, M) for a normal subgroup N and an abelian subgroup M of G.

  <Exceptions>
    NotNormalError if N is not normal.

    NotAbelianCodomainError if M is not abelian.

  <Returns>
    A HomSet with domain `quotient(G, N).group` and codomain `M.group`.
  """
  if not grouplib.is_abelian(M):
    raise NotAbelianCodomainError("M is not abelian")
  Q = grouplib.quotient(G, N)
  return enumerate_homs(Q.group, M.group)


def commutator_sets(G, n):
  """Boolean matrix, entry [g, y] is True if y = [g, x] for some x in
  gamma_(n-1)(G). """
  allowed = numpy.zeros((G.order, G.order), dtype=bool)
  members = list(grouplib.gamma(G, n - 1).members)
  values = grouplib.commutator_table(G)[:, members]
  rows = numpy.repeat(numpy.arange(G.order), len(members))
  allowed[rows, values.ravel()] = True
  return allowed


def hom_c_subset(G, H, n):
  """
  <Purpose>
    Hom_c(G/H, gamma_n(G)), the homomorphisms f in Hom(G/H, gamma_n(G))
    with f(gH) in {[g, x] : x in gamma_(n-1)(G)} for every g in G. The
    condition is tested on every element, not on coset representatives
    only.

  <Arguments>
    G:
            FiniteGroup, nilpotent of class at most n

    H:
            Subgroup with gamma_n(G) <= H <= Z(G)

    n:
            integer >= 2

  <Exceptions>
    HypothesisViolatedError if n < 2, G is not nilpotent of class at most
    n, or H is not between gamma_n(G) and Z(G).

  <Returns>
    A HomSet with domain `quotient(G, H).group` and codomain
    `gamma(G, n).group`, in the order of `enumerate_homs`.
  """
  if n < 2:
    raise HypothesisViolatedError("Hom_c needs n >= 2, got {}".format(n))

  try:
    nilpotency = grouplib.nilpotency_class(G)
  except NotNilpotentError:
    raise HypothesisViolatedError("G is not nilpotent")
  if nilpotency > n:
    raise HypothesisViolatedError("G has class {0} > {1}".format(
        nilpotency, n))

  if H.parent is not G:
    raise MismatchedParentError("H does not belong to G")

  gamma_n = grouplib.gamma(G, n)
  if not (gamma_n.issubset(H) and H.issubset(grouplib.center(G))):
    raise HypothesisViolatedError("H is not between gamma_{} and the"
        " center".format(n))

  Q = grouplib.quotient(G, H)
  homs = enumerate_homs(Q.group, gamma_n.group)

  allowed = commutator_sets(G, n)
  projection = numpy.array(Q.projection.image, dtype=numpy.int64)
  gamma_members = numpy.array(gamma_n.members, dtype=numpy.int64)
  elements = numpy.arange(G.order)

  members = []
  for f in homs:
    values = gamma_members[numpy.array(f.image)[projection]]
    if allowed[elements, values].all():
      members.append(f)

  return HomSet(domain=Q.group, codomain=gamma_n.group, members=members)


def compose(f, g):
  """f o g, apply g first. """
  if g.codomain is not f.domain:
    raise MismatchedParentError("Codomain of g is not the domain of f")
  return Morphism(domain=g.domain, codomain=f.codomain,
      image=[f.image[x] for x in g.image])


def pointwise_product(f, g):
  """(fg)(x) = f(x) g(x) for morphisms into the same abelian group. """
  if f.codomain is not g.codomain or f.domain is not g.domain:
    raise MismatchedParentError("Morphisms have different domains or"
        " codomains")
  table = f.codomain.table
  return Morphism(domain=f.domain, codomain=f.codomain,
      image=table[numpy.array(f.image), numpy.array(g.image)])


def pointwise_inverse(f):
  return Morphism(domain=f.domain, codomain=f.codomain,
      image=f.codomain.inverse[numpy.array(f.image)])


def homset_group(homs):
  """
  <Purpose>
    Materializes a set of homomorphisms into an abelian group as a
    FiniteGroup under the pointwise product. Element k is `homs.members[k]`
    when the trivial homomorphism comes first (as in every enumeration of
    this module).

  <Exceptions>
    NotAGroupError if the set is not closed under the pointwise product.

  <Returns>
    A FiniteGroup.
  """
  members = list(homs.members)
  position = dict((f.image, k) for k, f in enumerate(members))
  table = numpy.zeros((len(members), len(members)), dtype=numpy.int64)
  for i, f in enumerate(members):
    for j, g in enumerate(members):
      product = pointwise_product(f, g).image
      if product not in position:
        raise NotAGroupError("Set of homomorphisms is not closed under the"
            " pointwise product")
      table[i, j] = position[product]

  return grouplib.build_group(table)
