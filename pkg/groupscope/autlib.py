"""
<Program Name>
  autlib.py

<Started>
  March 11, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Computes automorphism groups and their subgroups by generator image
  search, and implements the maps between automorphisms and homomorphisms
  used by the theorem checkers.

  Search:
    A greedy generating set g_1, ..., g_k of G is fixed once. Generators are
    assigned images one after the other, among the elements of the same
    order that the requested subgroup allows (e.g. g*Z(G) for central
    automorphisms). After each assignment the map is extended along every
    edge x -> x*g_i of the Cayley graph of <g_1, ..., g_i>; a conflict or a
    collision prunes the branch. Complete maps are then checked against
    the full membership predicate.

  Subgroups of Aut(G):
    central                  g^-1 f(g) in Z(G)
    class_preserving(n)      f(g) = x^-1 g x for some x in gamma_n(G)
    upper(M)                 f(M) = M and g^-1 f(g) in M
    lower(N)                 f(n) = n for n in N
    box(M, N)                upper(M) and lower(N)

  Results are lists of Automorphisms sorted by their image arrays, so the
  identity comes first.

"""
import attr
import numpy

import groupscope.settings
from groupscope import log
from groupscope import grouplib
from groupscope.models.common import cached
from groupscope.models.morphism import Automorphism, Morphism, AutSubgroupTag
from groupscope.exceptions import (OrderCapExceededError, NotNormalError,
    NotCentralError, NotMemberError, HypothesisViolatedError,
    ShapeMismatchError, MismatchedParentError, BadParameterError,
    NotAGroupError)


def _check_cap(G, what="Automorphism enumeration"):
  if G.order > groupscope.settings.AUT_HARD_CAP:
    raise OrderCapExceededError("{0} is capped at order {1}, got {2}".format(
        what, groupscope.settings.AUT_HARD_CAP, G.order))

  if G.order > groupscope.settings.AUT_ENUMERATION_CAP:
    log.warn("{0} on a group of order {1}, above the soft cap {2}".format(
        what, G.order, groupscope.settings.AUT_ENUMERATION_CAP))


def _closure_size(rows, gens):
  seen = set([0])
  queue = [0]
  for x in queue:
    row = rows[x]
    for g in gens:
      y = row[g]
      if y not in seen:
        seen.add(y)
        queue.append(y)
  return len(seen)


def generating_set(G):
  """
  <Purpose>
    A small generating set of G: repeatedly adds the element that enlarges
    the generated subgroup the most, the smallest index on ties.

  <Returns>
    A list of element indices, empty for the trivial group.
  """
  def compute():
    rows = grouplib.rows_of(G)
    gens = []
    size = 1
    while size < G.order:
      best, best_size = None, size
      for g in range(1, G.order):
        candidate_size = _closure_size(rows, gens + [g])
        if candidate_size > best_size:
          best, best_size = g, candidate_size
      gens.append(best)
      size = best_size
    return gens

  return cached(G._cache, "generators", compute)


def _extend_map(rows_domain, rows_codomain, gens, images, order):
  """Extends g_i -> images[i] along the Cayley graph of <gens>. Returns the
  partial map as a list (-1 outside <gens>), or None on a conflict or a
  collision. """
  f = [-1] * order
  used = [False] * order
  f[0] = 0
  used[0] = True
  queue = [0]
  for x in queue:
    row = rows_domain[x]
    image_row = rows_codomain[f[x]]
    for g, a in zip(gens, images):
      y = row[g]
      fy = image_row[a]
      if f[y] < 0:
        if used[fy]:
          return None
        f[y] = fy
        used[fy] = True
        queue.append(y)
      elif f[y] != fy:
        return None
  return f


def _generator_image_search(G, H, candidates, accept, first_only=False):
  """
  Searches all isomorphisms G -> H whose generator images are taken from
  `candidates` (one list per generator of `generating_set(G)`) and that
  `accept`. Returns a list of image tuples.
  """
  gens = generating_set(G)
  rows_G = grouplib.rows_of(G)
  rows_H = grouplib.rows_of(H)
  found = []

  if not gens:
    f = [0]
    if accept(numpy.array(f)):
      found.append(tuple(f))
    return found

  def search(level, images):
    for candidate in candidates[level]:
      trial = images + [candidate]
      f = _extend_map(rows_G, rows_H, gens[:level + 1], trial, G.order)
      if f is None:
        continue

      if level + 1 == len(gens):
        if accept(numpy.array(f, dtype=numpy.int64)):
          found.append(tuple(f))
          if first_only:
            return True

      elif search(level + 1, trial):
        return True

    return False

  search(0, [])
  return found


def _order_candidates(G, H, gens):
  orders_G = grouplib.element_orders(G)
  orders_H = grouplib.element_orders(H)
  return [[int(a) for a in numpy.flatnonzero(orders_H == orders_G[g])]
      for g in gens]


def _mask(G, members):
  inside = numpy.zeros(G.order, dtype=bool)
  inside[list(members)] = True
  return inside


def _check_normal(G, *subgroups):
  for S in subgroups:
    if S.parent is not G:
      raise MismatchedParentError("Subgroup does not belong to the group")
    if not grouplib.is_normal(G, S):
      raise NotNormalError("Subgroup of order {} is not normal".format(
          S.order))


def _predicate(G, tag):
  """
  Returns (restrict, accept) for an AutSubgroupTag: restrict(g) is the set
  of images the subgroup allows for g, or None for no restriction, and
  accept(f) decides membership of a complete image array.
  """
  elements = numpy.arange(G.order)
  conditions = []
  restrictions = []

  if tag.kind == "central":
    tag = AutSubgroupTag(kind="upper", upper=grouplib.center(G))

  if tag.kind == "class_preserving":
    members = list(grouplib.gamma(G, tag.n).members)
    conjugates = grouplib.conjugation_table(G)[:, members]
    allowed = numpy.zeros((G.order, G.order), dtype=bool)
    allowed[numpy.repeat(elements, len(members)), conjugates.ravel()] = True
    restrictions.append(lambda g: set(int(y) for y in conjugates[g]))
    conditions.append(lambda f: allowed[elements, f].all())

  if tag.kind in ("box", "upper"):
    M = tag.upper
    inside_M = _mask(G, M.members)
    M_members = numpy.array(M.members, dtype=numpy.int64)
    restrictions.append(lambda g: set(int(y) for y in G.table[g, M_members]))
    conditions.append(lambda f: inside_M[G.table[G.inverse, f]].all())
    conditions.append(lambda f: inside_M[f[M_members]].all())

  if tag.kind in ("box", "lower"):
    N = tag.lower
    inside_N = _mask(G, N.members)
    N_members = numpy.array(N.members, dtype=numpy.int64)
    restrictions.append(lambda g: set([g]) if inside_N[g] else None)
    conditions.append(lambda f: (f[N_members] == N_members).all())

  def restrict(g):
    allowed_images = None
    for restriction in restrictions:
      images = restriction(g)
      if images is None:
        continue
      allowed_images = images if allowed_images is None else (
          allowed_images & images)
    return allowed_images

  def accept(f):
    return all(bool(condition(f)) for condition in conditions)

  return restrict, accept


def _cache_key(tag):
  key = [tag.kind, tag.n]
  for S in (tag.upper, tag.lower):
    key.append(S.members if S is not None else None)
  return tuple(key)


def aut_subgroup(G, tag):
  """
  <Purpose>
    Lists the automorphisms of G in the subgroup named by `tag`. Candidate
    images are restricted by the subgroup's condition on each generator and
    every result is checked against the full membership condition.

  <Arguments>
    G:
            FiniteGroup

    tag:
            AutSubgroupTag, its subgroups must be normal subgroups of G

  <Exceptions>
    OrderCapExceededError if G is above `settings.AUT_HARD_CAP`.

    NotNormalError if a defining subgroup is not normal.

  <Side Effects>
    Logs a warning above `settings.AUT_ENUMERATION_CAP`. Caches the result
    on G.

  <Returns>
    A list of Automorphisms sorted by image arrays.
  """
  return cached(G._cache, ("aut", ) + _cache_key(tag),
      lambda: _enumerate_aut_subgroup(G, tag))


def _enumerate_aut_subgroup(G, tag):
  _check_cap(G)
  _check_normal(G, *[S for S in (tag.upper, tag.lower) if S is not None])

  restrict, accept = _predicate(G, tag)
  gens = generating_set(G)
  candidates = []
  for g, by_order in zip(gens, _order_candidates(G, G, gens)):
    allowed = restrict(g)
    if allowed is not None:
      by_order = [a for a in by_order if a in allowed]
    candidates.append(by_order)

  images = sorted(_generator_image_search(G, G, candidates, accept))
  result = [Automorphism(group=G, image=image) for image in images]
  log.info("Found {0} automorphisms ({1}) of a group of order {2}".format(
      len(result), tag.kind, G.order))
  return result


def is_member(f, tag):
  """True if the automorphism f lies in the subgroup named by `tag`. """
  restrict, accept = _predicate(f.group, tag)
  return accept(numpy.array(f.image, dtype=numpy.int64))


def automorphism_group(G):
  """
  <Purpose>
    Aut(G), checked to be closed under composition and inverses.

  <Exceptions>
    OrderCapExceededError if G is above `settings.AUT_HARD_CAP`.

    NotAGroupError if the closure check fails.

  <Returns>
    A list of Automorphisms sorted by image arrays.
  """
  automorphisms = aut_subgroup(G, AutSubgroupTag(kind="full"))
  def verify():
    images = numpy.array([f.image for f in automorphisms], dtype=numpy.int64)
    known = set(f.image for f in automorphisms)
    for image in images:
      for composed in image[images]:
        if tuple(int(x) for x in composed) not in known:
          raise NotAGroupError("Automorphisms are not closed under"
              " composition")
    for f in automorphisms:
      if f.inverse().image not in known:
        raise NotAGroupError("Automorphisms are not closed under inverses")
    return True

  cached(G._cache, "aut_verified", verify)
  return automorphisms


def autcent(G):
  """
  <Purpose>
    Autcent(G), the central automorphisms g^-1 f(g) in Z(G). The result is
    compared against Aut_{gamma_2(G)}^{Z(G)}(G).

  <Exceptions>
    OrderCapExceededError if G is above `settings.AUT_HARD_CAP`.

  <Returns>
    A list of Automorphisms sorted by image arrays.
  """
  central = aut_subgroup(G, AutSubgroupTag(kind="central"))
  box = aut_box(G, grouplib.center(G), grouplib.gamma(G, 2))
  if central != box:
    raise HypothesisViolatedError("Central automorphisms differ from the"
        " automorphisms acting trivially modulo the center and fixing"
        " gamma_2 elementwise")
  return central


def aut_class_preserving(G, n):
  """Aut_c^n(G), f(g) conjugate to g by an element of gamma_n(G). """
  if n < 1:
    raise BadParameterError("Class preserving automorphisms need n >= 1,"
        " got {}".format(n))
  return aut_subgroup(G, AutSubgroupTag(kind="class_preserving", n=n))


def aut_box(G, M, N):
  """Aut_N^M(G) = Aut^M(G) intersected with Aut_N(G). """
  return aut_subgroup(G, AutSubgroupTag(kind="box", upper=M, lower=N))


def aut_upper(G, M):
  """Aut^M(G), fixing M setwise and acting trivially on G/M. """
  return aut_subgroup(G, AutSubgroupTag(kind="upper", upper=M))


def aut_lower(G, N):
  """Aut_N(G), fixing N elementwise. """
  return aut_subgroup(G, AutSubgroupTag(kind="lower", lower=N))


def inner_automorphism(G, x):
  """sigma: g -> x^-1 g x """
  return Automorphism(group=G, image=grouplib.conjugation_table(G)[:, x])


def inner_automorphisms(G):
  images = set(tuple(int(y) for y in column)
      for column in grouplib.conjugation_table(G).T)
  return [Automorphism(group=G, image=image) for image in sorted(images)]


def compose(f, g):
  """f o g """
  if f.group is not g.group:
    raise MismatchedParentError("Automorphisms of different groups")
  return f * g


def inverse(f):
  return f.inverse()


def automorphisms_as_group(automorphisms):
  """
  <Purpose>
    Materializes a list of automorphisms of one group as a FiniteGroup
    under composition.

  <Exceptions>
    NotAGroupError if the list is not closed under composition or misses
    the identity.

  <Returns>
    A FiniteGroup whose element k is automorphisms[k] when the identity
    comes first (as in every list returned by this module).
  """
  position = dict((f.image, k) for k, f in enumerate(automorphisms))
  images = numpy.array([f.image for f in automorphisms], dtype=numpy.int64)
  table = numpy.zeros((len(automorphisms), len(automorphisms)),
      dtype=numpy.int64)
  for i, image in enumerate(images):
    for j, composed in enumerate(image[images]):
      key = tuple(int(x) for x in composed)
      if key not in position:
        raise NotAGroupError("Automorphisms are not closed under"
            " composition")
      table[i, j] = position[key]
  return grouplib.build_group(table)


def alpha_values(f, N, M):
  """
  <Purpose>
    Evaluates alpha_f(gN) = g^-1 f(g) on every element of every coset of N
    and checks that the value only depends on the coset.

  <Exceptions>
    HypothesisViolatedError if alpha_f is not well defined.

    NotMemberError if some g^-1 f(g) lies outside M.

  <Returns>
    A tuple holding, per coset of `quotient(G, N)`, the value in G.
  """
  G = f.group
  Q = grouplib.quotient(G, N)
  image = numpy.array(f.image, dtype=numpy.int64)
  values = G.table[G.inverse, image]

  if not _mask(G, M.members)[values].all():
    raise NotMemberError("g^-1 f(g) is not always in M")

  result = []
  for coset in Q.cosets:
    coset_values = set(int(values[g]) for g in coset)
    if len(coset_values) != 1:
      raise HypothesisViolatedError("alpha_f is not well defined on the coset"
          " of {}".format(coset[0]))
    result.append(coset_values.pop())
  return tuple(result)


def alpha_of(f, N, M):
  """
  <Purpose>
    alpha_f: G/N -> M, gN -> g^-1 f(g), for f in Aut_N^M(G) and central M.

  <Exceptions>
    NotCentralError if M is not contained in Z(G).

    NotMemberError if f is not in Aut_N^M(G).

  <Returns>
    A Morphism from `quotient(G, N).group` to `M.group`, validated to be a
    homomorphism.
  """
  G = f.group
  if not M.issubset(grouplib.center(G)):
    raise NotCentralError("M is not central")
  if not is_member(f, AutSubgroupTag(kind="box", upper=M, lower=N)):
    raise NotMemberError("Automorphism is not in Aut_N^M(G)")

  Q = grouplib.quotient(G, N)
  values = alpha_values(f, N, M)
  alpha = Morphism(domain=Q.group, codomain=M.group,
      image=[M.index_of(value) for value in values])
  alpha.validate()
  return alpha


def automorphism_from_hom(psi, N, M):
  """
  <Purpose>
    f_psi(g) = g psi(gN) for psi in Hom(G/N, M), M central and M <= N.

  <Arguments>
    psi:
            Morphism from `quotient(G, N).group` to `M.group`

    N, M:
            Subgroups of the same group G

  <Exceptions>
    HypothesisViolatedError if M is not central or not contained in N, or
    psi does not map G/N to M.

  <Returns>
    An Automorphism of G, validated.
  """
  G = _check_parent_pair(N, M)
  if not M.issubset(grouplib.center(G)):
    raise HypothesisViolatedError("M is not central")
  if not M.issubset(N):
    raise HypothesisViolatedError("M is not contained in N")

  Q = grouplib.quotient(G, N)
  if psi.domain is not Q.group or psi.codomain.order != M.order:
    raise HypothesisViolatedError("psi is not a map G/N -> M")

  M_members = numpy.array(M.members, dtype=numpy.int64)
  correction = M_members[numpy.array(psi.image)[numpy.array(
      Q.projection.image)]]
  f = Automorphism(group=G, image=G.table[numpy.arange(G.order),
      correction])
  f.validate()
  return f


def _check_parent_pair(A, B):
  if A.parent is not B.parent:
    raise MismatchedParentError("Subgroups belong to different groups")
  return A.parent


def box_shape(P, j, M_j, N_j):
  """
  <Purpose>
    The subgroups M = 1 x ... x M_j x ... x 1 and N = H_1 x ... x N_j x ...
    x H_k of the product P.

  <Exceptions>
    ShapeMismatchError if j is out of range or M_j, N_j are not subgroups of
    the j-th factor.

  <Returns>
    The tuple (M, N) of Subgroups of P.product.
  """
  if not 0 <= j < len(P.factors):
    raise ShapeMismatchError("No factor {0} in a product of {1}".format(j,
        len(P.factors)))
  if M_j.parent is not P.factors[j] or N_j.parent is not P.factors[j]:
    raise ShapeMismatchError("M_j and N_j must be subgroups of factor"
        " {}".format(j))

  upper = [grouplib.trivial_subgroup(factor) for factor in P.factors]
  lower = [None] * len(P.factors)
  upper[j] = M_j
  lower[j] = N_j
  return (grouplib.product_subgroup(P, upper),
      grouplib.product_subgroup(P, lower))


def restrict_product_automorphism(P, f, j, M, N):
  """
  <Purpose>
    alpha_f(h_j) = pi_j(f(1, ..., h_j, ..., 1)) for f in Aut_N^M(P.product)
    with M = 1 x ... x M_j x ... x 1 and N = H_1 x ... x N_j x ... x H_k.
    M and N can be passed as these subgroups of the product, as returned
    by `box_shape(P, j, M_j, N_j)`, or as M_j and N_j themselves.

  <Arguments>
    P:
            ProductStructure

    f:
            Automorphism of P.product

    j:
            factor index, counted from 0

    M, N:
            Subgroups of P.product of the shapes above, or both
            Subgroups of P.factors[j]

  <Exceptions>
    ShapeMismatchError if M or N do not have the required shape, or only
    one of them is a subgroup of the factor.

    NotMemberError if f is not in Aut_N^M(P.product).

  <Returns>
    An Automorphism of P.factors[j].
  """
  if not 0 <= j < len(P.factors):
    raise ShapeMismatchError("No factor {0} in a product of {1}".format(j,
        len(P.factors)))

  factor = P.factors[j]
  if M.parent is factor and N.parent is factor:
    M, N = box_shape(P, j, M, N)
  elif M.parent is not P.product or N.parent is not P.product:
    raise ShapeMismatchError("M and N must both be subgroups of the product"
        " or both of factor {}".format(j))

  upper = grouplib.split_product_subgroup(P, M)
  lower = grouplib.split_product_subgroup(P, N)
  if upper is None or lower is None:
    raise ShapeMismatchError("M and N must be products of factor subgroups")

  for i, (upper_part, lower_part) in enumerate(zip(upper, lower)):
    if i != j and not (upper_part.is_trivial() and lower_part.is_whole()):
      raise ShapeMismatchError("M and N may only differ from 1 and H_{0}"
          " in factor {1}".format(i, j))

  if not is_member(f, AutSubgroupTag(kind="box", upper=M, lower=N)):
    raise NotMemberError("Automorphism is not in Aut_N^M(G)")

  embedding = numpy.array(P.embeddings[j].image, dtype=numpy.int64)
  projection = numpy.array(P.projections[j].image, dtype=numpy.int64)
  image = projection[numpy.array(f.image, dtype=numpy.int64)[embedding]]

  alpha = Automorphism(group=P.factors[j], image=image)
  alpha.validate()
  return alpha


def lift_product_automorphism(P, psi, j, M_j=None, N_j=None):
  """
  <Purpose>
    f_psi(h_1, ..., h_j, ..., h_k) = (h_1, ..., psi(h_j), ..., h_k).

  <Exceptions>
    ShapeMismatchError if psi is not an automorphism of factor j.

    NotMemberError if M_j and N_j are passed and psi is not in
    Aut_{N_j}^{M_j}(H_j).

  <Returns>
    An Automorphism of P.product.
  """
  if not 0 <= j < len(P.factors) or psi.group is not P.factors[j]:
    raise ShapeMismatchError("psi is not an automorphism of factor"
        " {}".format(j))

  if M_j is not None and N_j is not None and not is_member(psi,
      AutSubgroupTag(kind="box", upper=M_j, lower=N_j)):
    raise NotMemberError("psi is not in Aut_{N_j}^{M_j}(H_j)")

  elements = numpy.arange(P.product.order)
  component = numpy.array(P.projections[j].image, dtype=numpy.int64)
  stride = P.strides[j]
  moved = numpy.array(psi.image, dtype=numpy.int64)[component]
  return Automorphism(group=P.product,
      image=elements + stride * (moved - component))


@attr.s(frozen=True)
class PurityOutcome(object):
  """
  <Attributes>
    purely:
        True if G has no nontrivial abelian direct factor

    witness:
        (H, A) with G = H x A, A abelian and nontrivial, or None
  """
  purely = attr.ib()
  witness = attr.ib(default=None)


def direct_factors(G):
  """
  <Purpose>
    Lists the internal direct decompositions G = H x K into normal
    subgroups with H nontrivial. (G, 1) is included.

  <Exceptions>
    OrderCapExceededError if G is above `settings.PURELY_SEARCH_CAP`.

  <Returns>
    A list of (H, K) Subgroup pairs, sorted by the order of H, then by its
    members.
  """
  if G.order > groupscope.settings.PURELY_SEARCH_CAP:
    raise OrderCapExceededError("Direct factor search is capped at order"
        " {0}, got {1}".format(groupscope.settings.PURELY_SEARCH_CAP,
        G.order))

  normal = grouplib.normal_subgroups(G)
  by_order = {}
  for S in normal:
    by_order.setdefault(S.order, []).append(S)

  pairs = []
  for H in normal:
    if H.is_trivial():
      continue
    for K in by_order.get(G.order // H.order, []):
      if set(H.members) & set(K.members) == set([0]):
        pairs.append((H, K))
  return pairs


def purely_nonabelian_test(G):
  """
  <Purpose>
    Decides whether G has a nontrivial abelian direct factor, searching
    abelian normal subgroups A in increasing order for a normal complement.

  <Exceptions>
    OrderCapExceededError if G is above `settings.PURELY_SEARCH_CAP`.

  <Returns>
    A PurityOutcome. A nontrivial abelian G is its own abelian factor, the
    witness is (1, G).
  """
  if G.order > 1 and grouplib.is_abelian(G):
    return PurityOutcome(purely=False,
        witness=(grouplib.trivial_subgroup(G), grouplib.whole(G)))

  for H, A in reversed(direct_factors(G)):
    if not A.is_trivial() and grouplib.is_abelian(A):
      return PurityOutcome(purely=False, witness=(H, A))
  return PurityOutcome(purely=True)


def find_isomorphism(G1, G2):
  """
  <Purpose>
    Searches an isomorphism G1 -> G2 by generator images, candidates
    restricted to elements of equal order.

  <Returns>
    The image tuple of an isomorphism, or None.
  """
  if G1.order != G2.order:
    return None
  gens = generating_set(G1)
  candidates = _order_candidates(G1, G2, gens)
  found = _generator_image_search(G1, G2, candidates, lambda f: True,
      first_only=True)
  return found[0] if found else None
