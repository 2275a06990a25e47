"""
<Program Name>
  abelianlib.py

<Started>
  March 9, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Structure of finite abelian groups: cyclic decompositions with explicit
  bases, rank, exponent, the var statistic, the order of Hom between
  abelian p-groups and the Hom equality criterion for a subgroup H of K.

  Invariants are written n_1 >= n_2 >= ... >= n_s for
  C_{p^n_1} x ... x C_{p^n_s}.

"""
import attr
import numpy

from groupscope import grouplib
from groupscope.models.group import Subgroup
from groupscope.models.invariants import AbelianPInvariants
from groupscope.exceptions import (NotAbelianError, NotPrimePowerError,
    PrimeMismatchError, RankMismatchError, NotComponentwiseDominatedError,
    NotAGroupError)


def _members(X):
  if isinstance(X, Subgroup):
    return X.parent, list(X.members)
  return X, list(range(X.order))


def omega_count(X, k):
  """#{g in X : g^k = 1} """
  G, members = _members(X)
  orders = grouplib.element_orders(G)[members]
  return int((k % orders == 0).sum())


def _exponents_from_counts(X, p):
  """Reads the invariants off #{g : g^(p^k) = 1} = p^(sum_i min(k, n_i)):
  the number of factors with n_i >= k is log_p of the k-th count over the
  (k-1)-th. """
  counts = [1]
  k = 0
  order = len(_members(X)[1])
  while counts[-1] < order:
    k += 1
    counts.append(omega_count(X, p ** k))

  at_least = []
  for k in range(1, len(counts)):
    ratio = counts[k] // counts[k - 1]
    factors = 0
    while ratio > 1:
      ratio //= p
      factors += 1
    at_least.append(factors)

  exponents = []
  for k, count in enumerate(at_least, start=1):
    following = at_least[k] if k < len(at_least) else 0
    exponents.extend([k] * (count - following))
  return sorted(exponents, reverse=True)


def _span(G, current, element, order):
  """The members of <current, element> for abelian G, current a numpy array
  of members. """
  powers = [0]
  for _ in range(order - 1):
    powers.append(G.mul(powers[-1], element))
  products = G.table[numpy.ix_(current, numpy.array(powers))]
  return numpy.unique(products)


def _p_basis(G, members, p, exponents):
  """
  Depth-first search for basis elements b_1, ..., b_s of orders p^n_1, ...,
  p^n_s such that every partial span has the predicted order. Candidates are
  tried in increasing index order, so the result is deterministic.
  """
  orders = grouplib.element_orders(G)
  by_order = {}
  for x in members:
    by_order.setdefault(int(orders[x]), []).append(x)

  def extend(current, basis):
    if len(basis) == len(exponents):
      return basis
    wanted = p ** exponents[len(basis)]
    for candidate in by_order.get(wanted, []):
      spanned = _span(G, current, candidate, wanted)
      if len(spanned) == len(current) * wanted:
        found = extend(spanned, basis + [candidate])
        if found is not None:
          return found
    return None

  basis = extend(numpy.zeros(1, dtype=numpy.int64), [])
  if basis is None:
    raise NotAGroupError("No basis realizes the invariants {}".format(
        exponents))
  return basis


def abelian_invariants(X, prime=None):
  """
  <Purpose>
    Computes the cyclic decomposition of an abelian p-group together with a
    basis realizing it.

  <Arguments>
    X:
            FiniteGroup or Subgroup, abelian of prime power order

    prime: (optional)
            the expected prime, stored for the trivial group

  <Exceptions>
    NotAbelianError if X is not abelian.

    NotPrimePowerError if the order of X is not a prime power.

    PrimeMismatchError if X is a q-group for q other than `prime`.

  <Returns>
    An AbelianPInvariants object, the basis in the element indices of X's
    parent group (of X itself for a FiniteGroup).
  """
  if not grouplib.is_abelian(X):
    raise NotAbelianError("Group is not abelian")

  G, members = _members(X)
  order = len(members)
  if order == 1:
    return AbelianPInvariants(prime=prime, exponents=[])

  p = grouplib.prime_power(order)[0]
  if prime is not None and p != prime:
    raise PrimeMismatchError("Expected a {0}-group, got a {1}-group".format(
        prime, p))

  exponents = _exponents_from_counts(X, p)
  basis = _p_basis(G, members, p, exponents)
  return AbelianPInvariants(prime=p, exponents=exponents, basis=basis)


def abelian_basis(X):
  """
  <Purpose>
    Decomposes any finite abelian group into cyclic factors of prime power
    order, one Sylow subgroup after the other.

  <Exceptions>
    NotAbelianError if X is not abelian.

  <Returns>
    A list of (element, order) pairs, X is the internal direct sum of the
    cyclic subgroups they generate.
  """
  if not grouplib.is_abelian(X):
    raise NotAbelianError("Group is not abelian")

  G, members = _members(X)
  orders = grouplib.element_orders(G)

  primes = []
  n = len(members)
  p = 2
  while n > 1:
    if n % p == 0:
      primes.append(p)
      while n % p == 0:
        n //= p
    p += 1

  basis = []
  for p in primes:
    sylow = []
    for x in members:
      order = int(orders[x])
      while order % p == 0:
        order //= p
      if order == 1:
        sylow.append(x)
    exponents = _exponents_from_counts(Subgroup(parent=G, members=sylow), p)
    for element in _p_basis(G, sylow, p, exponents):
      basis.append((element, int(orders[element])))
  return basis


def rank(invariants):
  """d(G), the number of cyclic factors. """
  return len(invariants.exponents)


def exponent_of(invariants):
  return invariants.exponent


def _check_primes(*invariants):
  primes = set(inv.prime for inv in invariants if inv.exponents)
  if len(primes) > 1:
    raise PrimeMismatchError("Invariants belong to different primes: "
        "{}".format(sorted(primes)))
  return primes.pop() if primes else None


def is_dominated(small, large):
  """True if the invariants `small` are those of a subgroup of a group with
  invariants `large`, i.e. small has at most as many factors and
  n_i <= m_i for all of them. """
  if small.rank > large.rank:
    return False
  return all(n <= m for n, m in zip(small.exponents, large.exponents))


def var(G_inv, H_inv):
  """
  <Purpose>
    var(G, H) for equal rank abelian p-groups G <= H: 1 if G = H, else
    p^n_r for the largest index r with n_r < m_r.

  <Exceptions>
    PrimeMismatchError, RankMismatchError, NotComponentwiseDominatedError
    if the arguments are outside the definition.

  <Returns>
    An integer.
  """
  p = _check_primes(G_inv, H_inv)
  if G_inv.rank != H_inv.rank:
    raise RankMismatchError("var needs equal ranks, got {0} and {1}".format(
        G_inv.rank, H_inv.rank))

  if not is_dominated(G_inv, H_inv):
    raise NotComponentwiseDominatedError("{0} is not dominated by"
        " {1}".format(list(G_inv.exponents), list(H_inv.exponents)))

  return var_index_value(G_inv, H_inv, p)[1]


def var_index_value(G_inv, H_inv, p):
  """(r, var) with r counted from 1, r is None when G = H. """
  if G_inv.exponents == H_inv.exponents:
    return None, 1
  r = max(i for i, (n, m) in enumerate(
      zip(G_inv.exponents, H_inv.exponents)) if n < m)
  return r + 1, p ** G_inv.exponents[r]


def hom_order(A_inv, B_inv):
  """|Hom(A, B)| = prod_{i,j} p^min(n_i, m_j) for abelian p-groups. """
  p = _check_primes(A_inv, B_inv)
  if p is None:
    return 1
  power = sum(min(n, m) for n in A_inv.exponents for m in B_inv.exponents)
  return p ** power


@attr.s(frozen=True)
class Lemma26Outcome(object):
  """
  <Attributes>
    hom_equal:
        |Hom(G, H)| = |Hom(G, K)|, which for H <= K means Hom(G, H) =
        Hom(G, K)

    criterion:
        H = K, or d(H) = d(K) and exp(G) <= var(H, K)

    r:
        the index var(H, K) was read from, None if var was not needed
  """
  hom_equal = attr.ib()
  criterion = attr.ib()
  r = attr.ib(default=None)

  @property
  def holds(self):
    return self.hom_equal == self.criterion


def lemma26_test(G_inv, H_inv, K_inv):
  """
  <Purpose>
    Evaluates both sides of the Hom equality criterion for abelian p-groups
    G and H <= K.

  <Exceptions>
    PrimeMismatchError if the invariants belong to different primes.

    NotComponentwiseDominatedError if H is not the type of a subgroup of K.

  <Returns>
    A Lemma26Outcome.
  """
  p = _check_primes(G_inv, H_inv, K_inv)
  if not is_dominated(H_inv, K_inv):
    raise NotComponentwiseDominatedError("{0} is not the type of a subgroup"
        " of {1}".format(list(H_inv.exponents), list(K_inv.exponents)))

  hom_equal = hom_order(G_inv, H_inv) == hom_order(G_inv, K_inv)

  r = None
  if H_inv.exponents == K_inv.exponents:
    criterion = True
  elif H_inv.rank != K_inv.rank:
    criterion = False
  else:
    r, value = var_index_value(H_inv, K_inv, p)
    criterion = G_inv.exponent <= value

  return Lemma26Outcome(hom_equal=hom_equal, criterion=criterion, r=r)


def partitions(total, largest=None):
  """All weakly decreasing exponent lists summing to `total`. """
  if largest is None:
    largest = total
  if total == 0:
    return [[]]
  result = []
  for first in range(min(total, largest), 0, -1):
    for rest in partitions(total - first, first):
      result.append([first] + rest)
  return result


def invariant_types(p, max_power):
  """AbelianPInvariants of every abelian p-group of order at most
  p^max_power, the trivial group first. """
  types = []
  for power in range(max_power + 1):
    for exponents in partitions(power):
      types.append(AbelianPInvariants(prime=p if exponents else None,
          exponents=exponents))
  return types
