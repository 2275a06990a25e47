"""
<Program Name>
  catalog.py

<Started>
  March 14, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Builds the Cayley tables of the group families groupscope knows by name
  and lists the catalog the corpus runs over.

  Constructors (group spec syntax):
    C(n)              cyclic group of order n
    Ab(p; e1, ...)    C_{p^e1} x C_{p^e2} x ...
    D(n)              dihedral group of order 2n
    Q(2^k)            generalized quaternion group, k >= 3
    SD(2^k)           semidihedral group, k >= 4
    Mod(p, k)         modular group <a, b | a^(p^(k-1)) = b^p = 1,
                      b a b^-1 = a^(1 + p^(k-2))> of order p^k
    Heis(p)           Heisenberg group of unitriangular 3x3 matrices over
                      Z/p, order p^3

  D, Q, SD and Mod are metacyclic: every element is a^i b^e in normal form
  and the product is read off b a = a^s b and b^q = a^t.

"""
import numpy

import groupscope.settings
from groupscope import grouplib
from groupscope.exceptions import BadParameterError, OrderCapExceededError


CATALOG = [
  # abelian
  "C(2)", "C(3)", "C(4)", "C(8)", "C(9)",
  "Ab(2; 1, 1)", "Ab(2; 2, 1)", "Ab(2; 1, 1, 1)", "Ab(3; 1, 1)",
  # up to order 16
  "D(3)", "D(4)", "Q(8)", "D(8)", "Q(16)", "SD(16)", "Mod(2, 4)",
  "D(4) x C(2)", "Q(8) x C(2)",
  # products with a factor of coprime order
  "D(4) x C(3)", "Q(8) x C(3)",
  # order 27
  "Heis(3)", "Mod(3, 3)",
  # order 32
  "D(16)", "Q(32)", "SD(32)", "Mod(2, 5)", "D(4) x C(4)", "Q(8) x C(4)",
  # order 81
  "Heis(3) x C(3)"
]


def _is_prime(p):
  if p < 2:
    return False
  return all(p % d for d in range(2, int(p ** 0.5) + 1))


def _power_of_two(n):
  """k with n = 2^k, None if n is not a power of two. """
  k = 0
  while n > 1 and n % 2 == 0:
    n //= 2
    k += 1
  return k if n == 1 else None


def _label(letters, exponents):
  parts = []
  for letter, exponent in zip(letters, exponents):
    if exponent == 1:
      parts.append(letter)
    elif exponent:
      parts.append("{0}^{1}".format(letter, exponent))
  return " ".join(parts) or "1"


def _check_order(order):
  if order > groupscope.settings.ORDER_CAP:
    raise OrderCapExceededError("Order {0} exceeds the cap {1}".format(
        order, groupscope.settings.ORDER_CAP))


def capped_power(base, exponent):
  """
  <Purpose>
    base ** exponent for group spec arithmetic, computed step by step so
    that a huge exponent fails fast instead of building a huge integer.

  <Exceptions>
    OrderCapExceededError as soon as the power exceeds
    `settings.ORDER_CAP`.

  <Returns>
    An integer.
  """
  if base in (0, 1):
    return base ** min(exponent, 1)

  value = 1
  for _ in range(exponent):
    value *= base
    if value > groupscope.settings.ORDER_CAP:
      raise OrderCapExceededError("{0}^{1} exceeds the cap {2}".format(
          base, exponent, groupscope.settings.ORDER_CAP))
  return value


def _metacyclic(m, q, s, t, name):
  """
  Elements a^i b^e with 0 <= i < m, 0 <= e < q, indexed e * m + i, and
  (a^i b^e)(a^j b^f) = a^(i + j s^e + [e + f >= q] t) b^((e + f) mod q).
  """
  _check_order(m * q)
  elements = numpy.arange(m * q)
  i, e = elements % m, elements // m
  twists = numpy.array([pow(s, k, m) for k in range(q)], dtype=numpy.int64)

  left_i, right_i = i[:, None], i[None, :]
  left_e, right_e = e[:, None], e[None, :]
  total = left_e + right_e
  power = (left_i + right_i * twists[left_e] + t * (total >= q)) % m
  table = (total % q) * m + power

  labels = [_label("ab", (int(x % m), int(x // m))) for x in elements]
  return grouplib.build_group(table, labels=labels, name=name)


def cyclic(n):
  """C(n) """
  if n < 1:
    raise BadParameterError("C(n) needs n >= 1, got {}".format(n))
  _check_order(n)
  elements = numpy.arange(n)
  table = (elements[:, None] + elements[None, :]) % n
  labels = [_label("a", (int(x),)) for x in elements]
  return grouplib.build_group(table, labels=labels,
      name="C({})".format(n))


def abelian_p_structure(p, exponents):
  """
  <Purpose>
    C_{p^e1} x C_{p^e2} x ... as a direct product of cyclic groups. The
    generator of factor j is `embeddings[j].image[1]`.

  <Exceptions>
    BadParameterError if p is not a prime or an exponent is not positive.

  <Returns>
    A ProductStructure, a single C(1) factor for an empty exponent list.
  """
  if not _is_prime(p):
    raise BadParameterError("Ab(p; ...) needs a prime p, got {}".format(p))
  if any(e < 1 for e in exponents):
    raise BadParameterError("Ab(p; ...) needs positive exponents, got"
        " {}".format(list(exponents)))

  _check_order(capped_power(p, sum(exponents)))
  factors = [cyclic(p ** e) for e in exponents] or [cyclic(1)]
  return grouplib.direct_product(factors)


def abelian_p_group(p, exponents):
  """Ab(p; e1, ...) as a single FiniteGroup named by its spec. """
  P = abelian_p_structure(p, exponents)
  G = P.product
  return grouplib.build_group(G.table, labels=G.labels,
      name="Ab({0}; {1})".format(p, ", ".join(str(e) for e in exponents)))


def dihedral(n):
  """D(n), b a = a^-1 b, order 2n """
  if n < 1:
    raise BadParameterError("D(n) needs n >= 1, got {}".format(n))
  return _metacyclic(n, 2, n - 1, 0, "D({})".format(n))


def quaternion(order):
  """Q(2^k): b a = a^-1 b, b^2 = a^(2^(k-2)) """
  k = _power_of_two(order)
  if k is None or k < 3:
    raise BadParameterError("Q(n) needs n = 2^k with k >= 3, got"
        " {}".format(order))
  m = order // 2
  return _metacyclic(m, 2, m - 1, m // 2, "Q({})".format(order))


def semidihedral(order):
  """SD(2^k): b a = a^(2^(k-2) - 1) b, b^2 = 1 """
  k = _power_of_two(order)
  if k is None or k < 4:
    raise BadParameterError("SD(n) needs n = 2^k with k >= 4, got"
        " {}".format(order))
  m = order // 2
  return _metacyclic(m, 2, m // 2 - 1, 0, "SD({})".format(order))


def modular(p, k):
  """Mod(p, k): b a = a^(1 + p^(k-2)) b, b^p = 1 """
  if not _is_prime(p):
    raise BadParameterError("Mod(p, k) needs a prime p, got {}".format(p))
  if k < (4 if p == 2 else 3):
    raise BadParameterError("Mod({0}, k) needs k >= {1}, got {2}".format(p,
        4 if p == 2 else 3, k))
  m = p ** (k - 1)
  return _metacyclic(m, p, 1 + p ** (k - 2), 0,
      "Mod({0}, {1})".format(p, k))


def heisenberg(p):
  """Heis(p): (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b'),
  element (a, b, c) at index a p^2 + b p + c. """
  if not _is_prime(p):
    raise BadParameterError("Heis(p) needs a prime p, got {}".format(p))
  _check_order(p ** 3)

  elements = numpy.arange(p ** 3)
  a, b, c = elements // (p * p), (elements // p) % p, elements % p
  new_a = (a[:, None] + a[None, :]) % p
  new_b = (b[:, None] + b[None, :]) % p
  new_c = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
  table = new_a * p * p + new_b * p + new_c

  labels = [_label("xyz", (int(a[g]), int(b[g]), int(c[g])))
      for g in elements]
  return grouplib.build_group(table, labels=labels,
      name="Heis({})".format(p))


# name -> (number of arguments, takes exponents, order function, builder)
CONSTRUCTORS = {
  "C": (1, False, lambda n: n, cyclic),
  "D": (1, False, lambda n: 2 * n, dihedral),
  "Q": (1, False, lambda order: order, quaternion),
  "SD": (1, False, lambda order: order, semidihedral),
  "Mod": (2, False, capped_power, modular),
  "Heis": (1, False, lambda p: capped_power(p, 3), heisenberg),
  "Ab": (1, True, None, abelian_p_group)
}


def order_of(name, args, exponents=None):
  """
  <Purpose>
    The order of a named group, without building it.

  <Exceptions>
    BadParameterError for unknown names and wrong argument counts.

    OrderCapExceededError if a power in the order already exceeds
    `settings.ORDER_CAP`.

  <Returns>
    An integer.
  """
  if name not in CONSTRUCTORS:
    raise BadParameterError("Unknown group constructor '{}'".format(name))

  arity, takes_exponents, order, _ = CONSTRUCTORS[name]
  if len(args) != arity:
    raise BadParameterError("{0} takes {1} argument(s), got {2}".format(
        name, arity, len(args)))

  if takes_exponents != (exponents is not None):
    raise BadParameterError("{0} {1} an exponent list after ';'".format(
        name, "needs" if takes_exponents else "does not take"))

  if takes_exponents:
    if not exponents:
      raise BadParameterError("{} needs at least one exponent".format(name))
    return capped_power(args[0], sum(exponents))
  return order(*args)


def build(name, args, exponents=None):
  """
  <Purpose>
    Builds a named group.

  <Exceptions>
    BadParameterError for unknown names or invalid parameters.

    OrderCapExceededError if the group is larger than
    `settings.ORDER_CAP`.

  <Returns>
    A FiniteGroup named by its canonical spec.
  """
  _check_order(order_of(name, args, exponents))
  builder = CONSTRUCTORS[name][3]
  if exponents is not None:
    return builder(args[0], list(exponents))
  return builder(*args)
