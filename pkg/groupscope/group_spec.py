"""
<Program Name>
  group_spec.py

<Started>
  March 15, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Parses, prints and constructs group specs, e.g.

    C(4)
    Ab(2; 2, 1)
    Q(2^4)
    D(4) x C(2)
    (Q(8) x C(2)) x C(3)

  Grammar:

    spec        := factor (("x" | "×") factor)*
    factor      := NAME "(" arguments ")" | "(" spec ")"
    arguments   := integer ("," integer)* [";" integer ("," integer)*]
    integer     := INT ["^" INT]

  Products are flattened, `(A x B) x C` and `A x (B x C)` both parse to the
  three factor product `A x B x C`.

"""
import re

import attr

import groupscope.settings
from groupscope import catalog
from groupscope import grouplib
from groupscope.exceptions import ParseError, OrderCapExceededError


TOKEN_PATTERN = re.compile(r"""
    (?P<space>\s+)
  | (?P<name>[A-Z][A-Za-z]*)
  | (?P<int>[0-9]+)
  | (?P<times>x|×)
  | (?P<punct>[(),;^])
""", re.VERBOSE)


@attr.s(frozen=True)
class Constructor(object):
  """A named group, e.g. Mod(2, 4) or Ab(3; 2, 1). `exponents` is None for
  every constructor but Ab. """
  name = attr.ib()
  args = attr.ib(converter=tuple)
  exponents = attr.ib(default=None,
      converter=attr.converters.optional(tuple))


@attr.s(frozen=True)
class Product(object):
  """Direct product of at least two factors, none of them a Product. """
  factors = attr.ib(converter=tuple)


@attr.s(frozen=True)
class GroupSpec(object):
  """
  <Attributes>
    source:
        the spec as typed

    ast:
        Constructor or Product
  """
  source = attr.ib()
  ast = attr.ib()

  @staticmethod
  def read(source):
    return GroupSpec(source=source, ast=parse(source))

  def __str__(self):
    return canonical(self.ast)


def _tokenize(text):
  tokens = []
  position = 0
  while position < len(text):
    match = TOKEN_PATTERN.match(text, position)
    if not match:
      raise ParseError("Unexpected character '{}'".format(text[position]),
          position)
    if match.lastgroup != "space":
      tokens.append((match.lastgroup, match.group(), position))
    position = match.end()
  tokens.append(("end", "", len(text)))
  return tokens


class _Parser(object):
  """Recursive descent over the token list of `_tokenize`. """

  def __init__(self, text):
    self.tokens = _tokenize(text)
    self.index = 0

  def peek(self):
    return self.tokens[self.index]

  def advance(self):
    token = self.tokens[self.index]
    self.index += 1
    return token

  def expect(self, value):
    kind, text, position = self.advance()
    if text != value or kind == "end":
      raise ParseError("Expected '{0}', got {1}".format(value,
          "'{}'".format(text) if text else "end of input"), position)

  def spec(self):
    factors = [self.factor()]
    while self.peek()[0] == "times":
      self.advance()
      factors.append(self.factor())

    flat = []
    for factor in factors:
      if isinstance(factor, Product):
        flat.extend(factor.factors)
      else:
        flat.append(factor)

    if len(flat) == 1:
      return flat[0]
    return Product(factors=flat)

  def factor(self):
    kind, text, position = self.peek()
    if text == "(":
      self.advance()
      node = self.spec()
      self.expect(")")
      return node

    if kind != "name":
      raise ParseError("Expected a group name, got {}".format(
          "'{}'".format(text) if text else "end of input"), position)

    self.advance()
    if text not in catalog.CONSTRUCTORS:
      raise ParseError("Unknown group constructor '{}'".format(text),
          position)

    self.expect("(")
    args = self.integers()
    exponents = None
    if self.peek()[1] == ";":
      self.advance()
      exponents = self.integers()
    self.expect(")")
    return Constructor(name=text, args=args, exponents=exponents)

  def integers(self):
    values = [self.integer()]
    while self.peek()[1] == ",":
      self.advance()
      values.append(self.integer())
    return values

  def integer(self):
    kind, text, position = self.advance()
    if kind != "int":
      raise ParseError("Expected an integer, got {}".format(
          "'{}'".format(text) if text else "end of input"), position)
    value = self.digits(text, position)
    if self.peek()[1] == "^":
      self.advance()
      kind, text, position = self.advance()
      if kind != "int":
        raise ParseError("Expected an integer exponent", position)
      value = catalog.capped_power(value, self.digits(text, position))
    return value

  def digits(self, text, position):
    try:
      return int(text)
    except ValueError:
      raise ParseError("Integer too large", position)


def parse(text):
  """
  <Purpose>
    Parses a group spec.

  <Arguments>
    text:
            the spec string, e.g. "D(4) x C(2)"

  <Exceptions>
    ParseError, with the offending position, for malformed specs and
    unknown constructor names.

    OrderCapExceededError if a power p^k in the spec already exceeds
    `settings.ORDER_CAP`.

  <Side Effects>
    None.

  <Returns>
    A Constructor or a Product.
  """
  parser = _Parser(text)
  node = parser.spec()
  kind, token, position = parser.peek()
  if kind != "end":
    raise ParseError("Unexpected '{}' after the spec".format(token), position)
  return node


def canonical(node):
  """Prints a parsed spec, `parse(canonical(node)) == node`. """
  if isinstance(node, GroupSpec):
    node = node.ast

  if isinstance(node, Product):
    return " x ".join(canonical(factor) for factor in node.factors)

  args = ", ".join(str(arg) for arg in node.args)
  if node.exponents is not None:
    args += "; " + ", ".join(str(e) for e in node.exponents)
  return "{0}({1})".format(node.name, args)


def _node(spec):
  if isinstance(spec, GroupSpec):
    return spec.ast
  if isinstance(spec, (Constructor, Product)):
    return spec
  return parse(spec)


def product_factors(spec):
  """The factor nodes of a product spec, [node] for anything else. """
  node = _node(spec)
  if isinstance(node, Product):
    return list(node.factors)
  return [node]


def order_of(spec):
  """
  <Purpose>
    The order of the group a spec describes, without building it.

  <Exceptions>
    ParseError for malformed specs.

    BadParameterError for wrong argument counts.

    OrderCapExceededError if a power in the spec exceeds
    `settings.ORDER_CAP`.

  <Returns>
    An integer.
  """
  order = 1
  for factor in product_factors(spec):
    order *= catalog.order_of(factor.name, factor.args, factor.exponents)
  return order


def construct(spec):
  """
  <Purpose>
    Builds the group a spec describes.

  <Arguments>
    spec:
            spec string, GroupSpec, Constructor or Product

  <Exceptions>
    ParseError for malformed specs.

    BadParameterError for invalid parameters, e.g. Q(6).

    OrderCapExceededError if the order exceeds `settings.ORDER_CAP`, raised
    before any table is built.

  <Side Effects>
    None.

  <Returns>
    A FiniteGroup named by the canonical spec.
  """
  node = _node(spec)
  order = order_of(node)
  if order > groupscope.settings.ORDER_CAP:
    raise OrderCapExceededError("{0} has order {1}, the cap is {2}".format(
        canonical(node), order, groupscope.settings.ORDER_CAP))

  groups = [catalog.build(factor.name, factor.args, factor.exponents)
      for factor in product_factors(node)]
  if len(groups) == 1:
    return groups[0]
  return grouplib.direct_product(groups).product
