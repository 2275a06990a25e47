"""
<Program Name>
  morphism.py

<Started>
  March 6, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Provides classes for maps between finite groups.

<Classes>
  Morphism:
      element-indexed map between two FiniteGroups

  HomSet:
      all (or a filtered set of) homomorphisms into an abelian group

  Automorphism:
      bijective endomorphism of a FiniteGroup

  AutSubgroupTag:
      names one of the automorphism subgroups the engine can compute
"""

import attr
import numpy

import securesystemslib.exceptions

from groupscope.exceptions import NotAGroupError
from . import common as models__common


def _image_tuple(values):
  return tuple(int(v) for v in values)


@attr.s(repr=False, frozen=True)
class Morphism(models__common.Metablock):
  """
  A map from `domain` to `codomain` given by the image of every domain
  element. Equality and hashing compare images only.

  <Attributes>
    domain:
        FiniteGroup

    codomain:
        FiniteGroup

    image:
        tuple, image[i] is the codomain index of the image of element i
  """
  domain = attr.ib(eq=False)
  codomain = attr.ib(eq=False)
  image = attr.ib(converter=_image_tuple)

  def __call__(self, element):
    return self.image[element]

  def is_trivial(self):
    return not any(self.image)

  def kernel_members(self):
    return tuple(i for i, value in enumerate(self.image) if value == 0)

  def image_members(self):
    return tuple(sorted(set(self.image)))

  def as_dict(self):
    return {"image": list(self.image)}

  def _validate_homomorphism(self):
    if len(self.image) != self.domain.order:
      raise NotAGroupError("Morphism image has {0} entries, domain has {1}"
          " elements".format(len(self.image), self.domain.order))

    image = numpy.array(self.image, dtype=numpy.int64)
    if image.min() < 0 or image.max() >= self.codomain.order:
      raise NotAGroupError("Morphism image out of codomain range")

    # image[xy] against image[x] * image[y] for all pairs at once
    left = image[self.domain.table]
    right = self.codomain.table[numpy.ix_(image, image)]
    if not numpy.array_equal(left, right):
      x, y = [int(v) for v in numpy.argwhere(left != right)[0]]
      raise NotAGroupError("Map is not a homomorphism at ({0}, {1})".format(
          x, y), witness=(x, y))


@attr.s(repr=False, frozen=True)
class Automorphism(models__common.Metablock):
  """
  A bijective endomorphism of `group`. Equality and hashing compare images
  only. Composition follows function notation: (f * g)(x) = f(g(x)).

  <Attributes>
    group:
        FiniteGroup

    image:
        tuple, a permutation of the element indices
  """
  group = attr.ib(eq=False)
  image = attr.ib(converter=_image_tuple)

  def __call__(self, element):
    return self.image[element]

  def __mul__(self, other):
    return Automorphism(group=self.group,
        image=[self.image[value] for value in other.image])

  def inverse(self):
    inverse = [0] * len(self.image)
    for element, value in enumerate(self.image):
      inverse[value] = element
    return Automorphism(group=self.group, image=inverse)

  def is_identity(self):
    return all(value == element for element, value in enumerate(self.image))

  def as_morphism(self):
    return Morphism(domain=self.group, codomain=self.group, image=self.image)

  def as_dict(self):
    return {"image": list(self.image)}

  def _validate_bijective(self):
    if sorted(self.image) != list(range(self.group.order)):
      raise NotAGroupError("Automorphism image is not a permutation")

  def _validate_homomorphism(self):
    self.as_morphism()._validate_homomorphism()


@attr.s(repr=False, frozen=True)
class HomSet(models__common.Metablock):
  """
  A set of homomorphisms from `domain` into the abelian group `codomain`,
  in deterministic enumeration order. The group law is the pointwise
  product.

  <Attributes>
    domain:
        FiniteGroup

    codomain:
        FiniteGroup, abelian

    members:
        tuple of Morphism
  """
  domain = attr.ib(eq=False)
  codomain = attr.ib(eq=False)
  members = attr.ib(converter=tuple)

  def __len__(self):
    return len(self.members)

  def __iter__(self):
    return iter(self.members)

  def __contains__(self, morphism):
    return morphism in self._member_set()

  def _member_set(self):
    return frozenset(self.members)

  def as_dict(self):
    return {"domain_order": self.domain.order,
        "codomain_order": self.codomain.order,
        "members": [list(m.image) for m in self.members]}


@attr.s(repr=False, frozen=True)
class AutSubgroupTag(models__common.Metablock):
  """
  Names an automorphism subgroup. `autlib.aut_subgroup` turns a tag into
  the list of its members.

  <Attributes>
    kind:
        one of KINDS

    n:
        the lower central series index for "class_preserving"

    upper:
        the subgroup M of "box" and "upper", automorphisms act trivially
        modulo M

    lower:
        the subgroup N of "box" and "lower", fixed element by element
  """
  KINDS = ("full", "central", "class_preserving", "box", "upper", "lower")

  kind = attr.ib()
  n = attr.ib(default=None)
  upper = attr.ib(default=None)
  lower = attr.ib(default=None)

  def __attrs_post_init__(self):
    self.validate()

  def as_dict(self):
    data = {"kind": self.kind}
    if self.n is not None:
      data["n"] = self.n
    if self.upper is not None:
      data["upper"] = list(self.upper.members)
    if self.lower is not None:
      data["lower"] = list(self.lower.members)
    return data

  def _validate_kind(self):
    if self.kind not in self.KINDS:
      raise securesystemslib.exceptions.FormatError(
          "Invalid automorphism subgroup kind '{}'".format(self.kind))

    if self.kind == "class_preserving" and (not isinstance(self.n, int) or
        self.n < 1):
      raise securesystemslib.exceptions.FormatError(
          "class_preserving needs a positive n, got '{}'".format(self.n))

    if self.kind in ("box", "upper") and self.upper is None:
      raise securesystemslib.exceptions.FormatError(
          "'{}' needs the upper subgroup M".format(self.kind))

    if self.kind in ("box", "lower") and self.lower is None:
      raise securesystemslib.exceptions.FormatError(
          "'{}' needs the lower subgroup N".format(self.kind))

  def members(self, group):
    """The automorphisms of `group` in this subgroup, see
    `autlib.aut_subgroup`. """
    # autlib imports this module
    import groupscope.autlib
    return groupscope.autlib.aut_subgroup(group, self)
