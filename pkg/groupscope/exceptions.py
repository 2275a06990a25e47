from securesystemslib.exceptions import Error, FormatError

class NotAGroupError(Error):
  """Indicates that a Cayley table fails the group axioms. The offending
  element, pair or triple is stored as `witness`. """
  def __init__(self, msg, witness=None):
    super(NotAGroupError, self).__init__(msg)
    self.witness = witness

class MismatchedParentError(Error):
  """Indicates that two subgroups live in different parent groups. """
  pass

class NotNormalError(Error):
  """Indicates that a subgroup required to be normal is not. """
  pass

class NotNilpotentError(Error):
  """Indicates that the lower central series stabilizes above 1. """
  pass

class OrderCapExceededError(Error):
  """Indicates that a group is larger than the configured cap. """
  pass

class NotAbelianError(Error):
  """Indicates that a group required to be abelian is not. """
  pass

class NotPrimePowerError(Error):
  """Indicates that a group required to have prime power order has not. """
  pass

class PrimeMismatchError(Error):
  """Indicates that abelian p-group invariants belong to different primes. """
  pass

class RankMismatchError(Error):
  """Indicates that two abelian p-groups have different rank. """
  pass

class NotComponentwiseDominatedError(Error):
  """Indicates that the cyclic factors of a would-be subgroup are not
  dominated by the cyclic factors of the would-be supergroup. """
  pass

class NotAbelianCodomainError(Error):
  """Indicates that homomorphisms were requested into a non-abelian group. """
  pass

class HypothesisViolatedError(Error):
  """Indicates that the hypotheses of a construction do not hold. """
  pass

class NotCentralError(Error):
  """Indicates that a subgroup required to be central is not. """
  pass

class NotMemberError(Error):
  """Indicates that an automorphism is not in the required subgroup. """
  pass

class ShapeMismatchError(Error):
  """Indicates that a subgroup of a direct product does not have the
  required product shape. """
  pass

class NotPGroupError(Error):
  """Indicates that a group required to be a p-group is not. """
  pass

class NotNonabelianError(Error):
  """Indicates that a group required to be non-abelian is abelian. """
  pass

class BadParameterError(Error):
  """Indicates an invalid constructor or configuration parameter. """
  pass

class ParseError(Error):
  """Indicates a syntax error in a group spec. The offset into the
  source text is stored as `position`. """
  def __init__(self, msg, position=None):
    if position is not None:
      msg = "{0} (at position {1})".format(msg, position)
    super(ParseError, self).__init__(msg)
    self.position = position

class SchemaError(FormatError):
  """Indicates that a file does not match the expected JSON layout. """
  pass
