"""
<Program Name>
  checklib.py

<Started>
  March 13, 2025

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Provides one checker per statement about central, class preserving and
  Aut_N^M automorphisms, and a corpus runner applying them to the catalog.

  Every checker returns a TheoremReport. Shared hypotheses are recorded
  with `add_hypothesis`, each implication of the statement becomes a Clause
  with its own hypotheses. A conclusion is only computed when all of its
  hypotheses hold, so a report is FAILED only if the computation contradicts
  the statement.

  Checkers only raise if called outside their preconditions (e.g. a group
  that is not a non-abelian p-group for the T4.x family) or if a group is
  above an enumeration cap.

  Identifiers:
    L2.1  exp(G/Z) and exp(gamma_c) divide each other for class 2
    L2.2  exp(G/K) divides exp(G/H) for normal H <= K
    L2.3  class(H x K) = class(H) for abelian K
    T2.4  |Autcent(G)| = |Hom(G, Z(G))| for purely non-abelian G
    L2.5  Autcent of a product without common direct factor
    L2.6  Hom(G, H) = Hom(G, K) criterion for abelian p-groups
    T3.1  Aut_N^M of a product restricted to one factor
    T3.2  G = H x A, restriction maps Aut_c^(n-1)(G) onto Aut_c^(n-1)(H)
    L3.3  alpha_f well defined and injective
    T3.4  Aut_N^M(G) = Hom(G/N, M) for central M <= N
    T3.5  Aut_c^(n-1)(G) = Hom_c(G/H, gamma_n(G))
    C3.6  T3.5 for H = Z(G) and n = class(G)
    T4.1  Aut_c^(n-1)(G) = Autcent(G)
    C4.2  Aut_c(G) = Autcent(G) iff gamma_2 = Z and Aut_c = Hom(G/Z, gamma_2)
    L4.3  Aut_Z^(gamma_n)(G) = Autcent(G) forces purity and gamma_n <= Z
    T4.4  Aut_Z^(gamma_n)(G) = Autcent(G)
    C4.5  Aut_Z^(gamma_2)(G) = Autcent(G) iff gamma_2 = Z

"""
import time
import itertools
import concurrent.futures

import numpy

import groupscope.settings
from groupscope import log
from groupscope import grouplib
from groupscope import abelianlib
from groupscope import homlib
from groupscope import autlib
from groupscope import catalog
from groupscope import group_spec
from groupscope.models.report import TheoremReport, FAILED
from groupscope.models.morphism import AutSubgroupTag, Morphism
from groupscope.exceptions import (OrderCapExceededError, NotPGroupError,
    NotNonabelianError, BadParameterError, HypothesisViolatedError,
    NotAGroupError, NotAbelianError, NotPrimePowerError)


def _describe(G):
  if G.name:
    return G.name
  return "group of order {}".format(G.order)


def _invariants(S):
  """Invariants of an abelian p-subgroup as a report dict, None if S is not
  an abelian p-group. """
  try:
    return abelianlib.abelian_invariants(S).as_dict()
  except (NotAbelianError, NotPrimePowerError):
    return None


def _check_nonabelian_p_group(G):
  if not grouplib.is_p_group(G) or G.order == 1:
    raise NotPGroupError("Expected a nontrivial p-group, got order"
        " {}".format(G.order))
  if grouplib.is_abelian(G):
    raise NotNonabelianError("Expected a non-abelian group")


def _check_n(n):
  if not isinstance(n, int) or n < 2:
    raise BadParameterError("n must be an integer >= 2, got {}".format(n))


def _hom_cardinality(G, A):
  """|Hom(G, A)| by enumeration, by counting basis images above
  `settings.HOM_ENUMERATION_LIMIT`. """
  try:
    return len(homlib.enumerate_homs(G, A))
  except OrderCapExceededError:
    return homlib.count_homs(G, A)


def _distinct_series_terms(G):
  """[(i, gamma_i(G))] for i >= 2 up to the first repeated term. """
  terms = []
  i = 2
  previous = grouplib.gamma(G, 1)
  while True:
    current = grouplib.gamma(G, i)
    if current == previous:
      return terms
    terms.append((i, current))
    previous = current
    i += 1


def iso_test(G1, G2):
  """
  <Purpose>
    Decides whether two Cayley table groups are isomorphic. Cheap invariants
    (order, element order profile, center order, commutativity) are compared
    first, then isomorphisms are searched by generator images.

  <Exceptions>
    OrderCapExceededError if the groups are above `settings.AUT_HARD_CAP`.

  <Returns>
    Boolean.
  """
  if G1.order != G2.order:
    return False

  if G1.order > groupscope.settings.AUT_HARD_CAP:
    raise OrderCapExceededError("Isomorphism search is capped at order"
        " {0}, got {1}".format(groupscope.settings.AUT_HARD_CAP, G1.order))

  profiles = []
  for G in (G1, G2):
    profiles.append((sorted(int(x) for x in grouplib.element_orders(G)),
        grouplib.center(G).order, grouplib.is_abelian(G)))
  if profiles[0] != profiles[1]:
    return False

  return autlib.find_isomorphism(G1, G2) is not None


def _iso_aut_hom(automorphisms, homs):
  """Isomorphism of a list of automorphisms under composition and a Hom set
  under the pointwise product, both materialized as Cayley tables. """
  if len(automorphisms) != len(homs):
    return False
  return iso_test(autlib.automorphisms_as_group(automorphisms),
      homlib.homset_group(homs))


def _start(theorem_id, G):
  return time.time(), TheoremReport(theorem_id=theorem_id,
      group_spec=_describe(G))


def check_l21(G):
  """
  <Purpose>
    For nilpotent G of class c >= 1: exp(G/Z(G)) divides exp(gamma_c(G))
    for c <= 2, exp(gamma_c(G)) divides exp(G/Z(G)) for c >= 2, equality
    for c = 2. The first divisibility fails from class 3 on (D(8):
    exp(G/Z) = 4, exp(gamma_3) = 2), it is recorded as a witness there.

  <Returns>
    A TheoremReport.
  """
  started, report = _start("L2.1", G)
  nilpotent = grouplib.is_nilpotent(G)
  report.add_hypothesis("G nilpotent", nilpotent)
  report.add_hypothesis("G nontrivial", G.order > 1)

  if report.hypotheses_hold():
    c = grouplib.nilpotency_class(G)
    exp_quotient = grouplib.exponent(grouplib.quotient(G,
        grouplib.center(G)).group)
    exp_gamma = grouplib.exponent(grouplib.gamma(G, c))
    report.witnesses.update({"class": c, "exp(G/Z)": exp_quotient,
        "exp(gamma_c)": exp_gamma,
        "exp(G/Z) divides exp(gamma_c)": exp_gamma % exp_quotient == 0})

    report.add_clause("exp(G/Z) divides exp(gamma_c)", [("class <= 2",
        c <= 2)], lambda: exp_gamma % exp_quotient == 0)
    report.add_clause("exp(gamma_c) divides exp(G/Z)", [("class >= 2",
        c >= 2)], lambda: exp_quotient % exp_gamma == 0)
    report.add_clause("exp(G/Z) = exp(gamma_2) for class 2",
        [("class 2", c == 2)], lambda: exp_gamma == exp_quotient)

  return report.finish(started)


def _pair_sources(G):
  """Normal subgroups used for pair sweeps: all of them up to
  `settings.PAIR_SWEEP_MAX_ORDER`, else 1, Z(G), the lower central series
  and G. """
  if G.order <= groupscope.settings.PAIR_SWEEP_MAX_ORDER:
    return list(grouplib.normal_subgroups(G))

  landmarks = [grouplib.trivial_subgroup(G), grouplib.center(G),
      grouplib.whole(G)]
  landmarks.extend(S for _, S in _distinct_series_terms(G))
  unique = []
  for S in landmarks:
    if S not in unique:
      unique.append(S)
  return sorted(unique, key=lambda S: (S.order, S.members))


def check_l22(G):
  """
  <Purpose>
    exp(G/K) divides exp(G/H) for every pair of normal subgroups H <= K,
    swept over the pair sources of G.

  <Returns>
    A TheoremReport.
  """
  started, report = _start("L2.2", G)
  sources = _pair_sources(G)
  exponents = dict((S, grouplib.exponent(grouplib.quotient(G, S).group))
      for S in sources)

  failures = []
  pairs = 0
  for H, K in itertools.product(sources, repeat=2):
    if not H.issubset(K):
      continue
    pairs += 1
    if exponents[H] % exponents[K]:
      failures.append([list(H.members), list(K.members)])

  report.witnesses.update({"pairs": pairs, "failures": failures})
  report.add_clause("exp(G/K) divides exp(G/H) for H <= K", [],
      lambda: not failures)
  return report.finish(started)


def check_l23(H, K):
  """
  <Purpose>
    For abelian K, H x K is nilpotent iff H is, of the same class when H is
    nontrivial.

  <Returns>
    A TheoremReport.
  """
  P = grouplib.direct_product([H, K])
  started, report = _start("L2.3", P.product)
  report.add_hypothesis("K abelian", grouplib.is_abelian(K))

  report.add_clause("H x K nilpotent iff H nilpotent", [],
      lambda: grouplib.is_nilpotent(P.product) == grouplib.is_nilpotent(H))

  H_nilpotent = grouplib.is_nilpotent(H)
  def same_class():
    product_class = grouplib.nilpotency_class(P.product)
    factor_class = grouplib.nilpotency_class(H)
    report.witnesses.update({"class(H x K)": product_class,
        "class(H)": factor_class})
    return product_class == factor_class

  report.add_clause("class(H x K) = class(H)", [("H nilpotent",
      H_nilpotent), ("H nontrivial", H.order > 1)], same_class)
  return report.finish(started)


def check_adney_yen(G):
  """
  <Purpose>
    |Autcent(G)| = |Hom(G, Z(G))| for purely non-abelian G, and the same
    count against |Hom(G/gamma_i(G), Z(G))| for every distinct term
    gamma_i, i >= 2, of the lower central series.

  <Exceptions>
    OrderCapExceededError from the automorphism and direct factor searches.

  <Returns>
    A TheoremReport with id T2.4.
  """
  started, report = _start("T2.4", G)
  purity = autlib.purely_nonabelian_test(G)
  report.add_hypothesis("G purely non-abelian", purity.purely)

  if not purity.purely:
    report.witnesses["abelian factor order"] = purity.witness[1].order

  else:
    Z = grouplib.center(G)
    central = len(autlib.autcent(G))
    homs = _hom_cardinality(G, Z)
    report.witnesses.update({"|Autcent(G)|": central, "|Hom(G, Z)|": homs,
        "Z": _invariants(Z)})
    report.add_clause("|Autcent(G)| = |Hom(G, Z(G))|", [],
        lambda: central == homs)

    for i, term in _distinct_series_terms(G):
      count = len(homlib.enumerate_homs_from_quotient(G, term, Z))
      report.witnesses["|Hom(G/gamma_{}, Z)|".format(i)] = count
      report.add_clause("|Autcent(G)| = |Hom(G/gamma_{}, Z(G))|".format(i),
          [], lambda count=count: central == count)

  return report.finish(started)


def _common_direct_factor(H, K):
  """A pair of isomorphic direct factors of H and K, or None. """
  for A, _ in autlib.direct_factors(H):
    for B, _ in autlib.direct_factors(K):
      if A.order == B.order and iso_test(A.group, B.group):
        return A, B
  return None


def check_bidwell(H, K):
  """
  <Purpose>
    For G = H x K without common direct factor,
    |Autcent(G)| = |Autcent(H)| |Autcent(K)| |Hom(H, Z(K))| |Hom(K, Z(H))|.

  <Returns>
    A TheoremReport with id L2.5.
  """
  P = grouplib.direct_product([H, K])
  started, report = _start("L2.5", P.product)

  common = _common_direct_factor(H, K)
  report.add_hypothesis("no common direct factor", common is None)
  if common is not None:
    report.witnesses["common factor order"] = common[0].order

  def product_formula():
    sides = {
      "|Autcent(G)|": len(autlib.autcent(P.product)),
      "|Autcent(H)|": len(autlib.autcent(H)),
      "|Autcent(K)|": len(autlib.autcent(K)),
      "|Hom(H, Z(K))|": homlib.count_homs(H, grouplib.center(K)),
      "|Hom(K, Z(H))|": homlib.count_homs(K, grouplib.center(H))
    }
    report.witnesses.update(sides)
    return sides["|Autcent(G)|"] == (sides["|Autcent(H)|"] *
        sides["|Autcent(K)|"] * sides["|Hom(H, Z(K))|"] *
        sides["|Hom(K, Z(H))|"])

  report.add_clause("|Autcent(G)| product formula", [], product_formula)
  return report.finish(started)


def _restriction_clauses(report, P, j, M, N, M_j, N_j, prefix=""):
  """Records that f -> alpha_f is an isomorphism Aut_N^M(G) ->
  Aut_{N_j}^{M_j}(H_j). Returns the restriction dict keyed by image. """
  box_G = autlib.aut_box(P.product, M, N)
  box_H = autlib.aut_box(P.factors[j], M_j, N_j)
  restricted = dict((f.image, autlib.restrict_product_automorphism(P, f, j,
      M, N)) for f in box_G)
  report.witnesses.update({prefix + "|Aut_N^M(G)|": len(box_G),
      prefix + "|Aut_Nj^Mj(Hj)|": len(box_H)})

  targets = set(box_H)
  report.add_clause(prefix + "alpha_f in Aut_Nj^Mj(Hj)", [],
      lambda: all(alpha in targets for alpha in restricted.values()))

  def bijective():
    images = set(restricted.values())
    if len(images) != len(box_G) or images != targets:
      return False
    lifts_back = all(autlib.lift_product_automorphism(P,
        restricted[f.image], j) == f for f in box_G)
    restricts_back = all(autlib.restrict_product_automorphism(P,
        autlib.lift_product_automorphism(P, psi, j, M_j, N_j), j, M, N) ==
        psi for psi in box_H)
    return lifts_back and restricts_back

  report.add_clause(prefix + "phi bijective", [], bijective)

  def multiplicative():
    for f1, f2 in itertools.product(box_G, repeat=2):
      composed = f1 * f2
      alpha = restricted.get(composed.image)
      if alpha is None:
        alpha = autlib.restrict_product_automorphism(P, composed, j, M, N)
      if alpha != restricted[f1.image] * restricted[f2.image]:
        report.witnesses[prefix + "non-multiplicative pair"] = [
            list(f1.image), list(f2.image)]
        return False
    return True

  report.add_clause(prefix + "phi multiplicative", [], multiplicative)
  return restricted


def check_t31(P, j, M_j, N_j):
  """
  <Purpose>
    For normal M_j, N_j of the factor H_j, restriction to H_j is an
    isomorphism Aut_N^M(G) -> Aut_{N_j}^{M_j}(H_j), where
    M = 1 x ... x M_j x ... x 1 and N = H_1 x ... x N_j x ... x H_k.

  <Arguments>
    P:
            ProductStructure

    j:
            factor index, counted from 0

    M_j, N_j:
            Subgroups of P.factors[j]

  <Exceptions>
    ShapeMismatchError if j or the subgroups do not fit the product.

  <Returns>
    A TheoremReport.
  """
  started, report = _start("T3.1", P.product)
  M, N = autlib.box_shape(P, j, M_j, N_j)
  H_j = P.factors[j]
  report.add_hypothesis("M_j normal", grouplib.is_normal(H_j, M_j))
  report.add_hypothesis("N_j normal", grouplib.is_normal(H_j, N_j))
  report.witnesses.update({"j": j, "M_j": list(M_j.members),
      "N_j": list(N_j.members)})

  if report.hypotheses_hold():
    _restriction_clauses(report, P, j, M, N, M_j, N_j)
  return report.finish(started)


def check_t32(H, A, n):
  """
  <Purpose>
    For G = H x A with H purely non-abelian and A abelian, restriction to H
    is an isomorphism Aut_{Z(G)}^{gamma_n(G)}(G) ->
    Aut_{Z(H)}^{gamma_n(H)}(H) mapping Aut_c^(n-1)(G) onto Aut_c^(n-1)(H).
    Also records Z(G) = Z(H) x A, gamma_n(G) = gamma_n(H) x 1, and for
    p-groups |Autcent(G)| > |Autcent(H)|.

  <Exceptions>
    HypothesisViolatedError if A is not abelian or trivial.

    BadParameterError if n < 2.

  <Returns>
    A TheoremReport.
  """
  _check_n(n)
  if not grouplib.is_abelian(A) or A.order == 1:
    raise HypothesisViolatedError("A must be a nontrivial abelian group")

  P = grouplib.direct_product([H, A])
  G = P.product
  started, report = _start("T3.2", G)
  report.witnesses["n"] = n
  report.add_hypothesis("H purely non-abelian",
      autlib.purely_nonabelian_test(H).purely)

  M_H = grouplib.gamma(H, n)
  N_H = grouplib.center(H)
  M, N = autlib.box_shape(P, 0, M_H, N_H)

  report.add_clause("Z(G) = Z(H) x A and gamma_n(G) = gamma_n(H) x 1", [],
      lambda: grouplib.center(G) == N and grouplib.gamma(G, n) == M)

  if not report.hypotheses_hold():
    return report.finish(started)

  restricted = _restriction_clauses(report, P, 0, M, N, M_H, N_H)

  def class_preserving_image():
    aut_c_G = autlib.aut_class_preserving(G, n - 1)
    aut_c_H = autlib.aut_class_preserving(H, n - 1)
    report.witnesses.update({"|Aut_c(G)|": len(aut_c_G),
        "|Aut_c(H)|": len(aut_c_H)})
    return set(restricted[f.image] for f in aut_c_G) == set(aut_c_H)

  report.add_clause("phi(Aut_c^(n-1)(G)) = Aut_c^(n-1)(H)", [],
      class_preserving_image)

  def autcent_grows():
    grown, original = len(autlib.autcent(G)), len(autlib.autcent(H))
    report.witnesses.update({"|Autcent(G)|": grown,
        "|Autcent(H)|": original})
    return grown > original

  report.add_clause("|Autcent(G)| > |Autcent(H)|", [("G p-group",
      grouplib.is_p_group(G)), ("H non-abelian",
      not grouplib.is_abelian(H))], autcent_grows)

  return report.finish(started)


def check_l33(G, M, N):
  """
  <Purpose>
    For normal M, N with M abelian and [N, M] = 1, alpha_f(gN) = g^-1 f(g)
    is well defined on G/N for every f in Aut_N^M(G), and f -> alpha_f is
    injective. M need not be central.

  <Returns>
    A TheoremReport.
  """
  started, report = _start("L3.3", G)
  report.witnesses.update({"M": list(M.members), "N": list(N.members)})
  report.add_hypothesis("M normal", grouplib.is_normal(G, M))
  report.add_hypothesis("N normal", grouplib.is_normal(G, N))
  report.add_hypothesis("M abelian", grouplib.is_abelian(M))
  report.add_hypothesis("[N, M] = 1",
      grouplib.commutator_subgroup(N, M).is_trivial())

  if not report.hypotheses_hold():
    return report.finish(started)

  box = autlib.aut_box(G, M, N)
  values = []
  broken = []
  for f in box:
    try:
      values.append(autlib.alpha_values(f, N, M))
    except HypothesisViolatedError:
      broken.append(list(f.image))
  report.witnesses.update({"|Aut_N^M(G)|": len(box),
      "ill defined": broken})

  report.add_clause("alpha_f well defined", [], lambda: not broken)
  report.add_clause("f -> alpha_f injective", [("alpha_f well defined",
      not broken)], lambda: len(set(values)) == len(box))
  return report.finish(started)


def check_t34(G, M, N):
  """
  <Purpose>
    For normal M <= N with M central, f -> alpha_f is an isomorphism
    Aut_N^M(G) -> Hom(G/N, M) with inverse psi -> f_psi.

  <Returns>
    A TheoremReport.
  """
  started, report = _start("T3.4", G)
  report.witnesses.update({"M": list(M.members), "N": list(N.members)})
  report.add_hypothesis("M normal", grouplib.is_normal(G, M))
  report.add_hypothesis("N normal", grouplib.is_normal(G, N))
  report.add_hypothesis("M central", M.issubset(grouplib.center(G)))
  report.add_hypothesis("M <= N", M.issubset(N))

  if not report.hypotheses_hold():
    return report.finish(started)

  box = autlib.aut_box(G, M, N)
  homs = homlib.enumerate_homs_from_quotient(G, N, M)
  report.witnesses.update({"|Aut_N^M(G)|": len(box),
      "|Hom(G/N, M)|": len(homs)})

  alphas = {}
  def homomorphisms():
    for f in box:
      try:
        alphas[f.image] = autlib.alpha_of(f, N, M)
      except (NotAGroupError, HypothesisViolatedError):
        report.witnesses["bad alpha"] = list(f.image)
        return False
    return True

  well_defined = report.add_clause("alpha_f well defined homomorphism",
      [], homomorphisms).conclusion

  def bijective():
    if len(box) != len(homs) or set(alphas.values()) != set(homs):
      return False
    if any(autlib.automorphism_from_hom(alphas[f.image], N, M) != f
        for f in box):
      return False
    return all(autlib.alpha_of(autlib.automorphism_from_hom(psi, N, M), N,
        M) == psi for psi in homs)

  report.add_clause("phi bijective with inverse psi -> f_psi",
      [("alpha_f well defined homomorphism", bool(well_defined))], bijective)

  def multiplicative():
    for f1, f2 in itertools.product(box, repeat=2):
      composed = f1 * f2
      alpha = alphas.get(composed.image)
      if alpha is None:
        alpha = autlib.alpha_of(composed, N, M)
      if alpha != homlib.pointwise_product(alphas[f1.image],
          alphas[f2.image]):
        report.witnesses["non-multiplicative pair"] = [list(f1.image),
            list(f2.image)]
        return False
    return True

  report.add_clause("alpha_(f1 f2) = alpha_f1 alpha_f2",
      [("alpha_f well defined homomorphism", bool(well_defined))],
      multiplicative)
  return report.finish(started)


def check_t35(G, H, n, theorem_id="T3.5"):
  """
  <Purpose>
    For G nilpotent of class <= n and gamma_n(G) <= H <= Z(G),
    f -> alpha_f maps Aut_c^(n-1)(G) bijectively onto
    Hom_c(G/H, gamma_n(G)).

  <Exceptions>
    BadParameterError if n < 2.

  <Returns>
    A TheoremReport.
  """
  _check_n(n)
  started, report = _start(theorem_id, G)
  report.witnesses.update({"n": n, "H": list(H.members)})

  nilpotent = grouplib.is_nilpotent(G)
  report.add_hypothesis("G nilpotent of class <= n",
      nilpotent and grouplib.nilpotency_class(G) <= n)
  gamma_n = grouplib.gamma(G, n)
  report.add_hypothesis("gamma_n <= H <= Z", gamma_n.issubset(H) and
      H.issubset(grouplib.center(G)))

  if not report.hypotheses_hold():
    return report.finish(started)

  aut_c = autlib.aut_class_preserving(G, n - 1)
  hom_c = homlib.hom_c_subset(G, H, n)
  report.witnesses.update({"|Aut_c^(n-1)(G)|": len(aut_c),
      "|Hom_c(G/H, gamma_n)|": len(hom_c)})

  report.add_clause("|Aut_c^(n-1)(G)| = |Hom_c(G/H, gamma_n(G))|", [],
      lambda: len(aut_c) == len(hom_c))

  box = AutSubgroupTag(kind="box", upper=gamma_n, lower=H)
  contained = report.add_clause("Aut_c^(n-1)(G) <= Aut_H^(gamma_n)(G)", [],
      lambda: all(autlib.is_member(f, box) for f in aut_c)).conclusion

  def image_is_hom_c():
    alphas = [autlib.alpha_of(f, H, gamma_n) for f in aut_c]
    return (len(set(alphas)) == len(aut_c) and
        set(alphas) == set(hom_c.members))

  report.add_clause("phi(Aut_c^(n-1)(G)) = Hom_c(G/H, gamma_n(G))",
      [("Aut_c^(n-1)(G) <= Aut_H^(gamma_n)(G)", bool(contained))],
      image_is_hom_c)
  return report.finish(started)


def check_c36(G):
  """The H = Z(G), n = class(G) instance of `check_t35`; n is raised to 2
  for abelian G. Non-nilpotent groups fail the hypotheses. """
  if grouplib.is_nilpotent(G):
    n = max(grouplib.nilpotency_class(G), 2)
  else:
    n = 2
  return check_t35(G, grouplib.center(G), n, theorem_id="C3.6")


class _SeriesData(object):
  """The quantities shared by the T4.x checkers for one (G, n). """

  def __init__(self, G, n):
    self.Z = grouplib.center(G)
    self.gamma_n = grouplib.gamma(G, n)
    self.gamma_2 = grouplib.gamma(G, 2)
    self.contained = self.gamma_n.issubset(self.Z)
    self.equal_terms = self.gamma_n == self.Z

    self.Z_invariants = abelianlib.abelian_invariants(self.Z)
    self.gamma_invariants = None
    self.ranks_equal = False
    self.var = None
    if self.contained:
      self.gamma_invariants = abelianlib.abelian_invariants(self.gamma_n)
      self.ranks_equal = (self.gamma_invariants.rank ==
          self.Z_invariants.rank)
    if self.ranks_equal:
      self.var = abelianlib.var(self.gamma_invariants, self.Z_invariants)

    self.exp_abelianization = grouplib.exponent(grouplib.quotient(G,
        self.gamma_2).group)
    self.exp_beats_var = self.ranks_equal and (self.exp_abelianization >
        self.var)

  def witnesses(self):
    return {
      "Z": self.Z_invariants.as_dict(),
      "gamma_n": (self.gamma_invariants.as_dict()
          if self.gamma_invariants is not None else None),
      "var(gamma_n, Z)": self.var,
      "exp(G/gamma_2)": self.exp_abelianization
    }


def _rank_conclusion(data):
  return data.contained and data.ranks_equal


def check_t41(G, n):
  """
  <Purpose>
    For a finite non-abelian p-group G and n >= 2:
      forward(1): Aut_c^(n-1)(G) = Autcent(G) implies gamma_n(G) <= Z(G)
                  and d(gamma_n(G)) = d(Z(G))
      forward(2): if moreover exp(G/gamma_2(G)) > var(gamma_n(G), Z(G)),
                  then gamma_n(G) = Z(G) and Aut_c^(n-1)(G) is isomorphic
                  to Hom(G/Z(G), gamma_n(G))
      converse:   gamma_n(G) = Z(G) and that isomorphism imply the equality
                  and exp(G/gamma_2(G)) > var(gamma_n(G), Z(G))

    var is only evaluated once gamma_n <= Z with equal ranks is known.

  <Exceptions>
    NotPGroupError, NotNonabelianError for other groups, BadParameterError
    for n < 2.

  <Returns>
    A TheoremReport.
  """
  _check_nonabelian_p_group(G)
  _check_n(n)
  started, report = _start("T4.1", G)
  data = _SeriesData(G, n)

  aut_c = autlib.aut_class_preserving(G, n - 1)
  central = autlib.autcent(G)
  equal = aut_c == central
  report.witnesses.update(data.witnesses())
  report.witnesses.update({"n": n, "|Aut_c^(n-1)(G)|": len(aut_c),
      "|Autcent(G)|": len(central)})

  # Hom(G/Z, gamma_n) is only needed, and only abelian, when gamma_n = Z
  iso = data.equal_terms and _iso_aut_hom(aut_c,
      homlib.enumerate_homs_from_quotient(G, data.Z, data.gamma_n))
  report.witnesses["Aut_c^(n-1)(G) isomorphic to Hom(G/Z, gamma_n)"] = iso

  equality = ("Aut_c^(n-1)(G) = Autcent(G)", equal)
  report.add_clause("forward(1)", [equality],
      lambda: _rank_conclusion(data))
  report.add_clause("forward(2)", [equality, ("var defined",
      data.ranks_equal), ("exp(G/gamma_2) > var", data.exp_beats_var)],
      lambda: data.equal_terms and iso)

  report.add_clause("converse", [("gamma_n = Z", data.equal_terms),
      ("Aut_c^(n-1)(G) isomorphic to Hom(G/Z, gamma_n)", iso)],
      lambda: equal and data.exp_beats_var)
  return report.finish(started)


def check_c42(G):
  """
  <Purpose>
    For a finite non-abelian p-group, Aut_c(G) = Autcent(G) iff
    gamma_2(G) = Z(G) and Aut_c(G) is isomorphic to Hom(G/Z(G),
    gamma_2(G)). When gamma_2 <= Z, also exp(gamma_2) = exp(G/Z) and
    exp(G/Z) divides exp(G/gamma_2). var(gamma_2, Z) against exp(gamma_2)
    is recorded as a witness only, it fails for the modular groups.

  <Exceptions>
    NotPGroupError, NotNonabelianError for other groups.

  <Returns>
    A TheoremReport.
  """
  _check_nonabelian_p_group(G)
  started, report = _start("C4.2", G)
  data = _SeriesData(G, 2)

  aut_c = autlib.aut_class_preserving(G, 1)
  central = autlib.autcent(G)
  left = aut_c == central
  right = data.equal_terms and _iso_aut_hom(aut_c,
      homlib.enumerate_homs_from_quotient(G, data.Z, data.gamma_2))
  report.witnesses.update(data.witnesses())
  report.witnesses.update({"|Aut_c(G)|": len(aut_c),
      "|Autcent(G)|": len(central), "Aut_c = Autcent": left,
      "gamma_2 = Z and isomorphic": right})

  report.add_clause("Aut_c = Autcent iff gamma_2 = Z and Aut_c isomorphic"
      " to Hom(G/Z, gamma_2)", [], lambda: left == right)

  def exponent_chain():
    exp_gamma = grouplib.exponent(data.gamma_2)
    exp_central_quotient = grouplib.exponent(grouplib.quotient(G,
        data.Z).group)
    report.witnesses.update({"exp(gamma_2)": exp_gamma,
        "exp(G/Z)": exp_central_quotient})
    if data.var is not None:
      report.witnesses["var < exp(gamma_2)"] = data.var < exp_gamma
    return (exp_gamma == exp_central_quotient and
        data.exp_abelianization % exp_central_quotient == 0)

  report.add_clause("exp(gamma_2) = exp(G/Z) divides exp(G/gamma_2)",
      [("gamma_2 <= Z", data.contained)], exponent_chain)
  return report.finish(started)


def _lemma43_clauses(report, G, equal, data):
  purity = autlib.purely_nonabelian_test(G)
  report.witnesses["purely non-abelian"] = purity.purely
  equality = ("Aut_Z^(gamma_n)(G) = Autcent(G)", equal)
  report.add_clause("equality implies purely non-abelian and gamma_n <= Z",
      [equality], lambda: purity.purely and data.contained)
  report.add_clause("abelian direct factor implies the sets differ",
      [("G not purely non-abelian", not purity.purely)], lambda: not equal)


def check_l43(G, n):
  """
  <Purpose>
    For a finite non-abelian p-group and n >= 2,
    Aut_{Z(G)}^{gamma_n(G)}(G) = Autcent(G) implies that G is purely
    non-abelian and gamma_n(G) <= Z(G).

  <Returns>
    A TheoremReport.
  """
  _check_nonabelian_p_group(G)
  _check_n(n)
  started, report = _start("L4.3", G)
  data = _SeriesData(G, n)
  equal = autlib.aut_box(G, data.gamma_n, data.Z) == autlib.autcent(G)
  report.witnesses["n"] = n
  _lemma43_clauses(report, G, equal, data)
  return report.finish(started)


def check_t44(G, n):
  """
  <Purpose>
    For a finite non-abelian p-group G and n >= 2, with
    B = Aut_{Z(G)}^{gamma_n(G)}(G):
      forward(1): B = Autcent(G) implies gamma_n(G) <= Z(G) and
                  d(gamma_n(G)) = d(Z(G))
      forward(2): if moreover exp(G/gamma_2(G)) > var(gamma_n(G), Z(G)),
                  then gamma_n(G) = Z(G)
      converse:   gamma_n(G) = Z(G) implies B = Autcent(G) and
                  exp(G/gamma_2(G)) > var(gamma_n(G), Z(G)) = 1
    plus the purity clauses of `check_l43`.

  <Returns>
    A TheoremReport.
  """
  _check_nonabelian_p_group(G)
  _check_n(n)
  started, report = _start("T4.4", G)
  data = _SeriesData(G, n)

  box = autlib.aut_box(G, data.gamma_n, data.Z)
  central = autlib.autcent(G)
  equal = box == central
  report.witnesses.update(data.witnesses())
  report.witnesses.update({"n": n, "|Aut_Z^(gamma_n)(G)|": len(box),
      "|Autcent(G)|": len(central)})

  equality = ("Aut_Z^(gamma_n)(G) = Autcent(G)", equal)
  report.add_clause("forward(1)", [equality],
      lambda: _rank_conclusion(data))
  report.add_clause("forward(2)", [equality, ("var defined",
      data.ranks_equal), ("exp(G/gamma_2) > var", data.exp_beats_var)],
      lambda: data.equal_terms)
  report.add_clause("converse", [("gamma_n = Z", data.equal_terms)],
      lambda: equal and data.exp_beats_var)
  _lemma43_clauses(report, G, equal, data)
  return report.finish(started)


def check_c45(G):
  """Aut_{Z(G)}^{gamma_2(G)}(G) = Autcent(G) iff gamma_2(G) = Z(G), for a
  finite non-abelian p-group. """
  _check_nonabelian_p_group(G)
  started, report = _start("C4.5", G)
  Z = grouplib.center(G)
  gamma_2 = grouplib.gamma(G, 2)
  box = autlib.aut_box(G, gamma_2, Z)
  central = autlib.autcent(G)
  report.witnesses.update({"|Aut_Z^(gamma_2)(G)|": len(box),
      "|Autcent(G)|": len(central), "gamma_2 = Z": gamma_2 == Z})
  report.add_clause("Aut_Z^(gamma_2)(G) = Autcent(G) iff gamma_2 = Z", [],
      lambda: (box == central) == (gamma_2 == Z))
  return report.finish(started)


def _realize_subgroup_type(p, K_inv, H_inv):
  """
  Builds K = Ab(p; m_1, ..., m_t) and its subgroup
  H = <e_j^(p^(m_j - n_j))>, which has type n_1, ..., n_s for s <= t.
  """
  K = catalog.abelian_p_structure(p, K_inv.exponents)
  generators = []
  for j, n in enumerate(H_inv.exponents):
    e = K.embeddings[j].image[1]
    generators.append(K.product.power(e, p ** (K_inv.exponents[j] - n)))
  return K.product, grouplib.subgroup_generate(K.product, generators)


def check_l26(G_inv, H_inv, K_inv):
  """
  <Purpose>
    Hom(G, H) = Hom(G, K) iff H = K, or d(H) = d(K) and exp(G) <= var(H, K),
    for abelian p-group types G and H <= K, evaluated on the invariants.

  <Returns>
    A TheoremReport.
  """
  started = time.time()
  report = TheoremReport(theorem_id="L2.6", group_spec="G={0} H={1}"
      " K={2}".format(list(G_inv.exponents), list(H_inv.exponents),
      list(K_inv.exponents)))
  report.add_hypothesis("H type of a subgroup of K",
      abelianlib.is_dominated(H_inv, K_inv))
  report.add_hypothesis("G nontrivial", G_inv.order > 1)

  def equivalence():
    outcome = abelianlib.lemma26_test(G_inv, H_inv, K_inv)
    report.witnesses.update({"hom_equal": outcome.hom_equal,
        "criterion": outcome.criterion, "r": outcome.r})
    return outcome.holds

  report.add_clause("Hom equality iff criterion", [], equivalence)
  return report.finish(started)


def _generator_images(P, K):
  """
  <Purpose>
    For G = P.product, a direct product of cyclic groups with generator 1 in
    every factor, and an abelian K: the elements x of K for which
    g -> x^(c_j(g)) is a homomorphism G -> K, c_j(g) being the j-th
    coordinate of g. Every such map is built and validated as a Morphism.
    A homomorphism G -> K is a free choice of one x per factor, so
    |Hom(G, K)| is the product of the list lengths and Hom(G, S) for a
    subgroup S keeps the x inside S.

  <Returns>
    A list with one list of element indices of K per factor of P.
  """
  G = P.product
  strides = numpy.array(P.strides, dtype=numpy.int64)
  orders = numpy.array([factor.order for factor in P.factors],
      dtype=numpy.int64)
  coordinates = (numpy.arange(G.order)[:, None] // strides) % orders

  images = []
  for j, factor in enumerate(P.factors):
    admissible = []
    for x in range(K.order):
      powers = [0]
      for _ in range(factor.order - 1):
        powers.append(int(K.table[powers[-1], x]))
      image = numpy.array(powers, dtype=numpy.int64)[coordinates[:, j]]
      try:
        Morphism(domain=G, codomain=K, image=image).validate()
      except NotAGroupError:
        continue
      admissible.append(x)
    images.append(admissible)
  return images


def check_l26_sweep(p, max_power):
  """
  <Purpose>
    Sweeps the Hom equality criterion over every triple of abelian p-group
    types G != 1 and H <= K with |G|, |K| <= p^max_power. K and G are built
    as Cayley tables and H as a concrete subgroup of K. The Hom sets are
    counted from homomorphisms built and validated on those groups, see
    `_generator_images`, never by a formula, and compared against
    `abelianlib.hom_order` and `abelianlib.lemma26_test`.

  <Returns>
    A single TheoremReport with id L2.6, failing triples listed in the
    witnesses.
  """
  started = time.time()
  report = TheoremReport(theorem_id="L2.6",
      group_spec="Ab({0}; *) up to order {0}^{1}".format(p, max_power))

  types = abelianlib.invariant_types(p, max_power)
  structures = {}
  subgroups = {}
  images = {}
  def concrete_group(inv):
    if inv.exponents not in structures:
      structures[inv.exponents] = catalog.abelian_p_structure(p,
          inv.exponents)
    return structures[inv.exponents]

  equivalence_failures = []
  formula_failures = []
  triples = 0
  for G_inv in types:
    if G_inv.order == 1:
      continue
    P = concrete_group(G_inv)
    for K_inv in types:
      for H_inv in types:
        if not abelianlib.is_dominated(H_inv, K_inv):
          continue
        key = (K_inv.exponents, H_inv.exponents)
        if key not in subgroups:
          subgroups[key] = _realize_subgroup_type(p, K_inv, H_inv)
        K, H = subgroups[key]
        triples += 1

        pair = (G_inv.exponents, K_inv.exponents)
        if pair not in images:
          images[pair] = _generator_images(P, K)
        into_K = into_H = 1
        for admissible in images[pair]:
          into_K *= len(admissible)
          into_H *= len([x for x in admissible if x in H])
        triple = [list(G_inv.exponents), list(H_inv.exponents),
            list(K_inv.exponents)]

        if (into_H != abelianlib.hom_order(G_inv, H_inv) or
            into_K != abelianlib.hom_order(G_inv, K_inv)):
          formula_failures.append(triple)

        outcome = abelianlib.lemma26_test(G_inv, H_inv, K_inv)
        if not outcome.holds or (into_H == into_K) != outcome.criterion:
          equivalence_failures.append(triple)

  report.witnesses.update({"p": p, "max_power": max_power,
      "triples": triples, "equivalence failures": equivalence_failures,
      "formula failures": formula_failures})
  report.add_clause("equivalence", [], lambda: not equivalence_failures)
  report.add_clause("formula", [], lambda: not formula_failures)
  return report.finish(started)


CHECKERS = {
  "L2.1": check_l21,
  "L2.2": check_l22,
  "L2.3": check_l23,
  "T2.4": check_adney_yen,
  "L2.5": check_bidwell,
  "L2.6": check_l26,
  "T3.1": check_t31,
  "T3.2": check_t32,
  "L3.3": check_l33,
  "T3.4": check_t34,
  "T3.5": check_t35,
  "C3.6": check_c36,
  "T4.1": check_t41,
  "C4.2": check_c42,
  "L4.3": check_l43,
  "T4.4": check_t44,
  "C4.5": check_c45
}

THEOREM_IDS = sorted(CHECKERS)

# Sweep parameters for L2.6 in corpus runs
LEMMA26_SWEEPS = ((2, 4), (3, 4))


def _landmark_pairs(H):
  """Pairs (M_j, N_j) of landmark subgroups of a factor. """
  landmarks = []
  for S in [grouplib.trivial_subgroup(H), grouplib.center(H),
      grouplib.whole(H)] + [S for _, S in _distinct_series_terms(H)]:
    if S not in landmarks:
      landmarks.append(S)
  return list(itertools.product(landmarks, repeat=2))


def _group_tasks(spec, G, ast, max_order, wanted):
  """(spec, theorem id, callable) for every check of one catalog group. """
  tasks = []
  def add(theorem_id, function, *args):
    if theorem_id in wanted:
      tasks.append((spec, theorem_id, lambda: function(*args)))

  add("L2.1", check_l21, G)
  add("L2.2", check_l22, G)
  add("T2.4", check_adney_yen, G)
  add("C3.6", check_c36, G)

  if 2 * G.order <= max_order:
    add("L2.3", check_l23, G, catalog.cyclic(2))

  sources = _pair_sources(G)
  center = grouplib.center(G)
  for M, N in itertools.product(sources, repeat=2):
    if M.issubset(center) and M.issubset(N):
      add("T3.4", check_t34, G, M, N)
    if (grouplib.is_abelian(M) and
        grouplib.commutator_subgroup(N, M).is_trivial()):
      add("L3.3", check_l33, G, M, N)

  if grouplib.is_nilpotent(G):
    n = max(grouplib.nilpotency_class(G), 2)
    for H in grouplib.subgroups_between(G, grouplib.gamma(G, n), center):
      add("T3.5", check_t35, G, H, n)

  if grouplib.is_p_group(G) and not grouplib.is_abelian(G):
    add("C4.2", check_c42, G)
    add("C4.5", check_c45, G)
    for n in range(2, grouplib.nilpotency_class(G) + 2):
      add("T4.1", check_t41, G, n)
      add("L4.3", check_l43, G, n)
      add("T4.4", check_t44, G, n)

  factors = group_spec.product_factors(ast)
  if len(factors) == 2:
    H, K = [group_spec.construct(factor) for factor in factors]
    P = grouplib.direct_product([H, K])
    add("L2.5", check_bidwell, H, K)
    for M_j, N_j in _landmark_pairs(H):
      add("T3.1", check_t31, P, 0, M_j, N_j)
    if (not grouplib.is_abelian(H) and grouplib.is_abelian(K) and
        K.order > 1):
      for n in range(2, grouplib.nilpotency_class(H) + 2):
        add("T3.2", check_t32, H, K, n)

  return tasks


def _run_task(task):
  spec, theorem_id, function = task
  try:
    report = function()
  except OrderCapExceededError as e:
    log.warn("Skipping {0} on {1}: {2}".format(theorem_id, spec, e))
    return None

  if report.status == FAILED:
    log.fail_check("{0} on {1}".format(theorem_id, spec))
  else:
    log.info("{0} on {1}: {2}".format(theorem_id, spec, report.status))
  return report


def run_corpus(max_order=None, theorems=None, jobs=None):
  """
  <Purpose>
    Runs every applicable checker over every catalog group of order at most
    `max_order`. Pair checks (T3.4, L3.3, L2.2) sweep all normal subgroups up
    to `settings.PAIR_SWEEP_MAX_ORDER` and the center and lower central
    series above. Two-factor catalog products also run T3.1, L2.5 and, for an
    abelian second factor, T3.2. L2.6 runs as one sweep per prime.

  <Arguments>
    max_order: (optional)
            largest group order, defaults to `settings.CORPUS_MAX_ORDER`

    theorems: (optional)
            list of theorem ids, all if None; an empty list runs nothing

    jobs: (optional)
            worker threads, defaults to `settings.CORPUS_JOBS`

  <Exceptions>
    BadParameterError for unknown theorem ids.

  <Side Effects>
    Logs progress and failing checks. Catalog groups above
    `settings.ORDER_CAP` and checks above an enumeration cap are skipped
    with a warning.

  <Returns>
    A list of TheoremReports sorted by group spec, then theorem id.
  """
  if max_order is None:
    max_order = groupscope.settings.CORPUS_MAX_ORDER
  if jobs is None:
    jobs = groupscope.settings.CORPUS_JOBS
  if theorems is None:
    theorems = THEOREM_IDS

  unknown = sorted(set(theorems) - set(CHECKERS))
  if unknown:
    raise BadParameterError("Unknown theorem ids: {}".format(
        ", ".join(unknown)))
  wanted = set(theorems)
  if not wanted:
    return []

  tasks = []
  for spec in catalog.CATALOG:
    try:
      ast = group_spec.parse(spec)
      if group_spec.order_of(ast) > max_order:
        continue
      G = group_spec.construct(ast)
    except OrderCapExceededError as e:
      log.warn("Skipping {0}: {1}".format(spec, e))
      continue
    tasks.extend(_group_tasks(group_spec.canonical(ast), G, ast, max_order,
        wanted))

  if "L2.6" in wanted:
    for p, max_power in LEMMA26_SWEEPS:
      tasks.append(("Ab({}; *)".format(p), "L2.6",
          lambda p=p, max_power=max_power: check_l26_sweep(p, max_power)))

  log.info("Running {0} checks with {1} worker(s)".format(len(tasks), jobs))
  if jobs > 1:
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
      results = list(pool.map(_run_task, tasks))
  else:
    results = [_run_task(task) for task in tasks]

  ordered = sorted(
      ((spec, theorem_id, index, report) for index, ((spec, theorem_id, _),
      report) in enumerate(zip(tasks, results)) if report is not None),
      key=lambda entry: entry[:3])
  return [entry[3] for entry in ordered]
