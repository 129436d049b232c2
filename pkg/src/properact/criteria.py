"""Decision procedures for the three proper-action conditions.

C1 is the real-rank comparison, C2 the translate-containment criterion for
the antipodal subspace, C3 the existence of a properly acting subgroup
locally isomorphic to SL(2,R), decided by the rank comparison under the
strong-regularity and inner-type hypotheses and cross-checked by an orbit
computation with the principal semisimple element as witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .exactlin import Subspace, Vec, dot, rref
from .homspace import DerivedEmbedding
from .realform import RankProfile, RealFormDescriptor, ahyp_of_type, rank_profile
from .rootsys import RootSystem
from .weyl import WeylElement, WeylGroup


class HypothesesNotMetError(RuntimeError):
    """C3 cannot be decided by the rank comparison for this embedding."""


class C2Method(str, Enum):
    RANK_FAST_PATH = "rank_fast_path"
    BENOIST_BRUTEFORCE = "benoist_bruteforce"


@dataclass(frozen=True)
class CriteriaReport:
    c1: bool
    c2: bool
    c2_method: C2Method
    c3: Optional[bool]
    c3_witness: Optional[Vec]
    benoist_witness: Optional[WeylElement]
    hypothesis_ok: dict

    def __post_init__(self):
        if self.c3 and not self.c2:
            raise AssertionError("C3 without C2 violates the implication chain")
        if self.c2 and not self.c1:
            raise AssertionError("C2 without C1 violates the implication chain")


def decide_c1(g_profile: RankProfile, h_profile: RankProfile) -> bool:
    return g_profile.real_rank > h_profile.real_rank


def decide_c2(
    emb: DerivedEmbedding,
    group: WeylGroup,
    force_bruteforce: bool = False,
) -> tuple[bool, C2Method, Optional[WeylElement]]:
    """True iff no Weyl translate of a_h contains the antipodal subspace."""
    b = group.minus_w0_fixed_space()
    if not force_bruteforce and b.dim > emb.a_h.dim:
        return True, C2Method.RANK_FAST_PATH, None
    for translate, elem in group.subspace_orbit_items(emb.a_h):
        if translate.contains(b):
            return False, C2Method.BENOIST_BRUTEFORCE, elem
    return True, C2Method.BENOIST_BRUTEFORCE, None


def kobayashi_proper(a_h: Subspace, a_l: Subspace, group: WeylGroup) -> bool:
    """Properness test: a_h meets no Weyl translate of a_l outside zero."""
    for translate, _ in group.subspace_orbit_items(a_l):
        if a_h.intersection(translate).dim > 0:
            return False
    return True


def sl2_acts_properly(h_vec: Vec, a_h: Subspace, group: WeylGroup) -> bool:
    """Whether the sl(2,R) with semisimple element h_vec acts properly."""
    if all(x == 0 for x in h_vec):
        raise ValueError("semisimple element of an sl(2,R)-triple is nonzero")
    return group.orbit_meets_subspace(h_vec, a_h) is None


def principal_sl2_h(rs: RootSystem) -> Vec:
    """The vector in the root span pairing to 2 with every simple root."""
    simple = rs.simple_roots
    span = list(rref(sorted(rs.roots)))
    n = rs.ambient_dim
    # H = sum c_j v_j over a basis of the root span; (alpha_i, H) = 2
    rows = [
        [dot(a, v) for v in span] + [Fraction(2)] for a in simple
    ]
    solved = rref(rows)
    coeffs = [Fraction(0)] * len(span)
    for row in solved:
        pivot = next(j for j, x in enumerate(row) if x != 0)
        assert pivot < len(span), "inconsistent system for the principal element"
        coeffs[pivot] = row[-1]
    h = tuple(
        sum((c * v[i] for c, v in zip(coeffs, span)), Fraction(0)) for i in range(n)
    )
    assert all(dot(a, h) == 2 for a in simple)
    return h


def decide_c3(
    emb: DerivedEmbedding,
    g: RealFormDescriptor,
    group: WeylGroup,
    verify_constructively: bool = True,
) -> tuple[bool, Optional[Vec]]:
    """Rank-comparison verdict for C3, with an orbit-checked witness.

    Only valid under the theorem's hypotheses: the embedding is strongly
    regular by construction, and h must be of inner type.  The embedding is
    expected to be normalized (b_h inside the ambient antipodal subspace).
    """
    from .homspace import check_strong_regularity

    if not check_strong_regularity(emb.spec):
        raise HypothesesNotMetError("embedding is not strongly regular")
    h_inner = emb.h_profile.inner
    if not h_inner:
        raise HypothesesNotMetError(
            f"h is not of inner type: a-hyperbolic rank {emb.h_profile.ahyp_rank} "
            f"< real rank {emb.h_profile.real_rank}"
        )
    ahyp_g = ahyp_of_type(g.restricted) if g.restricted else rank_profile(g).ahyp_rank
    verdict = ahyp_g > emb.h_profile.ahyp_rank
    if not verdict:
        return False, None
    witness = principal_sl2_h(emb.ambient_system)
    if verify_constructively and group.order <= group.enumeration_cap:
        vanishing = _root_vanishing_on(emb.ambient_system, emb.a_h)
        assert vanishing is not None, (
            "no root vanishes on a_h although the ranks differ"
        )
        assert sl2_acts_properly(witness, emb.a_h, group), (
            "principal element fails the properness check; contradicts the "
            "rank comparison"
        )
    return True, witness


def _root_vanishing_on(rs: RootSystem, s: Subspace) -> Optional[Vec]:
    for alpha in sorted(rs.roots):
        if all(dot(alpha, b) == 0 for b in s.basis):
            return alpha
    return None


def is_antipodal(x: Vec, group: WeylGroup) -> bool:
    """Whether the hyperbolic orbit through x contains -x."""
    dominant, _ = group.dominant_representative(x)
    w0 = group.longest_element()
    return w0.apply(dominant) == tuple(-c for c in dominant)


def evaluate_criteria(
    emb: DerivedEmbedding,
    g: RealFormDescriptor,
    group: WeylGroup,
    force_bruteforce: bool = False,
) -> CriteriaReport:
    """All three verdicts for a normalized embedding; C3 is None when the
    rank-comparison hypotheses fail."""
    from .homspace import check_strong_regularity

    g_profile = rank_profile(g)
    c1 = decide_c1(g_profile, emb.h_profile)
    c2, method, benoist_witness = decide_c2(emb, group, force_bruteforce)
    hypothesis_ok = {
        "strongly_regular": check_strong_regularity(emb.spec),
        "h_inner": emb.h_profile.inner,
    }
    c3: Optional[bool] = None
    c3_witness: Optional[Vec] = None
    try:
        c3, c3_witness = decide_c3(emb, g, group)
    except HypothesesNotMetError:
        pass
    return CriteriaReport(
        c1=c1,
        c2=c2,
        c2_method=method,
        c3=c3,
        c3_witness=c3_witness,
        benoist_witness=benoist_witness,
        hypothesis_ok=hypothesis_ok,
    )
