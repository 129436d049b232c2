"""The SO(4,4)/U computation: the sl(2,R) semisimple-element list for
so(4,4), the reductive subalgebra u = R^2 + sl(2,R), and the verification
that the quotient admits a non-virtually-abelian discontinuous group but no
proper SL(2,R) action.

The eleven semisimple elements are classification data (they exhaust the
sl(2,R)-triples of so(4,4) up to conjugacy); everything checked here is the
internal consistency of that list and the properness conclusions it forces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import Subspace, Vec, vec, vec_add, vec_scale
from .homspace import DerivedEmbedding, EmbeddingSpec, check_strong_regularity, derive_embedding
from .realform import lookup_real_form, rank_profile
from .rootsys import root_system
from .weyl import WeylGroup

A_VEC: Vec = vec([3, 1, 0, 2])
B_VEC: Vec = vec([2, 0, 0, 1])
C_VEC: Vec = vec([0, 0, 1, 0])


@dataclass(frozen=True)
class Sl2SemisimpleRow:
    h: Vec
    wh: Vec
    combo: tuple[int, int, int]  # coefficients on (a, b, c)


# h, a Weyl transform of h landing in u1, and that transform on the (a,b,c)
# basis.  The (1,1,0,0) row's transform is (-1,1,0,0) = a-2b.
TABLE2: tuple[Sl2SemisimpleRow, ...] = tuple(
    Sl2SemisimpleRow(vec(h), vec(wh), combo)
    for h, wh, combo in [
        ((6, 4, 2, 0), (6, 2, 0, 4), (2, 0, 0)),
        ((4, 2, 2, 0), (4, 0, 2, 2), (0, 2, 2)),
        ((3, 3, 1, 1), (-3, 1, 3, -1), (1, -3, 3)),
        ((3, 3, 1, -1), (-3, 1, -3, -1), (1, -3, -3)),
        ((4, 2, 0, 0), (4, 0, 0, 2), (0, 2, 0)),
        ((2, 1, 1, 0), (2, 0, 1, 1), (0, 1, 1)),
        ((1, 1, 1, 1), (1, 1, 1, 1), (1, -1, 1)),
        ((1, 1, 1, -1), (1, 1, -1, 1), (1, -1, -1)),
        ((2, 0, 0, 0), (0, 0, 2, 0), (0, 0, 2)),
        ((1, 1, 0, 0), (-1, 1, 0, 0), (1, -2, 0)),
        ((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0)),
    ]
)


def u1_subspace() -> Subspace:
    return Subspace.from_spanning([A_VEC, B_VEC, C_VEC], 4)


def d4_weyl(enumeration_cap: int | None = None) -> WeylGroup:
    rs = root_system("D", 4)
    if enumeration_cap is None:
        return WeylGroup(rs)
    return WeylGroup(rs, enumeration_cap)


def build_u() -> DerivedEmbedding:
    """The embedding of u = u1 + root spaces of -(e1-e2) into so(4,4)."""
    alpha = vec([-1, 1, 0, 0])
    spec = EmbeddingSpec(
        ambient=lookup_real_form("so(4,4)"),
        subsystem_generators=(alpha,),
        extra_abelian_vectors=(B_VEC, C_VEC),
    )
    emb = derive_embedding(spec)
    assert emb.coroot_span.contains_vector(vec([-1, 1, 0, 0]))
    assert emb.a_h == u1_subspace()
    assert emb.h_profile.real_rank == 3 and emb.h_profile.ahyp_rank == 1
    return emb


@dataclass
class AppendixReport:
    row_results: list[dict] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_table2(group: WeylGroup | None = None) -> AppendixReport:
    """Check each row: orbit membership, the (a,b,c) combination, and that
    the transformed element lies in u1."""
    group = group or d4_weyl()
    u1 = u1_subspace()
    report = AppendixReport()
    seen_dominant = set()
    for row in TABLE2:
        problems = []
        dom_h, _ = group.dominant_representative(row.h)
        if dom_h != row.h:
            problems.append(f"h {row.h} is not dominant")
        seen_dominant.add(dom_h)
        dom_wh, _ = group.dominant_representative(row.wh)
        if dom_wh != row.h:
            problems.append(f"wh {row.wh} is not in the Weyl orbit of {row.h}")
        ca, cb, cc = row.combo
        combo_vec = vec_add(
            vec_add(vec_scale(ca, A_VEC), vec_scale(cb, B_VEC)), vec_scale(cc, C_VEC)
        )
        if combo_vec != row.wh:
            problems.append(f"combination {row.combo} gives {combo_vec}, not {row.wh}")
        if not u1.contains_vector(row.wh):
            problems.append(f"wh {row.wh} is outside u1")
        report.row_results.append(
            {"h": row.h, "wh": row.wh, "ok": not problems, "problems": problems}
        )
        report.failures.extend(problems)
    if len(seen_dominant) != len(TABLE2):
        report.failures.append("dominant representatives are not pairwise distinct")
    return report


def verify_no_proper_sl2(group: WeylGroup | None = None) -> AppendixReport:
    """Refute a proper SL(2,R) action on SO(4,4)/U: every candidate
    semisimple element has a Weyl image inside u1.  Also record that the
    dimension fast path settles C2 affirmatively."""
    group = group or d4_weyl()
    u1 = u1_subspace()
    report = AppendixReport()
    for row in TABLE2:
        if row.h == vec([0, 0, 0, 0]):
            continue
        witness = group.orbit_meets_subspace(row.h, u1)
        if witness is None:
            report.failures.append(
                f"orbit of {row.h} misses u1; the refutation list is wrong"
            )
            continue
        report.row_results.append(
            {"h": row.h, "witness_image": witness.apply(row.h), "ok": True}
        )
    b = group.minus_w0_fixed_space()
    if not (b.dim == 4 and b.dim > u1.dim):
        report.failures.append(
            f"antipodal subspace has dim {b.dim}; expected the full space"
        )
    return report


def appendix_summary() -> dict:
    """One-shot document for the whole appendix computation."""
    group = d4_weyl()
    emb = build_u()
    table_report = verify_table2(group)
    sl2_report = verify_no_proper_sl2(group)
    g_profile = rank_profile(lookup_real_form("so(4,4)"))
    return {
        "strongly_regular": check_strong_regularity(emb.spec),
        "ranks": {
            "real_g": g_profile.real_rank,
            "ahyp_g": g_profile.ahyp_rank,
            "real_h": emb.h_profile.real_rank,
            "ahyp_h": emb.h_profile.ahyp_rank,
        },
        "table_ok": table_report.ok,
        "table_failures": table_report.failures,
        "c2": True if group.minus_w0_fixed_space().dim > emb.a_h.dim else None,
        "sl2_refuted": sl2_report.ok,
        "sl2_failures": sl2_report.failures,
        "c3": False if sl2_report.ok else None,
    }
