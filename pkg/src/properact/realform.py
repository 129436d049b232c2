"""Catalog of real reductive Lie algebras and their restricted root systems.

Classical families are resolved from their names (sl(5,R), su(2,3), ...);
exceptional forms and special composites ship in catalog.json.  Every rank
is computed from the restricted system, never stored: the a-hyperbolic rank
is the dimension of the antipodal subspace of the system's Weyl group.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .rootsys import RootSystemType
from .weyl import WeylGroup
from . import rootsys


class UnknownRealFormError(KeyError):
    pass


@dataclass(frozen=True)
class RealFormDescriptor:
    name: str
    restricted: RootSystemType | None = None
    abelian_summand_dim: int = 0
    factors: tuple["RealFormDescriptor", ...] = ()
    is_complex: bool = False
    source: str | None = None

    def __post_init__(self):
        if (self.restricted is None) == (not self.factors):
            raise ValueError(
                f"{self.name}: exactly one of restricted type or factors required"
            )


@dataclass(frozen=True)
class RankProfile:
    real_rank: int
    ahyp_rank: int

    @property
    def inner(self) -> bool:
        return self.ahyp_rank == self.real_rank


@lru_cache(maxsize=None)
def ahyp_of_type(rstype: RootSystemType) -> int:
    group = WeylGroup(rootsys.build_root_system(rstype))
    return group.minus_w0_fixed_space().dim


def rank_profile(d: RealFormDescriptor) -> RankProfile:
    if d.restricted is not None:
        real = d.restricted.rank + d.abelian_summand_dim
        ahyp = ahyp_of_type(d.restricted)
        return RankProfile(real, ahyp)
    real = d.abelian_summand_dim
    ahyp = 0
    for f in d.factors:
        p = rank_profile(f)
        real += p.real_rank
        ahyp += p.ahyp_rank
    return RankProfile(real, ahyp)


# -- name grammar ----------------------------------------------------------

_PATTERNS = [
    (re.compile(r"^sl\((\d+),R\)$"), "sl_R"),
    (re.compile(r"^sl\((\d+),C\)$"), "sl_C"),
    (re.compile(r"^su\*\((\d+)\)$"), "su_star"),
    (re.compile(r"^sp\((\d+),R\)$"), "sp_R"),
    (re.compile(r"^so\((\d+),(\d+)\)$"), "so_pq"),
    (re.compile(r"^su\((\d+),(\d+)\)$"), "su_pq"),
    (re.compile(r"^sp\((\d+),(\d+)\)$"), "sp_pq"),
]


def _parametric(name: str) -> RealFormDescriptor | None:
    for pattern, kind in _PATTERNS:
        m = pattern.match(name)
        if not m:
            continue
        args = tuple(int(x) for x in m.groups())
        if kind == "sl_R":
            (n,) = args
            if n < 2:
                raise UnknownRealFormError(name)
            return RealFormDescriptor(name, RootSystemType("A", n - 1))
        if kind == "sl_C":
            (n,) = args
            if n < 2:
                raise UnknownRealFormError(name)
            return RealFormDescriptor(name, RootSystemType("A", n - 1), is_complex=True)
        if kind == "su_star":
            (m2,) = args
            if m2 < 4 or m2 % 2:
                raise UnknownRealFormError(name)
            return RealFormDescriptor(name, RootSystemType("A", m2 // 2 - 1))
        if kind == "sp_R":
            (n,) = args
            if n < 2:
                raise UnknownRealFormError(name)
            return RealFormDescriptor(name, RootSystemType("C", n))
        p, q = args
        if p > q or p < 1:
            raise UnknownRealFormError(name)
        if kind == "so_pq":
            if p == q:
                if p < 3:
                    raise UnknownRealFormError(name)
                return RealFormDescriptor(name, RootSystemType("D", p))
            if p < 2:
                raise UnknownRealFormError(name)
            return RealFormDescriptor(name, RootSystemType("B", p))
        # su(p,q) and sp(p,q) share the BC/C split
        if p == q:
            if p < 2:
                raise UnknownRealFormError(name)
            return RealFormDescriptor(name, RootSystemType("C", p))
        return RealFormDescriptor(name, RootSystemType("BC", p))
    return None


@lru_cache(maxsize=1)
def _file_entries() -> dict[str, dict]:
    raw = json.loads(
        resources.files("properact").joinpath("catalog.json").read_text("utf-8")
    )
    return {e["name"]: e for e in raw["entries"]}


def lookup_real_form(name: str) -> RealFormDescriptor:
    d = _parametric(name)
    if d is not None:
        return d
    entry = _file_entries().get(name)
    if entry is None:
        raise UnknownRealFormError(name)
    factors = tuple(lookup_real_form(f) for f in entry.get("factors", ()))
    restricted = None
    if "family" in entry:
        restricted = RootSystemType(entry["family"], entry["rank"])
    return RealFormDescriptor(
        name,
        restricted=restricted,
        abelian_summand_dim=entry.get("abelian_summand_dim", 0),
        factors=factors,
        source=entry.get("source"),
    )


def default_catalog(max_rank: int = 8) -> list[RealFormDescriptor]:
    """Simple real forms with restricted rank bounded by max_rank."""
    names: list[str] = []
    for n in range(2, max_rank + 2):
        names += [f"sl({n},R)", f"sl({n},C)", f"su*({2 * n})"]
    for n in range(2, max_rank + 1):
        names.append(f"sp({n},R)")
    for p in range(3, max_rank + 1):
        names.append(f"so({p},{p})")
    for p in range(2, max_rank + 1):
        names += [f"so({p},{p + 1})", f"so({p},{p + 2})"]
    for p in range(2, max_rank + 1):
        names += [f"su({p},{p})", f"sp({p},{p})"]
    for p in range(1, max_rank + 1):
        names += [f"su({p},{p + 1})", f"sp({p},{p + 2})"]
    names += [e for e in _file_entries() if "factors" not in _file_entries()[e]]
    catalog = [lookup_real_form(n) for n in names]
    return [
        d
        for d in catalog
        if d.restricted is not None and d.restricted.rank <= max_rank
    ]


# -- consistency with the known rank table ---------------------------------

_T1_SL_R = re.compile(r"^sl\((\d+),R\)$")
_T1_SU_STAR = re.compile(r"^su\*\((\d+)\)$")
_T1_SO = re.compile(r"^so\((\d+),(\d+)\)$")


def table1_expected(name: str) -> tuple[int, int] | None:
    """(ahyp, real) for the families whose two ranks differ; None otherwise."""
    m = _T1_SL_R.match(name)
    if m:
        n = int(m.group(1))
        if n >= 3:
            return (n // 2, n - 1)
        return None
    m = _T1_SU_STAR.match(name)
    if m:
        half = int(m.group(1)) // 2
        if half >= 3:
            return (half // 2, half - 1)
        return None
    m = _T1_SO.match(name)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p == q and p >= 3 and p % 2 == 1:
            return (p - 1, p)
        return None
    if name == "e6_I":
        return (4, 6)
    if name == "e6_IV":
        return (1, 2)
    return None


@dataclass
class Table1Report:
    checked: int = 0
    matched_rows: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_against_table1(catalog: list[RealFormDescriptor] | None = None) -> Table1Report:
    """Cross-check computed ranks against the known exception table.

    Entries outside the table must have equal ranks, except complex forms,
    whose restricted system coincides with that of a listed split form.
    """
    if catalog is None:
        catalog = default_catalog()
    report = Table1Report()
    for d in catalog:
        prof = rank_profile(d)
        expected = table1_expected(d.name)
        report.checked += 1
        if expected is not None:
            if (prof.ahyp_rank, prof.real_rank) != expected:
                report.failures.append(
                    f"{d.name}: computed {(prof.ahyp_rank, prof.real_rank)}, "
                    f"table says {expected}"
                )
            else:
                report.matched_rows.append(d.name)
        elif d.is_complex:
            continue
        elif prof.ahyp_rank != prof.real_rank:
            report.failures.append(
                f"{d.name}: ranks differ {(prof.ahyp_rank, prof.real_rank)} "
                "but the entry is outside the exception table"
            )
    return report
