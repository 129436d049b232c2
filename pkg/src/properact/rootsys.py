"""Root systems in standard rational realizations, including non-reduced BC.

Realizations keep every root coordinate rational (integral except for the
half-integer roots of F4 and the E series), so all downstream linear algebra
stays exact.  A_n lives in the sum-zero hyperplane of Q^{n+1}; E6 and E7 use
the usual realization inside Q^8.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .exactlin import Vec, dot, matrix_rank, vec, vec_add, vec_neg, vec_scale, vec_sub

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")

HALF = Fraction(1, 2)


class InvalidRootSystemError(ValueError):
    pass


class InvalidSubsystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRootSystemError(f"unknown family {self.family!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
            "BC": r >= 1,
        }[self.family]
        if not ok:
            raise InvalidRootSystemError(f"invalid rank {r} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def root_count(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1)
        if self.family in ("B", "C"):
            return 2 * n * n
        if self.family == "D":
            return 2 * n * (n - 1)
        if self.family == "BC":
            return 2 * n * n + 2 * n
        if self.family == "G":
            return 12
        if self.family == "F":
            return 48
        return {6: 72, 7: 126, 8: 240}[n]

    @property
    def weyl_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        if self.family in ("B", "C", "BC"):
            return 2**n * factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * factorial(n)
        if self.family == "G":
            return 12
        if self.family == "F":
            return 1152
        return {6: 51840, 7: 2903040, 8: 696729600}[n]


@dataclass(frozen=True)
class RootSystem:
    rstype: RootSystemType
    ambient_dim: int
    roots: frozenset[Vec]
    simple_roots: tuple[Vec, ...] = field(compare=False)

    @property
    def rank(self) -> int:
        return self.rstype.rank

    def positive_roots(self) -> list[Vec]:
        # positivity with respect to the simple system: nonnegative expansion
        simple = self.simple_roots
        pos = []
        for alpha in self.roots:
            coeffs = _expand(alpha, simple)
            if all(c >= 0 for c in coeffs):
                pos.append(alpha)
        return sorted(pos)


@dataclass(frozen=True)
class Subsystem:
    parent: RootSystem
    members: frozenset[Vec]

    def __post_init__(self):
        bad = self.members - self.parent.roots
        if bad:
            raise InvalidSubsystemError(f"members outside parent roots: {sorted(bad)}")


def _e(i: int, n: int) -> Vec:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def _expand(alpha: Vec, simple: tuple[Vec, ...]) -> tuple[Fraction, ...]:
    """Coefficients of alpha over the simple roots (they are independent)."""
    # solve by Gaussian elimination on the transpose system
    n = len(alpha)
    rows = [[s[i] for s in simple] + [alpha[i]] for i in range(n)]
    from .exactlin import rref

    r = rref(rows)
    coeffs = [Fraction(0)] * len(simple)
    for row in r:
        pivot = next(j for j, x in enumerate(row) if x != 0)
        if pivot == len(simple):
            raise InvalidSubsystemError("vector outside the simple-root span")
        coeffs[pivot] = row[-1]
    return tuple(coeffs)


def _classical_roots(family: str, n: int) -> tuple[int, set[Vec], list[Vec]]:
    if family == "A":
        dim = n + 1
        roots = {
            vec_add(_e(i, dim), vec_neg(_e(j, dim)))
            for i in range(dim)
            for j in range(dim)
            if i != j
        }
        simple = [vec_add(_e(i, dim), vec_neg(_e(i + 1, dim))) for i in range(n)]
        return dim, roots, simple
    dim = n
    roots = set()
    for i, j in combinations(range(n), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.add(vec_add(vec_scale(si, _e(i, n)), vec_scale(sj, _e(j, n))))
    shorts = {vec_scale(s, _e(i, n)) for i in range(n) for s in (1, -1)}
    longs = {vec_scale(2 * s, _e(i, n)) for i in range(n) for s in (1, -1)}
    chain = [vec_add(_e(i, n), vec_neg(_e(i + 1, n))) for i in range(n - 1)]
    if family == "B":
        roots |= shorts
        simple = chain + [_e(n - 1, n)]
    elif family == "C":
        roots |= longs
        simple = chain + [vec_scale(2, _e(n - 1, n))]
    elif family == "BC":
        roots |= shorts | longs
        simple = chain + [_e(n - 1, n)]
    elif family == "D":
        simple = chain + [vec_add(_e(n - 2, n), _e(n - 1, n))]
    else:  # pragma: no cover
        raise InvalidRootSystemError(family)
    return dim, roots, simple


def _simple_roots_exceptional(family: str, n: int) -> tuple[int, list[Vec]]:
    if family == "G":
        # inside the sum-zero hyperplane of Q^3
        a1 = vec([1, -1, 0])
        a2 = vec([-2, 1, 1])
        return 3, [a1, a2]
    if family == "F":
        return 4, [
            vec([0, 1, -1, 0]),
            vec([0, 0, 1, -1]),
            vec([0, 0, 0, 1]),
            vec([HALF, -HALF, -HALF, -HALF]),
        ]
    # E series, Bourbaki realization in Q^8
    a1 = vec([HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF])
    a2 = vec([1, 1, 0, 0, 0, 0, 0, 0])
    chain = [
        tuple(
            Fraction(-1) if j == i - 3 else Fraction(1) if j == i - 2 else Fraction(0)
            for j in range(8)
        )
        for i in range(3, n + 1)
    ]
    return 8, [a1, a2] + chain


def _close_under_reflections(simple: list[Vec]) -> set[Vec]:
    roots = set(simple)
    frontier = set(simple)
    while frontier:
        new = set()
        for beta in frontier:
            for alpha in simple:
                c = 2 * dot(beta, alpha) / dot(alpha, alpha)
                img = vec_add(beta, vec_scale(-c, alpha))
                if img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    return roots


@lru_cache(maxsize=None)
def build_root_system(rstype: RootSystemType) -> RootSystem:
    if rstype.family in ("A", "B", "C", "D", "BC"):
        dim, roots, simple = _classical_roots(rstype.family, rstype.rank)
    else:
        dim, simple = _simple_roots_exceptional(rstype.family, rstype.rank)
        roots = _close_under_reflections(simple)
    rs = RootSystem(rstype, dim, frozenset(roots), tuple(simple))
    assert len(rs.roots) == rstype.root_count, rstype
    return rs


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(RootSystemType(family, rank))


def coroot(rs: RootSystem, alpha: Vec) -> Vec:
    if alpha not in rs.roots:
        raise InvalidSubsystemError(f"{alpha} is not a root of {rs.rstype}")
    return vec_scale(Fraction(2) / dot(alpha, alpha), alpha)


def check_subsystem(s: Subsystem) -> dict[str, bool]:
    members = s.members
    parent = s.parent.roots
    symmetric = all(vec_neg(a) in members for a in members)
    closed = True
    for a in members:
        for b in members:
            total = vec_add(a, b)
            if total in parent and total not in members:
                closed = False
                break
        if not closed:
            break
    return {"closed": closed, "symmetric": symmetric}


def close_subsystem(parent: RootSystem, seed: frozenset[Vec] | set[Vec]) -> frozenset[Vec]:
    """Smallest closed symmetric subset of parent.roots containing +-seed."""
    bad = set(seed) - parent.roots
    if bad:
        raise InvalidSubsystemError(f"not roots of {parent.rstype}: {sorted(bad)}")
    members = set(seed) | {vec_neg(a) for a in seed}
    changed = True
    while changed:
        changed = False
        for a, b in list(combinations(members, 2)) + [(a, a) for a in members]:
            total = vec_add(a, b)
            if total in parent.roots and total not in members:
                members.add(total)
                members.add(vec_neg(total))
                changed = True
    return frozenset(members)


def _positivity_functional(members: list[Vec]) -> Vec:
    # N-adic functional on denominator-cleared coordinates; no member is
    # orthogonal to it, so positivity is a genuine half-system split
    from math import lcm

    denom = 1
    for m in members:
        for x in m:
            denom = lcm(denom, x.denominator)
    cleared = [[int(x * denom) for x in m] for m in members]
    big = 1 + max((abs(c) for row in cleared for c in row), default=0)
    n = len(members[0])
    return tuple(Fraction(big ** (n - 1 - i)) for i in range(n))


def subsystem_simple_roots(members: frozenset[Vec]) -> list[Vec]:
    """A simple system for a closed symmetric subsystem (deterministic)."""
    if not members:
        return []
    ordered = sorted(members)
    f = _positivity_functional(ordered)
    pos = [m for m in ordered if dot(f, m) > 0]
    pos_set = set(pos)
    simple = []
    for alpha in pos:
        decomposable = any(vec_sub(alpha, b) in pos_set for b in pos_set)
        if not decomposable:
            simple.append(alpha)
    return simple


def _identify_component(rank: int, roots: list[Vec]) -> RootSystemType:
    count = len(roots)
    nonreduced = any(vec_scale(2, a) in set(roots) for a in roots)
    if nonreduced:
        if count != 2 * rank * rank + 2 * rank:
            raise InvalidSubsystemError(
                f"non-reduced component with {count} roots at rank {rank}"
            )
        return RootSystemType("BC", rank)
    norms = sorted({dot(a, a) for a in roots})
    if rank == 1:
        return RootSystemType("A", 1)
    if count == rank * (rank + 1) and len(norms) == 1:
        return RootSystemType("A", rank)
    if count == 2 * rank * (rank - 1) and len(norms) == 1 and rank >= 4:
        return RootSystemType("D", rank)
    if count == 2 * rank * rank and len(norms) == 2:
        if rank == 2:
            # B2 and C2 are abstractly isomorphic; keep the label of the
            # standard realization scale (unit shorts: B, doubled longs: C)
            return RootSystemType("C" if norms == [2, 4] else "B", 2)
        shortest = sum(1 for a in roots if dot(a, a) == norms[0])
        if shortest == 2 * rank:
            return RootSystemType("B", rank)
        return RootSystemType("C", rank)
    if rank == 2 and count == 12 and len(norms) == 2:
        return RootSystemType("G", 2)
    if rank == 4 and count == 48 and len(norms) == 2:
        return RootSystemType("F", 4)
    if len(norms) == 1 and (rank, count) in ((6, 72), (7, 126), (8, 240)):
        return RootSystemType("E", rank)
    raise InvalidSubsystemError(
        f"unrecognized component: rank {rank}, {count} roots, {len(norms)} lengths"
    )


def classify_components(s: Subsystem) -> list[RootSystemType]:
    """Types of the indecomposable components of a closed symmetric subsystem."""
    flags = check_subsystem(s)
    if not (flags["closed"] and flags["symmetric"]):
        raise InvalidSubsystemError(f"subsystem not closed/symmetric: {flags}")
    if not s.members:
        return []
    simple = subsystem_simple_roots(s.members)
    # split simple roots into orthogonality classes
    groups: list[list[Vec]] = []
    assignment = {}
    for alpha in simple:
        linked = {assignment[b] for b in assignment if dot(alpha, b) != 0}
        if not linked:
            groups.append([alpha])
            assignment[alpha] = len(groups) - 1
        else:
            target = min(linked)
            groups[target].append(alpha)
            for dead in sorted(linked - {target}, reverse=True):
                for moved in groups[dead]:
                    assignment[moved] = target
                groups[target].extend(groups[dead])
                groups[dead] = []
            assignment[alpha] = target
    components = [g for g in groups if g]
    result = []
    for comp in components:
        span_rows = list(comp)
        comp_roots = [
            m
            for m in s.members
            if matrix_rank(span_rows + [m]) == len(comp)
        ]
        result.append(_identify_component(len(comp), comp_roots))
    return sorted(result, key=lambda t: (t.family, t.rank))
