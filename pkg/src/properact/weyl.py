"""The Weyl group as a finite reflection group on the realization space.

Orbit enumeration is breadth-first over simple-reflection applications with
exact-equality deduplication; group elements carry exact rational matrices
and, when produced by word BFS, a reduced word over the simple reflections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .exactlin import (
    Mat,
    Subspace,
    Vec,
    dot,
    identity_matrix,
    mat_mul,
    mat_vec,
    nullspace,
    vec_neg,
    vec_scale,
)
from .rootsys import RootSystem, InvalidSubsystemError

DEFAULT_ENUMERATION_CAP = 2_000_000


class EnumerationCapError(RuntimeError):
    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(
            f"enumeration needs up to {required} elements, cap is {cap}; "
            "raise the cap or use a rank-based fast path"
        )


class NoWallError(ValueError):
    """The identity fixes everything; it selects no wall."""


@dataclass(frozen=True)
class WeylElement:
    matrix: Mat
    word: Optional[tuple[int, ...]] = None

    def apply(self, v: Vec) -> Vec:
        return mat_vec(self.matrix, v)

    def then(self, other: "WeylElement") -> "WeylElement":
        """Composition other∘self (self applied first)."""
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(mat_mul(other.matrix, self.matrix), word)

    def inverse(self) -> "WeylElement":
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(tuple(zip(*self.matrix)), word)

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return self.matrix == identity_matrix(n)

    def __hash__(self):
        return hash(self.matrix)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix


def reflection_matrix(rs: RootSystem, alpha: Vec) -> WeylElement:
    """Reflection through the wall of alpha, as an exact orthogonal matrix."""
    if alpha not in rs.roots:
        raise InvalidSubsystemError(f"{alpha} is not a root of {rs.rstype}")
    return _reflection(alpha, rs.ambient_dim)


def _reflection(alpha: Vec, dim: int) -> WeylElement:
    norm = dot(alpha, alpha)
    rows = []
    for i in range(dim):
        row = [
            (Fraction(1) if i == j else Fraction(0)) - 2 * alpha[i] * alpha[j] / norm
            for j in range(dim)
        ]
        rows.append(tuple(row))
    return WeylElement(tuple(rows))


class WeylGroup:
    """Handle on the reflection group of a root system.

    For BC_n the generators are the reflections of the B_n simple roots; the
    reflections of e_i and 2e_i coincide, so this is the whole group.
    """

    def __init__(self, system: RootSystem, enumeration_cap: int = DEFAULT_ENUMERATION_CAP):
        self.system = system
        self.enumeration_cap = enumeration_cap
        self.generators = tuple(
            WeylElement(_reflection(a, system.ambient_dim).matrix, (i,))
            for i, a in enumerate(system.simple_roots)
        )
        self._w0: WeylElement | None = None

    @property
    def ambient_dim(self) -> int:
        return self.system.ambient_dim

    @property
    def order(self) -> int:
        return self.system.rstype.weyl_order

    def identity(self) -> WeylElement:
        return WeylElement(identity_matrix(self.ambient_dim), ())

    def root_span(self) -> Subspace:
        return Subspace.from_spanning(sorted(self.system.roots), self.ambient_dim)

    # -- longest element ---------------------------------------------------

    def longest_element(self) -> WeylElement:
        """w0 by greedy descent from a regular dominant vector."""
        if self._w0 is not None:
            return self._w0
        simple = self.system.simple_roots
        x = _sum_vectors(self.system.positive_roots(), self.ambient_dim)
        elem = self.identity()
        while True:
            i = next(
                (k for k, a in enumerate(simple) if dot(a, x) > 0),
                None,
            )
            if i is None:
                break
            x = self.generators[i].apply(x)
            elem = elem.then(self.generators[i])
        w0 = elem
        assert mat_mul(w0.matrix, w0.matrix) == identity_matrix(self.ambient_dim)
        assert {w0.apply(a) for a in simple} == {vec_neg(a) for a in simple}
        self._w0 = w0
        return w0

    def minus_w0_fixed_space(self) -> Subspace:
        """The antipodal subspace: fixed points of -w0 inside the root span."""
        w0 = self.longest_element()
        n = self.ambient_dim
        rows = [
            tuple(w0.matrix[i][j] + (1 if i == j else 0) for j in range(n))
            for i in range(n)
        ]
        kernel = Subspace.from_spanning(nullspace(rows, n), n)
        return kernel.intersection(self.root_span())

    # -- orbits ------------------------------------------------------------

    def dominant_representative(self, x: Vec) -> tuple[Vec, WeylElement]:
        """(x+, u) with u.x = x+ dominant; x+ is unique over the orbit."""
        simple = self.system.simple_roots
        u = self.identity()
        current = x
        while True:
            i = next((k for k, a in enumerate(simple) if dot(a, current) < 0), None)
            if i is None:
                return current, u
            current = self.generators[i].apply(current)
            u = u.then(self.generators[i])

    def orbit_of_vector(self, x: Vec) -> set[Vec]:
        return {v for v, _ in self._vector_orbit_items(x)}

    def orbit_meets_subspace(self, x: Vec, s: Subspace) -> Optional[WeylElement]:
        """A witness u with u.x in s, or None when the whole orbit misses s."""
        best: tuple[Vec, WeylElement] | None = None
        for v, elem in self._vector_orbit_items(x):
            if s.contains_vector(v):
                if best is None or v < best[0]:
                    best = (v, elem)
        return best[1] if best else None

    def _vector_orbit_items(self, x: Vec) -> Iterator[tuple[Vec, WeylElement]]:
        seen = {x}
        frontier = [(x, self.identity())]
        yield x, self.identity()
        while frontier:
            new = []
            for v, elem in frontier:
                for gen in self.generators:
                    img = gen.apply(v)
                    if img not in seen:
                        seen.add(img)
                        if len(seen) > self.enumeration_cap:
                            raise EnumerationCapError(self.order, self.enumeration_cap)
                        nxt = (img, elem.then(gen))
                        new.append(nxt)
                        yield nxt
            frontier = new

    def orbit_of_subspace(self, s: Subspace) -> set[Subspace]:
        return {t for t, _ in self.subspace_orbit_items(s)}

    def subspace_orbit_items(self, s: Subspace) -> Iterator[tuple[Subspace, WeylElement]]:
        """Distinct translates w.s with one witness w each, BFS order."""
        start = Subspace(s.ambient_dim, s.basis)
        seen = {start}
        frontier = [(start, self.identity())]
        yield start, self.identity()
        while frontier:
            new = []
            for sub, elem in frontier:
                for gen in self.generators:
                    img = sub.map_by(gen.matrix)
                    if img not in seen:
                        seen.add(img)
                        if len(seen) > self.enumeration_cap:
                            raise EnumerationCapError(self.order, self.enumeration_cap)
                        nxt = (img, elem.then(gen))
                        new.append(nxt)
                        yield nxt
            frontier = new

    def elements(self) -> list[WeylElement]:
        """All group elements by word BFS (each with a reduced word)."""
        if self.order > self.enumeration_cap:
            raise EnumerationCapError(self.order, self.enumeration_cap)
        ident = self.identity()
        seen = {ident: ident}
        frontier = [ident]
        while frontier:
            new = []
            for elem in frontier:
                for gen in self.generators:
                    img = elem.then(gen)
                    if img not in seen:
                        seen[img] = img
                        new.append(img)
            frontier = new
        return list(seen.values())

    # -- walls -------------------------------------------------------------

    def wall_containing_fixed_set(self, u: WeylElement) -> Vec:
        """A root vanishing on the fixed space of u (least lexicographic)."""
        if u.is_identity():
            raise NoWallError("identity element fixes all of the space")
        n = self.ambient_dim
        rows = [
            tuple(u.matrix[i][j] - (1 if i == j else 0) for j in range(n))
            for i in range(n)
        ]
        fixed = Subspace.from_spanning(nullspace(rows, n), n).intersection(
            self.root_span()
        )
        for alpha in sorted(self.system.roots):
            if all(dot(alpha, b) == 0 for b in fixed.basis):
                return alpha
        raise AssertionError("no wall found; contradicts the reflection-group fact")


def _sum_vectors(vectors: list[Vec], dim: int) -> Vec:
    total = (Fraction(0),) * dim
    for v in vectors:
        total = tuple(a + b for a, b in zip(total, v))
    return total


def is_regular_dominant(rs: RootSystem, x: Vec) -> bool:
    return all(dot(a, x) > 0 for a in rs.simple_roots)
