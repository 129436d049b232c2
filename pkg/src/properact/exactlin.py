"""Exact rational linear algebra: vectors, matrices and canonical subspaces.

Everything here works over Q with fractions.Fraction, so equality,
containment and intersection of subspaces are decided exactly, with no
tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


class DimensionMismatchError(ValueError):
    """Raised when vectors or subspaces of different ambient dimensions meet."""


class NotCoveredError(ValueError):
    """Raised by covering_member when no single part contains the subspace.

    Carries a rational certificate vector lying in the subspace but outside
    every part, which proves the union never covered the subspace.
    """

    def __init__(self, certificate: Vec):
        self.certificate = certificate
        super().__init__(
            "no part contains the subspace; certificate vector outside the "
            f"union: {certificate}"
        )


def vec(coords: Iterable) -> Vec:
    """Build an exact vector; accepts ints, Fractions and 'p/q' strings."""
    return tuple(Fraction(c) for c in coords)


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(s, a: Vec) -> Vec:
    s = Fraction(s)
    return tuple(s * x for x in a)


def vec_neg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def is_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def identity_matrix(n: int) -> Mat:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def rref(rows: Sequence[Sequence[Fraction]]) -> Mat:
    """Reduced row echelon form with unit pivots; zero rows dropped."""
    m = [list(Fraction(x) for x in row) for row in rows]
    if not m:
        return ()
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = None
        for r in range(pivot_row, len(m)):
            if m[r][col] != 0:
                pr = r
                break
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        piv = m[pivot_row][col]
        m[pivot_row] = [x / piv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(row) for row in m[:pivot_row])


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows))


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vec]:
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    r = rref(rows)
    pivots = []
    for row in r:
        for j, x in enumerate(row):
            if x != 0:
                pivots.append(j)
                break
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(r, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n in canonical (RREF basis) form.

    Two Subspace values are equal iff they are the same subspace, because
    the reduced row echelon basis of a subspace is unique.
    """

    ambient_dim: int
    basis: Mat

    @staticmethod
    def from_spanning(vectors: Sequence[Vec], ambient_dim: int | None = None) -> "Subspace":
        dims = {len(v) for v in vectors}
        if len(dims) > 1:
            raise DimensionMismatchError(f"mixed ambient dimensions: {sorted(dims)}")
        if dims:
            n = dims.pop()
            if ambient_dim is not None and ambient_dim != n:
                raise DimensionMismatchError(
                    f"vectors have dimension {n}, expected {ambient_dim}"
                )
        else:
            if ambient_dim is None:
                raise DimensionMismatchError("empty span needs an explicit ambient_dim")
            n = ambient_dim
        return Subspace(n, rref(vectors))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, identity_matrix(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def contains_vector(self, v: Vec) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector dimension {len(v)} vs ambient {self.ambient_dim}"
            )
        # reduce v against the echelon basis; membership iff residue is zero
        residue = list(v)
        for row in self.basis:
            pivot = next(j for j, x in enumerate(row) if x != 0)
            if residue[pivot] != 0:
                f = residue[pivot]
                residue = [x - f * y for x, y in zip(residue, row)]
        return all(x == 0 for x in residue)

    def contains(self, inner: "Subspace") -> bool:
        self._check_ambient(inner)
        return all(self.contains_vector(v) for v in inner.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(self.ambient_dim, rref(self.basis + other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        # solve a.U = b.V: nullspace of the n x (k+m) matrix [U^T | -V^T]
        k = len(self.basis)
        cols = []
        for i in range(self.ambient_dim):
            cols.append(
                tuple(row[i] for row in self.basis)
                + tuple(-row[i] for row in other.basis)
            )
        vectors = []
        for sol in nullspace(cols, k + len(other.basis)):
            v = zero_vec(self.ambient_dim)
            for c, row in zip(sol[:k], self.basis):
                if c != 0:
                    v = vec_add(v, vec_scale(c, row))
            vectors.append(v)
        return Subspace.from_spanning(vectors, self.ambient_dim)

    def map_by(self, m: Mat) -> "Subspace":
        return Subspace.from_spanning(
            [mat_vec(m, row) for row in self.basis], self.ambient_dim
        )


def covering_member(b: Subspace, parts: Sequence[Subspace]) -> int:
    """Least index j with b contained in parts[j].

    For subspaces a union can only cover b when one part already contains
    it, so a failed search certifies b was never inside the union; the
    raised error carries an explicit vector of b outside every part.
    """
    for j, part in enumerate(parts):
        if part.contains(b):
            return j
    raise NotCoveredError(_certificate_outside_union(b, parts))


def _certificate_outside_union(b: Subspace, parts: Sequence[Subspace]) -> Vec:
    # Each part meets b in a proper subspace, so a grid of integer
    # combinations of the basis with n+1 values per coefficient cannot be
    # covered by the n parts (counting argument over the grid).
    d = b.dim
    if d == 0:
        raise AssertionError("zero subspace is contained in every part")
    coeff_range = range(len(parts) + 2)
    for coeffs in product(coeff_range, repeat=d):
        if all(c == 0 for c in coeffs):
            continue
        v = zero_vec(b.ambient_dim)
        for c, row in zip(coeffs, b.basis):
            if c:
                v = vec_add(v, vec_scale(c, row))
        if not any(p.contains_vector(v) for p in parts):
            return v
    raise AssertionError("counting bound violated; certificate search failed")
