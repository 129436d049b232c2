"""Built-in encodings of the classified strongly regular space families.

Each family maps a parameter tuple to an embedding spec: the ambient real
form plus root-subsystem generators for h inside the ambient restricted
system.  These power the catalog-verify suite, which checks strong
regularity and the expected subsystem type at small parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .exactlin import Vec, vec
from .homspace import EmbeddingSpec
from .realform import lookup_real_form
from .rootsys import RootSystemType

HALF = Fraction(1, 2)


def _chain(k: int, dim: int) -> list[Vec]:
    """Generators e_i - e_{i+1}, i = 1..k."""
    out = []
    for i in range(k):
        out.append(
            tuple(
                Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0)
                for j in range(dim)
            )
        )
    return out


def _unit(i: int, dim: int, scale: int = 1) -> Vec:
    return tuple(Fraction(scale) if j == i else Fraction(0) for j in range(dim))


def _type_a(k: int) -> list[RootSystemType]:
    return [RootSystemType("A", k)] if k >= 1 else []


def _type_b(k: int) -> list[RootSystemType]:
    if k >= 2:
        return [RootSystemType("B", k)]
    return [RootSystemType("A", 1)] if k == 1 else []


def _type_c(k: int) -> list[RootSystemType]:
    if k >= 2:
        return [RootSystemType("C", k)]
    return [RootSystemType("A", 1)] if k == 1 else []


def _type_d(k: int) -> list[RootSystemType]:
    if k >= 4:
        return [RootSystemType("D", k)]
    if k == 3:
        return [RootSystemType("A", 3)]
    if k == 2:
        return [RootSystemType("A", 1), RootSystemType("A", 1)]
    return []


def _type_bc(k: int) -> list[RootSystemType]:
    return [RootSystemType("BC", k)] if k >= 1 else []


@dataclass(frozen=True)
class SpaceInstance:
    label: str
    spec: EmbeddingSpec
    expected_components: tuple[RootSystemType, ...]


def _instance(label, ambient, gens, expected) -> SpaceInstance:
    return SpaceInstance(
        label,
        EmbeddingSpec(
            ambient=lookup_real_form(ambient),
            subsystem_generators=tuple(gens),
        ),
        tuple(sorted(expected, key=lambda t: (t.family, t.rank))),
    )


# families of Example 2, keyed by their quotient shape; each generator takes
# the family parameters and yields one SpaceInstance

def _sl_R(a: int, b: int) -> SpaceInstance:
    dim = b  # A_{b-1} lives in Q^b
    return _instance(
        f"SL({b},R)/SL({a},R)", f"sl({b},R)", _chain(a - 1, dim), _type_a(a - 1)
    )


def _sp_R(a: int, b: int) -> SpaceInstance:
    gens = _chain(a - 1, b) + [_unit(a - 1, b, 2)]
    return _instance(f"Sp({b},R)/Sp({a},R)", f"sp({b},R)", gens, _type_c(a))


def _so_bb_so_aa(a: int, b: int) -> SpaceInstance:
    gens = _chain(a - 1, b)
    gens.append(
        tuple(
            Fraction(1) if j in (a - 2, a - 1) else Fraction(0) for j in range(b)
        )
    )
    return _instance(f"SO({b},{b})/SO({a},{a})", f"so({b},{b})", gens, _type_d(a))


def _so_odd_so_odd(a: int, b: int) -> SpaceInstance:
    gens = _chain(a - 1, b) + [_unit(a - 1, b)]
    return _instance(
        f"SO({b},{b + 1})/SO({a},{a + 1})", f"so({b},{b + 1})", gens, _type_b(a)
    )


def _so_bb_sl_a(a: int, b: int) -> SpaceInstance:
    return _instance(
        f"SO({b},{b})/SL({a},R)", f"so({b},{b})", _chain(a - 1, b), _type_a(a - 1)
    )


def _so_odd_sl_a(a: int, b: int) -> SpaceInstance:
    return _instance(
        f"SO({b},{b + 1})/SL({a},R)", f"so({b},{b + 1})", _chain(a - 1, b), _type_a(a - 1)
    )


def _so_ab_sl_c(c: int, a: int, b: int) -> SpaceInstance:
    return _instance(
        f"SO({a},{b})/SL({c},R)", f"so({a},{b})", _chain(c - 1, a), _type_a(c - 1)
    )


def _so_even_so_even(c: int, a: int, b: int) -> SpaceInstance:
    gens = _chain(2 * c - 1, 2 * a) + [_unit(2 * c - 1, 2 * a)]
    return _instance(
        f"SO({2 * a},{2 * b})/SO({2 * c},{2 * b})",
        f"so({2 * a},{2 * b})",
        gens,
        _type_b(2 * c),
    )


def _so_even_odd(c: int, a: int, b: int) -> SpaceInstance:
    gens = _chain(2 * c - 1, 2 * a) + [_unit(2 * c - 1, 2 * a)]
    return _instance(
        f"SO({2 * a},{2 * b + 1})/SO({2 * c},{2 * b + 1})",
        f"so({2 * a},{2 * b + 1})",
        gens,
        _type_b(2 * c),
    )


def _su_ab_su_cb(c: int, a: int, b: int) -> SpaceInstance:
    gens = _chain(c - 1, a) + [_unit(c - 1, a)]
    return _instance(
        f"SU({a},{b})/SU({c},{b})", f"su({a},{b})", gens, _type_bc(c)
    )


def _su_ab_sl_cC(c: int, a: int, b: int) -> SpaceInstance:
    return _instance(
        f"SU({a},{b})/SL({c},C)", f"su({a},{b})", _chain(c - 1, a), _type_a(c - 1)
    )


def _sustar(a: int, b: int) -> SpaceInstance:
    dim = b + 1  # A_b in Q^{b+1}
    return _instance(
        f"SU*({2 * b + 2})/SU*({2 * a + 2})",
        f"su*({2 * b + 2})",
        _chain(a, dim),
        _type_a(a),
    )


def _sp_ab_sustar(c: int, a: int, b: int) -> SpaceInstance:
    return _instance(
        f"Sp({a},{b})/SU*({2 * c + 2})", f"sp({a},{b})", _chain(c, a), _type_a(c)
    )


def _c3_in_f4(dim: int = 4) -> list[Vec]:
    return [
        (HALF, -HALF, -HALF, -HALF),
        _unit(3, dim),
        tuple(
            Fraction(1) if j == 2 else Fraction(-1) if j == 3 else Fraction(0)
            for j in range(dim)
        ),
    ]


def _fixed_instances() -> list[SpaceInstance]:
    e1 = [Fraction(1), Fraction(0)]
    d6_in_e8 = _chain(5, 8)
    d6_in_e8.append(
        tuple(Fraction(1) if j in (4, 5) else Fraction(0) for j in range(8))
    )
    return [
        _instance(
            "E8(VIII)/SO(6,6)", "e8_VIII", d6_in_e8, [RootSystemType("D", 6)]
        ),
        _instance("E8(IX)/E7(VII)", "e8_IX", _c3_in_f4(), [RootSystemType("C", 3)]),
        _instance("E6(III)/SU(1,6)", "e6_III", [tuple(e1)], _type_bc(1)),
        _instance("F4(I)/Sp(3,R)", "f4_I", _c3_in_f4(), [RootSystemType("C", 3)]),
        _instance(
            "F4(I)/SL(3,R)",
            "f4_I",
            [
                tuple(vec([0, 1, -1, 0])),
                tuple(vec([0, 0, 1, -1])),
            ],
            _type_a(2),
        ),
    ]


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    """(a, b) with 0 < a < b, smallest first."""
    total = 3
    found = 0
    while found < n:
        for a in range(1, (total + 1) // 2):
            b = total - a
            yield a, b
            found += 1
            if found == n:
                return
        total += 1


def _triples(n: int) -> Iterator[tuple[int, int, int]]:
    """(c, a, b) with 0 < c < a < b, smallest first."""
    total = 6
    found = 0
    while found < n:
        for c in range(1, total):
            for a in range(c + 1, total):
                b = total - c - a
                if b > a:
                    yield c, a, b
                    found += 1
                    if found == n:
                        return
        total += 1


_PAIR_FAMILIES: list[tuple[Callable, int]] = [
    (_sl_R, 2),       # SL(a,R) needs a >= 2 for a nonempty subsystem
    (_sp_R, 2),
    (_so_bb_so_aa, 2),
    (_so_odd_so_odd, 2),
    (_so_bb_sl_a, 2),
    (_so_odd_sl_a, 2),
    (_sustar, 1),
]

_TRIPLE_FAMILIES: list[Callable] = [
    _so_ab_sl_c,
    _so_even_so_even,
    _so_even_odd,
    _su_ab_su_cb,
    _su_ab_sl_cC,
    _sp_ab_sustar,
]


def example_instances(per_family: int = 3) -> list[SpaceInstance]:
    """The classified families at their smallest valid parameters."""
    out: list[SpaceInstance] = []
    for builder, min_a in _PAIR_FAMILIES:
        picked = 0
        for a, b in _pairs(per_family + 8):
            if a < min_a or (builder is _so_bb_so_aa and b < 3):
                continue
            out.append(builder(a, b))
            picked += 1
            if picked == per_family:
                break
    for builder in _TRIPLE_FAMILIES:
        picked = 0
        for c, a, b in _triples(per_family + 8):
            out.append(builder(c, a, b))
            picked += 1
            if picked == per_family:
                break
    out.extend(_fixed_instances())
    return out
