"""End-to-end acceptance suite.

Each test covers one acceptance criterion, prints a single pass/fail line,
and enforces its time budget.
"""

import itertools
import random
import time
from fractions import Fraction

from properact.criteria import decide_c2, evaluate_criteria, is_antipodal
from properact.exactlin import (
    NotCoveredError,
    Subspace,
    covering_member,
    vec,
    vec_neg,
)
from properact.homspace import (
    EmbeddingSpec,
    check_strong_regularity,
    derive_embedding,
    normalize_bh_into_b,
)
from properact.realform import (
    lookup_real_form,
    rank_profile,
    validate_against_table1,
)
from properact.rootsys import close_subsystem, root_system
from properact.spaces import example_instances
from properact.so44 import appendix_summary
from properact.weyl import WeylGroup


def _report(num, label, ok, elapsed, budget):
    status = "PASS" if ok and elapsed < budget else "FAIL"
    print(
        f"\nacceptance {num} ({label}): {status} "
        f"[{elapsed:.2f}s of {budget}s budget]"
    )
    assert ok, f"acceptance {num} failed"
    assert elapsed < budget, f"acceptance {num} over budget: {elapsed:.2f}s"


def test_acceptance_1_rank_table_rows():
    started = time.monotonic()
    expected = {}
    for k in (1, 2, 3):
        expected[f"sl({2 * k},R)"] = (k, 2 * k - 1)
        expected[f"sl({2 * k + 1},R)"] = (k, 2 * k)
        expected[f"su*({4 * k})"] = (k, 2 * k - 1)
        expected[f"su*({4 * k + 2})"] = (k, 2 * k)
        expected[f"so({2 * k + 1},{2 * k + 1})"] = (2 * k, 2 * k + 1)
    expected["e6_I"] = (4, 6)
    expected["e6_IV"] = (1, 2)
    ok = True
    for name, (ahyp, real) in expected.items():
        prof = rank_profile(lookup_real_form(name))
        if (prof.ahyp_rank, prof.real_rank) != (ahyp, real):
            ok = False
    _report(1, "rank table rows", ok, time.monotonic() - started, 10)


def test_acceptance_2_rank_table_completeness():
    started = time.monotonic()
    report = validate_against_table1()
    ok = report.ok and report.checked > 60
    _report(2, "rank table completeness", ok, time.monotonic() - started, 60)


def test_acceptance_3_sl3_mod_sl2():
    started = time.monotonic()
    spec = EmbeddingSpec(
        ambient=lookup_real_form("sl(3,R)"),
        subsystem_generators=(vec([1, -1, 0]),),
    )
    emb = derive_embedding(spec)
    group = WeylGroup(emb.ambient_system)
    _, emb = normalize_bh_into_b(emb, group)
    report = evaluate_criteria(emb, spec.ambient, group)
    b = group.minus_w0_fixed_space()
    witness_ok = (
        report.benoist_witness is not None
        and emb.a_h.map_by(report.benoist_witness.matrix).contains(b)
    )
    ok = report.c1 and not report.c2 and witness_ok and report.c3 is False
    _report(3, "SL(3,R)/SL(2,R)", ok, time.monotonic() - started, 1)


def test_acceptance_4_so44_appendix():
    started = time.monotonic()
    summary = appendix_summary()
    ok = (
        summary["strongly_regular"]
        and summary["table_ok"]
        and summary["ranks"] == {"real_g": 4, "ahyp_g": 4, "real_h": 3, "ahyp_h": 1}
        and summary["c2"] is True
        and summary["sl2_refuted"]
        and summary["c3"] is False
    )
    _report(4, "SO(4,4)/U appendix suite", ok, time.monotonic() - started, 5)


def _closed_symmetric_subsystems_up_to_conjugacy(rs, group):
    positives = sorted(rs.positive_roots())
    distinct = set()
    for mask in range(2 ** len(positives)):
        seed = set()
        for i, alpha in enumerate(positives):
            if mask >> i & 1:
                seed.add(alpha)
                seed.add(vec_neg(alpha))
        distinct.add(close_subsystem(rs, frozenset(seed)))
    elements = group.elements()
    reps, canon_seen = [], set()
    for members in sorted(distinct, key=lambda s: sorted(s)):
        canon = min(
            tuple(sorted(w.apply(m) for m in members)) for w in elements
        )
        if canon not in canon_seen:
            canon_seen.add(canon)
            reps.append(members)
    return reps


def test_acceptance_5_main_theorem_oracle_equivalence():
    started = time.monotonic()
    ambients = [
        ("sl(4,R)", "A", 3),
        ("so(3,4)", "B", 3),
        ("sp(3,R)", "C", 3),
        ("so(4,4)", "D", 4),
    ]
    ok = True
    checked = 0
    for name, family, rank in ambients:
        g = lookup_real_form(name)
        rs = root_system(family, rank)
        group = WeylGroup(rs)
        g_ahyp = rank_profile(g).ahyp_rank
        for members in _closed_symmetric_subsystems_up_to_conjugacy(rs, group):
            spec = EmbeddingSpec(ambient=g, literal_members=members)
            emb = derive_embedding(spec)
            if not emb.h_profile.inner:
                continue
            _, emb = normalize_bh_into_b(emb, group)
            benoist, _, _ = decide_c2(emb, group, force_bruteforce=True)
            if benoist != (g_ahyp > emb.h_profile.ahyp_rank):
                ok = False
            checked += 1
    ok = ok and checked >= 20
    _report(
        5,
        f"main-theorem oracle equivalence ({checked} subsystems)",
        ok,
        time.monotonic() - started,
        300,
    )


def test_acceptance_6_reflection_group_axioms():
    started = time.monotonic()
    expected_orders = {
        ("A", 2): 6,
        ("B", 2): 8,
        ("G", 2): 12,
        ("A", 3): 24,
        ("B", 3): 48,
        ("D", 4): 192,
        ("F", 4): 1152,
    }
    ok = True
    for (family, rank), order in expected_orders.items():
        rs = root_system(family, rank)
        group = WeylGroup(rs)
        if len(group.elements()) != order:
            ok = False
        w0 = group.longest_element()
        if not w0.then(w0).is_identity():
            ok = False
        simples = set(rs.simple_roots)
        if {vec_neg(w0.apply(a)) for a in simples} != simples:
            ok = False
        probe = vec(range(rs.ambient_dim, 0, -1))
        for x in (probe, rs.simple_roots[0]):
            dom, _ = group.dominant_representative(x)
            if any(
                group.dominant_representative(y)[0] != dom
                for y in group.orbit_of_vector(x)
            ):
                ok = False
    _report(6, "reflection-group axioms", ok, time.monotonic() - started, 120)


def test_acceptance_7_antipodality_oracle():
    started = time.monotonic()
    systems = [
        ("A", 1), ("A", 2), ("A", 3),
        ("B", 2), ("B", 3),
        ("C", 2), ("C", 3),
        ("BC", 1), ("BC", 2), ("BC", 3),
        ("G", 2),
    ]
    # grid sizes chosen so every system sees at least 100 vectors
    values_by_dim = {
        1: [Fraction(k, 2) for k in range(-60, 61)],
        2: [Fraction(k, 2) for k in range(-5, 6)],
        3: [Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(3, 2)],
        4: [Fraction(-2), Fraction(0), Fraction(1), Fraction(3, 2)],
    }
    ok = True
    for family, rank in systems:
        rs = root_system(family, rank)
        group = WeylGroup(rs)
        values = values_by_dim[rs.ambient_dim]
        count = 0
        for coords in itertools.product(values, repeat=rs.ambient_dim):
            x = tuple(coords)
            oracle = vec_neg(x) in group.orbit_of_vector(x)
            if is_antipodal(x, group) != oracle:
                ok = False
            count += 1
            if count >= 120:
                break
        assert count >= 100
    _report(7, "antipodality vs orbit oracle", ok, time.monotonic() - started, 60)


def _random_subspace(rng, dim, ambient):
    vectors = [
        tuple(Fraction(rng.randint(-3, 3)) for _ in range(ambient))
        for _ in range(dim)
    ]
    s = Subspace.from_spanning(vectors, ambient)
    return s


def test_acceptance_8_subspace_covering():
    started = time.monotonic()
    rng = random.Random(20240817)
    ok = True
    positives = negatives = 0
    while positives < 200 or negatives < 200:
        ambient = rng.randint(4, 6)
        parts = [
            _random_subspace(rng, rng.randint(1, ambient - 1), ambient)
            for _ in range(rng.randint(2, 5))
        ]
        if positives < 200 and rng.random() < 0.5:
            host = rng.choice(parts)
            if host.dim == 0:
                continue
            k = rng.randint(1, host.dim)
            combos = []
            for _ in range(k):
                coeffs = [Fraction(rng.randint(-2, 2)) for _ in host.basis]
                combos.append(
                    tuple(
                        sum(
                            (c * bv[i] for c, bv in zip(coeffs, host.basis)),
                            Fraction(0),
                        )
                        for i in range(ambient)
                    )
                )
            b = Subspace.from_spanning(combos, ambient)
            idx = covering_member(b, parts)
            if not parts[idx].contains(b):
                ok = False
            positives += 1
        else:
            b = _random_subspace(rng, rng.randint(1, 3), ambient)
            if b.dim == 0 or any(p.contains(b) for p in parts):
                continue
            try:
                covering_member(b, parts)
                ok = False
            except NotCoveredError as exc:
                cert = exc.certificate
                if not b.contains_vector(cert):
                    ok = False
                if any(p.contains_vector(cert) for p in parts):
                    ok = False
            negatives += 1
    _report(8, "subspace covering behavior", ok, time.monotonic() - started, 60)


def test_acceptance_9_catalog_families():
    started = time.monotonic()
    instances = example_instances(per_family=3)
    ok = len(instances) >= 40
    for inst in instances:
        if not check_strong_regularity(inst.spec):
            ok = False
    _report(9, "catalog family verification", ok, time.monotonic() - started, 60)
