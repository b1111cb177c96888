"""Acceptance sweep: every criterion prints one pass/fail line (run with -s
to see them on success)."""

import itertools
import random
import sys
import time

import pytest

from infgon import arcs, category, oracle, quivers, triangulation, verify
from infgon.disk import INF, DiskModel, MarkedPoint
from infgon.arcs import MINUS, PLUS, TaggedEdge

MODELS_ALL = [DiskModel(n, c) for n in (1, 2, 3) for c in (False, True)]


def report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'pass' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else "")
    print(line, file=sys.stderr)
    assert ok, line


def merge(results) -> tuple[bool, str]:
    ok = all(r.ok() for r in results)
    checked = sum(r.checked for r in results)
    bad = [f for r in results for f in r.failures[:3]]
    return ok, f"{checked} checks" + ("; " + "; ".join(bad) if bad else "")


def test_a1_bijection_and_commutation():
    start = time.monotonic()
    results = [verify.check_phi_bijection(m, 6) for m in MODELS_ALL]
    elapsed = time.monotonic() - start
    ok, detail = merge(results)
    report("A1 bijection + commutation", ok and elapsed < 5.0, f"{detail}, {elapsed:.2f}s")


def test_a2_move_lemma():
    start = time.monotonic()
    results = [verify.check_move_lemma(DiskModel(n), 5) for n in (1, 2, 3)]
    elapsed = time.monotonic() - start
    ok, detail = merge(results)
    report("A2 lemma equivalence", ok and elapsed < 5.0, f"{detail}, {elapsed:.2f}s")


def test_a3_crossing_equals_ext():
    results = [verify.check_crossing_vs_ext(DiskModel(n), 5) for n in (1, 2, 3)]
    ok, detail = merge(results)
    report("A3 crossing <=> Ext (uncompleted)", ok, detail)


def test_a4_oracle_cross_validation():
    results = [
        verify.check_oracle_agreement(DiskModel(n, c), 4)
        for n in (1, 2)
        for c in (False, True)
    ]
    ok, detail = merge(results)
    report("A4 oracle cross-validation", ok, detail)


def test_a5_fan_and_mutation():
    failures = []
    checked = 0
    # fans validate at every window apex
    for model in MODELS_ALL:
        for apex in model.window(2):
            checked += 1
            try:
                triangulation.validate(triangulation.fan(model, apex))
            except Exception as err:  # noqa: BLE001
                failures.append(f"fan({apex}) on {model}: {err}")
    # every member of every uncompleted test triangulation flips uniquely
    for n in (1, 2):
        model = DiskModel(n)
        base = triangulation.fan(model, MarkedPoint(1, 0))
        tris = [base]
        t1, _ = triangulation.mutate(base, TaggedEdge(MarkedPoint(1, 0), MarkedPoint(1, 0), PLUS))
        t2, _ = triangulation.mutate(t1, TaggedEdge(MarkedPoint(1, 0), MarkedPoint(1, 2)))
        tris += [t1, t2]
        for t in tris:
            for e in sorted(t.members_in_window(2), key=repr):
                checked += 1
                try:
                    t_new, star = triangulation.mutate(t, e)
                    t_back, back = triangulation.mutate(t_new, star)
                except triangulation.AmbiguousFlip as err:
                    failures.append(str(err))
                    continue
                except triangulation.NonMutable:
                    failures.append(f"{e} non-mutable in uncompleted model")
                    continue
                if back != e or t_back.members_in_window(4) != t.members_in_window(4):
                    failures.append(f"no involution at {e}")
    # completed limit arcs refuse to mutate
    for n in (2, 3):
        model = DiskModel(n, completed=True)
        t = triangulation.fan(model, MarkedPoint(1, INF))
        for h in range(2, n + 1):
            checked += 1
            limit = TaggedEdge(MarkedPoint(1, INF), MarkedPoint(h, INF))
            try:
                if triangulation.is_mutable(t, limit):
                    failures.append(f"{limit} mutable")
            except triangulation.AmbiguousFlip as err:
                failures.append(str(err))
    report("A5 fan validity + unique involutive mutation", not failures,
           f"{checked} checks" + ("; " + "; ".join(failures[:3]) if failures else ""))


def test_a6_finite_type_counts():
    d5 = oracle.FiniteQuiver(5)
    reps = oracle.enumerate_indecomposables(d5)
    figure = sorted(
        [
            (1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (1, 1, 1, 0, 0), (1, 1, 1, 1, 0),
            (1, 1, 1, 1, 1), (1, 0, 1, 0, 0), (0, 1, 1, 0, 0), (1, 0, 1, 1, 0),
            (0, 1, 1, 1, 0), (0, 0, 1, 1, 0), (1, 1, 2, 1, 0), (1, 1, 2, 1, 1),
            (1, 1, 2, 2, 1), (1, 0, 1, 1, 1), (0, 1, 1, 1, 1), (0, 0, 1, 1, 1),
            (0, 0, 0, 1, 1), (0, 0, 0, 0, 1), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0),
        ]
    )
    ok_d5 = len(reps) == 20 and sorted(r.dims for r in reps) == figure

    d4 = oracle.FiniteQuiver(4)
    start = time.monotonic()
    sets = oracle.enumerate_cluster_tilting(d4)
    elapsed = time.monotonic() - start
    ok_tilting = len(sets) == 50 and all(len(s) == 4 for s in sets) and elapsed < 1.0

    objs = oracle.cluster_objects(d4)
    ok_exchange = True
    for t in sets:
        partners = oracle.exchange_partners(d4, t, sets)
        for drop, completions in partners.items():
            if len(completions) != 1:
                ok_exchange = False
                continue
            other = next(i for i in completions[0] if i not in t)
            if oracle.cluster_ext_dim(objs[drop], objs[other]) != 1:
                ok_exchange = False
    report(
        "A6 finite-type counts",
        ok_d5 and ok_tilting and ok_exchange,
        f"D5: {len(reps)} classes, D4: {len(sets)} tilting sets in {elapsed:.2f}s",
    )


def test_a7_translation_quiver_windows():
    results = []
    for n in (1, 3):
        for completed in (False, True):
            results.append(verify.check_translation_law(DiskModel(n, completed), 4))
    for n in (1, 3):
        results.append(verify.check_moves_match_oracle_arrows(DiskModel(n), 3))
    ok, detail = merge(results)
    report("A7 translation-quiver windows", ok, detail)


def test_a8_exchange_matrix_recursion():
    rng = random.Random(2026)
    failures = 0
    for _ in range(1000):
        size = rng.randint(2, 8)
        b = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                v = rng.randint(-4, 4)
                b[i][j] = v
                b[j][i] = -v
        z = rng.randrange(size)
        try:
            b2 = oracle.mutate_exchange_matrix(b, z)
            oracle.validate_exchange_matrix(b2)
            if oracle.mutate_exchange_matrix(b2, z) != b:
                failures += 1
        except Exception:  # noqa: BLE001
            failures += 1
    report("A8 exchange-matrix recursion", failures == 0, "1000 random matrices")
