"""Acceptance gate: one test per criterion, exact arithmetic, zero tolerance.

Each test prints a single PASS/FAIL summary line (visible with ``pytest -s``
or in captured output) and then asserts, so the suite both reports and gates.
"""

import dataclasses
import random
import time
from fractions import Fraction
from math import prod

from tverberg import (
    ColorClasses,
    Transversal,
    Vector,
    brute_force_tverberg,
    build_color_classes,
    canonical_partition,
    check_centered,
    colorful_caratheodory,
    lift,
    min_norm_bruteforce,
    min_norm_point,
    pivot_step,
    point_count,
    radon_certificate_from_partition,
    radon_partition,
    tverberg_partition,
    verify_radon,
    verify_tverberg,
)
from tverberg.cli import EXIT_OK, main

from conftest import rand_points


def _report(number: int, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] acceptance {number}: {detail}")
    assert ok, f"acceptance {number} failed: {detail}"


def _criterion2_instances():
    """The shared instance stream for criteria 2 and 4."""
    rng = random.Random(4242)
    for _ in range(100):
        dim = rng.randint(1, 3)
        r = rng.choice((2, 3))
        yield rand_points(rng, point_count(dim, r), dim, -1000, 1000), dim, r


def test_acceptance_1_radon_totality():
    rng = random.Random(101)
    start = time.perf_counter()
    for case in range(200):
        dim = rng.randint(1, 4)
        points = rand_points(rng, dim + 2, dim, -100, 100)
        if case % 10 == 0:
            i, j = rng.randrange(len(points)), rng.randrange(len(points))
            points[i] = points[j]
        cert = radon_partition(points)
        report = verify_radon(points, cert)
        assert report.valid, report.render()
    elapsed = time.perf_counter() - start
    _report(1, elapsed < 5.0, f"200/200 radon certificates exact-valid in {elapsed:.2f}s (< 5s)")


def test_acceptance_2_tverberg_totality():
    start = time.perf_counter()
    count = 0
    for points, dim, r in _criterion2_instances():
        cert = tverberg_partition(points, r)
        report = verify_tverberg(points, cert)
        assert report.valid, f"d={dim} r={r}: {report.render()}"
        count += 1
    elapsed = time.perf_counter() - start
    _report(
        2, count == 100 and elapsed < 60.0,
        f"{count}/100 tverberg certificates exact-valid in {elapsed:.2f}s (< 60s)",
    )


def test_acceptance_3_oracle_agreement():
    rng = random.Random(303)
    configs = [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)]
    checked = 0
    for case in range(30):
        dim, r = configs[case % len(configs)]
        points = rand_points(rng, point_count(dim, r), dim, -50, 50)
        assert r ** len(points) <= 3**7
        partitions = brute_force_tverberg(points, r)
        assert partitions, f"oracle empty for d={dim} r={r}"
        cert = tverberg_partition(points, r)
        assert canonical_partition(cert.groups) in partitions
        checked += 1
    _report(3, checked == 30, "30/30 solver partitions found by the exhaustive oracle")


def _drive_pivots(classes):
    """Run the public pivot loop, returning (iterations, distance history, witness)."""
    check_centered(classes)
    transversal = Transversal((0,) * len(classes.classes))
    distance = min_norm_point(classes.chosen(transversal.choice)).distance_sq
    history = [distance]
    while distance != 0:
        transversal, distance = pivot_step(classes, transversal)
        history.append(distance)
    witness = min_norm_point(classes.chosen(transversal.choice)).combination
    return transversal, history, witness


def test_acceptance_4_colorful_soundness_and_termination():
    rng = random.Random(404)
    instances = []
    for points, dim, r in _criterion2_instances():
        instances.append(build_color_classes([lift(p) for p in points], r))
    for _ in range(50):
        dim = rng.randint(1, 6)
        sizes = [rng.randint(1, 4) for _ in range(dim + 1)]
        classes = []
        for size in sizes:
            if size == 1:
                classes.append((Vector.zero(dim),))
                continue
            pts = rand_points(rng, size - 1, dim, -9, 9)
            balance = Vector.zero(dim)
            for p in pts:
                balance = balance - p
            classes.append(tuple(pts) + (balance,))
        instances.append(ColorClasses(dim, tuple(classes)))

    for classes in instances:
        bound = prod(len(cls) for cls in classes.classes)
        transversal, history, witness = _drive_pivots(classes)
        assert len(history) - 1 <= bound, "pivot count exceeded transversal count"
        assert all(a > b for a, b in zip(history, history[1:])), "descent not strict"
        assert history[-1] == 0
        chosen = classes.chosen(transversal.choice)
        total = Vector.zero(classes.dim)
        for idx, w in zip(witness.indices, witness.weights):
            total = total + chosen[idx].scale(w)
        assert total.is_zero() and sum(witness.weights, Fraction(0)) == 1
        solved = colorful_caratheodory(classes)
        assert solved.iterations <= bound and solved.witness is not None
    _report(4, True, f"{len(instances)} colorful instances: strict descent, bounded pivots, exact witnesses")


def test_acceptance_5_minnorm_oracle_equivalence():
    rng = random.Random(505)
    for _ in range(200):
        count = rng.randint(1, 8)
        dim = rng.randint(1, 4)
        points = rand_points(rng, count, dim, -20, 20)
        fast = min_norm_point(points)
        slow = min_norm_bruteforce(points)
        assert fast.distance_sq == slow.distance_sq
        assert fast.point == slow.point
        for result in (fast, slow):
            assert all(v.dot(result.point) >= result.distance_sq for v in points)
    _report(5, True, "200/200 instances: solver == oracle, optimality certificates exact")


def test_acceptance_6_deterministic_reproducibility(tmp_path):
    radon_points = tmp_path / "radon.csv"
    radon_points.write_text("3,-1\n0,2\n5,5\n-2,0\n", encoding="utf-8")
    tve_points = tmp_path / "tve.csv"
    tve_points.write_text("0,0\n6,0\n0,6\n6,6\n3,1\n1,3\n4,4\n", encoding="utf-8")

    outputs = []
    for run in (1, 2):
        r_out = tmp_path / f"radon{run}.json"
        t_out = tmp_path / f"tve{run}.json"
        assert main(["radon", str(radon_points), "--out", str(r_out)]) == EXIT_OK
        assert main(["tverberg", str(tve_points), "--r", "3", "--out", str(t_out)]) == EXIT_OK
        outputs.append((r_out.read_bytes(), t_out.read_bytes()))
    _report(6, outputs[0] == outputs[1], "repeat runs produce byte-identical certificate files")


def test_acceptance_7_exactness_guard():
    eps = Fraction(1, 10**6)
    points = [Vector((i,)) for i in (1, 2, 3, 4, 5)]
    cert = tverberg_partition(points, 3)
    assert verify_tverberg(points, cert).valid
    mutations = 0
    for k in range(len(cert.weights)):
        for sign in (1, -1):
            tampered = dataclasses.replace(
                cert,
                weights=tuple(
                    w + sign * eps if i == k else w for i, w in enumerate(cert.weights)
                ),
            )
            assert not verify_tverberg(points, tampered).valid
            mutations += 1

    rpoints = [Vector((0, 0)), Vector((4, 0)), Vector((0, 4)), Vector((1, 1))]
    rcert = radon_partition(rpoints)
    assert verify_radon(rpoints, rcert).valid
    for k in range(len(rcert.weights)):
        for sign in (1, -1):
            tampered = dataclasses.replace(
                rcert,
                weights=tuple(
                    w + sign * eps if i == k else w for i, w in enumerate(rcert.weights)
                ),
            )
            assert not verify_radon(rpoints, tampered).valid
            mutations += 1
    _report(7, True, f"{mutations} single-weight mutations of +/-1e-6 all flip verification to invalid")


def test_acceptance_8_r2_coherence():
    rng = random.Random(808)
    for _ in range(20):
        dim = rng.randint(1, 3)
        points = rand_points(rng, dim + 2, dim, -100, 100)
        cert = tverberg_partition(points, 2)
        radon_cert = radon_certificate_from_partition(cert)
        report = verify_radon(points, radon_cert)
        assert report.valid, report.render()
    _report(8, True, "20/20 r=2 pipeline certificates verify as radon certificates")
