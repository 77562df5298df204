"""Acceptance suite: one test per criterion, exact tolerances, timed bounds.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion.
"""

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from math import comb, factorial

from lgperiod import (
    CurveClassMonoid,
    LaurentPoly,
    MoriElement,
    MutationData,
    NotMutable,
    PotentialComponent,
    PotentialSpec,
    SPartition,
    check_grading,
    check_period_invariance,
    classical_period,
    classical_period_bruteforce,
    enumerate_s_partitions,
    group_classes_by_partition,
    multinomial,
    mutate,
    naive_count_p1,
    p_from_naive,
    parse_polynomial,
    period_match,
    poly_to_text,
    reference_potential,
    table_from_groups,
)
from lgperiod.db import PeriodRecord, append_record, derive_sequence, search_records

from helpers import random_laurent, random_mori, random_monoid, random_unimodular


@contextmanager
def criterion(number, description):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[criterion {number}] FAIL - {description}")
        raise
    elapsed = time.perf_counter() - started
    print(f"[criterion {number}] PASS - {description} ({elapsed:.2f}s)")


def test_criterion_1_p2_mirror_identity():
    with criterion(1, "P2 mirror identity to degree 15, three-way exact"):
        started = time.perf_counter()
        potential = parse_polynomial("x + y + x^-1*y^-1")
        pruned = classical_period(potential, 15)
        elapsed = time.perf_counter() - started
        oracle = classical_period_bruteforce(potential, 15)
        assert list(pruned) == list(oracle)
        expected = {3: 6, 6: 90, 9: 1680, 12: 34650, 15: 756756}
        for d in range(16):
            if d % 3 == 0 and d > 0:
                k = d // 3
                formula = factorial(3 * k) // factorial(k) ** 3
                assert pruned[d] == expected[d] == formula
            elif d > 0:
                assert pruned[d] == 0
        assert elapsed < 5.0, f"took {elapsed:.2f}s, budget 5s"


def test_criterion_2_p1_naive_counts():
    with criterion(2, "P1 entries equal naive counts C(2k,k) for k <= 20"):
        started = time.perf_counter()
        sequence = classical_period(reference_potential("P1"), 40)
        for k in range(21):
            assert sequence[2 * k] == naive_count_p1(k) == comb(2 * k, k)
            if k > 0:
                assert sequence[2 * k - 1] == 0
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0, f"took {elapsed:.2f}s, budget 1s"


def test_criterion_3_p1xp1_and_p3():
    with criterion(3, "P1xP1 and P3 match brute force to degree 12, positive entries"):
        for name in ("P1xP1", "P3"):
            potential = reference_potential(name)
            fast = classical_period(potential, 12)
            slow = classical_period_bruteforce(potential, 12)
            assert list(fast) == list(slow)
            for entry in fast:
                assert isinstance(entry, int) and entry >= 0
            assert any(entry > 0 for entry in list(fast)[1:])


def test_criterion_4_assembly_identities():
    with criterion(4, "assembly/regrouping identities and multinomial sums"):
        rng = random.Random(41)
        tables_checked = 0
        while tables_checked < 100:
            total = rng.randint(1, 8)
            size = rng.randint(1, 4)
            monoid = random_monoid(rng, max_rank=2, max_weight=3)
            pool = monoid.classes_of_degree(total)
            if not pool:
                continue
            rng.shuffle(pool)
            chosen = pool[: rng.randint(1, min(4, len(pool)))]
            profiled = []
            for cls in chosen:
                profile = [0] * size
                for _ in range(cls.degree):
                    profile[rng.randrange(size)] += 1
                profiled.append((cls, tuple(profile)))
            counts = {cls: rng.randint(0, 9) for cls, _ in profiled}
            groups = group_classes_by_partition(profiled)
            table = table_from_groups(groups, counts, total, size)
            from lgperiod import assemble_period_coefficient

            assembled = assemble_period_coefficient(table, total)
            regrouped = MoriElement(monoid)
            for cls, profile in profiled:
                regrouped = regrouped + monoid.z(
                    cls, p_from_naive(SPartition(profile), counts[cls])
                )
            assert assembled == regrouped
            tables_checked += 1
        for d in range(13):
            for s in range(1, 6):
                total = sum(multinomial(d, p) for p in enumerate_s_partitions(d, s))
                assert total == s**d


def test_criterion_5_pruned_vs_bruteforce():
    with criterion(5, "pruned vs brute-force agreement on 50 random potentials"):
        rng = random.Random(5)
        started = time.perf_counter()
        for _ in range(50):
            rank = rng.randint(1, 3)
            potential = random_laurent(
                rng, rank, max_terms=6, exp_bound=3, fractions=True
            )
            fast = classical_period(potential, 8)
            slow = classical_period_bruteforce(potential, 8)
            assert list(fast) == list(slow)
        elapsed = time.perf_counter() - started
        assert elapsed < 60.0, f"took {elapsed:.2f}s, budget 60s"


def test_criterion_6_mutation_invariance():
    with criterion(6, "mutation: mutable pair, identity, involution, NotMutable"):
        potential = parse_polynomial("y + x*y + y^-1", rank=2)
        factor = parse_polynomial("1 + x", rank=2)
        outcome = mutate(potential, MutationData((0, -1), factor))
        assert isinstance(outcome, LaurentPoly)
        assert check_period_invariance(potential, outcome, 10).equal

        one = LaurentPoly.one(2)
        for direction in ((0, 1), (1, 0), (1, -1)):
            assert mutate(potential, MutationData(direction, one)) == potential

        back = mutate(outcome, MutationData((0, 1), factor))
        assert back == potential

        blocked = mutate(
            parse_polynomial("x + y + x^-1*y^-1"), MutationData((0, 1), factor)
        )
        assert isinstance(blocked, NotMutable) and blocked.level == -1


def test_criterion_7_invariance_suites():
    with criterion(7, "GL_n(Z) invariance, specialization homomorphism, grading"):
        rng = random.Random(7)
        for _ in range(20):
            rank = rng.randint(1, 3)
            potential = random_laurent(rng, rank, max_terms=4, exp_bound=2, nonzero=True)
            matrix = random_unimodular(rng, rank)
            image = potential.substitute_unimodular(matrix)
            degree = rng.randint(0, 6)
            assert list(classical_period(potential, degree)) == list(
                classical_period(image, degree)
            )

        for _ in range(30):
            monoid = random_monoid(rng)
            a = random_mori(rng, monoid, fractions=True)
            b = random_mori(rng, monoid, fractions=True)
            assert (a * b).specialize() == a.specialize() * b.specialize()
            assert (a + b).specialize() == a.specialize() + b.specialize()

        monoid = CurveClassMonoid((1,))
        tag = monoid.generator(0)
        spec = PotentialSpec(
            [
                PotentialComponent(label, parse_polynomial(text, rank=2), class_tag=tag)
                for label, text in (
                    ("D1", "x"), ("D2", "y"), ("D3", "x^-1*y^-1"),
                )
            ]
        )
        assert check_grading(spec).ok
        graded = classical_period(spec.mori_potential(), 9)
        for d, entry in enumerate(graded):
            for cls, _ in entry.terms():
                assert cls.degree >= d
        assert (
            period_match(graded, classical_period(spec.total_chart(), 9), 9) is None
        )


def test_criterion_8_cli_round_trips(tmp_path):
    with criterion(8, "parse/print round-trips, db self-retrieval, byte-stable CLI"):
        rng = random.Random(8)
        for _ in range(100):
            rank = rng.randint(1, 8)
            poly = random_laurent(rng, rank, max_terms=5, exp_bound=4, fractions=True)
            assert parse_polynomial(poly_to_text(poly), rank=rank) == poly

        database = tmp_path / "db.jsonl"
        record = PeriodRecord(
            name="p2", potential="x + y + x^-1*y^-1",
            sequence=derive_sequence("x + y + x^-1*y^-1", 9),
        )
        append_record(database, record)
        matches = search_records(database, record.sequence, 9)
        assert [m.name for m in matches] == ["p2"]

        def run_twice(*argv):
            outs = []
            for _ in range(2):
                proc = subprocess.run(
                    [sys.executable, "-m", "lgperiod.cli", *argv],
                    capture_output=True,
                    check=True,
                )
                outs.append(proc.stdout)
            return outs

        first, second = run_twice("period", "x + y + x^-1*y^-1", "--degree", "9")
        assert first == second
        first, second = run_twice("verify", "P3", "--degree", "12", "--json")
        assert first == second
        assert json.loads(first)["match"] is True
