"""Acceptance gate: one test per headline claim, one printed verdict
line each.  Run with ``pytest -v -s tests/test_acceptance.py`` to see
the verdict lines as they complete.
"""

import random
from math import factorial

import numpy as np
import pytest

from cubicsd import (
    construct,
    cyclicring,
    dataset,
    equiv,
    feasibility,
    gf2,
    search,
)
from cubicsd.perm import PermGroup, Permutation

EXPECTED_WE = {10: 768, 12: 8592, 14: 57600, 16: 267831}


def verdict(num, name, ok):
    print("CRITERION %2d %-38s %s" % (num, name, "PASS" if ok else "FAIL"))
    assert ok, "criterion %d (%s) failed" % (num, name)


def test_criterion_01_rebuild_264_codes(full_verification):
    rows = full_verification["report"]["entries"]
    ok = len(rows) == 264 and all(
        r.get("self_dual")
        and r.get("min_distance") == 10
        and r.get("weight_enumerator_ok")
        for r in rows
    )
    verdict(1, "264 table codes are [48,24,10] W2", ok)


def test_criterion_02_pairwise_inequivalent(full_verification):
    report = full_verification["report"]
    ok = (
        report["num_codes_built"] == 264
        and report["num_classes"] == 264
        and not report["duplicates"]
    )
    verdict(2, "264 pairwise inequivalent classes", ok)


def test_criterion_03_automorphism_orders(full_verification):
    rows = full_verification["report"]["entries"]
    ok = all(r.get("aut_order") == r.get("aut_order_expected") for r in rows)
    verdict(3, "all 264 automorphism orders match", ok)


def test_criterion_04_type_sieve():
    survivors = {str(t) for t in feasibility.surviving_types(48, 10)}
    expected = {
        "47-(1,1)",
        "23-(2,2)",
        "11-(4,4)",
        "7-(6,6)",
        "5-(8,8)",
        "3-(12,12)",
        "3-(14,6)",
        "3-(16,0)",
    }
    final = [str(t) for t in feasibility.final_survivors(48, 10)]
    verdict(4, "type sieve: 8 bound types, 1 final", survivors == expected and final == ["3-(16,0)"])


def test_criterion_05_congruences():
    ok = (
        704 % 47 == 46
        and 768 % 47 == 16
        and 704 % 23 == 14
        and 768 % 23 == 9
    )
    for p, c, f in ((47, 1, 1), (23, 2, 2)):
        rep = feasibility.congruence_eliminate(construct.AutType(p, c, f))
        ok = ok and rep.status == "eliminated_congruence"
    verdict(5, "weight congruences mod 47 and 23", ok)


def test_criterion_06_base_aut_order():
    report = dataset.autb_order_report()
    ok = (
        report["computed_order"] == 73728
        and factorial(16) % report["computed_order"] == 0
        and report["misprint"]
        and not report["printed_order_possible"]
    )
    # independent recomputation: the conjugate group has the same order
    rnd = random.Random(17)
    img = list(range(16))
    rnd.shuffle(img)
    conj = Permutation(tuple(img))
    gens = [
        conj.inverse() * g * conj for g in dataset.autb_generators()
    ]
    ok = ok and PermGroup(gens, 16).order() == report["computed_order"]
    verdict(6, "base |Aut| = 73728, misprint flagged", ok)


def test_criterion_07_x_matrices():
    ok = True
    for i in range(1, 5):
        gen = list(dataset.x_generator(i))
        ok = ok and cyclicring.is_gf4_hermitian_self_orthogonal(gen)
        ok = ok and len(gen) == 8
        mw = cyclicring.gf4_code_min_weight(gen)
        ok = ok and mw == 6
    verdict(7, "X matrices Hermitian self-dual, d=6", ok)


def test_criterion_08_engine_equals_generic():
    rnd = random.Random(8)
    engines = {i: construct.DecomposedEngine(i) for i in range(1, 5)}
    ok = True
    for _ in range(50):
        i = rnd.randint(1, 4)
        img = list(range(16))
        rnd.shuffle(img)
        tau = Permutation(tuple(img))
        fast = engines[i].weight_enumerator(tau)
        slow = construct.build_code(tau, i).weight_enumerator()
        ok = ok and np.array_equal(fast, slow)
    verdict(8, "decomposed enumerator == generic, 50x", ok)


def test_criterion_09_equivalence_oracle():
    rnd = random.Random(9)
    checked = 0
    ok = True
    while checked < 200:
        n = rnd.randint(4, 8)
        k = rnd.randint(1, min(4, n))
        a = gf2.BinaryCode.from_rows(
            [rnd.randrange(1, 1 << n) for _ in range(k)], n
        )
        if a.k == 0:
            continue
        if rnd.random() < 0.5:
            img = list(range(n))
            rnd.shuffle(img)
            b = a.permuted(img)
        else:
            b = gf2.BinaryCode.from_rows(
                [rnd.randrange(1, 1 << n) for _ in range(k)], n
            )
            if b.k != a.k:
                continue
        bf = equiv.brute_force_isomorphism(a, b)
        ir = equiv.find_isomorphism(a, b)
        ok = ok and (bf is None) == (ir is None)
        if ir is not None:
            ok = ok and a.permuted(list(ir.img)) == b
        checked += 1
    verdict(9, "IR agrees with brute force, 200 pairs", ok)


def test_criterion_10_sampled_search():
    import os

    threads = min(8, os.cpu_count() or 1)
    survivors = []
    for i in range(1, 5):
        state = search.run_search(i, sample=100_000, seed=1, threads=threads)
        survivors.extend(state.survivors)
    report = search.dedup_survivors(survivors, against_tables=True)
    ok = report["all_matched"]
    verdict(
        10,
        "sampled search (%d hits) all in tables" % len(survivors),
        ok,
    )


def test_criterion_11_decomposition_verifier(full_verification):
    ok = True
    for code in full_verification["codes"]:
        report = construct.verify_selfdual_conditions(code)
        ok = ok and report.passed
    # a mutated matrix must be rejected
    code = full_verification["codes"][0]
    mutated = gf2.BinaryCode.from_rows(
        (code.rows[0] ^ 1,) + code.rows[1:], 48
    )
    try:
        rejected = not construct.verify_selfdual_conditions(mutated).passed
    except ValueError:
        rejected = True
    verdict(11, "decomposition verifier 264 pass + reject", ok and rejected)
