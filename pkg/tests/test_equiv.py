import random
from itertools import permutations

import pytest

from cubicsd import equiv, gf2
from cubicsd.gf2 import BinaryCode


def random_code(rnd, n, k):
    return BinaryCode.from_rows(
        [rnd.randrange(1, 1 << n) for _ in range(k)], n
    )


def random_shuffle(rnd, code):
    img = list(range(code.n))
    rnd.shuffle(img)
    return code.permuted(img)


def test_invariant_is_permutation_invariant():
    rnd = random.Random(0)
    for _ in range(60):
        code = random_code(rnd, rnd.randint(4, 10), rnd.randint(1, 4))
        if code.k == 0:
            continue
        assert equiv.invariant(code) == equiv.invariant(
            random_shuffle(rnd, code)
        )


def test_find_isomorphism_on_shuffles():
    rnd = random.Random(1)
    for _ in range(40):
        code = random_code(rnd, rnd.randint(4, 12), rnd.randint(1, 5))
        if code.k == 0:
            continue
        other = random_shuffle(rnd, code)
        iso = equiv.find_isomorphism(code, other)
        assert iso is not None
        assert code.permuted(list(iso.img)) == other


def test_spec_example_pair():
    # the two [4,2] codes {0000,1100,0011,1111} and {0000,1010,0101,1111}
    # are equivalent by swapping coordinates 2 and 3
    a = BinaryCode.from_rows([0b0011, 0b1100], 4)
    b = BinaryCode.from_rows([0b0101, 0b1010], 4)
    iso = equiv.find_isomorphism(a, b)
    assert iso is not None
    assert a.permuted(list(iso.img)) == b


def test_agreement_with_brute_force():
    rnd = random.Random(2)
    agree = 0
    for _ in range(250):
        n = rnd.randint(4, 8)
        k = rnd.randint(1, min(4, n))
        a = random_code(rnd, n, k)
        if a.k == 0:
            continue
        if rnd.random() < 0.5:
            b = random_shuffle(rnd, a)
        else:
            b = random_code(rnd, n, k)
            if b.k != a.k:
                continue
        bf = equiv.brute_force_isomorphism(a, b)
        ir = equiv.find_isomorphism(a, b)
        assert (bf is None) == (ir is None)
        if ir is not None:
            assert a.permuted(list(ir.img)) == b
        agree += 1
    assert agree >= 200


def test_brute_force_limits():
    big = BinaryCode.from_rows([1], 9)
    with pytest.raises(ValueError):
        equiv.brute_force_isomorphism(big, big)


def test_automorphism_group_vs_brute():
    rnd = random.Random(3)
    for _ in range(40):
        n = rnd.randint(4, 7)
        code = random_code(rnd, n, rnd.randint(1, 3))
        if code.k == 0:
            continue
        group = equiv.automorphism_group(code)
        brute = sum(
            1
            for img in permutations(range(n))
            if code.permuted(img) == code
        )
        assert group.order() == brute
        assert all(
            code.permuted(list(g.img)) == code for g in group.generators
        )


def test_automorphism_group_empty_code():
    with pytest.raises(ValueError):
        equiv.automorphism_group(BinaryCode(4, ()))


def test_partition_classes():
    rnd = random.Random(4)
    a = random_code(rnd, 8, 3)
    b = random_code(rnd, 8, 3)
    while equiv.are_equivalent(a, b):
        b = random_code(rnd, 8, 3)
    codes = [a, random_shuffle(rnd, a), b, random_shuffle(rnd, b), a]
    classes = equiv.partition_classes(codes)
    assert sorted(map(sorted, classes)) == [[0, 1, 4], [2, 3]]


def test_partition_classes_order_independent():
    rnd = random.Random(5)
    codes = [random_code(rnd, 7, 2) for _ in range(6)]
    codes += [random_shuffle(rnd, c) for c in codes[:3]]
    classes = equiv.partition_classes(codes)
    # permuting the input list permutes indices but not the grouping
    order = list(range(len(codes)))
    rnd.shuffle(order)
    shuffled_classes = equiv.partition_classes([codes[i] for i in order])
    regrouped = sorted(
        sorted(order[i] for i in members) for members in shuffled_classes
    )
    assert regrouped == sorted(sorted(m) for m in classes)
