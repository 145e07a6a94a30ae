import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from designiso import (Params, boolean_sqs, brute_force_iso, complete_design, fano, pasch_switch, scramble,
                       sts, validate)
from designiso import constructions
from designiso.constructions import SplitMix64, random_permutation


def test_fano_blocks():
    F = fano()
    assert F.params == Params(2, 7, 3, 1)
    assert F.blocks == ((0, 1, 3), (0, 2, 6), (0, 4, 5), (1, 2, 4), (1, 5, 6), (2, 3, 5), (3, 4, 6))
    assert validate(F).ok


@pytest.mark.parametrize("d", [3, 4, 5])
def test_boolean_sqs(d):
    D = boolean_sqs(d)
    v = 2 ** d
    assert D.params == Params(3, v, 4, 1)
    assert D.b == v * (v - 1) * (v - 2) // 24
    assert validate(D).ok
    # blocks are exactly the zero-sum 4-sets of GF(2)^d
    assert all(B[0] ^ B[1] ^ B[2] ^ B[3] == 0 for B in D.blocks)


def test_boolean_sqs_small_d():
    with pytest.raises(ValueError):
        boolean_sqs(2)


@pytest.mark.parametrize("v", [7, 9, 13, 15, 19, 21, 25, 27, 31, 33])
def test_sts_valid(v):
    D = sts(v)
    assert D.params == Params(2, v, 3, 1)
    assert D.b == v * (v - 1) // 6
    assert validate(D).ok


@pytest.mark.parametrize("v", [3, 5, 8, 11, 14])
def test_sts_rejects(v):
    with pytest.raises(ValueError):
        sts(v)


def test_sts7_is_fano_up_to_iso():
    assert brute_force_iso(sts(7), fano()) is not None


def test_complete_design():
    D = complete_design(6, 3, 2)
    assert D.params == Params(2, 6, 3, 4)
    assert D.b == 20 and validate(D).ok
    with pytest.raises(ValueError):
        complete_design(40, 20, 2)


def test_splitmix64_reference_vector():
    rng = SplitMix64(1234567)
    got = [rng.next() for _ in range(5)]
    assert got == [6457827717110365317, 3203168211198807973, 9817491932198370423,
                   4593380528125082431, 16408922859458223821]


def test_random_permutation_pinned():
    assert random_permutation(10, 7) == random_permutation(10, 7)
    assert random_permutation(10, 7) != random_permutation(10, 8)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 60), st.integers(0, 2 ** 64 - 1))
def test_random_permutation_is_permutation(n, seed):
    assert sorted(random_permutation(n, seed)) == list(range(n))


def test_below_is_roughly_uniform():
    rng = SplitMix64(99)
    counts = [0] * 6
    for _ in range(6000):
        counts[rng.below(6)] += 1
    assert all(850 < c < 1150 for c in counts)


@pytest.mark.parametrize("seed", [0, 1, 42, 2 ** 63])
def test_scramble_preserves_validity(designs, seed):
    for D in designs.values():
        S = scramble(D, seed)
        assert S.params == D.params and validate(S).ok


def is_pasch(quad):
    pts = set().union(*map(set, quad))
    if len(pts) != 6:
        return False
    degrees = [sum(x in B for B in quad) for x in pts]
    return all(d == 2 for d in degrees) and all(len(set(a) & set(b)) == 1
                                                for a, b in itertools.combinations(quad, 2))


def test_pasch_configurations_match_direct_search():
    D = sts(15)
    found = set(constructions._pasch_configurations(D))
    direct = {q for q in itertools.combinations(range(D.b), 4) if is_pasch([D.blocks[i] for i in q])}
    assert found == direct and found


def test_pasch_switch_outcomes(designs):
    assert pasch_switch(designs["sts9"]) is None  # AG(2,3) has no Pasch
    for name in ("fano", "sts13", "sts15"):
        D = designs[name]
        E = pasch_switch(D)
        assert E is not None and validate(E).ok
        assert len(set(D.blocks) ^ set(E.blocks)) == 8


def test_pasch_switch_breaks_iso_for_sts15():
    D = sts(15)
    assert brute_force_iso(D, pasch_switch(D)) is None


def test_pasch_switch_needs_sts():
    with pytest.raises(ValueError):
        pasch_switch(boolean_sqs(3))
