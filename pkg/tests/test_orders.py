import itertools

import pytest

from crystalkit import orders, polytopes
from crystalkit.accept import a4_witness_pair, compositions
from crystalkit.binfty import CrystalElt, b_rs, enumerate_weight, unit
from crystalkit.orders import (INCONCLUSIVE, PROVED, REFUTED, Verdict,
                               apply_move, leq_i, leq_lex, leq_pol_via_words,
                               leq_stab_check, leq_str_check, moves)
from crystalkit.rootsys import cartan_data

WORD_I = (2, 4, 1, 3, 5) * 3


def pools(label, max_height, min_size=1):
    cartan = cartan_data(label)
    for total in range(1, max_height + 1):
        for nu in compositions(total, cartan.rank):
            pool = enumerate_weight(cartan, nu)
            if len(pool) >= min_size:
                yield pool


# ------------------------------------------------------------- leq_lex / leq_i

def test_leq_lex():
    assert leq_lex((0, 1), (1, 0))
    assert leq_lex((1, 0, 5), (1, 1, 0))
    assert leq_lex((2, 2), (2, 2))
    with pytest.raises(ValueError):
        leq_lex((1,), (1, 2))


def test_leq_i_a2_example(a2):
    assert leq_i(a2, (1, 2, 1), (0, 1, 0), (1, 0, 1))
    assert not leq_i(a2, (1, 2, 1), (1, 0, 1), (0, 1, 0))
    assert leq_i(a2, (1, 2, 1), (1, 0, 1), (1, 0, 1))


def test_leq_i_needs_equal_weight(a2):
    assert not leq_i(a2, (1, 2, 1), (1, 0, 0), (0, 0, 1))


def test_leq_i_case_I_pairs(a5):
    for p in (1, 2):
        n = b_rs("I", 0, p).datum(WORD_I).coords
        m = b_rs("I", 2, p - 1).datum(WORD_I).coords
        assert leq_i(a5, WORD_I, n, m)
        assert not leq_i(a5, WORD_I, m, n)


def test_leq_i_partial_order_on_pools(a2, a3):
    for cartan, max_height in ((a2, 5), (a3, 4)):
        word = cartan.reference_word
        for pool in pools(cartan.label, max_height, min_size=2):
            data = [b.coords for b in pool]
            for n in data:
                assert leq_i(cartan, word, n, n)
            for n, m in itertools.permutations(data, 2):
                if leq_i(cartan, word, n, m) and leq_i(cartan, word, m, n):
                    assert n == m
            for n, m, p in itertools.permutations(data, 3):
                if leq_i(cartan, word, n, m) and leq_i(cartan, word, m, p):
                    assert leq_i(cartan, word, n, p)


def test_leq_pol_via_words_matches_containment(a3):
    for pool in pools("A3", 5, min_size=2):
        for b1, b2 in itertools.product(pool, repeat=2):
            assert leq_pol_via_words(b1, b2) == polytopes.leq_pol(b1, b2)


# ------------------------------------------------------------- moves

def test_moves_on_diagonal_unit(a2):
    out = moves((unit(a2), unit(a2)))
    kinds = sorted(m for m, _ in out)
    assert kinds == [("e", 1), ("e", 2), ("sigma",)]


def test_moves_strict_phi_pair_only_sigma():
    b1, b2 = a4_witness_pair()
    out = moves((b1, b2))
    assert [m for m, _ in out] == [("sigma",)]


def test_moves_equal_positive_phi(a2):
    b = CrystalElt(a2, (0, 1, 0))
    out = dict(moves((b, b)))
    assert ("e", 2) in out and ("f", 2) in out and ("f", 1) not in out


def test_moves_weight_mismatch(a2):
    with pytest.raises(ValueError):
        moves((unit(a2), CrystalElt(a2, (1, 0, 0))))


def test_apply_move_validates(a2):
    b = CrystalElt(a2, (0, 1, 0))
    with pytest.raises(ValueError):
        apply_move((b, b.sigma()), ("e", 2))  # phi_2 differs: 1 vs 0
    with pytest.raises(ValueError):
        apply_move((unit(a2), unit(a2)), ("f", 1))


# ------------------------------------------------------------- string order

def test_diagonal_is_proved(a3):
    b = CrystalElt(a3, (1, 0, 2, 0, 0, 1))
    v = leq_str_check(b, b)
    assert v.status == PROVED
    assert v.closure_size == 1


def test_weight_mismatch_refuted(a2):
    v = leq_str_check(unit(a2), CrystalElt(a2, (1, 0, 0)))
    assert v.is_refuted and v.witness == ()


def test_a4_witness_pair_proved():
    b1, b2 = a4_witness_pair()
    v = leq_str_check(b1, b2)
    assert v.status == PROVED and v.closure_size == 2


def test_a3_distinct_pairs_refuted_with_replayable_witness(a3):
    checked = 0
    for pool in pools("A3", 5, min_size=2):
        for b1, b2 in itertools.permutations(pool, 2):
            v = leq_str_check(b1, b2)
            assert v.is_refuted
            pair = (b1, b2)
            for move in v.witness:
                pair = apply_move(pair, move)
            p1, p2 = pair[0].phi_vector(), pair[1].phi_vector()
            assert any(x > y for x, y in zip(p1, p2))
            checked += 1
    assert checked > 100


def test_stab_check_diagonal(a5):
    b = b_rs("I", 1, 1)
    assert leq_stab_check(b, b).status == PROVED


def test_stab_check_counterexample_pair_inconclusive():
    v = leq_stab_check(b_rs("I", 0, 1), b_rs("I", 2, 0), depth=6)
    assert v.status == INCONCLUSIVE
    assert v.caps_hit  # some cap was hit, recorded in the verdict


def test_stab_check_refutes_a4_sample(a4):
    pool = enumerate_weight(a4, (1, 2, 1, 0))
    assert len(pool) >= 2
    for b1, b2 in itertools.permutations(pool[:4], 2):
        assert leq_stab_check(b1, b2).is_refuted


def test_verdict_json():
    b1, b2 = a4_witness_pair()
    v = leq_str_check(b1, b2)
    assert v.to_json() == {"verdict": PROVED, "closure_size": 2}
    r = leq_str_check(b2, b1)
    data = r.to_json()
    assert data["verdict"] == REFUTED and data["witness"] == []
