import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalkit import polytopes
from crystalkit.accept import compositions
from crystalkit.binfty import CrystalElt, b_rs, enumerate_weight, unit
from crystalkit.polytopes import (bz_data, bz_tuple, dilate, leq_pol,
                                  minkowski_sum, mv_polytope,
                                  polytope_to_json)
from crystalkit.rootsys import cartan_data, dot


def pools(label, max_height):
    cartan = cartan_data(label)
    for total in range(1, max_height + 1):
        for nu in compositions(total, cartan.rank):
            yield enumerate_weight(cartan, nu)


def in_hull_exact(point, vertices, dim):
    """Exact convex-hull membership by brute force over small simplices."""
    point = tuple(Fraction(x) for x in point)
    verts = [tuple(Fraction(x) for x in v) for v in set(vertices)]
    if point in verts:
        return True
    for k in range(2, dim + 2):
        for combo in itertools.combinations(verts, k):
            # solve sum l_i v_i = point, sum l_i = 1 by Gaussian elimination
            rows = [[combo[j][r] for j in range(k)] + [point[r]] for r in range(dim)]
            rows.append([Fraction(1)] * k + [Fraction(1)])
            piv = []
            r = 0
            for c in range(k):
                sel = next((i for i in range(r, len(rows)) if rows[i][c]), None)
                if sel is None:
                    continue
                rows[r], rows[sel] = rows[sel], rows[r]
                rows[r] = [x / rows[r][c] for x in rows[r]]
                for i in range(len(rows)):
                    if i != r and rows[i][c]:
                        f = rows[i][c]
                        rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                piv.append(c)
                r += 1
            if any(row[-1] for row in rows[r:]):
                continue
            sol = [Fraction(0)] * k
            for idx, c in enumerate(piv):
                sol[c] = rows[idx][-1]
            if all(x >= 0 for x in sol):
                return True
    return False


# ------------------------------------------------------------- basic shape

def test_unit_polytope(a2):
    P = mv_polytope(unit(a2))
    assert P.vertex_set() == {(0, 0)}
    assert all(v == 0 for v in P.bz.values())


def test_endpoints(a3):
    b = CrystalElt(a3, (1, 0, 2, 0, 1, 0))
    P = mv_polytope(b)
    assert P.vertices[a3.identity_key()] == b.wt()
    assert P.vertices[a3.w0_key()] == (0, 0, 0)


def test_bz_is_support_function_a2(a2):
    b = CrystalElt(a2, (0, 1, 0))
    P = mv_polytope(b)
    assert P.vertex_set() == {(0, 0), (1, 0), (1, 1)}
    for gamma in a2.all_chamber_coweights():
        assert P.bz[gamma] == max(dot(gamma, v) for v in P.vertex_set())


def test_bz_tuple_cached(a2):
    b = CrystalElt(a2, (1, 1, 0))
    assert bz_tuple(b) == bz_tuple(b)
    assert len(bz_data(b)) == 6


# ------------------------------------------------------------- hull duality

@pytest.mark.parametrize("label,max_height", [("A2", 5), ("A3", 4)])
def test_lattice_points_match_facet_description(label, max_height):
    cartan = cartan_data(label)
    order = cartan.gamma_order()
    for pool in pools(label, max_height):
        for b in pool:
            P = mv_polytope(b)
            verts = P.vertex_set()
            wt = b.wt()
            box = itertools.product(*[range(w + 1) for w in wt])
            for x in box:
                facet_ok = all(dot(g, x) <= P.bz[g] for g in order)
                assert facet_ok == in_hull_exact(x, verts, cartan.rank), (
                    f"{label} {b.coords}: lattice point {x} disagrees")


# ------------------------------------------------------------- sigma and order

def test_sigma_negates_polytope(a2, a3):
    for cartan, max_height in ((a2, 6), (a3, 5)):
        for pool in pools(cartan.label, max_height):
            for b in pool:
                wt = b.wt()
                vs = mv_polytope(b).vertex_set()
                vss = mv_polytope(b.sigma()).vertex_set()
                assert vss == {tuple(w - x for w, x in zip(wt, v)) for v in vs}


def test_polytope_injective_on_pools(a3):
    for pool in pools("A3", 6):
        seen = {}
        for b in pool:
            key = bz_tuple(b)
            assert key not in seen, f"{b.coords} and {seen[key]} share a polytope"
            seen[key] = b.coords


def test_leq_pol_is_partial_order(a3):
    for pool in pools("A3", 5):
        for b in pool:
            assert leq_pol(b, b)
        for b1, b2 in itertools.permutations(pool, 2):
            if leq_pol(b1, b2) and leq_pol(b2, b1):
                assert b1 == b2
        for b1, b2, b3 in itertools.permutations(pool, 3):
            if leq_pol(b1, b2) and leq_pol(b2, b3):
                assert leq_pol(b1, b3)


def test_leq_pol_weight_mismatch_is_false(a2):
    assert not leq_pol(unit(a2), CrystalElt(a2, (1, 0, 0)))


def test_phi_monotone_under_containment(a3):
    for pool in pools("A3", 6):
        for b1, b2 in itertools.permutations(pool, 2):
            if leq_pol(b1, b2):
                assert all(x <= y for x, y in
                           zip(b1.phi_vector(), b2.phi_vector()))


def test_leq_pol_type_mismatch(a2, a3):
    with pytest.raises(ValueError):
        leq_pol(unit(a2), unit(a3))


# ------------------------------------------------------------- Minkowski

def test_minkowski_unit_is_neutral(a3):
    b = CrystalElt(a3, (1, 0, 1, 1, 0, 0))
    P = mv_polytope(b)
    Q = mv_polytope(unit(a3))
    S = minkowski_sum(P, Q)
    assert S.vertices == P.vertices and S.bz == P.bz


def test_minkowski_bz_additivity(a3):
    rng = random.Random(5)
    for _ in range(10):
        c1 = tuple(rng.randrange(3) for _ in range(6))
        c2 = tuple(rng.randrange(3) for _ in range(6))
        P = mv_polytope(CrystalElt(a3, c1))
        Q = mv_polytope(CrystalElt(a3, c2))
        S = minkowski_sum(P, Q)  # would raise if the BZ data failed to add
        assert S.base_weight == tuple(
            a + b for a, b in zip(P.base_weight, Q.base_weight))


def test_dilate_matches_repeated_sum(a2):
    P = mv_polytope(CrystalElt(a2, (0, 1, 0)))
    assert dilate(P, 2).vertices == minkowski_sum(P, P).vertices
    assert dilate(P, 0).vertex_set() == {(0, 0)}


def test_case_I_minkowski_decomposition():
    got = mv_polytope(b_rs("I", 2, 1))
    want = minkowski_sum(dilate(mv_polytope(b_rs("I", 1, 0)), 2),
                         mv_polytope(b_rs("I", 0, 1)))
    assert got.vertices == want.vertices and got.bz == want.bz


# ------------------------------------------------------------- export

def test_polytope_json_schema(a2):
    P = mv_polytope(CrystalElt(a2, (0, 1, 0)))
    data = polytope_to_json(P)
    assert data["weight"] == [1, 1]
    assert {tuple(e["mu"]) for e in data["vertices"]} == {(0, 0), (1, 0), (1, 1)}
    assert len(data["bz"]) == 6
    assert all(set(e) == {"gamma", "M"} for e in data["bz"])
    words = [tuple(e["w"]) for e in data["vertices"]]
    assert () in words  # identity appears with its empty word
