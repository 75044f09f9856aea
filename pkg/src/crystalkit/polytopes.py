"""MV polytopes: vertex maps, BZ data, containment, Minkowski sums.

The vertex at a Weyl element w is mu_w(b) = wt(b) - sum of the first l(w)
terms n_t beta_t read in any chart whose word starts with a word of w; the
BZ datum records the support function values at the chamber coweights.  Both
are computed together in one walk over the weak order, and the two routes to
each BZ value (defining pairing at the vertex, maximum over all vertices)
are compared on every call - a disagreement means a chart bug and raises.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Tuple

from .binfty import CrystalElt
from .rootsys import (CartanData, Coweight, Weight, bring_to_front, dot,
                      _flatten)


class BZInconsistency(ArithmeticError):
    """Two presentations of the same BZ value disagreed (internal bug)."""


class MVPolytope:
    """Vertex map over the Weyl group plus BZ datum over chamber coweights.

    Under this package's Q_+ weight convention the vertex at the identity is
    wt(b) and the vertex at w0 is the origin.
    """

    __slots__ = ("cartan", "base_weight", "vertices", "bz")

    def __init__(self, cartan: CartanData, base_weight: Weight,
                 vertices: Dict[tuple, Weight], bz: Dict[Coweight, int]):
        self.cartan = cartan
        self.base_weight = base_weight
        self.vertices = vertices
        self.bz = bz

    def __eq__(self, other):
        return (isinstance(other, MVPolytope) and self.cartan is other.cartan
                and self.base_weight == other.base_weight
                and self.vertices == other.vertices and self.bz == other.bz)

    def __repr__(self):
        return (f"MVPolytope({self.cartan.label}, wt={self.base_weight}, "
                f"{len(self.vertex_set())} vertices)")

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices.values())

    def bz_tuple(self) -> Tuple[int, ...]:
        order = self.cartan.gamma_order()
        return tuple(self.bz[g] for g in order)


def iter_vertices(cartan: CartanData, coords) -> Iterator[Tuple[tuple, Weight]]:
    """Yield (Weyl element key, mu_w) for every w, walking the weak order.

    Each step brings the next letter to the current position by braid moves,
    so the prefix of the working word always spells the current element; the
    vertex is updated by subtracting n_k beta_k.
    """
    rank = cartan.rank
    mat = cartan.matrix
    word = list(cartan.reference_word)
    c = list(coords)
    images = tuple(cartan.simple_root(i) for i in cartan.index_set)
    mu0 = cartan.weight_of_coords(coords)
    key0 = _flatten(images)
    visited = {key0}
    yield key0, mu0

    def rec(k: int, images, mu) -> Iterator[Tuple[tuple, Weight]]:
        for jx in range(rank):
            img = images[jx]
            if max(img) <= 0:
                continue
            row = mat[jx]
            new_images = tuple(
                tuple(images[t][x] - row[t] * img[x] for x in range(rank))
                if row[t] else images[t]
                for t in range(rank)
            )
            key = _flatten(new_images)
            if key in visited:
                continue
            visited.add(key)
            save_w = word[k:]
            save_c = c[k:]
            bring_to_front(cartan, word, c, k, jx + 1)
            nk = c[k]
            new_mu = tuple(mu[x] - nk * img[x] for x in range(rank))
            yield key, new_mu
            yield from rec(k + 1, new_images, new_mu)
            word[k:] = save_w
            c[k:] = save_c

    yield from rec(0, images, mu0)


def mv_polytope(b: CrystalElt) -> MVPolytope:
    """The MV polytope of a crystal element, with its BZ datum."""
    cartan = b.cartan
    vertices = dict(iter_vertices(cartan, b.coords))
    bz = _bz_from_vertices(cartan, vertices)
    return MVPolytope(cartan, b.wt(), vertices, bz)


def _bz_from_vertices(cartan: CartanData, vertices: Dict[tuple, Weight]
                      ) -> Dict[Coweight, int]:
    presentations = cartan.chamber_presentations()
    bz: Dict[Coweight, int] = {}
    for key, mu in vertices.items():
        for gamma in presentations[key]:
            val = dot(gamma, mu)
            old = bz.setdefault(gamma, val)
            if old != val:
                raise BZInconsistency(
                    f"presentations of {gamma} disagree: {old} vs {val}")
    distinct = set(vertices.values())
    for gamma, val in bz.items():
        sup = max(dot(gamma, v) for v in distinct)
        if sup != val:
            raise BZInconsistency(
                f"BZ value at {gamma} is {val} but the support maximum is {sup}")
    if set(bz) != cartan.all_chamber_coweights():
        raise BZInconsistency("presentations did not cover all chamber coweights")
    return bz


def bz_data(b: CrystalElt) -> Dict[Coweight, int]:
    """The BZ datum gamma -> M_gamma(b) over all chamber coweights."""
    return mv_polytope(b).bz


def bz_tuple(b: CrystalElt) -> Tuple[int, ...]:
    """BZ datum in the type's fixed coweight order; cached per element."""
    cache = b.cartan._cache.setdefault("bz", {})
    val = cache.get(b.coords)
    if val is None:
        val = mv_polytope(b).bz_tuple()
        cache[b.coords] = val
    return val


def leq_pol(b1: CrystalElt, b2: CrystalElt) -> bool:
    """Polytope containment order: equal weights and M_gamma(b1) <= M_gamma(b2)."""
    if b1.cartan is not b2.cartan:
        raise ValueError("elements live in different types")
    if b1.wt() != b2.wt():
        return False
    if b1.coords == b2.coords:
        return True
    t1 = bz_tuple(b1)
    t2 = bz_tuple(b2)
    return all(x <= y for x, y in zip(t1, t2))


def minkowski_sum(P: MVPolytope, Q: MVPolytope) -> MVPolytope:
    """Vertex-wise sum; valid because both normal fans coarsen the Weyl fan."""
    if P.cartan is not Q.cartan:
        raise ValueError("polytopes live in different types")
    cartan = P.cartan
    vertices = {
        k: tuple(a + b for a, b in zip(P.vertices[k], Q.vertices[k]))
        for k in P.vertices
    }
    base = tuple(a + b for a, b in zip(P.base_weight, Q.base_weight))
    bz = _bz_from_vertices(cartan, vertices)
    for gamma, val in bz.items():
        if val != P.bz[gamma] + Q.bz[gamma]:
            raise BZInconsistency("BZ datum failed to add under Minkowski sum")
    return MVPolytope(cartan, base, vertices, bz)


def dilate(P: MVPolytope, k: int) -> MVPolytope:
    """The k-fold Minkowski sum of P with itself (k >= 0)."""
    if k < 0:
        raise ValueError("dilation factor must be nonnegative")
    cartan = P.cartan
    vertices = {key: tuple(k * x for x in mu) for key, mu in P.vertices.items()}
    base = tuple(k * x for x in P.base_weight)
    bz = {gamma: k * val for gamma, val in P.bz.items()}
    return MVPolytope(cartan, base, vertices, bz)


def polytope_to_json(P: MVPolytope) -> dict:
    words = P.cartan.weyl_prefix_words()
    return {
        "type": P.cartan.label,
        "weight": list(P.base_weight),
        "vertices": [
            {"w": list(words[key]), "mu": list(mu)}
            for key, mu in sorted(P.vertices.items(), key=lambda kv: (len(words[kv[0]]), words[kv[0]]))
        ],
        "bz": [
            {"gamma": list(g), "M": P.bz[g]} for g in P.cartan.gamma_order()
        ],
    }
