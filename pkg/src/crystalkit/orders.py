"""Comparison machinery on the crystal.

Four orders appear: the lexicographic order on exponent vectors, the
per-word PBW order, polytope containment (delegated to `polytopes`), and the
two move-stabilized relations.  The stabilized relations quantify over all
finite sequences of simultaneous crystal moves, so they are not decidable by
a finite scan; the checkers return a three-valued verdict where refutations
and exhausted-closure proofs are sound and everything else says so.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .binfty import CrystalElt
from .polytopes import bz_tuple, leq_pol
from .rootsys import CartanData, ReducedWordCapExceeded, dot, height

REFUTED = "refuted"
PROVED = "proved_by_closure"
INCONCLUSIVE = "consistent_to_depth"

Move = Tuple  # ("e", i) | ("f", i) | ("sigma",)
Pair = Tuple[CrystalElt, CrystalElt]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a stabilized-order check.

    `refuted` and `proved_by_closure` are sound; `consistent_to_depth` is
    explicitly inconclusive and records which caps were hit.
    """
    status: str
    witness: Tuple[Move, ...] = ()
    closure_size: int = 0
    depth: int = 0
    caps_hit: Tuple[str, ...] = ()
    reason: str = ""

    @property
    def is_refuted(self) -> bool:
        return self.status == REFUTED

    @property
    def is_proved(self) -> bool:
        return self.status == PROVED

    def to_json(self) -> dict:
        out = {"verdict": self.status}
        if self.status == REFUTED:
            out["witness"] = [list(m) for m in self.witness]
            if self.reason:
                out["reason"] = self.reason
        elif self.status == PROVED:
            out["closure_size"] = self.closure_size
        else:
            out["depth"] = self.depth
            out["caps_hit"] = list(self.caps_hit)
        return out


# ----------------------------------------------------------- vector orders

def leq_lex(u: Sequence[int], v: Sequence[int]) -> bool:
    if len(u) != len(v):
        raise ValueError("lexicographic comparison needs equal lengths")
    return tuple(u) <= tuple(v)


def _pairing_matrix(cartan: CartanData, word) -> Tuple[Tuple[int, ...], ...]:
    key = ("pairings", tuple(word))
    if key not in cartan._cache:
        roots = cartan.roots_of_word(word)
        gammas = cartan.chamber_coweights_of_word(word)
        cartan._cache[key] = tuple(
            tuple(dot(gammas[k], roots[t]) for t in range(k + 1))
            for k in range(len(word))
        )
    return cartan._cache[key]


def leq_i(cartan: CartanData, word, n: Sequence[int], m: Sequence[int]) -> bool:
    """The PBW order attached to one reduced word of w0."""
    n = tuple(n)
    m = tuple(m)
    N = cartan.num_positive_roots
    if len(n) != N or len(m) != N:
        raise ValueError(f"exponent vectors must have length {N}")
    roots = cartan.roots_of_word(word)
    wn = [0] * cartan.rank
    wm = [0] * cartan.rank
    for k in range(N):
        for x in range(cartan.rank):
            wn[x] += n[k] * roots[k][x]
            wm[x] += m[k] * roots[k][x]
    if wn != wm:
        return False
    pair = _pairing_matrix(cartan, word)
    for k in range(N):
        row = pair[k]
        sn = sm = 0
        for t in range(k + 1):
            sn += row[t] * n[t]
            sm += row[t] * m[t]
        if sn > sm:
            return False
    return True


def leq_pol_via_words(b1: CrystalElt, b2: CrystalElt, cap: int = 500_000) -> bool:
    """Conjunction of the per-word orders over every reduced word of w0.

    Equivalent to polytope containment; intended for small types where the
    full word enumeration fits under the cap.
    """
    if b1.cartan is not b2.cartan:
        raise ValueError("elements live in different types")
    cartan = b1.cartan
    words = cartan.reduced_words_of_w0(cap=cap)
    for word in words:
        n = b1.datum(word).coords
        m = b2.datum(word).coords
        if not leq_i(cartan, word, n, m):
            return False
    return True


# ----------------------------------------------------------- moves and closures

def moves(pair: Pair) -> List[Tuple[Move, Pair]]:
    """All simultaneous-move successors of a pair of equal-weight elements."""
    b1, b2 = pair
    if b1.wt() != b2.wt():
        raise ValueError("moves are only defined on equal-weight pairs")
    out: List[Tuple[Move, Pair]] = []
    p1 = b1.phi_vector()
    p2 = b2.phi_vector()
    for i in b1.cartan.index_set:
        if p1[i - 1] == p2[i - 1]:
            out.append((("e", i), (b1.e(i), b2.e(i))))
            if p1[i - 1] > 0:
                out.append((("f", i), (b1.f(i), b2.f(i))))
    out.append((("sigma",), (b1.sigma(), b2.sigma())))
    return out


def apply_move(pair: Pair, move: Move) -> Pair:
    b1, b2 = pair
    kind = move[0]
    if kind == "sigma":
        return (b1.sigma(), b2.sigma())
    i = move[1]
    if b1.phi(i) != b2.phi(i):
        raise ValueError(f"move {move} is not enabled: phi_{i} values differ")
    if kind == "e":
        return (b1.e(i), b2.e(i))
    if kind == "f":
        if b1.phi(i) == 0:
            raise ValueError(f"move {move} is not enabled: phi_{i} is zero")
        return (b1.f(i), b2.f(i))
    raise ValueError(f"unknown move {move!r}")


def _phi_leq(b1: CrystalElt, b2: CrystalElt) -> bool:
    p1 = b1.phi_vector()
    p2 = b2.phi_vector()
    return all(x <= y for x, y in zip(p1, p2))


def _pol_leq(b1: CrystalElt, b2: CrystalElt) -> bool:
    # phi-monotonicity is a consequence of containment, so a phi violation
    # is a sound fast negative before the BZ comparison
    if not _phi_leq(b1, b2):
        return False
    return leq_pol(b1, b2)


def _closure_check(b1: CrystalElt, b2: CrystalElt,
                   predicate: Callable[[CrystalElt, CrystalElt], bool],
                   depth: int, weight_cap: Optional[int]) -> Verdict:
    if b1.cartan is not b2.cartan:
        raise ValueError("elements live in different types")
    if b1.wt() != b2.wt():
        return Verdict(REFUTED, witness=(), reason="weights differ")
    if weight_cap is None:
        weight_cap = height(b1.wt()) + 6
    queue = deque([((b1, b2), ())])
    seen = {(b1.coords, b2.coords)}
    caps = set()
    while queue:
        pair, path = queue.popleft()
        if not predicate(*pair):
            return Verdict(REFUTED, witness=path,
                           reason="predicate fails at the reached pair")
        if pair[0] == pair[1]:
            # the diagonal is closed under every move and never violates
            continue
        for move, child in moves(pair):
            if move[0] == "e" and height(child[0].wt()) > weight_cap:
                caps.add("weight")
                continue
            key = (child[0].coords, child[1].coords)
            if key in seen:
                continue
            if len(path) >= depth:
                caps.add("depth")
                continue
            seen.add(key)
            queue.append((child, path + (move,)))
    if caps:
        return Verdict(INCONCLUSIVE, depth=depth, caps_hit=tuple(sorted(caps)),
                       closure_size=len(seen))
    return Verdict(PROVED, closure_size=len(seen), depth=depth)


def leq_str_check(b1: CrystalElt, b2: CrystalElt, depth: int = 6,
                  weight_cap: Optional[int] = None) -> Verdict:
    """Bounded decision procedure for the string order.

    Refuted if some reachable pair violates phi_i(b1') <= phi_i(b2');
    proved if the whole move closure was exhausted under the caps.
    """
    return _closure_check(b1, b2, _phi_leq, depth, weight_cap)


def leq_stab_check(b1: CrystalElt, b2: CrystalElt, depth: int = 6,
                   weight_cap: Optional[int] = None) -> Verdict:
    """Bounded decision procedure for the move-stabilized polytope order."""
    return _closure_check(b1, b2, _pol_leq, depth, weight_cap)
