"""The crystal of Lusztig data.

A crystal element is the exponent vector of its PBW monomial in the chart of
the type's reference reduced word; every other chart is reached through the
piecewise-linear braid-move transitions of `rootsys`.  The raising operator
at vertex i increments the first coordinate of any i-first chart, phi_i reads
it, and the involution sigma is realized by reversing the coordinates read in
the starred-reversed chart (which is the polytope negation x -> wt - x in
coordinates).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .frobmono import CASE_TYPES, estring_of_case
from .rootsys import (CartanData, Weight, WeylWord, bring_to_front,
                      cartan_data, dot, height, transition_coords)

EString = Tuple[Tuple[int, int], ...]

DEFAULT_HEIGHT_CAP = 12


@dataclass(frozen=True)
class LusztigDatum:
    """An exponent vector together with the reduced word that charts it."""
    cartan: CartanData
    word: WeylWord
    coords: Tuple[int, ...]

    def weight(self) -> Weight:
        roots = self.cartan.roots_of_word(self.word)
        tot = [0] * self.cartan.rank
        for nk, beta in zip(self.coords, roots):
            for x in range(self.cartan.rank):
                tot[x] += nk * beta[x]
        return tuple(tot)


def _chart_cache(cartan: CartanData) -> Dict:
    return cartan._cache.setdefault("binfty", {})


class CrystalElt:
    """A crystal element in canonical form (coordinates on the reference word)."""

    __slots__ = ("cartan", "coords")

    def __init__(self, cartan: CartanData, coords):
        coords = tuple(int(x) for x in coords)
        if len(coords) != cartan.num_positive_roots:
            raise ValueError(
                f"need {cartan.num_positive_roots} coordinates, got {len(coords)}"
            )
        if any(x < 0 for x in coords):
            raise ValueError("Lusztig coordinates must be nonnegative")
        self.cartan = cartan
        self.coords = coords

    def __eq__(self, other):
        return (isinstance(other, CrystalElt) and self.cartan is other.cartan
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.cartan), self.coords))

    def __repr__(self):
        return f"CrystalElt({self.cartan.label}, {self.coords})"

    # ------------------------------------------------------------- weights

    def wt(self) -> Weight:
        """Weight in Q_+ (the convention of the distinguished-monomial tables)."""
        return self.cartan.weight_of_coords(self.coords)

    def wt_signed(self) -> Weight:
        return tuple(-x for x in self.wt())

    def datum(self, word=None) -> LusztigDatum:
        """Lusztig datum in the chart of `word` (defaults to the reference word)."""
        cartan = self.cartan
        if word is None or tuple(word) == cartan.reference_word:
            return LusztigDatum(cartan, cartan.reference_word, self.coords)
        word = cartan._check_w0_word(word)
        coords = transition_coords(cartan, cartan.reference_word, self.coords, word)
        return LusztigDatum(cartan, word, coords)

    # ------------------------------------------------------------- crystal ops

    def phi(self, i: int) -> int:
        return self.phi_vector()[i - 1]

    def phi_vector(self) -> Tuple[int, ...]:
        cache = _chart_cache(self.cartan)
        key = ("phi", self.coords)
        val = cache.get(key)
        if val is None:
            cartan = self.cartan
            out = []
            for i in cartan.index_set:
                w = list(cartan.reference_word)
                c = list(self.coords)
                bring_to_front(cartan, w, c, 0, i)
                out.append(c[0])
            val = tuple(out)
            cache[key] = val
        return val

    def eps(self, i: int) -> int:
        """epsilon_i = phi_i - <alpha_i^vee, wt>, so that the crystal axioms hold."""
        return self.phi(i) - self.cartan.pairing(i, self.wt())

    def e(self, i: int) -> "CrystalElt":
        cache = _chart_cache(self.cartan)
        key = ("e", i, self.coords)
        val = cache.get(key)
        if val is None:
            cartan = self.cartan
            w = list(cartan.reference_word)
            c = list(self.coords)
            bring_to_front(cartan, w, c, 0, i)
            c[0] += 1
            val = transition_coords(cartan, w, c, cartan.reference_word)
            cache[key] = val
        return CrystalElt(self.cartan, val)

    def f(self, i: int) -> Optional["CrystalElt"]:
        """Lowering operator; None plays the role of the ghost element 0."""
        cache = _chart_cache(self.cartan)
        key = ("f", i, self.coords)
        if key not in cache:
            cartan = self.cartan
            w = list(cartan.reference_word)
            c = list(self.coords)
            bring_to_front(cartan, w, c, 0, i)
            if c[0] == 0:
                cache[key] = None
            else:
                c[0] -= 1
                cache[key] = transition_coords(cartan, w, c, cartan.reference_word)
        val = cache[key]
        return None if val is None else CrystalElt(self.cartan, val)

    def f_max(self, i: int) -> "CrystalElt":
        cartan = self.cartan
        w = list(cartan.reference_word)
        c = list(self.coords)
        bring_to_front(cartan, w, c, 0, i)
        c[0] = 0
        return CrystalElt(cartan, transition_coords(cartan, w, c, cartan.reference_word))

    def e_power(self, i: int, m: int) -> "CrystalElt":
        cartan = self.cartan
        w = list(cartan.reference_word)
        c = list(self.coords)
        bring_to_front(cartan, w, c, 0, i)
        c[0] += m
        return CrystalElt(cartan, transition_coords(cartan, w, c, cartan.reference_word))

    def sigma(self) -> "CrystalElt":
        """The involution whose polytope action is x -> wt(b) - x."""
        cache = _chart_cache(self.cartan)
        key = ("sigma", self.coords)
        val = cache.get(key)
        if val is None:
            cartan = self.cartan
            m = transition_coords(cartan, cartan.reference_word, self.coords,
                                  cartan.sigma_word)
            val = m[::-1]
            cache[key] = val
        return CrystalElt(self.cartan, val)

    def scale(self, ell: int) -> "CrystalElt":
        """Kashiwara's crystal Frobenius companion: every coordinate times ell."""
        if ell < 1:
            raise ValueError("ell must be a positive integer")
        return CrystalElt(self.cartan, tuple(ell * x for x in self.coords))

    def is_unit(self) -> bool:
        return not any(self.coords)


def unit(cartan: CartanData) -> CrystalElt:
    """The element 1, with all Lusztig coordinates zero."""
    return CrystalElt(cartan, (0,) * cartan.num_positive_roots)


# ----------------------------------------------------------------- operations

def transition(datum: LusztigDatum, target) -> LusztigDatum:
    """Rechart a Lusztig datum along braid moves; weight is preserved."""
    cartan = datum.cartan
    target = cartan._check_w0_word(target)
    coords = transition_coords(cartan, datum.word, datum.coords, target)
    return LusztigDatum(cartan, target, coords)


def elt_from_datum(datum: LusztigDatum) -> CrystalElt:
    return CrystalElt(datum.cartan, transition(datum, datum.cartan.reference_word).coords)


def phi(i: int, b: CrystalElt) -> int:
    return b.phi(i)


def eps(i: int, b: CrystalElt) -> int:
    return b.eps(i)


def e_op(i: int, b: CrystalElt) -> CrystalElt:
    return b.e(i)


def f_op(i: int, b: CrystalElt) -> Optional[CrystalElt]:
    return b.f(i)


def f_max(i: int, b: CrystalElt) -> CrystalElt:
    return b.f_max(i)


def s_ell(ell: int, b: CrystalElt) -> CrystalElt:
    return b.scale(ell)


def sigma(b: CrystalElt) -> CrystalElt:
    return b.sigma()


def wt(b: CrystalElt) -> Weight:
    return b.wt()


def string_param(b: CrystalElt, seq: Sequence[int]) -> Tuple[Tuple[int, ...], CrystalElt]:
    """Iterated f_max along seq: returns (Phi_seq(b), residual element)."""
    out = []
    cur = b
    for i in seq:
        out.append(cur.phi(i))
        cur = cur.f_max(i)
    return tuple(out), cur


def apply_e_string(cartan: CartanData, estring: Sequence[Tuple[int, int]]) -> CrystalElt:
    """Fold raising operators over an exponent string, rightmost factor first."""
    word = list(cartan.reference_word)
    coords = [0] * cartan.num_positive_roots
    for i, m in reversed(tuple(estring)):
        if i not in cartan.index_set:
            raise ValueError(f"vertex {i} is not in the index set of {cartan.label}")
        if m < 0:
            raise ValueError("exponents must be nonnegative")
        if m == 0:
            continue
        bring_to_front(cartan, word, coords, 0, i)
        coords[0] += m
    coords = transition_coords(cartan, word, coords, cartan.reference_word)
    return CrystalElt(cartan, coords)


def b_rs(case: str, r: int, s: int, cartan: Optional[CartanData] = None) -> CrystalElt:
    """The distinguished element of the given case, E~_{r+s} E~_s applied to 1.

    The inner string E~_s is applied first.  (Writing E~_r there, as the
    source table does, contradicts the printed Lusztig data and the stated
    weight (r+2s)nu; the exponent patterns below reproduce both.)
    """
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    expected = cartan_data(CASE_TYPES[case]) if case in CASE_TYPES else None
    if expected is None:
        raise ValueError(f"unknown case {case!r}")
    if cartan is None:
        cartan = expected
    elif cartan is not expected:
        raise ValueError(f"case {case} lives in type {expected.label}, not {cartan.label}")
    estring = estring_of_case(case, r + s) + estring_of_case(case, s)
    return apply_e_string(cartan, estring)


def enumerate_weight(cartan: CartanData, nu: Weight, height_cap: int = DEFAULT_HEIGHT_CAP
                     ) -> List[CrystalElt]:
    """All crystal elements of the given weight, by pruned DFS in the reference chart."""
    nu = tuple(int(x) for x in nu)
    if len(nu) != cartan.rank or any(x < 0 for x in nu):
        raise ValueError("weight must be a nonnegative vector on the simple roots")
    if sum(nu) > height_cap:
        raise ValueError(f"height {sum(nu)} exceeds the cap {height_cap}")
    roots = cartan.reference_roots
    N = cartan.num_positive_roots
    rank = cartan.rank
    out: List[CrystalElt] = []
    coords = [0] * N

    def rec(k: int, residual: Tuple[int, ...]) -> None:
        if k == N:
            if not any(residual):
                out.append(CrystalElt(cartan, tuple(coords)))
            return
        beta = roots[k]
        cap = min(residual[x] // beta[x] for x in range(rank) if beta[x])
        rem = list(residual)
        for n in range(cap + 1):
            coords[k] = n
            rec(k + 1, tuple(rem))
            for x in range(rank):
                rem[x] -= beta[x]
        coords[k] = 0

    rec(0, nu)
    return out


def random_element(cartan: CartanData, rng: random.Random, max_height: int) -> CrystalElt:
    """A pseudo-random element built from a random raising string."""
    n = rng.randrange(max_height + 1)
    word = list(cartan.reference_word)
    coords = [0] * cartan.num_positive_roots
    for _ in range(n):
        i = rng.choice(cartan.index_set)
        bring_to_front(cartan, word, coords, 0, i)
        coords[0] += 1
    return CrystalElt(cartan, transition_coords(cartan, word, coords,
                                                cartan.reference_word))


# ----------------------------------------------------------------- text / JSON

def parse_estring(text: str) -> EString:
    """Parse `e1^2 e3 (e1 e3)^2` into an exponent string (right-to-left application)."""
    text = text.strip()
    if text in ("", "1"):
        return ()

    def parse(pos: int, depth: int) -> Tuple[List[Tuple[int, int]], int]:
        items: List[Tuple[int, int]] = []
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            if text[pos] == "(":
                inner, pos = parse(pos + 1, depth + 1)
                m2 = re.match(r"(?:\^(\d+))?", text[pos:])
                rep = int(m2.group(1)) if m2.group(1) else 1
                pos += m2.end()
                items.extend(inner * rep)
                continue
            if text[pos] == ")":
                if depth == 0:
                    raise ValueError("unbalanced ')' in raising string")
                return items, pos + 1
            m = re.match(r"e(\d+)(?:\^(\d+))?", text[pos:])
            if not m:
                raise ValueError(f"bad raising-string syntax near {text[pos:pos+10]!r}")
            items.append((int(m.group(1)), int(m.group(2)) if m.group(2) else 1))
            pos += m.end()
        if depth:
            raise ValueError("unbalanced '(' in raising string")
        return items, pos

    items, _ = parse(0, 0)
    return tuple(items)


def format_estring(estring: EString) -> str:
    if not estring:
        return "1"
    return " ".join(f"e{i}" if n == 1 else f"e{i}^{n}" for i, n in estring)


def elt_to_json(b: CrystalElt) -> dict:
    return {
        "type": b.cartan.label,
        "word": list(b.cartan.reference_word),
        "coords": list(b.coords),
    }


def elt_from_json(data: dict) -> CrystalElt:
    cartan = cartan_data(data["type"])
    word = tuple(data["word"])
    coords = tuple(data["coords"])
    if word == cartan.reference_word:
        return CrystalElt(cartan, coords)
    return elt_from_datum(LusztigDatum(cartan, cartan._check_w0_word(word), coords))
