"""Divided-power monomials and the quantum Frobenius maps at the monomial level.

A monomial is a formal word of factors (vertex, exponent); nothing is ever
reduced modulo Serre relations.  The Frobenius map divides every exponent by
ell (or kills the monomial), its splitting multiplies every exponent by ell.
The module also owns the four distinguished monomial families and crystal
operator strings attached to the two A5 and two D4 situations.
"""

from __future__ import annotations

import re
from typing import Tuple

from .rootsys import CartanData, Weight, cartan_data

Monomial = Tuple[Tuple[int, int], ...]
EString = Tuple[Tuple[int, int], ...]


class _Zero:
    """The distinguished zero value in the target of the Frobenius map."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"


ZERO = _Zero()

CASES = ("I", "II", "III", "IV")
CASE_TYPES = {"I": "A5", "II": "A5", "III": "D4", "IV": "D4"}

# Exponent patterns, per case, as (vertex, multiplier-of-p) factors.  The
# crystal operator string E~_p and the monomial xi_p share one pattern; eta_p
# doubles the middle.  Consecutive factors inside a block commute (their
# vertices are disconnected), so the power of a block is the blockwise power.
_XI_PATTERN = {
    "I": ((2, 1), (4, 1), (1, 1), (3, 2), (5, 1), (2, 1), (4, 1)),
    "II": ((1, 1), (3, 2), (5, 1), (2, 3), (4, 3), (1, 1), (3, 2), (5, 1)),
    "III": ((2, 1), (1, 1), (3, 1), (4, 1), (2, 1)),
    "IV": ((1, 1), (3, 1), (4, 1), (2, 3), (1, 1), (3, 1), (4, 1)),
}
_ETA_PATTERN = {
    "I": ((2, 1), (4, 1), (1, 1), (3, 2), (5, 1), (2, 2), (4, 2),
          (1, 1), (3, 2), (5, 1), (2, 1), (4, 1)),
    "II": ((1, 1), (3, 2), (5, 1), (2, 3), (4, 3), (1, 2), (3, 4), (5, 2),
           (2, 3), (4, 3), (1, 1), (3, 2), (5, 1)),
    "III": ((2, 1), (1, 1), (3, 1), (4, 1), (2, 2), (1, 1), (3, 1), (4, 1), (2, 1)),
    "IV": ((1, 1), (3, 1), (4, 1), (2, 3), (1, 2), (3, 2), (4, 2),
           (2, 3), (1, 1), (3, 1), (4, 1)),
}


def _instantiate(pattern, p: int) -> Monomial:
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p == 0:
        return ()
    return tuple((i, m * p) for i, m in pattern)


def _check_case(case: str) -> str:
    if case not in CASES:
        raise ValueError(f"case must be one of {CASES}, got {case!r}")
    return case


def case_cartan(case: str) -> CartanData:
    return cartan_data(CASE_TYPES[_check_case(case)])


def xi_p(case: str, p: int) -> Monomial:
    """The distinguished monomial xi_p of the given case."""
    return _instantiate(_XI_PATTERN[_check_case(case)], p)


def eta_p(case: str, p: int) -> Monomial:
    """The companion monomial eta_p (middle block doubled)."""
    return _instantiate(_ETA_PATTERN[_check_case(case)], p)


def estring_of_case(case: str, p: int) -> EString:
    """The raising-operator string E~_p of the given case, read right to left."""
    return _instantiate(_XI_PATTERN[_check_case(case)], p)


def validate_monomial(cartan: CartanData, m: Monomial) -> Monomial:
    m = tuple((int(i), int(n)) for i, n in m)
    for i, n in m:
        if i not in cartan.index_set:
            raise ValueError(f"vertex {i} is not in the index set of {cartan.label}")
        if n < 1:
            raise ValueError("exponents must be positive")
    return m


def weight(cartan: CartanData, m: Monomial) -> Weight:
    """Total weight of a monomial, as a vector on the simple roots."""
    tot = [0] * cartan.rank
    for i, n in m:
        tot[i - 1] += n
    return tuple(tot)


def fr(ell: int, m: Monomial):
    """Quantum Frobenius on a monomial: divide exponents by ell, or ZERO."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    out = []
    for i, n in m:
        if n % ell:
            return ZERO
        out.append((i, n // ell))
    return tuple(out)


def fr_split(ell: int, m: Monomial) -> Monomial:
    """Frobenius splitting on a monomial: multiply every exponent by ell."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    return tuple((i, n * ell) for i, n in m)


# ------------------------------------------------------------------ text I/O

_TOKEN = re.compile(r"t(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str) -> Monomial:
    """Parse the CLI syntax `t2^3 t4 t1^2` into a monomial."""
    out = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad monomial token {tok!r}")
        i = int(m.group(1))
        n = int(m.group(2)) if m.group(2) else 1
        if n < 1:
            raise ValueError("exponents must be positive")
        out.append((i, n))
    return tuple(out)


def format_monomial(m) -> str:
    if m is ZERO:
        return "0"
    if not m:
        return "1"
    return " ".join(f"t{i}" if n == 1 else f"t{i}^{n}" for i, n in m)
