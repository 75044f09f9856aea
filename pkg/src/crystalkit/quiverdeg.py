"""Exact quiver-side arithmetic for Dynkin orientations.

Euler forms, Ringel Hom/Ext dimensions between indecomposables, adapted
words, the Hom/Ext matrices of a root enumeration, Riedtmann's degeneration
order on multiplicity vectors, orbit and flag-bundle dimensions, and the A5
semismallness functional with its embedded extension tables.

Multiplicity vectors are always read against the root enumeration of a word
adapted to the orientation; no linear algebra over a field is performed.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .rootsys import CartanData, Weight, WeylWord, cartan_data, dot

Orientation = FrozenSet[Tuple[int, int]]


class SearchBudgetExceeded(RuntimeError):
    """The cone-membership search ran out of its node budget."""


# ------------------------------------------------------------- orientations

def dynkin_edges(cartan: CartanData) -> Tuple[Tuple[int, int], ...]:
    return tuple(
        (i, j)
        for i in cartan.index_set for j in cartan.index_set
        if i < j and cartan.a(i, j) == -1
    )


def orientation(cartan: CartanData, arrows) -> Orientation:
    """Validate a set of directed edges as an orientation of the diagram."""
    arrows = frozenset((int(a), int(b)) for a, b in arrows)
    edges = set(dynkin_edges(cartan))
    seen = set()
    for a, b in arrows:
        e = (min(a, b), max(a, b))
        if e not in edges:
            raise ValueError(f"{a}->{b} is not an edge of the {cartan.label} diagram")
        if e in seen:
            raise ValueError(f"edge {e} oriented twice")
        seen.add(e)
    if seen != edges:
        raise ValueError("orientation must pick a direction for every edge")
    return arrows


def all_orientations(cartan: CartanData) -> List[Orientation]:
    edges = dynkin_edges(cartan)
    out = []
    for mask in range(1 << len(edges)):
        arrows = frozenset(
            (a, b) if not (mask >> k) & 1 else (b, a)
            for k, (a, b) in enumerate(edges)
        )
        out.append(arrows)
    return out


def opposite(omega: Orientation) -> Orientation:
    return frozenset((b, a) for a, b in omega)


# A5 word and orientation of the distinguished study: arrows 1->2, 3->2,
# 3->4, 5->4, to which (2,4,1,3,5)^3 is adapted.
CASE_I_WORD: WeylWord = (2, 4, 1, 3, 5) * 3
CASE_I_ARROWS = frozenset({(1, 2), (3, 2), (3, 4), (5, 4)})


# ------------------------------------------------------------- Euler / Ringel

def euler_form(cartan: CartanData, omega: Orientation, mu: Weight, nu: Weight) -> int:
    """<mu, nu>_Omega = sum_i mu_i nu_i - sum_{a->b} mu_a nu_b."""
    val = sum(mu[i] * nu[i] for i in range(cartan.rank))
    for a, b in omega:
        val -= mu[a - 1] * nu[b - 1]
    return val


def _check_root(cartan: CartanData, alpha: Weight) -> Weight:
    alpha = tuple(alpha)
    if alpha not in cartan.positive_roots:
        raise ValueError(f"{alpha} is not a positive root of {cartan.label}")
    return alpha


def hom_dim(cartan: CartanData, omega: Orientation, alpha: Weight, beta: Weight) -> int:
    """dim Hom(M(alpha), M(beta)) between indecomposables, by Ringel's formula."""
    alpha = _check_root(cartan, alpha)
    beta = _check_root(cartan, beta)
    return max(0, euler_form(cartan, omega, alpha, beta))


def ext_dim(cartan: CartanData, omega: Orientation, alpha: Weight, beta: Weight) -> int:
    """dim Ext^1(M(alpha), M(beta)) between indecomposables."""
    alpha = _check_root(cartan, alpha)
    beta = _check_root(cartan, beta)
    return max(0, -euler_form(cartan, omega, alpha, beta))


# ------------------------------------------------------------- adapted words

def _sinks(cartan: CartanData, omega: Orientation) -> List[int]:
    outgoing = {a for a, _ in omega}
    return [i for i in cartan.index_set if i not in outgoing]


def _flip_at(omega: Orientation, i: int) -> Orientation:
    return frozenset((b, a) if i in (a, b) else (a, b) for a, b in omega)


def is_adapted(cartan: CartanData, word, omega: Orientation) -> bool:
    """Each letter must be a sink of the successively reflected orientation."""
    word = tuple(word)
    if len(word) != cartan.num_positive_roots or not cartan.is_reduced(word):
        return False
    cur = omega
    for i in word:
        if i in {a for a, _ in cur}:
            return False
        cur = _flip_at(cur, i)
    return True


def adapted_word(cartan: CartanData, omega: Orientation) -> WeylWord:
    """Some reduced word of w0 adapted to the orientation (smallest-sink greedy)."""
    key = ("adapted", omega)
    if key in cartan._cache:
        return cartan._cache[key]
    N = cartan.num_positive_roots

    def rec(word: List[int], cur: Orientation) -> Optional[Tuple[int, ...]]:
        if len(word) == N:
            return tuple(word)
        for i in sorted(_sinks(cartan, cur)):
            cand = word + [i]
            if cartan.is_reduced(tuple(cand)):
                got = rec(cand, _flip_at(cur, i))
                if got is not None:
                    return got
        return None

    got = rec([], omega)
    if got is None:
        raise AssertionError(f"no adapted word found for {sorted(omega)}")
    cartan._cache[key] = got
    return got


def hom_matrix(cartan: CartanData, omega: Orientation, word=None
               ) -> Tuple[Tuple[int, ...], ...]:
    """H with h_{k,l} = dim Hom(M(beta_k), M(beta_l)) along an adapted word."""
    if word is None:
        word = adapted_word(cartan, omega)
    key = ("hom_matrix", omega, tuple(word))
    if key not in cartan._cache:
        if not is_adapted(cartan, word, omega):
            raise ValueError("word is not adapted to the orientation")
        roots = cartan.roots_of_word(word)
        cartan._cache[key] = tuple(
            tuple(hom_dim(cartan, omega, a, b) for b in roots) for a in roots
        )
    return cartan._cache[key]


def ext_matrix(cartan: CartanData, omega: Orientation, word=None
               ) -> Tuple[Tuple[int, ...], ...]:
    if word is None:
        word = adapted_word(cartan, omega)
    key = ("ext_matrix", omega, tuple(word))
    if key not in cartan._cache:
        if not is_adapted(cartan, word, omega):
            raise ValueError("word is not adapted to the orientation")
        roots = cartan.roots_of_word(word)
        cartan._cache[key] = tuple(
            tuple(ext_dim(cartan, omega, a, b) for b in roots) for a in roots
        )
    return cartan._cache[key]


# ------------------------------------------------------------- degenerations

def dimension_vector(cartan: CartanData, word, mult: Sequence[int]) -> Weight:
    roots = cartan.roots_of_word(word)
    tot = [0] * cartan.rank
    for nk, beta in zip(mult, roots):
        for x in range(cartan.rank):
            tot[x] += nk * beta[x]
    return tuple(tot)


def degeneration_leq(cartan: CartanData, omega: Orientation,
                     n1: Sequence[int], n2: Sequence[int], word=None) -> bool:
    """Riedtmann's criterion on multiplicity vectors of an adapted word:
    n1 degenerates to n2 iff every Hom dimension against an indecomposable
    weakly grows."""
    n1 = tuple(n1)
    n2 = tuple(n2)
    if word is None:
        word = adapted_word(cartan, omega)
    if dimension_vector(cartan, word, n1) != dimension_vector(cartan, word, n2):
        raise ValueError("dimension vectors differ")
    H = hom_matrix(cartan, omega, word)
    N = cartan.num_positive_roots
    for k in range(N):
        s1 = sum(n1[t] * H[t][k] for t in range(N))
        s2 = sum(n2[t] * H[t][k] for t in range(N))
        if s1 > s2:
            return False
    return True


def rep_space_dim(cartan: CartanData, omega: Orientation, d: Weight) -> int:
    """dim E_{V,Omega} = sum over arrows a->b of d_a d_b."""
    return sum(d[a - 1] * d[b - 1] for a, b in omega)


def orbit_dim(cartan: CartanData, omega: Orientation, u: Sequence[int],
              word=None) -> int:
    """Orbit dimension via dim E - dim O_u = u E u^T (Crawley-Boevey)."""
    u = tuple(u)
    if word is None:
        word = adapted_word(cartan, omega)
    E = ext_matrix(cartan, omega, word)
    d = dimension_vector(cartan, word, u)
    N = cartan.num_positive_roots
    codim = sum(u[k] * E[k][l] * u[l] for k in range(N) for l in range(N))
    return rep_space_dim(cartan, omega, d) - codim


def flag_bundle_dim(cartan: CartanData, j: Sequence[int], a: Sequence[int],
                    omega: Orientation) -> int:
    """Dimension of the incidence variety of x-stable flags of type (j, a).

    Flag-variety part: same-vertex cross terms with m < m'; fiber part: for
    each arrow, cross terms with m <= m' from tail step to head step.
    """
    j = tuple(j)
    a = tuple(a)
    if len(j) != len(a):
        raise ValueError("vertex and exponent sequences must have equal length")
    for i in j:
        if i not in cartan.index_set:
            raise ValueError(f"vertex {i} is not in the index set")
    if any(x < 0 for x in a):
        raise ValueError("step sizes must be nonnegative")
    m = len(j)
    total = 0
    for x in range(m):
        for y in range(x + 1, m):
            if j[x] == j[y]:
                total += a[x] * a[y]
    for tail, head in omega:
        for x in range(m):
            if j[x] != tail:
                continue
            for y in range(x, m):
                if j[y] == head:
                    total += a[x] * a[y]
    return total


def eta_flag_type(p: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The flag type (j, a) of the case-I monomial eta_p."""
    from .frobmono import eta_p
    mono = eta_p("I", p)
    return tuple(i for i, _ in mono), tuple(n for _, n in mono)


# ---------------------------------------------------------------- A5 tables
#
# Everything below is specific to the A5 study: the root enumeration of
# CASE_I_WORD, the seventeen generator rows, the auxiliary vectors, and the
# fourteen extension rows (modules listed by their dimension intervals).

_BETA_INTERVALS = (
    (2, 2), (4, 4), (1, 2), (2, 4), (4, 5), (1, 4), (2, 5), (3, 4),
    (1, 5), (2, 3), (3, 5), (1, 3), (5, 5), (3, 3), (1, 1),
)

W_ROWS: Tuple[Tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 1),
    (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 1, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0),
    (0, 0, 1, 0, 0, 0, 1, 0, -1, 0, 0, -1, 0, 1, 1),
    (0, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, -1, 0, 1, 1),
    (0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 1, 1),
    (0, 0, 0, 0, 0, 1, 1, -1, -1, 0, 0, -1, 0, 1, 1),
    (0, 0, 0, 0, 0, 1, 1, 0, -1, -1, -1, 0, 1, 1, 0),
    (0, 0, 0, 1, 0, 0, 0, 0, 0, -1, -1, 0, 1, 1, 0),
    (0, 0, 0, 1, 1, 0, -1, 0, 0, 0, -1, 0, 1, 1, 0),
    (0, 0, 0, 0, 1, 1, 0, 0, -1, 0, -1, 0, 1, 1, 0),
    (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 1),
    (0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, 0, 0, 1, 0),
)

X_VEC = (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -2, -1)
XP_VEC = (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1)
Y_VEC = (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0)
Z_VEC = (1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0)
S_VEC = (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)
T_VEC = (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1)

# the fourteen extension rows: (intervals of M_t, intervals of N_t)
EXTENSION_ROWS: Tuple[Tuple[Tuple[Tuple[int, int], ...], Tuple[Tuple[int, int], ...]], ...] = (
    (((2, 2),), ()),
    (((1, 2),), ((1, 1),)),
    (((1, 2), (2, 4)), ((1, 4),)),
    (((1, 2), (2, 5)), ((1, 5),)),
    (((1, 2), (2, 3)), ((1, 3),)),
    (((2, 4),), ((3, 4),)),
    (((1, 4),), ((1, 1), (3, 4))),
    (((1, 4), (2, 5)), ((1, 5), (3, 4))),
    (((1, 4), (2, 3)), ((1, 3), (3, 4))),
    (((2, 5),), ((3, 5),)),
    (((1, 5),), ((1, 1), (3, 5))),
    (((1, 5), (2, 3)), ((1, 3), (3, 5))),
    (((2, 3),), ((3, 3),)),
    (((1, 3),), ((1, 1), (3, 3))),
)


def interval_root(lo: int, hi: int) -> Weight:
    """alpha_lo + ... + alpha_hi in type A5."""
    return tuple(1 if lo - 1 <= x <= hi - 1 else 0 for x in range(5))


def multiplicity_vector(intervals: Sequence[Tuple[int, int]]) -> Tuple[int, ...]:
    """Multiplicities along the case-I root enumeration for a sum of intervals."""
    out = [0] * 15
    for lo, hi in intervals:
        out[_BETA_INTERVALS.index((lo, hi))] += 1
    return tuple(out)


def extension_table() -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    """The fourteen (n(M_t), n(N_t)) rows as multiplicity vectors."""
    return tuple(
        (multiplicity_vector(ms), multiplicity_vector(ns))
        for ms, ns in EXTENSION_ROWS
    )


def _a5_matrices():
    cartan = cartan_data("A5")
    key = ("a5_delta_matrices",)
    if key not in cartan._cache:
        omega = CASE_I_ARROWS
        H = np.array(hom_matrix(cartan, omega, CASE_I_WORD), dtype=np.int64)
        E = np.array(ext_matrix(cartan, omega, CASE_I_WORD), dtype=np.int64)
        W = np.array(W_ROWS, dtype=np.int64)
        cartan._cache[key] = (H, E, W)
    return cartan._cache[key]


NU_A5 = (1, 2, 2, 2, 1)

# the five linear constraints equivalent to |v| = p nu
_L_SUPPORTS = (
    (1, (3, 6, 9, 12, 15)),
    (2, (1, 3, 4, 6, 7, 9, 10, 12)),
    (2, (4, 6, 7, 8, 9, 10, 11, 12, 14)),
    (2, (2, 4, 5, 6, 7, 8, 9, 11)),
    (1, (5, 7, 9, 11, 13)),
)


def feasibility_defects(p: int, v: Sequence[int]) -> Tuple[int, ...]:
    """The values of the five constraint forms L_1..L_5 (all zero iff |v| = p nu)."""
    v = tuple(v)
    return tuple(
        c * p - sum(v[i - 1] for i in support) for c, support in _L_SUPPORTS
    )


def _check_delta_args(p: int, v, tau):
    v = tuple(int(x) for x in v)
    tau = tuple(int(x) for x in tau)
    if p < 0 or any(x < 0 for x in v) or any(x < 0 for x in tau):
        raise ValueError("p, v and tau must be nonnegative")
    if len(v) != 15 or len(tau) != 17:
        raise ValueError("v must have 15 entries and tau 17")
    if any(feasibility_defects(p, v)):
        raise ValueError("|v| = p nu fails: constraint defects "
                         f"{feasibility_defects(p, v)}")
    return v, tau


def delta(p: int, v: Sequence[int], tau: Sequence[int]) -> int:
    """The semismallness defect for the case-I five-step flags.

    Delta = -4p^2 + u E u^T - 2p u s^T - 2 (u - p s - v) H v^T with
    u = v + p y + tau W; nonnegative on the feasible domain, zero exactly
    when tau = 0 and u = 2(p-s)y + sz.
    """
    v, tau = _check_delta_args(p, v, tau)
    H, E, W = _a5_matrices()
    va = np.array(v, dtype=np.int64)
    ta = np.array(tau, dtype=np.int64)
    y = np.array(Y_VEC, dtype=np.int64)
    s = np.array(S_VEC, dtype=np.int64)
    u = va + p * y + ta @ W
    val = (-4 * p * p + u @ E @ u - 2 * p * (u @ s)
           - 2 * ((u - p * s - va) @ H @ va))
    return int(val)


def delta_stepwise(p: int, v: Sequence[int], tau: Sequence[int]) -> int:
    """Independent route to the same defect: flag-bundle dimension minus twice
    the fiber dimension (Grassmannian steps plus surjection counts) minus the
    orbit dimension."""
    v, tau = _check_delta_args(p, v, tau)
    cartan = cartan_data("A5")
    H, E, W = _a5_matrices()
    va = np.array(v, dtype=np.int64)
    ta = np.array(tau, dtype=np.int64)
    y = np.array(Y_VEC, dtype=np.int64)
    s = np.array(S_VEC, dtype=np.int64)
    u = va + p * y + ta @ W
    j, a = eta_flag_type(p) if p else ((), ())
    flag = flag_bundle_dim(cartan, j, a, CASE_I_ARROWS)
    fiber = (p * (int(u[0]) + int(u[1])) - 2 * p * p
             + int((u - p * s) @ H @ va) - int(va @ H @ va))
    d = tuple(2 * p * x for x in NU_A5)
    orbit = rep_space_dim(cartan, CASE_I_ARROWS, d) - int(u @ E @ u)
    return flag - 2 * fiber - orbit


def feasible_v(p: int, cap: int) -> List[Tuple[int, ...]]:
    """All v in {0..cap}^15 with |v| = p nu, by constraint-pruned DFS."""
    targets = [c * p for c, _ in _L_SUPPORTS]
    supports = [set(sup) for _, sup in _L_SUPPORTS]
    out: List[Tuple[int, ...]] = []
    v = [0] * 15

    def rec(idx: int, sums: List[int]) -> None:
        if idx == 16:
            if sums == targets:
                out.append(tuple(v))
            return
        touch = [k for k in range(5) if idx in supports[k]]
        remaining = [
            sum(1 for i in range(idx, 16) if i in supports[k]) for k in range(5)
        ]
        for val in range(cap + 1):
            ok = True
            for k in touch:
                if sums[k] + val > targets[k]:
                    ok = False
                    break
            if not ok:
                break
            # prune when a constraint can no longer be reached
            reachable = all(
                sums[k] + (val if k in touch else 0)
                + (remaining[k] - (1 if k in touch else 0)) * cap >= targets[k]
                for k in range(5)
            )
            if reachable:
                v[idx - 1] = val
                rec(idx + 1, [sums[k] + (val if k in touch else 0) for k in range(5)])
        v[idx - 1] = 0

    rec(1, [0] * 5)
    return out


def delta_scan(p_values: Sequence[int] = (0, 1, 2), v_cap: int = 2,
               tau_cap: int = 1, cross_check: bool = True):
    """Exhaustive scan of the defect over a feasible grid.

    Returns (total points, minimum, zero locus as a list of (p, v, tau)).
    The closed formula is evaluated vectorized over tau; with cross_check
    the stepwise decomposition is evaluated the same way and compared.
    """
    H, E, W = _a5_matrices()
    cartan = cartan_data("A5")
    y = np.array(Y_VEC, dtype=np.int64)
    s = np.array(S_VEC, dtype=np.int64)
    taus = np.array(
        np.meshgrid(*[np.arange(tau_cap + 1)] * 17, indexing="ij"),
        dtype=np.int64).reshape(17, -1).T
    tw = taus @ W
    q2 = np.einsum("ij,jk,ik->i", tw, E, tw)
    EET = E + E.T
    total = 0
    minimum = None
    zeros: List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]] = []
    for p in p_values:
        flag = None
        if cross_check:
            j, a = eta_flag_type(p) if p else ((), ())
            flag = flag_bundle_dim(cartan, j, a, CASE_I_ARROWS)
            dim_e = rep_space_dim(cartan, CASE_I_ARROWS,
                                  tuple(2 * p * x for x in NU_A5))
        for v in feasible_v(p, v_cap):
            va = np.array(v, dtype=np.int64)
            base = va + p * y
            d0 = int(-4 * p * p + base @ E @ base - 2 * p * (base @ s)
                     - 2 * ((base - p * s - va) @ H @ va))
            lin = W @ (EET @ base - 2 * p * s - 2 * (H @ va))
            vals = d0 + taus @ lin + q2
            if cross_check:
                u = base[None, :] + tw
                fiber = (p * (u[:, 0] + u[:, 1]) - 2 * p * p
                         + (u - p * s) @ (H @ va) - int(va @ H @ va))
                orbit = dim_e - np.einsum("ij,jk,ik->i", u, E, u)
                alt = flag - 2 * fiber - orbit
                if not np.array_equal(vals, alt):
                    raise AssertionError("closed formula and stepwise "
                                         "decomposition disagree")
            total += vals.shape[0]
            m = int(vals.min())
            if minimum is None or m < minimum:
                minimum = m
            for idx in np.nonzero(vals == 0)[0]:
                zeros.append((p, v, tuple(int(x) for x in taus[idx])))
    return total, minimum, zeros


def expected_zero_locus(p_values: Sequence[int] = (0, 1, 2)):
    """The classified equality locus: tau = 0, u = 2(p-s)y + sz, v = u - py."""
    out = []
    for p in p_values:
        for s in range(p + 1):
            v = tuple((p - s) * yv + s * (zv - yv)
                      for yv, zv in zip(Y_VEC, Z_VEC))
            out.append((p, v, (0,) * 17))
    return out


# ------------------------------------------------------------- cone search

def cone_membership(target: Sequence[int], bound: int = 8,
                    node_budget: int = 500_000) -> Optional[Tuple[int, ...]]:
    """Search for target = sum_k c_k w_k with c in {0..bound}^17.

    Returns the coefficients, or None when the bounded box holds no witness.
    Exceeding the node budget raises SearchBudgetExceeded, which is distinct
    from a definitive None.
    """
    target = tuple(int(x) for x in target)
    if len(target) != 15:
        raise ValueError("target must have 15 entries")
    rows = W_ROWS
    # columns whose last touching generator is k force early pruning
    last = [max(k for k in range(17) if rows[k][col]) for col in range(15)]
    cols_of = [[c for c in range(15) if last[c] == k] for k in range(17)]
    budget = [node_budget]

    def rec(k: int, residual: List[int]) -> Optional[List[int]]:
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchBudgetExceeded(f"cone search exceeded {node_budget} nodes")
        if k == 17:
            return [] if not any(residual) else None
        row = rows[k]
        forced = None
        for col in cols_of[k]:
            if row[col]:
                q, r = divmod(residual[col], row[col])
                if r or q < 0 or q > bound:
                    return None
                if forced is None:
                    forced = q
                elif forced != q:
                    return None
        candidates = range(bound + 1) if forced is None else (forced,)
        for c in candidates:
            new_res = [residual[t] - c * row[t] for t in range(15)]
            if any(new_res[col] for col in cols_of[k]):
                continue
            got = rec(k + 1, new_res)
            if got is not None:
                return [c] + got
        return None

    got = rec(0, list(target))
    return tuple(got) if got is not None else None
