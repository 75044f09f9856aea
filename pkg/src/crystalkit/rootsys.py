"""Finite simply-laced Cartan data and Weyl-group combinatorics.

Everything is exact integer arithmetic on plain tuples.  A weight is the
tuple of its coefficients on the simple roots, a coweight is the tuple of
its pairings with the simple roots, and a Weyl word is a tuple of 1-based
vertex labels.  Braid moves on reduced words carry Lusztig's piecewise
linear transformation of exponent vectors, which is the engine behind every
chart change in the rest of the package.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

Weight = Tuple[int, ...]
Coweight = Tuple[int, ...]
WeylWord = Tuple[int, ...]

# Closure guard: anything growing past this many roots is not a finite
# simply-laced system we are willing to handle (A6 has 21 positive roots).
_MAX_ROOTS = 300


class ReducedWordCapExceeded(RuntimeError):
    """Raised when enumerating reduced words of w0 would exceed the cap."""


def dot(gamma: Coweight, lam: Weight) -> int:
    """Pairing of a coweight with a weight, <gamma, lam>."""
    return sum(g * x for g, x in zip(gamma, lam))


def height(lam: Weight) -> int:
    return sum(lam)


def _flatten(images) -> tuple:
    return tuple(x for img in images for x in img)


def _type_a_matrix(n: int):
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


def _staircase_word(n: int) -> WeylWord:
    # (1, 2,1, 3,2,1, ..., n,n-1,...,1), the usual type-A reference word
    out: List[int] = []
    for i in range(1, n + 1):
        out.extend(range(i, 0, -1))
    return tuple(out)


_D4_MATRIX = (
    (2, -1, 0, 0),
    (-1, 2, -1, -1),
    (0, -1, 2, 0),
    (0, -1, 0, 2),
)

_D4_REFERENCE = (2, 1, 3, 4, 2, 1, 3, 4, 2, 1, 3, 4)


class CartanData:
    """A finite simply-laced Cartan matrix with a fixed reduced word for w0.

    Instances are immutable after construction; the `_cache` dict only holds
    derived data (chart caches, Weyl tables) that is computed once and then
    read concurrently.
    """

    def __init__(self, label: str, matrix, reference_word=None):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(matrix)
        if n == 0 or any(len(row) != n for row in matrix):
            raise ValueError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if matrix[i][i] != 2:
                raise ValueError("Cartan diagonal entries must equal 2")
            for j in range(n):
                if i != j and matrix[i][j] not in (0, -1):
                    raise ValueError("only simply-laced Cartan matrices are supported")
                if matrix[i][j] != matrix[j][i]:
                    raise ValueError("Cartan matrix must be symmetric")
        self.label = label
        self.matrix = matrix
        self.rank = n
        self.index_set = tuple(range(1, n + 1))
        self._cache: Dict = {}
        self.positive_roots = self._positive_root_closure()
        self.num_positive_roots = len(self.positive_roots)
        self.positive_roots_sorted = tuple(sorted(self.positive_roots))
        if reference_word is None:
            reference_word = self._lex_least_w0_word()
        reference_word = tuple(int(i) for i in reference_word)
        if len(reference_word) != self.num_positive_roots or not self.is_reduced(reference_word):
            raise ValueError("reference word must be a reduced word for w0")
        self.reference_word = reference_word
        self.reference_roots = self.roots_of_word(reference_word)
        self.reference_gammas = self.chamber_coweights_of_word(reference_word)
        self.star = self._star_involution()
        # w |-> w w0 turns the reference prefix chain into the prefix chain of
        # this word; reading Lusztig data backwards along it realizes sigma.
        self.sigma_word = tuple(self.star[i] for i in reversed(reference_word))
        if not self.is_reduced(self.sigma_word):
            raise AssertionError("starred reversal of the reference word must be reduced")

    def __repr__(self):
        return f"CartanData({self.label!r})"

    # ---------------------------------------------------------------- basics

    def a(self, i: int, j: int) -> int:
        return self.matrix[i - 1][j - 1]

    def simple_root(self, i: int) -> Weight:
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def fundamental_coweight(self, i: int) -> Coweight:
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def simple_coroot(self, i: int) -> Coweight:
        """alpha_i^vee as a pairing vector; its entries are the Cartan row."""
        return self.matrix[i - 1]

    def pairing(self, i: int, lam: Weight) -> int:
        """<alpha_i^vee, lam>."""
        row = self.matrix[i - 1]
        return sum(row[j] * lam[j] for j in range(self.rank))

    def reflect_weight(self, i: int, lam: Weight) -> Weight:
        p = self.pairing(i, lam)
        if p == 0:
            return tuple(lam)
        out = list(lam)
        out[i - 1] -= p
        return tuple(out)

    def reflect_coweight(self, i: int, gamma: Coweight) -> Coweight:
        # dual action, fixed by <s_i gamma, alpha_j> = <gamma, s_i alpha_j>
        ci = gamma[i - 1]
        if ci == 0:
            return tuple(gamma)
        row = self.matrix[i - 1]
        return tuple(gamma[j] - row[j] * ci for j in range(self.rank))

    def weight_of_coords(self, coords) -> Weight:
        tot = [0] * self.rank
        for nk, beta in zip(coords, self.reference_roots):
            if nk:
                for x in range(self.rank):
                    tot[x] += nk * beta[x]
        return tuple(tot)

    # ------------------------------------------------------------ words

    def is_reduced(self, word) -> bool:
        """Root-tracking test: every partial image s_{i1}..s_{i(k-1)} a_{ik} is positive."""
        word = tuple(word)
        for i in word:
            if i not in self.index_set:
                raise ValueError(f"letter {i!r} is not in the index set")
        for k in range(len(word)):
            beta = self.simple_root(word[k])
            for t in range(k - 1, -1, -1):
                beta = self.reflect_weight(word[t], beta)
            if max(beta) <= 0:
                return False
        return True

    def _check_w0_word(self, word) -> WeylWord:
        word = tuple(word)
        if len(word) != self.num_positive_roots:
            raise ValueError(
                f"expected a word of length {self.num_positive_roots}, got {len(word)}"
            )
        if not self.is_reduced(word):
            raise ValueError(f"{word} is not reduced")
        return word

    def roots_of_word(self, word) -> Tuple[Weight, ...]:
        """The enumeration beta_k = s_{i1}...s_{i(k-1)} alpha_{ik} of the positive roots."""
        word = self._check_w0_word(word)
        key = ("roots", word)
        if key not in self._cache:
            roots = []
            for k in range(len(word)):
                beta = self.simple_root(word[k])
                for t in range(k - 1, -1, -1):
                    beta = self.reflect_weight(word[t], beta)
                roots.append(beta)
            self._cache[key] = tuple(roots)
        return self._cache[key]

    def chamber_coweights_of_word(self, word) -> Tuple[Coweight, ...]:
        """The sequence gamma_k = -s_{i1}...s_{ik} omega_{ik}^vee attached to a word of w0."""
        word = self._check_w0_word(word)
        key = ("gammas", word)
        if key not in self._cache:
            gammas = []
            for k in range(len(word)):
                c = self.fundamental_coweight(word[k])
                for t in range(k, -1, -1):
                    c = self.reflect_coweight(word[t], c)
                gammas.append(tuple(-x for x in c))
            self._cache[key] = tuple(gammas)
        return self._cache[key]

    def braid_neighbors(self, word) -> List[WeylWord]:
        """All words one 2-move (commuting swap) or 3-move (braid) away."""
        word = tuple(word)
        if not self.is_reduced(word):
            raise ValueError(f"{word} is not reduced")
        return self._braid_moves_unchecked(word)

    def _braid_moves_unchecked(self, word: WeylWord) -> List[WeylWord]:
        out = []
        for k in range(len(word) - 1):
            i, j = word[k], word[k + 1]
            if i != j and self.matrix[i - 1][j - 1] == 0:
                out.append(word[:k] + (j, i) + word[k + 2:])
        for k in range(len(word) - 2):
            i, j, i2 = word[k], word[k + 1], word[k + 2]
            if i == i2 and i != j and self.matrix[i - 1][j - 1] == -1:
                out.append(word[:k] + (j, i, j) + word[k + 3:])
        return out

    def reduced_words_of_w0(self, cap: int = 500_000) -> Tuple[WeylWord, ...]:
        """Every reduced word for w0, by BFS over braid moves (Matsumoto).

        Aborts with ReducedWordCapExceeded once more than `cap` words exist;
        A5 already has 292864 of them, so only call this on small types.
        """
        key = ("all_words",)
        if key in self._cache:
            return self._cache[key]
        ref = self.reference_word
        seen = {ref}
        dq = deque([ref])
        while dq:
            w = dq.popleft()
            for nb in self._braid_moves_unchecked(w):
                if nb not in seen:
                    if len(seen) >= cap:
                        raise ReducedWordCapExceeded(
                            f"more than {cap} reduced words for w0 in type {self.label}"
                        )
                    seen.add(nb)
                    dq.append(nb)
        words = tuple(sorted(seen))
        self._cache[key] = words
        return words

    # ------------------------------------------------------------ Weyl group

    def _positive_root_closure(self) -> frozenset:
        simples = [self.simple_root(i) for i in self.index_set]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for r in frontier:
                for i in self.index_set:
                    s = self.reflect_weight(i, r)
                    if s not in seen:
                        seen.add(s)
                        new.append(s)
            frontier = new
            if len(seen) > 2 * _MAX_ROOTS:
                raise ValueError("root system is not of finite type (closure blew up)")
        return frozenset(r for r in seen if max(r) > 0)

    def _lex_least_w0_word(self) -> WeylWord:
        # greedy: always take the smallest letter that still lengthens
        images = [self.simple_root(i) for i in self.index_set]
        word: List[int] = []
        while True:
            for j in self.index_set:
                img = images[j - 1]
                if max(img) > 0:
                    row = self.matrix[j - 1]
                    images = [
                        tuple(images[t][x] - row[t] * img[x] for x in range(self.rank))
                        if row[t] else images[t]
                        for t in range(self.rank)
                    ]
                    word.append(j)
                    break
            else:
                return tuple(word)

    def _star_involution(self) -> Dict[int, int]:
        # alpha_{i*} = -w0 alpha_i
        star = {}
        for i in self.index_set:
            lam = self.simple_root(i)
            for t in range(self.num_positive_roots - 1, -1, -1):
                lam = self.reflect_weight(self.reference_word[t], lam)
            neg = tuple(-x for x in lam)
            matches = [j for j in self.index_set if self.simple_root(j) == neg]
            if len(matches) != 1:
                raise AssertionError("w0 does not permute the negative simple roots")
            star[i] = matches[0]
        return star

    def _weyl_tables(self):
        """BFS over W: reduced prefix words, root images, and the coweights
        w omega_i^vee for every element (the chamber-coweight presentations)."""
        key = ("weyl",)
        if key in self._cache:
            return self._cache[key]
        n = self.rank
        r0 = tuple(self.simple_root(i) for i in self.index_set)
        c0 = tuple(self.simple_coroot(i) for i in self.index_set)
        f0 = tuple(self.fundamental_coweight(i) for i in self.index_set)
        k0 = _flatten(r0)
        words = {k0: ()}
        images = {k0: r0}
        presentations = {k0: f0}
        frontier = [(r0, c0, f0, ())]
        while frontier:
            nxt = []
            for rimg, cimg, fimg, word in frontier:
                for j in self.index_set:
                    rj = rimg[j - 1]
                    if max(rj) <= 0:
                        continue
                    row = self.matrix[j - 1]
                    new_r = tuple(
                        tuple(rimg[t][x] - row[t] * rj[x] for x in range(n))
                        if row[t] else rimg[t]
                        for t in range(n)
                    )
                    k = _flatten(new_r)
                    if k in words:
                        continue
                    cj = cimg[j - 1]
                    new_c = tuple(
                        tuple(cimg[t][x] - row[t] * cj[x] for x in range(n))
                        if row[t] else cimg[t]
                        for t in range(n)
                    )
                    new_f = tuple(
                        tuple(fimg[t][x] - cj[x] for x in range(n)) if t == j - 1 else fimg[t]
                        for t in range(n)
                    )
                    w2 = word + (j,)
                    words[k] = w2
                    images[k] = new_r
                    presentations[k] = new_f
                    nxt.append((new_r, new_c, new_f, w2))
            frontier = nxt
        w0_key = max(words, key=lambda k: len(words[k]))
        tables = (words, presentations, images, k0, w0_key)
        self._cache[key] = tables
        return tables

    def weyl_prefix_words(self) -> Dict[tuple, WeylWord]:
        """One reduced word per Weyl element (BFS words are geodesic, hence reduced)."""
        return self._weyl_tables()[0]

    def chamber_presentations(self) -> Dict[tuple, Tuple[Coweight, ...]]:
        """For each Weyl element key, the tuple (w omega_1^vee, ..., w omega_n^vee)."""
        return self._weyl_tables()[1]

    def identity_key(self) -> tuple:
        return self._weyl_tables()[3]

    def w0_key(self) -> tuple:
        return self._weyl_tables()[4]

    def weyl_order(self) -> int:
        return len(self.weyl_prefix_words())

    def all_chamber_coweights(self) -> frozenset:
        """The set Gamma of W-conjugates of the fundamental coweights."""
        key = ("Gamma",)
        if key not in self._cache:
            seen = {self.fundamental_coweight(i) for i in self.index_set}
            frontier = list(seen)
            while frontier:
                new = []
                for g in frontier:
                    for i in self.index_set:
                        h = self.reflect_coweight(i, g)
                        if h not in seen:
                            seen.add(h)
                            new.append(h)
                frontier = new
            self._cache[key] = frozenset(seen)
        return self._cache[key]

    def gamma_order(self) -> Tuple[Coweight, ...]:
        """Gamma in a fixed deterministic order (used for BZ-data tuples)."""
        key = ("Gamma_order",)
        if key not in self._cache:
            self._cache[key] = tuple(sorted(self.all_chamber_coweights()))
        return self._cache[key]

    def count_reduced_words_of_w0(self) -> int:
        """Number of reduced words for w0, by the descent recursion over W."""
        key = ("word_count",)
        if key in self._cache:
            return self._cache[key]
        _, _, images, k0, w0_key = self._weyl_tables()
        n = self.rank
        memo = {k0: 1}

        def count(k: tuple) -> int:
            if k in memo:
                return memo[k]
            rimg = images[k]
            total = 0
            for j in self.index_set:
                rj = rimg[j - 1]
                if max(rj) > 0:
                    continue  # s_j ascends; only descents shorten
                row = self.matrix[j - 1]
                new_r = tuple(
                    tuple(rimg[t][x] - row[t] * rj[x] for x in range(n))
                    if row[t] else rimg[t]
                    for t in range(n)
                )
                total += count(_flatten(new_r))
            memo[k] = total
            return total

        result = count(w0_key)
        self._cache[key] = result
        return result


# --------------------------------------------------------------------------
# Braid-move transitions between charts
# --------------------------------------------------------------------------

def bring_to_front(cartan: CartanData, word: List[int], coords: List[int],
                   pos: int, j: int) -> None:
    """Braid word[pos:] in place until word[pos] == j.

    Requires j to be a left descent of the element spelled by word[pos:];
    this holds whenever word extends to a reduced word of w0 whose next
    letter is being aligned with a target word.  Exponent coordinates follow
    the 2-move (swap) and 3-move ((n1,n2,n3) -> (n2+n3-t, t, n1+n2-t) with
    t = min(n1,n3)) rules.
    """
    i0 = word[pos]
    if i0 == j:
        return
    if pos + 1 >= len(word):
        raise ValueError(f"letter {j} is not a left descent at position {pos}")
    bring_to_front(cartan, word, coords, pos + 1, j)
    if cartan.matrix[i0 - 1][j - 1] == 0:
        word[pos], word[pos + 1] = word[pos + 1], word[pos]
        coords[pos], coords[pos + 1] = coords[pos + 1], coords[pos]
    else:
        if pos + 2 >= len(word):
            raise ValueError(f"no room for a braid move at position {pos}")
        bring_to_front(cartan, word, coords, pos + 2, i0)
        n1, n2, n3 = coords[pos], coords[pos + 1], coords[pos + 2]
        t = n1 if n1 < n3 else n3
        coords[pos] = n2 + n3 - t
        coords[pos + 1] = t
        coords[pos + 2] = n1 + n2 - t
        word[pos] = j
        word[pos + 1] = i0
        word[pos + 2] = j


def transition_coords(cartan: CartanData, src_word, coords, dst_word) -> Tuple[int, ...]:
    """Transport an exponent vector from the chart of src_word to dst_word.

    Both words must be reduced words for w0 (not validated here; callers on
    the public surface validate).
    """
    w = list(src_word)
    c = list(coords)
    for k, j in enumerate(dst_word):
        if w[k] != j:
            bring_to_front(cartan, w, c, k, j)
    return tuple(c)


# --------------------------------------------------------------------------
# Presets
# --------------------------------------------------------------------------

def cartan_data(label: str) -> CartanData:
    """Named presets A1..A6 and D4 (singletons, so chart caches are shared)."""
    return _cartan_data(label.upper())


@lru_cache(maxsize=None)
def _cartan_data(label: str) -> CartanData:
    if label.startswith("A") and label[1:].isdigit():
        n = int(label[1:])
        if 1 <= n <= 6:
            return CartanData(label, _type_a_matrix(n), _staircase_word(n))
        raise ValueError("type A presets stop at A6; larger ranks are out of scope")
    if label == "D4":
        return CartanData("D4", _D4_MATRIX, _D4_REFERENCE)
    raise ValueError(f"unknown Cartan type {label!r} (presets: A1..A6, D4)")


SUPPORTED_TYPES = ("A1", "A2", "A3", "A4", "A5", "A6", "D4")
