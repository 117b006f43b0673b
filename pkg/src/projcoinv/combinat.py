"""Compositions, partitions, multiset words, lattice paths and standard Young tableaux.

Positions are 1-indexed throughout: position ``i`` is a descent of a word
``w_1 ... w_n`` when ``w_i > w_{i+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence


def parse_composition(text: str) -> tuple[int, ...]:
    parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    check_composition(parts)
    return parts


def parse_partition(text: str) -> tuple[int, ...]:
    parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    check_partition(parts)
    return parts


def check_composition(alpha: Sequence[int]) -> None:
    if not alpha or any(a < 1 for a in alpha):
        raise ValueError(f"not a composition: {tuple(alpha)}")


def check_partition(lam: Sequence[int]) -> None:
    if not lam or any(a < 1 for a in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {tuple(lam)}")


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""

    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return tuple(rec(n, n))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """Compositions of ``n`` in lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(sorted(out))


def multinomial(alpha: Sequence[int]) -> int:
    return factorial(sum(alpha)) // prod(factorial(a) for a in alpha)


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0] if lam else 0))


# words ---------------------------------------------------------------------


def enumerate_words(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """All words using letter ``j`` exactly ``alpha[j-1]`` times, lexicographically."""
    word = [j + 1 for j, a in enumerate(alpha) for _ in range(a)]
    out = [tuple(word)]
    n = len(word)
    while True:
        # next multiset permutation in lexicographic order
        i = n - 2
        while i >= 0 and word[i] >= word[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = n - 1
        while word[j] <= word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1:] = reversed(word[i + 1:])
        out.append(tuple(word))


def descent_set(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def word_stats(w: Sequence[int]) -> tuple[tuple[int, ...], int, int]:
    """``(Des(w), des(w), maj(w))``."""
    des = descent_set(w)
    return des, len(des), sum(des)


def word_str(w: Sequence[int]) -> str:
    return "".join(str(x) for x in w)


def parse_word(text: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in text)


def permutations(n: int) -> list[tuple[int, ...]]:
    return enumerate_words((1,) * n)


# lattice paths -----------------------------------------------------------


def word_to_path(w: Sequence[int], k: int | None = None) -> list[tuple[int, ...]]:
    """Lattice path ``l(0), ..., l(n)``: step ``i`` adds the unit vector ``e_{w_i}``."""
    k = k if k is not None else max(w, default=0)
    point = [0] * k
    path = [tuple(point)]
    for letter in w:
        point[letter - 1] += 1
        path.append(tuple(point))
    return path


def path_to_word(path: Sequence[Sequence[int]]) -> tuple[int, ...]:
    if any(x != 0 for x in path[0]):
        raise ValueError("path must start at the origin")
    word = []
    for a, b in zip(path, path[1:]):
        diff = [y - x for x, y in zip(a, b)]
        if sorted(diff) != [0] * (len(diff) - 1) + [1]:
            raise ValueError("each step must add one standard unit vector")
        word.append(diff.index(1) + 1)
    return tuple(word)


def path_descent_points(path: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Points ``l(i)`` at the descent positions ``i`` of the underlying word."""
    w = path_to_word(path)
    return [tuple(path[i]) for i in descent_set(w)]


# standard Young tableaux -------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row_of(self) -> dict[int, int]:
        return {x: i for i, row in enumerate(self.rows) for x in row}

    def descent_set(self) -> tuple[int, ...]:
        """Entries ``i`` such that ``i+1`` sits in a strictly lower row."""
        where = self.row_of()
        return tuple(i for i in range(1, self.size) if where[i + 1] > where[i])

    def des(self) -> int:
        return len(self.descent_set())

    def maj(self) -> int:
        return sum(self.descent_set())

    def is_standard(self) -> bool:
        entries = sorted(x for row in self.rows for x in row)
        if entries != list(range(1, self.size + 1)):
            return False
        for r, row in enumerate(self.rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
            if r and any(row[c] <= self.rows[r - 1][c] for c in range(len(row))):
                return False
        return all(a >= b for a, b in zip(self.shape, self.shape[1:]))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def standard_tableaux(lam: Sequence[int]) -> list[Tableau]:
    """All SYT of shape ``lam``, placing 1, 2, ..., n one cell at a time."""
    lam = tuple(lam)
    n = sum(lam)
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in lam]

    def place(v: int) -> None:
        if v > n:
            out.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for i, target in enumerate(lam):
            length = len(rows[i])
            if length < target and (i == 0 or len(rows[i - 1]) > length):
                rows[i].append(v)
                place(v + 1)
                rows[i].pop()

    place(1)
    return out


def enumerate_syt(lam: Sequence[int]) -> list[tuple[Tableau, int, int]]:
    check_partition(lam)
    return [(T, T.des(), T.maj()) for T in standard_tableaux(lam)]


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    """Cycle lengths of a one-line permutation of ``1..n``, as a partition."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_representative(mu: Sequence[int]) -> tuple[int, ...]:
    """One-line permutation with consecutive cycles ``(1..mu_1)(mu_1+1..)...``."""
    perm = []
    start = 1
    for m in mu:
        perm.extend(range(start + 1, start + m))
        perm.append(start)
        start += m
    return tuple(perm)
