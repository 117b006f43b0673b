"""Monomial model of the bigraded Segre coordinate rings ``T_alpha``.

A monomial of first degree ``r`` in ``T_alpha`` is ``zeta^r prod xi_{i,j}^{c_{i,j}}``:
for each factor ``i`` a partition with at most ``r`` parts, all ``<= alpha_i``.
It is stored as ``(r, c)`` where ``c`` concatenates the part multiplicities
``(c_{1,1}, ..., c_{1,alpha_1}, c_{2,1}, ...)``; equivalently a lattice point
of ``r * Delta_alpha``.  The Segre relations then hold by construction.

For ``alpha = (1^n)`` the vector ``c`` is the exponent vector of
``xi_1 ... xi_n`` and the generator ``x_I`` is ``(1, indicator of I)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Mapping, Sequence

from .combinat import check_composition
from .exact.poly import Coeff, normalize


def block_offsets(alpha: Sequence[int]) -> tuple[int, ...]:
    out, acc = [], 0
    for a in alpha:
        out.append(acc)
        acc += a
    return tuple(out)


@dataclass(frozen=True, order=False)
class SegreMonomial:
    alpha: tuple[int, ...]
    r: int
    mults: tuple[int, ...]

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        """One partition per factor (nonzero parts, weakly decreasing)."""
        out = []
        for off, a in zip(block_offsets(self.alpha), self.alpha):
            lam = []
            for j in range(a, 0, -1):
                lam += [j] * self.mults[off + j - 1]
            out.append(tuple(lam))
        return tuple(out)

    @classmethod
    def from_parts(cls, alpha: Sequence[int], r: int, parts: Sequence[Sequence[int]]) -> SegreMonomial:
        alpha = tuple(alpha)
        if len(parts) != len(alpha):
            raise ValueError("one partition per factor")
        mults = []
        for a, lam in zip(alpha, parts):
            if len(lam) > r or any(p < 1 or p > a for p in lam):
                raise ValueError(f"partition {tuple(lam)} does not fit an {r} x {a} box")
            mults += [sum(1 for p in lam if p == j) for j in range(1, a + 1)]
        return cls(alpha, r, tuple(mults))

    @property
    def q_degree(self) -> int:
        return sum(c * w for c, w in zip(self.mults, _weights(self.alpha)))

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.r, self.q_degree)

    def sort_key(self) -> tuple[int, ...]:
        """Concatenated partitions, each zero-padded to length ``r``."""
        key: list[int] = []
        for lam in self.parts:
            key += list(lam) + [0] * (self.r - len(lam))
        return tuple(key)

    def exponents(self) -> tuple[int, ...]:
        """Exponents of the xi variables (for ``alpha = (1^n)``: of xi_1..xi_n)."""
        return self.mults

    def __mul__(self, other: SegreMonomial) -> SegreMonomial:
        if other.alpha != self.alpha:
            raise ValueError("monomials over different compositions")
        return SegreMonomial(self.alpha, self.r + other.r, tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __str__(self) -> str:
        body = "|".join(",".join(str(p) for p in lam) for lam in self.parts)
        return f"r={self.r}; [{body}]"

    def to_json(self) -> dict:
        return {"r": self.r, "parts": [list(lam) for lam in self.parts]}


@lru_cache(maxsize=None)
def _weights(alpha: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(j for a in alpha for j in range(1, a + 1))


def unit(alpha: Sequence[int]) -> SegreMonomial:
    alpha = tuple(alpha)
    return SegreMonomial(alpha, 0, (0,) * sum(alpha))


# generators y_I --------------------------------------------------------------


@lru_cache(maxsize=None)
def generators(alpha: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All ``I = (j_1, ..., j_k)`` with ``0 <= j_i <= alpha_i``, lexicographically."""
    return tuple(product(*(range(a + 1) for a in alpha)))


@lru_cache(maxsize=None)
def generator_increment(alpha: tuple[int, ...], gen: tuple[int, ...]) -> tuple[int, ...]:
    inc = [0] * sum(alpha)
    for off, j in zip(block_offsets(alpha), gen):
        if j:
            inc[off + j - 1] += 1
    return tuple(inc)


def generator_monomial(alpha: Sequence[int], gen: Sequence[int]) -> SegreMonomial:
    alpha = tuple(alpha)
    gen = tuple(gen)
    if len(gen) != len(alpha) or any(j < 0 or j > a for j, a in zip(gen, alpha)):
        raise ValueError(f"{gen} is not a sub-multiset of M_{alpha}")
    return SegreMonomial(alpha, 1, generator_increment(alpha, gen))


def multiply_generator(gen: Sequence[int], m: SegreMonomial) -> SegreMonomial:
    """``y_I * m``: insert part ``j_i`` into the i-th partition and raise ``r``."""
    inc = generator_increment(m.alpha, tuple(gen))
    return SegreMonomial(m.alpha, m.r + 1, tuple(a + b for a, b in zip(m.mults, inc)))


def subset_generator(n: int, subset: Iterable[int]) -> tuple[int, ...]:
    """``x_I`` for ``I`` a subset of ``{1..n}``, as an indicator tuple."""
    ind = [0] * n
    for i in subset:
        ind[i - 1] = 1
    return tuple(ind)


# graded pieces -----------------------------------------------------------------


def _block_points(a: int, r: int) -> list[tuple[int, ...]]:
    """Multiplicity vectors (c_1..c_a) with sum <= r."""
    if a == 0:
        return [()]
    out = []
    for first in range(r + 1):
        for rest in _block_points(a - 1, r - first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def piece_mults(alpha: tuple[int, ...], r: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Multiplicity vectors of ``(T_alpha)_r`` grouped by q-degree, canonically ordered."""
    weights = _weights(alpha)
    blocks = [_block_points(a, r) for a in alpha]
    by_e: dict[int, list[tuple[int, ...]]] = {}
    for combo in product(*blocks):
        mults = tuple(x for block in combo for x in block)
        e = sum(c * w for c, w in zip(mults, weights))
        by_e.setdefault(e, []).append(mults)
    out = {}
    for e in sorted(by_e):
        out[e] = tuple(sorted(by_e[e], key=lambda m: SegreMonomial(alpha, r, m).sort_key()))
    return out


def piece_basis(alpha: Sequence[int], r: int) -> dict[int, list[SegreMonomial]]:
    """Monomial basis of ``(T_alpha)_r`` grouped by q-degree."""
    alpha = tuple(alpha)
    check_composition(alpha)
    return {e: [SegreMonomial(alpha, r, m) for m in ms] for e, ms in piece_mults(alpha, r).items()}


def piece_census(alpha: Sequence[int], r: int) -> list[int]:
    """Dimensions of ``(T_alpha)_{r,e}`` for e = 0, 1, ...."""
    pieces = piece_mults(tuple(alpha), r)
    top = max(pieces)
    return [len(pieces.get(e, ())) for e in range(top + 1)]


# algebra elements ----------------------------------------------------------------


class AlgebraElement:
    """Homogeneous element of first degree ``r``: a combination of monomials."""

    __slots__ = ("alpha", "r", "terms")

    def __init__(self, alpha: Sequence[int], r: int, terms: Mapping[SegreMonomial, Coeff]):
        self.alpha = tuple(alpha)
        self.r = r
        clean = {}
        for m, c in terms.items():
            if m.r != r or m.alpha != self.alpha:
                raise ValueError("all monomials must share alpha and first degree")
            c = normalize(c)
            if c:
                clean[m] = c
        self.terms = dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key()))

    @classmethod
    def from_monomial(cls, m: SegreMonomial, c: Coeff = 1) -> AlgebraElement:
        return cls(m.alpha, m.r, {m: c})

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if other.r != self.r:
            raise ValueError("adding elements of different first degree")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return AlgebraElement(self.alpha, self.r, out)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + other * -1

    def __mul__(self, other) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return AlgebraElement(self.alpha, self.r, {m: c * other for m, c in self.terms.items()})
        out: dict[SegreMonomial, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return AlgebraElement(self.alpha, self.r + other.r, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and (self.alpha, self.r) == (other.alpha, other.r)
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.alpha, self.r, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def q_degrees(self) -> set[int]:
        return {m.q_degree for m in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({m})" if c != 1 else f"({m})" for m, c in self.terms.items())

    def to_json(self) -> list:
        return [[m.to_json(), str(c)] for m, c in self.terms.items()]


def generator_element(alpha: Sequence[int], gen: Sequence[int]) -> AlgebraElement:
    return AlgebraElement.from_monomial(generator_monomial(alpha, gen))


def e_tilde(alpha: Sequence[int], l: int) -> AlgebraElement:
    """Sum of all generators ``y_I`` with ``|I| = l``."""
    alpha = tuple(alpha)
    check_composition(alpha)
    n = sum(alpha)
    if not 0 <= l <= n:
        raise ValueError(f"l must lie in 0..{n}")
    terms = {generator_monomial(alpha, g): 1 for g in generators(alpha) if sum(g) == l}
    return AlgebraElement(alpha, 1, terms)


def chi_alpha_image(alpha: Sequence[int], gen: Sequence[int]) -> AlgebraElement:
    """Image of ``y_I`` in ``T_n``: sum of ``x_{J_1 u ... u J_k}`` with ``J_i`` in block i, ``|J_i| = j_i``."""
    alpha = tuple(alpha)
    gen = tuple(gen)
    n = sum(alpha)
    ones = (1,) * n
    choices = []
    for off, a, j in zip(block_offsets(alpha), alpha, gen):
        if not 0 <= j <= a:
            raise ValueError(f"{gen} is not a sub-multiset of M_{alpha}")
        choices.append(list(combinations(range(off + 1, off + a + 1), j)))
    terms: dict[SegreMonomial, Coeff] = {}
    for pick in product(*choices):
        subset = [i for block in pick for i in block]
        m = generator_monomial(ones, subset_generator(n, subset))
        terms[m] = terms.get(m, 0) + 1
    return AlgebraElement(ones, 1, terms)


def chi_alpha_monomial(alpha: Sequence[int], gens: Sequence[Sequence[int]]) -> AlgebraElement:
    """Image of a product of generators under chi_alpha."""
    n = sum(alpha)
    out = AlgebraElement.from_monomial(unit((1,) * n))
    for g in gens:
        out = out * chi_alpha_image(alpha, g)
    return out


# group actions -----------------------------------------------------------------------


def permute_mults_sn(perm: Sequence[int], mults: tuple[int, ...]) -> tuple[int, ...]:
    """S_n on T_n: ``perm`` is one-line notation (1-indexed); coordinate i moves to perm(i)."""
    out = [0] * len(mults)
    for i, x in enumerate(mults):
        out[perm[i] - 1] = x
    return tuple(out)


def permute_mults_slots(alpha: tuple[int, ...], perm: Sequence[int], mults: tuple[int, ...]) -> tuple[int, ...]:
    """S_k on T_{(m^k)}: the partition in slot i moves to slot perm(i)."""
    m = alpha[0]
    out = [0] * len(mults)
    for i in range(len(alpha)):
        dest = perm[i] - 1
        out[dest * m:(dest + 1) * m] = mults[i * m:(i + 1) * m]
    return tuple(out)


def action_function(alpha: Sequence[int], perm: Sequence[int], kind: str | None = None):
    """Return ``mults -> mults`` for the S_n action (``kind='sn'``) or the slot action (``'slots'``)."""
    alpha = tuple(alpha)
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation")
    if kind is None:
        kind = "sn" if all(a == 1 for a in alpha) and len(perm) == len(alpha) else "slots"
    if kind == "sn":
        if any(a != 1 for a in alpha) or len(perm) != len(alpha):
            raise ValueError("the S_n action needs alpha = (1^n) and a permutation of n")
        return lambda mults: permute_mults_sn(perm, mults)
    if kind == "slots":
        if len(set(alpha)) != 1 or len(perm) != len(alpha):
            raise ValueError("the residual S_k action needs alpha = (m^k) and a permutation of k")
        return lambda mults: permute_mults_slots(alpha, perm, mults)
    raise ValueError(f"unknown action kind {kind!r}")


def group_action(perm: Sequence[int], x, kind: str | None = None):
    """Act on a :class:`SegreMonomial` or :class:`AlgebraElement`."""
    act = action_function(x.alpha, perm, kind)
    if isinstance(x, SegreMonomial):
        return SegreMonomial(x.alpha, x.r, act(x.mults))
    terms = {}
    for m, c in x.terms.items():
        terms[SegreMonomial(m.alpha, m.r, act(m.mults))] = c
    return AlgebraElement(x.alpha, x.r, terms)


def young_subgroup(alpha: Sequence[int]):
    """Iterate over the elements of ``S_alpha`` in one-line notation."""
    blocks = [list(permutations(range(off + 1, off + a + 1))) for off, a in zip(block_offsets(alpha), alpha)]
    for pick in product(*blocks):
        yield tuple(x for block in pick for x in block)
