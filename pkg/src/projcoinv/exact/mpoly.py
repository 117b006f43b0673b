"""Sparse multivariate polynomials over Q with named, weighted variables."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Mapping, Sequence

from .poly import Coeff, normalize


class Ring:
    """Polynomial ring Q[x_1, ..., x_m]; variable ``i`` has degree ``weights[i]``."""

    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None):
        self.names = tuple(names)
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.names)
        if len(self.weights) != len(self.names):
            raise ValueError("one weight per variable")
        self.nvars = len(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and (self.names, self.weights) == (other.names, other.weights)

    def __hash__(self) -> int:
        return hash((self.names, self.weights))

    def __repr__(self) -> str:
        return f"Ring({', '.join(self.names)})"

    def zero(self) -> MPoly:
        return MPoly(self, {})

    def one(self) -> MPoly:
        return self.const(1)

    def const(self, c: Coeff) -> MPoly:
        return MPoly(self, {(0,) * self.nvars: c})

    def var(self, name_or_index: str | int) -> MPoly:
        i = self.names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        exp = [0] * self.nvars
        exp[i] = 1
        return MPoly(self, {tuple(exp): 1})

    def gens(self) -> list[MPoly]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp: Sequence[int], c: Coeff = 1) -> MPoly:
        return MPoly(self, {tuple(exp): c})

    def exp_degree(self, exp: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All exponent vectors of weighted degree ``d``, in lex-descending order."""
        out: list[tuple[int, ...]] = []

        def rec(i: int, remaining: int, prefix: list[int]) -> None:
            if i == self.nvars:
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            w = self.weights[i]
            for e in range(remaining // w, -1, -1):
                prefix.append(e)
                rec(i + 1, remaining - w * e, prefix)
                prefix.pop()

        if d >= 0:
            rec(0, d, [])
        return out


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, ...], Coeff]):
        self.ring = ring
        self.terms = {e: normalize(c) for e, c in terms.items() if c}

    def _lift(self, other) -> MPoly:
        if isinstance(other, MPoly):
            return other
        return self.ring.const(other)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> MPoly:
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> MPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            return MPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MPoly:
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> int:
        return max((self.ring.exp_degree(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.ring.exp_degree(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> MPoly:
        return MPoly(self.ring, {e: c for e, c in self.terms.items() if self.ring.exp_degree(e) == d})

    def substitute(self, mapping: Mapping[int, MPoly]) -> MPoly:
        """Replace variable ``i`` by ``mapping[i]`` (same ring)."""
        out = self.ring.zero()
        for e, c in self.terms.items():
            term = self.ring.const(c)
            rest = list(e)
            for i, sub in mapping.items():
                if e[i]:
                    term = term * sub ** e[i]
                    rest[i] = 0
            out = out + term * MPoly(self.ring, {tuple(rest): 1})
        return out

    def evaluate(self, point: Sequence, one=1):
        """Evaluate at ``point`` in any ring whose elements support + and *."""
        acc = None
        for e, c in self.terms.items():
            val = one * c
            for x, k in zip(point, e):
                if k:
                    val = val * x ** k
            acc = val if acc is None else acc + val
        return acc if acc is not None else one * 0

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def leading_term(self) -> tuple[tuple[int, ...], Coeff]:
        """Lex-largest term (variables compared in ring order)."""
        e = max(self.terms)
        return e, self.terms[e]

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], Coeff]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def to_json(self) -> list[list]:
        return [[list(e), str(c)] for e, c in self]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self:
            mono = "*".join(
                (name if k == 1 else f"{name}^{k}")
                for name, k in zip(self.ring.names, e)
                if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"


def elementary_symmetric(ring: Ring, k: int, indices: Sequence[int] | None = None) -> MPoly:
    """e_k of the given variables (all variables by default)."""
    idx = list(range(ring.nvars)) if indices is None else list(indices)
    out = ring.zero()
    for subset in combinations(idx, k):
        exp = [0] * ring.nvars
        for i in subset:
            exp[i] = 1
        out = out + ring.monomial(exp)
    return out


def monomials_of_total_degree(nvars: int, d: int) -> Iterator[tuple[int, ...]]:
    for combo in combinations_with_replacement(range(nvars), d):
        exp = [0] * nvars
        for i in combo:
            exp[i] += 1
        yield tuple(exp)
