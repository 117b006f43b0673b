"""Graded pieces of ``P_alpha = T_alpha / <f_0, ..., f_n>`` by exact linear algebra.

The piece of bidegree ``(r, e)`` is the quotient of the monomial span
``(T_alpha)_{r,e}`` by the span of all products ``f_l * m`` with ``m`` a
monomial of bidegree ``(r - 1, e - l)``.  Each piece is assembled and
eliminated independently and cached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Sequence

from .combinat import check_composition, cycle_type
from .exact.linalg import Echelon, ReducedBasis
from .exact.poly import BiPoly, Coeff, normalize
from .segre import (
    action_function,
    generator_increment,
    generators,
    piece_mults,
    young_subgroup,
)


class HilbertCapError(RuntimeError):
    """Nonzero quotient pieces persist at the first-degree cap."""


@lru_cache(maxsize=None)
def _increments_by_level(alpha: tuple[int, ...]) -> dict[int, tuple[tuple[int, ...], ...]]:
    out: dict[int, list[tuple[int, ...]]] = {}
    for g in generators(alpha):
        out.setdefault(sum(g), []).append(generator_increment(alpha, g))
    return {l: tuple(v) for l, v in out.items()}


@dataclass
class QuotientPiece:
    alpha: tuple[int, ...]
    r: int
    e: int
    basis: tuple[tuple[int, ...], ...]
    index: dict[tuple[int, ...], int] = field(repr=False)
    echelon: Echelon = field(repr=False)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis)

    @property
    def ideal_rank(self) -> int:
        return self.echelon.rank

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.ideal_rank

    @cached_property
    def reduced(self) -> ReducedBasis:
        return ReducedBasis(self.echelon)

    def column(self, mults: tuple[int, ...]) -> int:
        return self.index[mults]

    def standard_columns(self) -> list[int]:
        """Columns without a pivot: their monomials give a basis of the quotient piece."""
        return [c for c in range(self.ambient_dim) if c not in self.echelon.pivots]

    def normal_form(self, vec: dict[int, Coeff]) -> dict[int, Coeff]:
        return self.reduced.normal_form(vec)


def spanning_vectors(alpha: tuple[int, ...], r: int, e: int, index: dict) -> list[dict[int, int]]:
    """Vectors ``f_l * m`` spanning the ideal piece, in column coordinates."""
    if r < 1:
        return []
    lower = piece_mults(alpha, r - 1)
    out = []
    for l, incs in _increments_by_level(alpha).items():
        for m in lower.get(e - l, ()):
            vec: dict[int, int] = {}
            for inc in incs:
                col = index[tuple(a + b for a, b in zip(m, inc))]
                vec[col] = vec.get(col, 0) + 1
            out.append(vec)
    return out


@lru_cache(maxsize=None)
def quotient_piece(alpha: tuple[int, ...], r: int, e: int) -> QuotientPiece:
    alpha = tuple(alpha)
    check_composition(alpha)
    basis = piece_mults(alpha, r).get(e, ()) if r >= 0 else ()
    index = {m: i for i, m in enumerate(basis)}
    echelon = Echelon(spanning_vectors(alpha, r, e, index) if basis else [])
    return QuotientPiece(alpha, r, e, basis, index, echelon)


def ideal_rank(alpha: Sequence[int], r: int, e: int) -> int:
    return quotient_piece(tuple(alpha), r, e).ideal_rank


def quotient_dim(alpha: Sequence[int], r: int, e: int) -> int:
    return quotient_piece(tuple(alpha), r, e).dim


def max_q_degree(alpha: Sequence[int], r: int) -> int:
    return r * sum(alpha)


def quotient_table(alpha: Sequence[int]) -> dict[tuple[int, int], int]:
    """Nonzero dimensions of ``(P_alpha)_{r,e}``.

    Rows are computed for r = 0, 1, ... until a row vanishes; P is generated
    in first degree 1, so a zero row kills everything above it.  The number of
    descents of a word is at most n - 1, so a nonzero row at r = n means the
    generators fail to cut the algebra down, and is reported as an error.
    """
    alpha = tuple(alpha)
    check_composition(alpha)
    n = sum(alpha)
    table: dict[tuple[int, int], int] = {}
    for r in range(n + 1):
        row = {e: quotient_dim(alpha, r, e) for e in range(max_q_degree(alpha, r) + 1)}
        row = {e: d for e, d in row.items() if d}
        if not row:
            return table
        if r == n:
            raise HilbertCapError(f"nonzero quotient pieces at first degree {n} for alpha={alpha}: {row}")
        table.update({(r, e): d for e, d in row.items()})
    return table


def hilbert_P(alpha: Sequence[int]) -> BiPoly:
    return BiPoly(quotient_table(alpha))


def quotient_basis(alpha: Sequence[int]) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    """Standard monomials (non-pivot columns) spanning each nonzero piece of ``P_alpha``."""
    alpha = tuple(alpha)
    out = {}
    for (r, e) in quotient_table(alpha):
        piece = quotient_piece(alpha, r, e)
        out[(r, e)] = [piece.basis[c] for c in piece.standard_columns()]
    return out


# traces ----------------------------------------------------------------------------


def _action(alpha: tuple[int, ...], perm: Sequence[int], kind: str | None) -> Callable:
    return action_function(alpha, perm, kind)


def _inverse(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p - 1] = i + 1
    return tuple(inv)


def ambient_trace(alpha: Sequence[int], perm: Sequence[int], r: int, e: int, kind: str | None = None) -> int:
    """Number of monomials of ``(T_alpha)_{r,e}`` fixed by the permutation."""
    alpha = tuple(alpha)
    act = _action(alpha, perm, kind)
    return sum(1 for m in piece_mults(alpha, r).get(e, ()) if act(m) == m)


def ideal_trace(alpha: Sequence[int], perm: Sequence[int], r: int, e: int, kind: str | None = None) -> Coeff:
    """Trace of the permutation on the (stable) ideal piece.

    With ``B`` the reduced echelon basis of the ideal piece, ``g B = B C``
    and the coordinates of a vector of the span are its pivot entries, so
    ``C[c, c]`` is the entry of ``g * B_c`` at pivot ``c``; that entry is
    ``B_c`` at the column ``g^{-1}(c)``.
    """
    alpha = tuple(alpha)
    piece = quotient_piece(alpha, r, e)
    if not piece.ideal_rank:
        return 0
    act_inv = _action(alpha, _inverse(perm), kind)
    rows = piece.reduced.rows
    total: Coeff = 0
    for c, row in rows.items():
        src = piece.index[act_inv(piece.basis[c])]
        total += row.get(src, 0)
    return normalize(total)


def trace_on_quotient(alpha: Sequence[int], perm: Sequence[int], r: int, e: int, kind: str | None = None) -> Coeff:
    return normalize(ambient_trace(alpha, perm, r, e, kind) - ideal_trace(alpha, perm, r, e, kind))


def trace_by_normal_forms(alpha: Sequence[int], perm: Sequence[int], r: int, e: int, kind: str | None = None) -> Coeff:
    """Same trace computed on the standard-monomial basis of the quotient piece."""
    alpha = tuple(alpha)
    piece = quotient_piece(alpha, r, e)
    act = _action(alpha, perm, kind)
    total: Coeff = 0
    for c in piece.standard_columns():
        image = piece.index[act(piece.basis[c])]
        total += piece.normal_form({image: 1}).get(c, 0)
    return normalize(total)


def graded_trace(alpha: Sequence[int], perm: Sequence[int], kind: str | None = None) -> BiPoly:
    """``sum_{r,e} tr(g | (P_alpha)_{r,e}) t^r q^e``."""
    alpha = tuple(alpha)
    terms = {}
    for (r, e) in quotient_table(alpha):
        terms[(r, e)] = trace_on_quotient(alpha, perm, r, e, kind)
    return BiPoly(terms)


def invariant_dim(n: int, alpha: Sequence[int], r: int, e: int) -> int:
    """Dimension of the ``S_alpha``-invariants of ``(P_n)_{r,e}`` by averaging traces."""
    alpha = tuple(alpha)
    check_composition(alpha)
    if sum(alpha) != n:
        raise ValueError(f"{alpha} is not a composition of {n}")
    ones = (1,) * n
    cache: dict[tuple[int, ...], Coeff] = {}
    total: Coeff = 0
    count = 0
    for g in young_subgroup(alpha):
        mu = cycle_type(g)
        if mu not in cache:
            cache[mu] = trace_on_quotient(ones, g, r, e, "sn")
        total += cache[mu]
        count += 1
    value = Fraction(total, count)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral invariant dimension {value}")
    return value.numerator


def invariant_table(n: int, alpha: Sequence[int]) -> BiPoly:
    """All invariant dimensions of ``P_n`` under ``S_alpha`` as a polynomial in t, q."""
    ones = (1,) * n
    return BiPoly({(r, e): invariant_dim(n, alpha, r, e) for (r, e) in quotient_table(ones)})


def socle(alpha: Sequence[int]) -> tuple[tuple[int, int], int]:
    """Top bidegree of ``P_alpha`` (largest r, then largest e) and its dimension."""
    table = quotient_table(alpha)
    top = max(table)
    return top, table[top]
