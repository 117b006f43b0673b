"""q-analogues, (des, maj) generating functions and refined Ehrhart counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb, prod
from typing import Sequence

from .combinat import check_composition, enumerate_words, word_stats
from .exact.poly import BiPoly, BiSeries, QPoly, inv_product_series, q_binomial, q_factorial

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """A lattice-point enumeration would exceed the configured budget."""


def q_multinomial(alpha: Sequence[int]) -> QPoly:
    """``[n]_q! / prod [alpha_i]_q!`` by exact polynomial division."""
    check_composition(alpha)
    den = QPoly.one()
    for a in alpha:
        den = den * q_factorial(a)
    return q_factorial(sum(alpha)).exact_div(den)


def A_alpha(alpha: Sequence[int]) -> BiPoly:
    """Sum over words ``w`` of the multiset of ``t^des(w) q^maj(w)``."""
    check_composition(alpha)
    terms: dict[tuple[int, int], int] = {}
    for w in enumerate_words(alpha):
        _, des, maj = word_stats(w)
        terms[(des, maj)] = terms.get((des, maj), 0) + 1
    return BiPoly(terms)


def des_polynomial(alpha: Sequence[int]) -> list[int]:
    """Coefficients of ``sum_w t^des(w)`` (Simon Newcomb numbers)."""
    counts: dict[int, int] = {}
    for w in enumerate_words(alpha):
        d = word_stats(w)[1]
        counts[d] = counts.get(d, 0) + 1
    return [counts.get(d, 0) for d in range(max(counts) + 1)]


@dataclass
class MacMahonReport:
    alpha: tuple[int, ...]
    order: int
    lhs: BiSeries
    rhs: BiSeries
    holds: bool
    mismatches: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "R": self.order,
            "holds": self.holds,
            "mismatched_t_degrees": self.mismatches,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }


def macmahon_check(alpha: Sequence[int], order: int) -> MacMahonReport:
    """Compare ``sum_r prod_i [r+a_i, a_i]_q t^r`` with ``A_alpha / prod_j (1 - t q^j)``."""
    check_composition(alpha)
    if order < 0:
        raise ValueError("R must be nonnegative")
    n = sum(alpha)
    lhs_rows = []
    for r in range(order + 1):
        row = QPoly.one()
        for a in alpha:
            row = row * q_binomial(r + a, a)
        lhs_rows.append(row)
    lhs = BiSeries(order, lhs_rows)
    rhs = BiSeries.from_bipoly(A_alpha(alpha), order) * inv_product_series(range(n + 1), order)
    mismatches = [r for r in range(order + 1) if lhs[r] != rhs[r]]
    return MacMahonReport(tuple(alpha), order, lhs, rhs, not mismatches, mismatches)


@dataclass(frozen=True)
class PolytopeSpec:
    """Product of simplices ``Delta_{d_1} x ... x Delta_{d_k}`` with an integer weight vector."""

    dims: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != sum(self.dims):
            raise ValueError("need one weight per coordinate")

    @classmethod
    def simplex(cls, n: int, weights: Sequence[int] | None = None) -> PolytopeSpec:
        return cls((n,), tuple(weights) if weights is not None else tuple(range(1, n + 1)))

    @classmethod
    def hypercube(cls, n: int, weights: Sequence[int] | None = None) -> PolytopeSpec:
        return cls((1,) * n, tuple(weights) if weights is not None else (1,) * n)

    @classmethod
    def segre(cls, alpha: Sequence[int]) -> PolytopeSpec:
        """``Delta_alpha`` with the grading vector ``(1..a_1, 1..a_2, ...)``."""
        return cls(tuple(alpha), default_weights(alpha))

    def lattice_point_count(self, r: int) -> int:
        return prod(comb(r + d, d) for d in self.dims)


def default_weights(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(j for a in alpha for j in range(1, a + 1))


def _simplex_points(d: int, r: int):
    """Lattice points of ``r * Delta_d``: nonnegative d-vectors with sum <= r."""
    if d == 0:
        yield ()
        return
    for first in range(r + 1):
        for rest in _simplex_points(d - 1, r - first):
            yield (first,) + rest


def q_ehrhart(spec: PolytopeSpec, r: int, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Laurent q-count ``sum_v q^{v . a}`` over lattice points of ``r * spec``.

    Returned as ``{exponent: count}`` because negative weights give negative
    exponents; use :func:`q_ehrhart_poly` when all weights are nonnegative.
    """
    if r < 0:
        raise ValueError("dilation must be nonnegative")
    total = spec.lattice_point_count(r)
    if total > budget:
        raise BudgetExceeded(f"{total} lattice points exceed the budget of {budget}")
    # each block contributes independently; enumerate per block then convolve
    out: dict[int, int] = {0: 1}
    offset = 0
    for d in spec.dims:
        w = spec.weights[offset:offset + d]
        offset += d
        block: dict[int, int] = {}
        for v in _simplex_points(d, r):
            e = sum(x * y for x, y in zip(v, w))
            block[e] = block.get(e, 0) + 1
        merged: dict[int, int] = {}
        for e1, c1 in out.items():
            for e2, c2 in block.items():
                merged[e1 + e2] = merged.get(e1 + e2, 0) + c1 * c2
        out = merged
    return dict(sorted(out.items()))


def q_ehrhart_brute(spec: PolytopeSpec, r: int, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Same count by scanning the whole box ``[0, r]^n`` (no block factorisation)."""
    n = len(spec.weights)
    if (r + 1) ** n > budget:
        raise BudgetExceeded(f"{(r + 1) ** n} box points exceed the budget of {budget}")
    out: dict[int, int] = {}
    for v in product(range(r + 1), repeat=n):
        offset = 0
        inside = True
        for d in spec.dims:
            if sum(v[offset:offset + d]) > r:
                inside = False
                break
            offset += d
        if inside:
            e = sum(x * y for x, y in zip(v, spec.weights))
            out[e] = out.get(e, 0) + 1
    return dict(sorted(out.items()))


def q_ehrhart_poly(spec: PolytopeSpec, r: int, budget: int = DEFAULT_BUDGET) -> QPoly:
    counts = q_ehrhart(spec, r, budget)
    if counts and min(counts) < 0:
        raise ValueError("negative weights give a Laurent polynomial; use q_ehrhart")
    top = max(counts, default=-1)
    return QPoly(counts.get(e, 0) for e in range(top + 1))


def segre_hilbert(
    alpha: Sequence[int], order: int, method: str = "closed_form", budget: int = DEFAULT_BUDGET
) -> BiSeries:
    """Bigraded Hilbert series of the Segre coordinate ring, up to ``t^order``."""
    check_composition(alpha)
    if method == "lattice":
        spec = PolytopeSpec.segre(alpha)
        return BiSeries(order, [q_ehrhart_poly(spec, r, budget) for r in range(order + 1)])
    if method == "closed_form":
        n = sum(alpha)
        return BiSeries.from_bipoly(A_alpha(alpha), order) * inv_product_series(range(n + 1), order)
    raise ValueError(f"unknown method {method!r}")


def eulerian_table(n: int) -> BiPoly:
    """``A_{(1^n)}(t, q)``, the (des, maj) distribution on permutations."""
    return A_alpha((1,) * n)
