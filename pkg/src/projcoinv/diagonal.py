"""Membership of the products ``prod_{i in I} a_i prod_{j not in I} b_j`` in the diagonal invariant ideal.

The ideal generated by positive-degree diagonal invariants is generated by
the polarized power sums ``p_{r,s} = sum_i a_i^r b_i^s`` with ``r + s <= n``.
A bihomogeneous target of bidegree ``(A, B)`` lies in the ideal exactly when
it is a combination of ``p_{r,s} * m`` with ``m`` a monomial of bidegree
``(A - r, B - s)``, so every test is one finite exact solve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .exact.linalg import solve_in_span
from .exact.mpoly import MPoly, Ring, monomials_of_total_degree
from .exact.poly import Coeff


@lru_cache(maxsize=None)
def diagonal_ring(n: int) -> Ring:
    return Ring([f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)])


def bidegree(f: MPoly) -> tuple[int, int]:
    """``(a-degree, b-degree)``; raises unless ``f`` is bihomogeneous and nonzero."""
    n = f.ring.nvars // 2
    degs = {(sum(e[:n]), sum(e[n:])) for e in f.terms}
    if len(degs) != 1:
        raise ValueError("target must be a nonzero bihomogeneous polynomial")
    return degs.pop()


@dataclass(frozen=True)
class PowerSum:
    r: int
    s: int
    poly: MPoly = field(compare=False)

    @property
    def label(self) -> str:
        return f"p{self.r}{self.s}" if max(self.r, self.s) < 10 else f"p({self.r},{self.s})"


def diagonal_invariant_generators(n: int) -> list[PowerSum]:
    """``p_{r,s}`` for ``1 <= r + s <= n``, by total degree and then decreasing ``r``."""
    ring = diagonal_ring(n)
    out = []
    for d in range(1, n + 1):
        for r in range(d, -1, -1):
            s = d - r
            poly = ring.zero()
            for i in range(n):
                exp = [0] * (2 * n)
                exp[i] = r
                exp[n + i] = s
                poly = poly + ring.monomial(exp)
            out.append(PowerSum(r, s, poly))
    return out


def bimonomials(n: int, a_deg: int, b_deg: int) -> list[tuple[int, ...]]:
    if a_deg < 0 or b_deg < 0:
        return []
    return [ea + eb for ea in monomials_of_total_degree(n, a_deg) for eb in monomials_of_total_degree(n, b_deg)]


@dataclass
class Membership:
    target: MPoly
    member: bool
    certificate: list[tuple[str, tuple[int, ...], Coeff]]
    verified: bool

    def to_json(self) -> dict:
        names = self.target.ring.names
        return {
            "target": str(self.target),
            "member": self.member,
            "verified": self.verified,
            "certificate": [
                {"generator": g, "multiplier": str(self.target.ring.monomial(m)), "coeff": str(c)}
                for g, m, c in self.certificate
            ],
            "variables": list(names),
        }


def membership(target: MPoly, n: int) -> Membership:
    """Exact test of ``target`` in the ideal, with a certificate when it is a member."""
    ring = diagonal_ring(n)
    if target.ring != ring:
        raise ValueError("target lives in a different ring")
    A, B = bidegree(target)
    products = []
    for g in diagonal_invariant_generators(n):
        for m in bimonomials(n, A - g.r, B - g.s):
            products.append((g, m, g.poly * ring.monomial(m)))
    x = solve_in_span(target.terms, [p.terms for _, _, p in products])
    if x is None:
        return Membership(target, False, [], True)
    certificate = [(g.label, m, c) for (g, m, _), c in zip(products, x) if c]
    total = ring.zero()
    for (g, m, p), c in zip(products, x):
        if c:
            total = total + p * c
    return Membership(target, True, certificate, total == target)


def subset_product(n: int, subset: Sequence[int]) -> MPoly:
    """``prod_{i in I} a_i prod_{j not in I} b_j`` (indices 1-based)."""
    exp = [0] * (2 * n)
    for i in range(1, n + 1):
        exp[i - 1 if i in subset else n + i - 1] = 1
    return diagonal_ring(n).monomial(exp)


@dataclass
class PhiReport:
    n: int
    all_zero: bool
    failures: list[list[int]]
    checks: list[dict]
    control: dict | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "all_zero": self.all_zero,
            "failures": self.failures,
            "checks": self.checks,
            "control": self.control,
        }


def nonvacuity_control(n: int = 2) -> Membership:
    """``a_1`` alone must not lie in the ideal for ``n >= 2``."""
    if n < 2:
        raise ValueError("the control needs n >= 2")
    ring = diagonal_ring(n)
    return membership(ring.var(0), n)


def phi_trivial_check(n: int) -> PhiReport:
    """All ``2^n`` subset products lie in the ideal; each certificate is re-expanded."""
    if n < 1:
        raise ValueError("n must be positive")
    checks, failures = [], []
    for size in range(n + 1):
        for subset in combinations(range(1, n + 1), size):
            res = membership(subset_product(n, subset), n)
            passed = res.member and res.verified
            checks.append(
                {"I": list(subset), "member": res.member, "verified": res.verified, "terms": len(res.certificate)}
            )
            if not passed:
                failures.append(list(subset))
    control = None
    if n >= 2:
        ctl = nonvacuity_control(n)
        control = {"target": str(ctl.target), "member": ctl.member, "ok": not ctl.member}
    all_zero = not failures
    return PhiReport(n, all_zero, failures, checks, control)
