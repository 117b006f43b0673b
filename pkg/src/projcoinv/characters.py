"""Symmetric-group characters and Frobenius characters of the quotients.

Characters of ``P_n`` come out three ways: from (des, maj) on standard
tableaux, from a Koszul product against principal specializations of Schur
functions, and by decomposing traces on the quotient pieces class by class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping, Sequence

from .combinat import check_partition, class_representative, enumerate_syt, partitions
from .exact.poly import BiPoly, BiSeries, Coeff, QPoly, koszul_product, normalize, q_binomial, q_int
from .quotient import ambient_trace, graded_trace, hilbert_P

MAX_TABLE_N = 8


def z_value(mu: Sequence[int]) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!`` of a permutation of cycle type ``mu``."""
    counts: dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    return prod(i**m * factorial(m) for i, m in counts.items())


def class_size(mu: Sequence[int]) -> int:
    return factorial(sum(mu)) // z_value(mu)


def _beta(lam: Sequence[int]) -> tuple[int, ...]:
    l = len(lam)
    return tuple(part + l - 1 - i for i, part in enumerate(lam))


def _from_beta(beta: Sequence[int]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    l = len(b)
    return tuple(x for x in (v - (l - 1 - i) for i, v in enumerate(b)) if x > 0)


@lru_cache(maxsize=None)
def mn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """``chi^lam(mu)`` by Murnaghan-Nakayama on beta-numbers (abacus moves)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} have different sizes")
    if not mu:
        return 1
    h, rest = mu[0], mu[1:]
    beads = set(_beta(lam))
    total = 0
    for b in beads:
        if b - h >= 0 and b - h not in beads:
            passed = sum(1 for x in beads if b - h < x < b)
            new = _from_beta((beads - {b}) | {b - h})
            total += (-1) ** passed * mn_character(new, rest)
    return total


@dataclass
class CharacterTable:
    n: int
    shapes: tuple[tuple[int, ...], ...]
    classes: tuple[tuple[int, ...], ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]
    z: tuple[int, ...]

    def chi(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        return self.values[self.shapes.index(tuple(lam))][self.classes.index(tuple(mu))]

    def inner(self, lam: Sequence[int], other: Sequence[int]) -> Fraction:
        i, j = self.shapes.index(tuple(lam)), self.shapes.index(tuple(other))
        return sum(
            (Fraction(a * b, zz) for a, b, zz in zip(self.values[i], self.values[j], self.z)),
            Fraction(0),
        )

    def is_orthonormal(self) -> bool:
        return all(
            self.inner(a, b) == (1 if a == b else 0) for a in self.shapes for b in self.shapes
        )

    def degree(self, lam: Sequence[int]) -> int:
        return self.chi(lam, (1,) * self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "shapes": [list(s) for s in self.shapes],
            "classes": [list(c) for c in self.classes],
            "values": [list(row) for row in self.values],
            "class_sizes": list(self.class_sizes),
            "z": list(self.z),
        }


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    if not 1 <= n <= MAX_TABLE_N:
        raise ValueError(f"character tables are supported for 1 <= n <= {MAX_TABLE_N}")
    parts = partitions(n)
    values = tuple(tuple(mn_character(lam, mu) for mu in parts) for lam in parts)
    return CharacterTable(
        n, parts, parts, values, tuple(class_size(mu) for mu in parts), tuple(z_value(mu) for mu in parts)
    )


# symmetric functions ---------------------------------------------------------------


def partition_str(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)


@dataclass
class SymFunc:
    """Finite sum ``sum_lam c_lam b_lam`` with BiPoly coefficients, all ``lam`` of one size."""

    n: int
    coeffs: dict[tuple[int, ...], BiPoly] = field(default_factory=dict)
    basis: str = "schur"

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = tuple(lam)
            if sum(lam) != self.n:
                raise ValueError(f"{lam} is not a partition of {self.n}")
            if not isinstance(c, BiPoly):
                c = BiPoly({(0, 0): c})
            if not c.is_zero():
                clean[lam] = c
        # order shapes as in partitions(n): (n) first
        order = {lam: i for i, lam in enumerate(partitions(self.n))}
        self.coeffs = dict(sorted(clean.items(), key=lambda kv: order[kv[0]]))

    def coeff(self, lam: Sequence[int]) -> BiPoly:
        return self.coeffs.get(tuple(lam), BiPoly())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymFunc)
            and (self.n, self.basis, self.coeffs) == (other.n, other.basis, other.coeffs)
        )

    def __add__(self, other: SymFunc) -> SymFunc:
        if (self.n, self.basis) != (other.n, other.basis):
            raise ValueError("incompatible symmetric functions")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, BiPoly()) + c
        return SymFunc(self.n, out, self.basis)

    def at_t_one(self) -> dict[tuple[int, ...], QPoly]:
        return {lam: c.at_t_one() for lam, c in self.coeffs.items()}

    def at_one(self) -> dict[tuple[int, ...], Coeff]:
        return {lam: c.at_one() for lam, c in self.coeffs.items()}

    def dimension(self) -> Coeff:
        """Total dimension at ``t = q = 1`` (Schur basis only)."""
        if self.basis != "schur":
            raise ValueError("dimension needs the Schur basis")
        table = character_table(self.n)
        return normalize(sum(c.at_one() * table.degree(lam) for lam, c in self.coeffs.items()))

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "coeffs": {partition_str(lam): c.to_json() for lam, c in self.coeffs.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SymFunc:
        coeffs = {
            tuple(int(x) for x in key.split(",")): BiPoly.from_json(val)
            for key, val in data["coeffs"].items()
        }
        return cls(int(data["n"]), coeffs, data.get("basis", "schur"))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        letter = {"schur": "s", "complete": "h", "monomial": "m", "powersum": "p"}[self.basis]
        pieces = []
        for lam, c in self.coeffs.items():
            label = f"{letter}[{partition_str(lam)}]"
            if c == 1:
                pieces.append(label)
            elif len(c.terms) == 1 and next(iter(c.terms.values())) > 0:
                pieces.append(f"{c}*{label}")
            else:
                pieces.append(f"({c})*{label}")
        return " + ".join(pieces)


def principal_spec(lam: Sequence[int], f: QPoly) -> QPoly:
    """``s_lam`` at the alphabet holding ``q^j`` with multiplicity ``f_j``.

    Uses ``s_lam = sum_nu chi^lam(nu) p_nu / z_nu`` and ``p_k -> f(q^k)``.
    """
    lam = tuple(lam)
    check_partition(lam)
    n = sum(lam)
    if any(c < 0 or normalize(c) != int(c) for c in f):
        raise ValueError("the alphabet needs nonnegative integer multiplicities")
    acc = QPoly()
    for nu in partitions(n):
        term = QPoly.one()
        for part in nu:
            term = term * f.substitute_power(part)
        acc = acc + term * Fraction(mn_character(lam, nu), z_value(nu))
    if any(normalize(c) != int(c) or c < 0 for c in acc):
        raise ArithmeticError(f"principal specialization of s{lam} is not a nonnegative integer polynomial: {acc}")
    return QPoly(int(c) for c in acc)


# Frobenius characters ------------------------------------------------------------


def char_P_syt(n: int) -> SymFunc:
    coeffs = {}
    for lam in partitions(n):
        terms: dict[tuple[int, int], int] = {}
        for _, des, maj in enumerate_syt(lam):
            terms[(des, maj)] = terms.get((des, maj), 0) + 1
        coeffs[lam] = BiPoly(terms)
    return SymFunc(n, coeffs)


def _koszul_times(alphabets: Sequence[QPoly], lam: Sequence[int], n: int, top: int) -> BiPoly:
    """``prod_{j=0}^n (1 - t q^j) * sum_i t^i s_lam(alphabets[i])``, truncated at ``t^top``.

    ``alphabets`` runs past ``top``; the product there must vanish, which is
    checked so that a wrong truncation cannot pass silently.
    """
    order = len(alphabets) - 1
    series = BiSeries(order, [principal_spec(lam, f) for f in alphabets])
    product = series * koszul_product(range(n + 1))
    for i in range(top + 1, order + 1):
        if not product[i].is_zero():
            raise ArithmeticError(f"nonzero coefficient of t^{i} beyond the expected degree {top}")
    return BiPoly.from_rows({i: product[i] for i in range(top + 1)})


def char_P_koszul(n: int) -> SymFunc:
    top = n - 1
    alphabets = [q_int(r + 1) for r in range(top + 3)]
    return SymFunc(n, {lam: _koszul_times(alphabets, lam, n, top) for lam in partitions(n)})


def _decompose(k: int, traces: Mapping[tuple[int, ...], BiPoly]) -> SymFunc:
    """Schur expansion from class traces: ``c_lam = sum_mu chi^lam(mu) tr_mu / z_mu``."""
    table = character_table(k)
    coeffs = {}
    for lam in table.shapes:
        acc = BiPoly()
        for mu, zz in zip(table.classes, table.z):
            acc = acc + traces[mu] * Fraction(table.chi(lam, mu), zz)
        if any(normalize(c) != int(c) for c in acc.terms.values()):
            raise ArithmeticError(f"non-integral multiplicity for {lam}: {acc}")
        coeffs[lam] = acc
    return SymFunc(k, coeffs)


def char_P_trace(n: int) -> SymFunc:
    ones = (1,) * n
    traces = {mu: graded_trace(ones, class_representative(mu), "sn") for mu in partitions(n)}
    return _decompose(n, traces)


CHAR_METHODS = ("syt", "koszul", "trace")


def char_P(n: int, method: str = "syt") -> SymFunc:
    """Frobenius character of ``P_n`` in the Schur basis."""
    if n < 1:
        raise ValueError("n must be positive")
    if method == "syt":
        return char_P_syt(n)
    if method == "koszul":
        return char_P_koszul(n)
    if method == "trace":
        return char_P_trace(n)
    raise ValueError(f"unknown method {method!r}; choose from {CHAR_METHODS}")


def _rectangle(k: int, m: int) -> tuple[int, ...]:
    if k < 1 or m < 1:
        raise ValueError("residual characters need k, m >= 1")
    return (m,) * k


def residual_char_plethysm(k: int, m: int) -> SymFunc:
    alpha = _rectangle(k, m)
    n = k * m
    top = hilbert_P(alpha).t_degree()
    alphabets = [q_binomial(i + m, m) for i in range(top + 3)]
    return SymFunc(k, {mu: _koszul_times(alphabets, mu, n, top) for mu in partitions(k)})


def residual_char_trace(k: int, m: int) -> SymFunc:
    alpha = _rectangle(k, m)
    traces = {mu: graded_trace(alpha, class_representative(mu), "slots") for mu in partitions(k)}
    return _decompose(k, traces)


RESIDUAL_METHODS = ("plethysm", "trace")


def residual_char(k: int, m: int, method: str = "plethysm") -> SymFunc:
    """Bigraded ``S_k``-character of ``P_{(m^k)}`` under permutation of the k factors."""
    if method == "plethysm":
        return residual_char_plethysm(k, m)
    if method == "trace":
        return residual_char_trace(k, m)
    raise ValueError(f"unknown method {method!r}; choose from {RESIDUAL_METHODS}")


# invariants of T_n -------------------------------------------------------------------


@dataclass
class InvariantsReport:
    n: int
    r_max: int
    rows: list[dict]
    holds: bool

    def to_json(self) -> dict:
        return {"n": self.n, "r_max": self.r_max, "holds": self.holds, "rows": self.rows}


def e_tilde_monomial_count(n: int, r: int, e: int) -> int:
    """Number of ``c_0 + ... + c_n = r`` with ``sum j c_j = e``."""

    @lru_cache(maxsize=None)
    def count(j: int, left: int, weight: int) -> int:
        if j > n:
            return 1 if left == 0 and weight == 0 else 0
        return sum(count(j + 1, left - c, weight - j * c) for c in range(left + 1) if j * c <= weight)

    return count(0, r, e)


def invariants_free_check(n: int, r_max: int) -> InvariantsReport:
    """Compare ``dim (T_n)^{S_n}_{r,e}`` with the count of monomials in the ``e~_l``."""
    table = character_table(n)
    ones = (1,) * n
    rows = []
    for r in range(r_max + 1):
        for e in range(r * n + 1):
            acc = Fraction(0)
            for mu, zz in zip(table.classes, table.z):
                acc += Fraction(ambient_trace(ones, class_representative(mu), r, e, "sn"), zz)
            expected = e_tilde_monomial_count(n, r, e)
            rows.append({"r": r, "e": e, "invariants": str(normalize(acc)), "monomials": expected})
    holds = all(row["invariants"] == str(row["monomials"]) for row in rows)
    return InvariantsReport(n, r_max, rows, holds)
