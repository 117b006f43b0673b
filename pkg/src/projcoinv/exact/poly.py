"""Univariate q-polynomials, bivariate (t, q) polynomials and t-truncated series.

All coefficients are Python ints or ``fractions.Fraction``; integral fractions
are stored as ints so printing and hashing stay canonical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Coeff = Union[int, Fraction]


def normalize(c: Coeff) -> Coeff:
    """Return ``c`` as an int when it is integral."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def parse_coeff(text: str) -> Coeff:
    return normalize(Fraction(text))


def _coeff_str(c: Coeff) -> str:
    return str(normalize(c))


class QPoly:
    """Polynomial in ``q`` stored as a dense coefficient list (lowest degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Coeff, ...] = tuple(cs)

    @classmethod
    def monomial(cls, e: int, c: Coeff = 1) -> QPoly:
        return cls([0] * e + [c])

    @classmethod
    def one(cls) -> QPoly:
        return cls([1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> Coeff:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Coeff]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: QPoly) -> QPoly:
        if isinstance(other, int):
            other = QPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other: QPoly | Coeff) -> QPoly:
        if not isinstance(other, QPoly):
            return QPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        out = QPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: QPoly) -> tuple[QPoly, QPoly]:
        """Long division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(other.coeffs[-1])
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return QPoly(quot), QPoly(rem[:dq])

    def exact_div(self, other: QPoly) -> QPoly:
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quot

    def substitute_power(self, k: int) -> QPoly:
        """Return ``f(q**k)``."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return QPoly(out)

    def at_one(self) -> Coeff:
        return normalize(sum(self.coeffs, 0))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        cs = self.coeffs
        lo = next((i for i, c in enumerate(cs) if c), 0)
        body = cs[lo:]
        return body == body[::-1]

    def to_bipoly(self, t_exp: int = 0) -> BiPoly:
        return BiPoly({(t_exp, e): c for e, c in enumerate(self.coeffs) if c})

    def __str__(self) -> str:
        return self.to_bipoly().__str__()

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"


def q_int(m: int) -> QPoly:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    return QPoly([1] * m)


def q_factorial(m: int) -> QPoly:
    out = QPoly.one()
    for j in range(1, m + 1):
        out = out * q_int(j)
    return out


def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial ``[a choose b]_q`` via the q-Pascal recurrence."""
    if b < 0 or b > a:
        return QPoly()
    row = [QPoly.one()]
    for m in range(1, a + 1):
        new = [QPoly.one()]
        for j in range(1, m):
            # [m, j] = [m-1, j-1] + q^j [m-1, j]
            new.append(row[j - 1] + QPoly.monomial(j) * row[j])
        new.append(QPoly.one())
        row = new
    return row[b]


class BiPoly:
    """Polynomial in ``t`` and ``q``: a sparse map ``(i, j) -> c`` for ``c t^i q^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Coeff] | None = None):
        clean: dict[tuple[int, int], Coeff] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            c = normalize(c)
            if c:
                clean[(i, j)] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def one(cls) -> BiPoly:
        return cls({(0, 0): 1})

    @classmethod
    def t(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def q(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def from_rows(cls, rows: Mapping[int, QPoly]) -> BiPoly:
        return cls({(i, j): c for i, p in rows.items() for j, c in enumerate(p) if c})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> Coeff:
        return self.terms.get((i, j), 0)

    def t_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def q_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def t_coeff(self, i: int) -> QPoly:
        """Coefficient of ``t^i`` as a q-polynomial."""
        out: dict[int, Coeff] = {}
        for (a, b), c in self.terms.items():
            if a == i:
                out[b] = c
        if not out:
            return QPoly()
        return QPoly(out.get(e, 0) for e in range(max(out) + 1))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: BiPoly | Coeff) -> BiPoly:
        if not isinstance(other, BiPoly):
            other = BiPoly({(0, 0): other})
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: BiPoly | Coeff) -> BiPoly:
        if not isinstance(other, BiPoly):
            other = BiPoly({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other: Coeff) -> BiPoly:
        return BiPoly({(0, 0): other}) - self

    def __mul__(self, other: BiPoly | Coeff) -> BiPoly:
        if not isinstance(other, BiPoly):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], Coeff] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BiPoly:
        out = BiPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def truncate(self, max_t: int) -> BiPoly:
        return BiPoly({k: c for k, c in self.terms.items() if k[0] <= max_t})

    def at_t_one(self) -> QPoly:
        out: dict[int, Coeff] = {}
        for (_, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c
        return QPoly(out.get(e, 0) for e in range(max(out, default=-1) + 1))

    def at_q_one(self) -> BiPoly:
        out: dict[tuple[int, int], Coeff] = {}
        for (i, _), c in self.terms.items():
            out[(i, 0)] = out.get((i, 0), 0) + c
        return BiPoly(out)

    def at_one(self) -> Coeff:
        return normalize(sum(self.terms.values(), 0))

    def reflect(self, dt: int, dq: int) -> BiPoly:
        """``t^dt q^dq p(1/t, 1/q)``; raises if that is not a polynomial."""
        return BiPoly({(dt - i, dq - j): c for (i, j), c in self.terms.items()})

    def is_palindromic(self) -> bool:
        if self.is_zero():
            return True
        try:
            return self.reflect(self.t_degree(), self.q_degree()) == self
        except ValueError:
            return False

    def to_json(self) -> list[list]:
        return [[i, j, _coeff_str(c)] for (i, j), c in self.terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> BiPoly:
        return cls({(int(i), int(j)): parse_coeff(str(c)) for i, j, c in data})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.terms.items():
            factors = []
            if i:
                factors.append("t" if i == 1 else f"t^{i}")
            if j:
                factors.append("q" if j == 1 else f"q^{j}")
            mag = abs(c)
            if not factors:
                body = _coeff_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_coeff_str(mag)] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self})"


class BiSeries:
    """Power series in ``t`` with q-polynomial coefficients, truncated at ``t^order``."""

    __slots__ = ("order", "rows")

    def __init__(self, order: int, rows: Iterable[QPoly] = ()):
        rows = list(rows)[: order + 1]
        rows += [QPoly()] * (order + 1 - len(rows))
        self.order = order
        self.rows: tuple[QPoly, ...] = tuple(rows)

    @classmethod
    def from_bipoly(cls, p: BiPoly, order: int) -> BiSeries:
        return cls(order, [p.t_coeff(i) for i in range(order + 1)])

    def __getitem__(self, r: int) -> QPoly:
        return self.rows[r]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BiSeries)
            and self.order == other.order
            and self.rows == other.rows
        )

    def __mul__(self, other: BiSeries | BiPoly) -> BiSeries:
        if isinstance(other, BiPoly):
            other = BiSeries.from_bipoly(other, self.order)
        order = min(self.order, other.order)
        rows = []
        for r in range(order + 1):
            acc = QPoly()
            for i in range(r + 1):
                acc = acc + self.rows[i] * other.rows[r - i]
            rows.append(acc)
        return BiSeries(order, rows)

    def __add__(self, other: BiSeries) -> BiSeries:
        order = min(self.order, other.order)
        return BiSeries(order, [self.rows[r] + other.rows[r] for r in range(order + 1)])

    def to_bipoly(self) -> BiPoly:
        return BiPoly.from_rows(dict(enumerate(self.rows)))

    def at_q_one(self) -> list[Coeff]:
        return [row.at_one() for row in self.rows]

    def to_json(self) -> dict:
        return {"order": self.order, "terms": self.to_bipoly().to_json()}

    def __str__(self) -> str:
        return f"{self.to_bipoly()} + O(t^{self.order + 1})"

    def __repr__(self) -> str:
        return f"BiSeries({self})"


def inv_product_series(q_exponents: Iterable[int], order: int) -> BiSeries:
    """Expand ``prod_j 1/(1 - t q^{e_j})`` up to ``t^order``.

    Multiplying by one geometric factor at a time keeps every step a finite
    convolution: row ``r`` of ``S / (1 - t q^e)`` is ``sum_i q^{e i} S[r - i]``.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    series = BiSeries(order, [QPoly.one()])
    for e in q_exponents:
        rows = []
        for r in range(order + 1):
            acc = QPoly()
            for i in range(r + 1):
                acc = acc + QPoly.monomial(e * i) * series.rows[r - i]
            rows.append(acc)
        series = BiSeries(order, rows)
    return series


def koszul_product(q_exponents: Iterable[int]) -> BiPoly:
    """``prod_j (1 - t q^{e_j})`` as a polynomial."""
    out = BiPoly.one()
    for e in q_exponents:
        out = out * BiPoly({(0, 0): 1, (1, e): -1})
    return out
