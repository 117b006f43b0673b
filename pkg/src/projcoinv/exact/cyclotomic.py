"""Exact arithmetic in the cyclotomic field Q(eta), eta a primitive n-th root of unity."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import QPoly, normalize


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> QPoly:
    """Phi_n, by dividing x^n - 1 by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    num = QPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num.exact_div(cyclotomic_polynomial(d))
    return num


class CyclotomicField:
    """Q[x] / Phi_n with elements stored as reduced coefficient tuples."""

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.dim = self.modulus.degree
        # x^k reduced mod Phi_n, for every k < 2 * dim
        self._powers: list[tuple] = []
        for k in range(2 * self.dim):
            _, rem = QPoly.monomial(k).divmod(self.modulus)
            self._powers.append(self._pad(rem.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicField({self.n})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("cyclo", self.n))

    def _pad(self, coeffs) -> tuple:
        cs = [normalize(c) for c in coeffs][: self.dim]
        return tuple(cs + [0] * (self.dim - len(cs)))

    def __call__(self, value) -> CycloElem:
        if isinstance(value, CycloElem):
            return value
        if isinstance(value, QPoly):
            _, rem = value.divmod(self.modulus)
            return CycloElem(self, self._pad(rem.coeffs))
        return CycloElem(self, self._pad([value]))

    def zero(self) -> CycloElem:
        return CycloElem(self, (0,) * self.dim)

    def one(self) -> CycloElem:
        return self(1)

    def gen(self) -> CycloElem:
        """The class of x, a primitive n-th root of unity."""
        return self(QPoly.monomial(1))

    def root_power(self, k: int) -> CycloElem:
        return CycloElem(self, self._reduce_power(k % self.n))

    def _reduce_power(self, k: int) -> tuple:
        if k < len(self._powers):
            return self._powers[k]
        _, rem = QPoly.monomial(k).divmod(self.modulus)
        return self._pad(rem.coeffs)

    def _mul(self, a: tuple, b: tuple) -> tuple:
        prod = [0] * (2 * self.dim - 1) if self.dim else []
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = list(prod[: self.dim]) + [0] * max(0, self.dim - len(prod))
        for k in range(self.dim, len(prod)):
            c = prod[k]
            if c:
                for i, r in enumerate(self._powers[k]):
                    if r:
                        out[i] += c * r
        return tuple(normalize(c) for c in out)

    def _inv(self, a: tuple) -> tuple:
        """Inverse via the extended Euclidean algorithm against Phi_n."""
        r0, r1 = self.modulus, QPoly(a)
        s0, s1 = QPoly(), QPoly.one()
        while not r1.is_zero():
            quot, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quot * s1
        if r0.degree != 0:
            raise ZeroDivisionError("element is not invertible")
        return self._pad((s0 * (1 / Fraction(r0.coeffs[0]))).coeffs)


class CycloElem:
    """Element of a :class:`CyclotomicField`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> tuple:
        if isinstance(other, CycloElem):
            if other.field.n != self.field.n:
                raise ValueError("elements of different cyclotomic fields")
            return other.coeffs
        return self.field(other).coeffs

    def __add__(self, other) -> CycloElem:
        b = self._coerce(other)
        return CycloElem(self.field, tuple(normalize(x + y) for x, y in zip(self.coeffs, b)))

    __radd__ = __add__

    def __neg__(self) -> CycloElem:
        return CycloElem(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> CycloElem:
        b = self._coerce(other)
        return CycloElem(self.field, tuple(normalize(x - y) for x, y in zip(self.coeffs, b)))

    def __rsub__(self, other) -> CycloElem:
        return (-self) + other

    def __mul__(self, other) -> CycloElem:
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.field, tuple(normalize(x * other) for x in self.coeffs))
        return CycloElem(self.field, self.field._mul(self.coeffs, self._coerce(other)))

    __rmul__ = __mul__

    def inverse(self) -> CycloElem:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return CycloElem(self.field, self.field._inv(self.coeffs))

    def __truediv__(self, other) -> CycloElem:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * CycloElem(self.field, self._coerce(other)).inverse()

    def __rtruediv__(self, other) -> CycloElem:
        return self.field(other) * self.inverse()

    def __pow__(self, k: int) -> CycloElem:
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        return (
            isinstance(other, CycloElem)
            and other.field.n == self.field.n
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.n, self.coeffs))

    def multiplicative_order(self, bound: int | None = None) -> int | None:
        """Smallest k >= 1 with self**k == 1, searching up to ``bound``."""
        bound = bound or 2 * self.field.n
        acc = self
        for k in range(1, bound + 1):
            if acc == 1:
                return k
            acc = acc * self
        return None

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("eta" if i == 1 else f"eta^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self) -> str:
        return f"CycloElem({self}, n={self.field.n})"
