"""Exact linear algebra over Q and over cyclotomic fields.

Three tools live here:

* :class:`ExactMatrix` -- small dense matrices; rank over Q by Bareiss
  fraction-free elimination, rank over Q(eta) by Gauss-Jordan.
* :class:`Echelon` -- an incrementally grown row space of sparse integer
  vectors, reduced fraction-free.  The graded pieces of the quotient algebras
  are spanned by thousands of very sparse 0/1 vectors, so this is the work
  horse.
* :func:`solve_in_span` -- express a sparse target in the span of sparse
  vectors, returning the combination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

from .poly import normalize

SparseVec = dict  # column -> int / Fraction


def _integral(vec: Mapping) -> dict:
    """Scale a rational sparse vector to a primitive integer vector."""
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {k: int(c * den) for k, c in vec.items() if c}
    return _primitive(out)


def _primitive(vec: dict) -> dict:
    g = 0
    for c in vec.values():
        g = gcd(g, c)
        if g == 1:
            return vec
    if g > 1:
        return {k: c // g for k, c in vec.items()}
    return vec


class ExactMatrix:
    """Dense matrix with exact entries (ints, Fractions or CycloElems)."""

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != cols for row in self.entries):
            raise ValueError("ragged matrix")
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    def _is_rational(self) -> bool:
        return all(isinstance(x, (int, Fraction)) for row in self.entries for x in row)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        if self._is_rational():
            return bareiss_rank(self.entries)
        return field_rank(self.entries)

    def rref(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form (rational entries) and pivot columns."""
        m = [[Fraction(x) for x in row] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return [[normalize(x) for x in row] for row in m], pivots

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"


def bareiss_rank(entries: Sequence[Sequence]) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Rows are first cleared of denominators; afterwards every division in the
    elimination is exact over the integers.
    """
    m = []
    for row in entries:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        m.append([int(x * den) for x in row])
    rows = len(m)
    cols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, rows):
            a = m[i][c]
            m[i] = [(p * x - a * y) // prev for x, y in zip(m[i], m[rank])]
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def field_rank(entries: Sequence[Sequence]) -> int:
    """Rank by Gaussian elimination for entries supporting field division."""
    m = [list(row) for row in entries]
    rows = len(m)
    cols = len(m[0]) if m else 0
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c] if isinstance(m[rank][c], (int, Fraction)) else m[rank][c].inverse()
        prow = [x * inv for x in m[rank]]
        m[rank] = prow
        for i in range(rank + 1, rows):
            f = m[i][c]
            if f != 0:
                m[i] = [x if y == 0 else x - f * y for x, y in zip(m[i], prow)]
        rank += 1
        if rank == rows:
            break
    return rank


def rank(matrix: ExactMatrix | Sequence[Sequence]) -> int:
    if not isinstance(matrix, ExactMatrix):
        matrix = ExactMatrix(matrix)
    return matrix.rank()


class Echelon:
    """Row space of sparse rational vectors, kept in fraction-free echelon form.

    Columns must be mutually comparable (ints or tuples); the pivot of every
    stored row is its smallest column, so each stored row only touches columns
    at or after its pivot.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.pivots: dict[Hashable, dict] = {}
        for v in sorted((_integral(v) for v in vectors), key=len):
            self._insert(v)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: dict, full: bool) -> dict:
        """Eliminate pivot columns from ``vec``.

        With ``full=False`` stop at the first non-pivot leading column, which
        is enough to decide independence.
        """
        while True:
            if full:
                cands = [c for c in vec if c in self.pivots]
                if not cands:
                    return vec
                c = min(cands)
            else:
                if not vec:
                    return vec
                c = min(vec)
                if c not in self.pivots:
                    return vec
            row = self.pivots[c]
            a = vec[c]
            p = row[c]
            g = gcd(a, p)
            fa, fp = p // g, a // g
            out = {k: x * fa for k, x in vec.items()}
            for k, y in row.items():
                val = out.get(k, 0) - fp * y
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
            vec = _primitive(out)

    def _insert(self, vec: dict) -> bool:
        vec = self._reduce(vec, full=False)
        if not vec:
            return False
        c = min(vec)
        if vec[c] < 0:
            vec = {k: -x for k, x in vec.items()}
        self.pivots[c] = vec
        return True

    def add(self, vec: Mapping) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        return self._insert(_integral(vec))

    def contains(self, vec: Mapping) -> bool:
        return not self._reduce(_integral(vec), full=False)

    def rref(self) -> dict[Hashable, dict]:
        """Fully reduced rows, pivot entry 1, keyed by pivot column."""
        out: dict[Hashable, dict] = {}
        for c in sorted(self.pivots, reverse=True):
            raw = self.pivots[c]
            p = Fraction(raw[c])
            row = {k: x / p for k, x in raw.items()}
            for k in sorted(k for k in raw if k != c and k in out):
                f = row.get(k, 0)
                if f:
                    row = _axpy(row, out[k], -f)
            out[c] = {k: normalize(x) for k, x in row.items()}
        return out


class ReducedBasis:
    """RREF of a subspace, used for normal forms and induced traces."""

    def __init__(self, echelon: Echelon):
        self.rows = echelon.rref()

    @property
    def rank(self) -> int:
        return len(self.rows)

    def normal_form(self, vec: Mapping) -> dict:
        """Representative of ``vec`` modulo the subspace, supported off pivots."""
        out = {k: c for k, c in vec.items() if c}
        for c in [k for k in out if k in self.rows]:
            f = out.pop(c, 0)
            if not f:
                continue
            for k, y in self.rows[c].items():
                if k == c:
                    continue
                val = out.get(k, 0) - f * y
                if val:
                    out[k] = normalize(val)
                else:
                    out.pop(k, None)
        return out

    def coordinates(self, vec: Mapping) -> dict:
        """Coordinates of a vector lying in the subspace (read off pivots)."""
        return {c: vec[c] for c in self.rows if vec.get(c)}


def solve_in_span(
    target: Mapping, vectors: Sequence[Mapping]
) -> list | None:
    """Find rational ``x`` with ``sum x_i vectors[i] == target``; None if impossible.

    Gauss-Jordan on the transposed system, carrying the combination of the
    original vectors alongside each reduced row.
    """
    rows: dict[Hashable, tuple[dict, dict]] = {}
    for idx, v in enumerate(vectors):
        vec = {k: Fraction(c) for k, c in v.items() if c}
        comb = {idx: Fraction(1)}
        vec, comb = _jordan_reduce(vec, comb, rows)
        if not vec:
            continue
        c = min(vec)
        inv = 1 / vec[c]
        vec = {k: x * inv for k, x in vec.items()}
        comb = {k: x * inv for k, x in comb.items()}
        for pc, (pv, pcomb) in list(rows.items()):
            f = pv.get(c)
            if f:
                rows[pc] = (_axpy(pv, vec, -f), _axpy(pcomb, comb, -f))
        rows[c] = (vec, comb)
    vec = {k: Fraction(c) for k, c in target.items() if c}
    comb: dict = {}
    vec, comb = _jordan_reduce(vec, comb, rows)
    if vec:
        return None
    x = [0] * len(vectors)
    for k, c in comb.items():
        x[k] = normalize(-c)
    return x


def _jordan_reduce(vec: dict, comb: dict, rows: dict) -> tuple[dict, dict]:
    for c in [k for k in vec if k in rows]:
        f = vec.get(c)
        if f:
            pv, pcomb = rows[c]
            vec = _axpy(vec, pv, -f)
            comb = _axpy(comb, pcomb, -f)
    return vec, comb


def _axpy(x: dict, y: dict, a) -> dict:
    out = dict(x)
    for k, v in y.items():
        val = out.get(k, 0) + a * v
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return out
