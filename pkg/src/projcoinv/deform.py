"""Partial coinvariant presentations, their s-deformation and the semisimple fibre.

Variables ``u_i^{(j)}`` (group ``i``, superscript ``1 <= j <= alpha_i``) have
degree ``j`` and are ordered group-major, superscript-minor.  Group letters
are ``u, v, w, x, y, z``; when every group has a single variable the names
are ``u1, ..., un`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .combinat import check_composition, descent_set, permutations, word_to_path
from .exact.cyclotomic import CyclotomicField
from .exact.linalg import Echelon, ReducedBasis, field_rank
from .exact.mpoly import MPoly, Ring
from .exact.poly import Coeff, QPoly, normalize
from .qseries import q_multinomial
from .segre import AlgebraElement, e_tilde, generator_element, subset_generator, unit

GROUP_LETTERS = "uvwxyz"


class HilbertCapError(RuntimeError):
    """Nonzero pieces of R_alpha persist beyond the degree cap."""


def variable_names(alpha: Sequence[int]) -> list[str]:
    alpha = tuple(alpha)
    if all(a == 1 for a in alpha):
        return [f"u{i + 1}" for i in range(len(alpha))]
    if len(alpha) <= len(GROUP_LETTERS):
        return [f"{GROUP_LETTERS[i]}{j}" for i, a in enumerate(alpha) for j in range(1, a + 1)]
    return [f"u{i + 1}_{j}" for i, a in enumerate(alpha) for j in range(1, a + 1)]


@lru_cache(maxsize=None)
def coordinate_ring(alpha: tuple[int, ...]) -> Ring:
    return Ring(variable_names(alpha), [j for a in alpha for j in range(1, a + 1)])


def variable_index(alpha: Sequence[int], group: int, sup: int) -> int:
    """Position of ``u_group^{(sup)}`` (both 1-indexed) in the variable order."""
    return sum(alpha[: group - 1]) + sup - 1


@dataclass
class Presentation:
    alpha: tuple[int, ...]
    s: Coeff
    ring: Ring
    generators: list[MPoly]

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "s": str(self.s),
            "variables": list(self.ring.names),
            "degrees": list(self.ring.weights),
            "generators": [str(g) for g in self.generators],
        }

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def presentation_R(alpha: Sequence[int], s: Coeff = 0) -> Presentation:
    """Ideal generators: homogeneous parts of ``prod_i (1 + sum_j u_i^{(j)}) - (1 + s)``."""
    alpha = tuple(alpha)
    check_composition(alpha)
    n = sum(alpha)
    ring = coordinate_ring(alpha)
    total = ring.one()
    for i, a in enumerate(alpha):
        factor = ring.one()
        for j in range(1, a + 1):
            factor = factor + ring.var(variable_index(alpha, i + 1, j))
        total = total * factor
    gens = []
    for d in range(1, n + 1):
        g = total.homogeneous_part(d)
        if d == n:
            g = g - normalize(Fraction(s))
        gens.append(g)
    return Presentation(alpha, normalize(Fraction(s)), ring, gens)


@dataclass
class Elimination:
    """Result of solving linear relations for variables and substituting them away."""

    presentation: Presentation
    substitutions: dict[int, MPoly]
    generators: list[MPoly]

    def reduce(self, f: MPoly) -> MPoly:
        """Substitute the eliminated variables into ``f``."""
        return f.substitute(self.substitutions) if self.substitutions else f

    @property
    def free_variables(self) -> list[int]:
        return [i for i in range(self.presentation.ring.nvars) if i not in self.substitutions]

    def to_json(self) -> dict:
        names = self.presentation.ring.names
        return {
            "substitutions": {names[i]: str(p) for i, p in sorted(self.substitutions.items())},
            "generators": [str(g) for g in self.generators],
        }

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def _solvable_variables(g: MPoly) -> list[int]:
    """Variables occurring in ``g`` only through a term ``+-x``."""
    out = []
    for i in sorted(g.variables()):
        occurrences = [(e, c) for e, c in g.terms.items() if e[i]]
        if len(occurrences) == 1:
            e, c = occurrences[0]
            if sum(e) == 1 and c in (1, -1):
                out.append(i)
    return out


def _positive_lead(g: MPoly) -> MPoly:
    return -g if g.leading_term()[1] < 0 else g


def eliminate(pres: Presentation) -> Elimination:
    """Walk the generators by degree; each one linear in some variable solves for it.

    When several variables qualify the last one in the variable order is
    solved for.  Surviving generators are normalised to a positive leading
    coefficient.
    """
    subs: dict[int, MPoly] = {}
    kept: list[MPoly] = []
    ring = pres.ring
    for g in pres.generators:
        g = g.substitute(subs) if subs else g
        if g.is_zero():
            continue
        cands = _solvable_variables(g)
        if not cands:
            kept.append(g)
            continue
        i = cands[-1]
        x = ring.var(i)
        c = g.terms[x.leading_term()[0]]
        value = (x * c - g) * c  # g = c*x + rest with c = +-1, so x = -(rest) / c
        subs = {j: p.substitute({i: value}) for j, p in subs.items()}
        subs[i] = value
        kept = [k.substitute({i: value}) for k in kept]
    gens = [_positive_lead(k) for k in kept if not k.is_zero()]
    return Elimination(pres, subs, gens)


# graded pieces ----------------------------------------------------------------------


@dataclass
class GradedPiece:
    """Degree-``d`` piece of ``Q[u] / J`` for homogeneous generators ``J``."""

    degree: int
    monomials: list[tuple[int, ...]]
    echelon: Echelon = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.monomials) - self.echelon.rank

    def vector(self, f: MPoly) -> dict[int, Coeff]:
        index = {m: i for i, m in enumerate(self.monomials)}
        return {index[e]: c for e, c in f.terms.items()}

    def polynomial(self, ring: Ring, vec: dict[int, Coeff]) -> MPoly:
        return MPoly(ring, {self.monomials[i]: c for i, c in vec.items()})


def graded_piece(ring: Ring, gens: Sequence[MPoly], d: int) -> GradedPiece:
    """Columns are the degree-d monomials in lex-descending order, so pivots are lex-leading."""
    monomials = ring.monomials_of_degree(d)
    index = {m: i for i, m in enumerate(monomials)}
    vectors = []
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("graded pieces need homogeneous generators")
        gd = g.degree()
        for m in ring.monomials_of_degree(d - gd):
            vectors.append({index[tuple(a + b for a, b in zip(e, m))]: c for e, c in g.terms.items()})
    return GradedPiece(d, monomials, Echelon(vectors))


def normal_form(ring: Ring, gens: Sequence[MPoly], f: MPoly) -> MPoly:
    """Canonical representative of ``f`` modulo the homogeneous ideal, degree by degree."""
    out = ring.zero()
    for d in sorted({ring.exp_degree(e) for e in f.terms}):
        piece = graded_piece(ring, gens, d)
        reduced = ReducedBasis(piece.echelon).normal_form(piece.vector(f.homogeneous_part(d)))
        out = out + piece.polynomial(ring, reduced)
    return out


def hilbert_R(alpha: Sequence[int]) -> QPoly:
    """Graded dimensions of ``R_alpha`` (the s = 0 presentation) by exact linear algebra.

    Dimensions are computed through degree ``n(n-1)/2``; the next ``max(alpha)``
    degrees must vanish, which forces every higher degree to vanish as the
    variables have degree at most ``max(alpha)``.
    """
    alpha = tuple(alpha)
    pres = presentation_R(alpha, 0)
    n = sum(alpha)
    cap = n * (n - 1) // 2
    top = max(alpha)
    dims = [graded_piece(pres.ring, pres.generators, d).dim for d in range(cap + top + 1)]
    if any(dims[cap + 1:]):
        raise HilbertCapError(f"R_{alpha} has nonzero pieces beyond degree {cap}: {dims[cap + 1:]}")
    return QPoly(dims[: cap + 1])


def hilbert_R_matches(alpha: Sequence[int]) -> bool:
    return hilbert_R(alpha) == q_multinomial(alpha)


# descent monomials -----------------------------------------------------------------


def descent_points(w: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """Lattice-path points ``l(i)`` at the descent positions ``i`` of ``w``."""
    path = word_to_path(w, k)
    return [path[i] for i in descent_set(w)]


def descent_exponents(alpha: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """Exponent vector of ``b_w``: point ``(i_1..i_k)`` contributes ``prod_{i_j>0} u_j^{(i_j)}``."""
    alpha = tuple(alpha)
    exp = [0] * sum(alpha)
    for point in descent_points(w, len(alpha)):
        for group, sup in enumerate(point, start=1):
            if sup:
                exp[variable_index(alpha, group, sup)] += 1
    return tuple(exp)


# the semisimple fibre --------------------------------------------------------------


def fibre_value(n: int) -> int:
    """``e_n`` of the n-th roots of unity: ``prod (x - eta^i) = x^n - 1`` gives ``(-1)^{n+1}``."""
    return (-1) ** (n + 1)


def _elementary(values: Sequence, one, zero) -> list:
    """``[e_0, ..., e_m]`` of the given field elements."""
    es = [one] + [zero] * len(values)
    for x in values:
        for k in range(len(values), 0, -1):
            es[k] = es[k] + es[k - 1] * x
    return es


@dataclass
class FibreReport:
    n: int
    s1: int
    points: list[tuple[int, ...]]
    relations_ok: bool
    distinct: bool
    rank: int
    ok: bool
    witness: dict | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s1": self.s1,
            "points": [list(p) for p in self.points],
            "relations_ok": self.relations_ok,
            "distinct": self.distinct,
            "rank": self.rank,
            "expected_rank": len(self.points),
            "ok": self.ok,
            "witness": self.witness,
            "note": self.note,
        }


def semisimple_fibre_check(n: int) -> FibreReport:
    """Orbit of ``(1, eta, ..., eta^{n-1})`` on the fibre ``e_1 = ... = e_{n-1} = 0, e_n = s1``.

    Points are stored as exponent tuples: ``(k_1, ..., k_n)`` stands for
    ``(eta^{k_1}, ..., eta^{k_n})``.  The Garsia-Stanton monomials evaluated
    at the points form an ``n! x n!`` matrix whose rank over ``Q(eta)`` is
    computed exactly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    field_ = CyclotomicField(n)
    s1 = fibre_value(n)
    perms = permutations(n)
    points = [tuple(sigma[i] - 1 for i in range(n)) for sigma in perms]
    witness = None
    relations_ok = True
    zero, one = field_.zero(), field_.one()
    for p in points:
        es = _elementary([field_.root_power(k) for k in p], one, zero)
        expected = [one] + [zero] * (n - 1) + [field_(s1)]
        if es != expected:
            relations_ok = False
            bad = next(k for k in range(n + 1) if es[k] != expected[k])
            witness = {"point": list(p), "k": bad, "e_k": str(es[bad])}
            break
    distinct = len(set(points)) == len(points)
    ones = (1,) * n
    exps = [descent_exponents(ones, sigma) for sigma in perms]
    matrix = [
        [field_.root_power(sum(a * b for a, b in zip(e, p))) for e in exps]
        for p in points
    ]
    rank = field_rank(matrix)
    ok = relations_ok and distinct and rank == len(points)
    if ok is False and witness is None:
        witness = {"rank": rank, "expected": len(points)} if distinct else {"duplicate_points": True}
    note = (
        f"orbit lies on e_n = {s1}; the fibre e_n = 1 is reached from it by rescaling"
        if s1 != 1
        else ""
    )
    return FibreReport(n, s1, points, relations_ok, distinct, rank, ok, witness, note)


# psi_n on T_n with x_empty = 1 -------------------------------------------------------


def dehomogenize(x: AlgebraElement) -> dict[tuple[int, ...], Coeff]:
    """Set ``x_empty = 1``: forget the first degree and keep the multiplicity vectors."""
    out: dict[tuple[int, ...], Coeff] = {}
    for m, c in x.terms.items():
        out[m.mults] = normalize(out.get(m.mults, 0) + c)
    return {k: v for k, v in out.items() if v}


@dataclass
class IsomorphismReport:
    n: int
    subsets: list[dict]
    elementary: list[dict]
    ok: bool

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok, "subsets": self.subsets, "elementary": self.elementary}


def _x(n: int, subset: Sequence[int]) -> AlgebraElement:
    return generator_element((1,) * n, subset_generator(n, subset))


def fibre_isomorphism_check(n: int) -> IsomorphismReport:
    """Check ``psi(prod_{i in I} u_i) = x_I`` and ``psi(e_k) = e~_k`` after ``x_empty = 1``.

    For each ``I`` the product ``x_{i_1} ... x_{i_m}`` is rewritten with the
    relation ``x_{i} x_J = x_empty x_{J + i}`` one element at a time, and every
    intermediate equality is checked in ``T_n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ones = (1,) * n
    empty = _x(n, ())
    subsets = []
    ok = True
    for size in range(n + 1):
        for subset in combinations(range(1, n + 1), size):
            product_ = AlgebraElement.from_monomial(unit(ones))
            for i in subset:
                product_ = product_ * _x(n, (i,))
            # rewrite chain: x_{i_1} ... x_{i_m} = x_empty^{j-1} x_{i_1..i_j} x_{i_{j+1}} ... x_{i_m}
            steps = 0
            chain_ok = True
            for j in range(1, size + 1):
                lhs = _pow(empty, j - 1) * _x(n, subset[:j])
                for i in subset[j:]:
                    lhs = lhs * _x(n, (i,))
                chain_ok &= lhs == product_
                steps += 1 if j > 1 else 0
            target = {tuple(1 if i + 1 in subset else 0 for i in range(n)): 1}
            reached = dehomogenize(product_) == target
            subsets.append({"I": list(subset), "rewrites": steps, "ok": bool(chain_ok and reached)})
            ok &= chain_ok and reached
    elementary = []
    for k in range(n + 1):
        psi = AlgebraElement(ones, k, {})
        for subset in combinations(range(1, n + 1), k):
            term = AlgebraElement.from_monomial(unit(ones))
            for i in subset:
                term = term * _x(n, (i,))
            psi = psi + term
        match = dehomogenize(psi) == dehomogenize(e_tilde(ones, k))
        elementary.append({"k": k, "ok": match})
        ok &= match
    return IsomorphismReport(n, subsets, elementary, bool(ok))


def _pow(x: AlgebraElement, k: int) -> AlgebraElement:
    out = AlgebraElement.from_monomial(unit(x.alpha))
    for _ in range(k):
        out = out * x
    return out
