"""Descent-monomial bases ``a_w`` of ``P_alpha`` and ``b_w`` of ``R_alpha``.

A word ``w`` traces a lattice path; at each descent position ``i`` the path
sits at a point ``(i_1, ..., i_k)``, which names a generator ``y_{(i_1..i_k)}``
of ``T_alpha``.  The product of these generators is ``a_w``; its image at the
fibre ``(1, 0)`` is the monomial ``b_w`` in the variables ``u_j^{(i_j)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinat import check_composition, enumerate_words, word_stats, word_str, word_to_path
from .deform import (
    coordinate_ring,
    descent_exponents,
    descent_points,
    eliminate,
    graded_piece,
    normal_form,
    presentation_R,
)
from .exact.linalg import Echelon
from .exact.mpoly import MPoly
from .qseries import q_multinomial
from .quotient import quotient_piece, quotient_table
from .segre import SegreMonomial, generator_monomial, unit


def _check_word(alpha: tuple[int, ...], w: Sequence[int]) -> None:
    counts = [sum(1 for x in w if x == j + 1) for j in range(len(alpha))]
    if counts != list(alpha) or len(w) != sum(alpha):
        raise ValueError(f"{word_str(w)} is not a word with content {alpha}")


@dataclass(frozen=True)
class DescentMonomial:
    alpha: tuple[int, ...]
    word: tuple[int, ...]
    path: tuple[tuple[int, ...], ...]
    points: tuple[tuple[int, ...], ...]
    element: SegreMonomial

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.element.bidegree

    @property
    def stats(self) -> tuple[int, int]:
        _, des, maj = word_stats(self.word)
        return des, maj

    def label(self) -> str:
        if not self.points:
            return "1"
        return "*".join("y(" + ",".join(str(x) for x in p) + ")" for p in self.points)

    def to_json(self) -> dict:
        return {
            "word": word_str(self.word),
            "descent_points": [list(p) for p in self.points],
            "bidegree": list(self.bidegree),
            "a_w": self.label(),
            "monomial": self.element.to_json(),
        }


def a_monomial(alpha: Sequence[int], w: Sequence[int]) -> DescentMonomial:
    alpha = tuple(alpha)
    w = tuple(w)
    _check_word(alpha, w)
    points = tuple(descent_points(w, len(alpha)))
    element = unit(alpha)
    for p in points:
        element = element * generator_monomial(alpha, p)
    return DescentMonomial(alpha, w, tuple(word_to_path(w, len(alpha))), points, element)


@dataclass
class BasisReport:
    alpha: tuple[int, ...]
    ok: bool
    per_degree: list[dict]
    failures: list[dict]

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "ok": self.ok,
            "per_degree": self.per_degree,
            "failures": self.failures,
        }


def _rank_gain(base: Echelon, vectors: Sequence[dict]) -> int:
    ech = Echelon()
    ech.pivots = dict(base.pivots)
    return sum(1 for v in vectors if ech.add(v))


def verify_a_basis(alpha: Sequence[int]) -> BasisReport:
    """Each bidegree: the ``a_w`` must be independent modulo the ideal piece and fill the quotient."""
    alpha = tuple(alpha)
    check_composition(alpha)
    groups: dict[tuple[int, int], list[DescentMonomial]] = {}
    for w in enumerate_words(alpha):
        dm = a_monomial(alpha, w)
        groups.setdefault(dm.bidegree, []).append(dm)
    table = quotient_table(alpha)
    rows, failures = [], []
    for bideg in sorted(set(groups) | set(table)):
        members = groups.get(bideg, [])
        piece = quotient_piece(alpha, *bideg)
        gain = _rank_gain(piece.echelon, [{piece.column(dm.element.mults): 1} for dm in members])
        row = {"bidegree": list(bideg), "count": len(members), "rank_gain": gain, "dim": piece.dim}
        rows.append(row)
        if not gain == len(members) == piece.dim:
            failures.append(row | {"words": [word_str(dm.word) for dm in members]})
        if any(dm.stats != bideg for dm in members):
            failures.append({"bidegree": list(bideg), "reason": "bidegree differs from (des, maj)"})
    return BasisReport(alpha, not failures, rows, failures)


def b_polynomial(alpha: Sequence[int], w: Sequence[int]) -> MPoly:
    """``b_w``: the descent point ``(i_1..i_k)`` contributes ``prod_{i_j > 0} u_j^{(i_j)}``."""
    alpha = tuple(alpha)
    _check_word(alpha, w)
    return coordinate_ring(alpha).monomial(descent_exponents(alpha, w))


def verify_b_basis(alpha: Sequence[int]) -> BasisReport:
    """Each degree of ``R_alpha``: the ``b_w`` with that maj must span the quotient piece."""
    alpha = tuple(alpha)
    check_composition(alpha)
    pres = presentation_R(alpha, 0)
    ring = pres.ring
    target = q_multinomial(alpha)
    groups: dict[int, list[tuple[tuple[int, ...], MPoly]]] = {}
    for w in enumerate_words(alpha):
        groups.setdefault(word_stats(w)[2], []).append((w, b_polynomial(alpha, w)))
    rows, failures = [], []
    for e in range(max(target.degree, max(groups)) + 1):
        members = groups.get(e, [])
        piece = graded_piece(ring, pres.generators, e)
        gain = _rank_gain(piece.echelon, [piece.vector(b) for _, b in members])
        row = {"degree": e, "count": len(members), "rank_gain": gain, "dim": target[e]}
        rows.append(row)
        if not gain == len(members) == target[e] == piece.dim:
            failures.append(row | {"piece_dim": piece.dim, "words": [word_str(w) for w, _ in members]})
    return BasisReport(alpha, not failures, rows, failures)


def eliminated_b_basis(alpha: Sequence[int]) -> list[tuple[str, MPoly, MPoly]]:
    """``(w, b_w, reduced form)``: substitute eliminated variables, then take the normal form."""
    alpha = tuple(alpha)
    elim = eliminate(presentation_R(alpha, 0))
    ring = coordinate_ring(alpha)
    out = []
    for w in enumerate_words(alpha):
        b = b_polynomial(alpha, w)
        out.append((word_str(w), b, normal_form(ring, elim.generators, elim.reduce(b))))
    return out


def descent_basis(alpha: Sequence[int]) -> list[DescentMonomial]:
    alpha = tuple(alpha)
    return [a_monomial(alpha, w) for w in enumerate_words(alpha)]
