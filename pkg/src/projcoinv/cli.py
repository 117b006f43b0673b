"""Command-line front end: ``projcoinv <command> [options]``.

Every command prints a deterministic text rendering, or with ``--json`` a
single JSON report ``{command, parameters, status, results, timing}``.
Exit status is 0 when all checks hold, 1 when an identity fails and 2 for
usage or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Sequence

from . import bases, characters, deform, diagonal, qseries, quotient
from .combinat import (
    compositions,
    enumerate_syt,
    enumerate_words,
    parse_composition,
    parse_partition,
    partitions,
    word_stats,
    word_str,
)
from .exact.poly import QPoly

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class Outcome:
    """What a command hands back: status, JSON results and text lines."""

    def __init__(self, results: dict, lines: list[str], ok: bool = True):
        self.results = results
        self.lines = lines
        self.ok = ok


# helpers ---------------------------------------------------------------------------


def _need(args, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this command")
    return value


def _sizes(args, default_max: int) -> list[int]:
    if args.n is not None:
        return [args.n]
    return list(range(1, (args.max_n if args.max_n is not None else default_max) + 1))


def _qpoly_json(p: QPoly) -> list[str]:
    return [str(c) for c in p]


def _suite(name: str, items: list[dict]) -> Outcome:
    """Collect ``{label, ok, ...}`` items; failures keep their witness fields."""
    failures = [item for item in items if not item["ok"]]
    lines = [f"{'PASS' if item['ok'] else 'FAIL'}  {name}  {item['label']}" for item in items]
    lines.append(f"{name}: {len(items) - len(failures)}/{len(items)} passed")
    return Outcome({"suite": name, "items": items, "failures": failures}, lines, not failures)


# stats / qseries / ehrhart -------------------------------------------------------------


def cmd_stats_words(args) -> Outcome:
    alpha = _need(args, "alpha")
    rows, lines = [], [f"words with content {','.join(map(str, alpha))}", "word  Des  des  maj"]
    for w in enumerate_words(alpha):
        des_set, des, maj = word_stats(w)
        rows.append({"word": word_str(w), "Des": list(des_set), "des": des, "maj": maj})
        lines.append(f"{word_str(w)}  {{{','.join(map(str, des_set))}}}  {des}  {maj}")
    a = qseries.A_alpha(alpha)
    lines.append(f"A = {a}")
    return Outcome({"alpha": list(alpha), "words": rows, "A": a.to_json(), "A_text": str(a)}, lines)


def cmd_stats_syt(args) -> Outcome:
    shapes = [args.shape] if args.shape is not None else list(partitions(_need(args, "n")))
    out, lines = [], []
    for lam in shapes:
        lines.append(f"shape {','.join(map(str, lam))}")
        for T, des, maj in enumerate_syt(lam):
            out.append({"shape": list(lam), "tableau": T.to_json(), "des": des, "maj": maj})
            rows = "/".join(",".join(map(str, r)) for r in T.rows)
            lines.append(f"  {rows}  des={des} maj={maj}")
    return Outcome({"tableaux": out}, lines)


def cmd_qseries_multinomial(args) -> Outcome:
    alpha = _need(args, "alpha")
    p = qseries.q_multinomial(alpha)
    return Outcome({"alpha": list(alpha), "coeffs": _qpoly_json(p), "text": str(p)}, [str(p)])


def cmd_qseries_eulerian(args) -> Outcome:
    n = _need(args, "n")
    a = qseries.eulerian_table(n)
    return Outcome({"n": n, "A": a.to_json(), "text": str(a)}, [str(a)])


def cmd_ehrhart(args) -> Outcome:
    kind = args.polytope
    r = args.r if args.r is not None else 1
    if kind == "segre":
        spec = qseries.PolytopeSpec.segre(_need(args, "alpha"))
    elif kind == "simplex":
        spec = qseries.PolytopeSpec.simplex(_need(args, "n"), args.weights)
    else:
        spec = qseries.PolytopeSpec.hypercube(_need(args, "n"), args.weights)
    counts = qseries.q_ehrhart(spec, r, args.budget)
    text = " + ".join(f"{c}*q^{e}" for e, c in counts.items())
    return Outcome(
        {
            "polytope": kind,
            "dims": list(spec.dims),
            "weights": list(spec.weights),
            "r": r,
            "counts": [[e, c] for e, c in counts.items()],
        },
        [f"r={r}: {text}"],
    )


# hilbert ---------------------------------------------------------------------------------


def cmd_hilbert_segre(args) -> Outcome:
    alpha = _need(args, "alpha")
    order = args.rmax if args.rmax is not None else 5
    method = args.method or "closed_form"
    series = qseries.segre_hilbert(alpha, order, method, args.budget)
    return Outcome({"alpha": list(alpha), "method": method, "series": series.to_json()}, [str(series)])


def cmd_hilbert_quotient(args) -> Outcome:
    alpha = _need(args, "alpha")
    h = quotient.hilbert_P(alpha)
    return Outcome({"alpha": list(alpha), "hilbert": h.to_json(), "text": str(h)}, [str(h)])


def cmd_hilbert_partial(args) -> Outcome:
    alpha = _need(args, "alpha")
    h = deform.hilbert_R(alpha)
    pres = deform.presentation_R(alpha, 0)
    elim = deform.eliminate(pres)
    return Outcome(
        {
            "alpha": list(alpha),
            "hilbert": _qpoly_json(h),
            "text": str(h),
            "presentation": pres.to_json(),
            "eliminated": elim.to_json(),
        },
        [str(h), f"presentation {pres}", f"eliminated {elim}"],
    )


# characters ------------------------------------------------------------------------------


def cmd_character_pn(args) -> Outcome:
    n = _need(args, "n")
    method = args.method or "syt"
    ch = characters.char_P(n, method)
    return Outcome({"n": n, "method": method, "character": ch.to_json(), "text": str(ch)}, [str(ch)])


def cmd_character_residual(args) -> Outcome:
    k, m = _need(args, "k"), _need(args, "m")
    method = args.method or "plethysm"
    ch = characters.residual_char(k, m, method)
    return Outcome({"k": k, "m": m, "method": method, "character": ch.to_json(), "text": str(ch)}, [str(ch)])


# bases ---------------------------------------------------------------------------------


def cmd_basis(args) -> Outcome:
    alpha = _need(args, "alpha")
    rows, lines = [], []
    if args.deformed:
        for w, b, reduced in bases.eliminated_b_basis(alpha):
            _, des, maj = word_stats(tuple(int(c) for c in w))
            rows.append({"word": w, "des": des, "maj": maj, "b_w": str(b), "reduced": str(reduced)})
            lines.append(f"{w}  maj={maj}  b_w={b}  reduced={reduced}")
    else:
        for dm in bases.descent_basis(alpha):
            rows.append(dm.to_json())
            pts = " ".join("(" + ",".join(map(str, p)) + ")" for p in dm.points) or "-"
            lines.append(f"{word_str(dm.word)}  bideg={dm.bidegree}  points {pts}  a_w={dm.label()}")
    return Outcome({"alpha": list(alpha), "deformed": bool(args.deformed), "basis": rows}, lines)


# verification suites ---------------------------------------------------------------------


def suite_macmahon(args) -> list[dict]:
    order = args.rmax if args.rmax is not None else 8
    items = []
    for n in _sizes(args, 4):
        for alpha in compositions(n):
            rep = qseries.macmahon_check(alpha, order)
            item = {"label": f"alpha={alpha} R={order}", "ok": rep.holds}
            if not rep.holds:
                item["witness"] = {"t_degrees": rep.mismatches}
            items.append(item)
    return items


def suite_hilbert(args) -> list[dict]:
    items = []
    for n in _sizes(args, 4):
        for alpha in compositions(n):
            hp, a = quotient.hilbert_P(alpha), qseries.A_alpha(alpha)
            hr, qm = deform.hilbert_R(alpha), qseries.q_multinomial(alpha)
            inv = quotient.invariant_table(n, alpha)
            for label, ok, got, want in [
                ("hilbert_P = A", hp == a, str(hp), str(a)),
                ("hilbert_R = q-multinomial", hr == qm, str(hr), str(qm)),
                ("invariants = hilbert_P", inv == hp, str(inv), str(hp)),
            ]:
                item = {"label": f"alpha={alpha} {label}", "ok": ok}
                if not ok:
                    item["witness"] = {"got": got, "expected": want}
                items.append(item)
    return items


def suite_character(args) -> list[dict]:
    items = []
    for n in _sizes(args, 4):
        methods = ["syt", "koszul"] + (["trace"] if n <= 5 else [])
        chars = {m: characters.char_P(n, m) for m in methods}
        for m in methods[1:]:
            ok = chars[m] == chars["syt"]
            item = {"label": f"n={n} syt = {m}", "ok": ok}
            if not ok:
                item["witness"] = {"syt": str(chars["syt"]), m: str(chars[m])}
            items.append(item)
    return items


def suite_invariants(args) -> list[dict]:
    r_max = args.rmax if args.rmax is not None else 4
    items = []
    for n in _sizes(args, 4):
        rep = characters.invariants_free_check(n, r_max)
        item = {"label": f"n={n} r<={r_max}", "ok": rep.holds}
        if not rep.holds:
            item["witness"] = [row for row in rep.rows if row["invariants"] != str(row["monomials"])][:5]
        items.append(item)
    return items


def suite_bases(args) -> list[dict]:
    items = []
    for n in _sizes(args, 4):
        for alpha in compositions(n):
            for label, rep in (("a_w", bases.verify_a_basis(alpha)), ("b_w", bases.verify_b_basis(alpha))):
                item = {"label": f"alpha={alpha} {label}", "ok": rep.ok}
                if not rep.ok:
                    item["witness"] = rep.failures[:5]
                items.append(item)
    return items


def suite_fibre(args) -> list[dict]:
    items = []
    for n in _sizes(args, 4):
        rep = deform.semisimple_fibre_check(n)
        item = {"label": f"n={n} semisimple fibre rank {rep.rank}/{len(rep.points)} s1={rep.s1}", "ok": rep.ok}
        if rep.note:
            item["note"] = rep.note
        if not rep.ok:
            item["witness"] = rep.witness
        items.append(item)
        if n <= 4:
            iso = deform.fibre_isomorphism_check(n)
            item = {"label": f"n={n} fibre identification", "ok": iso.ok}
            if not iso.ok:
                item["witness"] = [s for s in iso.subsets if not s["ok"]] + [
                    e for e in iso.elementary if not e["ok"]
                ]
            items.append(item)
    return items


def suite_phi(args) -> list[dict]:
    items = []
    for n in _sizes(args, 3):
        rep = diagonal.phi_trivial_check(n)
        item = {"label": f"n={n} all {2 ** n} subset products", "ok": rep.all_zero}
        if not rep.all_zero:
            item["witness"] = {"subsets": rep.failures}
        items.append(item)
        if rep.control is not None:
            item = {"label": f"n={n} control: a1 not in the ideal", "ok": rep.control["ok"]}
            if not rep.control["ok"]:
                item["witness"] = rep.control
            items.append(item)
    return items


SUITES: dict[str, Callable] = {
    "macmahon": suite_macmahon,
    "hilbert": suite_hilbert,
    "character": suite_character,
    "invariants": suite_invariants,
    "bases": suite_bases,
    "fibre": suite_fibre,
    "phi-trivial": suite_phi,
}


def cmd_verify(args) -> Outcome:
    if args.suite == "all":
        if args.n is None and args.max_n is None:
            args.max_n = 3
        outcomes = {name: _suite(name, fn(args)) for name, fn in SUITES.items()}
        lines = [line for o in outcomes.values() for line in o.lines]
        ok = all(o.ok for o in outcomes.values())
        lines.append("all suites passed" if ok else "some suites FAILED")
        return Outcome({name: o.results for name, o in outcomes.items()}, lines, ok)
    return _suite(args.suite, SUITES[args.suite](args))


# parser ---------------------------------------------------------------------------------


def _composition(text: str) -> tuple[int, ...]:
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text: str) -> tuple[int, ...]:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text}") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=_composition, help="composition a1,a2,...")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--rmax", type=int)
    p.add_argument("--method")
    p.add_argument("--max-n", dest="max_n", type=int)
    p.add_argument("--budget", type=int, default=qseries.DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true", help="emit one JSON report")
    p.add_argument("--out", help="also write the JSON report to this file")
    p.add_argument("--timing", action="store_true", help="record wall-clock time in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="projcoinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(parent, name: str, handler: Callable, **kw) -> argparse.ArgumentParser:
        p = parent.add_parser(name, **kw)
        _common(p)
        p.set_defaults(handler=handler)
        return p

    stats = sub.add_parser("stats").add_subparsers(dest="what", required=True)
    leaf(stats, "words", cmd_stats_words)
    leaf(stats, "syt", cmd_stats_syt).add_argument("--shape", type=_partition)

    qs = sub.add_parser("qseries").add_subparsers(dest="what", required=True)
    leaf(qs, "multinomial", cmd_qseries_multinomial)
    leaf(qs, "eulerian", cmd_qseries_eulerian)

    eh = leaf(sub, "ehrhart", cmd_ehrhart)
    eh.add_argument("--polytope", choices=["simplex", "hypercube", "segre"], default="simplex")
    eh.add_argument("--r", type=int)
    eh.add_argument("--weights", type=_int_list)

    hb = sub.add_parser("hilbert").add_subparsers(dest="what", required=True)
    leaf(hb, "segre", cmd_hilbert_segre)
    leaf(hb, "quotient", cmd_hilbert_quotient)
    leaf(hb, "partial", cmd_hilbert_partial)

    ch = sub.add_parser("character").add_subparsers(dest="what", required=True)
    leaf(ch, "pn", cmd_character_pn)
    leaf(ch, "residual", cmd_character_residual)

    leaf(sub, "basis", cmd_basis).add_argument("--deformed", action="store_true")

    vf = leaf(sub, "verify", cmd_verify)
    vf.add_argument("suite", choices=list(SUITES) + ["all"])
    return parser


def _command_name(args) -> str:
    parts = [args.command]
    if getattr(args, "what", None):
        parts.append(args.what)
    if getattr(args, "suite", None):
        parts.append(args.suite)
    return " ".join(parts)


def _parameters(args) -> dict:
    skip = {"handler", "command", "what", "suite", "json", "out", "timing"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None or value is False:
            continue
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def run(argv: Sequence[str] | None = None) -> tuple[int, dict | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_ERROR if exc.code else EXIT_OK), None
    report = {"command": _command_name(args), "parameters": _parameters(args)}
    start = time.perf_counter()
    try:
        outcome = args.handler(args)
        status = "ok" if outcome.ok else "fail"
        report["results"] = outcome.results
        lines = outcome.lines
        code = EXIT_OK if outcome.ok else EXIT_FAIL
    except (UsageError, ValueError, qseries.BudgetExceeded) as exc:
        status = "error"
        report["results"] = {"error": f"{type(exc).__name__}: {exc}"}
        lines = [f"error: {exc}"]
        code = EXIT_ERROR
    report = {
        "command": report["command"],
        "parameters": report["parameters"],
        "status": status,
        "results": report["results"],
    }
    report["timing"] = {"seconds": round(time.perf_counter() - start, 3)} if args.timing else None
    text = json.dumps(report, indent=2, sort_keys=False)
    if args.json:
        print(text)
    else:
        stream = sys.stderr if code == EXIT_ERROR else sys.stdout
        for line in lines:
            print(line, file=stream)
        print(f"status: {status}", file=stream)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code, report


def main(argv: Sequence[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
