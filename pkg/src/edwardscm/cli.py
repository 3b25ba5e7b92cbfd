"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 unreachable target,
4 verification violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import poly
from .cm import (
    classify_cm_predict,
    count_complete_edwards_invariants,
    count_points,
    frobenius_data,
    order_discriminant,
    volcano_level,
)
from .curves import WeierstrassCurve, montgomery_to_twisted_edwards, montgomery_to_weierstrass
from .errors import EdwardsCMError, InvalidParameterError, NoEdwardsFormError, UnreachableTargetError
from .field import PrimeField
from .forms import (
    curve_from_j,
    edwards_from_kubert,
    kubert_curve,
    kubert_from_type_one,
    montgomery_from_j,
    montgomery_from_type_one,
    u_from_j,
)
from .isogeny import descend_to_complete_edwards
from .sweeps import SUITES, primes_in, run_suite, table_row_key
from .torsion import TorsionType, classify_two_torsion, f4_polynomial, predict_splitting, split_f4_type_one

EXIT_OK, EXIT_INVALID, EXIT_UNREACHABLE, EXIT_VIOLATIONS = 0, 2, 3, 4


class CommandFailed(Exception):
    def __init__(self, code: int, message: str, report: dict | None = None):
        super().__init__(message)
        self.code = code
        self.report = report


def _point(P) -> Any:
    return "O" if P is None else [P[0], P[1]]


def _curve(E: WeierstrassCurve) -> dict:
    return {"p": E.p, "a2": E.a2, "a4": E.a4, "a6": E.a6}


def _label(E: WeierstrassCurve) -> str:
    if E.a2 == 0:
        return f"[{E.a4}, {E.a6}]"
    return f"[{E.a2}, {E.a4}, {E.a6}]"


def _build_curve(p: int, a2: int, a4: int, a6: int) -> WeierstrassCurve:
    return WeierstrassCurve(PrimeField(p), a2, a4, a6)


def cmd_analyze(args) -> dict:
    E = _build_curve(args.p, args.a2, args.a4, args.a6)
    f = E.field
    r = classify_two_torsion(E)
    res: dict = {
        "discriminant": E.discriminant(),
        "discriminant_legendre": f.legendre(E.discriminant()),
        "j": E.j_invariant(),
        "torsion_type": r.torsion_type.value,
        "roots": list(r.roots),
        "four_torsion": [_point(P) for P in r.four_torsion],
        "has_point_of_order_4": bool(r.four_torsion),
        "complete_edwards": r.complete_edwards,
        "montgomery": montgomery_from_type_one(E, r) is not None,
        "f4_factor_degrees": list(poly.factor_degrees(f4_polynomial(E), f.p)),
    }
    if r.torsion_type is TorsionType.I:
        fac = split_f4_type_one(r.x0, r.C, r.D, f)
        res.update(
            x0=r.x0,
            C=r.C,
            D=r.D,
            D2=r.D2,
            D2_legendre=f.legendre(r.D2),
            splitting_predicted=[list(x) for x in predict_splitting(r.D2, f)],
            splitting_observed=[
                list(poly.factor_degrees(fac.P2, f.p)),
                list(poly.factor_degrees(fac.P4, f.p)),
            ],
        )
    return {"command": "analyze", "input": _curve(E), "results": res}


def _edwards_d(E: WeierstrassCurve, report) -> int:
    b, _ = kubert_from_type_one(E, report)
    C, _ = edwards_from_kubert(b, E.field)
    return C.d


def _table_row(E: WeierstrassCurve) -> str:
    frob = frobenius_data(E)
    level, _ = volcano_level(E, frob)
    D, parity = order_discriminant(frob, level)
    row = classify_cm_predict(D, parity)
    return (
        f"D = {D} ({table_row_key(D, parity)}): 2-torsion {row.predicted_torsion.value}, "
        f"Edwards {row.edwards.value}"
    )


def cmd_descend(args) -> dict:
    E = _build_curve(args.p, args.a2, args.a4, args.a6)
    kernels = [int(k) for k in args.kernels.split(",")] if args.kernels else None
    try:
        path = descend_to_complete_edwards(E, kernels)
    except NoEdwardsFormError as exc:
        diag = str(exc)
        try:
            diag += "; table row " + _table_row(E)
        except EdwardsCMError:
            pass
        raise CommandFailed(EXIT_UNREACHABLE, diag) from exc
    rows = []
    for i, curve in enumerate(path.curves):
        rows.append(
            {
                "i": i,
                "curve": _label(curve),
                "coefficients": [curve.a2, curve.a4, curve.a6],
                "two_torsion": list(poly.distinct_roots(curve.cubic(), curve.p)),
                "kernel": path.steps[i].kernel_x0 if i < len(path.steps) else None,
            }
        )
    rep = path.terminal_report
    res = {
        "steps": len(path.steps),
        "path": rows,
        "terminal": _curve(path.terminal),
        "terminal_four_torsion": [_point(P) for P in rep.four_torsion],
        "edwards_d": _edwards_d(path.terminal, rep),
    }
    return {"command": "descend", "input": {**_curve(E), "kernels": kernels}, "results": res}


def _source_curve(args) -> WeierstrassCurve:
    f = PrimeField(args.p)
    if args.j is not None:
        return curve_from_j(args.j, args.c, f)
    if args.curve is None:
        raise InvalidParameterError("give either --j or --curve")
    a2, a4, a6 = args.curve
    return WeierstrassCurve(f, a2, a4, a6)


def _certify(name: str, ok: bool) -> None:
    if not ok:
        raise CommandFailed(EXIT_VIOLATIONS, f"self-certification failed: {name}")


def cmd_convert(args) -> dict:
    E = _source_curve(args)
    f = E.field
    r = classify_two_torsion(E)
    order = count_points(E)
    res: dict = {"source": _curve(E), "source_order": order}
    if args.target == "montgomery":
        if args.j is not None:
            out = montgomery_from_j(args.j, args.c, f)
            if out is None:
                us = u_from_j(args.j, f)
                why = "no root u of (u+16)^3 = j u" if not us else "u + 64 is not a square for any root u"
                raise CommandFailed(EXIT_UNREACHABLE, f"no Montgomery form: {why}")
        else:
            out = montgomery_from_type_one(E, r)
            if out is None:
                why = "no rational 2-torsion point" if not r.roots else "F'(x0) is not a square at any rational root x0"
                raise CommandFailed(EXIT_UNREACHABLE, f"no Montgomery form: {why}")
        M, m = out
        W, _ = montgomery_to_weierstrass(M)
        _certify("j", M.j_invariant() == E.j_invariant())
        _certify("order", count_points(W) == order)
        res.update(A=M.A, B=M.B, shift=m.shift, scale=m.scale, map="X = scale*x + shift, Y = scale^2*y")
    elif args.target == "kubert":
        if r.torsion_type is not TorsionType.I:
            raise CommandFailed(EXIT_UNREACHABLE, "no Kubert form: the curve is not of type I")
        if f.legendre(r.D2) != 1:
            raise CommandFailed(EXIT_UNREACHABLE, "no Kubert form: D2 is not a square")
        b, iso = kubert_from_type_one(E, r)
        K = kubert_curve(b, f)
        _certify("j", K.j_invariant() == E.j_invariant())
        _certify("order", count_points(K) == order)
        res.update(b=b, u=iso.u, r=iso.r, map="(x, y) on EK_b -> (u^2 x + r, u^3 y)")
    else:
        if r.complete_edwards:
            b, _ = kubert_from_type_one(E, r)
            C, _ = edwards_from_kubert(b, f)
            _certify("order", count_points(kubert_curve(b, f)) == order)
            _certify("affine points", sum(1 for _ in C.affine_points()) == order)
            res.update(route="kubert", b=b)
        else:
            out = montgomery_from_type_one(E, r)
            if out is None:
                raise CommandFailed(EXIT_UNREACHABLE, "no twisted Edwards form: no Montgomery form exists")
            M, _ = out
            C, _ = montgomery_to_twisted_edwards(M)
            W, _ = montgomery_to_weierstrass(M)
            _certify("order", count_points(W) == order)
            res.update(route="montgomery", A=M.A, B=M.B)
        _certify("j", C.j_invariant() == E.j_invariant())
        res.update(a=C.a, d=C.d, complete=C.complete)
    res["certified"] = ["j", "order"]
    inp = {"p": args.p, "target": args.target, "c": args.c}
    if args.j is not None:
        inp["j"] = args.j % args.p
    else:
        inp["curve"] = list(args.curve)
    return {"command": "convert", "input": inp, "results": res}


def cmd_classify(args) -> dict:
    if args.disc is not None:
        row = classify_cm_predict(args.disc, args.vparity)
        return {
            "command": "classify",
            "input": {"D": args.disc, "V_parity": args.vparity},
            "results": _row(row),
        }
    if args.p is None or args.coeffs is None or len(args.coeffs) != 3:
        raise InvalidParameterError("classify needs p a2 a4 a6, or --disc D --vparity even|odd")
    E = _build_curve(args.p, *args.coeffs)
    frob = frobenius_data(E)
    level, n = volcano_level(E, frob)
    D, parity = order_discriminant(frob, level)
    row = classify_cm_predict(D, parity)
    r = classify_two_torsion(E)
    res = {
        "order": frob.order,
        "trace": frob.U,
        "V": frob.V,
        "D_K": frob.D_K,
        "floor_level": n,
        "level": level,
        "predicted": _row(row),
        "observed": {
            "torsion": r.torsion_type.value,
            "montgomery": montgomery_from_type_one(E, r) is not None,
            "complete_edwards": r.complete_edwards,
        },
    }
    return {"command": "classify", "input": _curve(E), "results": res}


def _row(row) -> dict:
    return {
        "D": row.D,
        "V_parity": row.V_parity,
        "torsion": row.predicted_torsion.value,
        "montgomery": row.montgomery.value,
        "edwards": row.edwards.value,
    }


def cmd_count(args) -> dict:
    predicted, observed = count_complete_edwards_invariants(args.p, args.t)
    rep = {
        "command": "count",
        "input": {"p": args.p, "t": args.t},
        "results": {"predicted": predicted, "observed": observed, "match": predicted == observed},
    }
    if predicted != observed:
        raise CommandFailed(EXIT_VIOLATIONS, f"predicted {predicted} != observed {observed}", rep)
    return rep


def cmd_verify(args) -> dict:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = {}
    bad = 0
    for name in names:
        rep = run_suite(name, primes_in(args.pmin, args.pmax), jobs=args.jobs)
        bad += len(rep.violations)
        results[name] = {
            "primes": len(rep.primes),
            "curves": rep.curves,
            "checked": rep.checked,
            "violations": len(rep.violations),
            "examples": [list(map(str, v)) for v in rep.violations[:10]],
        }
    out = {"command": "verify", "input": {"suite": args.suite, "pmin": args.pmin, "pmax": args.pmax}, "results": results}
    if bad:
        raise CommandFailed(EXIT_VIOLATIONS, f"{bad} violations", out)
    return out


def _text(report: dict) -> str:
    cmd = report["command"]
    res = report["results"]
    lines = []
    if cmd == "descend":
        lines.append(f"{'i':>2}  {'E_i':<24} {'2-torsion':<22} kernel")
        for row in res["path"]:
            tors = "{" + ", ".join(map(str, row["two_torsion"])) + "}"
            k = "" if row["kernel"] is None else str(row["kernel"])
            lines.append(f"{row['i']:>2}  {row['curve']:<24} {tors:<22} {k}")
        pts = ", ".join(f"({x}, {y})" for x, y in res["terminal_four_torsion"])
        lines.append(f"terminal 4-torsion: {pts}")
        lines.append(f"Edwards parameter d = {res['edwards_d']} (complete)")
        return "\n".join(lines)
    if cmd == "verify":
        for name, r in res.items():
            status = "ok" if r["violations"] == 0 else "FAIL"
            lines.append(
                f"{name}: {r['primes']} primes, {r['curves']} curves, {r['checked']} checked, "
                f"{r['violations']} violations [{status}]"
            )
            lines.extend("  " + " ".join(v) for v in r["examples"])
        return "\n".join(lines)

    def walk(d, indent=""):
        for k in sorted(d):
            v = d[k]
            if isinstance(v, dict):
                lines.append(f"{indent}{k}:")
                walk(v, indent + "  ")
            else:
                lines.append(f"{indent}{k}: {v}")

    walk(res)
    return "\n".join(lines)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edwardscm", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def curve_args(sp):
        sp.add_argument("p", type=int)
        sp.add_argument("a2", type=int)
        sp.add_argument("a4", type=int)
        sp.add_argument("a6", type=int)

    sp = sub.add_parser("analyze", help="2- and 4-torsion report of a curve")
    curve_args(sp)
    _common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("descend", help="2-isogeny path to a complete Edwards curve")
    curve_args(sp)
    sp.add_argument("--kernels", help="comma-separated kernel abscissas to replay")
    _common(sp)
    sp.set_defaults(func=cmd_descend)

    sp = sub.add_parser("convert", help="Montgomery, Edwards or Kubert model of a curve")
    sp.add_argument("p", type=int)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--j", type=int)
    src.add_argument("--curve", type=int, nargs=3, metavar=("A2", "A4", "A6"))
    sp.add_argument("--c", type=int, default=1, help="twist scale for --j (default 1)")
    sp.add_argument("--target", choices=["montgomery", "edwards", "kubert"], required=True)
    _common(sp)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("classify", help="reduction-table row of a curve or a discriminant")
    sp.add_argument("p", type=int, nargs="?")
    sp.add_argument("coeffs", type=int, nargs="*", metavar="a")
    sp.add_argument("--disc", type=int)
    sp.add_argument("--vparity", choices=["even", "odd"])
    _common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("count", help="predicted vs observed complete-Edwards invariants")
    sp.add_argument("p", type=int)
    sp.add_argument("t", type=int)
    _common(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("verify", help="exhaustive verification sweeps")
    sp.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--pmin", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=1)
    _common(sp)
    sp.set_defaults(func=cmd_verify)
    return ap


def _emit(report: dict, as_json: bool, stream) -> None:
    if as_json:
        stream.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        stream.write(_text(report) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except CommandFailed as exc:
        if exc.report is not None:
            _emit(exc.report, args.json, sys.stdout)
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except UnreachableTargetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    except (EdwardsCMError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(report, args.json, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
