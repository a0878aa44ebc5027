"""Command-line front end.

JSON goes to stdout; ``--pretty`` adds a human-readable rendering on
stderr.  Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import acceptance
from .curves import (QuinticFamilyMember, aut_contains, aut_sigma_compat, diagonal_rho3_check, dihedral10,
                     format_polynomial, moduli_obstruction_quintic, polynomial_to_json,
                     smoothness_check_quintic)
from .cyclotomic import parse_element
from .descent import (CyclicNormalForm, RealModelParams, default_params, real_model_cyclic,
                      real_model_dihedral, verdict_cyclic, verdict_from_normal_form)
from .errors import PseudoRealError
from .finitegroup import closure, fingerprint, sigma_image, subgroup_conjugacy_search
from .primitive import build_a5, build_hessian, catalog, real_model_a5
from .projlinear import (Matrix3, ProjElement, format_matrix, matrix_from_json, matrix_to_json,
                         numeric_string)

EXPECTED_GROUPS = {
    "hess216": (216, {1: 1, 2: 9, 3: 80, 4: 54, 6: 72}),
    "hess72": (72, {1: 1, 2: 9, 3: 8, 4: 54}),
    "hess36": (36, {1: 1, 2: 9, 3: 8, 4: 18}),
    "a5": (60, {1: 1, 2: 15, 3: 20, 5: 24}),
}
CURVE_CHECKS = ("smooth", "aut", "moduli")


class UsageError(Exception):
    kind = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Output:
    def __init__(self, pretty: bool, precision: int):
        self.pretty = pretty
        self.precision = precision

    def emit(self, obj, text: str | None = None):
        print(json.dumps(obj, indent=2, default=str))
        if self.pretty and text:
            print(text, file=sys.stderr)

    def numeric(self, M: Matrix3):
        digits = max(6, int(self.precision * math.log10(2)) - 2)
        return [[numeric_string(x, digits, self.precision) for x in row] for row in M.rows()]

    def matrix(self, M: Matrix3) -> dict:
        return {"exact": matrix_to_json(M), "numeric": self.numeric(M)}


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {s!r}") from exc


def _params(args) -> RealModelParams | None:
    if args.alpha is None and args.beta is None:
        return None
    N = args.conductor or 4
    d = default_params()
    alpha = parse_element(args.alpha, N) if args.alpha is not None else d.alpha
    beta = parse_element(args.beta, N) if args.beta is not None else d.beta
    return RealModelParams(alpha, beta)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")


def _verdict_text(v) -> str:
    j = v.to_json()
    lines = [f"real field of moduli: {j['moduli']}",
             f"definable over R:     {v.definable_over_R}",
             f"pseudo-real:          {'yes' if j['pseudo_real'] else 'no'}",
             f"reason:               {j['reason']}"]
    if v.obstruction:
        lines.append(f"obstruction:          {v.obstruction}")
    if v.details.get("normal_form"):
        lines.append(f"normal form (n,a,b):  {tuple(v.details['normal_form'])}")
    if v.witness and "model" in v.witness:
        lines.append("real model:")
        lines.append(format_matrix(matrix_from_json(v.witness["model"])))
    return "\n".join(lines)


# --- commands ----------------------------------------------------------------

def cmd_classify(args, out: Output) -> int:
    _require(args, "n", "a", "b")
    v = verdict_from_normal_form(args.n, args.a, args.b, _params(args))
    out.emit(v.to_json(), _verdict_text(v))
    return 0


def cmd_classify_element(args, out: Output) -> int:
    _require(args, "matrix")
    try:
        with open(args.matrix) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.matrix}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.matrix} is not JSON: {exc}") from exc
    g = ProjElement(matrix_from_json(obj))
    v = verdict_cyclic(g, _params(args))
    out.emit(v.to_json(), _verdict_text(v))
    return 0


def cmd_real_model(args, out: Output) -> int:
    params = _params(args)
    if args.kind == "a5":
        m = real_model_a5(params)
        G = closure(m.generators())
        ok = all(g.is_real() for g in G) and G.order == 60
        names = ("A", "B", "C")
        mats = (m.A, m.B, m.C)
        obj = {"kind": "a5", "matrices": {k: out.matrix(M) for k, M in zip(names, mats)},
               "order": G.order, "all_real": ok, "diagnostics": m.diagnostics}
        text = "\n".join(f"{k}':\n{format_matrix(M)}" for k, M in zip(names, mats))
        out.emit(obj, text)
        return 0 if ok else 1
    if args.kind == "dihedral":
        _require(args, "n", "a")
        m = real_model_dihedral(args.n, args.a, params)
        G = closure(m.generators(), cap=2 * args.n)
        ok = m.rotation.is_real() and m.reflection.is_real() and G.order == 2 * args.n
        obj = {"kind": "dihedral", "n": args.n, "a": args.a, "rotation": out.matrix(m.rotation),
               "reflection": out.matrix(m.reflection), "order": G.order, "all_real": ok,
               "diagnostics": m.diagnostics}
        out.emit(obj, f"A':\n{format_matrix(m.rotation)}\nB':\n{format_matrix(m.reflection)}")
        return 0 if ok else 1
    _require(args, "n", "a")
    n, a = args.n, args.a
    b = args.b if args.b is not None else (-a) % n
    a, b = sorted((a, b))
    m = real_model_cyclic(CyclicNormalForm(n, a, b), params)
    checks = m.verify()
    obj = {"kind": "cyclic", "normal_form": [n, a, b], "model": out.matrix(m.matrix),
           "conjugator": matrix_to_json(m.conjugator), "checks": checks, "diagnostics": m.diagnostics}
    out.emit(obj, f"real model of diag(1, z^{a}, z^{b}), z = zeta_{n}:\n{format_matrix(m.matrix)}")
    return 0 if all(checks.values()) else 1


def cmd_catalog(args, out: Output) -> int:
    rows = [e.row() for e in catalog()]
    header = f"{'group':8} {'order':>5}  {'moduli':7} {'definable':9} {'pseudo-real':11} mode"
    lines = [header] + [
        f"{r['name']:8} {r['order']:>5}  {r['moduli']:7} {r['definable']:9} "
        f"{'yes' if r['pseudo_real'] else 'no':11} {r['mode']}" for r in rows]
    out.emit({"catalog": rows}, "\n".join(lines))
    return 0


def _build(name: str):
    if name == "a5":
        return build_a5()
    return build_hessian(int(name[4:]))


def cmd_verify(args, out: Output) -> int:
    name = args.group
    G = _build(name)
    fp = fingerprint(G)
    sig = sigma_image(G).same_elements(G)
    order, hist = EXPECTED_GROUPS[name]
    ok = fp.order == order and fp.order_histogram == hist
    obj = {"group": name, "order": fp.order, "histogram": fp.order_histogram, "sigma_stable": sig,
           "expected_order": order, "expected_histogram": hist, "ok": ok}
    if name == "hess72":
        psi = subgroup_conjugacy_search(G, sigma_image(G), build_hessian(216))
        obj["conjugator_in_hess216"] = matrix_to_json(psi.lift) if psi is not None else None
        ok = ok and psi is not None
        obj["ok"] = ok
    text = (f"{name}: order {fp.order} (expected {order}), histogram {fp.order_histogram}, "
            f"sigma-stable {sig}: {'OK' if ok else 'MISMATCH'}")
    out.emit(obj, text)
    return 0 if ok else 1


def cmd_curve(args, out: Output) -> int:
    _require(args, "a", "b")
    checks = [c.strip() for c in (args.check or ",".join(CURVE_CHECKS)).split(",") if c.strip()]
    unknown = [c for c in checks if c not in CURVE_CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}")
    m = QuinticFamilyMember(_rational(args.a), _rational(args.b))
    F = m.polynomial
    report = {"a": str(m.a), "b": str(m.b), "polynomial": polynomial_to_json(F),
              "smooth": None, "aut_contains_D10": None, "moduli_obstruction": None, "certificates": {}}
    D10 = dihedral10()
    ok = True
    if "smooth" in checks:
        cert = smoothness_check_quintic(m)
        report["smooth"] = cert.smooth
        report["certificates"]["smooth"] = cert.to_json()
    if "aut" in checks or "moduli" in checks:
        report["aut_contains_D10"] = aut_contains(F, D10)
        report["certificates"]["aut"] = {"D10_order": D10.order, "rho3": diagonal_rho3_check(m)}
        if report["aut_contains_D10"]:
            report["certificates"]["aut"]["sigma_compat"] = aut_sigma_compat(F, D10)
        else:
            ok = False
    if "moduli" in checks and report["aut_contains_D10"]:
        trace = moduli_obstruction_quintic(m)
        report["moduli_obstruction"] = trace.obstructed
        report["certificates"]["moduli"] = trace.to_json()
    text = "\n".join([f"C: {format_polynomial(F)}"] + [
        f"{k}: {report[k]}" for k in ("smooth", "aut_contains_D10", "moduli_obstruction")])
    out.emit(report, text)
    return 0 if ok else 1


def cmd_selftest(args, out: Output) -> int:
    gens = acceptance.corrupted_hessian_generators() if args.corrupt_hessian else None
    results = acceptance.run_all(hessian_gens=gens)
    ok = all(r.passed for r in results)
    lines = [r.line() for r in results]
    for line in lines:
        print(line, file=sys.stderr)
    out.pretty = False
    out.emit({"passed": ok, "criteria": [r.to_json() for r in results]})
    return 0 if ok else 1


COMMANDS = {
    "classify": cmd_classify,
    "classify-element": cmd_classify_element,
    "real-model": cmd_real_model,
    "catalog": cmd_catalog,
    "verify": cmd_verify,
    "curve": cmd_curve,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="also print a human-readable rendering to stderr")
    common.add_argument("--precision", type=int, default=128, help="bits used for numeric rendering")

    p = _Parser(prog="pseudoreal", description="Real fields of moduli and real models for finite subgroups of PGL3(C).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def params(sp):
        sp.add_argument("--alpha", help="expression in z = zeta_N, e.g. '1/2*z^3-2'")
        sp.add_argument("--beta")
        sp.add_argument("--conductor", type=int, help="N for --alpha/--beta (default 4, so z = i)")

    sp = sub.add_parser("classify", parents=[common], help="classify <diag(1, z^a, z^b)>, z = zeta_n")
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    params(sp)

    sp = sub.add_parser("classify-element", parents=[common], help="classify the cyclic group of a matrix")
    sp.add_argument("--matrix", metavar="FILE")
    params(sp)

    sp = sub.add_parser("real-model", parents=[common], help="explicit real models")
    sp.add_argument("kind", choices=("cyclic", "dihedral", "a5"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    params(sp)

    sub.add_parser("catalog", parents=[common], help="verdicts for the six primitive groups")

    sp = sub.add_parser("verify", parents=[common], help="recompute a primitive group")
    sp.add_argument("group", choices=tuple(EXPECTED_GROUPS))

    sp = sub.add_parser("curve", parents=[common], help="the quintic family")
    sp.add_argument("family", choices=("quintic",))
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--check", metavar="LIST", help="comma-separated subset of smooth,aut,moduli")

    sp = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    sp.add_argument("--corrupt-hessian", action="store_true",
                    help="negative control: alter one Hessian generator")
    return p


def _error(kind: str, detail: str):
    print(json.dumps({"error": {"kind": kind, "detail": detail}}, indent=2))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _error("usage", str(exc))
        return 2
    out = Output(args.pretty, args.precision)
    try:
        if args.precision < 53:
            raise UsageError("--precision must be at least 53 bits")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        _error("usage", str(exc))
        return 2
    except PseudoRealError as exc:
        _error(exc.kind, str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
