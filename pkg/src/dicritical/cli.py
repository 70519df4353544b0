"""``dicritical`` command-line interface.

Every command reads one JSON request (inline, from a file, or ``-`` for
stdin) and prints one report.  Exit status: 0 on success, 1 on a domain
error, 2 on malformed input or usage.
"""

import argparse
import json
import sys
import time

from . import __version__
from .core.poly import PolyRing, poly_from_json
from .errors import DicriticalError, ParseError
from .io import (
    int_list,
    load_json,
    optional_int,
    read_components,
    read_ideal,
    read_pencil,
    read_poly,
    read_ring,
    read_valuation,
    read_valuations,
    require,
)
from .valuation import value_to_json


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=default(0), help="random seed (default 0)")
    parser.add_argument("--max-depth", type=int, default=default(24), help="blowup depth limit (default 24)")
    parser.add_argument("--bound", type=int, default=default(None), help="normality / certification bound")
    parser.add_argument("--json", action="store_true", default=default(False), help="compact JSON output")
    parser.add_argument("--extend", choices=("none", "quadratic"), default=default("quadratic"))
    parser.add_argument("--timing", action="store_true", default=default(False), help="add wall-clock seconds")


MONO_ACTIONS = ("closure", "normal", "rees-vals", "decomp", "fiber", "find-element", "find-element-power", "reduction", "ext-rees")
PENCIL_ACTIONS = ("normalize", "dicriticals", "construct-b", "special-reduction", "verify-reduction", "realize")


def build_parser():
    parser = _Parser(prog="dicritical", description="Dicritical divisors, Rees valuations and reductions.")
    parser.add_argument("--version", action="version", version=f"dicritical {__version__}")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name, with_input=True, **kw):
        p = group.add_parser(name, **kw)
        _common(p, suppress=True)
        if with_input:
            p.add_argument("input", help="inline JSON, a file path, or - for stdin")
        return p

    gauss = sub.add_parser("gauss").add_subparsers(dest="action", required=True)
    leaf(gauss, "eval", help="Gauss extension value of a Laurent sum")
    mono = sub.add_parser("mono").add_subparsers(dest="action", required=True)
    for name in MONO_ACTIONS:
        leaf(mono, name)
    pencil = sub.add_parser("pencil").add_subparsers(dest="action", required=True)
    for name in PENCIL_ACTIONS:
        leaf(pencil, name)
    ex = leaf(sub, "example83", with_input=False, help="dicriticals of z^m = f_1 ... f_n")
    ex.add_argument("--m", type=int, required=True)
    ex.add_argument("--forms", required=True, help="comma-separated linear forms in X, Y")
    leaf(sub, "jacobian-demo", help="dicriticals at infinity of a plane polynomial")
    corpus = sub.add_parser("corpus").add_subparsers(dest="action", required=True)
    leaf(corpus, "run", with_input=False, help="run the acceptance suite")
    return parser


# -- handlers ------------------------------------------------------------------

def _gauss_eval(args, data):
    from .core.laurent import AuxLaurent
    from .valuation import ReesElement, gauss_eval, rees_ext_eval

    R = read_ring(data)
    v = read_valuation(require(data, "valuation", dict), R.field)
    F = AuxLaurent(R, read_components(require(data, "components", dict), R))
    out = {"value": value_to_json(gauss_eval(v, F))}
    if "VI" in data:
        VI = require(data, "VI", int)
        out["rees_value"] = value_to_json(rees_ext_eval(v, VI, ReesElement(R, F.components)))
    return out


def _mono(args, data):
    from . import monomial as mo

    I = read_ideal(data)
    action = args.action
    if action == "closure":
        C = mo.integral_closure(I)
        return {"closure": C.to_json(), "complete": C == I, "newton": mo.newton_polyhedron(I).to_json()}
    if action == "normal":
        bound = args.bound if args.bound is not None else optional_int(data, "bound", None, 1)
        return {"normal": mo.is_normal(I, bound), "bound": bound if bound is not None else I.d - 1}
    if action == "rees-vals":
        return [[list(v.weights), val] for v, val in mo.rees_valuations(I)]
    if action == "decomp":
        n = optional_int(data, "n", 0)
        return {"n": n, "holds": mo.verify_power_decomposition(I, n, bound=args.bound)}
    if action == "fiber":
        return mo.fiber_hilbert(I, optional_int(data, "n", 1)).to_json()
    if action == "find-element":
        idx = int_list(data, "j") if "j" in data else None
        x = mo.find_element(I, idx, seed=args.seed)
        return {"x": str(x), "values": [[list(v.weights), value_to_json(v(x)), val] for v, val in mo.rees_valuations(I)]}
    if action == "find-element-power":
        s, x = mo.find_element_power(I, optional_int(data, "r", 1, 1), seed=args.seed)
        return {"s": s, "x": str(x)}
    if action == "reduction":
        return _reduction(args, data, I)
    if action == "ext-rees":
        R = I.ring()
        f = mo.ExtReesElement(R, read_components(require(data, "components", dict), R), I)
        return mo.ext_rees_check(f, I)
    raise UsageError(f"unknown mono action {action}")


def _reduction(args, data, I):
    from .errors import CertificationFailed
    from .monomial import certify_reduction, find_reduction

    n_max = args.bound if args.bound is not None else optional_int(data, "n_max", 6)
    R = I.ring()
    if "J" in data:
        J = [read_poly(f, R, "J") for f in require(data, "J", list)]
        cert = certify_reduction(I, J, n_max)
        if cert is None:
            raise CertificationFailed(f"I^(n+1) != J I^n for every n <= {n_max}")
        return {"J": [str(f) for f in J], "certificate": cert}
    x1 = read_poly(data["x1"], R, "x1") if "x1" in data else None
    found = find_reduction(I, seed=args.seed, x1=x1, n_max=n_max)
    return {"J": [str(f) for f in found["J"]], "power": found["power"], "certificate": found["certificate"]}


def _pencil(args, data):
    from .constructions import (
        construct_b,
        construct_pencil_with_dicriticals,
        construct_special_reduction,
        verify_reduction_2d,
    )
    from .pencil import pencil_normalize, principalize

    action = args.action
    if action == "normalize":
        p = read_pencil(data)
        q = pencil_normalize(p.a, p.b)
        return {"a": str(q.a), "b": str(q.b)}
    if action == "dicriticals":
        return principalize(read_pencil(data), args.max_depth, args.extend).to_json()
    if action == "realize":
        U = read_valuations(data)
        p = construct_pencil_with_dicriticals(U, seed=args.seed, max_depth=args.max_depth)
        return {"a": str(p.a), "b": str(p.b), "report": principalize(p, args.max_depth).to_json()}
    U = read_valuations(data)
    n = int_list(data, "n", 1)
    if len(n) != len(U):
        raise ParseError("n", "needs one multiplicity per valuation")
    if action == "construct-b":
        s, b = construct_b(U, n, seed=args.seed)
        return {"s": s, "b": str(b)}
    R = PolyRing(U[0].base_field, ("x", "y"))
    if action == "special-reduction":
        eta = read_poly(require(data, "eta"), R, "eta")
        m = optional_int(data, "m", 1, 1)
        t, a = construct_special_reduction(U, n, eta, m, seed=args.seed, max_depth=args.max_depth)
        return {"t": t, "a": str(a), "b": str(eta ** (m * t))}
    if action == "verify-reduction":
        p = read_pencil(require(data, "pencil", dict))
        t = optional_int(data, "t", 1, 1)
        return {"holds": verify_reduction_2d(p, U, n, t, args.max_depth)}
    raise UsageError(f"unknown pencil action {action}")


def _normal_singularity(args, data):
    from .constructions import normal_sing_dicriticals

    forms = [f.strip() for f in args.forms.split(",") if f.strip()]
    if not forms:
        raise ParseError("forms", "needs at least one linear form")
    return normal_sing_dicriticals(args.m, forms)


def _jacobian(args, data):
    from .constructions import jacobian_demo

    raw = data["f"] if isinstance(data, dict) and "f" in data else data
    if not isinstance(raw, dict):
        raise ParseError("f", "expected a polynomial object")
    f = poly_from_json(raw)
    out = jacobian_demo(f, args.max_depth, args.extend)
    return {
        "f": str(f),
        "degree": out["degree"],
        "points": [{"point": p["point"], "field": p["field"], "report": p["report"].to_json()} for p in out["points"]],
    }


def _corpus_run(args, data):
    from .acceptance import run_all

    rows = run_all()
    table = []
    for name, ok, detail, seconds in rows:
        row = {"criterion": name, "ok": ok, "detail": detail}
        if args.timing:
            row["seconds"] = round(seconds, 3)
        table.append(row)
    return {"passed": sum(r["ok"] for r in table), "total": len(table), "criteria": table}


HANDLERS = {
    "gauss": _gauss_eval,
    "mono": _mono,
    "pencil": _pencil,
    "example83": _normal_singularity,
    "jacobian-demo": _jacobian,
    "corpus": _corpus_run,
}


# -- output --------------------------------------------------------------------

def render_text(obj, indent=0):
    """Indented plain-text view of a JSON-compatible value."""
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if _is_flat(obj):
            return pad + _scalar(obj)
        lines = []
        for item in obj:
            body = render_text(item, indent + 1).lstrip()
            lines.append(f"{pad}- {body}")
        return "\n".join(lines)
    return pad + _scalar(obj)


def _is_flat(v):
    return isinstance(v, list) and all(not isinstance(x, dict) for x in v) and len(json.dumps(v)) <= 72


def _scalar(v):
    if isinstance(v, str):
        return v
    return json.dumps(v)


def render_table(result):
    """Pass/fail table for ``corpus run``."""
    width = max(len(r["criterion"]) for r in result["criteria"])
    lines = []
    for r in result["criteria"]:
        secs = f"  {r['seconds']:7.3f}s" if "seconds" in r else ""
        lines.append(f"{'PASS' if r['ok'] else 'FAIL'}  {r['criterion']:<{width}}{secs}  {r['detail']}")
    lines.append(f"{result['passed']}/{result['total']} criteria passed")
    return "\n".join(lines)


def _emit(report, compact):
    if compact:
        print(json.dumps(report, separators=(",", ":")))
    elif report.get("command") == "corpus run" and "result" in report:
        print(render_table(report["result"]))
    else:
        print(render_text(report))


def _command_name(args):
    action = getattr(args, "action", None)
    return args.command if action is None else f"{args.command} {action}"


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    compact = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _emit({"error": "UsageError", "message": str(exc), "version": __version__}, compact)
        return 2
    for key, default in (("seed", 0), ("max_depth", 24), ("bound", None), ("json", False), ("extend", "quadratic"), ("timing", False)):
        if not hasattr(args, key):
            setattr(args, key, default)
    report = {"command": _command_name(args)}
    start = time.perf_counter()
    try:
        data = load_json(args.input) if hasattr(args, "input") else None
        result = HANDLERS[args.command](args, data)
    except ParseError as exc:
        _emit({**report, **exc.to_json(), "version": __version__}, args.json)
        return 2
    except DicriticalError as exc:
        _emit({**report, **exc.to_json(), "version": __version__}, args.json)
        return 1
    except Exception as exc:  # still answer in JSON rather than with a traceback
        _emit({**report, "error": "InternalError", "message": f"{type(exc).__name__}: {exc}", "version": __version__}, args.json)
        return 1
    report.update({"result": result, "seed": args.seed, "version": __version__})
    if args.timing:
        report["timing"] = round(time.perf_counter() - start, 6)
    _emit(report, args.json)
    if args.command == "corpus" and result["passed"] != result["total"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
