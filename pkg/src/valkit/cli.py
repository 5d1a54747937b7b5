"""valkit command line: val, tree, certify, plot, coeffs.

Exit codes: 0 ok, 1 usage or parse error, 2 compute failure, 3 certification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from . import kernels as kn
from .errors import ParseError, ValkitError
from .words import PeriodicWord

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_CERT = 0, 1, 2, 3
BOUND_TOL = 1e-3

_WORD_RE = re.compile(r"^\s*\[?\s*(\d+(?:\s*,\s*\d+)*)\s*\]?\s*$")
_SURD_RE = re.compile(
    r"^\s*\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*?\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*(?:/\s*([+-]?\d+))?\s*$"
)


def parse_word(text: str) -> PeriodicWord:
    """'[a1,a2,...]' -> PeriodicWord."""
    m = _WORD_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse word literal {text!r}; expected e.g. [1,2,2,1]")
    letters = tuple(int(s) for s in m.group(1).split(","))
    if any(a < 1 for a in letters):
        raise ParseError(f"word letters must be positive: {text!r}")
    return PeriodicWord(letters)


def parse_surd(text: str):
    """'(p+q*sqrt(d))/r' -> QuadSurd."""
    from .surd import normalize

    m = _SURD_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse surd literal {text!r}; expected e.g. (1+1*sqrt(3))/2")
    p, sign, q, d, r = m.groups()
    q_val = int(q) * (1 if sign == "+" else -1)
    try:
        return normalize(int(p), q_val, int(r) if r is not None else 1, int(d))
    except ValkitError as exc:
        raise ParseError(f"{text!r}: {exc}") from exc


def _round(obj):
    """Round floats to 15 significant digits for output."""
    if isinstance(obj, float):
        return obj if not math.isfinite(obj) else float(f"{obj:.15g}")
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _dump(obj) -> str:
    return json.dumps(_round(obj), indent=2)


@dataclass
class Config:
    precision: str = "double"
    tol: float = 1e-9
    n_max: int = 60
    grid: int = 512
    refine: int = 40

    def __post_init__(self):
        if self.tol <= 0 or self.n_max < 0 or self.grid < 2 or self.refine < 0:
            raise ParseError("tolerances and caps must be positive")


def _load_f(spec: str, n_max: int):
    from .modfunc import constant_function, j_function, load_function

    if spec == "j":
        return j_function(n_max)
    if spec == "one":
        return constant_function(1)
    return load_function(spec)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_val(args, cfg: Config, out) -> int:
    from .cycle import re_val, re_val_extended, val_complex
    from .surd import cf_expand

    f = _load_f(args.f, cfg.n_max)
    extra = {}
    conj = False
    if args.surd is not None:
        w = parse_surd(args.surd)
        cf = cf_expand(w)
        word = PeriodicWord(cf.period)
        conj = len(cf.preperiod) % 2 == 1
        extra["cf"] = {"preperiod": list(cf.preperiod), "period": list(cf.period)}
    else:
        word = parse_word(args.word)
    results = {}
    if args.method in ("formula", "both"):
        if cfg.precision == "extended":
            results["formula"] = re_val_extended(f, word).to_json()
        else:
            results["formula"] = re_val(f, word, tol=cfg.tol).to_json()
    if args.method in ("oracle", "both"):
        res = val_complex(f, word, tol=min(cfg.tol, 1e-10))
        if conj and res.im_val is not None:
            res.im_val = -res.im_val
        results["oracle"] = res.to_json()
    if len(results) == 1:
        payload = next(iter(results.values()))
    else:
        payload = dict(results)
        payload["difference"] = abs(results["formula"]["re_val"] - results["oracle"]["re_val"])
    payload.update(extra)
    out.write(_dump(payload) + "\n")
    return EXIT_OK


def cmd_tree(args, cfg: Config, out) -> int:
    from .cycle import re_val
    from .words import MARKOV_LEFT, MARKOV_RIGHT, markov_tree, run_length

    f = _load_f(args.f, cfg.n_max)
    lo = re_val(f, MARKOV_LEFT, tol=cfg.tol).re_val
    hi = re_val(f, MARKOV_RIGHT, tol=cfg.tol).re_val
    root = markov_tree(args.depth)
    violations = []

    def build(node) -> dict:
        from .cycle import word_data
        from .surd import value_of_period

        v = re_val(f, node.word, tol=cfg.tol).re_val
        if not lo - BOUND_TOL <= v <= hi + BOUND_TOL:
            violations.append(list(node.word.letters))
        return {
            "word": list(node.word.letters),
            "label": run_length(node.word),
            "depth": node.depth,
            "value": value_of_period(node.word.letters).as_dict(),
            "re_val": v,
            "epsilon_log": word_data(node.word).log_eps,
            "children": [build(c) for c in node.children],
        }

    tree = build(root)
    payload = {"f": f.name, "depth": args.depth, "bounds": {"lower": lo, "upper": hi, "tol": BOUND_TOL},
               "violations": violations, "tree": tree}
    out.write(_dump(payload) + "\n")
    return EXIT_CERT if violations else EXIT_OK


def cmd_certify(args, cfg: Config, out) -> int:
    from .certify import run_suite

    reports = run_suite(args.suite, grid=cfg.grid, refine=cfg.refine)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(_dump([r.to_json() for r in reports]) + "\n")
    for r in reports:
        ref = "" if r.paper_constant is None else f" ref={r.paper_constant:g}"
        out.write(f"{r.verdict:12s} {r.task_id:32s} {r.kind:5s} value={r.value:.15g}{ref}"
                  f" margin={r.margin:.3g}\n")
    fails = [r.task_id for r in reports if r.verdict == "fail"]
    out.write(f"{len(reports)} tasks, {len(fails)} failed\n")
    return EXIT_CERT if fails else EXIT_OK


def _figure_table(fig: int, n: int):
    from .cycle import D, hat_S
    from .words import PeriodicWord as W

    pi = math.pi
    phi_w = W((1, 1))
    t_arc = np.linspace(pi / 3, 2 * pi / 3, n)
    t_half = np.linspace(pi / 3, pi / 2, n)

    def mesh(xr, tr):
        m = max(2, int(math.sqrt(n)) + 1)
        X, T = np.meshgrid(np.linspace(*xr, m), np.linspace(*tr, m), indexing="ij")
        return X.ravel(), T.ravel()

    if fig == 2:
        s = hat_S(phi_w, t_arc)
        return ["t", "hat_S_phi", "hat_S_phi_symmetrized"], [t_arc, s, 0.5 * (s + hat_S(phi_w, pi - t_arc))]
    if fig == 3:
        return ["t", "D_phi_w"], [t_arc, D(phi_w, W((1, 2)), t_arc)]
    if fig == 4:
        x = np.linspace(0.05, 10.0, n)
        return ["x", "Z_pi_3", "Z_5pi_12", "Z_pi_2"], [x, kn.Z(x, pi / 3), kn.Z(x, 5 * pi / 12), kn.Z(x, pi / 2)]
    if fig == 5:
        return ["t", "two_L_phi_over_cos2_minus_1", "log3_P_phi"], [t_half, kn.a2_lhs(t_half), kn.a2_rhs(t_half)]
    if fig == 6:
        return ["t", "gap_x_1_3", "gap_x_1_4"], [t_half, kn.a3_gap(1 / 3, t_half), kn.a3_gap(0.25, t_half)]
    if fig == 7:
        x, t = mesh((0.0, 0.25), (2 * pi / 3, pi))
        return ["x", "t", "N"], [x, t, kn.N(x, t)]
    if fig == 8:
        x, t = mesh((0.5, 1.0), (pi / 3, pi / 2))
        return ["x", "t", "L_phi_R", "P_phi_over_quartic"], [x, t, kn.a3_LR(x, t), kn.a3_Pq(x, t)]
    if fig == 9:
        x, t = mesh((4 / 3, kn.PHI), (pi / 3, pi / 2))
        return ["x", "t", "lhs", "rhs"], [x, t, kn.a5_a2_lhs(x, t), kn.a5_a2_rhs(x, t)]
    if fig == 10:
        x = np.linspace(4 / 3, kn.PHI, n + 1)[:-1]
        return ["x", "envelope_a"], [x, kn.a5_plot_a(x)]
    if fig == 11:
        x = np.linspace(4 / 3, kn.PHI, n + 1)[:-1]
        return ["x", "envelope_b"], [x, kn.a5_plot_b(x)]
    raise ParseError(f"no data for figure {fig}; choose 2..11")


def _parse_range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(eval_expr(s)) for s in text.split(":"))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad range {text!r}; use lo:hi, e.g. pi/3:pi/2") from exc
    return lo, hi


def eval_expr(s: str) -> float:
    """Tiny numeric literal evaluator: numbers, pi, phi, psi, + - * /."""
    if not re.fullmatch(r"[0-9eE.+\-*/() pihs]*", s.strip()):
        raise ValueError(s)
    return float(eval(s, {"__builtins__": {}}, {"pi": math.pi, "phi": kn.PHI, "psi": kn.PSI}))


def cmd_plot(args, cfg: Config, out) -> int:
    if args.kernel:
        if args.kernel not in kn.KERNELS:
            raise ParseError(f"unknown kernel {args.kernel!r}; choose from {sorted(kn.KERNELS)}")
        fn = kn.KERNELS[args.kernel]
        xr, tr = _parse_range(args.x), _parse_range(args.t)
        m = max(2, args.n)
        X, T = np.meshgrid(np.linspace(*xr, m), np.linspace(*tr, m), indexing="ij")
        header, cols = ["x", "t", args.kernel], [X.ravel(), T.ravel(), np.asarray(fn(X, T)).ravel()]
    else:
        header, cols = _figure_table(args.figure, args.n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in zip(*cols):
        writer.writerow([f"{float(v):.15g}" for v in row])
    out.write(buf.getvalue())
    return EXIT_OK


def cmd_coeffs(args, cfg: Config, out) -> int:
    from .modfunc import j_coefficients

    coeffs = j_coefficients(args.n_max)
    out.write(json.dumps({str(n - 1): c for n, c in enumerate(coeffs)}, indent=2) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="valkit", description="Values of modular functions at real quadratic irrationals.")
    p.add_argument("--precision", choices=["double", "extended"], default="double")
    p.add_argument("--n-max", type=int, default=60, dest="global_n_max", help="q-series length for j")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("val", help="value at a periodic word or a quadratic surd")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", help="periodic word, e.g. [1,2]")
    src.add_argument("--surd", help="surd literal, e.g. (1+1*sqrt(3))/2")
    v.add_argument("--f", default="j", help="j, one, or a JSON coefficient file")
    v.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    v.add_argument("--tol", type=float, default=1e-9)

    t = sub.add_parser("tree", help="Markov tree with per-node values")
    t.add_argument("--depth", type=int, default=3)
    t.add_argument("--f", default="j")
    t.add_argument("--tol", type=float, default=1e-9)

    c = sub.add_parser("certify", help="run certification suites")
    c.add_argument("--suite", choices=["Z", "U", "appendix", "monotone", "goodbad", "all"], default="all")
    c.add_argument("--grid", type=int, default=512)
    c.add_argument("--refine", type=int, default=40)
    c.add_argument("--json", help="write reports to this file")

    pl = sub.add_parser("plot", help="CSV data for a figure or a named kernel")
    g = pl.add_mutually_exclusive_group(required=True)
    g.add_argument("--figure", type=int, choices=range(2, 12))
    g.add_argument("--kernel")
    pl.add_argument("--x", default="1:4", help="x range lo:hi for --kernel")
    pl.add_argument("--t", default="pi/3:pi/2", help="t range lo:hi for --kernel")
    pl.add_argument("--n", type=int, default=201)

    co = sub.add_parser("coeffs", help="Fourier coefficients of j")
    co.add_argument("--n-max", type=int, default=60)
    return p


COMMANDS = {"val": cmd_val, "tree": cmd_tree, "certify": cmd_certify, "plot": cmd_plot, "coeffs": cmd_coeffs}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(
            precision=args.precision,
            tol=getattr(args, "tol", 1e-9),
            n_max=args.global_n_max,
            grid=getattr(args, "grid", 512),
            refine=getattr(args, "refine", 40),
        )
        return COMMANDS[args.command](args, cfg, out)
    except ParseError as exc:
        print(f"valkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValkitError, ArithmeticError, OSError, ValueError, KeyError) as exc:
        report = getattr(exc, "report", None)
        print(f"valkit: {args.command} failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        if report:
            print(json.dumps(report, indent=2, default=str), file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
