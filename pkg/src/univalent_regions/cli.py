"""Command-line interface.

Every numeric result is printed as one ``key=value`` record line followed
by a human-readable line starting with ``#``. Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import ctc_bounds as cb
from . import ctc_geometry as cg
from . import disk_classes as dc
from . import power as pw
from . import verify
from .core import BoundaryCurve, ExtendedReal
from .errors import DegenerateRegionError, DomainError

CLASSES = ("s", "star", "convex", "ctc")
FUNCTIONALS = ("phi_plus", "phi_minus", "psi", "psi_minus", "power", "b0", "b0_diff")
LABEL_KEYS = ("kind", "method")


class UsageError(Exception):
    pass


@dataclass
class ResultRecord:
    cls: str
    functional: str
    params: dict[str, float] = field(default_factory=dict)
    value: ExtendedReal = field(default_factory=lambda: ExtendedReal.finite(0.0))
    labels: dict[str, str] = field(default_factory=dict)

    def render(self) -> str:
        parts = [f"class={self.cls}", f"functional={self.functional}"]
        parts += [f"{k}={v}" for k, v in self.labels.items()]
        parts += [f"{k}={float(v)!r}" for k, v in self.params.items()]
        parts.append(f"value={self.value}")
        return " ".join(parts)

    @classmethod
    def parse(cls, line: str) -> ResultRecord:
        fields = dict(tok.split("=", 1) for tok in line.split())
        rec = cls(fields.pop("class"), fields.pop("functional"))
        rec.value = ExtendedReal.parse(fields.pop("value"))
        for key, text in fields.items():
            if key in LABEL_KEYS:
                rec.labels[key] = text
            else:
                rec.params[key] = float(text)
        return rec

    def human(self) -> str:
        v = self.value
        shown = f"{v.value:.10g}" if v.is_finite else str(v)
        args = ", ".join(f"{k}={p:g}" for k, p in self.params.items())
        extra = "".join(f" [{x}]" for x in self.labels.values())
        return f"# {self.functional}({self.cls}; {args}) = {shown}{extra}"


def _emit(rec: ResultRecord, out) -> None:
    print(rec.render(), file=out)
    print(rec.human(), file=out)


# bound


def cmd_bound(args, out=sys.stdout) -> ResultRecord:
    cls, kind, b, r = args.cls, args.kind, args.b, args.r
    params = {"b": b}
    if r is not None:
        params["r"] = r
    if cls == "ctc":
        if r is not None:
            raise UsageError("--class ctc has no pointwise closed form; omit --r")
        value = cb.phi_ctc(b, kind)
    elif cls == "s":
        value = (
            ExtendedReal.finite(dc.phi_s_pointwise(r, b, kind)) if r is not None else dc.phi_s(b, kind)
        )
    elif r is not None:
        value = ExtendedReal.finite(dc.phi_star(r, b, kind, cls))
    elif kind == "plus":
        value = dc.phi_star_full_plus(b, cls)
    else:
        value = ExtendedReal.finite(dc.phi_star_full_minus(b, cls))
    rec = ResultRecord(cls, f"phi_{kind}", params, value)
    _emit(rec, out)
    return rec


# region


def region_curve(cls: str, r: float | None, samples: int, pointwise: bool) -> BoundaryCurve:
    if samples < 8:
        raise UsageError("--samples must be at least 8")
    if cls == "ctc":
        if pointwise:
            if r is None:
                raise UsageError("--pointwise needs --r")
            return cg.pointwise_region_h(r, samples)
        return cg.gamma_curve(samples).negated()
    if r is None:
        raise UsageError(f"--class {cls} needs --r")
    if cls == "s":
        return dc.grunsky_region(r).boundary(samples)
    return dc.marx_boundary(r, cls, samples)


def write_csv(curve: BoundaryCurve, fh) -> None:
    fh.write("t,re,im\n")
    for t, w in zip(curve.t.tolist(), curve.w.tolist()):
        fh.write(f"{t!r},{w.real!r},{w.imag!r}\n")


def read_csv(text: str) -> tuple[np.ndarray, np.ndarray]:
    lines = text.strip().splitlines()
    if lines[0].strip() != "t,re,im":
        raise ValueError("missing t,re,im header")
    rows = np.array([[float(x) for x in ln.split(",")] for ln in lines[1:]])
    return rows[:, 0], rows[:, 1] + 1j * rows[:, 2]


def svg_document(curve: BoundaryCurve, extra_segments=(), margin: float = 0.05) -> str:
    """Static SVG with the curve as one polyline; y is flipped so Im w points up."""
    pts = curve.vertices().tolist()
    allpts = np.array(pts + [p for seg in extra_segments for p in seg])
    xmin, xmax = float(allpts.real.min()), float(allpts.real.max())
    ymin, ymax = float((-allpts.imag).min()), float((-allpts.imag).max())
    wdt = max(xmax - xmin, 1e-12)
    hgt = max(ymax - ymin, 1e-12)
    mx, my = margin * wdt, margin * hgt
    vb = f"{xmin - mx!r} {ymin - my!r} {wdt + 2 * mx!r} {hgt + 2 * my!r}"
    stroke = 0.003 * max(wdt, hgt)
    coords = " ".join(f"{p.real!r},{-p.imag!r}" for p in pts)
    body = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}">',
        f'<polyline fill="none" stroke="black" stroke-width="{stroke!r}" points="{coords}"/>',
    ]
    for a, b in extra_segments:
        body.append(
            f'<line x1="{a.real!r}" y1="{-a.imag!r}" x2="{b.real!r}" y2="{-b.imag!r}" '
            f'stroke="red" stroke-width="{stroke!r}"/>'
        )
    body.append("</svg>")
    return "\n".join(body) + "\n"


def cmd_region(args, out=sys.stdout) -> BoundaryCurve:
    curve = region_curve(args.cls, args.r, args.samples, args.pointwise)
    if args.format == "csv":
        buf = io.StringIO()
        write_csv(curve, buf)
        text = buf.getvalue()
    else:
        segments = []
        if args.hull:
            if args.cls != "ctc" or args.pointwise:
                raise UsageError("--hull applies to the full close-to-convex region only")
            tp = cg.common_tangent()
            gu, gv = -complex(cg.gamma(tp.u)), -complex(cg.gamma(tp.v))
            segments = [(gu, gv), (gu.conjugate(), gv.conjugate())]
        text = svg_document(curve, segments)
    if args.out in (None, "-"):
        out.write(text)
    else:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
    return curve


# b0


def cmd_b0(args, out=sys.stdout) -> list[ResultRecord]:
    recs = []
    vals = {}
    if args.method in ("analytic", "both"):
        vals["analytic"] = cb.b0_root(args.tol)
    if args.method in ("geometric", "both"):
        vals["geometric"] = cg.common_tangent(max(args.tol, 1e-12)).b0_geo
    for method, v in vals.items():
        recs.append(ResultRecord("ctc", "b0", {"tol": args.tol}, ExtendedReal.finite(v), {"method": method}))
    if len(vals) == 2:
        diff = abs(vals["analytic"] - vals["geometric"])
        recs.append(ResultRecord("ctc", "b0_diff", {"tol": args.tol}, ExtendedReal.finite(diff)))
    for rec in recs:
        _emit(rec, out)
    return recs


# power


def cmd_power(args, out=sys.stdout) -> ResultRecord:
    if args.a == 0:
        raise UsageError("--a 0 is unsupported: no sharp bound is known for Re c = 0")
    res = pw.power_bound(complex(args.a, args.b))
    rec = ResultRecord(
        "ctc", "power", {"a": args.a, "b": args.b}, ExtendedReal.finite(res.value), {"kind": res.kind}
    )
    _emit(rec, out)
    return rec


# verify


def cmd_verify(args, out=sys.stdout) -> int:
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    results = verify.run_suites(names, seed=args.seed, trials=args.trials, tol=args.tol)
    width = max(len(r.name) for r in results)
    print(f"{'check':<{width}}  status  max_residual      tol", file=out)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  {status:<6}  {r.max_residual:<16.9e}  {r.tol:.1e}", file=out)
    failed = [r for r in results if not r.passed]
    if failed:
        first = failed[0]
        case = " ".join(f"{k}={v!r}" for k, v in first.failing_case.items())
        print(f"FAILED {len(failed)} check(s); first: {first.name} seed={args.seed} {case}", file=out)
        return 1
    print(f"all {len(results)} checks passed (seed={args.seed})", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="univalent-regions",
        description="Sharp bounds and variability regions of log(f(z)/z) for S, S*, K and C.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="Phi^+/- for a class, pointwise (--r) or over the disk")
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--kind", choices=("plus", "minus"), required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--r", type=float, default=None)

    p = sub.add_parser("region", help="boundary of a variability region as CSV or SVG")
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--samples", type=int, default=cg.DEFAULT_SAMPLES)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out", default="-")
    p.add_argument("--pointwise", action="store_true", help="ctc: boundary of W_z(C) instead of W(C)")
    p.add_argument("--hull", action="store_true", help="ctc svg: draw the common tangent segments")

    p = sub.add_parser("b0", help="crossover parameter b0")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--method", choices=("analytic", "geometric", "both"), default="analytic")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--tol", type=float, default=None, help="override every check tolerance")

    p = sub.add_parser("power", help="bound for the power deformation with c = a + bi")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bound":
            cmd_bound(args, out)
        elif args.command == "region":
            cmd_region(args, out)
        elif args.command == "b0":
            cmd_b0(args, out)
        elif args.command == "power":
            cmd_power(args, out)
        elif args.command == "verify":
            return cmd_verify(args, out)
    except (UsageError, DomainError, DegenerateRegionError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
