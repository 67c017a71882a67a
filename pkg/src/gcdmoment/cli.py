"""Command-line front end.

    gcdmoment [--output text|json] COMMAND ...

Commands: moment, pmf, count, verify, limit, bench, identity. Exit status is 0 on
success, 1 when a verification finds a mismatch, 2 on usage errors and 3 when the
brute-force guard refuses a request. The guard defaults to 10**8 tuples and can be
set with $GCDMOMENT_GUARD or --guard.

Exponent tokens pick the arithmetic: an optionally signed integer literal is exact
(``3``, ``-1``); a decimal or ``a+bi`` literal is complex (``0.5``, ``2+3i``).
Negative tokens need the ``--w=-1`` spelling so they are not read as flags.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import random
import re
import sys
import time
from fractions import Fraction

import numpy as np

from . import convergence, counting, moments, repcomb
from .errors import DomainError, GuardExceeded
from .numth import factorize

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

_INT_RE = re.compile(r"[+-]?\d+")
_REAL = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_CPLX_RE = re.compile(rf"[+-]?{_REAL}|[+-]?(?:{_REAL})?i|[+-]?{_REAL}[+-](?:{_REAL})?i")


def parse_exponent(token: str) -> moments.Exponent:
    token = token.strip().replace(" ", "")
    if _INT_RE.fullmatch(token):
        return int(token)
    if _CPLX_RE.fullmatch(token):
        t = token[:-1] + "j" if token.endswith("i") else token
        if t.endswith(("+j", "-j")) or t in ("j",):
            t = t[:-1] + "1j"
        return complex(t)
    raise argparse.ArgumentTypeError(f"malformed exponent {token!r} (use 3, -1, 0.5 or a+bi)")


def parse_exponent_list(text: str) -> list:
    return [parse_exponent(t) for t in text.split(",") if t.strip()]


def parse_int_list(text: str) -> list[int]:
    """Comma separated integers or ranges ``a..b`` / ``a..b:step``."""
    out = []
    try:
        for item in text.split(","):
            item = item.strip()
            if ".." in item:
                lo, _, rest = item.partition("..")
                hi, _, step = rest.partition(":")
                out.extend(range(int(lo), int(hi) + 1, int(step) if step else 1))
            elif item:
                out.append(int(item))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty integer list")
    return out


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


# -- rendering ---------------------------------------------------------------

def format_value(v) -> str:
    if isinstance(v, int):
        v = Fraction(v)
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    v = complex(v)
    return f"{v.real:.12g}{v.imag:+.12g}i"


def value_to_json(v) -> dict:
    if isinstance(v, int):
        v = Fraction(v)
    if isinstance(v, Fraction):
        return {"type": "rational", "num": str(v.numerator), "den": str(v.denominator)}
    v = complex(v)
    return {"type": "complex", "re": v.real, "im": v.imag}


def value_from_json(obj: dict):
    if obj["type"] == "rational":
        return Fraction(int(obj["num"]), int(obj["den"]))
    if obj["type"] == "complex":
        return complex(obj["re"], obj["im"])
    raise ValueError(f"not a scalar result: {obj['type']!r}")


def _params(ns) -> dict:
    out = {}
    for k, v in vars(ns).items():
        if k in ("command", "output", "handler"):
            continue
        if isinstance(v, list):
            v = [format_value(x) if isinstance(x, (complex, Fraction)) else x for x in v]
        elif isinstance(v, complex):
            v = format_value(v)
        out[k] = v
    return out


class _Output:
    def __init__(self, ns):
        self.ns = ns
        self.lines: list[str] = []
        self.doc = {"command": ns.command, "params": _params(ns)}

    def text(self, line: str = ""):
        self.lines.append(line)

    def render(self) -> str:
        if self.ns.output == "json":
            return json.dumps(self.doc, indent=2) + "\n"
        return "\n".join(self.lines) + "\n"


# -- commands ----------------------------------------------------------------

def cmd_moment(ns, out):
    n, r, w = ns.n, ns.r, ns.w
    if ns.method == "closed":
        res = moments.moment_closed(n, r, w)
    elif ns.method == "universal":
        res = moments.moment_universal(n, r, w)
    elif ns.method == "brute":
        res = moments.moment_brute(n, r, w, guard=ns.guard)
    elif ns.method == "kurokawa-ochiai":
        if w != 1 or not isinstance(w, int):
            raise DomainError("kurokawa-ochiai evaluates w = 1 only")
        res = moments.moment_kurokawa_ochiai(n, r)
    else:
        res = moments.monte_carlo(n, r, w, ns.samples, ns.seed)
    out.doc.update(result=value_to_json(res.value), method=res.method)
    if res.stderr is not None:
        out.doc["meta"] = {"samples": res.samples, "stderr": res.stderr}
        out.text(f"{format_value(res.value)} stderr={res.stderr:.6g} samples={res.samples}")
    else:
        out.text(format_value(res.value))
    return EXIT_OK


def cmd_pmf(ns, out):
    law = counting.pmf(ns.n, ns.r)
    rows = [{"f": str(f), "mass": value_to_json(m)} for f, m in law.mass.items()]
    mean = law.expectation(1)
    out.doc.update(result=value_to_json(mean), method="pmf", rows=rows)
    out.text("f\tmass")
    for f, m in law.mass.items():
        out.text(f"{f}\t{format_value(m)}")
    out.text(f"mean\t{format_value(mean)}")
    return EXIT_OK


def cmd_count(ns, out):
    if ns.method == "brute":
        hist = counting.count_brute(ns.p, ns.e, ns.r, guard=ns.guard)
    else:
        hist = counting.count_closed(ns.p, ns.e, ns.r)
    rows = []
    out.text("d\tf\tcount")
    for d in range(ns.e + 1):
        f = ns.p**d
        c = hist.counts.get(f, 0)
        rows.append({"d": d, "f": str(f), "count": str(c)})
        out.text(f"{d}\t{f}\t{c}")
    out.text(f"total\t{hist.total()}")
    out.doc.update(result=value_to_json(hist.total()), method=ns.method, rows=rows)
    return EXIT_OK


def _agree(a, b) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    a, b = complex(a), complex(b)
    return abs(a - b) <= 1e-10 * max(1.0, abs(a), abs(b))


def verify_sweep(n_max: int, r_max: int, w_set, guard: int | None = None) -> dict:
    """Compare closed, universal and brute evaluators over a grid.

    Brute force is skipped where n^r exceeds the guard. Exact exponents must agree
    exactly; complex ones to 1e-10 relative.
    """
    guard = counting.resolve_guard(guard)
    summary = {"comparisons": 0, "passed": 0, "failed": 0, "brute_skipped": 0, "counterexample": None}
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            for w in w_set:
                vals = {
                    "closed": moments.moment_closed(n, r, w).value,
                    "universal": moments.moment_universal(n, r, w).value,
                }
                if n**r <= guard:
                    vals["brute"] = moments.moment_brute(n, r, w, guard=guard).value
                else:
                    summary["brute_skipped"] += 1
                summary["comparisons"] += 1
                ref = vals["closed"]
                if all(_agree(ref, v) for v in vals.values()):
                    summary["passed"] += 1
                else:
                    summary["failed"] += 1
                    if summary["counterexample"] is None:
                        summary["counterexample"] = {
                            "n": n, "r": r, "w": format_value(w),
                            "values": {k: format_value(v) for k, v in vals.items()},
                        }
    return summary


def cmd_verify(ns, out):
    s = verify_sweep(ns.n_max, ns.r_max, ns.w_set, ns.guard)
    out.doc.update(result={"type": "summary", **s}, method="closed/universal/brute")
    out.text(
        f"comparisons {s['comparisons']} passed {s['passed']} failed {s['failed']} "
        f"brute-skipped {s['brute_skipped']}"
    )
    if s["counterexample"]:
        out.text(f"first counterexample: {json.dumps(s['counterexample'])}")
    return EXIT_OK if s["failed"] == 0 else EXIT_MISMATCH


def cmd_limit(ns, out):
    rep = convergence.convergence_table(ns.n, ns.w, ns.r_list)
    rows = [
        {"r": row.r, "value": value_to_json(row.value.value), "method": row.value.method,
         "gap": value_to_json(row.gap) if isinstance(row.gap, Fraction) else row.gap}
        for row in rep.rows
    ]
    out.doc.update(
        result=value_to_json(rep.limit), method="convergence", rows=rows,
        meta={"guaranteed": rep.guaranteed, "conservative": rep.conservative},
    )
    out.text(f"limit {format_value(rep.limit)} guaranteed={rep.guaranteed} conservative={rep.conservative}")
    out.text("r\tvalue\tgap")
    for row in rep.rows:
        gap = format_value(row.gap) if isinstance(row.gap, Fraction) else f"{row.gap:.6g}"
        if isinstance(row.gap, Fraction) and row.gap.denominator > 10**12:
            gap += f" (~{float(row.gap):.6g})"
        out.text(f"{row.r}\t{format_value(row.value.value)}\t{gap}")
    return EXIT_OK


def _best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(n: int, w, r_values, guard: int | None = None, repeat: int = 3) -> dict:
    """Time moment_closed against moment_brute at each r.

    Brute force runs only while n^r stays within the guard. Returns the rows and
    the linear fit of closed-form time against r.
    """
    guard = counting.resolve_guard(guard)
    factorize(n)  # validates n
    rows = []
    for r in r_values:
        closed = _best_time(lambda: moments.moment_closed(n, r, w), repeat)
        brute = None
        if n**r <= guard:
            brute = _best_time(lambda: moments.moment_brute(n, r, w, guard=guard), 1)
        rows.append({"r": r, "closed_seconds": closed, "brute_seconds": brute})
    fit = {"correlation": None, "slope": None, "intercept": None}
    if len(rows) >= 2:
        rs = np.array([row["r"] for row in rows], dtype=float)
        ts = np.array([row["closed_seconds"] for row in rows])
        slope, intercept = np.polyfit(rs, ts, 1)
        fit = {"correlation": float(np.corrcoef(rs, ts)[0, 1]), "slope": float(slope),
               "intercept": float(intercept)}
    return {"rows": rows, "fit": fit}


def cmd_bench(ns, out):
    b = bench(ns.n, ns.w, ns.r_list, ns.guard, ns.repeat)
    out.doc.update(result={"type": "summary", **b["fit"]}, method="bench", rows=b["rows"])
    out.text("r\tclosed_s\tbrute_s")
    for row in b["rows"]:
        brute = "skipped" if row["brute_seconds"] is None else f"{row['brute_seconds']:.6g}"
        out.text(f"{row['r']}\t{row['closed_seconds']:.6g}\t{brute}")
    if b["fit"]["correlation"] is not None:
        f = b["fit"]
        out.text(f"fit closed_s ~ {f['slope']:.3g}*r + {f['intercept']:.3g}  corr={f['correlation']:.4f}")
    return EXIT_OK


def random_rational(rng: random.Random, bound: int = 50) -> Fraction:
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(rng.randint(-bound, bound), den)


def identity_check(e: int, r: int, samples: int, seed: int) -> dict:
    """Evaluate the f_e^r identities at seeded random rationals; count nonzero residuals."""
    rng = random.Random(seed)
    bad = {"10a": int(repcomb.residual_10a(e, r) != 0), "10b": 0, "10c": 0}
    for _ in range(samples):
        x, y = random_rational(rng), random_rational(rng)
        bad["10b"] += repcomb.residual_10b(e, r, x, y) != 0
        bad["10c"] += repcomb.residual_10c(e, r, x) != 0
    return {"samples": samples, "nonzero": bad}


def cmd_identity(ns, out):
    s = identity_check(ns.e, ns.r, ns.samples, ns.seed)
    failed = sum(s["nonzero"].values())
    out.doc.update(result={"type": "summary", **s}, method="exact")
    out.text(
        f"e={ns.e} r={ns.r} samples={ns.samples} nonzero residuals: "
        + " ".join(f"{k}={v}" for k, v in s["nonzero"].items())
    )
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="gcdmoment", description=__doc__.split("\n\n")[0])
    parser.add_argument("--output", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moment", parents=[common], help="E[gcd(n, k1...kr)^w]")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--r", type=positive_int, required=True)
    p.add_argument("--w", type=parse_exponent, required=True)
    p.add_argument("--method", choices=("closed", "universal", "brute", "mc", "kurokawa-ochiai"),
                   default="closed")
    p.add_argument("--samples", type=positive_int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--guard", type=positive_int)
    p.set_defaults(handler=cmd_moment)

    p = sub.add_parser("pmf", parents=[common], help="exact law of the gcd")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--r", type=positive_int, required=True)
    p.set_defaults(handler=cmd_pmf)

    p = sub.add_parser("count", parents=[common], help="counts N^r(p^d) over Z/p^eZ")
    p.add_argument("--p", type=positive_int, required=True)
    p.add_argument("--e", type=positive_int, required=True)
    p.add_argument("--r", type=positive_int, required=True)
    p.add_argument("--method", choices=("closed", "brute"), default="closed")
    p.add_argument("--guard", type=positive_int)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="closed vs universal vs brute sweep")
    p.add_argument("--n-max", type=positive_int, required=True)
    p.add_argument("--r-max", type=positive_int, required=True)
    p.add_argument("--w-set", type=parse_exponent_list, required=True)
    p.add_argument("--guard", type=positive_int)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("limit", parents=[common], help="convergence table toward n^w")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--w", type=parse_exponent, required=True)
    p.add_argument("--r-list", type=parse_int_list, required=True)
    p.set_defaults(handler=cmd_limit)

    p = sub.add_parser("bench", parents=[common], help="closed form vs brute force timing")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--w", type=parse_exponent, required=True)
    p.add_argument("--r-list", type=parse_int_list, required=True)
    p.add_argument("--guard", type=positive_int)
    p.add_argument("--repeat", type=positive_int, default=3)
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("identity", parents=[common], help="exact checks of the f_e^r identities")
    p.add_argument("--e", type=positive_int, required=True)
    p.add_argument("--r", type=positive_int, required=True)
    p.add_argument("--samples", type=positive_int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_identity)
    return parser


def run(argv=None) -> tuple[int, str]:
    """Run one command; return (exit code, stdout text). Diagnostics go to stderr."""
    parser = build_parser()
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf):
            ns = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), buf.getvalue()
    out = _Output(ns)
    try:
        code = ns.handler(ns, out)
    except GuardExceeded as exc:
        print(f"gcdmoment: {exc}", file=sys.stderr)
        return EXIT_GUARD, ""
    except DomainError as exc:
        print(f"gcdmoment: {exc}", file=sys.stderr)
        return EXIT_USAGE, ""
    return code, out.render()


def main(argv=None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
