"""Command-line interface.

    acmforge roots G
    acmforge datum G k a1,...,an
    acmforge acm check G k a1,...,an
    acmforge acm classify G k [--caps c1,...,cn] [--format table|json|csv|latex] [-o PATH] [--jobs N]
    acmforge cohom G k a1,...,an [--twist t]
    acmforge dim G a1,...,an
    acmforge tensor G k a1,...,an [x|⊗] b1,...,bn
    acmforge wildness G k
    acmforge canon G k

Exit codes: 0 success (a negative ACM verdict is still success), 2 invalid
input, 3 candidate budget exceeded (partial output written), 4 internal error.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .acm import DEFAULT_BUDGET, BudgetExceededError, associated_datum, enumerate_acm, is_acm
from .bbw import canonical_twist, cohomology, weyl_dimension
from .levi import klimyk_tensor, levi_dimension
from .lie import LieError, build_root_system, dim_X
from .tableio import cached_enumerate, emit_csv, emit_json, emit_latex
from .wildness import UnsupportedSpaceError, verify_acm_pair, verify_prop44

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4

_WEIGHT_RE = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


class InputError(ValueError):
    pass


def _fmt_q(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_w(w) -> str:
    terms = []
    for i, a in enumerate(w, 1):
        if a:
            coef = "" if a == 1 else "-" if a == -1 else str(a)
            terms.append(f"{coef}l{i}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _group(name):
    try:
        return build_root_system(name)
    except LieError as exc:
        raise InputError(str(exc)) from None


def _weight(rs, text, what="weight"):
    if not _WEIGHT_RE.match(text):
        raise InputError(f"{what} must be comma-separated integers, got {text.strip()!r}")
    w = tuple(int(x) for x in text.split(","))
    if len(w) != rs.rank:
        raise InputError(f"{what} needs {rs.rank} coefficients for {rs.family}, got {len(w)}")
    return w


def _k(rs, k):
    if not 1 <= k <= rs.rank:
        raise InputError(f"k must be in 1..{rs.rank} for {rs.family}, got {k}")
    return k


def _admissible(rs, k, w):
    bad = [i + 1 for i, a in enumerate(w) if a < 0 and i != k - 1]
    if bad:
        raise InputError(f"a_i must be >= 0 for i != k={k}; negative at i={bad}")
    return w


def cmd_roots(args, out, err):
    rs = _group(args.group)
    print(f"# {rs.family}: {len(rs.positive_roots)} positive roots (coefficients over simple roots, squared length)", file=out)
    for r in rs.positive_roots:
        print(f"{r}\t{_fmt_q(r.normsq)}", file=out)


def cmd_datum(args, out, err):
    rs = _group(args.group)
    k = _k(rs, args.k)
    w = _admissible(rs, k, _weight(rs, args.weight))
    if w[k - 1]:
        print(f"note: a_{k}={w[k - 1]} cleared (twist by O({-w[k - 1]}))", file=err)
        w = w[: k - 1] + (0,) + w[k:]
    d = associated_datum(rs, k, w)
    print("T = {" + ", ".join(_fmt_q(v) for v in d.values) + "}", file=out)
    print(f"M = {_fmt_q(d.max)}", file=out)


def cmd_acm_check(args, out, err):
    rs = _group(args.group)
    k = _k(rs, args.k)
    w = _admissible(rs, k, _weight(rs, args.weight))
    v = is_acm(rs, k, w)
    if v.twist:
        print(f"note: a_{k}={v.twist} cleared; checking the initialized twist {_fmt_w(v.weight)}", file=err)
    print(f"ACM: {'true' if v.is_acm else 'false'}", file=out)
    print(f"M = {_fmt_q(v.datum.max)}", file=out)
    print("missing levels: " + (", ".join(map(str, v.missing_levels)) or "none"), file=out)


def _human_table(table) -> str:
    lines = [
        f"# {table.family}/P(alpha_{table.k})  dim X = {table.dim_x}  "
        f"{table.count} initialized ACM bundles" + ("  (partial)" if table.partial else "")
    ]
    header = "  ".join(f"b{i}" for i in range(1, table.rank + 1)) + "   M"
    lines.append(header)
    for w in table.rows:
        m = associated_datum(table.family, table.k, w).max
        lines.append("  ".join(f"{a:>2}" for a in w) + f"  {_fmt_q(m):>3}")
    return "\n".join(lines) + "\n"


def _render(table, fmt):
    if fmt == "json":
        return emit_json(table)
    if fmt == "csv":
        return emit_csv(table).encode()
    if fmt == "latex":
        return emit_latex(table).encode()
    return _human_table(table).encode()


def _write(data: bytes, path, out):
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        out.flush()
        buf = getattr(out, "buffer", None)
        if buf is not None:
            buf.write(data)
            buf.flush()
        else:
            out.write(data.decode())


def cmd_acm_classify(args, out, err):
    rs = _group(args.group)
    k = _k(rs, args.k)
    caps = None
    if args.caps:
        caps = _weight(rs, args.caps, "caps")
        if any(c < 0 for c in caps):
            raise InputError("caps must be nonnegative")
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    try:
        if args.no_cache:
            table = enumerate_acm(rs, k, caps=caps, budget=args.budget, jobs=jobs)
        else:
            table = cached_enumerate(rs.family, k, caps=caps, budget=args.budget, jobs=jobs)
    except BudgetExceededError as exc:
        print(f"error: {exc}; writing partial result", file=err)
        _write(_render(exc.partial, args.format), args.output, out)
        return EXIT_BUDGET
    _write(_render(table, args.format), args.output, out)
    return EXIT_OK


def cmd_cohom(args, out, err):
    rs = _group(args.group)
    k = _k(rs, args.k)
    w = _admissible(rs, k, _weight(rs, args.weight))
    p = cohomology(rs, k, w, args.twist)
    print(f"weight {_fmt_w(tuple(a + (args.twist if i == k - 1 else 0) for i, a in enumerate(w)))} + rho: {p.status}", file=out)
    if p.nonzero_degree is None:
        print("H^i = 0 for all i", file=out)
    else:
        print(f"H^{p.nonzero_degree} has dimension {p.dimension} (G-module {_fmt_w(p.dominant_weight)}); all other H^i = 0", file=out)


def cmd_dim(args, out, err):
    rs = _group(args.group)
    w = _weight(rs, args.weight)
    if any(a < 0 for a in w):
        raise InputError("dim needs a dominant weight (all coefficients >= 0)")
    print(weyl_dimension(rs, w), file=out)


def cmd_tensor(args, out, err):
    rs = _group(args.group)
    k = _k(rs, args.k)
    parts = [p for p in args.weights if p not in ("x", "⊗", "*")]
    if len(parts) != 2:
        raise InputError("tensor needs two weights, optionally separated by 'x' or '⊗'")
    mu = _admissible(rs, k, _weight(rs, parts[0], "first weight"))
    nu = _admissible(rs, k, _weight(rs, parts[1], "second weight"))
    dec = klimyk_tensor(rs, k, mu, nu)
    for hw, m in dec.items():
        print(f"{m} x E[{_fmt_w(hw)}]  ({','.join(map(str, hw))})  dim {levi_dimension(rs, k, hw)}", file=out)


def cmd_wildness(args, out, err):
    rs = _group(args.group)
    k = _k(rs, args.k)
    try:
        rep = verify_prop44(rs, k)
    except UnsupportedSpaceError as exc:
        raise InputError(str(exc)) from None
    print(f"F1 = E[{_fmt_w(rep.f1)}], F2 = E[{_fmt_w(rep.f2)}]  ACM pair: {verify_acm_pair(rs.family, k)}", file=out)
    for hw, m in rep.decomposition.items():
        prof = cohomology(rs, k, hw, 0)
        print(f"  {m} x E[{_fmt_w(hw)}]: {prof.status}", file=out)
    print(rep.summary(), file=out)


def cmd_canon(args, out, err):
    rs = _group(args.group)
    k = _k(rs, args.k)
    print(f"K_X = O_X({canonical_twist(rs, k).m})  (X = {rs.family}/P(alpha_{k}), dim {dim_X(rs, k)})", file=out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="acmforge", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"acmforge {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("roots", help="list positive roots")
    s.add_argument("group")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("datum", help="associated datum T and its maximum M")
    s.add_argument("group")
    s.add_argument("k", type=int)
    s.add_argument("weight")
    s.set_defaults(func=cmd_datum)

    acm = sub.add_parser("acm", help="ACM check and classification")
    acm_sub = acm.add_subparsers(dest="acm_command", required=True)
    s = acm_sub.add_parser("check")
    s.add_argument("group")
    s.add_argument("k", type=int)
    s.add_argument("weight")
    s.set_defaults(func=cmd_acm_check)
    s = acm_sub.add_parser("classify")
    s.add_argument("group")
    s.add_argument("k", type=int)
    s.add_argument("--caps", help="per-coordinate upper bounds (partial search)")
    s.add_argument("--format", choices=["table", "json", "csv", "latex"], default="table")
    s.add_argument("-o", "--output")
    s.add_argument("--jobs", type=int, default=0, help="worker processes (default: all cores)")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum candidate count")
    s.add_argument("--no-cache", action="store_true", help="bypass the ACMFORGE_CACHE table cache")
    s.set_defaults(func=cmd_acm_classify)

    s = sub.add_parser("cohom", help="Borel-Bott-Weil cohomology of E_lambda(t)")
    s.add_argument("group")
    s.add_argument("k", type=int)
    s.add_argument("weight")
    s.add_argument("--twist", type=int, default=0)
    s.set_defaults(func=cmd_cohom)

    s = sub.add_parser("dim", help="Weyl dimension of a dominant weight")
    s.add_argument("group")
    s.add_argument("weight")
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("tensor", help="decompose a tensor product of P(alpha_k)-modules")
    s.add_argument("group")
    s.add_argument("k", type=int)
    s.add_argument("weights", nargs="+")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("wildness", help="cohomology checks for the listed (F1, F2) pair")
    s.add_argument("group")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_wildness)

    s = sub.add_parser("canon", help="canonical twist m with K_X = O_X(m)")
    s.add_argument("group")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_canon)
    return p


def _protect_negative_weights(argv):
    # argparse reads "-2,0,1" as an option; a leading space keeps it positional
    return [" " + a if a.startswith("-") and _WEIGHT_RE.match(a) and "," in a else a for a in argv]


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative_weights(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        code = args.func(args, out, err)
        return EXIT_OK if code is None else code
    except (InputError, LieError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
