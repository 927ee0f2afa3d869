"""Command line: ``ribbonlab compute <object>`` and ``ribbonlab verify <identity>``.

Exit status is 0 on success, 1 when a verification cell fails and 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import domino, fock, verify
from .partitions import (
    n_core,
    n_quotient,
    parse_partition,
    parse_skew,
    size,
)
from .ribbonfn import G, X_poly, enumerate_tableaux, q_lr
from .symfunc import basis_name, convert

COMPUTE_OBJECTS = ("core", "quotient", "tableaux", "G", "qlr", "X", "fock-op", "domino-rsk")
FOCK_OPS = ("f", "e", "qh", "qD", "V", "U", "Vtilde", "Utilde", "B", "S", "prime")


class UsageError(Exception):
    pass


def _paren(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _plain(lam) -> str:
    return ",".join(map(str, lam))


def _shape_text(outer, inner) -> str:
    return _plain(outer) + (f"/{_plain(inner)}" if inner else "")


def _parse_ns(text: str) -> tuple:
    try:
        ns = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"--n expects integers, got {text!r}") from None
    if not ns or any(n < 1 for n in ns):
        raise UsageError("--n must be positive")
    return ns


def _single_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    ns = _parse_ns(args.n)
    if len(ns) != 1:
        raise UsageError("compute takes a single --n")
    return ns[0]


def _partition(text, flag):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _skew(args) -> tuple:
    """(outer, inner or None) from --shape outer[/inner] or --outer/--inner."""
    if args.shape is not None:
        if args.outer is not None:
            raise UsageError("give either --shape or --outer, not both")
        try:
            outer, inner = parse_skew(args.shape)
        except ValueError as exc:
            raise UsageError(f"--shape: {exc}") from None
        return outer, (inner if "/" in args.shape else None)
    if args.outer is None:
        raise UsageError("--shape (or --outer) is required")
    outer = _partition(args.outer, "--outer")
    inner = _partition(args.inner, "--inner") if args.inner is not None else None
    if inner is not None and any(a > b for a, b in zip(inner, outer + (0,) * len(inner))):
        raise UsageError(f"--inner {_plain(inner)} is not contained in {_plain(outer)}")
    if inner is not None and len(inner) > len(outer):
        raise UsageError(f"--inner {_plain(inner)} is not contained in {_plain(outer)}")
    return outer, inner


def _composition(text, flag) -> tuple:
    try:
        parts = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"{flag} expects comma separated integers, got {text!r}") from None
    if any(p < 0 for p in parts):
        raise UsageError(f"{flag} entries must be nonnegative")
    return parts


# -- output ---------------------------------------------------------------------


def _emit_table(header: str, rows: list, payload: dict, fmt: str) -> str:
    """rows are (partition string, value string) pairs."""
    if fmt == "json":
        return json.dumps(payload)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["partition", "value"])
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    lines = [header] + [f"  {_paren(tuple(int(x) for x in p.split(',')) if p else ())}: {v}" for p, v in rows]
    return "\n".join(lines)


def _compute_core(args, fmt):
    n = _single_n(args)
    lam, _ = _skew(args)
    core = n_core(lam, n)
    payload = {"object": "core", "n": n, "shape": _plain(lam), "core": list(core)}
    if fmt == "json":
        return json.dumps(payload)
    if fmt == "csv":
        return "shape,n,core\n" + f'"{_plain(lam)}",{n},"{_plain(core)}"'
    return _paren(core)


def _compute_quotient(args, fmt):
    n = _single_n(args)
    lam, _ = _skew(args)
    quo = n_quotient(lam, n)
    payload = {"object": "quotient", "n": n, "shape": _plain(lam), "quotient": [list(p) for p in quo]}
    if fmt == "json":
        return json.dumps(payload)
    if fmt == "csv":
        return "index,partition\n" + "\n".join(f'{i},"{_plain(p)}"' for i, p in enumerate(quo))
    return "[" + ", ".join(_paren(p) for p in quo) + "]"


def _compute_tableaux(args, fmt):
    n = _single_n(args)
    outer, inner = _skew(args)
    if inner is None:
        inner = n_core(outer, n)
    ribbons = (size(outer) - size(inner)) // n
    labels = args.labels if args.labels is not None else ribbons
    tabs = enumerate_tableaux(outer, inner, n, labels)
    if fmt == "json":
        return json.dumps(
            {
                "object": "tableaux",
                "n": n,
                "outer": _plain(outer),
                "inner": _plain(inner),
                "count": len(tabs),
                "tableaux": [t.to_json() for t in tabs],
            }
        )
    if fmt == "csv":
        lines = ["weight,spin,chain"]
        for t in tabs:
            lines.append(f'"{_plain(t.weight)}",{t.spin},"{" < ".join(_paren(c) for c in t.chain)}"')
        return "\n".join(lines)
    lines = [f"{len(tabs)} tableaux of shape {_paren(outer)}/{_paren(inner)}, n={n}, labels <= {labels}"]
    for t in tabs:
        chain = " < ".join(_paren(c) for c in t.chain)
        lines.append(f"  weight {_paren(t.weight)} spin {t.spin}: {chain}")
    return "\n".join(lines)


def _compute_G(args, fmt):
    n = _single_n(args)
    outer, inner = _skew(args)
    try:
        basis = basis_name(args.basis)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    f = convert(G(outer, n, inner), basis)
    inner = n_core(outer, n) if inner is None else inner
    rows = [(_plain(lam), str(c)) for lam, c in f.items()]
    payload = {
        "object": "G",
        "n": n,
        "outer": _plain(outer),
        "inner": _plain(inner),
        "basis": basis,
        "terms": [list(r) for r in rows],
    }
    header = f"G[{_shape_text(outer, inner)}] n={n} in the {basis} basis"
    return _emit_table(header, rows, payload, fmt)


def _compute_qlr(args, fmt):
    n = _single_n(args)
    outer, inner = _skew(args)
    coeffs = q_lr(outer, n, inner)
    inner = n_core(outer, n) if inner is None else inner
    rows = [(_plain(lam), str(c)) for lam, c in sorted(coeffs.items(), key=lambda t: t[0], reverse=True)]
    payload = {"object": "qlr", "n": n, "outer": _plain(outer), "inner": _plain(inner), "terms": [list(r) for r in rows]}
    header = f"q-LR coefficients of {_shape_text(outer, inner)}, n={n}"
    return _emit_table(header, rows, payload, fmt)


def _compute_X(args, fmt):
    n = _single_n(args)
    outer, inner = _skew(args)
    inner = () if inner is None else inner
    if args.type is None:
        raise UsageError("--type is required for X")
    type_ = _composition(args.type, "--type")
    if any(t == 0 for t in type_):
        raise UsageError("--type entries must be positive")
    x = X_poly(outer, inner, n, type_)
    payload = {"object": "X", "n": n, "outer": _plain(outer), "inner": _plain(inner), "type": list(type_), "poly": str(x)}
    if fmt == "json":
        return json.dumps(payload)
    if fmt == "csv":
        return "outer,inner,n,type,poly\n" + f'"{_plain(outer)}","{_plain(inner)}",{n},"{_plain(type_)}","{x}"'
    return str(x)


def _compute_fock(args, fmt):
    n = _single_n(args)
    lam, _ = _skew(args)
    if args.op is None:
        raise UsageError(f"--op is required; choose from {', '.join(FOCK_OPS)}")
    op = args.op
    v = fock.FockVector.basis(n, lam)
    try:
        if op in ("f", "e", "qh"):
            if args.i is None:
                raise UsageError(f"--i is required for {op}")
            if op == "f":
                out = fock.apply_f(args.i, v)
            elif op == "e":
                out = fock.apply_e(args.i, v)
            else:
                out = fock.apply_qh(args.i, v, args.power)
        elif op == "qD":
            out = fock.apply_qD(v, args.power)
        elif op in ("V", "U", "Vtilde", "Utilde", "B"):
            if args.k is None:
                raise UsageError(f"--k is required for {op}")
            fn = {
                "V": fock.apply_V,
                "U": fock.apply_U,
                "Vtilde": fock.apply_Vtilde,
                "Utilde": fock.apply_Utilde,
                "B": fock.apply_B,
            }[op]
            out = fn(args.k, v)
        elif op == "S":
            if args.nu is None:
                raise UsageError("--nu is required for S")
            out = fock.apply_S(_partition(args.nu, "--nu"), v)
        elif op == "prime":
            out = fock.prime(v)
        else:
            raise UsageError(f"unknown --op {op!r}; choose from {', '.join(FOCK_OPS)}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [(_plain(mu), str(c)) for mu, c in out.items()]
    payload = {"object": "fock-op", "n": n, "op": op, "input": _plain(lam), "terms": [list(r) for r in rows]}
    header = f"{op} applied to |{_plain(lam)}>, n={n}"
    return _emit_table(header, rows, payload, fmt)


def _compute_rsk(args, fmt):
    if args.biword is None:
        raise UsageError('--biword is required: "c i j; c i j; ..." or a file path or -')
    text = args.biword
    if text == "-":
        text = sys.stdin.read()
    elif ";" not in text and "\n" not in text and " " not in text.strip():
        try:
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read biword file: {exc}") from None
    try:
        w = domino.ColoredBiword.parse(text.replace(";", "\n"))
        core = _partition(args.core, "--core") if args.core is not None else ()
        p, q = domino.rsk(w, core)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"object": "domino-rsk", "biword": [list(t) for t in w.triples], "tc": w.tc, "P": p.to_json(), "Q": q.to_json()}
    if fmt == "json":
        return json.dumps(payload)
    if fmt == "csv":
        lines = ["tableau,label,cells"]
        for name, t in (("P", p), ("Q", q)):
            for lab, d in t.dominoes:
                lines.append(f'{name},{lab},"{" ".join(f"{r}:{c}" for r, c in sorted(d))}"')
        return "\n".join(lines)
    lines = [f"shape {_paren(p.shape)}  tc={w.tc}  spin(P)={p.spin}  spin(Q)={q.spin}"]
    for name, t in (("P", p), ("Q", q)):
        lines.append(f"{name}:")
        lines.extend("  " + row for row in _draw(t))
    return "\n".join(lines)


def _draw(t) -> list:
    """Text picture: each cell shows its domino's label, core cells show '.'."""
    grid = {}
    for r, c in ((r, c) for r, row in enumerate(t.core, 1) for c in range(1, row + 1)):
        grid[(r, c)] = "."
    for lab, d in t.dominoes:
        for cell in d:
            grid[cell] = str(lab)
    shape = t.shape
    width = max((len(v) for v in grid.values()), default=1)
    return [" ".join(grid[(r, c)].rjust(width) for c in range(1, row + 1)) for r, row in enumerate(shape, 1)]


_COMPUTE = {
    "core": _compute_core,
    "quotient": _compute_quotient,
    "tableaux": _compute_tableaux,
    "G": _compute_G,
    "qlr": _compute_qlr,
    "X": _compute_X,
    "fock-op": _compute_fock,
    "domino-rsk": _compute_rsk,
}


def cmd_compute(args) -> tuple[int, str]:
    return 0, _COMPUTE[args.object](args, args.format)


def cmd_verify(args) -> tuple[int, str]:
    ns = _parse_ns(args.n) if args.n is not None else None
    nu = _partition(args.nu, "--nu") if args.nu is not None else None
    if nu is None and args.shape is not None:
        nu = _partition(args.shape, "--shape")
    core = _partition(args.core, "--core") if args.core is not None else None
    inner = _partition(args.inner, "--inner") if args.inner is not None else None
    for flag in ("k", "kmax", "sizemax", "degree", "vars"):
        value = getattr(args, flag)
        if value is not None and value < (0 if flag in ("sizemax", "degree") else 1):
            raise UsageError(f"--{flag} is out of range")
    try:
        report = verify.run(
            args.identity,
            n=ns,
            nu=nu,
            k=args.k,
            kmax=args.kmax,
            sizemax=args.sizemax,
            degree=args.degree,
            nvars=args.vars,
            core=core,
            inner=inner,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = json.dumps(report.to_json(timing=not args.no_timing), indent=2)
    elif args.format == "csv":
        text = report.to_csv().rstrip("\n")
    else:
        text = report.to_pretty()
    return (0 if report.passed else 1), text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbonlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", help="ribbon length; verify accepts a comma list")
        p.add_argument("--shape", help="partition or skew shape outer/inner, e.g. 5,5,2/2")
        p.add_argument("--outer")
        p.add_argument("--inner")
        p.add_argument("--nu", help="partition acted on (verify) or S_nu (fock-op)")
        p.add_argument("--k", type=int)
        p.add_argument("--core", help="n-core (verify cauchy, phican) or 2-core (domino-rsk)")
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    pc = sub.add_parser("compute", help="compute one object")
    pc.add_argument("object", choices=COMPUTE_OBJECTS)
    common(pc)
    pc.add_argument("--basis", default="schur", help="m, h, e, p or s (G only)")
    pc.add_argument("--type", help="composition of border strip sizes (X only)")
    pc.add_argument("--labels", type=int, help="largest label (tableaux only)")
    pc.add_argument("--op", help=f"Fock operator: {', '.join(FOCK_OPS)}")
    pc.add_argument("--i", type=int, help="residue for f, e, qh")
    pc.add_argument("--power", type=int, default=1, help="exponent for qh, qD")
    pc.add_argument("--biword", help='"c i j; c i j", a file path, or - for stdin')

    pv = sub.add_parser("verify", help="check an identity over a grid")
    pv.add_argument("identity", choices=tuple(verify.IDENTITIES))
    common(pv)
    pv.add_argument("--kmax", type=int)
    pv.add_argument("--sizemax", type=int)
    pv.add_argument("--degree", type=int, help="truncation degree for Cauchy identities (default 3)")
    pv.add_argument("--vars", type=int, help="variables per alphabet for Cauchy identities (default 3)")
    pv.add_argument("--no-timing", action="store_true", help="omit wall time from JSON")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            code, text = cmd_compute(args)
        else:
            code, text = cmd_verify(args)
    except UsageError as exc:
        print(f"ribbonlab: error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code
