"""Command-line front end.

Every command prints one report.  ``--format records`` gives a single
``key=value`` line (space separated, structured values as compact JSON) and
``--format json`` a JSON object; the default is a short human-readable block.
Exit status is 0 whenever the command ran, whatever the verdict, unless
``--assert`` is given, in which case a false, zero or empty verdict exits 1
and an inconclusive search exits with the ``Inconclusive`` status.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import corpus
from .core import (
    Complex,
    format_complex,
    is_strongly_connected,
    parse_complex,
)
from .decompose import (
    Leaf,
    LeafKind,
    Node,
    SheddingCertificate,
    certificate_to_shelling,
    complete_shelling,
    is_shedding_vertex,
    is_shelling_completable,
    is_vertex_decomposable,
    shedding_order_certificate,
    shedding_sequence,
)
from .errors import Inconclusive, LexShellError, ParseError
from .orders import OrderClass, VertexOrder, check_order, count_orders, find_order
from .shelling import (
    ShellingCertificate,
    census_lex_orders,
    find_shelling,
    is_lex_shellable_under,
    is_shelling,
)

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_USAGE = 2
EXIT_IO = 3

INCONCLUSIVE = "inconclusive"


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    verdict: Any
    certificate: dict[str, Any] | None = None
    elapsed: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        out = {"command": self.command, **{f"input.{k}": v for k, v in self.inputs.items()}}
        out["verdict"] = self.verdict
        out.update(self.details)
        if self.certificate is not None:
            out["certificate"] = self.certificate
        out["elapsed"] = round(self.elapsed, 6)
        return out


def _jsonable(x: Any) -> Any:
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    if isinstance(x, list):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def render(report: Report, fmt: str) -> str:
    d = _jsonable(report.as_dict())
    if fmt == "json":
        return json.dumps(d, sort_keys=False)
    if fmt == "records":
        parts = []
        for k, v in d.items():
            if isinstance(v, (dict, list)) or v is None or isinstance(v, bool):
                v = json.dumps(v, separators=(",", ":"))
            parts.append(f"{k}={v}")
        return " ".join(parts)
    lines = [f"{report.command}: verdict = {_human(report.verdict)}"]
    for k, v in report.inputs.items():
        lines.append(f"  {k}: {_human(v)}")
    for k, v in report.details.items():
        lines.append(f"  {k}: {_human(v)}")
    if report.certificate:
        lines.append("  certificate:")
        for k, v in report.certificate.items():
            lines.append(f"    {k}: {_human(v)}")
    lines.append(f"  elapsed: {report.elapsed:.3f}s")
    return "\n".join(lines)


def _human(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)) and v and all(isinstance(f, (list, tuple)) for f in v):
        return ", ".join(" ".join(map(str, f)) or "∅" for f in v)
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    if isinstance(v, dict):
        return json.dumps(_jsonable(v), separators=(",", ":"))
    return str(v)


def certificate_json(cert: SheddingCertificate) -> dict[str, Any]:
    if isinstance(cert, Leaf):
        return {"leaf": cert.kind.value}
    return {
        "shed": cert.shed,
        "link": certificate_json(cert.link_cert),
        "deletion": certificate_json(cert.del_cert),
    }


def certificate_from_json(d: dict[str, Any]) -> SheddingCertificate:
    if "leaf" in d:
        return Leaf(LeafKind(d["leaf"]))
    return Node(d["shed"], certificate_from_json(d["link"]), certificate_from_json(d["deletion"]))


# -- input helpers -----------------------------------------------------------


class InputUnreadable(LexShellError):
    exit_code = EXIT_IO


def read_complex(path: str) -> Complex:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputUnreadable(f"cannot read {path}: {e.strerror or e}") from e
    return parse_complex(text)


def read_sequence(path: str) -> list[list[int]]:
    """A facet sequence file: core text format where line order matters."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputUnreadable(f"cannot read {path}: {e.strerror or e}") from e
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        row = []
        for tok in s.split():
            if not tok.isdigit():
                raise ParseError("expected a non-negative integer", lineno, tok)
            row.append(int(tok))
        rows.append(row)
    return rows


def parse_vertices(tokens: list[str] | None, what: str) -> list[int] | None:
    if tokens is None:
        return None
    out = []
    for t in tokens:
        if not t.isdigit():
            raise ParseError(f"{what} must list non-negative integer vertex ids", token=t)
        out.append(int(t))
    return out


def _reclaim_path(args: argparse.Namespace, attr: str) -> None:
    """``--order 1 3 5 path`` swallows the path into the variadic option."""
    tokens = getattr(args, attr, None)
    if args.path is None and tokens and not tokens[-1].isdigit():
        args.path = tokens.pop()
    if args.path is None:
        raise argparse.ArgumentTypeError("missing input path")


# -- commands ----------------------------------------------------------------


def _order_arg(c: Complex, tokens: list[str] | None) -> VertexOrder:
    vs = parse_vertices(tokens, "order")
    return VertexOrder.identity(c) if vs is None else VertexOrder(tuple(vs))


def cmd_analyze(args) -> Report:
    c = read_complex(args.path)
    details: dict[str, Any] = {
        "pure": c.pure,
        "dimension": c.dim,
        "n": c.n,
        "m": c.m,
    }
    if c.pure:
        details["strongly_connected"] = is_strongly_connected(c)
        ident = VertexOrder.identity(c)
        for cls in OrderClass:
            details[f"{cls.value}(identity)"] = check_order(c, ident, cls) is None
    return Report("analyze", {"path": args.path}, c.pure, details=details)


def cmd_check_order(args) -> Report:
    c = read_complex(args.path)
    o = _order_arg(c, args.order)
    cls = OrderClass.parse(args.cls)
    viol = check_order(c, o, cls)
    cert = {"order": list(o.sequence)}
    if viol is not None:
        cert["violation"] = {"facet": list(viol.facet), "missing": list(viol.missing)}
    return Report(
        "check-order",
        {"path": args.path, "class": cls.value, "order": list(o.sequence)},
        viol is None,
        cert,
    )


def cmd_find_order(args) -> Report:
    c = read_complex(args.path)
    cls = OrderClass.parse(args.cls)
    o = find_order(c, cls, jobs=args.jobs)
    return Report(
        "find-order",
        {"path": args.path, "class": cls.value},
        o is not None,
        None if o is None else {"order": list(o.sequence)},
    )


def _progress(nodes: int) -> None:
    print(f"[census] {nodes} nodes", file=sys.stderr, flush=True)


def cmd_census(args) -> Report:
    c = read_complex(args.path)
    inputs: dict[str, Any] = {"path": args.path, "mode": args.mode}
    try:
        if args.mode == "lex":
            verdict: Any = census_lex_orders(
                c, jobs=args.jobs, budget=args.budget, progress=_progress
            )
        else:
            cls = OrderClass.parse(args.cls)
            inputs["class"] = cls.value
            verdict = count_orders(c, cls, jobs=args.jobs)
    except Inconclusive:
        verdict = INCONCLUSIVE
    return Report("census", inputs, verdict)


def _shelling_cert(res) -> dict[str, Any]:
    if isinstance(res, ShellingCertificate):
        return {"sequence": res.sequence, "step_witnesses": res.step_witnesses}
    return {
        "sequence": res.sequence,
        "failed_step": res.step,
        "bad_face": res.bad_face,
        "empty_intersection": res.empty_intersection,
    }


def cmd_shell(args) -> Report:
    c = read_complex(args.path)
    inputs: dict[str, Any] = {"path": args.path}
    if args.sequence:
        inputs["sequence"] = args.sequence
        res = is_shelling(c, read_sequence(args.sequence))
        return Report("shell", inputs, bool(res), _shelling_cert(res))
    try:
        res = find_shelling(c, budget=args.budget)
    except Inconclusive:
        return Report("shell", inputs, INCONCLUSIVE)
    return Report("shell", inputs, res is not None, None if res is None else _shelling_cert(res))


def cmd_lex_shell(args) -> Report:
    c = read_complex(args.path)
    o = _order_arg(c, args.order)
    res = is_lex_shellable_under(c, o)
    cert = {"order": list(o.sequence), **_shelling_cert(res)}
    return Report("lex-shell", {"path": args.path, "order": list(o.sequence)}, bool(res), cert)


def _vd_report(name: str, c: Complex, inputs: dict, cert: SheddingCertificate | None) -> Report:
    if cert is None:
        return Report(name, inputs, False)
    body = {
        "shedding_sequence": list(shedding_sequence(cert)),
        "tree": certificate_json(cert),
        "shelling": certificate_to_shelling(c, cert),
    }
    return Report(name, inputs, True, body)


def cmd_vd(args) -> Report:
    c = read_complex(args.path)
    vs = parse_vertices(args.check, "shedding order")
    if vs is not None:
        return _vd_report("vd", c, {"path": args.path, "check": vs}, shedding_order_certificate(c, vs))
    return _vd_report("vd", c, {"path": args.path}, is_vertex_decomposable(c))


def cmd_shed_check(args) -> Report:
    c = read_complex(args.path)
    if args.vertex is not None:
        ok = is_shedding_vertex(c, args.vertex)
        return Report("shed-check", {"path": args.path, "vertex": args.vertex}, ok)
    vs = parse_vertices(args.order, "shedding order") or []
    return _vd_report(
        "shed-check", c, {"path": args.path, "order": vs}, shedding_order_certificate(c, vs)
    )


def cmd_complete(args) -> Report:
    c = read_complex(args.path)
    n = args.n if args.n is not None else c.n
    inputs: dict[str, Any] = {"path": args.path, "n": n}
    try:
        if args.sequence:
            inputs["sequence"] = args.sequence
            seq = read_sequence(args.sequence)
            full = complete_shelling(c, seq, n, budget=args.budget)
            pair = None if full is None else (is_shelling(c, seq).sequence, full)
        else:
            pair = is_shelling_completable(c, n, budget=args.budget)
    except Inconclusive:
        return Report("complete", inputs, INCONCLUSIVE)
    if pair is None:
        return Report("complete", inputs, False)
    return Report("complete", inputs, True, {"shelling": pair[0], "completion": pair[1]})


def cmd_enumerate(args) -> Report:
    stream = corpus.enumerate_complexes(args.n, args.d, args.connected)
    found = []
    count = 0
    for c in stream:
        count += 1
        if args.list:
            found.append(c.facets)
    cert = {"complexes": found} if args.list else None
    return Report(
        "enumerate",
        {"n": args.n, "d": args.d, "strongly_connected": args.connected},
        count,
        cert,
    )


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "records", "json"), default="human")
    common.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 1 unless the verdict is positive")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget", type=int, default=None, help="search node limit")

    p = argparse.ArgumentParser(prog="lexshell", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, path=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if path:
            sp.add_argument("path", nargs="?")
        sp.set_defaults(func=func)
        return sp

    classes = [c.value for c in OrderClass]
    add("analyze", cmd_analyze, "basic invariants and identity-order classes")
    sp = add("check-order", cmd_check_order, "test one vertex order against an order class")
    sp.add_argument("--order", nargs="+", help="vertex ids in increasing position")
    sp.add_argument("--class", dest="cls", choices=classes, required=True)
    sp = add("find-order", cmd_find_order, "lexicographically first order in a class")
    sp.add_argument("--class", dest="cls", choices=classes, required=True)
    sp = add("census", cmd_census, "count vertex orders")
    sp.add_argument("--mode", choices=("orders", "lex"), default="lex")
    sp.add_argument("--class", dest="cls", choices=classes, default="unit-interval")
    sp = add("shell", cmd_shell, "check a facet sequence, or search for a shelling")
    sp.add_argument("--sequence", help="file listing facets in shelling order")
    sp = add("lex-shell", cmd_lex_shell, "is the lex facet order under an order a shelling")
    sp.add_argument("--order", nargs="+", help="vertex ids in increasing position")
    sp = add("vd", cmd_vd, "vertex decomposability")
    sp.add_argument("--check", nargs="+", help="verify this shedding order instead of searching")
    sp = add("shed-check", cmd_shed_check, "verify a shedding order or a single shedding vertex")
    sp.add_argument("--order", nargs="+", help="shedding order")
    sp.add_argument("--vertex", type=int)
    sp = add("complete", cmd_complete, "extend a shelling to the full skeleton")
    sp.add_argument("--n", type=int, help="size of the vertex universe")
    sp.add_argument("--sequence", help="file with the shelling to extend")
    sp = add("example", None, "print a named complex", path=False)
    sp.add_argument("id")
    sp = add("enumerate", cmd_enumerate, "count labeled pure complexes", path=False)
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--connected", action="store_true", help="strongly connected only")
    sp.add_argument("--list", action="store_true")
    return p


_VARIADIC = {"check-order": "order", "lex-shell": "order", "vd": "check", "shed-check": "order"}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "example":
            c = corpus.example(args.id)
            sys.stdout.write(format_complex(c, header=args.id))
            return EXIT_OK
        if "path" in vars(args):
            try:
                _reclaim_path(args, _VARIADIC.get(args.command, "_none"))
            except argparse.ArgumentTypeError as e:
                parser.error(str(e))
        t0 = time.perf_counter()
        report = args.func(args)
        report.elapsed = time.perf_counter() - t0
    except LexShellError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    print(render(report, args.format))
    if args.assert_:
        if report.verdict == INCONCLUSIVE:
            return Inconclusive.exit_code
        if report.verdict in (False, 0, None):
            return EXIT_ASSERT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
