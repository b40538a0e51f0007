"""``g2hol`` command line: batch verification of the classification and the examples.

Every subcommand collects findings ``(check, verdict, details)`` and exits 0
iff all of them pass.  ``--json`` prints one object with ``"schema": 1``;
scalars are always written in the text syntax of :mod:`g2hol.scalar`.
"""

from __future__ import annotations

import argparse
import json
import sys
import textwrap
from dataclasses import dataclass, field

from .linalg import Matrix
from .scalar import Scalar

SCHEMA = 1


@dataclass
class Report:
    command: list
    findings: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, check: str, ok: bool, **details) -> bool:
        self.findings.append((check, "pass" if ok else "fail", details))
        return ok

    @property
    def ok(self) -> bool:
        return all(v == "pass" for _, v, _ in self.findings)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "ok": self.ok,
            "findings": [{"check": c, "verdict": v, "details": _jsonable(d)} for c, v, d in self.findings],
            "info": _jsonable(self.info),
        }

    def render(self) -> str:
        lines = []
        for k, v in self.info.items():
            if isinstance(v, list):
                lines.append(f"{k}:")
                for x in v:
                    lines.append(textwrap.indent(_text(x), "  "))
                    if isinstance(x, Matrix):
                        lines.append("")
            else:
                lines.append(f"{k}: {_text(v)}")
        for c, v, d in self.findings:
            extra = ", ".join(f"{k}={_text(x)}" for k, x in d.items())
            lines.append(f"[{v.upper()}] {c}" + (f"  ({extra})" if extra else ""))
        return "\n".join(lines)


def _text(x) -> str:
    if isinstance(x, Matrix):
        return x.pretty()
    return str(x)


def _jsonable(x):
    if isinstance(x, Scalar):
        return str(x)
    if isinstance(x, Matrix):
        return [[str(v) for v in row] for row in x.data]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


def _params(items) -> dict:
    out = {}
    for item in items or ():
        k, sep, v = item.partition("=")
        if not sep:
            raise SystemExit(f"--param expects k=v, got {item!r}")
        out[k.strip()] = v.strip()
    return out


def _entry(args):
    from .catalog import get_entry
    from .scalar import parse_scalar

    return get_entry(args.catalog, **{k: parse_scalar(v) for k, v in _params(args.param).items()})


def _load(args):
    from .liegeom import load_lie

    p = load_lie(args.file)
    if getattr(args, "convention", None):
        p = p.with_convention(args.convention)
    return p


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args, rep: Report) -> None:
    from .liegeom import jacobi_check, koszul, parallel_form_check
    from .linalg import signature

    p = _load(args)
    jr = jacobi_check(p)
    rep.add("jacobi", jr.ok, **({"triple": jr.triple} if not jr.ok else {}))
    sig = signature(p.gram)
    rep.add("signature (4,3)", sig == (4, 0, 3), negative=sig[0], positive=sig[2])
    if jr.ok:
        rep.add("parallel 3-form", parallel_form_check(koszul(p), p.convention), convention=p.convention.name)


def cmd_holonomy(args, rep: Report) -> None:
    from .liegeom import ambrose_singer, format_endomorphism, jacobi_check, koszul, match_catalog

    p = _load(args)
    jr = jacobi_check(p)
    if not rep.add("jacobi", jr.ok, **({"triple": jr.triple} if not jr.ok else {})):
        return
    hr = ambrose_singer(koszul(p), p)
    match = match_catalog(hr, p.convention)
    rep.info.update({
        "dimension": hr.dim,
        "generations": hr.generations,
        "catalog": match,
        "basis": [format_endomorphism(m) for m in hr.algebra.basis()],
    })
    rep.add("bracket-closed", hr.algebra.closed)


def cmd_berger(args, rep: Report) -> None:
    from .berger import is_berger

    if args.catalog:
        h = _entry(args).algebra
        rep.info["entry"] = args.catalog
    else:
        from .liegeom import ambrose_singer, koszul

        p = _load(args)
        h = ambrose_singer(koszul(p), p).algebra
        rep.info["holonomy dimension"] = h.dim
    res = is_berger(h)
    rep.info["dim K"] = res.dim_K
    rep.info["Berger"] = "yes" if res.verdict else "no"
    rep.add("berger", res.verdict, dim_h=h.dim, dim_derived=res.derived.dim)


def cmd_classify(args, rep: Report) -> None:
    from .exterior import get_convention
    from .g2star import stabilizer_algebra
    from .repstruct import holonomy_type

    e = _entry(args)
    conv = get_convention(args.convention or e.convention)
    r = holonomy_type(e.algebra, conv.gram)
    rep.info.update({
        "entry": e.id,
        "label": e.label,
        "dimension": e.dim,
        "socle dimension": r.socle_dim,
        "type": r.type,
        "indecomposable": r.indecomposable,
        "reason": r.detail.reason if r.detail else "",
    })
    rep.add("bracket-closed", e.algebra.closed)
    rep.add("in stabilizer of omega", e.algebra.is_subalgebra_of(stabilizer_algebra(conv)), convention=conv.name)
    rep.add("socle isotropic", r.socle_isotropic)
    rep.add("declared type", r.type == e.declared_type, declared=e.declared_type, computed=r.type)
    rep.add("indecomposable", r.indecomposable != "no", verdict=r.indecomposable)


def cmd_catalog(args, rep: Report) -> None:
    from .catalog import entry_ids, family_ids, family_params

    if args.action == "list":
        rep.info["families"] = [f"{b}" + (f" [{', '.join(family_params(b))}]" if family_params(b) else "")
                                for b in family_ids()]
        rep.info["default grid"] = entry_ids()
        return
    if not args.id:
        raise SystemExit("catalog show needs an id")
    args.catalog = args.id
    e = _entry(args)
    rep.info.update({
        "entry": e.id,
        "label": e.label,
        "convention": e.convention,
        "type": e.declared_type,
        "dimension": e.dim,
        "basis": e.algebra.basis(),
    })
    rep.add("bracket-closed", e.algebra.closed)


def cmd_examples(args, rep: Report) -> None:
    from .liegeom import examples_registry, get_example, verify_example

    exs = [get_example(args.name)] if args.name else examples_registry()
    passed = 0
    for ex in exs:
        r = verify_example(ex)
        passed += r.ok
        rep.add(f"example {ex.name}", r.ok, jacobi=r.jacobi, parallel=r.parallel, Lambda=r.lambda_ok,
                dim=r.holonomy_dim, expected=r.expected_dim, generators=r.generators_span,
                catalog=r.matched_catalog)
    rep.info["examples"] = f"{passed}/{len(exs)} pass"
    if args.name or args.no_tables:
        return
    from .berger import table_relations_check

    for which in (1, 2):
        t = table_relations_check(which)
        rep.add(f"table {which} cells and footer", not t.failing_symbols and not t.relation_failures
                and t.table_rank == t.n_symbols and t.pair_symmetry_failures == 0,
                symbols=t.n_symbols, rank=t.table_rank)
        rep.add(f"table {which} parameter count = dim K", t.kernel_dim == t.n_symbols,
                dim_K=t.kernel_dim, bruteforce=t.bruteforce_dim, symbols=t.n_symbols)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="g2hol", description="Exact checks for holonomy algebras inside g2*.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output (schema 1)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", parents=[common], help="Jacobi, signature and parallel 3-form")
    p.add_argument("file")
    p.add_argument("--convention", choices=["C1", "C2", "C3"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("holonomy", parents=[common], help="Ambrose-Singer holonomy algebra")
    p.add_argument("file")
    p.add_argument("--convention", choices=["C1", "C2", "C3"])
    p.set_defaults(func=cmd_holonomy)

    p = sub.add_parser("berger", parents=[common], help="Berger's first criterion")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--catalog", metavar="ID")
    g.add_argument("--file")
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--convention", choices=["C1", "C2", "C3"])
    p.set_defaults(func=cmd_berger)

    p = sub.add_parser("classify", parents=[common], help="socle, type and indecomposability")
    p.add_argument("--catalog", metavar="ID", required=True)
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--convention", choices=["C1", "C2", "C3"])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", parents=[common], help="list or show catalog entries")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("id", nargs="?")
    p.add_argument("--param", action="append", metavar="K=V")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("examples", parents=[common], help="run the bundled example verifications")
    p.add_argument("action", choices=["run"])
    p.add_argument("name", nargs="?")
    p.add_argument("--no-tables", action="store_true", help="skip the curvature table checks")
    p.set_defaults(func=cmd_examples)
    return ap


def main(argv=None) -> int:
    from .liegeom import LieParseError

    args = build_parser().parse_args(argv)
    rep = Report(["g2hol"] + list(sys.argv[1:] if argv is None else argv))
    try:
        args.func(args, rep)
    except LieParseError as e:
        rep.add("parse", False, error=str(e), line=e.line, column=e.col)
    except (KeyError, ValueError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        rep.add("input", False, error=msg)
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(rep.render())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
