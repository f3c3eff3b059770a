"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 violated
precondition, 4 resource cap, 5 oracle contradiction.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path as FsPath

from . import exactlin
from .exactlin import FGAbGroup
from .hochschild import (
    DEFAULT_MAX_WEIGHT,
    PreconditionError,
    hh_graded,
    table_to_json,
)
from .ktheory import k_groups, prop63_check
from .kunneth import LINF, TensorSpec, distinguish, spec_profile, top_degree
from .oracle import (
    DEFAULT_CHAIN_CAP,
    OracleCapExceeded,
    OracleContradiction,
    build_l0n,
    build_lmn,
    formula_dims,
    hochschild_dims,
    induced_maps_check,
    regular_bimodule,
)
from .paths import DEFAULT_PATH_CAP, PathCapExceeded, orbit_count_burnside, trace_power
from .quiver import (
    Quiver,
    QuiverParseError,
    QuiverValidationError,
    adjacency,
    eliminate_proper_sources,
    is_acyclic,
    parse_quiver,
    proper_sources,
    sinks,
    sources,
    standard_quiver,
)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE, EXIT_CONTRADICTION = range(6)


class UsageError(Exception):
    pass


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    quiver_files: list[str] = field(default_factory=list)
    field_char: int = 0
    max_weight: int = DEFAULT_MAX_WEIGHT
    path_cap: int = DEFAULT_PATH_CAP
    chain_cap: int = DEFAULT_CHAIN_CAP
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        exactlin.check_char(self.field_char)
        if self.path_cap < 1 or self.chain_cap < 1:
            raise ValueError("caps must be >= 1")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_BUILTIN = re.compile(r"(rose|e_n|cycle|line)\((\d+)\)")


def load_quiver(token: str) -> Quiver:
    """A quiver file (JSON or terse), or a builtin such as ``rose(2)``."""
    m = _BUILTIN.fullmatch(token.strip())
    if m and not FsPath(token).exists():
        return standard_quiver(m.group(1), int(m.group(2)))
    try:
        text = FsPath(token).read_text(encoding="utf-8")
    except OSError as exc:
        raise QuiverParseError(f"cannot read quiver file {token!r}: {exc.strerror}") from exc
    fmt = "json" if token.endswith(".json") else None
    return parse_quiver(text, fmt)


def parse_tensor_spec(text: str) -> TensorSpec:
    """Comma-separated factors: quiver files, ``Linf``, or ``inf:FACTOR`` (at most one)."""
    factors, infinite, labels = [], None, []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            raise UsageError(f"empty factor in {text!r}")
        labels.append(tok)
        if tok.startswith("inf:"):
            if infinite is not None:
                raise UsageError("only one infinitely repeated factor is allowed")
            inner = tok[4:]
            infinite = LINF if inner == "Linf" else load_quiver(inner)
        elif tok == "Linf":
            factors.append(LINF)
        else:
            factors.append(load_quiver(tok))
    return TensorSpec(tuple(factors), infinite, tuple(labels))


# ---------------------------------------------------------------------------
# emitters


def emit(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
    kind = report.get("kind")
    render = _TABLES.get(kind, _table_generic)
    return render(report).rstrip("\n") + "\n"


def _table_hh(r: dict) -> str:
    lines = [f"field char {r['field_char']}", f"{'m':>4}  {'HH0':>6}  {'HH1':>6}"]
    for w in r["weights"]:
        lines.append(f"{w['m']:>4}  {str(w['hh0']):>6}  {str(w['hh1']):>6}")
    dims = ", ".join(str(d) for d in r["profile"]["dims"])
    lines.append(f"total HH by degree: [{dims}, 0, ...]")
    return "\n".join(lines)


def _table_distinguish(r: dict) -> str:
    wit = "" if r["witness_degree"] is None else f" at degree {r['witness_degree']}"
    lines = [f"{r['verdict']}{wit}"]
    for name, p in zip(("A", "B"), r["profiles"]):
        tail = ", nonzero ..." if p["all_degrees_nonzero"] else ", 0, ..."
        lines.append(f"  {name}: [{', '.join(str(d) for d in p['dims'])}{tail}]")
    return "\n".join(lines)


def _table_k(r: dict) -> str:
    k0 = r["k0"]
    g = FGAbGroup(k0["free"], tuple(k0["torsion"]))
    shown = "Z/1 (trivial)" if g.is_trivial else str(g)
    return f"K0 = {shown}, K1 free rank = {r['k1_free']}"


def _table_generic(r: dict) -> str:
    return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(r.items()))


_TABLES = {"hh": _table_hh, "distinguish": _table_distinguish, "k": _table_k}


# ---------------------------------------------------------------------------
# commands


def cmd_info(args, cfg: RunConfig) -> dict:
    q = load_quiver(args.quiver)
    adj = adjacency(q)
    layers = []
    for m in range(1, cfg.max_weight + 1):
        layers.append({"m": m, "closed_paths": trace_power(q, m), "orbits": orbit_count_burnside(q, m)})
    return {
        "kind": "info",
        "vertices": list(q.vertices),
        "arrows": len(q.arrows),
        "sinks": sorted(sinks(q)),
        "sources": sorted(sources(q)),
        "proper_sources": sorted(proper_sources(q)),
        "acyclic": is_acyclic(q),
        "vertex_order": list(adj.vertex_order),
        "one_minus_nt": adj.one_minus_nt,
        "layers": layers,
    }


def cmd_hh(args, cfg: RunConfig) -> dict:
    q = load_quiver(args.quiver)
    if args.eliminate_sources:
        q = eliminate_proper_sources(q)
    t = hh_graded(q, cfg.max_weight, cfg.field_char, path_cap=cfg.path_cap, fallback=not args.no_fallback)
    out = table_to_json(t, negative=args.negative)
    out["kind"] = "hh"
    return out


def cmd_tensor(args, cfg: RunConfig) -> dict:
    spec = parse_tensor_spec(args.spec)
    p = spec_profile(spec, cfg.field_char)
    return {"kind": "tensor", "factors": list(spec.labels), "profile": p.to_json(), "top_degree": top_degree(p).to_json()}


def cmd_distinguish(args, cfg: RunConfig) -> dict:
    a, b = parse_tensor_spec(args.a), parse_tensor_spec(args.b)
    out = distinguish(a, b, cfg.field_char).to_json()
    out["kind"] = "distinguish"
    out["specs"] = [list(a.labels), list(b.labels)]
    return out


def cmd_k(args, cfg: RunConfig) -> dict:
    out = k_groups(load_quiver(args.quiver)).to_json()
    out["kind"] = "k"
    return out


def cmd_prop63(args, cfg: RunConfig) -> dict:
    try:
        g = FGAbGroup.parse(args.group)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = prop63_check(g, args.n).to_json()
    out["kind"] = "prop63"
    out["n"] = args.n
    return out


def cmd_oracle(args, cfg: RunConfig) -> dict:
    q = load_quiver(args.quiver)
    n, m, d = args.level, args.weight, args.max_degree
    A = build_l0n(q, n)
    M = regular_bimodule(A) if m == 0 else build_lmn(q, m, n, A)
    dims = hochschild_dims(A, M, d, cfg.field_char, chain_cap=cfg.chain_cap)
    expected = formula_dims(q, m, n, d)
    out = {
        "kind": "oracle",
        "level": n,
        "weight": m,
        "algebra_dim": A.dim,
        "module_dim": M.dim,
        "dims": dims,
        "formula_dims": expected,
        "agree": dims == expected,
    }
    if args.check_induced:
        if m == 0:
            raise UsageError("--check-induced needs a nonzero --weight")
        det = induced_maps_check(q, m, n, cfg.field_char)
        rnd = induced_maps_check(q, m, n, cfg.field_char, rng=random.Random(cfg.seed))
        out["induced"] = {
            "sigma_ok": det.sigma_ok and rnd.sigma_ok,
            "phi_ok": det.phi_ok and rnd.phi_ok,
            "orientation": det.orientation,
            "deterministic": det.to_json(),
            "randomized": rnd.to_json(),
        }
        if not (det.ok and rnd.ok):
            raise OracleContradiction(json.dumps(out, sort_keys=True))
    if not out["agree"]:
        raise OracleContradiction(json.dumps(out, sort_keys=True))
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--char", type=int, default=0, dest="field_char", help="0 or a prime")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--path-cap", type=int, default=DEFAULT_PATH_CAP)
    common.add_argument("--chain-cap", type=int, default=DEFAULT_CHAIN_CAP)

    p = _Parser(prog="quiverhh", description="Hochschild homology and K-theory of Leavitt path algebras")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", parents=[common], help="quiver summary and closed-path counts")
    s.add_argument("quiver")
    s.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("hh", parents=[common], help="weight-graded HH table")
    s.add_argument("quiver")
    s.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    s.add_argument("--eliminate-sources", action="store_true")
    s.add_argument("--negative", action="store_true", help="list negative weights too")
    s.add_argument("--no-fallback", action="store_true", help="fail instead of counting without enumeration")
    s.set_defaults(func=cmd_hh)

    s = sub.add_parser("tensor", parents=[common], help="HH profile of a tensor product")
    s.add_argument("spec")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("distinguish", parents=[common], help="separate two tensor products by HH")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_distinguish)

    s = sub.add_parser("k", parents=[common], help="K_0 and rank K_1 of L(E)")
    s.add_argument("quiver")
    s.set_defaults(func=cmd_k)

    s = sub.add_parser("prop63", parents=[common], help="K-theory absorption check for L(E_n)")
    s.add_argument("--group", required=True, help="e.g. Z^2+Z/6")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_prop63)

    s = sub.add_parser("oracle", parents=[common], help="bar-complex check on L_{0,n} and L_{m,n}")
    s.add_argument("quiver")
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--max-degree", type=int, default=1)
    s.add_argument("--check-induced", action="store_true")
    s.set_defaults(func=cmd_oracle)
    return p


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        try:
            cfg = RunConfig(
                command=args.command,
                quiver_files=[getattr(args, "quiver", "")],
                field_char=args.field_char,
                max_weight=getattr(args, "max_weight", DEFAULT_MAX_WEIGHT),
                path_cap=args.path_cap,
                chain_cap=args.chain_cap,
                output_format=args.format,
                seed=args.seed,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        report = args.func(args, cfg)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (QuiverParseError, QuiverValidationError, InputError) as exc:
        err.write(f"invalid input: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        err.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    except (PathCapExceeded, OracleCapExceeded) as exc:
        err.write(f"resource cap: {exc}\n")
        return EXIT_RESOURCE
    except (OracleContradiction, AssertionError) as exc:
        err.write(f"oracle contradiction: {exc}\n")
        return EXIT_CONTRADICTION
    except ValueError as exc:
        # remaining ValueErrors are hypothesis failures (bad char, sinks in the oracle, n < 1)
        err.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    out.write(emit(report, cfg.output_format))
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
