"""Command-line interface.

Exit status: 0 success or check passed, 1 check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable

from .algebra import AlgebraError, BoundQuiverAlgebra
from .checkers import (
    DEFAULT_DIM_BOUND,
    CheckReport,
    check_apt_equivalence,
    check_boundary_lemma,
    check_coresolution_exactness,
    check_iyama_duality,
    check_jk_criterion,
    check_theorem1,
    check_theorem2,
    describe,
    enumerate_indecomposables,
    in_I_d,
    is_cluster_tilting,
    is_k_idempotent_ideal,
    is_precluster_tilting,
    precluster_closure,
)
from .constructions import (
    FIXTURE_NAMES,
    ConstructionError,
    fixture_text,
    parse_sets,
    preprojective_algebra_A,
    quiver_blocks,
    subset_algebra,
)
from .exprs import ExpressionError, evaluate, evaluate_one
from .homology import (
    InternalConsistencyError,
    PreconditionError,
    ext_dim_injective,
    ext_dim_projective,
    inj_dim,
    injective_coresolution,
    proj_dim,
    projective_resolution,
    tau_d,
    tau_d_inv,
)
from .linalg import GF
from .representations import RepresentationError, decompose
from .textformat import format_algebra, parse_algebra


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- inputs ------------------------------------------------------------------

def _algebra_text(source: str) -> str:
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    stem = path.name[:-4] if path.name.endswith(".alg") else path.name
    if stem in FIXTURE_NAMES and (len(path.parts) == 1 or path.parent.name == "fixtures"):
        return fixture_text(stem)
    raise UsageError(f"no such algebra file: {source}")


def load(args) -> BoundQuiverAlgebra:
    field = GF(args.prime) if getattr(args, "prime", None) else None
    return parse_algebra(_algebra_text(args.algebra), field=field)


def _idempotent(A: BoundQuiverAlgebra, text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    labels = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return A.vertex_set(labels)
    except (KeyError, ValueError, AlgebraError) as exc:
        raise UsageError(f"bad idempotent {text!r}: {exc}") from None


def _modules(A: BoundQuiverAlgebra, text: str | None):
    return evaluate(A, text) if text else []


def _labels(A: BoundQuiverAlgebra, e) -> list[str]:
    return [A.quiver.vertices[v] for v in sorted(e)]


# -- plain commands ------------------------------------------------------------

def cmd_info(args, A):
    blocks = quiver_blocks(A)
    result = {
        "field": A.field.descriptor(),
        "dimension": A.dimension,
        "vertices": A.n,
        "arrows": len(A.quiver.arrows),
        "relations": len(A.relations),
        "blocks": [list(b) for b in blocks],
    }
    lines = [
        f"field {result['field']}",
        f"dimension {A.dimension}",
        f"vertices {A.n}",
        f"arrows {result['arrows']}",
        f"relations {result['relations']}",
        "blocks " + " | ".join(",".join(b) for b in blocks),
    ]
    return result, lines


def cmd_basis(args, A):
    words = [A.word(i) for i in range(A.dimension)]
    return {"dimension": A.dimension, "basis": words}, words


def cmd_ext(args, A):
    M = evaluate_one(A, args.M)
    N = evaluate_one(A, args.N)
    proj = ext_dim_projective(args.i, M, N)
    inj = ext_dim_injective(args.i, M, N)
    if proj != inj:
        raise InternalConsistencyError(f"projective side gives {proj}, injective side gives {inj}")
    return {"i": args.i, "M": args.M, "N": args.N, "dim": proj}, [str(proj)]


def _stage_name(A, M, attr) -> str:
    verts = getattr(M, attr, ())
    if not verts:
        return "0"
    return " + ".join(f"{'P' if attr == 'tops' else 'I'}({A.quiver.vertices[v]})" for v in verts)


def cmd_resolve(args, A):
    M = evaluate_one(A, args.M)
    length = args.length if args.length is not None else 2 * A.n
    if args.injective:
        R = injective_coresolution(M, length)
        stages = [_stage_name(A, R.modules[i], "socles") for i in range(len(R.modules))]
        dim = inj_dim(M)
        arrow = " -> "
        head = f"{args.M} -> "
    else:
        R = projective_resolution(M, length)
        stages = [_stage_name(A, R.modules[i], "tops") for i in range(len(R.modules))]
        dim = proj_dim(M)
        arrow = " <- "
        head = f"{args.M} <- "
    if not R.complete:
        stages.append("...")
    key = "inj_dim" if args.injective else "proj_dim"
    result = {"M": args.M, "kind": R.kind, "stages": stages, "complete": R.complete, key: str(dim)}
    return result, [head + arrow.join(stages), f"{key} {dim}"]


def cmd_tau(args, A):
    out = []
    lines = []
    for M in evaluate(A, args.M):
        T = tau_d_inv(args.d, M) if args.inverse else tau_d(args.d, M)
        parts = [describe(X, args.seed) for X in decompose(T, args.seed)]
        out.append({"M": describe(M, args.seed), "dims": list(T.dims), "summands": parts})
        lines.append(f"{describe(M, args.seed)} -> {' + '.join(parts) or '0'}")
    return {"d": args.d, "inverse": args.inverse, "results": out}, lines


def cmd_quotient(args, A):
    e = _idempotent(A, args.e)
    B = A.quotient(e)
    text = format_algebra(B, header=f"quotient by the vertices {','.join(_labels(A, e))}")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        lines = [f"wrote {args.output} (dimension {B.dimension})"]
    else:
        lines = text.rstrip("\n").splitlines()
    return {"e": _labels(A, e), "dimension": B.dimension, "vertices": list(B.quiver.vertices),
            "blocks": [list(b) for b in quiver_blocks(B)], "output": args.output}, lines


def cmd_construct(args):
    field = GF(args.prime) if args.prime else None
    if args.kind == "subsets":
        if not args.sets:
            raise UsageError("construct subsets needs --sets")
        c = parse_sets(args.sets, args.n, cyclic=args.cyclic)
        A = subset_algebra(c, field) if field else subset_algebra(c)
        header = f"subset algebra, n = {c.n}, cyclic = {c.cyclic}"
    else:
        if args.rank is None:
            raise UsageError("construct preprojective needs --rank")
        A = preprojective_algebra_A(args.rank, field) if field else preprojective_algebra_A(args.rank)
        header = f"preprojective algebra of type A{args.rank}"
    text = format_algebra(A, header=header)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        lines = [f"wrote {args.output} (dimension {A.dimension})"]
    else:
        lines = text.rstrip("\n").splitlines()
    return {"kind": args.kind, "dimension": A.dimension, "output": args.output}, lines


def export_dot(A: BoundQuiverAlgebra) -> str:
    """Solid edges for arrows, dashed edges between the ends of each relation."""
    Q = A.quiver
    lines = ["digraph quiver {", "  rankdir=LR;"]
    for v in Q.vertices:
        lines.append(f'  "{v}";')
    for a in Q.arrows:
        lines.append(f'  "{Q.vertices[a.source]}" -> "{Q.vertices[a.target]}" [label="{a.name}"];')
    seen = set()
    for rel in A.relations:
        w = next(iter(rel))
        ends = (Q.arrows[w[0]].source, Q.arrows[w[-1]].target)
        if ends in seen:
            continue
        seen.add(ends)
        s, t = (Q.vertices[x] for x in ends)
        lines.append(f'  "{s}" -> "{t}" [style=dashed, arrowhead=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args, A):
    text = export_dot(A)
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from None
        lines = [f"wrote {args.output}"]
    else:
        lines = text.rstrip("\n").splitlines()
    return {"nodes": A.n, "arrows": len(A.quiver.arrows), "output": args.output}, lines


# -- checks ------------------------------------------------------------------

def _indecomposables(args, B):
    if B.field.p is None:
        raise UsageError("cluster tilting needs an indecomposable list; pass --prime to work over a finite field")
    return enumerate_indecomposables(B, args.bound, seed=args.seed)


def check_command(args, A) -> CheckReport:
    what = args.check
    seed = args.seed
    d = args.d
    if what == "precluster":
        rep = is_precluster_tilting(d, _need(A, args.modules), algebra=A, seed=seed)
    elif what == "cluster":
        rep = is_cluster_tilting(d, _need(A, args.modules), _indecomposables(args, A), algebra=A, seed=seed)
    elif what == "idempotent":
        k = args.k if args.k is not None else d - 1
        rep = is_k_idempotent_ideal(A, _idempotent(A, args.e), k)
    elif what == "apt":
        rep = check_apt_equivalence(A, _idempotent(A, args.e), evaluate_one(A, _required(args.N, "-N")), d)
    elif what == "in-I":
        rep = in_I_d(A, _idempotent(A, args.e), evaluate_one(A, _required(args.N, "-N")), d)
    elif what == "coresolution":
        rep = check_coresolution_exactness(A, _idempotent(A, args.e), evaluate_one(A, _required(args.N, "-N")), d)
    elif what == "lemma":
        rep = check_boundary_lemma(A, _idempotent(A, args.e), evaluate_one(A, _required(args.M, "-M")), reading=args.reading)
    elif what == "theorem1":
        rep = check_theorem1(A, _idempotent(A, args.e), _collection(A, args, d), seed=seed, d=d)
    elif what == "theorem2":
        e = _idempotent(A, args.e)
        B = A.quotient(e)
        coll = _collection(B, args, d) if B.n else []
        rep = check_theorem2(A, e, coll, quantifier=args.quantifier, proj_reading=args.proj_reading, seed=seed, d=d)
    elif what == "jk":
        e = _idempotent(A, args.e)
        B = A.quotient(e)
        indecs = enumerate_indecomposables(B, args.bound, seed=seed) if B.field.p is not None and B.n else None
        rep = check_jk_criterion(A, d, e, _need(A, args.modules), quotient_indecs=indecs, seed=seed)
    elif what == "iyama":
        rep = check_iyama_duality(d, _need(A, args.modules), algebra=A, seed=seed)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown check {what}")
    rep.inputs = {"algebra": args.algebra, **rep.inputs}
    return rep


def _required(value, flag):
    if not value:
        raise UsageError(f"this check needs {flag}")
    return value


def _need(A, text):
    mods = _modules(A, _required(text, "--modules"))
    if not mods:
        raise UsageError("empty module list")
    return mods


def _collection(A, args, d):
    """--modules as given; without it, or with --close, the tau_d closure of proj + inj (+ modules)."""
    mods = _modules(A, args.modules)
    if mods and not args.close:
        return mods
    return list(precluster_closure(A, d, start=mods, seed=args.seed))


# -- argument parsing ------------------------------------------------------------

def _common(p: argparse.ArgumentParser, algebra: bool = True) -> None:
    if algebra:
        p.add_argument("algebra", help="algebra file, or a packaged example such as fixtures/aus2.alg")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized splitting and sweeps")
    p.add_argument("--prime", type=int, help="read the algebra over the prime field F_p")
    p.add_argument("--timings", action="store_true", help="report wall-clock timings")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiverext", description="Homological computations over bound quiver algebras.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="dimension, counts and blocks")
    _common(p)
    p = sub.add_parser("basis", help="list the basis paths")
    _common(p)
    p = sub.add_parser("ext", help="dim Ext^i(M, N)")
    _common(p)
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-M", required=True, help="module expression")
    p.add_argument("-N", required=True, help="module expression")
    p = sub.add_parser("resolve", help="minimal projective resolution or injective coresolution")
    _common(p)
    p.add_argument("-M", required=True)
    p.add_argument("--injective", action="store_true")
    p.add_argument("--length", type=int)
    p = sub.add_parser("tau", help="tau_d or its inverse, decomposed")
    _common(p)
    p.add_argument("-M", required=True)
    p.add_argument("-d", type=int, default=1)
    p.add_argument("--inverse", action="store_true")
    p = sub.add_parser("quotient", help="A/<e> in the text format")
    _common(p)
    p.add_argument("-e", required=True, help="comma-separated vertex labels")
    p.add_argument("-o", "--output")
    p = sub.add_parser("construct", help="build a subset or preprojective algebra")
    p.add_argument("kind", choices=("subsets", "preprojective"))
    _common(p, algebra=False)
    p.add_argument("--n", type=int)
    p.add_argument("--sets")
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--rank", type=int)
    p.add_argument("-o", "--output")
    p = sub.add_parser("export-dot", help="Graphviz rendering of the quiver")
    _common(p)
    p.add_argument("-o", "--output")

    p = sub.add_parser("check", help="run a checker")
    p.add_argument(
        "check",
        choices=("precluster", "cluster", "idempotent", "apt", "in-I", "coresolution",
                 "lemma", "theorem1", "theorem2", "jk", "iyama"),
    )
    _common(p)
    p.add_argument("-d", type=int, default=2)
    p.add_argument("-e", help="comma-separated vertex labels of the idempotent")
    p.add_argument("-k", type=int, help="degree for the idempotent-ideal check (default d-1)")
    p.add_argument("--modules", help="module expressions forming the collection")
    p.add_argument("--close", action="store_true", help="close the collection under tau_d and its inverse")
    p.add_argument("-M")
    p.add_argument("-N")
    p.add_argument("--bound", type=int, default=DEFAULT_DIM_BOUND, help="dimension bound for enumerating indecomposables")
    p.add_argument("--reading", choices=("literal", "swapped"), default="literal")
    p.add_argument("--quantifier", choices=("exists", "forall"), default="exists")
    p.add_argument("--proj-reading", choices=("difference", "e-vertices"), default="difference")
    return parser


def _emit(out, args, payload: dict, lines: list[str], timings) -> None:
    if args.format == "json":
        out.write(json.dumps({**payload, "timings": timings}, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
        if timings is not None:
            out.write(f"time {timings['total_s']:.3f}s\n")


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"quiverext: error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        if args.verb == "construct":
            result, lines = cmd_construct(args)
            payload = {"command": "construct", "inputs": {"kind": args.kind}, "verdict": "pass", "result": result}
            _emit(out, args, payload, lines, _timings(args, start))
            return 0
        A = load(args)
        if args.verb == "check":
            rep = check_command(args, A)
            t = _timings(args, start)
            if args.format == "json":
                out.write(rep.to_json(t) + "\n")
            else:
                out.write(rep.to_text())
                if t is not None:
                    out.write(f"time {t['total_s']:.3f}s\n")
            return 0 if rep.passed else 1
        handler: Callable = {
            "info": cmd_info,
            "basis": cmd_basis,
            "ext": cmd_ext,
            "resolve": cmd_resolve,
            "tau": cmd_tau,
            "quotient": cmd_quotient,
            "export-dot": cmd_export_dot,
        }[args.verb]
        result, lines = handler(args, A)
        payload = {"command": args.verb, "inputs": {"algebra": args.algebra}, "verdict": "pass", "result": result}
        _emit(out, args, payload, lines, _timings(args, start))
        return 0
    except (UsageError, AlgebraError, ExpressionError, ConstructionError, RepresentationError,
            PreconditionError, OSError) as exc:
        err.write(f"quiverext: error: {exc}\n")
        return 2
    except InternalConsistencyError as exc:
        err.write(f"quiverext: internal inconsistency: {exc}\n")
        return 1


def _timings(args, start: float):
    return {"total_s": round(time.perf_counter() - start, 6)} if args.timings else None


def main() -> None:
    sys.exit(run())
