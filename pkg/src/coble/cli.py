"""Command-line front end with JSON input/output and deterministic seeds.

Exit statuses: 0 success, 2 invalid input, 3 degenerate input, 1 internal
failure. Every error document carries a machine-readable "kind" field; with
--format json the output bytes are a pure function of the request and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import engine, piclat, projplane, quintic, sextic
from .binforms import BinForm
from .errors import CobleError, DegenerateError, SchemaError
from .moebius import MoebiusMap
from .projplane import Conic, PlanePoint, veronese
from .scalars import format_scalar, parse_scalar


def _read_input(spec: str | None) -> dict:
    if spec is None:
        raise SchemaError("input", "this verb needs --input (path, '-', or inline JSON)")
    if spec == "-":
        text = sys.stdin.read()
    elif spec.lstrip().startswith("{"):
        text = spec
    else:
        try:
            with open(spec, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise SchemaError("input", f"cannot read {spec!r}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("input", f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("input", "the input document must be a JSON object")
    return doc


def _emit(doc: dict, human: str, args) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(human + "\n")


def _parameter_pair(value) -> tuple:
    if isinstance(value, (str, int)):
        return (parse_scalar(str(value)), Fraction(1))
    if isinstance(value, list) and len(value) == 2:
        return (parse_scalar(str(value[0])), parse_scalar(str(value[1])))
    raise SchemaError("parameter", f"bad line parameter {value!r}")


def _map_str(m: MoebiusMap) -> str:
    return "(%s %s / %s %s)" % tuple(format_scalar(x) for x in m.entries())


# -- verbs ------------------------------------------------------------------


def _cmd_classify(args) -> None:
    triple = engine.RestrictionTriple.from_json(_read_input(args.input))
    result = engine.classify(triple)
    lines = [
        f"verdict: {result.label} (rank {result.rank})",
        f"detA = {format_scalar(result.det_a)}, detF = {format_scalar(result.det_f)}",
    ]
    for k, s in enumerate(result.sigmas, start=1):
        lines.append(f"sigma{k} = {_map_str(s)}")
    lines.append(f"g = {_map_str(result.g)}"
                 + (" [identity]" if result.g.is_identity() else ""))
    if result.fixed_point_coincidence is not None:
        verdictt = all(result.fixed_point_coincidence)
        lines.append(f"each A_i is the fixed divisor of sigma_i: {verdictt}")
    if result.witness_moved is not None:
        u, v = result.witness_moved
        lines.append(f"g^2 moves the parameter ({format_scalar(u)} : {format_scalar(v)})")
    _emit(result.to_json(), "\n".join(lines), args)


def _cmd_prove_identity(args) -> None:
    ok = engine.prove_det_identity_symbolically()
    doc = {"identity": ok, "constant": format_scalar(engine.JACOBIAN_DET_CONSTANT)}
    _emit(doc, f"detF == {format_scalar(engine.JACOBIAN_DET_CONSTANT)} * detA^2: {ok}", args)


def _cmd_pascal(args) -> None:
    if args.input is None:
        # randomized collinearity suite on the standard conic
        rng = random.Random(args.seed)
        conic = Conic.standard()
        trials = args.trials
        for _ in range(trials):
            params: set = set()
            while len(params) < 6:
                params.add(Fraction(rng.randint(-50, 50), rng.randint(1, 20)))
            points = [veronese(t, 1) for t in params]
            result = projplane.pascal_points(conic, points)
            if not result.collinear:
                raise AssertionError("hexagon points failed to be collinear")
        doc = {"trials": trials, "seed": args.seed, "all_collinear": True}
        _emit(doc, f"{trials} random hexagons on the conic: all collinear", args)
        return
    doc_in = _read_input(args.input)
    if "parameters" in doc_in:
        params = [_parameter_pair(p) for p in doc_in["parameters"]]
        if len(params) != 6:
            raise SchemaError("parameters", "need exactly six line parameters")
        points = [veronese(u, v) for (u, v) in params]
        result = projplane.pascal_points(Conic.standard(), points)
        _emit(result.to_json(), f"hexagon points collinear: {result.collinear}", args)
        return
    if "involutions" in doc_in:
        maps = [MoebiusMap.from_json(d) for d in doc_in["involutions"]]
        if len(maps) != 3:
            raise SchemaError("involutions", "need exactly three involutions")
        cert = projplane.dependence_certificate(*maps, seed=args.seed)
        human = (
            f"centers collinear: {cert.collinear} "
            f"(det = {format_scalar(cert.centers_det)}); "
            f"hexagon closure: {cert.closure_ok}; "
            f"side construction: "
            + ("skipped" if cert.pascal_points is None else f"matches centers: {cert.pascal_matches_centers}")
        )
        _emit(cert.to_json(), human, args)
        return
    raise SchemaError("pascal", "expected 'parameters' or 'involutions' in the input")


def _cmd_lattice_table(args) -> None:
    report = piclat.verify_paper_table()
    _emit(report.to_json(), str(report), args)


def _cmd_quintic(args) -> None:
    if args.action == "dims":
        dims = quintic.moduli_dimensions()
        human = (
            f"family dimension {dims['ambient']}, group dimension {dims['group']}, "
            f"quotient {dims['quotient']}, cross-term-free quotient {dims['codim3_quotient']}"
        )
        _emit(dims, human, args)
        return
    member = quintic.QuinticMember.from_json(_read_input(args.input))
    if args.action == "invariants":
        values = quintic.orbit_invariants(member)
        doc = {"invariants": [format_scalar(v) for v in values]}
        _emit(doc, "invariants: " + ", ".join(format_scalar(v) for v in values), args)
        return
    report = quintic.tetrahedron_report(member)
    codim3 = quintic.is_codim3_member(member)
    polar: list | None
    polar_error = None
    try:
        polar = [quintic.polar_condition(member, k) for k in (1, 2, 3)]
    except DegenerateError as exc:
        polar = None
        polar_error = exc.kind
    doc = {
        "tetrahedron": report,
        "codim3": codim3,
        "polar_conditions": polar,
    }
    if polar_error is not None:
        doc["polar_error"] = polar_error
    human_lines = [
        f"vertex multiplicity: {report['vertex']}",
        f"edge multiplicities through the vertex: {report['vertex_edges']}",
        f"triangle edge multiplicities: {report['triangle_edges']}",
        f"cross terms absent (codimension-3 member): {codim3}",
        "polar conditions: " + ("unavailable: " + polar_error if polar is None else str(polar)),
    ]
    _emit(doc, "\n".join(human_lines), args)


def _cmd_sextic(args) -> None:
    doc_in = _read_input(args.input)
    param = sextic.SexticParam.from_json(doc_in)
    if args.action == "implicitize":
        curve = sextic.implicitize(param)
        _emit({"sextic": curve.to_json()}, f"implicit sextic: {curve}", args)
        return
    nodes = [PlanePoint.from_json(d) for d in doc_in.get("nodes", [])]
    if args.action == "node-fiber":
        if not nodes:
            raise SchemaError("nodes", "node-fiber needs a 'nodes' list")
        fibers = [sextic.node_fiber(param, p) for p in nodes]
        doc = {"fibers": [f.to_json() for f in fibers]}
        _emit(doc, "\n".join(f"fiber: {f}" for f in fibers), args)
        return
    if len(nodes) != 3:
        raise SchemaError("nodes", "the pipeline needs exactly three nodes")
    fibers = [sextic.node_fiber(param, p) for p in nodes]
    triple = engine.RestrictionTriple(*fibers)
    result = engine.classify(triple)
    doc = {"fibers": [f.to_json() for f in fibers], "classification": result.to_json()}
    _emit(doc, f"verdict: {result.label} (rank {result.rank})", args)


def _cmd_gen(args) -> None:
    triple = engine.generate_case(args.label, args.seed)
    doc = {"label": args.label, **triple.to_json()}
    human = "\n".join(f"A{k} = {f}" for k, f in enumerate(triple.forms(), start=1))
    _emit(doc, human, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coble",
        description="exact classification of boundary involution triples and their models",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", help="path, '-' for stdin, or inline JSON")
        p.add_argument("--seed", type=int, default=0, help="deterministic seed")
        p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("classify", help="classify a restriction triple")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("prove-identity", help="machine-check the determinant identity")
    common(p, needs_input=False)
    p.set_defaults(func=_cmd_prove_identity)

    p = sub.add_parser("pascal", help="hexagon collinearity: six parameters, an involution triple, or a random suite")
    common(p)
    p.add_argument("--trials", type=int, default=100, help="suite size when no input is given")
    p.set_defaults(func=_cmd_pascal)

    p = sub.add_parser("lattice-table", help="verify the intersection-number table")
    common(p, needs_input=False)
    p.set_defaults(func=_cmd_lattice_table)

    p = sub.add_parser("quintic", help="tetrahedron model reports")
    p.add_argument("action", choices=("check", "invariants", "dims"))
    common(p)
    p.set_defaults(func=_cmd_quintic)

    p = sub.add_parser("sextic", help="plane sextic ingestion")
    p.add_argument("action", choices=("implicitize", "node-fiber", "pipeline"))
    common(p)
    p.set_defaults(func=_cmd_sextic)

    p = sub.add_parser("gen", help="seeded generator for each classifier branch")
    common(p, needs_input=False)
    p.add_argument("--label", required=True, choices=engine.LABELS)
    p.set_defaults(func=_cmd_gen)

    return parser


def _emit_error(exc: CobleError, fmt: str) -> None:
    doc = {"error": {"kind": exc.kind, "message": str(exc), "retryable": exc.retryable}}
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stderr.write(f"error[{exc.kind}]: {exc}\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except SchemaError as exc:
        _emit_error(exc, args.format)
        return 2
    except DegenerateError as exc:
        _emit_error(exc, args.format)
        return 3
    except CobleError as exc:
        _emit_error(exc, args.format)
        return 3
    except Exception as exc:  # internal assertion failures
        sys.stderr.write(f"internal error: {exc}\n")
        return 1
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
