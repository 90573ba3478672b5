"""Command-line interface.

Exit codes: 0 success/certified, 1 inconclusive (budget or depth bound hit),
2 negative mathematical verdict or invalid mathematical input, 64 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as cat
from . import diagrams as dg
from . import milnor
from . import seifert
from . import smoves

EX_OK = 0
EX_INCONCLUSIVE = 1
EX_FAILED = 2
EX_USAGE = 64


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_matrix(path: str) -> seifert.SeifertMatrix:
    try:
        return seifert.SeifertMatrix.from_json(_read_text(path))
    except seifert.StructureError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_diagram(path: str) -> dg.LinkDiagram:
    try:
        return dg.LinkDiagram.from_json(_read_text(path))
    except seifert.StructureError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_moves(path: str) -> tuple[smoves.SMove, ...]:
    try:
        return smoves.moves_from_json(_read_text(path))
    except (seifert.StructureError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_validate(args) -> int:
    matrix = _load_matrix(args.matrix)
    report = seifert.validate(matrix)
    if report.valid:
        print(f"valid boundary-link Seifert matrix: m={matrix.m}, "
              f"block sizes {list(matrix.block_sizes)}")
        return EX_OK
    for v in report.violations:
        print(f"violation [{v.rule}] at blocks {v.blocks}: {v.detail}")
    return EX_FAILED


def cmd_reduce(args) -> int:
    matrix = _load_matrix(args.matrix)
    if not seifert.is_valid(matrix):
        print("input matrix is not a valid boundary-link Seifert matrix")
        return EX_FAILED
    result = smoves.reduce_to_null(matrix, budget=args.budget,
                                   front_only=args.front_only)
    if result.found:
        text = smoves.moves_to_json(result.sequence.moves)
        if args.out:
            Path(args.out).write_text(text + "\n")
        print(f"reduced to the null matrix in {len(result.sequence.moves)} "
              f"reductions ({result.nodes} nodes)")
        if not args.out:
            print(text)
        return EX_OK
    if result.status == "budget":
        print(f"inconclusive: node budget {args.budget} exhausted")
        return EX_INCONCLUSIVE
    print("not reducible to the null matrix by elementary reductions")
    return EX_FAILED


def cmd_goodbasis(args) -> int:
    matrix = _load_matrix(args.matrix)
    if not seifert.is_valid(matrix):
        print("input matrix is not a valid boundary-link Seifert matrix")
        return EX_FAILED
    try:
        form = smoves.good_basis_form_check(matrix)
    except seifert.StructureError as exc:
        print(str(exc))
        return EX_FAILED
    if form is None:
        print("no pair ordering puts the matrix in good-basis form")
        return EX_FAILED
    print(json.dumps({"ordering": list(form.ordering),
                      "signs": list(form.signs),
                      "swaps": list(form.swaps)}, separators=(", ", ": ")))
    return EX_OK


def cmd_replay(args) -> int:
    matrix = _load_matrix(args.matrix)
    moves = _load_moves(args.moves)
    try:
        mats = smoves.MoveSequence(matrix, moves).replay()
    except smoves.ReplayError as exc:
        print(f"replay failed: {exc}")
        return EX_FAILED
    sizes = [m.side for m in mats]
    print(f"replayed {len(moves)} moves; sizes {sizes}")
    print(mats[-1].to_json())
    return EX_OK


def cmd_normalize(args) -> int:
    matrix = _load_matrix(args.matrix)
    moves = _load_moves(args.moves)
    try:
        seq = smoves.normalize_sequence(smoves.MoveSequence(matrix, moves))
    except smoves.ReplayError as exc:
        print(f"replay failed: {exc}")
        return EX_FAILED
    text = smoves.moves_to_json(seq.moves)
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(f"wrote {len(seq.moves)} moves to {args.out}")
    else:
        print(text)
    return EX_OK


def _parse_index(text: str) -> tuple[int, ...]:
    try:
        if "," in text:
            return tuple(int(t) for t in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise UsageError(f"bad index {text!r}") from exc


def cmd_mu(args) -> int:
    diagram = _load_diagram(args.diagram)
    index = _parse_index(args.index)
    try:
        value, indet = milnor.mu_bar(diagram, index, depth=args.depth)
    except seifert.StructureError as exc:
        raise UsageError(str(exc)) from exc
    print(json.dumps({"index": list(index), "value": value,
                      "indeterminacy": indet}, separators=(", ", ": ")))
    return EX_OK


def cmd_ht(args) -> int:
    diagram = _load_diagram(args.diagram)
    verdict, table = milnor.is_homotopically_trivial(diagram, depth=args.depth)
    print(table.to_json())
    print("homotopically trivial" if verdict else "not homotopically trivial")
    return EX_OK if verdict else EX_FAILED


def cmd_htplus(args) -> int:
    diagram = _load_diagram(args.diagram)
    sublink = tuple(s for s in args.sublink.split(",") if s)
    try:
        pair = milnor.PairedLink(diagram, sublink)
        verdict, results = milnor.is_ht_plus_pair(pair, depth=args.depth)
    except seifert.StructureError as exc:
        raise UsageError(str(exc)) from exc
    for label in sorted(results):
        ok, _ = results[label]
        print(f"component {label}: {'trivial' if ok else 'NOT trivial'}")
    print("homotopically trivial+" if verdict else "not homotopically trivial+")
    return EX_OK if verdict else EX_FAILED


def _parse_derived(pairs: list[str]) -> dict[str, dg.LinkDiagram]:
    out = {}
    for item in pairs:
        if "=" not in item:
            raise UsageError(f"--derived wants name=path, got {item!r}")
        name, path = item.split("=", 1)
        out[name] = _load_diagram(path)
    return out


def _finish_certificate(cert: milnor.Certificate, out: str | None) -> int:
    text = cert.to_json()
    if out:
        Path(out).write_text(text + "\n")
    print(text)
    if cert.verdict == "certified-freely-slice":
        return EX_OK
    if cert.verdict == "inconclusive":
        return EX_INCONCLUSIVE
    return EX_FAILED


def cmd_certify(args) -> int:
    matrix = _load_matrix(args.matrix)
    if not seifert.is_valid(matrix):
        print("input matrix is not a valid boundary-link Seifert matrix")
        return EX_FAILED
    derived = _parse_derived(args.derived)
    cert = milnor.certify_theorem_A(matrix, derived, depth=args.depth)
    return _finish_certificate(cert, args.out)


def cmd_lbeta(args) -> int:
    beta = _load_diagram(args.beta)
    try:
        matrix, derived = milnor.build_l_beta_bundle(beta)
    except seifert.StructureError as exc:
        print(str(exc))
        return EX_FAILED
    outdir = Path(args.outdir) if args.outdir else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "matrix.json").write_text(matrix.to_json() + "\n")
        for name, d in sorted(derived.items()):
            (outdir / f"{name}.json").write_text(d.to_json() + "\n")
    cert = milnor.certify_theorem_A(matrix, derived, depth=args.depth)
    out = str(outdir / "certificate.json") if outdir else None
    return _finish_certificate(cert, out)


def cmd_catalog(args) -> int:
    if args.action == "list":
        for e in cat.entries():
            print(f"{e.name:20s} {e.kind:8s} {e.description}")
        return EX_OK
    if not args.name:
        raise UsageError("catalog export needs an entry name")
    try:
        payload = cat.raw_payload(args.name)
    except seifert.StructureError as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        Path(args.out).write_text(payload)
        print(f"wrote {args.name} to {args.out}")
    else:
        print(payload, end="")
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="blcert",
        description="Boundary-link Seifert matrix calculus, Milnor "
                    "invariants, and the freely-slice hypothesis certifier.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("validate", help="validate a Seifert matrix file")
    q.add_argument("matrix")
    q.set_defaults(func=cmd_validate)

    q = sub.add_parser("reduce", help="search for a reduction path to null")
    q.add_argument("matrix")
    q.add_argument("--budget", type=int, default=10 ** 6)
    q.add_argument("--front-only", action="store_true",
                   help="only accept the front-of-block pattern")
    q.add_argument("--out")
    q.set_defaults(func=cmd_reduce)

    q = sub.add_parser("goodbasis", help="check the good-basis staircase form")
    q.add_argument("matrix")
    q.set_defaults(func=cmd_goodbasis)

    q = sub.add_parser("replay", help="replay and verify a move sequence")
    q.add_argument("matrix")
    q.add_argument("moves")
    q.set_defaults(func=cmd_replay)

    q = sub.add_parser("normalize", help="push all enlargements before reductions")
    q.add_argument("matrix")
    q.add_argument("moves")
    q.add_argument("--out")
    q.set_defaults(func=cmd_normalize)

    q = sub.add_parser("mu", help="a single Milnor mu-bar invariant")
    q.add_argument("diagram")
    q.add_argument("--index", required=True,
                   help="component indices, e.g. 123 or 1,2,3")
    q.add_argument("--depth", type=int, default=None)
    q.set_defaults(func=cmd_mu)

    q = sub.add_parser("ht", help="link-homotopy triviality test")
    q.add_argument("diagram")
    q.add_argument("--depth", type=int, default=None)
    q.set_defaults(func=cmd_ht)

    q = sub.add_parser("htplus", help="homotopically trivial+ pair test")
    q.add_argument("diagram")
    q.add_argument("--sublink", required=True,
                   help="comma-separated component labels forming K")
    q.add_argument("--depth", type=int, default=None)
    q.set_defaults(func=cmd_htplus)

    q = sub.add_parser("certify", help="verify the freely-slice hypotheses")
    q.add_argument("matrix")
    q.add_argument("--derived", nargs="+", default=[],
                   help="name=diagram-file pairs (a1=..., b1=..., ...)")
    q.add_argument("--depth", type=int, default=None)
    q.add_argument("--out")
    q.set_defaults(func=cmd_certify)

    q = sub.add_parser("lbeta", help="build and certify the doubled link of a "
                                     "2-strand string link")
    q.add_argument("beta")
    q.add_argument("--depth", type=int, default=None)
    q.add_argument("--outdir")
    q.set_defaults(func=cmd_lbeta)

    q = sub.add_parser("catalog", help="list or export bundled examples")
    q.add_argument("action", choices=["list", "export"])
    q.add_argument("name", nargs="?")
    q.add_argument("--out")
    q.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EX_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except seifert.StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
