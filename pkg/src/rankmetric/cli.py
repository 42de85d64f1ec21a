"""Command-line front end.

Exit status: 0 success, 1 domain error (message on stderr), 2 usage error.
Every subcommand accepts ``--json`` to print one JSON object per result.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import codes, echelon, fdcodes, ferrers, matfq, search, textio
from .errors import RankMetricError
from .ferrers import FerrersDiagram


class _Out:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, text: str, obj: dict):
        if self.as_json:
            print(json.dumps(obj, sort_keys=True), file=self.stream)
        else:
            print(text, file=self.stream)


def _diagram(text: str) -> FerrersDiagram:
    try:
        return FerrersDiagram.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bits(text: str) -> echelon.IdentifyingVector:
    try:
        return echelon.IdentifyingVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- handlers --------------------------------------------------------------

def cmd_bound(args, out: _Out):
    q = args.q
    if args.kind == "classical":
        value = codes.classical_singleton_bound(args.n, args.d, q)
        e = args.n - args.d + 1
        out.emit(codes.format_bound(q, e), {"bound": value, "exponent": e, "q": q})
    elif args.kind == "rank":
        e = codes.rank_singleton_exponent(args.m, args.n, args.d)
        out.emit(codes.format_bound(q, e), {"bound": q ** e, "exponent": e, "q": q})
    else:
        fb = ferrers.ferrers_bound_exponent(args.diagram, args.d)
        counts = " ".join(f"v_{i}={v}" for i, v in enumerate(fb.counts))
        out.emit(f"{counts} min={fb.exponent} bound={q ** fb.exponent}",
                 {"v": list(fb.counts), "min": fb.exponent, "minimizers": list(fb.minimizers),
                  "bound": q ** fb.exponent, "q": q})


def cmd_rank(args, out: _Out):
    mf = textio.read_matrices(args.input)
    for k, A in enumerate(mf.matrices):
        r = matfq.rank(A)
        out.emit(str(r), {"index": k, "rank": r})


def cmd_rref(args, out: _Out):
    mf = textio.read_matrices(args.input)
    for k, A in enumerate(mf.matrices):
        R = matfq.rref(A)
        if out.as_json:
            out.emit("", {"index": k, "rref": R.base.rows(), "pivots": list(R.pivots)})
        else:
            text = textio.format_matrices(mf.field, [R.base], shape=R.base.shape).rstrip("\n")
            if k:
                print(file=out.stream)
            print(f"# pivots {' '.join(map(str, R.pivots))}", file=out.stream)
            print(text, file=out.stream)


def cmd_idvec(args, out: _Out):
    mf = textio.read_matrices(args.input)
    for k, A in enumerate(mf.matrices):
        v = echelon.identifying_vector(matfq.rref(A))
        out.emit(str(v), {"index": k, "identifying_vector": str(v)})


def cmd_ef(args, out: _Out):
    ef = echelon.echelon_ferrers_form(args.v)
    out.emit(f"{ef.render()}\ndiagram={ef.diagram}",
             {"form": ef.render().splitlines(), "diagram": list(ef.diagram.rows), "k": ef.k, "n": ef.n})


def _load_code(path):
    mf = textio.read_matrices(path)
    if mf.diagram is not None:
        return mf, fdcodes.ferrers_code_new(mf.diagram, mf.matrices, field=mf.field)
    if mf.shape is None:
        raise RankMetricError(f"{path}: empty code without a SHAPE line")
    return mf, codes.RankMetricCode(mf.matrices, field=mf.field, shape=mf.shape)


def cmd_distance(args, out: _Out):
    _, code = _load_code(args.input)
    underlying = code.underlying if isinstance(code, fdcodes.FerrersCode) else code
    d = codes.min_rank_distance(underlying)
    out.emit(str(d), {"min_distance": d, "codewords": len(underlying)})


def cmd_verify(args, out: _Out) -> int:
    mf, code = _load_code(args.input)
    underlying = code.underlying if isinstance(code, fdcodes.FerrersCode) else code
    measured = codes.min_rank_distance(underlying)
    d = args.d if args.d is not None else measured
    q = mf.field.q
    if isinstance(code, fdcodes.FerrersCode):
        exponent = ferrers.ferrers_bound_exponent(code.diagram, d).exponent
    else:
        m, n = underlying.shape
        exponent = codes.rank_singleton_exponent(m, n, d)
    size = len(underlying)
    ok = measured >= d and size <= q ** exponent
    verdict = "PASS" if ok else "FAIL"
    text = "\n".join([f"codewords={size}", f"min_distance={measured}", f"d={d}",
                      f"bound={codes.format_bound(q, exponent)}", verdict])
    out.emit(text, {"codewords": size, "min_distance": measured, "d": d, "bound": q ** exponent,
                    "exponent": exponent, "pass": ok})
    return 0 if ok else 1


def cmd_gabidulin(args, out: _Out):
    code = codes.gabidulin_construct(args.q, args.e, args.n, args.k)
    textio.write_matrices(args.out, code.field, code.codewords, shape=code.shape)
    m, n = code.shape
    out.emit(f"wrote {len(code)} codewords ({m}x{n}, designed distance {args.n - args.k + 1}) to {args.out}",
             {"codewords": len(code), "shape": [m, n], "designed_distance": args.n - args.k + 1,
              "out": args.out})


def cmd_search(args, out: _Out):
    target = args.diagram if args.kind == "ferrers" else (args.m, args.n)
    P = search.SearchProblem(target, args.q, args.d, args.mode, args.seed)
    res = search.max_code(P)
    if args.out:
        witness = res.witness
        diagram = witness.diagram if isinstance(witness, fdcodes.FerrersCode) else None
        textio.write_matrices(args.out, P.field, witness.codewords, diagram=diagram, shape=P.shape)
    out.emit(res.report(), {"size": res.size, "bound": res.bound, "tight": res.tight, "mode": res.mode,
                            "seed": args.seed})


def cmd_ferrers(args, out: _Out):
    if args.action == "enumerate":
        for F in ferrers.enumerate_diagrams(args.rows, args.cols, args.dots):
            out.emit(str(F), {"rows": list(F.rows)})
    else:
        C = ferrers.conjugate(args.diagram)
        out.emit(str(C), {"rows": list(C.rows)})


def cmd_count_bases(args, out: _Out):
    mf = textio.read_matrices(args.input)
    for k, A in enumerate(mf.matrices):
        R = matfq.rref(A)
        c = echelon.count_spanning_matrices(R)
        out.emit(str(c), {"index": k, "rank": R.rank, "q": mf.field.q, "count": c})


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per result")

    ap = argparse.ArgumentParser(prog="rankmetric", description="Rank-metric and Ferrers diagram codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="Singleton-type bounds")
    bsub = b.add_subparsers(dest="kind", required=True)
    p = bsub.add_parser("classical", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = bsub.add_parser("rank", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = bsub.add_parser("ferrers", parents=[common])
    p.add_argument("--diagram", type=_diagram, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    b.set_defaults(func=cmd_bound)

    for name, func, helptext in [("rank", cmd_rank, "rank of each matrix"),
                                 ("rref", cmd_rref, "reduced row echelon form of each matrix"),
                                 ("idvec", cmd_idvec, "identifying vector of each row space"),
                                 ("distance", cmd_distance, "minimum rank distance of a code file"),
                                 ("count-bases", cmd_count_bases, "ordered bases spanning each row space")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--in", dest="input", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("ef", parents=[common], help="echelon Ferrers form of an identifying vector")
    p.add_argument("--v", type=_bits, required=True)
    p.set_defaults(func=cmd_ef)

    p = sub.add_parser("verify", parents=[common], help="check a code file against its Singleton bound")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gabidulin", parents=[common], help="write a Gabidulin code file")
    p.add_argument("--q", type=int, required=True, help="prime base field size")
    p.add_argument("--e", type=int, required=True, help="extension degree m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gabidulin)

    s = sub.add_parser("search", help="maximum code search")
    ssub = s.add_subparsers(dest="kind", required=True)
    for kind in ("rank", "ferrers"):
        p = ssub.add_parser(kind, parents=[common])
        if kind == "rank":
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        else:
            p.add_argument("--diagram", type=_diagram, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="write the witness code here")
    s.set_defaults(func=cmd_search)

    f = sub.add_parser("ferrers", help="Ferrers diagram utilities")
    fsub = f.add_subparsers(dest="action", required=True)
    p = fsub.add_parser("enumerate", parents=[common])
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--dots", type=int)
    p = fsub.add_parser("conjugate", parents=[common])
    p.add_argument("--diagram", type=_diagram, required=True)
    f.set_defaults(func=cmd_ferrers)
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(getattr(args, "json", False), stdout)
    try:
        status = args.func(args, out)
    except (RankMetricError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
