"""Command-line front end: ``burau-lab <subcommand> ...``.

Exit status: 0 on success, 1 when a check fails, 2 on bad usage or inputs
outside the domain of an operation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .burau import (
    burau_of_braid,
    eigen_specialize,
    reduced_burau,
    vandermonde_blocks,
)
from .freegroup import parse_braid, parse_word
from .groupring import abelianize_R0, abelianize_Rn
from .matrix import RingMatrix
from .proell import GaloisElemData, assemble_matburau, direct_oracle
from .schreier import FiniteCyclic, Window, minimal_window, rewrite, schreier_generators
from .verify import SUITES, run_verify

VANDERMONDE_TOL = 1e-9


class UsageError(ValueError):
    pass


def emit(kind: str, payload, as_json: bool = False) -> str:
    """Render a payload as stable JSON (sorted keys) or as plain text."""
    if as_json:
        if isinstance(payload, RingMatrix):
            payload = {"ring": payload.ring.to_json(), "matrix": payload.to_json()}
        return json.dumps({"kind": kind, **payload} if isinstance(payload, dict) else {"kind": kind, "value": payload},
                          sort_keys=True)
    if isinstance(payload, RingMatrix):
        return str(payload)
    if isinstance(payload, list):
        return "\n".join(str(x) for x in payload)
    return str(payload)


def _window(text: str) -> Window:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"window must look like lo:hi, got {text!r}") from None
    return Window(lo, hi)


def _transversal(args):
    if args.n is not None and args.window is not None:
        raise UsageError("give either --n or --window, not both")
    if args.n is not None:
        return FiniteCyclic(args.n)
    if args.window is not None:
        return _window(args.window)
    return None


def cmd_generators(args) -> int:
    t = _transversal(args)
    if t is None:
        raise UsageError("generators needs --n or --window")
    gens = schreier_generators(t, args.s)
    if args.json:
        print(emit("generators", {"s": args.s, "generators": [{"label": str(g), "word": str(g.word)} for g in gens]}, True))
    else:
        print(emit("generators", [f"{g}: {g.word}" for g in gens]))
    return 0


def cmd_rewrite(args) -> int:
    w = parse_word(args.word, args.s)
    t = _transversal(args) or minimal_window(w)
    terms = rewrite(w, t)
    if isinstance(t, FiniteCyclic):
        ab = abelianize_Rn(w, t.n)
    else:
        ab = abelianize_R0(w, t)
    if args.json:
        print(emit("rewrite", {
            "word": str(w),
            "terms": [{"generator": str(g), "exp": e} for g, e in terms],
            "abelianized": ab.to_json(),
        }, True))
    else:
        text = " ".join(f"{g}" if e == 1 else f"{g}^-1" for g, e in terms) or "1"
        print(f"{w} = {text}")
        print(f"abelianized: {ab}")
    return 0


def _print_matrix(kind: str, m: RingMatrix, args, **extra) -> None:
    if args.json:
        print(emit(kind, {"ring": m.ring.to_json(), "matrix": m.to_json(), **extra}, True))
    else:
        print(emit(kind, m))


def cmd_burau(args) -> int:
    b = parse_braid(args.braid, args.s)
    if args.eigen is not None and args.reduce_n is None:
        raise UsageError("--eigen needs --reduce-n")
    if args.vandermonde and args.reduce_n is None:
        raise UsageError("--vandermonde needs --reduce-n")
    if args.reduce_n is None:
        _print_matrix("burau", burau_of_braid(b), args, braid=str(b), s=args.s)
        return 0
    n = args.reduce_n
    if args.eigen is not None:
        _print_matrix("eigen", eigen_specialize(b, n, args.eigen), args, braid=str(b), s=args.s, n=n, nu=args.eigen)
    else:
        _print_matrix("reduced", reduced_burau(b, n), args, braid=str(b), s=args.s, n=n)
    if args.vandermonde:
        err = vandermonde_blocks(b, n)
        ok = err < VANDERMONDE_TOL
        msg = {"max_abs_error": err, "tolerance": VANDERMONDE_TOL, "passed": ok}
        print(json.dumps(msg, sort_keys=True) if args.json else f"vandermonde max |error| = {err:.3e} ({'ok' if ok else 'FAIL'})")
        return 0 if ok else 1
    return 0


def cmd_reduced(args) -> int:
    b = parse_braid(args.braid, args.s)
    _print_matrix("reduced", reduced_burau(b, args.n), args, braid=str(b), s=args.s, n=args.n)
    return 0


def cmd_eigen(args) -> int:
    b = parse_braid(args.braid, args.s)
    _print_matrix("eigen", eigen_specialize(b, args.n, args.nu), args, braid=str(b), s=args.s, n=args.n, nu=args.nu)
    return 0


def _parse_w(items, s):
    words = {}
    for item in items or []:
        idx, sep, text = item.partition(":")
        if not sep:
            raise UsageError(f"--w expects i:word, got {item!r}")
        try:
            i = int(idx)
        except ValueError:
            raise UsageError(f"--w index must be an integer, got {idx!r}") from None
        if i in words:
            raise UsageError(f"w{i} given twice")
        words[i] = parse_word(text, s)
    return words


def cmd_proell(args) -> int:
    s = args.s
    words = _parse_w(args.w, s)
    w1 = parse_word(args.w1, s) if args.w1 is not None else None
    d = GaloisElemData(s, args.l, args.K, args.M, args.N, words, w1)
    m = assemble_matburau(d)
    status = 0
    extra = {"N": args.N, "s": s, "words": {str(i): str(w) for i, w in sorted(d.words.items())}}
    if args.oracle:
        same = direct_oracle(d) == m
        extra["oracle_agrees"] = same
        status = 0 if same else 1
    _print_matrix("proell", m, args, **extra)
    if args.oracle and not args.json:
        print(f"oracle agrees: {extra['oracle_agrees']}")
    return status


def cmd_verify(args) -> int:
    report = run_verify(args.suite, args.s_max, args.n_max, args.l, args.K, args.M, args.seed)
    print(json.dumps(report.to_json(), sort_keys=True) if args.json else report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="burau-lab", description="Burau and truncated pro-l Burau computations")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generators", help="Schreier generators of R_n or of R_0 over a window")
    g.add_argument("--s", type=int, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--window", help="lo:hi for R_0")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_generators)

    r = sub.add_parser("rewrite", help="Reidemeister rewriting of a word")
    r.add_argument("--s", type=int, required=True)
    r.add_argument("--word", required=True)
    r.add_argument("--n", type=int)
    r.add_argument("--window")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_rewrite)

    b = sub.add_parser("burau", help="Burau matrix of a braid word")
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--braid", required=True)
    b.add_argument("--reduce-n", type=int, dest="reduce_n")
    b.add_argument("--eigen", type=int)
    b.add_argument("--vandermonde", action="store_true", help=f"floating diagnostic, tolerance {VANDERMONDE_TOL}")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_burau)

    rd = sub.add_parser("reduced", help="integer action on H1 of the level-n complete curve")
    rd.add_argument("--s", type=int, required=True)
    rd.add_argument("--braid", required=True)
    rd.add_argument("--n", type=int, required=True)
    rd.add_argument("--json", action="store_true")
    rd.set_defaults(func=cmd_reduced)

    e = sub.add_parser("eigen", help="Burau matrix at t = zeta^nu")
    e.add_argument("--s", type=int, required=True)
    e.add_argument("--braid", required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--nu", type=int, required=True)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_eigen)

    q = sub.add_parser("proell", help="assemble a truncated pro-l Burau matrix")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--K", type=int, required=True)
    q.add_argument("--M", type=int, required=True)
    q.add_argument("--N", type=int, required=True)
    q.add_argument("--w", action="append", metavar="i:word")
    q.add_argument("--w1", help="if given, all words are normalized by w1^-1")
    q.add_argument("--oracle", action="store_true", help="also compare with the rewriting oracle (N >= 1)")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_proell)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    v.add_argument("--s-max", type=int, default=6, dest="s_max")
    v.add_argument("--n-max", type=int, default=5, dest="n_max")
    v.add_argument("--l", type=int, default=3)
    v.add_argument("--K", type=int, default=2)
    v.add_argument("--M", type=int, default=2)
    v.add_argument("--seed", type=int, default=0, help="default 0")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"burau-lab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
