"""Command-line front end.

Every subcommand reads JSON (a file path, or ``-`` for standard input),
calls one library function and prints canonical JSON with sorted keys.
Exit status is 0 on success, 1 on a domain error and 2 on a usage error;
errors are printed as ``{"error": code, "detail": text}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import TransportMatrix, get_algebra
from .errors import TropError
from .insertion import RowOrder, insert_word, tableau_via_minors, word_to_matrix
from .rsk import TableauPair, inverse_rsk_star, inverse_via_gauss, phi, phi_inverse, rsk_star, rsk_variants
from .schutzenberger import evacuate, evacuation_consistency
from .tableau import TableauContent
from .verify import SUITES, run_suite
from .weyl import WeylParams, apply_word, s_on_tableau

__all__ = ["main", "run", "build_parser"]


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg}") from None


def _matrix_from_args(args) -> TransportMatrix:
    if args.input is not None:
        obj = _read_json(args.input)
        if isinstance(obj, list):
            obj = {"algebra": args.algebra or "maxplus", "rows": obj}
        X = TransportMatrix.from_json(obj, getattr(args, "n", None))
        if args.algebra and X.algebra is not get_algebra(args.algebra):
            raise UsageError(f"--algebra {args.algebra} disagrees with the input ({X.algebra.name})")
        return X
    if getattr(args, "word", None) is not None:
        if args.n is None:
            raise UsageError("--word needs --n")
        if args.algebra not in (None, "maxplus"):
            raise UsageError("a word encodes a max-plus matrix")
        blocks = [int(b) for b in args.blocks.split(",")] if getattr(args, "blocks", None) else None
        return word_to_matrix(args.word, args.n, blocks)
    raise UsageError("give --input or --word")


def _tableau_json(U: TableauContent):
    enc = U.algebra.encode
    out = U.to_json()
    out["n"] = U.n
    out["padded"] = [[enc(v) for v in r] for r in U.padded()]
    out["shape"] = [enc(v) for v in U.shape()]
    return out


def _pair_json(pair: TableauPair, m: int, n: int):
    out = pair.to_json()
    out["m"], out["n"] = m, n
    return out


def _tableau_from(obj, n=None) -> TableauContent:
    return TableauContent.from_json(obj, n if n is not None else obj.get("n"))


# --------------------------------------------------------------------------
# subcommands


def cmd_insert(args):
    X = _matrix_from_args(args)
    order = RowOrder(args.order)
    U = insert_word(X, order) if args.method == "bump" else tableau_via_minors(X, order)
    return _tableau_json(U)


def cmd_rsk(args):
    X = _matrix_from_args(args)
    if args.variant == "star":
        pair = rsk_star(X)
    else:
        pair = rsk_variants(X, args.variant)
    return _pair_json(pair, X.m, X.n)


def cmd_rsk_invert(args):
    obj = _read_json(args.input)
    if not isinstance(obj, dict) or "U" not in obj or "V" not in obj:
        raise UsageError("rsk-invert expects the JSON pair printed by rsk")
    U = _tableau_from(obj["U"], obj.get("n"))
    V = _tableau_from(obj["V"], obj.get("m"))
    X = inverse_rsk_star(U, V) if args.route == "minors" else inverse_via_gauss(U, V)
    return X.to_json()


def cmd_evacuate(args):
    if args.word is not None:
        if args.n is None:
            raise UsageError("--word needs --n")
        if args.check:
            return evacuation_consistency(args.word, args.n)
        U = insert_word(word_to_matrix(args.word, args.n))
    elif args.input is not None:
        U = _tableau_from(_read_json(args.input), args.n)
    else:
        raise UsageError("give --input or --word")
    return _tableau_json(evacuate(U, args.rows))


def _params(args, algebra):
    return WeylParams(args.p, args.q, algebra)


def cmd_weyl(args):
    obj = _read_json(args.input)
    if args.target == "tableau":
        if args.l is None:
            raise UsageError("--target tableau needs --l")
        U = _tableau_from(obj, args.n)
        params = _params(args, U.algebra)
        return _tableau_json(s_on_tableau(args.l, U, params.q, args.m))
    if args.word is None:
        raise UsageError("--word is required for matrices")
    X = TransportMatrix.from_json(obj)
    return apply_word(args.word, X, _params(args, X.algebra)).to_json()


def cmd_verify(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(s, args.trials, args.seed, args.m, args.n) for s in names]
    out = reports[0] if len(reports) == 1 else {"pass": all(r["pass"] for r in reports), "suites": reports}
    return out, (0 if out["pass"] else 1)


def cmd_phi(args):
    obj = _read_json(args.input)
    rows = obj["rows"] if isinstance(obj, dict) else obj
    if args.inverse:
        return phi_inverse(rows).to_json()
    X = TransportMatrix.from_json({"algebra": "rational", "rows": rows} if not isinstance(obj, dict) else obj)
    return {"algebra": "rational", "rows": phi(X).to_json()}


# --------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="troprsk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def source(p, word=True):
        p.add_argument("--input", help="JSON file, or - for standard input")
        if word:
            p.add_argument("--word", help="word such as 2234134411224")
            p.add_argument("--blocks", help="comma-separated block lengths for --word")
        p.add_argument("--n", type=int, help="alphabet size")
        p.add_argument("--algebra", choices=["maxplus", "rational"])

    p = sub.add_parser("insert", help="insert the rows of a matrix (or a word)")
    source(p)
    p.add_argument("--order", choices=[o.value for o in RowOrder], default="top-down")
    p.add_argument("--method", choices=["bump", "minors"], default="bump")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("rsk", help="the RSK* pair of a matrix, or one of the four variants")
    source(p)
    p.add_argument("--variant", choices=["star", "PQ", "PQt", "PtQ", "PtQt"], default="star")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("rsk-invert", help="recover the matrix from an RSK* pair")
    p.add_argument("--input", required=True)
    p.add_argument("--route", choices=["minors", "gauss"], default="minors")
    p.set_defaults(func=cmd_rsk_invert)

    p = sub.add_parser("evacuate", help="Schuetzenberger involution of a tableau")
    p.add_argument("--input")
    p.add_argument("--word")
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int, help="number of rows to evacuate with")
    p.add_argument("--check", action="store_true", help="with --word: compare P(w*) with evacuate(P(w))")
    p.set_defaults(func=cmd_evacuate)

    p = sub.add_parser("weyl", help="apply a Weyl group word to a matrix, or s_l to a tableau")
    p.add_argument("--input", required=True)
    p.add_argument("--word", help='generators such as "r1,s0,w,p"')
    p.add_argument("--p", default=None)
    p.add_argument("--q", default=None)
    p.add_argument("--target", choices=["matrix", "tableau"], default="matrix")
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int, help="row bound of the tableau action")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("phi", help="path matrix of a positive rational matrix, or its inverse")
    p.add_argument("--input", required=True)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_phi)
    return parser


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify" and (args.trials < 1 or (args.m or 2) < 1 or (args.n or 2) < 1):
            raise UsageError("--trials, --m and --n must be positive")
        result = args.func(args)
        code = 0
        if isinstance(result, tuple):
            result, code = result
    except UsageError as exc:
        out.write(dumps({"error": "UsageError", "detail": str(exc)}) + "\n")
        return 2
    except TropError as exc:
        out.write(dumps({"error": exc.code, "detail": str(exc)}) + "\n")
        return 1
    except (ValueError, TypeError, KeyError) as exc:
        # malformed payloads: wrong literal types, missing keys
        out.write(dumps({"error": "InvalidInput", "detail": str(exc)}) + "\n")
        return 2
    out.write(dumps(result) + "\n")
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
