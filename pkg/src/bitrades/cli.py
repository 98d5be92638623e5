"""Command line front end.

Data goes to stdout (or --out); logs and error messages go to stderr.
Exit codes: 0 on success, 1 when the input is rejected on mathematical
grounds, 2 for usage errors.  Input files may hold either a permutation
triple or a pair of partial tables; the reader tells them apart by the
first token.
"""

import argparse
import logging
import sys

from .canon import canonical_form
from .errors import BitradeError
from .model import (
    TauTriple,
    as_triple,
    format_tau,
    format_trade,
    genus,
    inverse,
    loads,
    to_pair,
    validate,
)
from .moves import SlideSite, slide_contract, slide_expand
from .enumerator import enumerate_all
from .oracle import naive_enumerate, verify_class_invariants

log = logging.getLogger("bitrades")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def _load_triple(path):
    return as_triple(loads(_read(path)))


def _add_input(p):
    p.add_argument("input", help="input file, or - for stdin")
    p.add_argument("--out", default=None, help="output file (default stdout)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="bitrades",
        description="separated latin bitrades as permutation triples",
    )
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate",
                       help="census of spherical classes up to a size")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--split-depth", type=int, default=None)
    p.add_argument("--emit", choices=("counts", "forms"), default="counts")
    p.add_argument("--checkpoint", default=None, metavar="DIR",
                   help="directory for resumable task results")
    p.add_argument("--out", default=None)

    p = sub.add_parser("oracle",
                       help="slow reference census for cross-checking")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--emit", choices=("counts", "forms"), default="counts")
    p.add_argument("--verify", action="store_true",
                   help="also run per-class invariant checks")
    p.add_argument("--out", default=None)

    p = sub.add_parser("validate", help="check the defining conditions")
    _add_input(p)

    p = sub.add_parser("genus", help="genus of the embedding surface")
    _add_input(p)

    p = sub.add_parser("convert", help="convert between representations")
    _add_input(p)
    p.add_argument("--to", choices=("tau", "pair"), required=True)

    p = sub.add_parser("inverse", help="swap the roles of the two tables")
    _add_input(p)

    p = sub.add_parser("canon", help="canonical code of the class")
    _add_input(p)

    p = sub.add_parser("expand", help="apply a slide expansion")
    _add_input(p)
    p.add_argument("--dir", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--point", type=int, required=True)

    p = sub.add_parser("contract", help="apply a slide contraction")
    _add_input(p)
    p.add_argument("--dir", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--point", type=int, required=True)

    return parser


def _cmd_enumerate(args):
    census = enumerate_all(
        args.max_size,
        workers=args.workers,
        split_depth=args.split_depth,
        emit=args.emit,
        checkpoint_dir=args.checkpoint,
    )
    text = census.forms_text() if args.emit == "forms" else census.to_text()
    _write(text, args.out)
    return 0


def _cmd_oracle(args):
    store = naive_enumerate(args.max_size)
    if args.verify:
        bad = verify_class_invariants(store)
        for msg in bad:
            print(msg, file=sys.stderr)
        if bad:
            return 1
    if args.emit == "forms":
        lines = []
        for size in sorted(store.by_size):
            for code in store.codes(size):
                lines.append(
                    "%d %s\n" % (size, " ".join(str(v) for v in code))
                )
        text = "".join(lines)
    else:
        counts = store.counts()
        for size in range(4, args.max_size + 1):
            counts.setdefault(size, 0)
        text = "".join("%d\t%d\n" % (s, counts[s]) for s in sorted(counts))
    _write(text, args.out)
    return 0


def _cmd_validate(args):
    t = as_triple(loads(_read(args.input)))
    rep = validate(t)
    lines = [
        "product identity: %s" % ("ok" if rep.t1_ok else "FAIL at point %d" % rep.t1_witness),
        "cycle intersections: %s" % (
            "ok" if rep.t2_ok else "FAIL at points %r" % (rep.t2_witness,)),
        "fixed points: %s" % (
            "ok" if rep.t3_ok else "FAIL at point %d" % rep.t3_witness),
        "indecomposable: %s" % ("yes" if rep.transitive else "no"),
    ]
    if rep.genus is not None:
        lines.append("genus: %d" % rep.genus)
    _write("".join(ln + "\n" for ln in lines), args.out)
    return 0 if rep.ok else 1


def _cmd_genus(args):
    g = genus(_load_triple(args.input))
    _write("%d\n" % g, args.out)
    return 0


def _cmd_convert(args):
    data = loads(_read(args.input))
    if args.to == "tau":
        _write(format_tau(as_triple(data)), args.out)
    else:
        pair = to_pair(data) if isinstance(data, TauTriple) else data
        _write(format_trade(pair), args.out)
    return 0


def _cmd_inverse(args):
    _write(format_tau(inverse(_load_triple(args.input))), args.out)
    return 0


def _cmd_canon(args):
    code, _ = canonical_form(_load_triple(args.input))
    _write(" ".join(str(v) for v in code) + "\n", args.out)
    return 0


def _cmd_expand(args):
    t = _load_triple(args.input)
    out = slide_expand(t, SlideSite(args.dir, args.point))
    _write(format_tau(out), args.out)
    return 0


def _cmd_contract(args):
    t = _load_triple(args.input)
    out = slide_contract(t, SlideSite(args.dir, args.point))
    _write(format_tau(out), args.out)
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "oracle": _cmd_oracle,
    "validate": _cmd_validate,
    "genus": _cmd_genus,
    "convert": _cmd_convert,
    "inverse": _cmd_inverse,
    "canon": _cmd_canon,
    "expand": _cmd_expand,
    "contract": _cmd_contract,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except BitradeError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
