"""Command-line interface.

Machine-readable output lines are prefixed ``#data`` (sequences), ``#rec``
(recurrences), and ``#eq`` (algebraic equations); everything else is
human-oriented commentary.  Exit status: 0 on success, 1 when a
verification run reports failures, 2 on usage errors (bad flags, malformed
inputs).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .cfinite import CFiniteSeq, hilbert_series, parse_cfinite
from .cfinite import add as seq_add, dilate as seq_dilate, hadamard as seq_hadamard
from .cfinite import partial_sums as seq_partial_sums, shift as seq_shift
from .convolve import PolySeqRec, tri_laurent, tri_plain, guess_terms
from .errors import CoreseqError, ParseError
from .guessing import guess_algebraic, guess_cfinite, guess_precursive
from .modrep import (channel_harvest, jordan_module, oracle_invariants,
                     parse_generators)
from .omega import invariant_seq, omega_classify, s_recurrence
from .ring import laurent_parse
from .scenario import load_scenario

Q = Fraction


def _read_terms(spec: str):
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            body = fh.read().replace("\n", ",")
    else:
        body = spec
    return [Q(tok.strip()) for tok in body.split(",") if tok.strip()]


def _read_seq(spec: str) -> CFiniteSeq:
    shorthand = {
        "ones": CFiniteSeq.constant(1),
        "zero": CFiniteSeq.zero(),
        "delta": CFiniteSeq.delta(),
    }
    if spec in shorthand:
        return shorthand[spec]
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            spec = fh.read().strip()
    return parse_cfinite(spec)


def _read_polyseq(path: str) -> PolySeqRec:
    """Polynomial-sequence file: ``order=``, ``from=``, then quoted Laurent
    literals ``c[i] = "..."`` and ``P[j] = "..."`` (symbol w)."""
    order = None
    threshold = 0
    cs, ps = {}, {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if key == "order":
                order = int(val)
            elif key == "from":
                threshold = int(val)
            elif key.startswith("c[") and key.endswith("]"):
                cs[int(key[2:-1])] = laurent_parse(val.strip('"'))
            elif key.startswith("P[") and key.endswith("]"):
                ps[int(key[2:-1])] = laurent_parse(val.strip('"'))
            else:
                raise ParseError(f"unknown line {line!r}", line=lineno)
    if order is None:
        order = max(cs) + 1 if cs else 1
    coeffs = tuple(cs.get(i, laurent_parse("0")) for i in range(order))
    initials = tuple(ps.get(j, laurent_parse("0"))
                     for j in range(threshold + order))
    return PolySeqRec(coeffs, initials, threshold)


def _csv(values) -> str:
    return ",".join(str(int(v)) if Q(v).denominator == 1 else str(v)
                    for v in values)


def _print_report(rep) -> None:
    print(rep.describe())
    print(rep.machine_line())


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_omega(args) -> int:
    scn = load_scenario(args.scenario)
    if scn.system is None:
        print(f"scenario {scn.name} is a prefix dataset; invariants need a "
              f"tensor system", file=sys.stderr)
        return 2
    sysd = scn.system
    print(f"system {scn.name}: {sysd.size} orbits, classified "
          f"{omega_classify(sysd)}")
    vals = invariant_seq(sysd, args.invariant, args.n)
    print("#data " + _csv(vals))
    if args.invariant == "s":
        rec = s_recurrence(sysd)
        print(f"certified summand recurrence from the integer matrix "
              f"(order {rec.order}, valid from n = {rec.valid_from + 1}):")
        from .guessing import cfinite_relation_text
        print("#rec " + cfinite_relation_text(rec.coeffs))
    if args.guess:
        rep = guess_terms(vals, args.guess, max_order=args.max_order,
                          deg_t=args.deg_t, deg_y=args.deg_y,
                          max_poldeg=args.max_poldeg, margin=args.margin)
        _print_report(rep)
    return 0


def _cmd_oracle(args) -> int:
    kinds = tuple(k.strip() for k in getattr(args, "kinds", "").split(",")
                  if k.strip())
    if args.mode == "cyclic":
        mod = jordan_module(args.p, args.jordan)
        inv = oracle_invariants(mod, args.n, kinds=kinds)
    elif args.mode == "elab":
        mod = _load_module(args)
        inv = oracle_invariants(mod, args.n, kinds=kinds)
    else:  # channels
        mod = _load_module(args)
        depth = args.depth
        chans = channel_harvest(mod, depth)
        for name in ("dim", "soc", "len"):
            ch = chans[name]
            print(f"channel {name} forward prefix=[{_csv(ch.forward_prefix)}]"
                  + _tail_text(ch.forward_tail))
            print(f"channel {name} backward prefix=[{_csv(ch.backward_prefix)}]"
                  + _tail_text(ch.backward_tail))
        return 0
    for k in kinds:
        print(f"#data {k} " + _csv(inv[k]))
    return 0


def _load_module(args):
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            return parse_generators(fh.read())
    if getattr(args, "p", None) and getattr(args, "jordan", None):
        return jordan_module(args.p, args.jordan)
    raise ParseError("need --file, or --p with --jordan")


def _tail_text(tail) -> str:
    if tail is None:
        return ""
    polys = "; ".join(p.to_text("n") for p in tail.polys)
    return f" tail=quasipoly T={tail.period} start={tail.start} polys=[{polys}]"


def _cmd_guess(args) -> int:
    terms = _read_terms(args.terms)
    if args.kind == "cfinite":
        rep = guess_cfinite(terms, args.max_order, args.max_offset, args.margin)
    elif args.kind == "algebraic":
        rep = guess_algebraic(terms, args.deg_t, args.deg_y, args.margin)
    else:
        rep = guess_precursive(terms, args.max_order, args.max_poldeg,
                               args.margin)
    _print_report(rep)
    return 0


def _cmd_tri(args) -> int:
    ps = _read_polyseq(args.polyseq)
    a = _read_seq(args.a)
    if args.b is not None:
        data = tri_laurent(ps, a, _read_seq(args.b), args.n)
    elif ps.is_ordinary():
        data = tri_plain(ps, a, args.n)
    else:
        data = tri_laurent(ps, a, CFiniteSeq.zero(), args.n)
    print("#data " + _csv(data))
    if args.guess:
        rep = guess_terms(data, args.guess, max_order=args.max_order,
                          deg_t=args.deg_t, deg_y=args.deg_y,
                          max_poldeg=args.max_poldeg, margin=args.margin)
        _print_report(rep)
    return 0


def _cmd_seq(args) -> int:
    seq = _read_seq(args.seq)
    if args.op:
        if args.op in ("add", "hadamard") and not args.other:
            raise ParseError(f"--op {args.op} needs --other")
        if args.op == "add":
            seq = seq_add(seq, _read_seq(args.other))
        elif args.op == "hadamard":
            seq = seq_hadamard(seq, _read_seq(args.other))
        elif args.op == "psum":
            seq = seq_partial_sums(seq)
        elif args.op == "dilate":
            seq = seq_dilate(seq, args.k)
        elif args.op == "shift":
            seq = seq_shift(seq, args.k)
        else:
            raise ParseError(f"unknown op {args.op!r}")
        print("result: " + seq.to_text())
    print("#data " + ",".join(str(v) for v in seq.terms(args.terms)))
    if args.hilbert:
        print("#hilbert " + hilbert_series(seq).to_text())
    return 0


def _cmd_verify(args) -> int:
    from . import verify as verify_mod
    if args.target != "paper":
        raise ParseError("the only verification target is 'paper'")
    if args.only:
        results = [verify_mod.run_one(n) for n in args.only]
    else:
        results = verify_mod.run_all()
    failed = 0
    for res in results:
        print(res.summary())
        for line in res.lines:
            print("    " + line)
        if not res.passed:
            failed += 1
    print(f"\n{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="coreseq",
        description="Exact invariant-sequence calculus for cores of tensor "
                    "powers: symbolic engine, finite-field oracle, and "
                    "recurrence/algebraicity guessing.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("omega", help="run a tensor-system scenario")
    p.add_argument("--scenario", required=True,
                   help="path or builtin:{c7,z3z3,s10-prefix,s9-prefix}")
    p.add_argument("--invariant", choices=("c", "s", "d", "l"), default="c")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--guess", choices=("cfinite", "algebraic", "prec"))
    _add_guess_bounds(p)
    p.set_defaults(fn=_cmd_omega)

    p = sub.add_parser("oracle", help="dense finite-field computations")
    osub = p.add_subparsers(dest="mode", required=True)
    oc = osub.add_parser("cyclic", help="cyclic group, Jordan-block module")
    oc.add_argument("--p", type=int, required=True)
    oc.add_argument("--jordan", type=int, required=True,
                    help="dimension of the Jordan-block module")
    oc.add_argument("--n", type=int, default=10)
    oc.add_argument("--kinds", default="c,s")
    oc.set_defaults(fn=_cmd_oracle)
    oe = osub.add_parser("elab", help="elementary abelian group from a file")
    oe.add_argument("--file", required=True)
    oe.add_argument("--n", type=int, default=5)
    oe.add_argument("--kinds", default="c,d")
    oe.set_defaults(fn=_cmd_oracle)
    och = osub.add_parser("channels", help="syzygy-tower dimension channels")
    och.add_argument("--file")
    och.add_argument("--p", type=int)
    och.add_argument("--jordan", type=int)
    och.add_argument("--depth", type=int, default=5)
    och.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("guess", help="fit recurrences or algebraic equations")
    p.add_argument("kind", choices=("cfinite", "algebraic", "prec"))
    p.add_argument("--terms", required=True, help="csv values or @file")
    _add_guess_bounds(p)
    p.set_defaults(fn=_cmd_guess)

    p = sub.add_parser("tri", help="substitute sequence terms into a "
                                   "polynomial schedule")
    p.add_argument("--polyseq", required=True)
    p.add_argument("--a", required=True,
                   help="'rec: ...; from: ...; prefix: ...' or ones/zero/delta")
    p.add_argument("--b")
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--guess", choices=("cfinite", "algebraic", "prec"))
    _add_guess_bounds(p)
    p.set_defaults(fn=_cmd_tri)

    p = sub.add_parser("seq", help="closure operations on recursive sequences")
    p.add_argument("--seq", required=True)
    p.add_argument("--op", choices=("add", "hadamard", "psum", "dilate", "shift"))
    p.add_argument("--other")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--terms", type=int, default=16)
    p.add_argument("--hilbert", action="store_true")
    p.set_defaults(fn=_cmd_seq)

    p = sub.add_parser("verify", help="run the pinned verification suite")
    p.add_argument("target", nargs="?", default="paper")
    p.add_argument("--only", type=int, action="append",
                   help="run one numbered check (repeatable)")
    p.set_defaults(fn=_cmd_verify)
    return ap


def _add_guess_bounds(p) -> None:
    p.add_argument("--max-order", type=int, default=8, dest="max_order")
    p.add_argument("--max-offset", type=int, default=0, dest="max_offset")
    p.add_argument("--deg-t", type=int, default=8, dest="deg_t")
    p.add_argument("--deg-y", type=int, default=4, dest="deg_y")
    p.add_argument("--max-poldeg", type=int, default=3, dest="max_poldeg")
    p.add_argument("--margin", type=int, default=0,
                   help="required surplus of equations over unknowns "
                        "(0 here: published prefixes are short; the library "
                        "default is 8)")


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (CoreseqError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
