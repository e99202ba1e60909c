"""Command-line front end.

Exit codes: 0 success / positive verdict, 1 negative verdict, 2 usage,
parse or input errors (message on stderr).
"""

import argparse
import json
import sys

from . import bisim, concrete
from .encodings import decode
from .errors import FutsError, ParseError
from .model_io import (
    KINDS,
    ModelDocument,
    load_model,
    parse_relation,
    serialize_futs,
    serialize_model,
    serialize_partition,
    to_futs,
)
from .quotient import quotient_futs
from .semiring import format_value
from .testkit import random_model


def _blocks(partition, order):
    pos = {s: i for i, s in enumerate(order)}
    blocks = sorted((sorted(b, key=pos.__getitem__) for b in partition), key=lambda b: pos[b[0]])
    return [list(b) for b in blocks]


def _quotient_text(doc, futs, partition):
    q, _ = quotient_futs(futs, partition)
    if doc.kind == "futs":
        return serialize_futs(q)
    return serialize_model(ModelDocument(doc.kind, decode(q, doc.kind)))


def cmd_parse(args, doc):
    text = serialize_model(doc)
    return 0, text, {"kind": doc.kind, "states": list(doc.states), "model": text}


def cmd_minimize(args, doc):
    futs = to_futs(doc)
    part = bisim.coarsest_bisimulation(futs)
    ptext = serialize_partition(part, futs.states)
    qtext = _quotient_text(doc, futs, part)
    return 0, ptext + "\n" + qtext, {"partition": _blocks(part, futs.states), "quotient": qtext}


def cmd_equiv(args, doc):
    futs = to_futs(doc)
    for s in (args.s, args.t):
        if s not in futs.index:
            raise FutsError(f"unknown state {s!r}")
    same = bisim.bisimilar(futs, args.s, args.t)
    verdict = "bisimilar" if same else "not-bisimilar"
    return (0 if same else 1), verdict + "\n", {"verdict": verdict, "s": args.s, "t": args.t}


def _witness_text(futs, w):
    label = w.label
    klass = "{" + " ".join(map(str, w.klass)) + "}"
    return (
        f"witness: {w.x} {w.y} component {w.component + 1} label {label} "
        f"class {klass}: {format_value(w.left)} != {format_value(w.right)}\n"
    )


def cmd_check(args, doc):
    futs = to_futs(doc)
    try:
        with open(args.relation, encoding="utf-8") as fh:
            rel = parse_relation(fh.read(), futs.states, args.relation)
    except OSError as exc:
        raise FutsError(f"cannot read relation: {exc}") from None
    w = bisim.find_violation(futs, rel)
    if w is None:
        return 0, "bisimulation\n", {"verdict": "bisimulation", "witness": None}
    info = {
        "x": w.x,
        "y": w.y,
        "component": w.component + 1,
        "label": w.label,
        "class": [str(k) for k in w.klass],
        "left": format_value(w.left),
        "right": format_value(w.right),
    }
    return 1, "not-a-bisimulation\n" + _witness_text(futs, w), {
        "verdict": "not-a-bisimulation",
        "witness": info,
    }


def cmd_oracle(args, doc):
    futs = to_futs(doc)
    part = bisim.brute_force_coarsest(futs, args.max_brute)
    return 0, serialize_partition(part, futs.states), {"partition": _blocks(part, futs.states)}


def cmd_crosscheck(args, doc):
    futs = to_futs(doc)
    order = futs.states
    ours = bisim.coarsest_bisimulation(futs)
    lines = ["futs: " + serialize_partition(ours, order).replace("\n", " ").strip()]
    info = {"futs": _blocks(ours, order)}
    agree = True
    small = len(order) <= args.max_brute
    if doc.kind == "futs":
        if not small:
            raise FutsError(f"kind futs needs the brute-force oracle; {len(order)} states > {args.max_brute}")
        theirs = bisim.brute_force_coarsest(futs, args.max_brute)
        lines.append("oracle: " + serialize_partition(theirs, order).replace("\n", " ").strip())
        info["oracle"] = _blocks(theirs, order)
        agree = theirs == ours
    else:
        model = doc.model
        theirs = concrete.concrete_coarsest(model)
        lines.append("concrete: " + serialize_partition(theirs, order).replace("\n", " ").strip())
        info["concrete"] = _blocks(theirs, order)
        agree = (
            theirs == ours
            and concrete.is_concrete_bisimulation(model, ours)
            and bisim.is_bisimulation(futs, theirs)
        )
        if small:
            brute = concrete.brute_force_concrete(model, args.max_brute)
            lines.append("brute-force: " + serialize_partition(brute, order).replace("\n", " ").strip())
            info["brute_force"] = _blocks(brute, order)
            agree = agree and brute == ours
    lines.append("agree" if agree else "DISAGREE")
    info["agree"] = agree
    return (0 if agree else 1), "\n".join(lines) + "\n", info


def cmd_gen(args, doc):
    generated = random_model(args.kind, args.seed, args.states, args.density)
    text = serialize_model(generated)
    return 0, text, {"model": text}


def _common(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--quiet", action="store_true", default=default(False), help="print nothing on stdout")
    parser.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for generator commands")
    parser.add_argument(
        "--max-brute", type=int, default=default(bisim.DEFAULT_MAX_BRUTE), help="state cap for brute-force oracles"
    )


def build_parser():
    parser = argparse.ArgumentParser(prog="futs", description="FuTS bisimulation checker and minimizer")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _common(p, suppress=True)
        p.set_defaults(func=func)
        return p

    add("parse", cmd_parse, "validate a model and print its canonical form").add_argument("file")
    add("minimize", cmd_minimize, "coarsest bisimulation and quotient").add_argument("file")
    p = add("equiv", cmd_equiv, "decide bisimilarity of two states")
    p.add_argument("file")
    p.add_argument("s")
    p.add_argument("t")
    p = add("check", cmd_check, "check a relation against the transfer condition")
    p.add_argument("file")
    p.add_argument("--relation", required=True)
    add("oracle", cmd_oracle, "brute-force coarsest bisimulation").add_argument("file")
    add("crosscheck", cmd_crosscheck, "compare FuTS and concrete verdicts").add_argument("file")
    p = add("gen", cmd_gen, "generate a random model")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--states", type=int, default=4)
    p.add_argument("--density", type=float, default=0.3)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        doc = load_model(args.file) if hasattr(args, "file") else None
        code, text, info = args.func(args, doc)
    except ParseError as exc:
        print(str(exc), file=stderr)
        return 2
    except (FutsError, OSError) as exc:
        print(f"futs: error: {exc}", file=stderr)
        return 2
    if not args.quiet:
        if args.json:
            stdout.write(json.dumps(info, indent=2, sort_keys=True) + "\n")
        else:
            stdout.write(text)
    return code


run = main


if __name__ == "__main__":
    sys.exit(main())
