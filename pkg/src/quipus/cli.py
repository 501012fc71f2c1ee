"""Command-line front end.

Objects are given in the ``A:`` / ``Q:`` / ``M:`` notation on the command
line; results go to stdout and diagnostics to stderr.  Exit status is 0 on
success, 1 on a domain error, 2 on a usage error.  ``equal`` and ``verify``
exit 3 for a negative answer.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .crswap import (
    cr_swap,
    cr_swap_inverse,
    first_relation_swaps,
    first_relation_to_cord,
    strip_relations,
)
from .enumeration import classify, enumerate_nakayama, enumerate_quipus
from .invariants import coxeter_of, verify_equivalence
from .presentations import (
    MarkedQuipuQuiver,
    NakayamaPresentation,
    QuipuError,
    QuipuShape,
    embed_nakayama,
    parse,
    render,
    require_almost_separate,
    shape_of,
)
from .report import FORMATS, emit
from .shapes import canonical_form, normalize
from .translate import (
    canonical_quipu,
    derived_equivalent,
    equivalence_family,
    family_set,
    nakayama_to_quipu,
    quipu_to_nakayama,
    strip_length2,
)

EXIT_FALSE = 3


class UsageError(QuipuError):
    pass


def _expect(obj, *types):
    if not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in types)
        raise UsageError(f"{render(obj)} is not a {names}")
    return obj


def _presentation(text: str) -> NakayamaPresentation:
    p = _expect(parse(text), NakayamaPresentation)
    require_almost_separate(p)
    return p


def _marked(text: str) -> MarkedQuipuQuiver:
    obj = _expect(parse(text), NakayamaPresentation, MarkedQuipuQuiver)
    if isinstance(obj, NakayamaPresentation):
        return embed_nakayama(obj)
    return obj


def _out(obj) -> None:
    print(render(obj) if not isinstance(obj, str) else obj)


def cmd_translate(args) -> int:
    obj = parse(args.expr)
    if args.to == "quipu":
        obj = _expect(obj, NakayamaPresentation, MarkedQuipuQuiver)
        if isinstance(obj, NakayamaPresentation):
            shape = nakayama_to_quipu(obj)
        else:
            shape = shape_of(strip_relations(obj)[-1])
        _out(normalize(shape) if args.normalize else shape)
    else:
        shape = _expect(obj, QuipuShape)
        _out(quipu_to_nakayama(canonical_form(shape) if args.normalize else shape))
    return 0


def cmd_canonical(args) -> int:
    obj = parse(args.expr)
    if isinstance(obj, NakayamaPresentation):
        require_almost_separate(obj)
    _out(canonical_quipu(obj))
    return 0


def cmd_equal(args) -> int:
    same = derived_equivalent(_presentation(args.a), _presentation(args.b))
    print("true" if same else "false")
    return 0 if same else EXIT_FALSE


def cmd_family(args) -> int:
    p = _presentation(args.expr)
    for member in family_set(p) if args.dedupe else equivalence_family(p):
        _out(member)
    return 0


def cmd_strip(args) -> int:
    _out(strip_length2(_presentation(args.expr)))
    return 0


def cmd_swap(args) -> int:
    quiver = _marked(args.expr)
    if args.inverse:
        result = cr_swap_inverse(quiver, args.relation, vertex=args.vertex)
    else:
        if args.relation is None:
            raise UsageError("swap needs --relation")
        result = cr_swap(quiver, args.relation)
    if args.trace:
        _out(quiver)
    _out(result)
    return 0


def cmd_first_to_cord(args) -> int:
    quiver = _marked(args.expr)
    if args.iterated:
        steps = first_relation_swaps(quiver)
    else:
        steps = [quiver, first_relation_to_cord(quiver)]
    for step in steps if args.trace else steps[-1:]:
        _out(step)
    return 0


def cmd_classify(args) -> int:
    sys.stdout.write(emit(classify(args.n, args.min_length), args.format, n=args.n))
    return 0


def cmd_verify(args) -> int:
    if args.n is not None:
        if args.exprs:
            raise UsageError("give either --n or two expressions")
        return _verify_table(args.n, args.min_length)
    if len(args.exprs) != 2:
        raise UsageError("verify needs exactly two expressions")
    a, b = (parse(e) for e in args.exprs)
    for obj in (a, b):
        if isinstance(obj, NakayamaPresentation):
            require_almost_separate(obj)
    report = verify_equivalence(a, b)
    for line in report.lines():
        print(line)
    return 0 if report.consistent else EXIT_FALSE


def _verify_table(n: int, min_length: int) -> int:
    ok = True
    seen = {}
    classes = classify(n, min_length)
    for c in classes:
        expected = coxeter_of(c.canonical)
        bad = [p for p in c.members if coxeter_of(p) != expected]
        ok &= not bad
        seen.setdefault(expected, []).append(c.label)
        verdict = "consistent" if not bad else "refuted by " + ", ".join(map(render, bad))
        print(f"{c.label} | {expected} | {len(c.members)} members {verdict}")
    shared = [labels for labels in seen.values() if len(labels) > 1]
    print(f"{len(seen)} distinct Coxeter polynomials across {len(classes)} classes")
    for labels in shared:
        print("shared by: " + ", ".join(labels))
    return 0 if ok else EXIT_FALSE


def cmd_enumerate(args) -> int:
    items = enumerate_quipus(args.n) if args.quipus else enumerate_nakayama(args.n, args.min_length)
    for item in items:
        _out(item)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quipus",
        description="Derived equivalence of Nakayama algebras with almost separate relations via quipus.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translate", help="Nakayama presentation <-> quipu")
    p.add_argument("--to", choices=("quipu", "nakayama"), required=True)
    p.add_argument("expr")
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("canonical", help="canonical quipu of A, Q or M notation")
    p.add_argument("expr")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("equal", help="decide derived equivalence (exit 0 / 3)")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("family", help="the eight listed relatives of a presentation")
    p.add_argument("expr")
    p.add_argument("--dedupe", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("strip", help="drop relations of length 2")
    p.add_argument("expr")
    p.set_defaults(func=cmd_strip)

    p = sub.add_parser("swap", help="cord/relation swap on a marked quiver")
    p.add_argument("expr")
    p.add_argument("--relation", type=int)
    p.add_argument("--vertex", type=int, help="landing vertex, for --inverse")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("first-to-cord", help="turn the first relation into a cord")
    p.add_argument("expr")
    p.add_argument("--iterated", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_first_to_cord)

    p = sub.add_parser("classify", help="classification table for length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-length", type=int, choices=(2, 3), default=3)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="Coxeter polynomial cross-check")
    p.add_argument("exprs", nargs="*")
    p.add_argument("--n", type=int)
    p.add_argument("--min-length", type=int, choices=(2, 3), default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list quipus or presentations of length n")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--quipus", action="store_true")
    kind.add_argument("--nakayama", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-length", type=int, choices=(2, 3), default=3)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except QuipuError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
