"""Command-line interface.

Results go to stdout, diagnostics to stderr.  Exit codes:

* 0 — success
* 1 — a law violation (failed ``check``, failed bijection, singular ``mat inv``)
* 2 — unreadable or malformed input
* 3 — a size limit was exceeded
* 4 — unknown subcommand, flag, or missing argument
"""

import argparse
import sys

from .actions import check_action, check_monoid, orbit
from .category import check_category
from .dsl import load_document
from .dynsys import check_iterate_law, orbit_analysis
from .errors import (
    FincatError,
    LimitExceededError,
    ParseError,
    SingularMatrixError,
)
from .functors import DEFAULT_LIMIT, enumerate_functors, hom_functor, yoneda_check
from .matrix import format_matrix, parse_matrix_literal


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _build_parser():
    parser = _Parser(prog="fincat", description="Finite categories, exact matrices, actions, and dynamics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="validate the laws of a document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("auto", help="automorphism group of an object")
    p.add_argument("file")
    p.add_argument("object")
    p.set_defaults(func=_cmd_auto)

    p = sub.add_parser("functors", help="enumerate functors between two category files")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=_cmd_functors)

    p = sub.add_parser("yoneda", help="check the hom-functor bijection at an object")
    p.add_argument("file")
    p.add_argument("object")
    p.set_defaults(func=_cmd_yoneda)

    p = sub.add_parser("act", help="action queries")
    act_sub = p.add_subparsers(dest="act_command", required=True, parser_class=_Parser)
    q = act_sub.add_parser("orbit", help="orbit of a carrier point")
    q.add_argument("file")
    q.add_argument("point")
    q.set_defaults(func=_cmd_act_orbit)

    p = sub.add_parser("dyn", help="dynamical system queries")
    dyn_sub = p.add_subparsers(dest="dyn_command", required=True, parser_class=_Parser)
    q = dyn_sub.add_parser("orbits", help="preperiod and period of every point")
    q.add_argument("file")
    q.set_defaults(func=_cmd_dyn_orbits)

    p = sub.add_parser("mat", help="exact matrix arithmetic on literals")
    p.add_argument("op", choices=("mul", "add", "inv"))
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p.set_defaults(func=_cmd_mat)

    return parser


def _print_report(rep):
    if rep.ok:
        print("ok")
        return 0
    print(f"violations {len(rep.violations)}")
    for v in rep.violations:
        print(f"  {v}")
    return 1


def _load(path, want=None):
    doc = load_document(path)
    if want is not None and doc.kind != want:
        raise ParseError(f"{path} is a {doc.kind} document, expected {want}")
    return doc


def _cmd_check(args):
    doc = _load(args.file)
    if doc.kind == "category":
        return _print_report(check_category(doc.value))
    if doc.kind == "monoid":
        return _print_report(check_monoid(doc.value))
    if doc.kind == "action":
        return _print_report(check_action(doc.value))
    return _print_report(check_iterate_law(doc.value, 5))


def _cmd_auto(args):
    cat = _load(args.file, want="category").value
    group = cat.automorphism_group(args.object)
    print(f"order {len(group.morphisms)}")
    print(f"elements {' '.join(m.name for m in group.morphisms)}")
    return 0


def _cmd_functors(args):
    src = _load(args.src, want="category").value
    dst = _load(args.dst, want="category").value
    functors = enumerate_functors(src, dst, limit=args.limit)
    print(f"count {len(functors)}")
    for i, f in enumerate(functors, start=1):
        objs = " ".join(f"{a}->{f.obj_map[a]}" for a in src.objects)
        mors = " ".join(f"{m.name}->{f.mor_map[m.name]}" for m in src.morphisms)
        print(f"functor {i}: {objs} | {mors}")
    return 0


def _cmd_yoneda(args):
    cat = _load(args.file, want="category").value
    if not cat.has_object(args.object):
        raise ParseError(f"unknown object {args.object!r}")
    ok = True
    for other in cat.objects:
        rep = yoneda_check(cat, args.object, hom_functor(cat, other))
        status = "ok" if rep.ok else "FAIL"
        ok = ok and rep.ok
        print(
            f"{other}: nat {rep.info['nat_count']} elements {rep.info['element_count']} {status}"
        )
    return 0 if ok else 1


def _cmd_act_orbit(args):
    action = _load(args.file, want="action").value
    reached = orbit(action, args.point)
    ordered = [p for p in action.carrier if p in reached]
    print(f"orbit: {' '.join(ordered)}")
    return 0


def _cmd_dyn_orbits(args):
    system = _load(args.file, want="dynsys").value
    info = orbit_analysis(system)
    for p in system.carrier:
        print(f"{p} preperiod={info[p].preperiod} period={info[p].period}")
    return 0


def _cmd_mat(args):
    if args.op in ("mul", "add") and args.b is None:
        print(f"error: mat {args.op} needs two matrix literals", file=sys.stderr)
        return 4
    if args.op == "inv" and args.b is not None:
        print("error: mat inv takes one matrix literal", file=sys.stderr)
        return 4
    a = parse_matrix_literal(args.a)
    if args.op == "inv":
        try:
            print(format_matrix(a.inverse()))
        except SingularMatrixError:
            print("singular")
            return 1
        return 0
    b = parse_matrix_literal(args.b)
    result = a @ b if args.op == "mul" else a + b
    print(format_matrix(result))
    return 0


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError:
        return 4
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FincatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
