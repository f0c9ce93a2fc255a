"""Command-line interface.

Exit codes: 0 on success, 1 when a Wilf violation is found, 2 on invalid
input or parameters.
"""

from __future__ import annotations

import argparse
import functools
import json
import sys

from . import export
from .classes import class_members, enumerate_c2_frobenius, irreducible_c2
from .errors import EvenMultiplicityInfinite, UnboundedEnumeration
from .semigroup import from_generators, parse_generators
from .trees import EnumerationRequest, Mode, count_c2, enumerate_by_genus, tree_height, walk_tree
from .wilf import verify_family

INFINITE_HINT = (
    "C2[m] is finite only for odd m: for even m there are concentration-two "
    "semigroups of every genus >= m. Pass --max-genus to bound the walk."
)


class UsageError(Exception):
    pass


def _gens(text: str):
    return from_generators(parse_generators(text))


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _semigroup_listing(args, semigroups) -> str:
    if args.format == "json":
        return export.to_json(list(semigroups)) + "\n"
    if args.format == "jsonl":
        return "".join(export.to_json(S) + "\n" for S in semigroups)
    if args.format == "dot":
        raise UsageError("dot output needs a tree; use the tree subcommand")
    return export.semigroups_to_table(semigroups)


def _node_listing(args, nodes, name) -> str:
    if args.format == "dot":
        return export.nodes_to_dot(nodes, name)
    if args.format == "jsonl":
        return export.nodes_to_jsonl(nodes)
    if args.format == "json":
        return export.to_json([n.to_dict() for n in nodes]) + "\n"
    return export.nodes_to_table(nodes)


# -- subcommands -------------------------------------------------------------

def cmd_info(args) -> int:
    S = _gens(args.gens)
    if args.format in ("json", "jsonl"):
        row = S.to_dict()
        row["n_count"] = S.n_count
        _emit(args, json.dumps(row) + "\n")
        return 0
    rows = [
        ("semigroup", str(S)),
        ("gaps", " ".join(map(str, S.gaps)) or "-"),
        ("multiplicity", S.multiplicity),
        ("frobenius", S.frobenius),
        ("genus", S.genus),
        ("embedding_dimension", S.embedding_dimension),
        ("concentration", S.concentration),
        ("n_count", S.n_count),
        ("elementary", S.frobenius < 2 * S.multiplicity),
    ]
    width = max(len(k) for k, _ in rows)
    _emit(args, "".join(f"{k:<{width}}  {v}\n" for k, v in rows))
    return 0


def _oracle_listing(args):
    from .oracle import DEFAULT_CEILING, all_semigroups_by_genus, maximal_by_frobenius, oracle_filter

    if args.frobenius is not None:
        universe = all_semigroups_by_genus(args.frobenius, max(DEFAULT_CEILING, args.frobenius))
        if args.irreducible_only:
            found = [S for S in maximal_by_frobenius(universe, args.frobenius) if S.concentration == 2]
        else:
            found = oracle_filter(
                universe, lambda e: e.frobenius == args.frobenius and e.concentration == 2
            )
        return sorted(found)
    m = args.multiplicity
    bound = args.genus if args.genus is not None else args.max_genus
    if bound is None:
        raise UsageError("--oracle needs --genus or --max-genus")
    universe = all_semigroups_by_genus(bound, max(DEFAULT_CEILING, bound))

    def keep(e):
        if e.multiplicity != m or e.concentration > 2:
            return False
        if args.genus is not None and e.genus != args.genus:
            return False
        return not args.elementary or e.frobenius < 2 * m

    return sorted(oracle_filter(universe, keep))


def cmd_enum(args) -> int:
    if (args.multiplicity is None) == (args.frobenius is None):
        raise UsageError("give exactly one of -m/--multiplicity or -F/--frobenius")
    if args.oracle:
        _emit(args, _semigroup_listing(args, _oracle_listing(args)))
        return 0
    if args.frobenius is not None:
        if args.irreducible_only:
            _emit(args, _semigroup_listing(args, irreducible_c2(args.frobenius)))
            return 0
        classes = enumerate_c2_frobenius(args.frobenius, args.threads)
        if args.format == "json":
            _emit(args, export.to_json([c.to_dict() for c in classes]) + "\n")
        elif args.format == "jsonl":
            _emit(args, "".join(export.nodes_to_jsonl(c.nodes) for c in classes))
        else:
            _emit(args, _semigroup_listing(args, [S for c in classes for S in c.members]))
        return 0
    if args.genus is not None and not args.elementary:
        _emit(args, _semigroup_listing(args, enumerate_by_genus(args.multiplicity, args.genus)))
        return 0
    mode = Mode.ELEMENTARY_TREE if args.elementary else Mode.MULTIPLICITY_TREE
    bound = args.max_genus
    request = EnumerationRequest(mode, args.multiplicity, max_genus=bound)
    nodes = list(walk_tree(request, args.threads))
    if args.genus is not None:
        nodes = [n for n in nodes if n.semigroup.genus == args.genus]
    if args.format == "jsonl":
        _emit(args, export.nodes_to_jsonl(nodes))
    else:
        _emit(args, _semigroup_listing(args, [n.semigroup for n in nodes]))
    return 0


def cmd_tree(args) -> int:
    if args.variant == "class":
        if not args.gens:
            raise UsageError("tree class needs --gens for the irreducible root")
        cls = class_members(_gens(args.gens))
        _emit(args, _node_listing(args, list(cls.nodes), "class"))
        return 0
    if args.multiplicity is None:
        raise UsageError(f"tree {args.variant} needs -m/--multiplicity")
    mode = Mode.MULTIPLICITY_TREE if args.variant == "multiplicity" else Mode.ELEMENTARY_TREE
    request = EnumerationRequest(mode, args.multiplicity, max_genus=args.max_genus)
    nodes = list(walk_tree(request, args.threads))
    _emit(args, _node_listing(args, nodes, args.variant))
    return 0


def cmd_wilf(args) -> int:
    if args.frobenius is not None:
        root = _gens(args.gens) if args.gens else None
        request = EnumerationRequest(Mode.FROBENIUS, frobenius=args.frobenius, root=root)
    elif args.multiplicity is not None:
        mode = Mode.ELEMENTARY_TREE if args.elementary else Mode.MULTIPLICITY_TREE
        request = EnumerationRequest(mode, args.multiplicity, max_genus=args.max_genus)
    else:
        raise UsageError("give -m/--multiplicity or -F/--frobenius")
    report = verify_family(request, args.threads)
    if args.format == "json":
        _emit(args, json.dumps(report.summary()) + "\n")
    elif args.format == "jsonl":
        _emit(args, "".join(line + "\n" for line in report.jsonl()))
    else:
        _emit(args, report.summary_line() + "\n")
    return 0 if report.ok else 1


def _multiplicities(args) -> list[int]:
    ms = list(args.multiplicity or [])
    if args.range:
        lo, hi = args.range
        ms.extend(m for m in range(lo, hi + 1) if args.elementary or m % 2 == 1)
    if not ms:
        raise UsageError("give -m/--multiplicity or --range LO HI")
    return ms


def cmd_count(args) -> int:
    variant = "elementary" if args.elementary else "full"
    rows = [(m, count_c2(m, variant, args.threads)) for m in _multiplicities(args)]
    if args.format in ("json", "jsonl"):
        _emit(args, json.dumps([{"multiplicity": m, "count": c} for m, c in rows]) + "\n")
    elif len(rows) == 1:
        _emit(args, f"{rows[0][1]}\n")
    else:
        _emit(args, "m  count\n" + "".join(f"{m}  {c}\n" for m, c in rows))
    return 0


def cmd_height(args) -> int:
    variant = "elementary" if args.elementary else "full"
    rows = [(m, tree_height(m, variant, args.threads)) for m in _multiplicities(args)]
    if args.format in ("json", "jsonl"):
        payload = [
            {"multiplicity": m, "height": h, "genus_range": [m, m + h - 1] if h else None}
            for m, h in rows
        ]
        _emit(args, json.dumps(payload) + "\n")
    elif len(rows) == 1:
        _emit(args, f"{rows[0][1]}\n")
    else:
        _emit(args, "m  height  genera\n" + "".join(f"{m}  {h}  {m}..{m + h - 1}\n" for m, h in rows))
    return 0


# -- parser --------------------------------------------------------------------

@functools.lru_cache(maxsize=1)
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "jsonl", "dot"), default="table")
    common.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="concentration2",
        description="Numerical semigroups with concentration two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="invariants of <n1,...,ne>")
    p.add_argument("--gens", required=True, help="generators, e.g. 5,7,9")
    p.set_defaults(func=cmd_info)

    def add_enum(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("-m", "--multiplicity", type=int)
        p.add_argument("-F", "--frobenius", type=int)
        p.add_argument("--genus", type=int)
        p.add_argument("--max-genus", type=int)
        p.add_argument("--elementary", action="store_true")
        p.add_argument("--irreducible-only", action="store_true")
        p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
        p.set_defaults(func=cmd_enum)
        return p

    add_enum("enum", "list a family of concentration-two semigroups")
    fro = sub.add_parser("frobenius", parents=[common], help="C2(F) grouped into classes")
    fro.add_argument("frobenius", type=int)
    fro.add_argument("--irreducible-only", action="store_true")
    fro.set_defaults(
        func=cmd_enum, multiplicity=None, genus=None, max_genus=None, elementary=False, oracle=False
    )

    p = sub.add_parser("tree", parents=[common], help="emit an enumeration tree")
    p.add_argument("variant", choices=("multiplicity", "elementary", "class"))
    p.add_argument("-m", "--multiplicity", type=int)
    p.add_argument("--gens", help="irreducible root for the class tree")
    p.add_argument("--max-genus", type=int)
    p.set_defaults(func=cmd_tree)

    cls = sub.add_parser("class", parents=[common], help="class tree below an irreducible root")
    cls.add_argument("--gens", required=True)
    cls.set_defaults(func=cmd_tree, variant="class")

    p = sub.add_parser("wilf", parents=[common], help="verify Wilf's inequality on a family")
    p.add_argument("-m", "--multiplicity", type=int)
    p.add_argument("-F", "--frobenius", type=int)
    p.add_argument("--gens", help="restrict -F to the class of this irreducible root")
    p.add_argument("--max-genus", type=int)
    p.add_argument("--elementary", action="store_true")
    p.set_defaults(func=cmd_wilf)

    for name, func in (("count", cmd_count), ("height", cmd_height)):
        p = sub.add_parser(name, parents=[common], help=f"{name} of the tree for odd m")
        p.add_argument("-m", "--multiplicity", type=int, action="append")
        p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
        p.add_argument("--elementary", action="store_true")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except (EvenMultiplicityInfinite, UnboundedEnumeration) as exc:
        print(f"error: {exc}\n{INFINITE_HINT}", file=sys.stderr)
    except (ValueError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
