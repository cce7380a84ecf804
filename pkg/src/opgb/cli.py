"""Command line interface: ``opgb <command> ...``."""
from __future__ import annotations

import argparse
import logging
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

from .buchberger import GroebnerResult, Presentation, buchberger, normal_form
from .division import all_embeddings
from .orderings import ORDERINGS, ordering
from .polynomials import format_element
from .scm import small_common_multiples
from .symmetrize import ActionError
from .text import (ParseError, dumps, format_presentation, format_result, parse_element,
                   parse_presentation, parse_tree, result_to_json)
from .trees import TreeError, format_tree

SHIPPED = ("lie.op", "com.op", "assoc.op", "magma.op", "free.op")
DEFAULT_DIMS = 5


class CLIError(Exception):
    pass


def shipped_text(name: str) -> str:
    return resources.files("opgb").joinpath("data", name).read_text(encoding="utf-8")


def load_presentation(name: str) -> Presentation:
    """Read a presentation from a path, falling back to the shipped files by name."""
    path = Path(name)
    if path.exists():
        text = path.read_text(encoding="utf-8")
    else:
        key = name if name.endswith(".op") else name + ".op"
        if key not in SHIPPED:
            raise CLIError(f"no such file: {name}")
        text = shipped_text(key)
    try:
        return parse_presentation(text)
    except ParseError as exc:
        raise CLIError(f"{name}: {exc}") from None


def _prepare(args) -> Presentation:
    p = load_presentation(args.file)
    if args.ordering:
        p = p.with_spec(ordering(args.ordering))
    for g in p.generators:
        if g.arity == 1:
            print(f"warning: generator {g.name} is unary; completion may not terminate, "
                  "use --max-arity", file=sys.stderr)
    return p


def _complete(args, p: Presentation) -> GroebnerResult:
    return buchberger(p.symmetrized(), max_arity=args.max_arity, max_rounds=args.max_rounds,
                      threads=args.threads)


def _dims_range(args) -> int:
    return args.max_arity if args.max_arity is not None else DEFAULT_DIMS


def cmd_groebner(args) -> str:
    p = _prepare(args)
    result = _complete(args, p)
    # unary generators leave infinitely many monomials in each arity
    unary = any(g.arity == 1 for g in p.generators)
    dims = None if unary else result.dims(_dims_range(args))
    if args.json:
        return dumps(result_to_json(result, dims))
    return format_result(result, dims, p.actions)


def cmd_dims(args) -> str:
    p = _prepare(args)
    result = _complete(args, p)
    dims = result.dims(_dims_range(args))
    if args.json:
        return dumps(result_to_json(result, dims))
    return " ".join(str(d) for _, d in sorted(dims.items()))


def cmd_basis(args) -> str:
    p = _prepare(args)
    result = _complete(args, p)
    arities = [args.arity] if args.arity else range(1, _dims_range(args) + 1)
    out = {}
    for n in arities:
        try:
            out[n] = [format_tree(t) for t in result.normal_monomials(n)]
        except ValueError as exc:
            raise CLIError(str(exc)) from None
    if args.json:
        return dumps({str(n): ts for n, ts in out.items()})
    lines = []
    for n, ts in out.items():
        lines.append(f"# arity {n}: {len(ts)}")
        lines.extend(ts)
    return "\n".join(lines)


def cmd_reduce(args) -> str:
    p = _prepare(args)
    result = _complete(args, p)
    f = parse_element(args.expr, p.generators, p.spec, p.actions)
    nf = normal_form(f, result.basis)
    if args.json:
        return dumps({"input": format_element(f), "normal_form": format_element(nf), "complete": result.complete})
    return format_element(nf)


def _trees(args):
    p = _prepare(args)
    a = parse_tree(args.first, p.generators)
    b = parse_tree(args.second, p.generators)
    return p, a, b


def cmd_scm(args) -> str:
    _, a, b = _trees(args)
    scms = small_common_multiples(a, b)
    if args.json:
        return dumps([{"multiple": format_tree(s.multiple), "path_a": list(s.emb_a.path),
                       "path_b": list(s.emb_b.path)} for s in scms])
    lines = [f"# {len(scms)} small common multiples"]
    for s in scms:
        lines.append(f"{format_tree(s.multiple)}  first at {list(s.emb_a.path)}, second at {list(s.emb_b.path)}")
    return "\n".join(lines)


def cmd_divide(args) -> str:
    _, a, b = _trees(args)
    embs = all_embeddings(a, b)
    if args.json:
        return dumps({"divides": bool(embs), "embeddings": [
            {"path": list(e.path), "context": format_tree(e.context)} for e in embs]})
    lines = [f"# {len(embs)} occurrences" if embs else "# not divisible"]
    for e in embs:
        lines.append(f"{format_tree(e.context)}  at {list(e.path)}")
    return "\n".join(lines)


def cmd_symmetrize(args) -> str:
    p = _prepare(args)
    q = p.symmetrized()
    if args.json:
        return dumps({"relations": [format_element(r) for r in q.relations]})
    return format_presentation(q).rstrip("\n")


def cmd_orderings(args) -> str:
    if args.json:
        return dumps(list(ORDERINGS))
    return "\n".join(ORDERINGS)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ordering", help="one of the eight ordering names (case-insensitive)")
    common.add_argument("--max-arity", type=int, help="skip S-polynomials above this arity")
    common.add_argument("--max-rounds", type=int)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--output", help="write to FILE instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="opgb", description="Groebner bases for shuffle operads")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file_arg=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file_arg:
            sp.add_argument("file", help="presentation file or shipped name (lie, com, assoc, magma, free)")
        sp.set_defaults(func=func)
        return sp

    add("groebner", cmd_groebner, "complete a presentation to a Groebner basis")
    add("dims", cmd_dims, "dimensions of the quotient in arities 1..max-arity")
    add("basis", cmd_basis, "normal monomials").add_argument("--arity", type=int)
    add("reduce", cmd_reduce, "normal form of an element").add_argument("expr")
    for name, func, help_ in (("scm", cmd_scm, "small common multiples of two tree monomials"),
                              ("divide", cmd_divide, "occurrences of the second tree in the first")):
        sp = add(name, func, help_, file_arg=False)
        sp.add_argument("first")
        sp.add_argument("second")
        sp.add_argument("--file", required=True, help="presentation declaring the generators")
    add("symmetrize", cmd_symmetrize, "close the relations under the symmetric groups")
    add("orderings", cmd_orderings, "list the ordering names", file_arg=False)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.threads < 1:
            raise CLIError("--threads must be at least 1")
        text = args.func(args)
    except (CLIError, ParseError, ActionError, TreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
