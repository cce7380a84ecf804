"""Reading and writing presentations, elements and results.

Presentation files are line based; ``#`` starts a comment::

    generator b 2
    action b s1 = -1*b
    relation b(b(1,2),3) + b(b(2,3),1) + b(b(3,1),2)
    ordering pathrperm

Trees are written ``gen(child,...)`` with bare integers for leaves.  A
tree whose children are not in canonical order is rewritten through the
declared actions.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .buchberger import GroebnerResult, Presentation
from .orderings import DEFAULT_ORDERING, OrderingSpec, ordering
from .polynomials import OperadPolynomial, format_coefficient, format_element
from .symmetrize import ActionError, GeneratorAction, canonical_element
from .trees import Generator, Leaf, MalformedTreeError, Tree, Vertex, check_labels


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9_']*)|(?P<op>[()+\-*,=])|(?P<bad>\S))"
)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int | None, col0: int = 1) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        kind = m.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", line, col0 + m.start(kind))
        toks.append(_Tok(kind, m.group(kind), col0 + m.start(kind)))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str, line: int | None = None, col0: int = 1):
        self.line = line
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.end_col = col0 + len(text)

    def error(self, message: str, tok: _Tok | None = None):
        col = tok.col if tok else (self.toks[self.i].col if self.i < len(self.toks) else self.end_col)
        return ParseError(message, self.line, col)

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind: str | None = None, text: str | None = None) -> _Tok:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        if (kind and tok.kind != kind) or (text and tok.text != text):
            raise self.error(f"expected {text or kind}, found {tok.text!r}", tok)
        self.i += 1
        return tok

    def done(self):
        tok = self.peek()
        if tok is not None:
            raise self.error(f"unexpected {tok.text!r}", tok)

    def tree(self, gens: dict[str, Generator]) -> Tree:
        tok = self.take()
        if tok.kind == "num":
            if "/" in tok.text or int(tok.text) < 1:
                raise self.error("leaf labels are positive integers", tok)
            return Leaf(int(tok.text))
        if tok.kind != "name":
            raise self.error(f"expected a tree, found {tok.text!r}", tok)
        g = gens.get(tok.text)
        if g is None:
            raise self.error(f"undeclared generator {tok.text!r}", tok)
        self.take("op", "(")
        children = [self.tree(gens)]
        while self.peek() is not None and self.peek().text == ",":
            self.take()
            children.append(self.tree(gens))
        self.take("op", ")")
        if len(children) != g.arity:
            raise self.error(f"generator {g.name} has arity {g.arity}, given {len(children)} inputs", tok)
        return Vertex(g, children)

    def lincomb(self, atom: Callable[[], object]) -> list[tuple[object, Fraction, _Tok]]:
        terms = []
        sign = 1
        first = True
        while True:
            tok = self.peek()
            if tok is not None and tok.text in "+-" and tok.kind == "op":
                self.take()
                sign = -1 if tok.text == "-" else 1
            elif not first:
                break
            tok = self.peek()
            if tok is None:
                raise self.error("expected a term")
            coef = Fraction(1)
            if tok.kind == "num" and self.i + 1 < len(self.toks) and self.toks[self.i + 1].text == "*":
                coef = Fraction(tok.text)
                self.i += 2
            start = self.peek()
            terms.append((atom(), sign * coef, start))
            first = False
            sign = 1
            nxt = self.peek()
            if nxt is None or nxt.text not in "+-":
                break
        return terms


def _element(parser: _Parser, gens: dict[str, Generator], spec: OrderingSpec,
             actions: GeneratorAction | None) -> OperadPolynomial:
    if [t.text for t in parser.toks] == ["0"]:
        return OperadPolynomial.zero(spec)
    terms = parser.lincomb(lambda: parser.tree(gens))
    parser.done()
    arity = None
    for t, _, tok in terms:
        try:
            check_labels(t)
        except MalformedTreeError as exc:
            raise parser.error(str(exc), tok) from None
        if arity is None:
            arity = t.arity
        elif t.arity != arity:
            raise parser.error(f"mixed arities {arity} and {t.arity}", tok)
    try:
        return canonical_element([(t, c) for t, c, _ in terms], spec, actions)
    except ActionError as exc:
        raise ParseError(str(exc), parser.line) from None


def parse_tree(text: str, generators: Sequence[Generator]) -> Tree:
    p = _Parser(text)
    t = p.tree({g.name: g for g in generators})
    p.done()
    return t


def parse_element(text: str, generators: Sequence[Generator], spec: OrderingSpec = DEFAULT_ORDERING,
                  actions: GeneratorAction | None = None) -> OperadPolynomial:
    return _element(_Parser(text), {g.name: g for g in generators}, spec, actions)


def parse_presentation(text: str) -> Presentation:
    """Parse a presentation file.  Generator ordinals follow declaration order."""
    gens: dict[str, Generator] = {}
    action_lines = []
    relation_lines = []
    spec = DEFAULT_ORDERING
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        keyword = stripped.split(None, 1)[0]
        col = body.index(keyword) + 1
        rest_col = col + len(keyword)
        rest = body[rest_col - 1:]
        if keyword == "generator":
            p = _Parser(rest, lineno, rest_col)
            name = p.take("name")
            n = p.take("num")
            p.done()
            if name.text in gens:
                raise ParseError(f"duplicate generator {name.text!r}", lineno, name.col)
            if "/" in n.text or int(n.text) < 1:
                raise ParseError("arity must be a positive integer", lineno, n.col)
            gens[name.text] = Generator(name.text, int(n.text), len(gens))
        elif keyword == "action":
            action_lines.append((lineno, rest, rest_col))
        elif keyword == "relation":
            relation_lines.append((lineno, rest, rest_col))
        elif keyword == "ordering":
            p = _Parser(rest, lineno, rest_col)
            tok = p.take("name")
            p.done()
            try:
                spec = ordering(tok.text)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, tok.col) from None
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno, col)

    actions = None
    if action_lines:
        actions = GeneratorAction(gens.values())
        for lineno, rest, rest_col in action_lines:
            p = _Parser(rest, lineno, rest_col)
            name = p.take("name")
            if name.text not in gens:
                raise ParseError(f"undeclared generator {name.text!r}", lineno, name.col)
            s = p.take("name")
            if not re.fullmatch(r"s\d+", s.text):
                raise ParseError(f"expected a transposition like s1, found {s.text!r}", lineno, s.col)
            p.take("op", "=")

            def atom(p=p):
                tok = p.take("name")
                if tok.text not in gens:
                    raise p.error(f"undeclared generator {tok.text!r}", tok)
                return tok.text

            combo: dict[str, Fraction] = {}
            for other, c, _ in p.lincomb(atom):
                combo[other] = combo.get(other, 0) + c
            p.done()
            try:
                actions.set(name.text, int(s.text[1:]), combo)
            except ActionError as exc:
                raise ParseError(str(exc), lineno, name.col) from None

    relations = []
    for lineno, rest, rest_col in relation_lines:
        f = _element(_Parser(rest, lineno, rest_col), gens, spec, actions)
        if f:
            relations.append(f)
    return Presentation(list(gens.values()), relations, spec, actions)


def _format_combo(combo: dict[str, Fraction]) -> str:
    parts = []
    for i, (name, c) in enumerate(combo.items()):
        mag = abs(c)
        body = name if mag == 1 else f"{format_coefficient(mag)}*{name}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def format_presentation(p: Presentation, relations: Sequence[OperadPolynomial] | None = None) -> str:
    lines = [f"generator {g.name} {g.arity}" for g in p.generators]
    if p.actions:
        for (name, i), combo in sorted(p.actions.table.items()):
            lines.append(f"action {name} s{i} = {_format_combo(combo)}")
    lines.append(f"ordering {p.spec.name}")
    for r in (p.relations if relations is None else relations):
        lines.append(f"relation {format_element(r)}")
    return "\n".join(lines) + "\n"


def format_result(result: GroebnerResult, dims: dict[int, int] | None = None,
                  actions: GeneratorAction | None = None) -> str:
    flags = (f"# basis: {len(result.basis)} elements, complete: {str(result.complete).lower()}, "
             f"quadratic: {str(result.quadratic).lower()}, truncation: {result.truncation_arity}, "
             f"rounds: {result.rounds}")
    lines = [flags]
    if result.complete and result.quadratic:
        lines.append("# quadratic Groebner basis: PBW; Koszul")
    p = Presentation(result.generators, result.basis, result.spec, actions)
    text = "\n".join(lines) + "\n" + format_presentation(p)
    if dims:
        text += "# dims: " + " ".join(f"{n}:{d}" for n, d in sorted(dims.items())) + "\n"
    return text


def result_to_json(result: GroebnerResult, dims: dict[int, int] | None = None) -> dict:
    return {
        "basis": [format_element(g) for g in result.basis],
        "complete": result.complete,
        "quadratic": result.quadratic,
        "truncation": result.truncation_arity,
        "dims": {str(n): d for n, d in sorted((dims or {}).items())},
        "stats": dict(result.stats, rounds=result.rounds),
        "ordering": result.spec.name,
    }


def result_from_json(data: dict, generators: Sequence[Generator], spec: OrderingSpec | None = None) -> GroebnerResult:
    spec = spec or ordering(data.get("ordering", DEFAULT_ORDERING.name))
    basis = [parse_element(s, generators, spec) for s in data["basis"]]
    stats = dict(data.get("stats", {}))
    rounds = stats.pop("rounds", 0)
    return GroebnerResult(basis, list(generators), spec, data.get("truncation"), data["complete"],
                          data["quadratic"], rounds, stats)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
