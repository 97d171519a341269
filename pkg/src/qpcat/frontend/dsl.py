"""Text format for graded quivers with superpotential.

    # comment
    vertex 1;
    arrow a : 1 -> 2 deg -1;
    n = 4;
    potential = 1 a b c;

Potential words are whitespace-separated arrow names read right-to-left
(``a b c`` is the cycle abc: first c, then b, then a).  With
``diagrammatic=True`` words are read left-to-right instead.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..gqa import GradedQuiver, QuiverError, make_quiver
from ..potential import Potential, PotentialError


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>[:;=+\-])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = mt.lastgroup
        if kind == "nl":
            line, line_start = line + 1, mt.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, mt.group(), line, pos - line_start + 1))
        pos = mt.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


@dataclass
class InputDocument:
    vertices: list = field(default_factory=list)
    arrows: list = field(default_factory=list)  # (name, src, tgt, deg)
    n: int | None = None
    potential: list = field(default_factory=list)  # (Fraction, tuple of names, right-to-left)
    options: dict = field(default_factory=dict)
    positions: dict = field(default_factory=dict, compare=False, repr=False)

    def quiver(self) -> GradedQuiver:
        return make_quiver(self.vertices, self.arrows)

    def build_potential(self, quiver: GradedQuiver | None = None) -> Potential:
        q = quiver or self.quiver()
        return Potential.from_terms(q, self.n, [(c, q.path(*w)) for c, w in self.potential])


class _Parser:
    def __init__(self, text: str, diagrammatic: bool):
        self.toks = tokenize(text)
        self.i = 0
        self.diagrammatic = diagrammatic
        self.doc = InputDocument(options={"diagrammatic": diagrammatic})

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.next()
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", t.line, t.col)
        return t

    def ident_or_num(self) -> Token:
        t = self.next()
        if t.kind not in ("ident", "num") or "/" in t.text:
            raise ParseError(f"expected identifier, got {t.text or 'end of input'!r}", t.line, t.col)
        return t

    def integer(self) -> int:
        neg = False
        if self.peek().kind == "sym" and self.peek().text in "+-":
            neg = self.next().text == "-"
        t = self.expect("num")
        if "/" in t.text:
            raise ParseError("expected an integer", t.line, t.col)
        return -int(t.text) if neg else int(t.text)

    def parse(self) -> InputDocument:
        while self.peek().kind != "eof":
            t = self.peek()
            if t.kind != "ident":
                raise ParseError(f"unexpected {t.text!r}", t.line, t.col)
            if t.text == "vertex":
                self.vertex()
            elif t.text == "arrow":
                self.arrow()
            elif t.text == "n":
                self.next()
                self.expect("sym", "=")
                if self.doc.n is not None:
                    raise ParseError("n given twice", t.line, t.col)
                self.doc.n = self.integer()
                self.doc.positions["n"] = (t.line, t.col)
                self.expect("sym", ";")
            elif t.text == "potential":
                self.potential_stmt()
            else:
                raise ParseError(f"unknown statement {t.text!r}", t.line, t.col)
        if self.doc.n is None:
            last = self.toks[-1]
            raise ParseError("missing 'n = <int>;'", last.line, last.col)
        return self.doc

    def vertex(self):
        self.next()
        while True:
            t = self.ident_or_num()
            if t.text in self.doc.vertices:
                raise ParseError(f"duplicate vertex {t.text!r}", t.line, t.col)
            self.doc.vertices.append(t.text)
            self.doc.positions[("vertex", t.text)] = (t.line, t.col)
            if self.peek().kind == "sym" and self.peek().text == ";":
                break
        self.expect("sym", ";")

    def arrow(self):
        self.next()
        name = self.expect("ident")
        self.expect("sym", ":")
        src = self.ident_or_num()
        self.expect("arrow")
        tgt = self.ident_or_num()
        deg = 0
        if self.peek().kind == "ident" and self.peek().text == "deg":
            self.next()
            deg = self.integer()
        self.expect("sym", ";")
        for v in (src, tgt):
            if v.text not in self.doc.vertices:
                raise ParseError(f"undeclared vertex {v.text!r}", v.line, v.col)
        if any(a[0] == name.text for a in self.doc.arrows):
            raise ParseError(f"duplicate arrow {name.text!r}", name.line, name.col)
        try:
            make_quiver(self.doc.vertices, self.doc.arrows + [(name.text, src.text, tgt.text, deg)])
        except QuiverError as exc:
            raise ParseError(str(exc), name.line, name.col) from None
        self.doc.arrows.append((name.text, src.text, tgt.text, deg))
        self.doc.positions[("arrow", name.text)] = (name.line, name.col)

    def potential_stmt(self):
        start = self.next()
        self.expect("sym", "=")
        if self.doc.potential or "potential" in self.doc.positions:
            raise ParseError("potential given twice", start.line, start.col)
        self.doc.positions["potential"] = (start.line, start.col)
        if self.peek().kind == "num" and self.peek().text == "0" and self.toks[self.i + 1].text == ";":
            self.next()
            self.expect("sym", ";")
            return
        sign = 1
        first = True
        while True:
            t = self.peek()
            if t.kind == "sym" and t.text in "+-":
                self.next()
                sign = -1 if t.text == "-" else 1
            elif not first:
                raise ParseError(f"expected '+' or '-', got {t.text!r}", t.line, t.col)
            if self.peek().kind == "sym" and self.peek().text in "+-":
                if self.next().text == "-":
                    sign = -sign
            coeff = Fraction(1)
            if self.peek().kind == "num":
                coeff = Fraction(self.next().text)
            word_tok = self.peek()
            names = []
            while self.peek().kind == "ident":
                names.append(self.next())
            if not names:
                raise ParseError("expected an arrow word", word_tok.line, word_tok.col)
            self.doc.potential.append((sign * coeff, self.word(names)))
            first = False
            if self.peek().kind == "sym" and self.peek().text == ";":
                self.next()
                return

    def word(self, names: list[Token]) -> tuple[str, ...]:
        q = make_quiver(self.doc.vertices, self.doc.arrows)
        for t in names:
            if not q.has_arrow(t.text):
                raise ParseError(f"unknown arrow {t.text!r}", t.line, t.col)
        ordered = list(reversed(names)) if self.diagrammatic else names
        for left, right in zip(ordered, ordered[1:]):
            a, b = q.arrow(left.text), q.arrow(right.text)
            if b.target != a.source:
                bad = right if self.diagrammatic else left
                raise ParseError(f"{left.text!r} cannot follow {right.text!r}: "
                                 f"target({right.text}) = {b.target} but source({left.text}) = {a.source}",
                                 bad.line, bad.col)
        first, last = q.arrow(ordered[0].text), q.arrow(ordered[-1].text)
        if first.target != last.source:
            raise ParseError("potential term is not a cycle", names[0].line, names[0].col)
        return tuple(t.text for t in ordered)


def parse(text: str, diagrammatic: bool = False) -> InputDocument:
    return _Parser(text, diagrammatic).parse()


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_document(doc: InputDocument) -> str:
    """Canonical text for ``doc``; ``parse(format_document(doc))`` gives it back."""
    lines = [f"vertex {v};" for v in doc.vertices]
    for name, src, tgt, deg in doc.arrows:
        lines.append(f"arrow {name} : {src} -> {tgt} deg {deg};")
    lines.append(f"n = {doc.n};")
    if doc.potential:
        diag = doc.options.get("diagrammatic", False)
        parts = []
        for i, (c, w) in enumerate(doc.potential):
            word = " ".join(reversed(w) if diag else w)
            if i == 0:
                parts.append(f"{_fmt_coeff(c)} {word}")
            else:
                op = "-" if c < 0 else "+"
                parts.append(f"{op} {_fmt_coeff(abs(c))} {word}")
        lines.append("potential = " + " ".join(parts) + ";")
    return "\n".join(lines) + "\n"


def load(path: str, diagrammatic: bool = False) -> tuple[InputDocument, str]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse(text, diagrammatic), text


__all__ = ["InputDocument", "ParseError", "parse", "format_document", "load", "PotentialError"]
