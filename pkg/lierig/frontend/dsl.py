"""
``.lie`` documents
==================

Line-based format, one algebra per file::

    # comment
    algebra h1 dim 3
    basis X1 X2 X3
    [X1,X2] = X3
    torus t2
    row 1 0 0
    row 0 1 0
    row 0 0 2
    row 0 -1 0
    row 1 0 0
    row 0 0 0

Bracket right-hand sides are ``[-] term (("+"|"-") term)*`` with
``term = [rational "*"] label``; rationals are ``int`` or ``int/posint``.
Unlisted brackets are zero. A torus block holds ``dim`` rows per generator.
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from lierig.errors import ParseError
from lierig.exact import RatMatrix
from lierig.lie.core import StructureConstants

logger = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<number>\d+(?:/\d+)?)|(?P<punct>[\[\],=+\-*])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize_line(text: str, line: int) -> List[Token]:
    text = text.split("#", 1)[0]
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos + 1))
        pos = m.end()
    return tokens


@dataclass(frozen=True)
class BracketStatement:
    left: str
    right: str
    terms: Tuple[Tuple[str, Fraction], ...]


@dataclass(frozen=True)
class TorusBlock:
    name: str
    matrices: Tuple[RatMatrix, ...]


@dataclass(frozen=True)
class AlgebraDocument:
    """A parsed ``.lie`` file in canonical order.

    Brackets are sorted by the basis positions of the written pair, terms
    follow basis order with zero coefficients dropped.
    """

    name: str
    dim: int
    labels: Tuple[str, ...]
    brackets: Tuple[BracketStatement, ...] = ()
    tori: Tuple[TorusBlock, ...] = field(default=())

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def constants(self) -> StructureConstants:
        brackets = {}
        for st in self.brackets:
            brackets[(self.index(st.left), self.index(st.right))] = {
                self.index(lab): c for lab, c in st.terms
            }
        return StructureConstants.from_brackets(self.dim, brackets)

    def torus(self, name: str) -> Optional[Tuple[RatMatrix, ...]]:
        for block in self.tori:
            if block.name == name:
                return block.matrices
        return None

    @classmethod
    def from_constants(
        cls,
        name: str,
        g: StructureConstants,
        labels: Optional[Sequence[str]] = None,
        tori: Sequence[TorusBlock] = (),
    ) -> "AlgebraDocument":
        labels = tuple(labels) if labels else tuple(f"X{i + 1}" for i in range(g.dim))
        statements = tuple(
            BracketStatement(
                labels[i], labels[j], tuple((labels[k], c) for k, c in enumerate(vec) if c)
            )
            for (i, j), vec in g.entries
        )
        return cls(name, g.dim, labels, statements, tuple(tori))


class _Cursor:
    def __init__(self, tokens: List[Token], line: int, end_column: int):
        self.tokens = tokens
        self.pos = 0
        self.line = line
        self.end_column = end_column

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, expecting: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {expecting}, found end of line", self.line, self.end_column)
        self.pos += 1
        return tok

    def expect(self, kind: str, text: Optional[str] = None, expecting: Optional[str] = None) -> Token:
        what = expecting or (repr(text) if text else kind)
        tok = self.next(what)
        if tok.kind != kind or (text is not None and tok.text != text):
            raise ParseError(f"expected {what}, found {tok.text!r}", tok.line, tok.column)
        return tok

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def finish(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.column)


def _rational(cur: _Cursor) -> Fraction:
    negative = False
    tok = cur.peek()
    if tok is not None and tok.text == "-":
        cur.next("rational")
        negative = True
    tok = cur.expect("number", expecting="rational")
    num, _, den = tok.text.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", tok.line, tok.column + len(num) + 1)
    value = Fraction(int(num), int(den) if den else 1)
    return -value if negative else value


class _Parser:
    def __init__(self):
        self.name = None
        self.dim = None
        self.labels: Optional[Tuple[str, ...]] = None
        self.brackets: Dict[Tuple[int, int], BracketStatement] = {}
        self.tori: List[Tuple[str, Token, List[List[Fraction]]]] = []
        self.current_torus = None

    def label_index(self, tok: Token) -> int:
        if self.labels is None or tok.text not in self.labels:
            raise ParseError(f"unknown label {tok.text!r}", tok.line, tok.column)
        return self.labels.index(tok.text)

    def statement(self, cur: _Cursor):
        head = cur.peek()
        if self.name is None and head.text != "algebra":
            raise ParseError("document must start with 'algebra <name> dim <n>'", head.line, head.column)
        if head.text == "algebra":
            self.header(cur)
        elif head.text == "basis":
            self.basis(cur)
        elif head.text == "[":
            self.bracket(cur)
        elif head.text == "torus":
            self.torus(cur)
        elif head.text == "row":
            self.row(cur)
        else:
            raise ParseError(f"unexpected {head.text!r}", head.line, head.column)

    def header(self, cur: _Cursor):
        tok = cur.expect("ident", "algebra")
        if self.name is not None:
            raise ParseError("duplicate 'algebra' header", tok.line, tok.column)
        self.name = cur.expect("ident", expecting="algebra name").text
        cur.expect("ident", "dim")
        dim_tok = cur.expect("number", expecting="dimension")
        if "/" in dim_tok.text:
            raise ParseError("dimension must be an integer", dim_tok.line, dim_tok.column)
        self.dim = int(dim_tok.text)
        cur.finish()

    def basis(self, cur: _Cursor):
        tok = cur.expect("ident", "basis")
        if self.labels is not None:
            raise ParseError("duplicate 'basis' line", tok.line, tok.column)
        labels = []
        while not cur.at_end():
            lab = cur.expect("ident", expecting="basis label")
            if lab.text in labels:
                raise ParseError(f"duplicate label {lab.text!r}", lab.line, lab.column)
            labels.append(lab.text)
        if len(labels) != self.dim:
            raise ParseError(f"basis has {len(labels)} labels, expected {self.dim}", tok.line, tok.column)
        self.labels = tuple(labels)

    def bracket(self, cur: _Cursor):
        if self.current_torus is not None:
            self.close_torus()
        start = cur.expect("punct", "[")
        if self.labels is None:
            raise ParseError("bracket before 'basis' line", start.line, start.column)
        left_tok = cur.expect("ident", expecting="label")
        cur.expect("punct", ",")
        right_tok = cur.expect("ident", expecting="label")
        cur.expect("punct", "]")
        i, j = self.label_index(left_tok), self.label_index(right_tok)
        if i == j:
            raise ParseError(f"self-bracket [{left_tok.text},{right_tok.text}]", start.line, start.column)
        key = (min(i, j), max(i, j))
        if key in self.brackets:
            raise ParseError(
                f"duplicate bracket for {self.labels[key[0]]}, {self.labels[key[1]]}", start.line, start.column
            )
        cur.expect("punct", "=")
        coeffs: Dict[int, Fraction] = {}
        sign = 1
        first = True
        while True:
            tok = cur.peek()
            if tok is not None and tok.text in "+-" and tok.kind == "punct":
                if first and tok.text == "+":
                    raise ParseError("unexpected '+'", tok.line, tok.column)
                cur.next("term")
                sign = -1 if tok.text == "-" else 1
            elif not first:
                break
            coeff = Fraction(1)
            tok = cur.peek()
            if tok is not None and tok.kind == "number":
                coeff = _rational(cur)
                cur.expect("punct", "*")
            target = cur.expect("ident", expecting="label")
            k = self.label_index(target)
            coeffs[k] = coeffs.get(k, Fraction(0)) + sign * coeff
            first = False
            sign = 1
            if cur.at_end():
                break
        cur.finish()
        terms = tuple((self.labels[k], c) for k, c in sorted(coeffs.items()) if c)
        self.brackets[key] = BracketStatement(left_tok.text, right_tok.text, terms)

    def torus(self, cur: _Cursor):
        if self.current_torus is not None:
            self.close_torus()
        tok = cur.expect("ident", "torus")
        if self.labels is None:
            raise ParseError("torus before 'basis' line", tok.line, tok.column)
        name = cur.expect("ident", expecting="torus name")
        if any(t[0] == name.text for t in self.tori):
            raise ParseError(f"duplicate torus {name.text!r}", name.line, name.column)
        cur.finish()
        self.current_torus = (name.text, tok, [])
        self.tori.append(self.current_torus)

    def row(self, cur: _Cursor):
        tok = cur.expect("ident", "row")
        if self.current_torus is None:
            raise ParseError("'row' outside a torus block", tok.line, tok.column)
        values = []
        while not cur.at_end():
            values.append(_rational(cur))
        if len(values) != self.dim:
            raise ParseError(f"row has {len(values)} entries, expected {self.dim}", tok.line, tok.column)
        self.current_torus[2].append(values)

    def close_torus(self):
        name, tok, rows = self.current_torus
        if len(rows) % max(self.dim, 1):
            raise ParseError(
                f"torus {name!r} has {len(rows)} rows, not a multiple of {self.dim}", tok.line, tok.column
            )
        self.current_torus = None

    def document(self, last_line: int) -> AlgebraDocument:
        if self.name is None:
            raise ParseError("empty document", last_line)
        if self.labels is None:
            raise ParseError("missing 'basis' line", last_line)
        if self.current_torus is not None:
            self.close_torus()
        tori = []
        for name, _, rows in self.tori:
            n = self.dim
            mats = tuple(RatMatrix(rows[s:s + n], cols=n) for s in range(0, len(rows), n)) if n else ()
            tori.append(TorusBlock(name, mats))
        ordered = sorted(self.brackets, key=self._written)
        brackets = tuple(self.brackets[key] for key in ordered if self.brackets[key].terms)
        return AlgebraDocument(self.name, self.dim, self.labels, brackets, tuple(tori))

    def _written(self, key):
        st = self.brackets[key]
        return self.labels.index(st.left), self.labels.index(st.right)


def parse(text: str) -> AlgebraDocument:
    parser = _Parser()
    lines = text.splitlines()
    for number, raw in enumerate(lines, start=1):
        tokens = tokenize_line(raw, number)
        if tokens:
            parser.statement(_Cursor(tokens, number, len(raw.split("#", 1)[0].rstrip()) + 1))
    doc = parser.document(max(len(lines), 1))
    logger.debug(f"parsed algebra {doc.name} (dim {doc.dim}, {len(doc.brackets)} brackets, {len(doc.tori)} tori)")
    return doc


def _format_terms(terms) -> str:
    parts = []
    for label, c in terms:
        mag = abs(c)
        body = label if mag == 1 else f"{mag}*{label}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def format_vector(labels: Sequence[str], vector: Sequence) -> str:
    """``vector`` as a combination of basis labels, e.g. ``X1 - 1/2*X3``."""
    terms = [(lab, Fraction(c)) for lab, c in zip(labels, vector) if c]
    return _format_terms(terms) if terms else "0"


def serialize(doc: AlgebraDocument) -> str:
    out = [f"algebra {doc.name} dim {doc.dim}", "basis " + " ".join(doc.labels)]
    for st in doc.brackets:
        if st.terms:
            out.append(f"[{st.left},{st.right}] = {_format_terms(st.terms)}")
    for block in doc.tori:
        out.append("")
        out.append(f"torus {block.name}")
        for m in block.matrices:
            for i in range(m.rows):
                out.append("row " + " ".join(str(v) for v in m.row(i)))
    return "\n".join(out) + "\n"
