"""Presentation files: one coefficient ring, an ordered variable list,
optional weights, a monomial order, and a list of relations.

The format is line-oriented so fixtures diff cleanly:

    # quantum plane over the integers
    ring Z
    vars X1 X2
    weights 1 1
    order grlex X1 < X2
    rel X2*X1 - 3*X1*X2

Rings are Z, Q, Zmod <n>, or LaurentZ <symbol>.  "*" is mandatory between
factors and after coefficients; "1" denotes the empty word.  In an etlex
order line the first bracket lists the abelianized variables t<k> (k is the
1-based position in the vars line) in ascending commutative precedence, the
second bracket lists the variables in ascending tie-break precedence.

parse_presentation and format_presentation are inverse on canonical files.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .orders import EtLexOrder, GradedLexOrder, MonomialOrder
from .polynomials import NcPoly, from_terms
from .rings import (LAURENT_KIND, Q_KIND, Ring, RingElement, LaurentZ, QQ,
                    Zmod, ZZ, format_coeff)
from .words import Word, format_word

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TOKEN_RE = re.compile(r"\d+|[A-Za-z_][A-Za-z_0-9]*|[()^*/+<\[\]-]")
_TNAME_RE = re.compile(r"t(\d+)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # "num" | "name" | "op" | "end"
    text: str
    line: int
    col: int


def _tokenize_line(text: str, lineno: int) -> list[Token]:
    cut = text.find("#")
    if cut >= 0:
        text = text[:cut]
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, pos + 1)
        tok = m.group(0)
        kind = "num" if tok[0].isdigit() else "name" if tok[0].isalpha() or tok[0] == "_" else "op"
        tokens.append(Token(kind, tok, lineno, pos + 1))
        pos = m.end()
    tokens.append(Token("end", "", lineno, len(text) + 1))
    return tokens


class _LineParser:
    """Recursive descent over one line's tokens."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        found = "end of line" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"{message}, found {found}", tok.line, tok.col)

    def expect_op(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise self.fail(f"expected {text!r}")
        return self.take()

    def accept_op(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind == "op" and tok.text == text:
            self.take()
            return True
        return False

    def expect_nat(self, what: str) -> int:
        tok = self.peek()
        if tok.kind != "num":
            raise self.fail(f"expected {what}")
        return int(self.take().text)

    def expect_name(self, what: str) -> Token:
        tok = self.peek()
        if tok.kind != "name":
            raise self.fail(f"expected {what}")
        return self.take()

    def expect_end(self) -> None:
        if self.peek().kind != "end":
            raise self.fail("expected end of line")

    # --- polynomial grammar -------------------------------------------

    def poly(self, ring: Ring, order: MonomialOrder,
             var_index: dict[str, int]) -> NcPoly:
        terms: list[tuple[RingElement, Word]] = []
        sign = -1 if self.accept_op("-") else 1
        terms.append(self.term(ring, var_index, sign))
        while self.peek().kind == "op" and self.peek().text in "+-":
            sign = -1 if self.take().text == "-" else 1
            terms.append(self.term(ring, var_index, sign))
        self.expect_end()
        return from_terms(ring, order, terms)

    def term(self, ring: Ring, var_index: dict[str, int],
             sign: int) -> tuple[RingElement, Word]:
        tok = self.peek()
        coeff = None
        if tok.kind == "num" or (tok.kind == "op" and tok.text == "(") or \
                (tok.kind == "name" and ring.kind == LAURENT_KIND and tok.text == ring.symbol):
            coeff = self.coefficient(ring)
            if self.accept_op("*"):
                word = self.word(var_index)
            else:
                word = ()
        elif tok.kind == "name":
            coeff = ring.one
            word = self.word(var_index)
        else:
            raise self.fail("expected a term")
        if sign < 0:
            coeff = -coeff
        return coeff, word

    def word(self, var_index: dict[str, int]) -> Word:
        tok = self.peek()
        if tok.kind == "num":
            if tok.text == "1":
                self.take()
                return ()
            raise self.fail("expected a variable or the empty word 1")
        letters: list[int] = []
        while True:
            tok = self.expect_name("a variable name")
            if tok.text not in var_index:
                raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
            exponent = 1
            if self.accept_op("^"):
                exponent = self.expect_nat("an exponent")
            letters.extend([var_index[tok.text]] * exponent)
            if not self.accept_op("*"):
                break
        return tuple(letters)

    def coefficient(self, ring: Ring) -> RingElement:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "(":
            self.take()
            total = self.signed_coefficient(ring)
            while self.peek().kind == "op" and self.peek().text in "+-":
                op = self.take().text
                nxt = self.signed_coefficient(ring)
                total = total - nxt if op == "-" else total + nxt
            self.expect_op(")")
            return total
        return self.signed_coefficient(ring, allow_sign=False)

    def signed_coefficient(self, ring: Ring, allow_sign: bool = True) -> RingElement:
        sign = 1
        if allow_sign and self.accept_op("-"):
            sign = -1
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            n = int(tok.text)
            if self.peek().kind == "op" and self.peek().text == "/":
                self.take()
                dtok = self.peek()
                if dtok.kind != "num":
                    raise self.fail("expected a denominator")
                self.take()
                if ring.kind != Q_KIND:
                    raise ParseError(f"fractions are not elements of {ring}",
                                     tok.line, tok.col)
                if int(dtok.text) == 0:
                    raise ParseError("zero denominator", dtok.line, dtok.col)
                return ring.element(Fraction(sign * n, int(dtok.text)))
            if self._symbol_follows(ring):
                self.take()  # the "*"
                return self.symbol_power(ring, sign * n)
            return ring.from_int(sign * n)
        if tok.kind == "name" and ring.kind == LAURENT_KIND and tok.text == ring.symbol:
            return self.symbol_power(ring, sign)
        raise self.fail("expected a coefficient")

    def _symbol_follows(self, ring: Ring) -> bool:
        if ring.kind != LAURENT_KIND:
            return False
        tok = self.peek()
        nxt = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else None
        return (tok.kind == "op" and tok.text == "*" and nxt is not None
                and nxt.kind == "name" and nxt.text == ring.symbol)

    def symbol_power(self, ring: Ring, coefficient: int) -> RingElement:
        self.expect_name("the Laurent symbol")
        exponent = 1
        if self.accept_op("^"):
            negative = self.accept_op("-")
            exponent = self.expect_nat("an exponent")
            if negative:
                exponent = -exponent
        return ring.element({exponent: coefficient})


@dataclass(frozen=True)
class Presentation:
    ring: Ring
    variables: tuple[str, ...]
    weights: tuple[int, ...]
    order: MonomialOrder
    relations: tuple[NcPoly, ...]

    def __post_init__(self):
        n = len(self.variables)
        if n == 0:
            raise ValueError("a presentation needs at least one variable")
        if len(set(self.variables)) != n:
            raise ValueError("variable names must be unique")
        for name in self.variables:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
            if self.ring.kind == LAURENT_KIND and name == self.ring.symbol:
                raise ValueError(f"variable {name!r} collides with the Laurent symbol")
        if len(self.weights) != n or any(w < 1 for w in self.weights):
            raise ValueError("weights must list one positive integer per variable")
        if self.order.nvars != n:
            raise ValueError("order does not cover the declared variables")
        if isinstance(self.order, GradedLexOrder) and self.order.weights != self.weights:
            raise ValueError("grlex order weights differ from the declared weights")
        for i, rel in enumerate(self.relations):
            if rel.ring != self.ring:
                raise ValueError(f"relation #{i} lives in {rel.ring}, not {self.ring}")
            if rel.order != self.order:
                raise ValueError(f"relation #{i} does not carry the declared order")
            if rel.is_zero:
                raise ValueError(f"relation #{i} is zero")

    @cached_property
    def var_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def with_relations(self, relations) -> Presentation:
        return Presentation(self.ring, self.variables, self.weights,
                            self.order, tuple(relations))

    def format_poly(self, p: NcPoly) -> str:
        return p.format(self.variables)

    def format_word(self, w: Word) -> str:
        return format_word(w, self.variables)


def parse_poly(text: str, pres: Presentation, lineno: int = 1) -> NcPoly:
    """Parse one polynomial in the context of a presentation."""
    parser = _LineParser(_tokenize_line(text, lineno))
    if parser.peek().kind == "end":
        raise parser.fail("expected a polynomial")
    return parser.poly(pres.ring, pres.order, pres.var_index)


def _parse_ring(parser: _LineParser) -> Ring:
    tok = parser.expect_name("a ring name (Z, Q, Zmod, LaurentZ)")
    if tok.text == "Z":
        parser.expect_end()
        return ZZ
    if tok.text == "Q":
        parser.expect_end()
        return QQ
    if tok.text == "Zmod":
        n = parser.expect_nat("a modulus")
        if n < 2:
            raise ParseError("Zmod modulus must be >= 2", tok.line, tok.col)
        parser.expect_end()
        return Zmod(n)
    if tok.text == "LaurentZ":
        sym = parser.expect_name("a symbol name")
        parser.expect_end()
        return LaurentZ(sym.text)
    raise ParseError(f"unknown ring {tok.text!r}", tok.line, tok.col)


def _parse_precedence(parser: _LineParser, var_index: dict[str, int]) -> tuple[int, ...]:
    out = []
    while True:
        tok = parser.expect_name("a variable name")
        if tok.text not in var_index:
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
        out.append(var_index[tok.text])
        if not parser.accept_op("<"):
            break
    if sorted(out) != list(range(len(var_index))):
        raise ParseError("precedence must list every variable exactly once",
                         tok.line, tok.col)
    return tuple(out)


def _parse_t_precedence(parser: _LineParser, nvars: int) -> tuple[int, ...]:
    out = []
    while True:
        tok = parser.expect_name("an abelianized variable t<k>")
        m = _TNAME_RE.fullmatch(tok.text)
        if m is None or not 1 <= int(m.group(1)) <= nvars:
            raise ParseError(f"expected t1..t{nvars}, found {tok.text!r}",
                             tok.line, tok.col)
        out.append(int(m.group(1)) - 1)
        if not parser.accept_op("<"):
            break
    if sorted(out) != list(range(nvars)):
        raise ParseError("commutative precedence must list every t<k> exactly once",
                         tok.line, tok.col)
    return tuple(out)


def parse_presentation(text: str) -> Presentation:
    ring: Ring | None = None
    variables: tuple[str, ...] | None = None
    weights: tuple[int, ...] | None = None
    order: MonomialOrder | None = None
    rel_sources: list[tuple[int, _LineParser]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize_line(raw, lineno)
        parser = _LineParser(tokens)
        if parser.peek().kind == "end":
            continue
        head = parser.expect_name("a directive (ring, vars, weights, order, rel)")
        if head.text == "ring":
            if ring is not None:
                raise ParseError("duplicate ring line", head.line, head.col)
            ring = _parse_ring(parser)
        elif head.text == "vars":
            if variables is not None:
                raise ParseError("duplicate vars line", head.line, head.col)
            names = []
            while parser.peek().kind == "name":
                names.append(parser.take().text)
            parser.expect_end()
            if not names:
                raise ParseError("vars line lists no variables", head.line, head.col)
            variables = tuple(names)
        elif head.text == "weights":
            if weights is not None:
                raise ParseError("duplicate weights line", head.line, head.col)
            ws = []
            while parser.peek().kind == "num":
                ws.append(int(parser.take().text))
            parser.expect_end()
            weights = tuple(ws)
        elif head.text == "order":
            if order is not None:
                raise ParseError("duplicate order line", head.line, head.col)
            if variables is None:
                raise ParseError("order line must come after vars", head.line, head.col)
            kind = parser.expect_name("an order kind (grlex, etlex)")
            var_index = {name: i for i, name in enumerate(variables)}
            if kind.text == "grlex":
                precedence = _parse_precedence(parser, var_index)
                parser.expect_end()
                order = ("grlex", precedence)
            elif kind.text == "etlex":
                parser.expect_op("[")
                commutative = _parse_t_precedence(parser, len(variables))
                parser.expect_op("]")
                parser.expect_op("[")
                tie = _parse_precedence(parser, var_index)
                parser.expect_op("]")
                parser.expect_end()
                order = ("etlex", commutative, tie)
            else:
                raise ParseError(f"unknown order kind {kind.text!r}", kind.line, kind.col)
        elif head.text == "rel":
            rel_sources.append((lineno, parser))
        else:
            raise ParseError(f"unknown directive {head.text!r}", head.line, head.col)

    if ring is None:
        raise ParseError("missing ring line", 1, 1)
    if variables is None:
        raise ParseError("missing vars line", 1, 1)
    if order is None:
        raise ParseError("missing order line", 1, 1)
    if weights is None:
        weights = (1,) * len(variables)
    if len(weights) != len(variables):
        raise ParseError("weights count differs from variable count", 1, 1)

    if order[0] == "grlex":
        final_order: MonomialOrder = GradedLexOrder(order[1], weights)
    else:
        final_order = EtLexOrder(order[1], order[2])

    var_index = {name: i for i, name in enumerate(variables)}
    relations = []
    for lineno, parser in rel_sources:
        relations.append(parser.poly(ring, final_order, var_index))

    for i, rel in enumerate(relations):
        if rel.is_zero:
            line = rel_sources[i][0]
            raise ParseError("relation is zero after normalization", line, 1)

    return Presentation(ring, variables, tuple(weights), final_order, tuple(relations))


def _format_ring(ring: Ring) -> str:
    if ring.kind == "Z":
        return "ring Z"
    if ring.kind == "Q":
        return "ring Q"
    if ring.kind == "Zmod":
        return f"ring Zmod {ring.modulus}"
    return f"ring LaurentZ {ring.symbol}"


def _format_order(pres: Presentation) -> str:
    order = pres.order
    if isinstance(order, GradedLexOrder):
        chain = " < ".join(pres.variables[v] for v in order.precedence)
        return f"order grlex {chain}"
    tchain = " < ".join(f"t{v + 1}" for v in order.commutative_precedence)
    xchain = " < ".join(pres.variables[v] for v in order.tie_precedence)
    return f"order etlex [{tchain}] [{xchain}]"


def format_presentation(pres: Presentation) -> str:
    lines = [
        _format_ring(pres.ring),
        "vars " + " ".join(pres.variables),
        "weights " + " ".join(str(w) for w in pres.weights),
        _format_order(pres),
    ]
    for rel in pres.relations:
        lines.append("rel " + pres.format_poly(rel))
    return "\n".join(lines) + "\n"
