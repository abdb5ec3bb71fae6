"""
Problem files and polynomial text.

Line-oriented `key = value` files:

    # the monomial example
    p = 2
    vars = x, y, z
    gens = x*y, y*z
    e_max = 3

Polynomials are terms joined by + or -, each term an optional integer
coefficient followed by *-separated powers var^exp. Errors carry 1-based
line and column numbers.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from algebra.field import check_characteristic
from algebra.polynomial import Polynomial, render_polynomial
from algebra.ring import VARIABLE_NAME, RingContext, make_ring
from cli.presets import get_preset
from core.error_handling import NonPrimeCharacteristicError, ProblemSyntaxError, UnknownVariableError

logger = logging.getLogger(__name__)

KNOWN_KEYS = ("p", "vars", "gens", "e_max", "preset", "order", "other", "element", "e")
USER_ORDERS = ("lex", "grlex", "degrevlex")

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<name>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*^])|(?P<space>\s+)")


# =============================================================================
# POLYNOMIAL TEXT
# =============================================================================


@dataclass(frozen=True)
class Token:
    kind: str  # int, name, op, end
    text: str
    column: int


def tokenize(text: str, line: int = 1, column_offset: int = 0) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ProblemSyntaxError(f"unexpected character {text[pos]!r}", line, column_offset + pos + 1)
        if match.lastgroup != "space":
            tokens.append(Token(match.lastgroup, match.group(), column_offset + pos + 1))
        pos = match.end()
    tokens.append(Token("end", "", column_offset + len(text) + 1))
    return tokens


class _PolynomialParser:
    def __init__(self, text: str, context: RingContext, line: int, column_offset: int):
        self.context = context
        self.line = line
        self.tokens = tokenize(text, line, column_offset)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, message: str, token: Optional[Token] = None) -> ProblemSyntaxError:
        token = token or self.current
        return ProblemSyntaxError(message, self.line, token.column)

    def expect_int(self) -> int:
        if self.current.kind != "int":
            raise self.fail(f"expected an integer, found {self.current.text or 'end of input'!r}")
        return int(self.advance().text)

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            raise self.fail("empty polynomial")
        terms: Dict[Tuple[int, ...], int] = {}
        sign = 1
        if self.current.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        while True:
            coeff, mono = self.parse_term()
            terms[mono] = terms.get(mono, 0) + sign * coeff
            token = self.current
            if token.kind == "end":
                break
            if token.text not in ("+", "-"):
                raise self.fail(f"expected '+', '-' or end of polynomial, found {token.text!r}")
            sign = -1 if self.advance().text == "-" else 1
        return Polynomial(self.context, terms)

    def parse_term(self) -> Tuple[int, Tuple[int, ...]]:
        exponents = [0] * self.context.nvars
        coeff = 1
        if self.current.kind == "int":
            coeff = int(self.advance().text)
            if self.current.text != "*":
                if self.current.kind in ("name", "int"):
                    raise self.fail("expected '*' between coefficient and variable")
                return coeff, tuple(exponents)
            self.advance()
        while True:
            token = self.current
            if token.kind != "name":
                raise self.fail(f"expected a variable, found {token.text or 'end of input'!r}")
            self.advance()
            if token.text not in self.context.variables:
                raise UnknownVariableError(f"unknown variable {token.text!r}", self.line, token.column)
            exp = 1
            if self.current.text == "^":
                self.advance()
                exp = self.expect_int()
            exponents[self.context.index(token.text)] += exp
            if self.current.text != "*":
                return coeff, tuple(exponents)
            self.advance()


def parse_polynomial(text: str, context: RingContext, line: int = 1, column_offset: int = 0) -> Polynomial:
    """Parse one polynomial; column_offset places text inside its source line for error positions."""
    return _PolynomialParser(text, context, line, column_offset).parse()


# =============================================================================
# PROBLEM FILES
# =============================================================================


@dataclass
class _Entry:
    value: str
    line: int
    column: int  # 1-based column of value[0]


def _split_list(entry: _Entry) -> List[Tuple[str, int]]:
    """Comma-separated items with the 0-based column offset of each."""
    items = []
    start = 0
    for piece in entry.value.split(","):
        stripped = piece.lstrip()
        offset = entry.column - 1 + start + (len(piece) - len(stripped))
        items.append((stripped.rstrip(), offset))
        start += len(piece) + 1
    return items


def _parse_int(entry: _Entry, key: str, minimum: int) -> int:
    text = entry.value.strip()
    if not text.isdigit():
        raise ProblemSyntaxError(f"{key} must be an integer, got {text!r}", entry.line, entry.column)
    value = int(text)
    if value < minimum:
        raise ProblemSyntaxError(f"{key} must be at least {minimum}", entry.line, entry.column)
    return value


def _read_entries(text: str) -> Tuple[Dict[str, _Entry], int]:
    entries: Dict[str, _Entry] = {}
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if "=" not in content:
            column = len(content) - len(content.lstrip()) + 1
            raise ProblemSyntaxError("expected 'key = value'", lineno, column)
        key_part, _, value_part = content.partition("=")
        key = key_part.strip()
        key_column = len(key_part) - len(key_part.lstrip()) + 1
        if key not in KNOWN_KEYS:
            raise ProblemSyntaxError(f"unknown key {key!r}", lineno, key_column)
        if key in entries:
            raise ProblemSyntaxError(f"duplicate key {key!r}", lineno, key_column)
        value_column = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        value = value_part.strip()
        if not value:
            raise ProblemSyntaxError(f"missing value for {key!r}", lineno, value_column)
        entries[key] = _Entry(value, lineno, value_column)
    return entries, len(lines)


def _parse_polynomials(entry: _Entry, context: RingContext) -> List[Polynomial]:
    polys = []
    for item, offset in _split_list(entry):
        poly = parse_polynomial(item, context, entry.line, offset)
        if poly.is_zero:
            raise ProblemSyntaxError(f"{item!r} is zero mod {context.characteristic}", entry.line, offset + 1)
        polys.append(poly)
    return polys


def parse_problem(text: str, p_override: Optional[int] = None):
    """
    Parse problem-file text into a validated ProblemFile.

    p_override replaces the file's (or preset's) characteristic before any
    polynomial is read, so coefficients are reduced only once.
    """
    from cli.schemas import ProblemFile

    entries, nlines = _read_entries(text)

    preset = None
    if "preset" in entries:
        entry = entries["preset"]
        preset = get_preset(entry.value, line=entry.line, column=entry.column)

    def require(key: str) -> _Entry:
        if key not in entries:
            raise ProblemSyntaxError(f"missing required key {key!r}", nlines + 1, 1)
        return entries[key]

    if p_override is not None:
        p = check_characteristic(p_override)
    elif "p" in entries:
        entry = entries["p"]
        p = _parse_int(entry, "p", 0)
        try:
            check_characteristic(p)
        except NonPrimeCharacteristicError as exc:
            raise NonPrimeCharacteristicError(f"line {entry.line}, column {entry.column}: {exc}") from exc
    elif preset is not None:
        p = preset.p
    else:
        p = _parse_int(require("p"), "p", 0)

    if preset is not None:
        variables = list(preset.variables)
    else:
        variables = []
        entry = require("vars")
        for name, offset in _split_list(entry):
            if not VARIABLE_NAME.match(name):
                raise ProblemSyntaxError(f"invalid variable name {name!r}", entry.line, offset + 1)
            if name in variables:
                raise ProblemSyntaxError(f"duplicate variable {name!r}", entry.line, offset + 1)
            variables.append(name)

    order = ""
    if "order" in entries:
        entry = entries["order"]
        order = entry.value
        if order not in USER_ORDERS:
            raise ProblemSyntaxError(f"unknown monomial order {order!r}", entry.line, entry.column)
    context = make_ring(p, variables, order)

    if preset is not None:
        generators = [parse_polynomial(g, context) for g in preset.generators]
    else:
        generators = _parse_polynomials(require("gens"), context)

    other = _parse_polynomials(entries["other"], context) if "other" in entries else []
    element = None
    if "element" in entries:
        entry = entries["element"]
        element = parse_polynomial(entry.value, context, entry.line, entry.column - 1)

    e_max = _parse_int(entries["e_max"], "e_max", 1) if "e_max" in entries else (preset.e_max if preset else None)
    e = _parse_int(entries["e"], "e", 0) if "e" in entries else 1

    problem = ProblemFile(
        p=p,
        variables=variables,
        generators=[render_polynomial(g) for g in generators],
        e_max=e_max,
        preset=preset.name if preset else None,
        order=context.order.value,
        other=[render_polynomial(g) for g in other],
        element=render_polynomial(element) if element is not None else None,
        e=e,
    )
    logger.debug(f"parsed problem: p={p}, {len(variables)} variables, {len(generators)} generators")
    return problem
