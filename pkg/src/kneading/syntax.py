"""Text formats: the number grammar and partition files.

Numbers::

    3/7    -2    (-1+1*sqrt(2))/1    ( 1 - sqrt(5) ) / 2    (sqrt(2))/2

A surd is ``(a + b*sqrt(d))/c`` where the leading ``a``, the ``b*`` factor
and the trailing ``/c`` are optional.  Whitespace is ignored.  Output of
:func:`format_value` is always accepted back.

Partition files are JSON objects ``{"Q": ["0", "1/2", "1"], "epsilon": [-1, -1]}``.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import KneadingError, ParseError, PartitionError
from .exact import normalize_surd
from .partition import validate_finite

__all__ = ["parse_number", "parse_rational", "parse_digits", "load_partition",
           "partition_from_mapping", "format_value"]


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message):
        raise ParseError(message, self.pos + 1)

    def expect(self, token):
        self.skip()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos:self.pos + len(token)] or "end of input"
            self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def accept(self, token):
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def sign(self):
        if self.accept("-"):
            return -1
        self.accept("+")
        return 1

    def natural(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return int(self.text[start:self.pos])

    def integer(self):
        s = self.sign()
        return s * self.natural()

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")


def _denominator(sc):
    if not sc.accept("/"):
        return 1
    col = sc.pos + 1
    c = sc.natural()
    if c == 0:
        raise ParseError("zero denominator", col)
    return c


def _radical_term(sc, sign):
    # [b *] sqrt(d)
    b = 1
    if sc.peek().isdigit():
        b = sc.natural()
        sc.expect("*")
    sc.expect("sqrt")
    sc.expect("(")
    d = sc.natural()
    sc.expect(")")
    return sign * b, d


def _radical_ahead(sc):
    # "sqrt(" or "<digits> *" comes next
    sc.skip()
    return re.match(r"sqrt|\d+\s*\*", sc.text[sc.pos:]) is not None


def parse_number(text):
    """Parse the number grammar into a ``Fraction`` or canonical ``QuadSurd``."""
    sc = _Scanner(text)
    if not sc.accept("("):
        value = _rational(sc)
        sc.end()
        return value
    s = sc.sign()
    if _radical_ahead(sc):
        a, (b, d) = 0, _radical_term(sc, s)
    else:
        a = s * sc.natural()
        if sc.peek() not in ("+", "-"):
            sc.error("expected '+' or '-' before the radical")
        b, d = _radical_term(sc, sc.sign())
    sc.expect(")")
    c = _denominator(sc)
    sc.end()
    return normalize_surd(a, b, c, d)


def _rational(sc):
    u = sc.integer()
    return Fraction(u, _denominator(sc))


def parse_rational(text):
    sc = _Scanner(text)
    value = _rational(sc)
    sc.end()
    return value


def parse_digits(text):
    """Comma or space separated branch indices; empty text is the empty word."""
    parts = [p for p in text.replace(",", " ").split()]
    digits = []
    for p in parts:
        try:
            digits.append(int(p))
        except ValueError:
            raise ParseError(f"digit {p!r} is not an integer") from None
    return digits


def format_value(x):
    """Render a value so that :func:`parse_number` reads it back."""
    return str(x)


def partition_from_mapping(data, name="custom"):
    if not isinstance(data, dict) or "Q" not in data or "epsilon" not in data:
        raise PartitionError("partition needs fields 'Q' and 'epsilon'")
    Q = []
    for i, item in enumerate(data["Q"]):
        try:
            Q.append(parse_rational(str(item)))
        except ParseError as exc:
            raise PartitionError(f"Q[{i}]: {exc}", i) from None
    return validate_finite(Q, data["epsilon"], name=name)


def load_partition(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise KneadingError(f"cannot read partition file {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.colno) from None
    return partition_from_mapping(data, name=str(path))
