"""Line-oriented instance file formats.

Three UTF-8 formats, distinguished by their header word; ``#`` starts a
comment anywhere on a line.

    pig <n>
    maxn <m1> ... <mn>

    intervals <n>
    <left_num>/<left_den> <right_num>/<right_den>     (one line per vertex,
                                                       denominator optional)

    bubbles <c>
    col <j> <count>
    <row> <size>                                      (count lines per column)

Parse failures raise FormatError carrying the byte offset of the offending
token.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bubbles import CompactBubbles
from .errors import FormatError
from .pig import ProperIntervalGraph

_TOKEN = re.compile(rb"\S+")


def _tokenize(data: bytes):
    """(token_text, byte_offset) pairs, comments stripped."""
    out = []
    pos = 0
    for line in data.split(b"\n"):
        cut = line.find(b"#")
        body = line if cut < 0 else line[:cut]
        for m in _TOKEN.finditer(body):
            try:
                text = m.group().decode("utf-8")
            except UnicodeDecodeError as exc:
                raise FormatError(pos + m.start() + exc.start, "invalid UTF-8") from None
            out.append((text, pos + m.start()))
        pos += len(line) + 1
    return out


class _Reader:
    def __init__(self, data: bytes):
        self.tokens = _tokenize(data)
        self.i = 0
        self.end = len(data)

    def next(self, what):
        if self.i >= len(self.tokens):
            raise FormatError(self.end, f"unexpected end of file, expected {what}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def word(self, expected):
        text, off = self.next(f"'{expected}'")
        if text != expected:
            raise FormatError(off, f"expected '{expected}', got '{text}'")

    def integer(self, what):
        text, off = self.next(what)
        try:
            return int(text)
        except ValueError:
            raise FormatError(off, f"expected integer {what}, got '{text}'") from None

    def rational(self, what):
        text, off = self.next(what)
        num, _, den = text.partition("/")
        try:
            if den:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError):
            raise FormatError(off, f"expected rational {what}, got '{text}'") from None

    def done(self):
        if self.i < len(self.tokens):
            text, off = self.tokens[self.i]
            raise FormatError(off, f"trailing token '{text}'")


def parse_instance(data: bytes):
    """Parse any instance format; returns ('pig'|'intervals'|'bubbles', payload).

    The payload is a ProperIntervalGraph for pig and intervals files, and a
    CompactBubbles for bubbles files.
    """
    rd = _Reader(data)
    if not rd.tokens:
        raise FormatError(0, "empty file")
    head, off = rd.tokens[0]
    if head == "pig":
        rd.word("pig")
        n = rd.integer("vertex count")
        if n < 1:
            raise FormatError(off, "vertex count must be positive")
        rd.word("maxn")
        maxn = [rd.integer(f"max neighbor of vertex {j}") for j in range(1, n + 1)]
        rd.done()
        return "pig", ProperIntervalGraph(maxn)
    if head == "intervals":
        rd.word("intervals")
        n = rd.integer("interval count")
        if n < 1:
            raise FormatError(off, "interval count must be positive")
        entries = []
        for j in range(1, n + 1):
            left = rd.rational(f"left endpoint {j}")
            right = rd.rational(f"right endpoint {j}")
            entries.append((left, right))
        rd.done()
        return "intervals", ProperIntervalGraph.from_intervals(entries)
    if head == "bubbles":
        rd.word("bubbles")
        c = rd.integer("column count")
        if c < 1:
            raise FormatError(off, "column count must be positive")
        columns = []
        for j in range(1, c + 1):
            rd.word("col")
            got = rd.integer("column index")
            if got != j:
                raise FormatError(rd.tokens[rd.i - 1][1], f"expected column {j}, got {got}")
            cnt = rd.integer("bubble count")
            col = []
            for _ in range(cnt):
                row = rd.integer("row")
                size = rd.integer("size")
                col.append((row, size))
            columns.append(col)
        rd.done()
        return "bubbles", CompactBubbles(columns)
    raise FormatError(off, f"unknown header '{head}' (expected pig, intervals, or bubbles)")


def format_pig(g: ProperIntervalGraph) -> str:
    return f"pig {g.n}\nmaxn {' '.join(str(m) for m in g.maxn[1:])}\n"


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_intervals(entries) -> str:
    lines = [f"intervals {len(entries)}"]
    for left, right in entries:
        lines.append(f"{_frac(Fraction(left))} {_frac(Fraction(right))}")
    return "\n".join(lines) + "\n"


def format_bubbles(cb: CompactBubbles) -> str:
    lines = [f"bubbles {len(cb.columns)}"]
    for j, col in enumerate(cb.columns, start=1):
        lines.append(f"col {j} {len(col)}")
        for row, size in col:
            lines.append(f"{row} {size}")
    return "\n".join(lines) + "\n"
