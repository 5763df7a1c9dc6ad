"""Text formats for monomials and ideals.

Pretty format (for humans):

    n=4; (x1*x2, x2^3*x3)       caret powers, * separators, 1-based indices
    n=3; ()                     the zero ideal
    n=3; (1)                    the unit ideal

Record format (for machines): a header line `n <count>` followed by one
generator per line as a whitespace-separated exponent vector.
"""
from __future__ import annotations

from .core import Monomial, MonomialIdeal, minimalize
from .errors import ParseError


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, message: str, pos: int | None = None):
        line, col = self._where(pos)
        raise ParseError(message, line, col)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _scan_monomial(sc: _Scanner, n: int) -> Monomial:
    sc.skip_ws()
    if sc.peek() == "1":
        sc.pos += 1
        return Monomial.one(n)
    exps = [0] * n
    while True:
        sc.skip_ws()
        if sc.peek() != "x":
            sc.fail("expected a variable like x1")
        sc.pos += 1
        mark = sc.pos
        idx = sc.integer()
        if not 1 <= idx <= n:
            sc.fail(f"variable index {idx} outside 1..{n}", mark)
        exp = 1
        sc.skip_ws()
        if sc.peek() == "^":
            sc.pos += 1
            exp = sc.integer()
        exps[idx - 1] += exp
        sc.skip_ws()
        if sc.peek() == "*":
            sc.pos += 1
            continue
        break
    return Monomial(tuple(exps))


def parse_monomial(text: str, n: int) -> Monomial:
    sc = _Scanner(text)
    m = _scan_monomial(sc, n)
    if not sc.at_end():
        sc.fail("unexpected trailing text")
    return m


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the pretty format into a canonical ideal."""
    sc = _Scanner(text)
    sc.expect("n")
    sc.expect("=")
    n = sc.integer()
    if n < 1:
        sc.fail("ambient variable count must be >= 1")
    sc.expect(";")
    sc.expect("(")
    gens: list[Monomial] = []
    sc.skip_ws()
    if sc.peek() != ")":
        while True:
            gens.append(_scan_monomial(sc, n))
            sc.skip_ws()
            if sc.peek() == ",":
                sc.pos += 1
                continue
            break
    sc.expect(")")
    if not sc.at_end():
        sc.fail("unexpected trailing text")
    return minimalize(gens, n)


def parse_records(text: str) -> MonomialIdeal:
    """Parse the line-oriented record format; lines starting with # are comments."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty record input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise ParseError("expected header line 'n <count>'")
    n = int(head[1])
    if n < 1:
        raise ParseError("ambient variable count must be >= 1")
    rows = []
    for ln_no, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != n:
            raise ParseError(f"expected {n} exponents, got {len(parts)}", ln_no)
        try:
            rows.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ParseError("exponents must be integers", ln_no) from None
        if any(e < 0 for e in rows[-1]):
            raise ParseError("exponents must be >= 0", ln_no)
    return minimalize(rows, n)


def parse_any(text: str) -> MonomialIdeal:
    """Sniff the format: records start with an 'n <count>' header, pretty with 'n='."""
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.split()[:1] == ["n"] and "=" not in line:
            return parse_records(text)
        break
    return parse_ideal(text)


def render_ideal(I: MonomialIdeal, fmt: str = "text") -> str:
    if fmt == "text":
        return repr(I)
    if fmt == "records":
        lines = [f"n {I.n}"]
        for row in I.exponent_matrix:
            lines.append(" ".join(str(int(e)) for e in row))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown ideal format {fmt!r}, expected text or records")
