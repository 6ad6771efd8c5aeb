"""Laurent polynomial symbols on the unit circle and their text format.

Grammar (whitespace insensitive)::

    expr    := [sign] term (sign term)*
    term    := coeff "*" atom | coeff | atom
    atom    := "z" ["^" int] | "zbar" ["^" int]
    coeff   := real | real "i" | "i" | "(" [sign] part (sign part)* ")"
    part    := real | real "i" | "i"

``zbar^k`` is conj(z)^k = z^(-k) on the circle.  Exponents are nonnegative
integers; write ``zbar^k`` instead of ``z^-k``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

__all__ = [
    "Symbol",
    "SymbolSyntaxError",
    "parse_symbol",
    "format_symbol",
    "parse_complex",
    "format_complex",
]


class SymbolSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Symbol:
    """Finite map degree -> Fourier coefficient; zero coefficients are dropped."""

    coefficients: Mapping[int, complex]

    def __post_init__(self):
        clean = {int(k): complex(v) for k, v in self.coefficients.items() if complex(v) != 0}
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    def __getitem__(self, degree: int) -> complex:
        return self.coefficients.get(degree, 0j)

    @property
    def bandwidth(self) -> int:
        return max((abs(k) for k in self.coefficients), default=0)

    def __call__(self, z):
        """Evaluate on points of the unit circle."""
        return sum(c * z**k for k, c in self.coefficients.items()) if self.coefficients else 0 * z

    def __str__(self) -> str:
        return format_symbol(self)

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<zbar>zbar)
  | (?P<z>z)
  | (?P<i>i)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SymbolSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            tokens.append((value if kind == "op" else kind, value, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.index][0]

    @property
    def pos(self) -> int:
        return self.tokens[self.index][2]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def fail(self, expected: str):
        kind, value, pos = self.tokens[self.index]
        found = "end of input" if kind == "end" else repr(value)
        raise SymbolSyntaxError(f"expected {expected}, found {found}", pos)

    def expr(self) -> dict[int, complex]:
        coeffs: dict[int, complex] = {}
        sign = 1
        if self.kind in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        while True:
            degree, c = self.term()
            coeffs[degree] = coeffs.get(degree, 0j) + sign * c
            if self.kind in ("+", "-"):
                sign = -1 if self.advance()[0] == "-" else 1
            elif self.kind == "end":
                return coeffs
            else:
                self.fail("'+', '-' or end of input")

    def term(self) -> tuple[int, complex]:
        if self.kind in ("z", "zbar"):
            return self.atom(), 1 + 0j
        if self.kind in ("number", "i", "("):
            c = self.coeff()
            if self.kind == "*":
                self.advance()
                return self.atom(), c
            return 0, c
        self.fail("a coefficient, 'z' or 'zbar'")

    def atom(self) -> int:
        if self.kind not in ("z", "zbar"):
            self.fail("'z' or 'zbar'")
        base = self.advance()[0]
        exponent = 1
        if self.kind == "^":
            self.advance()
            if self.kind == "-":
                raise SymbolSyntaxError("negative exponent (use zbar^k for conj(z)^k)", self.pos)
            if self.kind != "number" or not self.tokens[self.index][1].isdigit():
                self.fail("a nonnegative integer exponent")
            exponent = int(self.advance()[1])
        return exponent if base == "z" else -exponent

    def part(self) -> complex:
        if self.kind == "i":
            self.advance()
            return 1j
        if self.kind == "number":
            value = float(self.advance()[1])
            if self.kind == "i":
                self.advance()
                return complex(0.0, value)
            return complex(value)
        self.fail("a number or 'i'")

    def coeff(self) -> complex:
        if self.kind != "(":
            return self.part()
        self.advance()
        sign = 1
        if self.kind in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        total = sign * self.part()
        while self.kind in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
            total += sign * self.part()
        if self.kind != ")":
            self.fail("')'")
        self.advance()
        return total


def parse_symbol(text: str) -> Symbol:
    """Parse the text form of a Laurent polynomial.

    >>> parse_symbol("z^2 + zbar^2").coefficients
    {-2: (1+0j), 2: (1+0j)}
    """
    return Symbol(_Parser(text).expr())


def parse_complex(text: str) -> complex:
    """Parse a complex literal such as ``-1``, ``i``, ``1+2i`` or ``(0.5-0.5i)``."""
    sym = parse_symbol(text)
    if any(k != 0 for k in sym.coefficients):
        raise SymbolSyntaxError("expected a constant, found a term in z", 0)
    return sym[0]


def _format_real(x: float) -> str:
    if x.is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def format_complex(c: complex) -> str:
    """Text form of ``c`` that parses back to exactly ``c``."""
    c = complex(c)
    re_, im = c.real, c.imag
    if im == 0:
        return _format_real(re_)
    imag = "i" if abs(im) == 1 else _format_real(abs(im)) + "i"
    if re_ == 0:
        return ("-" if im < 0 else "") + imag
    return f"({_format_real(re_)}{'-' if im < 0 else '+'}{imag})"


def _format_atom(degree: int) -> str:
    base = "z" if degree > 0 else "zbar"
    k = abs(degree)
    return base if k == 1 else f"{base}^{k}"


def format_symbol(phi: Symbol) -> str:
    """Canonical text form, highest degree first."""
    if not phi.coefficients:
        return "0"
    pieces = []
    for degree in sorted(phi.coefficients, reverse=True):
        c = phi.coefficients[degree]
        negative = c.imag == 0 and c.real < 0
        if negative:
            c = -c
        if degree == 0:
            body = format_complex(c)
        elif c == 1:
            body = _format_atom(degree)
        else:
            body = f"{format_complex(c)}*{_format_atom(degree)}"
        if body.startswith("-"):
            # pure negative imaginary coefficient
            negative, body = not negative, body[1:]
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)
