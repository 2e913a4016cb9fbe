"""Exact arithmetic for binary Laurent polynomials and their ratios.

These are the scalars for the whole package: GF(2) coefficients attached
to integer powers of the delay operator D, with negative powers allowed.
A value is stored as an integer bit mask plus a shift (bit i of ``mask``
is the coefficient of D^(shift+i)), so ring operations reduce to
carry-less integer arithmetic. The public contract is the sparse support
set; the mask layout is an internal optimization.

RationalPoly is a reduced fraction of two LaurentPoly values. The
denominator is normalised to lowest exponent zero, which makes
"denominator == 1" coincide with "finite weight": any ratio whose
denominator is a plain monomial collapses back to a LaurentPoly.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import PolyParseError, ZeroDivisionPolyError


def _mask_divmod(a: int, b: int) -> tuple[int, int]:
    # ordinary GF(2)[D] division on bit masks, b != 0
    q = 0
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        s = a.bit_length() - 1 - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def _mask_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mask_divmod(a, b)[1]
    return a


def _mask_mul(a: int, b: int) -> int:
    acc = 0
    while a:
        low = a & -a
        acc ^= b << (low.bit_length() - 1)
        a ^= low
    return acc


def _mask_reverse(m: int) -> int:
    # bit-reverse within the mask's own length
    r = 0
    n = m.bit_length()
    for i in range(n):
        if (m >> i) & 1:
            r |= 1 << (n - 1 - i)
    return r


class LaurentPoly:
    """A binary Laurent polynomial in the delay operator D."""

    __slots__ = ("mask", "shift")

    def __init__(self, mask: int = 0, shift: int = 0):
        if mask:
            t = (mask & -mask).bit_length() - 1
            mask >>= t
            shift += t
        else:
            shift = 0
        self.mask = mask
        self.shift = shift

    @classmethod
    def zero(cls) -> LaurentPoly:
        return _ZERO

    @classmethod
    def one(cls) -> LaurentPoly:
        return _ONE

    @classmethod
    def D(cls, k: int = 1) -> LaurentPoly:
        """The monomial D^k."""
        return cls(1, k)

    @classmethod
    def from_support(cls, exps: Iterable[int]) -> LaurentPoly:
        exps = set(exps)
        if not exps:
            return _ZERO
        lo = min(exps)
        mask = 0
        for e in exps:
            mask |= 1 << (e - lo)
        return cls(mask, lo)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.shift + i for i in range(self.mask.bit_length()) if (self.mask >> i) & 1)

    def is_zero(self) -> bool:
        return self.mask == 0

    def is_one(self) -> bool:
        return self.mask == 1 and self.shift == 0

    def is_monomial(self) -> bool:
        return self.mask == 1

    @property
    def min_exp(self) -> int:
        if not self.mask:
            raise ValueError("zero polynomial has no exponents")
        return self.shift

    @property
    def max_exp(self) -> int:
        if not self.mask:
            raise ValueError("zero polynomial has no exponents")
        return self.shift + self.mask.bit_length() - 1

    @property
    def weight(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.mask == other.mask and self.shift == other.shift
        if isinstance(other, int) and other in (0, 1):
            return self.mask == other and self.shift == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.mask, self.shift))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.mask:
            return other
        if not other.mask:
            return self
        s = min(self.shift, other.shift)
        return LaurentPoly((self.mask << (self.shift - s)) ^ (other.mask << (other.shift - s)), s)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.mask or not other.mask:
            return _ZERO
        return LaurentPoly(_mask_mul(self.mask, other.mask), self.shift + other.shift)

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by D^k."""
        if not self.mask:
            return self
        return LaurentPoly(self.mask, self.shift + k)

    def reversed_time(self) -> LaurentPoly:
        """Substitute D -> D^-1."""
        if not self.mask:
            return self
        return LaurentPoly(_mask_reverse(self.mask), -(self.shift + self.mask.bit_length() - 1))

    def divmod(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Division with remainder, unique up to the D^k unit convention:
        the quotient absorbs the shift difference, the remainder keeps
        self's shift and has mask degree below the divisor's."""
        if not other.mask:
            raise ZeroDivisionPolyError("polynomial division by zero")
        if not self.mask:
            return _ZERO, _ZERO
        q, r = _mask_divmod(self.mask, other.mask)
        return LaurentPoly(q, self.shift - other.shift), LaurentPoly(r, self.shift)

    def divides(self, other: LaurentPoly) -> bool:
        """True when other is a Laurent multiple of self."""
        if not self.mask:
            return not other.mask
        if not other.mask:
            return True
        return _mask_divmod(other.mask, self.mask)[1] == 0

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod(other)
        if r.mask:
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def gcd(self, other: LaurentPoly) -> LaurentPoly:
        """Greatest common divisor, normalised to lowest exponent zero."""
        return LaurentPoly(_mask_gcd(self.mask, other.mask), 0)

    def is_palindromic(self) -> bool:
        return self == self.reversed_time()

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"


_ZERO = LaurentPoly(0, 0)
_ONE = LaurentPoly(1, 0)


def floor_fractional(f: LaurentPoly, l: int) -> LaurentPoly:
    """Null all fractional powers of a polynomial written in D^(1/l).

    The argument lives in the scaled-exponent ring where integer exponent e
    stands for D^(e/l); only exponents divisible by l survive and come back
    divided by l, so the result is an ordinary polynomial in D.
    """
    if l < 1:
        raise ValueError("expansion factor must be >= 1")
    if l == 1 or not f.mask:
        return f
    return LaurentPoly.from_support(e // l for e in f.support if e % l == 0)


class RationalPoly:
    """A reduced ratio of binary Laurent polynomials.

    Canonical form: the denominator is nonzero with lowest exponent zero
    (so it has a constant term), and shares no nontrivial factor with the
    numerator. The numerator may keep negative exponents. A value with
    denominator 1 round-trips to LaurentPoly losslessly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = _ONE):
        if not den.mask:
            raise ZeroDivisionPolyError("rational polynomial with zero denominator")
        if not num.mask:
            self.num = _ZERO
            self.den = _ONE
            return
        g = _mask_gcd(num.mask, den.mask)
        if g != 1:
            nmask = _mask_divmod(num.mask, g)[0]
            dmask = _mask_divmod(den.mask, g)[0]
        else:
            nmask, dmask = num.mask, den.mask
        self.num = LaurentPoly(nmask, num.shift - den.shift)
        self.den = LaurentPoly(dmask, 0)

    @classmethod
    def zero(cls) -> RationalPoly:
        return _RZERO

    @classmethod
    def one(cls) -> RationalPoly:
        return _RONE

    @classmethod
    def of(cls, value: "RationalPoly | LaurentPoly | int | str") -> RationalPoly:
        """Coerce common scalar spellings into a RationalPoly."""
        if isinstance(value, RationalPoly):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        if isinstance(value, int):
            if value in (0, 1):
                return cls(LaurentPoly(value))
            raise ValueError("only 0 and 1 coerce to GF(2) scalars")
        if isinstance(value, str):
            return parse_rational(value)
        raise TypeError(f"cannot interpret {value!r} as a rational polynomial")

    def is_zero(self) -> bool:
        return self.num.mask == 0

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_poly(self) -> bool:
        """True when the value is a plain Laurent polynomial (finite weight)."""
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} has a nontrivial denominator")
        return self.num

    def is_monomial(self) -> bool:
        return self.den.is_one() and self.num.is_monomial()

    def __bool__(self) -> bool:
        return self.num.mask != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (LaurentPoly, int)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: RationalPoly) -> RationalPoly:
        if not self.num.mask:
            return other
        if not other.num.mask:
            return self
        return RationalPoly(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: RationalPoly) -> RationalPoly:
        if not self.num.mask or not other.num.mask:
            return _RZERO
        return RationalPoly(self.num * other.num, self.den * other.den)

    def inverse(self) -> RationalPoly:
        if not self.num.mask:
            raise ZeroDivisionPolyError("inverse of the zero polynomial")
        return RationalPoly(self.den, self.num)

    def __truediv__(self, other: RationalPoly) -> RationalPoly:
        return self * other.inverse()

    def reversed_time(self) -> RationalPoly:
        return RationalPoly(self.num.reversed_time(), self.den.reversed_time())

    def __str__(self) -> str:
        return format_rational(self)

    def __repr__(self) -> str:
        return f"RationalPoly({format_rational(self)!r})"


_RZERO = RationalPoly(_ZERO)
_RONE = RationalPoly(_ONE)


# ---------------------------------------------------------------------------
# Text grammar: terms joined by '+', term = 1 | D | D^k | D^-k;
# rational = poly | (poly)/(poly). Whitespace insignificant. Zero = 0.

_TERM_RE = re.compile(r"1|D(\^-?\d+)?|0")


def format_laurent(f: LaurentPoly) -> str:
    if not f.mask:
        return "0"
    parts = []
    for e in sorted(f.support):
        if e == 0:
            parts.append("1")
        elif e == 1:
            parts.append("D")
        else:
            parts.append(f"D^{e}")
    return "+".join(parts)


def format_rational(v: RationalPoly) -> str:
    if v.den.is_one():
        return format_laurent(v.num)
    return f"({format_laurent(v.num)})/({format_laurent(v.den)})"


def _parse_poly_body(text: str, base: int) -> LaurentPoly:
    exps: set[int] = set()
    pos = 0
    expect_term = True
    while pos < len(text):
        ch = text[pos]
        if ch == "+":
            if expect_term:
                raise PolyParseError("unexpected '+'", base + pos)
            expect_term = True
            pos += 1
            continue
        m = _TERM_RE.match(text, pos)
        if not m or not expect_term:
            raise PolyParseError(f"bad polynomial term at {text[pos:pos + 6]!r}", base + pos)
        tok = m.group(0)
        if tok == "0":
            if len(text) != 1:
                raise PolyParseError("'0' must stand alone", base + pos)
            return _ZERO
        if tok == "1":
            e = 0
        elif tok == "D":
            e = 1
        else:
            e = int(tok[2:])
        exps ^= {e}
        expect_term = False
        pos = m.end()
    if expect_term:
        raise PolyParseError("dangling '+' or empty polynomial", base + pos)
    return LaurentPoly.from_support(exps)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial from the package text grammar."""
    stripped = "".join(text.split())
    if not stripped:
        raise PolyParseError("empty polynomial", 0)
    return _parse_poly_body(stripped, 0)


def parse_rational(text: str) -> RationalPoly:
    """Parse a polynomial or a (num)/(den) ratio."""
    stripped = "".join(text.split())
    if not stripped:
        raise PolyParseError("empty polynomial", 0)
    if stripped.startswith("("):
        m = re.fullmatch(r"\(([^()]*)\)/\(([^()]*)\)", stripped)
        if not m:
            raise PolyParseError("rational must look like (poly)/(poly)", 0)
        num = _parse_poly_body(m.group(1), 1)
        den = _parse_poly_body(m.group(2), len(m.group(1)) + 4)
        if not den.mask:
            raise PolyParseError("zero denominator", len(m.group(1)) + 4)
        return RationalPoly(num, den)
    return RationalPoly(_parse_poly_body(stripped, 0))


def poly(text: str) -> LaurentPoly:
    """Shorthand used heavily in tests."""
    return parse_laurent(text)


def rat(text: str) -> RationalPoly:
    """Shorthand used heavily in tests."""
    return parse_rational(text)
