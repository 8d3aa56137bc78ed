"""Exact arithmetic and comparison for quadratic surds (p + q*sqrt(d)) / r.

Accumulation points of embedding functions are quadratic irrationals, and
several bound lemmas need their exact position relative to rational
thresholds.  Everything here decides signs by integer arithmetic; floating
point appears only in the optional __float__ convenience.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .render import decimal_str, floor_log10, place_decimal

_FLOOR_BIT_CAP = 1 << 14  # refinement bound for floor/log searches; plenty for quadratics


def _square_split(n: int) -> tuple[int, int]:
    """Write n >= 0 as f*f*d with d squarefree; returns (f, d)."""
    f, d, k = 1, n, 2
    while k * k <= d:
        kk = k * k
        while d % kk == 0:
            d //= kk
            f *= k
        k += 1
    return f, d


class QuadraticSurd:
    """The real number (p + q*sqrt(d)) / r, normalized.

    Canonical form: r > 0, gcd(p, q, r) == 1, d squarefree, and d == 0
    exactly when the value is rational (then q == 0).  Two surds are equal
    iff their canonical tuples match, so equality and hashing are structural.
    Arithmetic mixes freely with ints and Fractions; combining two
    irrational surds requires a common radicand.
    """

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int = 0, d: int = 0, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("surd denominator is zero")
        if d < 0:
            raise ValueError("negative radicand")
        if r < 0:
            p, q, r = -p, -q, -r
        if q == 0 or d == 0:
            q, d = 0, 0
        else:
            f, d = _square_split(d)
            q *= f
            if d == 1:
                p, q, d = p + q, 0, 0
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    def __setattr__(self, *args):
        raise AttributeError("QuadraticSurd is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rational(cls, x: Fraction | int) -> "QuadraticSurd":
        x = Fraction(x)
        return cls(x.numerator, 0, 0, x.denominator)

    @classmethod
    def sqrt_of(cls, x: Fraction | int) -> "QuadraticSurd":
        """Exact square root of a nonnegative rational: sqrt(n/m) = sqrt(n*m)/m."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("square root of a negative rational")
        return cls(0, 1, x.numerator * x.denominator, x.denominator)

    # -- predicates and conversion ----------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def _sign(self) -> int:
        """Exact sign of the value (r > 0, so only p + q*sqrt(d) matters)."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        s = p * p - q * q * d
        s = (s > 0) - (s < 0)
        return s if p > 0 else -s

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "QuadraticSurd | None":
        if isinstance(other, QuadraticSurd):
            if self.d and other.d and self.d != other.d:
                raise ValueError("cannot combine surds over different radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d or o.d
        return QuadraticSurd(
            self.p * o.r + o.p * self.r,
            self.q * o.r + o.q * self.r,
            d,
            self.r * o.r,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d or o.d
        return QuadraticSurd(
            self.p * o.p + self.q * o.q * d,
            self.p * o.q + self.q * o.p,
            d,
            self.r * o.r,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return QuadraticSurd(
            self.p * other.denominator,
            self.q * other.denominator,
            self.d,
            self.r * other.numerator,
        )

    def __abs__(self):
        return -self if self._sign() < 0 else self

    # -- comparisons --------------------------------------------------------

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare surd with {type(other).__name__}")
        return (self - o)._sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadraticSurd)):
            return self._cmp(other) == 0
        return NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- enclosures and rendering --------------------------------------------

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational bracket [lo, hi] with sqrt(d) resolved to 2**-bits."""
        if self.is_rational:
            v = Fraction(self.p, self.r)
            return v, v
        s = isqrt(self.d << (2 * bits))
        lo_s = Fraction(s, 1 << bits)
        hi_s = Fraction(s + 1, 1 << bits)
        if self.q < 0:
            lo_s, hi_s = hi_s, lo_s
        return (self.p + self.q * lo_s) / self.r, (self.p + self.q * hi_s) / self.r

    def __floor__(self) -> int:
        if self.is_rational:
            return self.p // self.r
        bits = 32
        while bits <= _FLOOR_BIT_CAP:
            lo, hi = self.enclosure(bits)
            if lo.__floor__() == hi.__floor__():
                return lo.__floor__()
            bits *= 2
        raise ArithmeticError("floor did not resolve; value suspiciously near an integer")

    def __float__(self) -> float:
        lo, hi = self.enclosure(64)
        return float((lo + hi) / 2)

    def decimal(self, digits: int = 12) -> str:
        """Exact half-up rounding to `digits` significant digits."""
        if self.is_rational:
            return decimal_str(self.as_fraction(), digits)
        sign = self._sign()
        mag = abs(self)
        bits = 32
        while True:
            lo, hi = mag.enclosure(bits)
            if lo > 0 and floor_log10(lo) == floor_log10(hi):
                e = floor_log10(lo)
                break
            bits *= 2
            if bits > _FLOOR_BIT_CAP:
                raise ArithmeticError("magnitude did not resolve")
        scaled = mag * Fraction(10) ** (digits - 1 - e)
        m = scaled.__floor__()
        # the value is irrational here, so it is never exactly halfway
        if (scaled - m)._cmp(Fraction(1, 2)) > 0:
            m += 1
        if m >= 10**digits:
            m //= 10
            e += 1
        return ("-" if sign < 0 else "") + place_decimal(str(m), e)

    def __str__(self) -> str:
        if self.is_rational:
            return str(Fraction(self.p, self.r))
        root = f"√{self.d}"
        if self.q == 1:
            qpart = root
        elif self.q == -1:
            qpart = "-" + root
        else:
            qpart = f"{self.q}{root}"
        if self.p == 0:
            core = qpart
        elif self.q < 0:
            core = f"{self.p}-{qpart.lstrip('-')}"
        else:
            core = f"{self.p}+{qpart}"
        if self.r == 1:
            return core
        return f"({core})/{self.r}"

    def __repr__(self) -> str:
        return f"QuadraticSurd({self.p}, {self.q}, {self.d}, {self.r})"
