"""Exact scalar arithmetic over the rationals and prime fields.

Every algebraic computation in the package runs over one of these two
field families.  Rational scalars are plain :class:`fractions.Fraction`
values; prime-field scalars are :class:`FpElement` wrappers around an
integer residue.  A field object supplies construction, parsing,
formatting and root extraction; the elements themselves carry the usual
operators, so generic code can mix the two families freely as long as it
never crosses fields.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Union

Scalar = Union[Fraction, "FpElement"]


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """A residue modulo a prime, with field operators."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> Optional["FpElement"]:
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError(f"mixed prime fields F{self.p} and F{other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return FpElement(self.v * pow(o.v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __pow__(self, n: int):
        if n < 0:
            if self.v == 0:
                raise ZeroDivisionError(f"inverting zero in F{self.p}")
            return FpElement(pow(self.v, -n * (self.p - 2), self.p), self.p)
        return FpElement(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}"


def _int_nth_root(x: int, n: int) -> int:
    """Floor of the n-th root of a nonnegative integer."""
    if x < 2:
        return x
    if n == 2:
        return isqrt(x)
    r = 1 << ((x.bit_length() + n - 1) // n)
    while r**n > x:
        r = (r * (n - 1) + x // r ** (n - 1)) // n
    while (r + 1) ** n <= x:
        r += 1
    return r


class Rationals:
    """The field of rational numbers; elements are ``Fraction`` values."""

    name = "Q"
    char = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, s: str) -> Fraction:
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational scalar {s!r}") from exc

    def fmt(self, x: Fraction) -> str:
        return str(x)

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def sqrt(self, x: Fraction) -> Optional[Fraction]:
        return self.nth_root(x, 2)

    def nth_root(self, x: Fraction, n: int) -> Optional[Fraction]:
        """An exact n-th root, or None when no rational root exists."""
        if n <= 0:
            raise FieldError("root index must be positive")
        if x == 0:
            return Fraction(0)
        neg = x < 0
        if neg and n % 2 == 0:
            return None
        num, den = abs(x.numerator), x.denominator
        rn, rd = _int_nth_root(num, n), _int_nth_root(den, n)
        if rn**n != num or rd**n != den:
            return None
        root = Fraction(rn, rd)
        return -root if neg else root

    def random(self, rng, nonzero: bool = False) -> Fraction:
        while True:
            x = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            if x or not nonzero:
                return x

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


QQ = Rationals()


class PrimeField:
    """The prime field F_p for a prime p < 2**31."""

    def __init__(self, p: int):
        if p >= 1 << 31 or not _is_prime(p):
            raise FieldError(f"{p} is not a prime below 2**31")
        self.p = p
        self.name = f"F{p}"
        self.char = p

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def of(self, n: int) -> FpElement:
        return FpElement(n, self.p)

    def parse(self, s: str) -> FpElement:
        s = s.strip()
        try:
            if "/" in s:
                a, b = s.split("/", 1)
                return self.of(int(a)) / self.of(int(b))
            return self.of(int(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad scalar {s!r} in {self.name}") from exc

    def fmt(self, x: FpElement) -> str:
        return str(x.v)

    def contains(self, x) -> bool:
        return isinstance(x, FpElement) and x.p == self.p

    def sqrt(self, x: FpElement) -> Optional[FpElement]:
        """Tonelli-Shanks; None when x is a non-residue."""
        p = self.p
        a = x.v
        if a == 0:
            return self.zero
        if p == 2:
            return self.of(a)
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            return self.of(pow(a, (p + 1) // 4, p))
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return self.of(r)

    def nth_root(self, x: FpElement, n: int) -> Optional[FpElement]:
        """An n-th root in F_p, or None when none exists.

        Complete for n <= 2 and for any n when p is small enough to scan;
        for larger p it handles the gcd(n, p-1) = 1 case exactly and
        refuses the rest.
        """
        if n <= 0:
            raise FieldError("root index must be positive")
        p = self.p
        a = x.v
        if n == 1 or a == 0:
            return x
        if n == 2:
            return self.sqrt(x)
        d = gcd(n, p - 1)
        if pow(a, (p - 1) // d, p) != 1:
            return None
        if d == 1:
            return self.of(pow(a, pow(n % (p - 1), -1, p - 1), p))
        if p <= 100_000:
            for y in range(1, p):
                if pow(y, n, p) == a:
                    return self.of(y)
            return None
        raise FieldError(
            f"{n}-th roots in {self.name} are only decided for p <= 100000"
        )

    def random(self, rng, nonzero: bool = False) -> FpElement:
        lo = 1 if nonzero else 0
        return self.of(rng.randint(lo, self.p - 1))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return self.name


def field_by_name(name: str):
    """Resolve a field descriptor such as ``Q`` or ``F5``."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("F"):
        try:
            return PrimeField(int(name[1:]))
        except ValueError as exc:
            raise FieldError(f"unknown field {name!r}") from exc
    raise FieldError(f"unknown field {name!r}")
