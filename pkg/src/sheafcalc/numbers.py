"""Exact arithmetic helpers: rationals and quadratic values a + b*sqrt(n).

Euclidean support minima of rational discs and ball dilations live in
Q(sqrt(n)) with n = p^2 + q^2 fixed per integer direction (p, q).  Keeping
them symbolic makes every level comparison and every unit normalization
exact; floats appear only in reports.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction


def rat(x) -> Fraction:
    """Parse a rational from int/str/Fraction ('3/2', '-1', 2)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted where exact rationals are required: %r" % (x,))
    raise TypeError("cannot interpret %r as a rational" % (x,))


def _sqrt_bounds(n: int, prec: int):
    """Rational lo <= sqrt(n) <= hi with hi - lo = 2^-prec."""
    scale = 1 << prec
    lo = math.isqrt(n * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def _sign_a_plus_b_sqrt(a: Fraction, b: Fraction, n: int) -> int:
    # sign of a + b*sqrt(n), n > 0 not a perfect square (b may be 0)
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # mixed signs: compare a^2 with b^2 * n
    lhs = a * a
    rhs = b * b * n
    if lhs == rhs:
        return 0
    if a > 0:  # b < 0: positive iff a^2 > b^2 n
        return 1 if lhs > rhs else -1
    return 1 if rhs > lhs else -1


class QuadVal:
    """Exact value a + b*sqrt(n) with a, b rational and n a nonnegative int.

    Canonical form: n == 0 iff b == 0; perfect-square radicals are folded
    into the rational part.  Values with different radicals can still be
    compared exactly (at most two radicals ever meet in one comparison).
    """

    __slots__ = ("a", "b", "n")

    def __init__(self, a, b=0, n=0):
        a = rat(a)
        b = rat(b)
        n = int(n)
        if n < 0:
            raise ValueError("radicand must be nonnegative")
        if b != 0 and n > 0:
            r = math.isqrt(n)
            if r * r == n:
                a += b * r
                b = Fraction(0)
                n = 0
        if b == 0:
            n = 0
        elif n == 0:
            b = Fraction(0)
        self.a = a
        self.b = b
        self.n = n

    # -- constructors -------------------------------------------------
    @staticmethod
    def of(x) -> "QuadVal":
        if isinstance(x, QuadVal):
            return x
        return QuadVal(rat(x))

    @staticmethod
    def sqrt(n: int) -> "QuadVal":
        return QuadVal(0, 1, n)

    # -- predicates ---------------------------------------------------
    def is_rational(self) -> bool:
        return self.b == 0

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("%s is irrational" % (self,))
        return self.a

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        o = QuadVal.of(other)
        if self.b == 0 or o.b == 0 or self.n == o.n:
            n = self.n if self.b != 0 else o.n
            return QuadVal(self.a + o.a, self.b + o.b, n)
        raise ValueError("cannot add values over different radicals")

    __radd__ = __add__

    def __neg__(self):
        return QuadVal(-self.a, -self.b, self.n)

    def __sub__(self, other):
        return self + (-QuadVal.of(other))

    def __rsub__(self, other):
        return QuadVal.of(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, QuadVal):
            if other.b == 0:
                other = other.a
            elif self.b == 0:
                self, other = other, self.a
            elif self.n == other.n:
                return QuadVal(
                    self.a * other.a + self.b * other.b * self.n,
                    self.a * other.b + self.b * other.a,
                    self.n,
                )
            else:
                raise ValueError("cannot multiply values over different radicals")
        q = rat(other)
        return QuadVal(self.a * q, self.b * q, self.n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = rat(other)
        return QuadVal(self.a / q, self.b / q, self.n)

    def div_sqrt(self, n: int) -> "QuadVal":
        """Exact value of self / sqrt(n); self must live over sqrt(n) or be rational."""
        if n <= 0:
            raise ValueError("radicand must be positive")
        r = math.isqrt(n)
        if r * r == n:
            return QuadVal(self.a / r, self.b / r, self.n)
        if self.b == 0:
            # a / sqrt(n) = (a/n) sqrt(n)
            return QuadVal(0, self.a / n, n)
        if self.n != n:
            raise ValueError("mixed radicals in div_sqrt")
        return QuadVal(self.b, self.a / n, n)

    # -- comparison ---------------------------------------------------
    def _diff_sign(self, other) -> int:
        o = QuadVal.of(other)
        if self.b == 0 or o.b == 0 or self.n == o.n:
            n = self.n if self.b != 0 else o.n
            return _sign_a_plus_b_sqrt(self.a - o.a, self.b - o.b, n)
        # r + b1 sqrt(n1) - b2 sqrt(n2), both radicals live
        r = self.a - o.a
        b1, n1, b2, n2 = self.b, self.n, o.b, o.n
        # exact zero test: needs r == 0 and b1 sqrt(n1) == b2 sqrt(n2)
        if r == 0 and (b1 > 0) == (b2 > 0) and b1 * b1 * n1 == b2 * b2 * n2:
            return 0
        prec = 8
        while True:
            lo1, hi1 = _sqrt_bounds(n1, prec)
            lo2, hi2 = _sqrt_bounds(n2, prec)
            t1 = (b1 * lo1, b1 * hi1) if b1 >= 0 else (b1 * hi1, b1 * lo1)
            t2 = (-b2 * hi2, -b2 * lo2) if b2 >= 0 else (-b2 * lo2, -b2 * hi2)
            lo = r + t1[0] + t2[0]
            hi = r + t1[1] + t2[1]
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
            if prec > 4096:  # value is provably nonzero, so this cannot happen
                raise ArithmeticError("sign refinement failed to converge")

    def __eq__(self, other):
        if not isinstance(other, (QuadVal, Fraction, int)):
            return NotImplemented
        return self._diff_sign(other) == 0

    def __lt__(self, other):
        return self._diff_sign(other) < 0

    def __le__(self, other):
        return self._diff_sign(other) <= 0

    def __gt__(self, other):
        return self._diff_sign(other) > 0

    def __ge__(self, other):
        return self._diff_sign(other) >= 0

    def __hash__(self):
        return hash((self.a, self.b, self.n))

    def sign(self) -> int:
        return _sign_a_plus_b_sqrt(self.a, self.b, self.n)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- output -------------------------------------------------------
    def __float__(self):
        if self.b == 0:
            return float(self.a)
        return float(self.a) + float(self.b) * math.sqrt(self.n)

    def exact_str(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "%s*sqrt(%d)" % (self.b, self.n)
        sep = "+" if self.b > 0 else "-"
        return "%s%s%s*sqrt(%d)" % (self.a, sep, abs(self.b), self.n)

    def __repr__(self):
        return "QuadVal(%s)" % self.exact_str()


def val_min(values):
    it = iter(values)
    best = next(it)
    for v in it:
        if QuadVal.of(v) < QuadVal.of(best):
            best = v
    return best


def val_max(values):
    it = iter(values)
    best = next(it)
    for v in it:
        if QuadVal.of(v) > QuadVal.of(best):
            best = v
    return best


def val_cmp(x, y) -> int:
    return QuadVal.of(x)._diff_sign(y)
