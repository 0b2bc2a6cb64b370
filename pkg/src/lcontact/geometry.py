"""Exact rational plane geometry for axis-aligned segments.

All coordinates are `fractions.Fraction`; every predicate is exact.
"""
from __future__ import annotations

from fractions import Fraction

Point = tuple[Fraction, Fraction]


def frac(value) -> Fraction:
    """Parse a rational from an int, a Fraction, or a "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if "/" in value:
            num, den = value.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(value))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def frac_str(value: Fraction) -> str:
    """Serialize a rational as an exact "p/q" string."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def point(x, y) -> Point:
    return (frac(x), frac(y))


class Segment:
    """Closed axis-aligned segment with exact endpoints.

    `a` is the lexicographically smaller endpoint so equality is canonical.
    """

    __slots__ = ("a", "b", "axis")

    def __init__(self, p: Point, q: Point):
        if p == q:
            raise ValueError("degenerate segment")
        if p[0] == q[0]:
            self.axis = "v"
        elif p[1] == q[1]:
            self.axis = "h"
        else:
            raise ValueError("segment is not axis-aligned")
        self.a, self.b = (p, q) if p <= q else (q, p)

    def __repr__(self):
        return f"Segment({self.a}, {self.b})"

    def __eq__(self, other):
        return isinstance(other, Segment) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def contains(self, p: Point) -> bool:
        if self.axis == "v":
            return p[0] == self.a[0] and self.a[1] <= p[1] <= self.b[1]
        return p[1] == self.a[1] and self.a[0] <= p[0] <= self.b[0]

    def contains_interior(self, p: Point) -> bool:
        return self.contains(p) and p != self.a and p != self.b

    def length(self) -> Fraction:
        return (self.b[0] - self.a[0]) + (self.b[1] - self.a[1])


def intersect(s: Segment, t: Segment):
    """Classify the intersection of two closed axis-aligned segments.

    Returns None, ("point", p), or ("overlap", (p, q)) for a shared
    positive-length collinear piece.
    """
    if s.axis == t.axis:
        if s.axis == "h":
            if s.a[1] != t.a[1]:
                return None
            lo, hi = max(s.a[0], t.a[0]), min(s.b[0], t.b[0])
            if lo > hi:
                return None
            if lo == hi:
                return ("point", (lo, s.a[1]))
            return ("overlap", ((lo, s.a[1]), (hi, s.a[1])))
        if s.a[0] != t.a[0]:
            return None
        lo, hi = max(s.a[1], t.a[1]), min(s.b[1], t.b[1])
        if lo > hi:
            return None
        if lo == hi:
            return ("point", (s.a[0], lo))
        return ("overlap", ((s.a[0], lo), (s.a[0], hi)))
    h, v = (s, t) if s.axis == "h" else (t, s)
    x, y = v.a[0], h.a[1]
    if h.a[0] <= x <= h.b[0] and v.a[1] <= y <= v.b[1]:
        return ("point", (x, y))
    return None
