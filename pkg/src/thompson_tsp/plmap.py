"""Piecewise-linear dyadic homeomorphisms of [0, 1] under the right action.

A product ``f g`` acts on a point ``t`` as ``(t)fg = ((t)f)g``: the left
factor is applied first.  Every map is stored in canonical form (no
breakpoint between two segments of equal slope), so equality of group
elements is structural equality.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .dyadic import ONE, ZERO, Dyadic, log2_ratio


class PLMap:
    """A canonical breakpoint list ``(x_i, y_i)`` from ``(0, 0)`` to ``(1, 1)``.

    ``slopes[i]`` is the base-2 logarithm of the slope on ``[x_i, x_{i+1}]``.
    """

    __slots__ = ("xs", "ys", "slopes", "_key", "_hash")

    def __init__(self, xs: Sequence[Dyadic], ys: Sequence[Dyadic], slopes: Sequence[int]):
        # Trusted constructor; use from_points to validate external data.
        self.xs = tuple(xs)
        self.ys = tuple(ys)
        self.slopes = tuple(slopes)
        self._key = None
        self._hash = None

    @classmethod
    def from_points(cls, points: Iterable[tuple]) -> "PLMap":
        """Validate and canonicalize a breakpoint list.

        Coordinates may be ``Dyadic``, ``Fraction``, ``int`` or strings such as ``"3/4"``.
        """
        pts = [(_as_dyadic(x), _as_dyadic(y)) for x, y in points]
        if len(pts) < 2:
            raise ValueError("a PL map needs at least the endpoints (0,0) and (1,1)")
        if pts[0] != (ZERO, ZERO) or pts[-1] != (ONE, ONE):
            raise ValueError("a PL map must start at (0,0) and end at (1,1)")
        xs, ys, slopes = [pts[0][0]], [pts[0][1]], []
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if not (x0 < x1 and y0 < y1):
                raise ValueError(f"breakpoints must increase strictly: ({x0},{y0}) -> ({x1},{y1})")
            s = log2_ratio(y1 - y0, x1 - x0)
            if slopes and slopes[-1] == s:
                xs[-1], ys[-1] = x1, y1
            else:
                xs.append(x1)
                ys.append(y1)
                slopes.append(s)
        return cls(xs, ys, slopes)

    @property
    def key(self) -> tuple:
        """Flat integer tuple identifying the map; used for hashing and equality."""
        if self._key is None:
            k = []
            for x, y in zip(self.xs, self.ys):
                k.extend((x.numerator, x.exponent, y.numerator, y.exponent))
            self._key = tuple(k)
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, PLMap):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key)
        return self._hash

    def __len__(self) -> int:
        return len(self.xs)

    def __mul__(self, other: "PLMap") -> "PLMap":
        return pl_compose(self, other)

    def __call__(self, t) -> Dyadic:
        return pl_evaluate(self, t)

    @property
    def breakpoints(self) -> list[tuple[Dyadic, Dyadic]]:
        return list(zip(self.xs, self.ys))

    def is_identity(self) -> bool:
        return len(self.xs) == 2

    def __repr__(self) -> str:
        pts = ", ".join(f"({x},{y})" for x, y in zip(self.xs, self.ys))
        return f"PLMap[{pts}]"

    def to_json(self) -> list[list[int]]:
        return [[x.numerator, x.exponent, y.numerator, y.exponent] for x, y in zip(self.xs, self.ys)]

    @classmethod
    def from_json(cls, data) -> "PLMap":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_points((Dyadic(a, b), Dyadic(c, d)) for a, b, c, d in data)


def _as_dyadic(value) -> Dyadic:
    if isinstance(value, Dyadic):
        return value
    if isinstance(value, str):
        return Dyadic.parse(value)
    return Dyadic.from_fraction(value)


IDENTITY = PLMap((ZERO, ONE), (ZERO, ONE), (0,))


def _on_segment(x0: Dyadic, y0: Dyadic, s: int, t: Dyadic) -> Dyadic:
    if s == 0:
        if x0.numerator == y0.numerator and x0.exponent == y0.exponent:
            return t
        return y0 + (t - x0)
    return y0 + (t - x0).scale2(s)


def pl_compose(f: PLMap, g: PLMap) -> PLMap:
    """Return ``fg``: apply ``f`` first, then ``g``."""
    if len(f.xs) == 2:
        return g
    if len(g.xs) == 2:
        return f
    fx, fy, fs = f.xs, f.ys, f.slopes
    gx, gy, gs = g.xs, g.ys, g.slopes
    nf, ng = len(fx), len(gx)
    xs, ys, slopes = [ZERO], [ZERO], []
    a = b = 1
    # Walk the merged breakpoints of f's range and g's domain; at each
    # step the open interval ahead lies in f segment a-1 and g segment b-1.
    while a < nf and b < ng:
        seg = fs[a - 1] + gs[b - 1]
        ya, xb = fy[a], gx[b]
        if ya == xb:
            px, py = fx[a], gy[b]
            a += 1
            b += 1
        elif ya < xb:
            px = fx[a]
            py = _on_segment(gx[b - 1], gy[b - 1], gs[b - 1], ya)
            a += 1
        else:
            px = fx[a - 1] + (xb - fy[a - 1]).scale2(-fs[a - 1])
            py = gy[b]
            b += 1
        if slopes and slopes[-1] == seg:
            xs[-1], ys[-1] = px, py
        else:
            xs.append(px)
            ys.append(py)
            slopes.append(seg)
    return PLMap(xs, ys, slopes)


def pl_invert(f: PLMap) -> PLMap:
    return PLMap(f.ys, f.xs, [-s for s in f.slopes])


def pl_evaluate(f: PLMap, t) -> Dyadic:
    """Exact image ``(t)f`` of a point of the unit interval."""
    t = _as_dyadic(t)
    if t < ZERO or t > ONE:
        raise ValueError(f"point {t} lies outside [0, 1]")
    i = bisect_right(f.xs, t) - 1
    if i == len(f.slopes):
        return ONE
    return _on_segment(f.xs[i], f.ys[i], f.slopes[i], t)


def pl_power(f: PLMap, k: int) -> PLMap:
    if k < 0:
        f, k = pl_invert(f), -k
    result, base = IDENTITY, f
    while k:
        if k & 1:
            result = pl_compose(result, base)
        k >>= 1
        if k:
            base = pl_compose(base, base)
    return result


def pl_product(maps: Iterable[PLMap]) -> PLMap:
    result = IDENTITY
    for m in maps:
        result = pl_compose(result, m)
    return result


def conjugate(a: PLMap, b: PLMap) -> PLMap:
    """``a^b = b^{-1} a b``."""
    return pl_product((pl_invert(b), a, b))


def commutator(a: PLMap, b: PLMap) -> PLMap:
    """``[a, b] = a^{-1} b^{-1} a b``."""
    return pl_product((pl_invert(a), pl_invert(b), a, b))


def commute(a: PLMap, b: PLMap) -> bool:
    return pl_compose(a, b) == pl_compose(b, a)


def support(f: PLMap) -> list[tuple[Fraction, Fraction]]:
    """Maximal open intervals on which ``(t)f != t``.

    Endpoints are exact rationals.  They are dyadic at breakpoints but an
    isolated fixed point inside a segment of slope ``2**k != 1`` can have
    an odd denominator, so endpoints are returned as ``Fraction``.
    """
    fixed: list[tuple[Fraction, Fraction]] = []
    for i, s in enumerate(f.slopes):
        a, b = f.xs[i].to_fraction(), f.xs[i + 1].to_fraction()
        da = f.ys[i].to_fraction() - a
        db = f.ys[i + 1].to_fraction() - b
        if s == 0 and da == 0:
            fixed.append((a, b))
            continue
        if da == 0:
            fixed.append((a, a))
        if db == 0:
            fixed.append((b, b))
        if da * db < 0:
            r = a + da * (b - a) / (da - db)
            fixed.append((r, r))
    fixed.sort()
    out = []
    reach = Fraction(0)
    for lo, hi in fixed:
        if lo > reach:
            out.append((reach, lo))
        if hi > reach:
            reach = hi
    return out


def is_identity_on(f: PLMap, interval) -> bool:
    """True iff ``(t)f == t`` for every ``t`` in the closed interval."""
    lo, hi = (_as_dyadic(v) for v in interval)
    if lo > hi:
        raise ValueError(f"malformed interval [{lo}, {hi}]")
    if lo < ZERO or hi > ONE:
        raise ValueError(f"interval [{lo}, {hi}] leaves [0, 1]")
    if pl_evaluate(f, lo) != lo or pl_evaluate(f, hi) != hi:
        return False
    return all(y == x for x, y in zip(f.xs, f.ys) if lo < x < hi)


def agree_on(f: PLMap, g: PLMap, interval) -> bool:
    """True iff ``f`` and ``g`` coincide on the closed interval."""
    return is_identity_on(pl_compose(f, pl_invert(g)), interval)


def breakpoints_are_valid(f: PLMap) -> bool:
    """Recheck every PLMap invariant from scratch."""
    try:
        again = PLMap.from_points(zip(f.xs, f.ys))
    except ValueError:
        return False
    return again.key == f.key and list(again.slopes) == list(f.slopes)
