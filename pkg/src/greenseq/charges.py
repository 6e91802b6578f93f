"""Central charges: exact rational (a, b) data and derived views.

A charge Z on a quiver with n vertices is a pair of rational vectors
a, b of length n with every b_i > 0.  Everything downstream is driven by
the cumulative sums

    x_t = b_1 + ... + b_t,      y_t = a_1 + ... + a_t,

extended over the universal cover for the cyclic kinds.  The point
p_t = (x_t, y_t) is the t-th dual vertex (chord view); the line
f_t(s) = y_t - s * x_t is the t-th wire (wire view); the slope of a
module M(i, j) is (y_j - y_i)/(x_j - x_i), which is also the slope of
the chord p_i p_j and the abscissa where wires i and j cross.

All arithmetic is exact.  Comparisons hot enough to matter run on an
integer rescaling of the cumulative sums (:class:`IntContext`), which is
an exact clearing of denominators, never an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from .errors import InvalidCharge, InvalidQuiver
from .quivers import Quiver, QuiverKind, StringModule

RationalLike = Fraction | int | str


def as_fraction(v: RationalLike) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise InvalidCharge(f"not a rational value: {v!r}")


class IntContext:
    """Denominator-cleared cumulative sums for fast exact comparisons.

    ``ya[t] = la * y_t`` and ``xb[t] = lb * x_t`` are integers for
    0 <= t <= span.  Slope comparisons cross-multiply, so the two scale
    factors cancel; nothing here ever rounds.
    """

    __slots__ = ("ya", "xb", "la", "lb", "span", "sig")

    def __init__(self, charge: "CentralCharge", span: int):
        la = lcm(*(v.denominator for v in charge.a))
        lb = lcm(*(v.denominator for v in charge.b))
        q = charge.quiver
        n = q.n
        ya = [0] * (span + 1)
        xb = [0] * (span + 1)
        arow = [int(v * la) for v in charge.a]
        brow = [int(v * lb) for v in charge.b]
        for t in range(1, span + 1):
            ya[t] = ya[t - 1] + arow[(t - 1) % n]
            xb[t] = xb[t - 1] + brow[(t - 1) % n]
        self.ya = ya
        self.xb = xb
        self.la = la
        self.lb = lb
        self.span = span
        self.sig = tuple(q.sign(t) for t in range(span + 1))

    def slope(self, i: int, j: int) -> Fraction:
        num = Fraction(self.ya[j] - self.ya[i], self.la)
        den = Fraction(self.xb[j] - self.xb[i], self.lb)
        return num / den


@dataclass(frozen=True)
class CentralCharge:
    """Exact charge bound to a quiver; immutable and hashable."""

    quiver: Quiver
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.quiver.n
        if len(self.a) != n or len(self.b) != n:
            raise InvalidCharge(f"charge vectors must have length {n}")
        if any(v <= 0 for v in self.b):
            raise InvalidCharge("every b_i must be positive")

    @cached_property
    def _ycum(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)]
        for v in self.a:
            out.append(out[-1] + v)
        return tuple(out)

    @cached_property
    def _xcum(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)]
        for v in self.b:
            out.append(out[-1] + v)
        return tuple(out)

    @cached_property
    def _ctx(self) -> IntContext:
        # 5n covers every enumeration window used downstream (the widest
        # is the 4n finiteness scan starting below n).
        span = self.quiver.n if self.quiver.kind is QuiverKind.FINITE_A else 5 * self.quiver.n
        return IntContext(self, span)

    def _cum(self, table, t: int) -> Fraction:
        n = self.quiver.n
        if self.quiver.kind is QuiverKind.FINITE_A:
            if not 0 <= t <= n:
                raise ValueError(f"index {t} outside [0, {n}]")
            return table[t]
        q, r = divmod(t, n)
        return table[r] + q * table[n]

    def x(self, t: int) -> Fraction:
        return self._cum(self._xcum, t)

    def y(self, t: int) -> Fraction:
        return self._cum(self._ycum, t)

    def dual_vertex(self, t: int) -> tuple[Fraction, Fraction]:
        """Chord-view point p_t = (x_t, y_t)."""
        return (self.x(t), self.y(t))

    def wire_value(self, i: int, t: Fraction) -> Fraction:
        """Wire-view value f_i(t) = y_i - t * x_i."""
        return self.y(i) - t * self.x(i)

    def crossing_slope(self, i: int, j: int) -> Fraction:
        """Abscissa of the crossing of wires i and j (= slope of chord p_i p_j)."""
        return (self.y(j) - self.y(i)) / (self.x(j) - self.x(i))

    @property
    def is_standard(self) -> bool:
        return all(v == 1 for v in self.b)

    @property
    def is_normalized(self) -> bool:
        return self._ycum[-1] == 0

    def to_json(self) -> dict:
        def enc(v: Fraction):
            return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

        return {"a": [enc(v) for v in self.a], "b": [enc(v) for v in self.b]}

    def __repr__(self) -> str:
        return f"CentralCharge(a={[str(v) for v in self.a]}, b={[str(v) for v in self.b]})"


def make_charge(q: Quiver, a, b) -> CentralCharge:
    """Build a charge from rationals given as Fraction, int or 'p/q' strings."""
    return CentralCharge(q, tuple(as_fraction(v) for v in a), tuple(as_fraction(v) for v in b))


def charge_from_json(q: Quiver, data: dict) -> CentralCharge:
    return make_charge(q, data["a"], data["b"])


def standard_charge(q: Quiver, a) -> CentralCharge:
    return make_charge(q, a, [1] * q.n)


def slope(Z: CentralCharge, m: StringModule) -> Fraction:
    """Slope of a module: (a . dim)/(b . dim), exact."""
    if m.quiver != Z.quiver:
        raise ValueError("module and charge live on different quivers")
    return Z.crossing_slope(m.i, m.j)


def _total_slope(Z: CentralCharge) -> Fraction:
    return Z._ycum[-1] / Z._xcum[-1]


def normalize(Z: CentralCharge) -> CentralCharge:
    """Shift a by -c*b so the total a-sum vanishes; slopes all drop by c."""
    c = _total_slope(Z)
    if c == 0:
        return Z
    return CentralCharge(Z.quiver, tuple(av - c * bv for av, bv in zip(Z.a, Z.b)), Z.b)


def critical_slope(Z: CentralCharge) -> Fraction:
    """Slope of the null root, (sum a)/(sum b); cyclic quivers only."""
    if not Z.quiver.is_cyclic:
        raise InvalidQuiver("critical slope needs a cyclic quiver (no null root on A_n)")
    return _total_slope(Z)


def critical_heights(Z: CentralCharge) -> dict[int, Fraction]:
    """f_t at the critical slope for t in [1, n]; n-periodic by construction."""
    c = critical_slope(Z)
    return {t: Z.wire_value(t, c) for t in range(1, Z.quiver.n + 1)}


def height_order(Z: CentralCharge) -> tuple[tuple[int, ...], ...]:
    """Indices 1..n grouped by exact critical-line height, lowest group first."""
    heights = critical_heights(Z)
    groups: dict[Fraction, list[int]] = {}
    for t, h in heights.items():
        groups.setdefault(h, []).append(t)
    return tuple(tuple(sorted(groups[h])) for h in sorted(groups))


def essential_pairs(Z: CentralCharge) -> list[tuple[int, int]]:
    """Pairs (k, l) in [1, n]^2 with sign(k)=+, sign(l)=- and k strictly
    below l on the critical line."""
    q = Z.quiver
    if not q.is_cyclic:
        raise InvalidQuiver("essential pairs are defined for cyclic quivers")
    heights = critical_heights(Z)
    return [
        (k, l)
        for k in q.positives()
        for l in q.negatives()
        if heights[k] < heights[l]
    ]


def is_finite(Z: CentralCharge) -> bool:
    """Whether Z has finitely many stable modules.

    Affine: equivalent to the existence of an essential pair.  The
    oriented cycle and A_n have finitely many modules altogether.
    """
    if Z.quiver.kind is QuiverKind.AFFINE_A:
        return bool(essential_pairs(Z))
    return True
