"""Linear involutions over a real quadratic field and their natural codings."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .core import EMPTY, FactorSet, SpecularError, SymmetricAlphabet, Word, is_reduced
from .quadratic import QuadraticNumber

Q = QuadraticNumber


class SingularPointError(SpecularError):
    """The map is undefined at a division point."""


@dataclass(frozen=True)
class PointOnI:
    x: QuadraticNumber
    component: int

    def __str__(self):
        return f"({self.x}, {self.component})"


def _number(raw, D: int) -> QuadraticNumber:
    if isinstance(raw, QuadraticNumber):
        return raw
    if isinstance(raw, (list, tuple)):
        p, q = raw
        return Q(Fraction(str(p)), Fraction(str(q)), D)
    return Q(Fraction(str(raw)))


@dataclass(frozen=True)
class LinearInvolution:
    """``T = σ2∘σ1`` on two copies of ``I = (0, |I|)``.

    The top row of ``perm`` tiles component 0 from left to right and the
    bottom row tiles component 1.  ``σ1`` sends ``I_a`` onto ``I_{a⁻¹}`` by a
    translation, or by a symmetry when ``flips[a]`` is set.  ``σ2`` swaps the
    two components.
    """

    alphabet: SymmetricAlphabet
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    lengths: tuple[QuadraticNumber, ...]
    flips: tuple[bool, ...]
    D: int = 0
    _where: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        A = self.alphabet
        rows = list(self.top) + list(self.bottom)
        if sorted(rows) != list(range(A.size)):
            raise ValueError("the two rows must use every letter exactly once")
        if not self.top or not self.bottom:
            raise ValueError("both rows must be nonempty")
        for a in range(A.size):
            b = A.inv[a]
            if self.lengths[a] <= 0:
                raise ValueError(f"length of {A.names[a]!r} must be positive")
            if self.lengths[a] != self.lengths[b]:
                raise ValueError(f"{A.names[a]!r} and its inverse need equal lengths")
            if self.flips[a] != self.flips[b]:
                raise ValueError(f"{A.names[a]!r} and its inverse need the same flip flag")
            if b == a and not self.flips[a]:
                raise ValueError(f"self-inverse letter {A.names[a]!r} must act by a symmetry")
        top_len = sum((self.lengths[a] for a in self.top), Q(0))
        bot_len = sum((self.lengths[a] for a in self.bottom), Q(0))
        if top_len != bot_len:
            raise ValueError(f"row lengths differ: {top_len} vs {bot_len}")
        where: list = [None] * A.size
        for comp, row in enumerate((self.top, self.bottom)):
            pos = Q(0)
            for a in row:
                where[a] = (comp, pos, pos + self.lengths[a])
                pos = pos + self.lengths[a]
        object.__setattr__(self, "_where", tuple(where))

    # construction

    @classmethod
    def from_json(cls, data: Mapping) -> "LinearInvolution":
        D = int(data.get("D", 0))
        top, bottom = list(data["top"]), list(data["bottom"])
        names = sorted(top + bottom)
        A = SymmetricAlphabet.from_pairs(names, data.get("inv"))
        lengths: list = [None] * A.size
        for name, raw in data["lengths"].items():
            a = A.index(name)
            lengths[a] = lengths[A.inv[a]] = _number(raw, D)
        if any(x is None for x in lengths):
            missing = [A.names[a] for a, x in enumerate(lengths) if x is None]
            raise ValueError(f"no length given for {missing}")
        flips = [False] * A.size
        for name, flag in data.get("flips", {}).items():
            a = A.index(name)
            flips[a] = flips[A.inv[a]] = bool(flag)
        return cls(
            A,
            tuple(A.index(n) for n in top),
            tuple(A.index(n) for n in bottom),
            tuple(lengths),
            tuple(flips),
            D,
        )

    def to_json(self) -> dict:
        A = self.alphabet
        pairs = {A.names[a]: A.names[b] for a, b in enumerate(A.inv) if a < b}
        return {
            "D": self.D,
            "top": [A.names[a] for a in self.top],
            "bottom": [A.names[a] for a in self.bottom],
            "lengths": {A.names[a]: self.lengths[a].to_json() for a in range(A.size)},
            "flips": {A.names[a]: self.flips[a] for a in range(A.size)},
            "inv": pairs,
        }

    # geometry

    @property
    def length(self) -> QuadraticNumber:
        return sum((self.lengths[a] for a in self.top), Q(0))

    def interval(self, a: int) -> tuple[int, QuadraticNumber, QuadraticNumber]:
        """``(component, start, end)`` of ``I_a``."""
        return self._where[a]

    def division_points(self) -> list[PointOnI]:
        out = []
        for comp, row in enumerate((self.top, self.bottom)):
            for a in row[:-1]:
                out.append(PointOnI(self._where[a][2], comp))
        return out

    def is_division_point(self, z: PointOnI) -> bool:
        row = self.top if z.component == 0 else self.bottom
        return any(self._where[a][2] == z.x for a in row[:-1])

    def letter_at(self, z: PointOnI) -> int:
        row = self.top if z.component == 0 else self.bottom
        for a in row:
            _, lo, hi = self._where[a]
            if lo < z.x < hi:
                return a
        if 0 < z.x < self.length:
            raise SingularPointError(f"singular point {z}")
        raise ValueError(f"point {z} lies outside I")

    def sigma1(self, z: PointOnI) -> PointOnI:
        a = self.letter_at(z)
        _, lo, _ = self._where[a]
        b = self.alphabet.inv[a]
        comp, lo_b, hi_b = self._where[b]
        if self.flips[a]:
            return PointOnI(hi_b - (z.x - lo), comp)
        return PointOnI(z.x - lo + lo_b, comp)

    def apply_T(self, z: PointOnI) -> PointOnI:
        y = self.sigma1(z)
        return PointOnI(y.x, 1 - y.component)

    def apply_T_inverse(self, z: PointOnI) -> PointOnI:
        return self.sigma1(PointOnI(z.x, 1 - z.component))

    def orbit_coding(self, z: PointOnI, n: int) -> Word:
        """First ``n`` letters of the natural coding of ``z``."""
        out = []
        for _ in range(n):
            out.append(self.letter_at(z))
            z = self.apply_T(z)
        return tuple(out)

    def image_interval(self, a: int, lo: QuadraticNumber, hi: QuadraticNumber):
        """Image under ``T`` of the open subinterval ``(lo, hi)`` of ``I_a``."""
        _, s, _ = self._where[a]
        b = self.alphabet.inv[a]
        comp, s_b, e_b = self._where[b]
        if self.flips[a]:
            return 1 - comp, e_b - (hi - s), e_b - (lo - s)
        return 1 - comp, lo - s + s_b, hi - s + s_b


def find_connection(T: LinearInvolution, N: int) -> tuple[PointOnI, PointOnI, int] | None:
    """Search for ``(x, y, n)`` with ``Tⁿx = y``, x singular for ``T⁻¹``, y singular for ``T``.

    Orbits are advanced in lockstep so the answer has the smallest ``n`` and,
    among those, the leftmost starting point.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    starts = sorted(
        (PointOnI(d.x, 1 - d.component) for d in T.division_points()),
        key=lambda p: (p.x, p.component),
    )
    current = list(starts)
    for n in range(N + 1):
        for x, z in zip(starts, current):
            if T.is_division_point(z):
                return x, z, n
        current = [T.apply_T(z) for z in current]
    return None


def natural_coding(T: LinearInvolution, L: int, connection_horizon: int | None = 200) -> FactorSet:
    """Words of length ``<= L`` with a nonempty cylinder.

    For each word ``w`` the set ``T^{|w|-1}(I_w)`` is an open interval inside
    the interval of its last letter; extending by ``b`` intersects its image
    with ``I_b``.
    """
    if connection_horizon is not None:
        hit = find_connection(T, connection_horizon)
        if hit is not None:
            x, y, n = hit
            warnings.warn(f"involution has a connection {x} -> {y} in {n} steps; coding may not be minimal")
    A = T.alphabet
    words: set[Word] = {EMPTY}
    layer: dict[Word, tuple] = {}
    for a in range(A.size):
        _, lo, hi = T.interval(a)
        layer[(a,)] = (lo, hi)
    for n in range(1, L + 1):
        words.update(layer)
        if n == L:
            break
        nxt: dict[Word, tuple] = {}
        for w, (lo, hi) in layer.items():
            comp, ilo, ihi = T.image_interval(w[-1], lo, hi)
            row = T.top if comp == 0 else T.bottom
            for b in row:
                _, blo, bhi = T.interval(b)
                nlo, nhi = max(ilo, blo), min(ihi, bhi)
                if nlo < nhi:
                    v = w + (b,)
                    if not is_reduced(v, A):
                        raise AssertionError(f"natural coding produced unreduced word {A.format(v)}")
                    nxt[v] = (nlo, nhi)
        layer = nxt
    return FactorSet.from_words(A, words, L)
