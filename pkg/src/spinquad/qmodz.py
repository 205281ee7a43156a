"""Exact residues in Q/Z."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class QmodZ:
    """A rational number modulo 1, kept as ``p/q`` with ``0 <= p < q`` coprime."""

    __slots__ = ("_f",)

    def __init__(self, value=0, denominator=None):
        if isinstance(value, QmodZ) and denominator is None:
            self._f = value._f
            return
        f = Fraction(value) if denominator is None else Fraction(value, denominator)
        self._f = f - (f.numerator // f.denominator)

    @classmethod
    def parse(cls, text: str) -> "QmodZ":
        return cls(Fraction(text.strip()))

    @property
    def numerator(self) -> int:
        return self._f.numerator

    @property
    def denominator(self) -> int:
        return self._f.denominator

    def as_fraction(self) -> Fraction:
        """Representative in [0, 1)."""
        return self._f

    def _coerce(self, other):
        if isinstance(other, QmodZ):
            return other._f
        if isinstance(other, (int, Rational)):
            return Fraction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else QmodZ(self._f + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else QmodZ(self._f - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else QmodZ(o - self._f)

    def __neg__(self):
        return QmodZ(-self._f)

    def __mul__(self, k):
        # only integer scaling is well defined on Q/Z
        if isinstance(k, int):
            return QmodZ(self._f * k)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self._f - o).denominator == 1

    def __hash__(self):
        return hash(("QmodZ", self._f))

    def __lt__(self, other):
        return self._f < QmodZ(other)._f

    def __bool__(self):
        return self._f != 0

    def __float__(self):
        return float(self._f)

    def __str__(self):
        return str(self._f)

    def __repr__(self):
        return f"QmodZ({self._f})"
